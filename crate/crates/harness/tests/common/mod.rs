#![allow(dead_code)]

use std::path::PathBuf;

use gammatheta_core::{parse_graph6, Graph};

pub fn corpus_path(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../corpora").join(name)
}

pub fn corpus_text(name: &str) -> String {
    std::fs::read_to_string(corpus_path(name)).expect("corpus file")
}

pub fn corpus(name: &str) -> Vec<Graph> {
    corpus_text(name).lines().map(|l| parse_graph6(l).expect("valid record")).collect()
}

/// Drops the `timings` field from every JSONL line.
pub fn without_timings(jsonl: &str) -> String {
    jsonl
        .lines()
        .map(|l| {
            let mut v: serde_json::Value = serde_json::from_str(l).expect("json line");
            v.as_object_mut().expect("object").remove("timings");
            v.to_string() + "\n"
        })
        .collect()
}
