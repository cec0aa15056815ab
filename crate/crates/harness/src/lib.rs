//! Batch classification of graph6 corpora: JSONL records of the domination,
//! independence, eternal domination and clique cover numbers, prefiltered
//! counterexample hunts, and per-graph obstruction reports.

pub mod checkpoint;
pub mod filter;
pub mod hunt;
mod pool;
pub mod record;
pub mod runner;
pub mod tasks;

pub use checkpoint::Checkpoint;
pub use filter::Filter;
pub use hunt::{hunt_graph, screen, HuntMode, Prefilter, Screen};
pub use record::{classify, Certificates, ClassificationRecord, Poison, Timings, SCHEMA_VERSION};
pub use runner::{collect, run, run_jsonl, run_jsonl_resumable, Processed, RunError, RunOptions, Summary, Task};
pub use tasks::{hunt, scan, ClassifyTask, HuntResult, HuntTask, ObstructTask, ObstructionRecord};
