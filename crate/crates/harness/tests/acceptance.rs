//! End-to-end acceptance checks. Prints one PASS/FAIL/SKIP line per
//! criterion and exits nonzero if any criterion fails.
//!
//! The 10-vertex max-demand hunt streams its corpus from nauty's `geng`; it
//! is skipped when `geng` is not on PATH.

mod common;

use std::collections::HashSet;
use std::io::{BufReader, Cursor};
use std::process::{Command, Stdio};
use std::time::Instant;

use common::{corpus, corpus_text};
use gammatheta_core::criticality::{dominated_clique_witness, local_pattern_scan, WitnessSearch, DEFAULT_WITNESS_BUDGET};
use gammatheta_core::eternal::{evaluate_strategy, find_winning_attack, safe_family, Verdict, DEFAULT_ATTACK_BUDGET};
use gammatheta_core::invariants::{
    clique_cover_number, domination_number, independence_number, is_dominating, DEFAULT_MCP_CAP,
};
use gammatheta_core::{encode_graph6, parse_graph6, Graph, VertexSet};
use gammatheta_harness::{hunt, scan, ClassificationRecord, HuntMode, RunOptions};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

type Criterion<'a> = (&'static str, Box<dyn Fn() -> Outcome + 'a>);

enum Outcome {
    Pass(String),
    Fail(String),
    Skip(String),
}

fn verdict(ok: bool, detail: String) -> Outcome {
    if ok {
        Outcome::Pass(detail)
    } else {
        Outcome::Fail(detail)
    }
}

fn subsets(n: usize) -> impl Iterator<Item = VertexSet> {
    (0..1u64 << n).map(VertexSet::from_bits)
}

/// Greatest fixpoint by repeated full sweeps, independent of the
/// predecessor-driven solver under test.
fn sweep_safe_family(g: &Graph, k: usize) -> Vec<VertexSet> {
    let mut alive: Vec<VertexSet> = subsets(g.n()).filter(|&d| d.len() == k && is_dominating(g, d)).collect();
    loop {
        let before = alive.len();
        let snapshot: HashSet<VertexSet> = alive.iter().copied().collect();
        alive.retain(|&d| {
            (0..g.n()).filter(|&v| !d.contains(v)).all(|v| {
                (0..g.n())
                    .filter(|&u| d.contains(u) && g.has_edge(u, v))
                    .any(|u| snapshot.contains(&d.without(u).with(v)))
            })
        });
        if alive.len() == before {
            return alive;
        }
    }
}

fn connected_n8_records() -> Vec<ClassificationRecord> {
    let input = corpus_text("connected_n1-8.g6");
    scan(Cursor::new(input), &[], &RunOptions::default()).expect("scan").0
}

fn chain(records: &[ClassificationRecord]) -> Outcome {
    let violations = records.iter().filter(|r| !r.chain_holds() || r.poisoned.is_some()).count();
    let nontrivial = records.iter().filter(|r| r.n >= 2).count();
    verdict(
        violations == 0 && !records.is_empty(),
        format!(
            "{} corpus graphs ({nontrivial} on 2+ vertices plus K1), {violations} violations of gamma <= alpha <= gamma_inf <= theta",
            records.len()
        ),
    )
}

fn theta_three(records: &[ClassificationRecord]) -> Outcome {
    let slice: Vec<_> = records.iter().filter(|r| r.theta <= 3).collect();
    let bad = slice.iter().filter(|r| !r.maximum_demand).count();
    verdict(
        bad == 0 && !slice.is_empty(),
        format!("{} graphs with theta <= 3, {bad} not maximum-demand", slice.len()),
    )
}

fn all_max_demand(records: &[ClassificationRecord]) -> Outcome {
    let bad = records.iter().filter(|r| !r.maximum_demand).count();
    verdict(bad == 0, format!("{} graphs, {bad} not maximum-demand", records.len()))
}

fn planar_hunt() -> Outcome {
    let input = corpus_text("planar_n1-9.g6");
    let result = hunt(Cursor::new(input), HuntMode::PlanarGammaTheta, &RunOptions::default()).expect("hunt");
    verdict(
        result.counterexamples.is_empty() && result.scanned > 0,
        format!(
            "{} planar graphs scanned, {} prefiltered, {} counterexamples",
            result.scanned,
            result.skipped_by_prefilter,
            result.counterexamples.len()
        ),
    )
}

fn extremal_ten() -> Outcome {
    let child = Command::new("geng").args(["-q", "10"]).stdout(Stdio::piped()).stderr(Stdio::null()).spawn();
    let Ok(mut child) = child else {
        return Outcome::Skip("geng not on PATH".into());
    };
    let stdout = child.stdout.take().expect("piped stdout");
    let result = hunt(BufReader::new(stdout), HuntMode::MaxDemand, &RunOptions::default()).expect("hunt");
    let status = child.wait().expect("geng exit status");
    let found: Vec<String> = result
        .counterexamples
        .iter()
        .map(|r| format!("{} (gamma_inf {}, theta {})", r.graph6, r.gamma_inf, r.theta))
        .collect();
    let ok = status.success()
        && result.counterexamples.len() == 2
        && result
            .counterexamples
            .iter()
            .all(|r| r.gamma_inf == 3 && r.theta == 4 && r.poisoned.is_none());
    verdict(
        ok,
        format!(
            "{} graphs, {} skipped by alpha = theta, found {}: {}",
            result.scanned,
            result.skipped_by_prefilter,
            found.len(),
            found.join(", ")
        ),
    )
}

fn oracle_equivalence(graphs: &[Graph]) -> Outcome {
    let mut families = 0;
    let mut mismatches = 0;
    for g in graphs {
        let (alpha, _) = independence_number(g);
        let (theta, _) = clique_cover_number(g);
        for k in alpha..=theta {
            families += 1;
            if safe_family(g, k).expect("small").configs() != sweep_safe_family(g, k).as_slice() {
                mismatches += 1;
            }
        }
    }
    verdict(
        mismatches == 0,
        format!("{} graphs, {families} (graph, k) families, {mismatches} mismatches", graphs.len()),
    )
}

fn certificate_soundness() -> Outcome {
    let mut fired = 0;
    let mut unsound = 0;
    let mut incomplete = 0;
    for g in corpus("graphs_n1-7.g6") {
        let gamma_below_theta = domination_number(&g).0 < clique_cover_number(&g).0;
        let mut certs = local_pattern_scan(&g).certificates;
        match dominated_clique_witness(&g, DEFAULT_MCP_CAP, DEFAULT_WITNESS_BUDGET) {
            WitnessSearch::Found(c) => certs.push(c),
            WitnessSearch::NotFound => {}
            WitnessSearch::Incomplete => incomplete += 1,
        }
        fired += certs.len();
        unsound += certs.iter().filter(|c| !c.check(&g) || !gamma_below_theta).count();
    }
    verdict(
        unsound == 0 && incomplete == 0 && fired > 0,
        format!("1252 graphs, {fired} certificates, {unsound} unsound, {incomplete} searches over budget"),
    )
}

fn duality(graphs: &[Graph]) -> Outcome {
    const FUZZ_STEPS: usize = 1000;
    let mut rng = StdRng::seed_from_u64(0x9e37_79b9);
    let (mut attacked, mut failed_attacks, mut fuzzed, mut defeats) = (0, 0, 0, 0);
    for g in graphs {
        for k in 1..=g.n() {
            let family = safe_family(g, k).expect("small");
            for d in subsets(g.n()).filter(|&d| d.len() == k && is_dominating(g, d)) {
                if family.contains(d) {
                    fuzzed += 1;
                    let mut config = d;
                    for _ in 0..FUZZ_STEPS {
                        let v = rng.gen_range(0..g.n());
                        match family.defender_move(config, v) {
                            Ok((_, next)) if family.contains(next) && next.contains(v) => config = next,
                            _ => {
                                defeats += 1;
                                break;
                            }
                        }
                    }
                } else {
                    attacked += 1;
                    let won = find_winning_attack(&family, d, DEFAULT_ATTACK_BUDGET)
                        .ok()
                        .flatten()
                        .and_then(|w| evaluate_strategy(g, d, w.attacks()).ok())
                        .is_some_and(|o| o.verdict == Verdict::Winning);
                    failed_attacks += usize::from(!won);
                }
            }
        }
    }
    verdict(
        failed_attacks == 0 && defeats == 0,
        format!(
            "{attacked} non-eternal sets ({failed_attacks} without a verified winning attack), \
             {fuzzed} eternal sets x {FUZZ_STEPS} random attacks ({defeats} defeats)"
        ),
    )
}

fn codec() -> Outcome {
    let text = corpus_text("codec_n9_100k.g6");
    let mut records = 0;
    let mut mismatched = 0;
    for line in text.lines() {
        records += 1;
        if parse_graph6(line).map(|g| encode_graph6(&g)).ok().as_deref() != Some(line) {
            mismatched += 1;
        }
    }
    verdict(
        records == 100_000 && mismatched == 0,
        format!("{records} records, {mismatched} not reproduced byte-for-byte"),
    )
}

fn main() {
    let start = Instant::now();
    let records = connected_n8_records();
    let small = corpus("graphs_n1-6.g6");
    let criteria: Vec<Criterion> = vec![
        ("chain-connected-n8", Box::new(|| chain(&records))),
        ("theta-at-most-3-n8", Box::new(|| theta_three(&records))),
        ("max-demand-n8", Box::new(|| all_max_demand(&records))),
        ("planar-hunt-n9", Box::new(planar_hunt)),
        ("max-demand-hunt-n10", Box::new(extremal_ten)),
        ("oracle-equivalence-n6", Box::new(|| oracle_equivalence(&small))),
        ("certificate-soundness-n7", Box::new(certificate_soundness)),
        ("attack-defence-duality-n6", Box::new(|| duality(&small))),
        ("graph6-round-trip-100k", Box::new(codec)),
    ];
    let mut failures = 0;
    for (name, check) in criteria {
        let t = Instant::now();
        let (tag, detail) = match check() {
            Outcome::Pass(d) => ("PASS", d),
            Outcome::Fail(d) => {
                failures += 1;
                ("FAIL", d)
            }
            Outcome::Skip(d) => ("SKIP", d),
        };
        println!("{tag} {name}: {detail} [{:.1}s]", t.elapsed().as_secs_f64());
    }
    println!("acceptance: {failures} failing criteria in {:.1}s", start.elapsed().as_secs_f64());
    if failures > 0 {
        std::process::exit(1);
    }
}
