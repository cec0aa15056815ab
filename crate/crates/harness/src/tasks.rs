//! The per-graph work behind `classify`, `scan`, `hunt` and `obstruct`.

use std::io::BufRead;

use gammatheta_core::criticality::{obstruction_report_with, ObstructionReport, ReportOptions};
use gammatheta_core::{encode_graph6, Graph};
use serde::{Deserialize, Serialize};

use crate::filter::{passes, Filter};
use crate::hunt::{hunt_graph, is_hit, HuntMode, Screen};
use crate::record::{classify, ClassificationRecord, Poison, SCHEMA_VERSION};
use crate::runner::{collect, Processed, RunError, RunOptions, Summary, Task};

/// Classifies every graph passing `filters`.
#[derive(Clone, Debug, Default)]
pub struct ClassifyTask {
    pub filters: Vec<Filter>,
    pub certificates: bool,
}

impl Task for ClassifyTask {
    type Record = ClassificationRecord;

    fn describe(&self) -> String {
        let filters: Vec<String> = self.filters.iter().map(Filter::to_string).collect();
        format!("scan filters=[{}] certificates={}", filters.join(","), self.certificates)
    }

    fn process(&self, g: &Graph) -> Processed<ClassificationRecord> {
        if !passes(&self.filters, g) {
            return Processed {
                record: None,
                counts: vec!["filtered_out"],
            };
        }
        let r = classify(g, self.certificates);
        let mut counts = vec!["classified"];
        match r.poisoned {
            Some(Poison::ChainViolation) => counts.push("chain_violations"),
            Some(Poison::SolverFailure { .. }) => counts.push("solver_failures"),
            None => {}
        }
        if !r.maximum_demand {
            counts.push("not_maximum_demand");
        }
        if !r.gamma_theta_ok {
            counts.push("gamma_theta_failures");
        }
        Processed {
            record: Some(r),
            counts,
        }
    }
}

#[derive(Clone, Copy, Debug)]
pub struct HuntTask {
    pub mode: HuntMode,
}

impl Task for HuntTask {
    type Record = ClassificationRecord;

    fn describe(&self) -> String {
        format!("hunt mode={}", self.mode)
    }

    fn process(&self, g: &Graph) -> Processed<ClassificationRecord> {
        let mut counts = vec!["scanned"];
        let record = match hunt_graph(g, self.mode) {
            Ok((Screen::Skipped(p), _)) => {
                counts.extend(["skipped_by_prefilter", p.counter()]);
                None
            }
            Ok((Screen::Cleared, _)) => {
                counts.push("solved");
                None
            }
            Ok((Screen::Hit, record)) => {
                let record = record.expect("hits carry a record");
                counts.extend(["solved", "counterexamples"]);
                if !is_hit(&record, self.mode) || record.poisoned.is_some() {
                    counts.push("reverify_mismatches");
                }
                Some(record)
            }
            Err(e) => {
                counts.extend(["solver_failures", "counterexamples"]);
                let mut record = classify(g, false);
                record.poisoned = Some(Poison::SolverFailure { message: e.to_string() });
                Some(record)
            }
        };
        Processed { record, counts }
    }
}

/// The outcome of a hunt. Counterexamples are reclassified from scratch.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct HuntResult {
    pub mode: HuntMode,
    pub counterexamples: Vec<ClassificationRecord>,
    pub scanned: u64,
    pub skipped_by_prefilter: u64,
    /// Input lines consumed; pass back as a resume cursor.
    pub checkpoint: u64,
    pub summary: Summary,
}

impl HuntResult {
    pub fn from_summary(mode: HuntMode, counterexamples: Vec<ClassificationRecord>, summary: Summary) -> Self {
        HuntResult {
            mode,
            counterexamples,
            scanned: summary.count("scanned"),
            skipped_by_prefilter: summary.count("skipped_by_prefilter"),
            checkpoint: summary.lines,
            summary,
        }
    }
}

/// Hunts in memory over a graph6 stream.
pub fn hunt(input: impl BufRead, mode: HuntMode, opts: &RunOptions) -> Result<HuntResult, RunError> {
    let (counterexamples, summary) = collect(&HuntTask { mode }, input, opts)?;
    Ok(HuntResult::from_summary(mode, counterexamples, summary))
}

/// Scans in memory over a graph6 stream.
pub fn scan(input: impl BufRead, filters: &[Filter], opts: &RunOptions) -> Result<(Vec<ClassificationRecord>, Summary), RunError> {
    let task = ClassifyTask {
        filters: filters.to_vec(),
        certificates: false,
    };
    collect(&task, input, opts)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ObstructionRecord {
    pub schema_version: u32,
    pub graph6: String,
    pub obstructions: usize,
    pub report: ObstructionReport,
}

#[derive(Clone, Copy, Debug, Default)]
pub struct ObstructTask {
    pub options: ReportOptions,
}

impl Task for ObstructTask {
    type Record = ObstructionRecord;

    fn describe(&self) -> String {
        format!(
            "obstruct full_depth={} mcp_cap={}",
            self.options.full_depth, self.options.mcp_cap
        )
    }

    fn process(&self, g: &Graph) -> Processed<ObstructionRecord> {
        let report = obstruction_report_with(g, self.options);
        let obstructions = report.obstruction_count();
        let counts = vec![if obstructions == 0 { "unobstructed" } else { "obstructed" }];
        Processed {
            record: Some(ObstructionRecord {
                schema_version: SCHEMA_VERSION,
                graph6: encode_graph6(g),
                obstructions,
                report,
            }),
            counts,
        }
    }
}
