use std::panic::{self, AssertUnwindSafe};
use std::time::Instant;

use gammatheta_core::eternal::eternal_domination_number_from;
use gammatheta_core::invariants::{clique_cover_number, domination_number, independence_number};
use gammatheta_core::{encode_graph6, is_planar, Graph, VertexSet};
use serde::{Deserialize, Serialize};

/// Bumped whenever a field of [`ClassificationRecord`] changes meaning.
pub const SCHEMA_VERSION: u32 = 1;

/// Wall-clock milliseconds per invariant. Excluded from determinism checks.
#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
pub struct Timings {
    pub gamma_ms: f64,
    pub alpha_ms: f64,
    pub gamma_inf_ms: f64,
    pub theta_ms: f64,
    pub planar_ms: f64,
}

/// Witnesses for the computed values, as 0-based vertex lists.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Certificates {
    /// A dominating set of size `gamma`.
    pub dominating_set: Vec<usize>,
    /// An independent set of size `alpha`.
    pub independent_set: Vec<usize>,
    /// A partition into `theta` cliques.
    pub clique_partition: Vec<Vec<usize>>,
    /// A configuration of `gamma_inf` guards from the safe family.
    pub eternal_config: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Poison {
    /// `gamma <= alpha <= gamma_inf <= theta` failed.
    ChainViolation,
    /// A solver panicked; the invariant fields are zero.
    SolverFailure { message: String },
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ClassificationRecord {
    pub schema_version: u32,
    pub graph6: String,
    pub n: usize,
    pub m: usize,
    pub gamma: usize,
    pub alpha: usize,
    pub gamma_inf: usize,
    pub theta: usize,
    pub planar: bool,
    /// `gamma_inf == theta`.
    pub maximum_demand: bool,
    /// `gamma == gamma_inf` implies `gamma_inf == theta`.
    pub gamma_theta_ok: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub certificates: Option<Certificates>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub poisoned: Option<Poison>,
    pub timings: Timings,
}

impl ClassificationRecord {
    /// Whether the record disagrees with the Gamma-Theta implication or is
    /// unusable.
    pub fn is_counterexample(&self) -> bool {
        !self.gamma_theta_ok || self.poisoned.is_some()
    }

    pub fn chain_holds(&self) -> bool {
        self.gamma <= self.alpha && self.alpha <= self.gamma_inf && self.gamma_inf <= self.theta
    }
}

fn timed<T>(slot: &mut f64, f: impl FnOnce() -> T) -> T {
    let start = Instant::now();
    let out = f();
    *slot = start.elapsed().as_secs_f64() * 1e3;
    out
}

fn list(s: VertexSet) -> Vec<usize> {
    s.iter().collect()
}

/// Computes every invariant of `g`. Never panics: solver failures produce a
/// poisoned record.
pub fn classify(g: &Graph, with_certificates: bool) -> ClassificationRecord {
    let graph6 = encode_graph6(g);
    let mut timings = Timings::default();
    let computed = panic::catch_unwind(AssertUnwindSafe(|| {
        let (gamma, dom) = timed(&mut timings.gamma_ms, || domination_number(g));
        let (alpha, ind) = timed(&mut timings.alpha_ms, || independence_number(g));
        let (theta, partition) = timed(&mut timings.theta_ms, || clique_cover_number(g));
        // Starting at gamma rather than alpha keeps alpha <= gamma_inf a
        // checked fact instead of an assumption.
        let (gamma_inf, family) = timed(&mut timings.gamma_inf_ms, || eternal_domination_number_from(g, gamma));
        let planar = timed(&mut timings.planar_ms, || is_planar(g));
        let certificates = with_certificates.then(|| Certificates {
            dominating_set: list(dom),
            independent_set: list(ind),
            clique_partition: partition.cliques().iter().map(|&c| list(c)).collect(),
            eternal_config: family.configs().first().map(|&c| list(c)).unwrap_or_default(),
        });
        (gamma, alpha, gamma_inf, theta, planar, certificates)
    }));

    let (values, certificates, mut poisoned) = match computed {
        Ok((gamma, alpha, gamma_inf, theta, planar, certs)) => ((gamma, alpha, gamma_inf, theta, planar), certs, None),
        Err(payload) => {
            let message = payload
                .downcast_ref::<&str>()
                .map(|s| s.to_string())
                .or_else(|| payload.downcast_ref::<String>().cloned())
                .unwrap_or_else(|| "unknown panic".into());
            ((0, 0, 0, 0, false), None, Some(Poison::SolverFailure { message }))
        }
    };
    let (gamma, alpha, gamma_inf, theta, planar) = values;
    let mut record = ClassificationRecord {
        schema_version: SCHEMA_VERSION,
        graph6,
        n: g.n(),
        m: g.edge_count(),
        gamma,
        alpha,
        gamma_inf,
        theta,
        planar,
        maximum_demand: gamma_inf == theta,
        gamma_theta_ok: gamma != gamma_inf || gamma_inf == theta,
        certificates,
        poisoned: None,
        timings,
    };
    if poisoned.is_none() && !record.chain_holds() {
        poisoned = Some(Poison::ChainViolation);
    }
    record.poisoned = poisoned;
    record
}
