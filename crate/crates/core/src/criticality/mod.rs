//! Certificates that `γ(G) < θ(G)` and structural obstructions for the
//! smallest planar graphs with `γ = γ^∞ < θ`.

mod certificates;
mod obstruction;

pub use certificates::{
    dominated_clique_witness, extend_to_min_dominating, local_pattern_scan, private_cover, GammaBelowTheta,
    PatternScan, PrivateCover, WitnessSearch, PRIVATE_COVER_MAX_SIZE,
};
pub use obstruction::{
    cutvertex_composition, is_maximum_demand, obstruction_report, obstruction_report_with, EdgeCondition,
    EdgeFailure, ObstructionReport, PrivateCoverViolation, ReportOptions, ResidualFailure,
};

/// Default node budget for [`dominated_clique_witness`].
pub const DEFAULT_WITNESS_BUDGET: usize = 1_000_000;
