//! Counterexample hunting with cheap prefilters ahead of the eternal
//! domination solver.
//!
//! Both modes rely on `γ <= α <= γ^∞ <= θ`:
//! - a planar graph can only have `γ = γ^∞ < θ` when `γ < θ` and `γ = α`;
//! - `γ^∞ < θ` is impossible when `α = θ`.
//!
//! Surviving graphs are decided by a single safe-family computation, and
//! every hit is reclassified from scratch before it is reported.

use std::fmt;
use std::str::FromStr;

use gammatheta_core::eternal::safe_family;
use gammatheta_core::invariants::{clique_cover_number, domination_number, independence_number};
use gammatheta_core::{is_planar, GameError, Graph};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::record::{classify, ClassificationRecord};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum HuntMode {
    /// Planar graphs with `γ = γ^∞ < θ`.
    PlanarGammaTheta,
    /// Graphs with `γ^∞ < θ`.
    MaxDemand,
}

#[derive(Debug, Error, PartialEq, Eq)]
#[error("unknown hunt mode {0:?}; expected planar-gamma-theta or max-demand")]
pub struct HuntModeParseError(String);

impl FromStr for HuntMode {
    type Err = HuntModeParseError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "planar-gamma-theta" => Ok(HuntMode::PlanarGammaTheta),
            "max-demand" => Ok(HuntMode::MaxDemand),
            _ => Err(HuntModeParseError(s.to_string())),
        }
    }
}

impl fmt::Display for HuntMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            HuntMode::PlanarGammaTheta => "planar-gamma-theta",
            HuntMode::MaxDemand => "max-demand",
        })
    }
}

/// Why a graph was discarded without solving the eternal game.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Prefilter {
    NonPlanar,
    GammaEqualsTheta,
    GammaBelowAlpha,
    AlphaEqualsTheta,
}

impl Prefilter {
    pub fn counter(self) -> &'static str {
        match self {
            Prefilter::NonPlanar => "skipped_nonplanar",
            Prefilter::GammaEqualsTheta => "skipped_gamma_eq_theta",
            Prefilter::GammaBelowAlpha => "skipped_gamma_lt_alpha",
            Prefilter::AlphaEqualsTheta => "skipped_alpha_eq_theta",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Screen {
    Skipped(Prefilter),
    /// The eternal game was solved and the graph is not a hit.
    Cleared,
    Hit,
}

/// Decides whether `g` is a hit for `mode`, using the prefilters.
pub fn screen(g: &Graph, mode: HuntMode) -> Result<Screen, GameError> {
    match mode {
        HuntMode::PlanarGammaTheta => {
            if !is_planar(g) {
                return Ok(Screen::Skipped(Prefilter::NonPlanar));
            }
            let (gamma, _) = domination_number(g);
            let (theta, _) = clique_cover_number(g);
            if gamma == theta {
                return Ok(Screen::Skipped(Prefilter::GammaEqualsTheta));
            }
            let (alpha, _) = independence_number(g);
            if gamma < alpha {
                return Ok(Screen::Skipped(Prefilter::GammaBelowAlpha));
            }
            // gamma_inf >= gamma, so gamma_inf = gamma iff gamma guards suffice.
            let hit = !safe_family(g, gamma)?.is_empty();
            Ok(if hit { Screen::Hit } else { Screen::Cleared })
        }
        HuntMode::MaxDemand => {
            let (theta, _) = clique_cover_number(g);
            let (alpha, _) = independence_number(g);
            if alpha == theta {
                return Ok(Screen::Skipped(Prefilter::AlphaEqualsTheta));
            }
            // Adding a guard never hurts, so gamma_inf < theta iff theta - 1
            // guards suffice.
            let hit = !safe_family(g, theta - 1)?.is_empty();
            Ok(if hit { Screen::Hit } else { Screen::Cleared })
        }
    }
}

/// Whether a full classification record is a hit for `mode`.
pub fn is_hit(record: &ClassificationRecord, mode: HuntMode) -> bool {
    match mode {
        HuntMode::PlanarGammaTheta => record.planar && !record.gamma_theta_ok,
        HuntMode::MaxDemand => !record.maximum_demand,
    }
}

/// The outcome of hunting one graph: the screen result and, for hits, the
/// record recomputed from scratch with certificates.
pub fn hunt_graph(g: &Graph, mode: HuntMode) -> Result<(Screen, Option<ClassificationRecord>), GameError> {
    let s = screen(g, mode)?;
    let record = (s == Screen::Hit).then(|| classify(g, true));
    Ok((s, record))
}
