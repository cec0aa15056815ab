use std::fmt;
use std::str::FromStr;

use gammatheta_core::invariants::clique_cover_number;
use gammatheta_core::{is_planar, Graph};
use serde::{Deserialize, Serialize};
use thiserror::Error;

/// A predicate a graph must satisfy to be classified by a scan.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(into = "String", try_from = "String")]
pub enum Filter {
    Planar,
    ThetaAtMost(usize),
    OrderAtMost(usize),
}

#[derive(Debug, Error, PartialEq, Eq)]
#[error("unknown filter {0:?}; expected planar, theta<=K or n<=K")]
pub struct FilterParseError(String);

impl FromStr for Filter {
    type Err = FilterParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        if s == "planar" {
            return Ok(Filter::Planar);
        }
        let bound = |prefix: &str| s.strip_prefix(prefix).and_then(|k| k.trim().parse::<usize>().ok());
        if let Some(k) = bound("theta<=") {
            Ok(Filter::ThetaAtMost(k))
        } else if let Some(k) = bound("n<=") {
            Ok(Filter::OrderAtMost(k))
        } else {
            Err(FilterParseError(s.to_string()))
        }
    }
}

impl fmt::Display for Filter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Filter::Planar => write!(f, "planar"),
            Filter::ThetaAtMost(k) => write!(f, "theta<={k}"),
            Filter::OrderAtMost(k) => write!(f, "n<={k}"),
        }
    }
}

impl From<Filter> for String {
    fn from(f: Filter) -> String {
        f.to_string()
    }
}

impl TryFrom<String> for Filter {
    type Error = FilterParseError;
    fn try_from(s: String) -> Result<Self, Self::Error> {
        s.parse()
    }
}

/// Whether `g` passes every filter. Cheap filters run first so the clique
/// cover is only computed when needed.
pub fn passes(filters: &[Filter], g: &Graph) -> bool {
    let mut ordered = filters.to_vec();
    ordered.sort_by_key(|f| match f {
        Filter::OrderAtMost(_) => 0,
        Filter::Planar => 1,
        Filter::ThetaAtMost(_) => 2,
    });
    ordered.iter().all(|f| match *f {
        Filter::OrderAtMost(k) => g.n() <= k,
        Filter::Planar => is_planar(g),
        Filter::ThetaAtMost(k) => clique_cover_number(g).0 <= k,
    })
}
