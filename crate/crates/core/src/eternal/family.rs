use std::sync::OnceLock;

use serde::{Deserialize, Serialize};

use crate::error::GameError;
use crate::graph::Graph;
use crate::invariants::{clique_cover_number, independence_number, is_dominating, undominated_vertex};
use crate::vertex_set::{k_subsets, VertexSet};

/// Largest configuration space `C(n, k)` the solver accepts.
pub const MAX_CONFIGS: u64 = 1 << 26;

/// Round number given to configurations that are not dominating.
const ROUND_NON_DOMINATING: u16 = 0;
/// Round number of configurations that are never eliminated.
const ROUND_SURVIVOR: u16 = u16::MAX;
const NO_MOVE: u8 = u8::MAX;

type Binomials = [[u64; 65]; 65];

fn binomials() -> &'static Binomials {
    static TABLE: OnceLock<Binomials> = OnceLock::new();
    TABLE.get_or_init(|| {
    let mut c = [[0u64; 65]; 65];
    for n in 0..65 {
        c[n][0] = 1;
        for k in 1..=n {
            c[n][k] = c[n - 1][k - 1].saturating_add(c[n - 1][k]);
        }
    }
    c
    })
}

/// Position of a k-subset in increasing mask order (the colexicographic rank).
fn colex_rank(binom: &Binomials, set: VertexSet) -> usize {
    set.iter()
        .enumerate()
        .map(|(i, c)| binom[c][i + 1] as usize)
        .sum()
}

/// The greatest family of `k`-guard configurations from which the defender
/// can answer every attack forever, together with the elimination trace of
/// every other configuration.
#[derive(Clone, Debug)]
pub struct SafeFamily {
    graph: Graph,
    k: usize,
    /// Surviving configurations in increasing mask order.
    configs: Vec<VertexSet>,
    /// `moves[i][v]`: guard answering an attack on `v` from `configs[i]`.
    moves: Vec<Vec<u8>>,
    /// Elimination round of every `k`-subset, indexed by colex rank.
    death_round: Vec<u16>,
    rounds: usize,
}

impl SafeFamily {
    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn configs(&self) -> &[VertexSet] {
        &self.configs
    }

    pub fn len(&self) -> usize {
        self.configs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.configs.is_empty()
    }

    pub fn contains(&self, config: VertexSet) -> bool {
        self.index_of(config).is_some()
    }

    fn index_of(&self, config: VertexSet) -> Option<usize> {
        self.configs.binary_search(&config).ok()
    }

    /// Number of elimination rounds the fixpoint needed (0 when nothing beyond
    /// the non-dominating sets was removed).
    pub fn rounds(&self) -> usize {
        self.rounds
    }

    /// The round in which `config` was eliminated: `Some(0)` for
    /// non-dominating sets, `None` for members of the family or sets of the
    /// wrong size.
    pub fn elimination_round(&self, config: VertexSet) -> Option<usize> {
        if config.len() != self.k || !config.is_subset(self.graph.vertices()) {
            return None;
        }
        match self.death_round[colex_rank(binomials(), config)] {
            ROUND_SURVIVOR => None,
            r => Some(r as usize),
        }
    }

    /// All configurations eliminated in round `r`, in increasing mask order.
    pub fn eliminated_in(&self, r: usize) -> Vec<VertexSet> {
        k_subsets(self.graph.n(), self.k)
            .zip(&self.death_round)
            .filter(|&(_, &d)| d as usize == r && d != ROUND_SURVIVOR)
            .map(|(s, _)| s)
            .collect()
    }

    /// The stored defence of `config` against an attack on `attack`. Attacks
    /// on guarded vertices are answered by the guard already there.
    pub fn defender_move(&self, config: VertexSet, attack: usize) -> Result<(usize, VertexSet), GameError> {
        self.graph.check_vertex(attack)?;
        let i = self.index_of(config).ok_or(GameError::NotInFamily(config))?;
        if config.contains(attack) {
            return Ok((attack, config));
        }
        let u = self.moves[i][attack] as usize;
        Ok((u, config.without(u).with(attack)))
    }

    /// Serializable form: hex masks plus the move table.
    pub fn certificate(&self) -> FamilyCertificate {
        FamilyCertificate {
            n: self.graph.n(),
            k: self.k,
            configs: self.configs.iter().map(|c| c.to_hex()).collect(),
            moves: self
                .moves
                .iter()
                .map(|row| row.iter().map(|&u| (u != NO_MOVE).then_some(u as usize)).collect())
                .collect(),
        }
    }
}

/// JSON certificate of a safe family.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FamilyCertificate {
    pub n: usize,
    pub k: usize,
    /// Configurations as hexadecimal bit masks.
    pub configs: Vec<String>,
    /// `moves[i][v]`: guard of `configs[i]` that answers an attack on `v`,
    /// `null` when `v` is already guarded.
    pub moves: Vec<Vec<Option<usize>>>,
}

impl FamilyCertificate {
    /// Checks that the certificate is a closed family of dominating
    /// `k`-sets on `g` whose moves are legal and stay inside the family.
    pub fn verify(&self, g: &Graph) -> Result<Vec<VertexSet>, GameError> {
        let bad = |msg: String| GameError::BadCertificate(msg);
        if self.n != g.n() {
            return Err(bad(format!("certificate is for {} vertices", self.n)));
        }
        if self.moves.len() != self.configs.len() {
            return Err(bad("move table length differs from config count".into()));
        }
        let mut configs = Vec::with_capacity(self.configs.len());
        for hex in &self.configs {
            let c = VertexSet::from_hex(hex).ok_or_else(|| bad(format!("bad mask {hex}")))?;
            g.check_set(c)?;
            if c.len() != self.k {
                return Err(bad(format!("{c} has the wrong size")));
            }
            if let Some(v) = undominated_vertex(g, c) {
                return Err(bad(format!("{c} does not dominate {v}")));
            }
            configs.push(c);
        }
        let members: std::collections::HashSet<_> = configs.iter().copied().collect();
        for (c, row) in configs.iter().zip(&self.moves) {
            if row.len() != g.n() {
                return Err(bad(format!("move row of {c} has the wrong length")));
            }
            for v in g.vertices() {
                match (c.contains(v), row[v]) {
                    (true, None) => {}
                    (false, Some(u)) if c.contains(u) && g.has_edge(u, v) => {
                        let next = c.without(u).with(v);
                        if !members.contains(&next) {
                            return Err(bad(format!("{c} answers {v} with {u} and leaves the family")));
                        }
                    }
                    _ => return Err(bad(format!("illegal move entry for {c} at {v}"))),
                }
            }
        }
        Ok(configs)
    }
}

/// Solves the eternal domination game with `k` guards on `g`.
pub fn safe_family(g: &Graph, k: usize) -> Result<SafeFamily, GameError> {
    let n = g.n();
    if k > n {
        return Err(GameError::GuardCount { k, n });
    }
    let binom = binomials();
    let total = binom[n][k];
    if total > MAX_CONFIGS {
        return Err(GameError::TooLarge { n, k, configs: total });
    }
    let universe: Vec<VertexSet> = k_subsets(n, k).collect();
    let dominating: Vec<bool> = universe.iter().map(|&c| is_dominating(g, c)).collect();
    let rank = |c: VertexSet| colex_rank(binom, c);

    // count[i * n + v]: dominating successors of config i under an attack on v
    let mut count = vec![0u8; universe.len() * n];
    let mut death_round = vec![ROUND_SURVIVOR; universe.len()];
    let mut frontier = Vec::new();
    for (i, &c) in universe.iter().enumerate() {
        if !dominating[i] {
            death_round[i] = ROUND_NON_DOMINATING;
            continue;
        }
        for v in g.vertices() - c {
            let live = (c & g.neighbors(v))
                .iter()
                .filter(|&u| dominating[rank(c.without(u).with(v))])
                .count();
            count[i * n + v] = live as u8;
            if live == 0 && death_round[i] == ROUND_SURVIVOR {
                death_round[i] = 1;
                frontier.push(i);
            }
        }
    }

    let mut rounds = 0;
    while !frontier.is_empty() {
        rounds += 1;
        let mut next = Vec::new();
        for &e in &frontier {
            let ce = universe[e];
            // predecessors: configurations that reach ce by moving some u onto v
            for v in ce {
                for u in g.neighbors(v) - ce {
                    let d = rank(ce.without(v).with(u));
                    if death_round[d] != ROUND_SURVIVOR {
                        continue;
                    }
                    let slot = &mut count[d * n + v];
                    *slot -= 1;
                    if *slot == 0 {
                        death_round[d] = rounds as u16 + 1;
                        next.push(d);
                    }
                }
            }
        }
        frontier = next;
    }
    // the last pass found nothing new; don't count it
    let rounds = death_round
        .iter()
        .filter(|&&r| r != ROUND_SURVIVOR)
        .map(|&r| r as usize)
        .max()
        .unwrap_or(0);

    let mut configs = Vec::new();
    let mut moves = Vec::new();
    for (i, &c) in universe.iter().enumerate() {
        if death_round[i] != ROUND_SURVIVOR {
            continue;
        }
        let row = (0..n)
            .map(|v| {
                if c.contains(v) {
                    return NO_MOVE;
                }
                (c & g.neighbors(v))
                    .iter()
                    .find(|&u| death_round[rank(c.without(u).with(v))] == ROUND_SURVIVOR)
                    .expect("surviving configurations answer every attack") as u8
            })
            .collect();
        configs.push(c);
        moves.push(row);
    }

    Ok(SafeFamily {
        graph: g.clone(),
        k,
        configs,
        moves,
        death_round,
        rounds,
    })
}

/// `γ^∞(G)` with the safe family of that size. Candidate sizes run upwards
/// from `α(G)`; a family of size `θ(G)` always exists.
pub fn eternal_domination_number(g: &Graph) -> (usize, SafeFamily) {
    let (alpha, _) = independence_number(g);
    eternal_domination_number_from(g, alpha)
}

/// As [`eternal_domination_number`], starting the search at a known lower
/// bound `from` (which must not exceed `γ^∞`).
pub fn eternal_domination_number_from(g: &Graph, from: usize) -> (usize, SafeFamily) {
    let (theta, _) = clique_cover_number(g);
    for k in from..theta {
        let family = safe_family(g, k).expect("k below theta is a valid guard count");
        if !family.is_empty() {
            return (k, family);
        }
    }
    (theta, safe_family(g, theta).expect("theta is a valid guard count"))
}

/// Whether `d` is an eternal dominating set of `g`.
pub fn is_eternal_dominating(g: &Graph, d: VertexSet) -> Result<bool, GameError> {
    g.check_set(d)?;
    if !is_dominating(g, d) {
        return Ok(false);
    }
    Ok(safe_family(g, d.len())?.contains(d))
}

/// All minimum eternal dominating sets.
pub fn meds_family(g: &Graph) -> Vec<VertexSet> {
    eternal_domination_number(g).1.configs
}
