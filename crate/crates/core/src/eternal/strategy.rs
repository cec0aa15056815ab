use std::collections::{BTreeSet, HashSet, VecDeque};

use serde::{Deserialize, Serialize};

use crate::error::GameError;
use crate::eternal::family::SafeFamily;
use crate::graph::Graph;
use crate::invariants::{is_dominating, undominated_vertex};
use crate::vertex_set::VertexSet;

/// Default number of belief states explored by [`find_winning_attack`].
pub const DEFAULT_ATTACK_BUDGET: usize = 1_000_000;

/// A nonempty finite sequence of attacked vertices.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct AttackSequence(Vec<usize>);

impl AttackSequence {
    pub fn new(vertices: Vec<usize>) -> Result<Self, GameError> {
        if vertices.is_empty() {
            return Err(GameError::EmptyAttack);
        }
        Ok(AttackSequence(vertices))
    }

    pub fn vertices(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

impl TryFrom<Vec<usize>> for AttackSequence {
    type Error = GameError;
    fn try_from(v: Vec<usize>) -> Result<Self, GameError> {
        AttackSequence::new(v)
    }
}

impl From<AttackSequence> for Vec<usize> {
    fn from(a: AttackSequence) -> Vec<usize> {
        a.0
    }
}

/// Attacker-centric verdict: a strategy is `Losing` when the guards survive it.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Losing,
    Winning,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StrategyOutcome {
    pub verdict: Verdict,
    /// Configurations the defender can be in after the whole sequence.
    pub surviving: Vec<VertexSet>,
    /// Number of reachable configurations after each attack.
    pub trace: Vec<usize>,
}

/// Every dominating configuration the defender may move to from `config`
/// when `v` is attacked.
pub fn responses(g: &Graph, config: VertexSet, v: usize) -> impl Iterator<Item = (usize, VertexSet)> + '_ {
    let guarded = config.contains(v);
    let movers = if guarded {
        VertexSet::singleton(v)
    } else {
        config & g.neighbors(v)
    };
    movers
        .iter()
        .map(move |u| (u, config.without(u).with(v)))
        .filter(move |&(_, next)| guarded || is_dominating(g, next))
}

fn step(g: &Graph, reachable: &BTreeSet<VertexSet>, v: usize) -> BTreeSet<VertexSet> {
    reachable
        .iter()
        .flat_map(|&c| responses(g, c, v).map(|(_, next)| next))
        .collect()
}

/// Plays the attack sequence `a` against guards starting at `d`, tracking all
/// configurations some defender strategy can reach.
pub fn evaluate_strategy(g: &Graph, d: VertexSet, a: &AttackSequence) -> Result<StrategyOutcome, GameError> {
    g.check_set(d)?;
    if let Some(v) = undominated_vertex(g, d) {
        return Err(GameError::NotDominating { undominated: v });
    }
    for &v in a.vertices() {
        g.check_vertex(v)?;
    }
    let mut reachable = BTreeSet::from([d]);
    let mut trace = Vec::with_capacity(a.len());
    for &v in a.vertices() {
        reachable = step(g, &reachable, v);
        trace.push(reachable.len());
    }
    Ok(StrategyOutcome {
        verdict: if reachable.is_empty() {
            Verdict::Winning
        } else {
            Verdict::Losing
        },
        surviving: reachable.into_iter().collect(),
        trace,
    })
}

/// A sequence of attacks that defeats the guards.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", content = "attacks", rename_all = "snake_case")]
pub enum WinningAttack {
    /// The starting set was not dominating; the single attack hits an
    /// undominated vertex.
    NotDominating(AttackSequence),
    /// A sequence that defeats every defender strategy from a dominating set.
    Sequence(AttackSequence),
}

impl WinningAttack {
    pub fn attacks(&self) -> &AttackSequence {
        match self {
            WinningAttack::NotDominating(a) | WinningAttack::Sequence(a) => a,
        }
    }
}

/// Finds a shortest fixed attack sequence against `d` that no defender
/// strategy survives, or `None` when `d` belongs to the safe family.
///
/// The search runs over sets of configurations the defender might occupy;
/// sets containing a member of the family are never explored. Returns
/// `Err(SearchBudget)` if more than `budget` such sets are visited.
pub fn find_winning_attack(family: &SafeFamily, d: VertexSet, budget: usize) -> Result<Option<WinningAttack>, GameError> {
    let g = family.graph();
    g.check_set(d)?;
    if let Some(v) = undominated_vertex(g, d) {
        let a = AttackSequence::new(vec![v])?;
        return Ok(Some(WinningAttack::NotDominating(a)));
    }
    if d.len() != family.k() {
        return Err(GameError::GuardCount { k: d.len(), n: g.n() });
    }
    if family.contains(d) {
        return Ok(None);
    }

    let start = BTreeSet::from([d]);
    let mut seen: HashSet<BTreeSet<VertexSet>> = HashSet::from([start.clone()]);
    // parent links: (belief index of predecessor, attack)
    let mut beliefs = vec![start];
    let mut parent: Vec<Option<(usize, usize)>> = vec![None];
    let mut queue = VecDeque::from([0usize]);
    while let Some(i) = queue.pop_front() {
        for v in g.vertices() {
            let next = step(g, &beliefs[i], v);
            if next.is_empty() {
                let mut attacks = vec![v];
                let mut at = i;
                while let Some((p, a)) = parent[at] {
                    attacks.push(a);
                    at = p;
                }
                attacks.reverse();
                return Ok(Some(WinningAttack::Sequence(AttackSequence::new(attacks)?)));
            }
            if next.iter().any(|&c| family.contains(c)) || seen.contains(&next) {
                continue;
            }
            if seen.len() >= budget {
                return Err(GameError::SearchBudget(budget));
            }
            seen.insert(next.clone());
            beliefs.push(next);
            parent.push(Some((i, v)));
            queue.push_back(beliefs.len() - 1);
        }
    }
    Err(GameError::NoFixedAttack(d))
}

/// The attacker's adaptive policy: against a configuration outside the
/// family, attack a vertex all of whose defences lead to configurations
/// eliminated in an earlier round. Returns `None` for family members.
pub fn attacker_move(family: &SafeFamily, config: VertexSet) -> Result<Option<usize>, GameError> {
    let g = family.graph();
    g.check_set(config)?;
    if let Some(v) = undominated_vertex(g, config) {
        return Ok(Some(v));
    }
    if config.len() != family.k() {
        return Err(GameError::GuardCount { k: config.len(), n: g.n() });
    }
    let Some(round) = family.elimination_round(config) else {
        return Ok(None);
    };
    let v = (g.vertices() - config)
        .iter()
        .find(|&v| {
            responses(g, config, v).all(|(_, next)| family.elimination_round(next).is_some_and(|r| r < round))
        })
        .expect("an eliminated configuration has a decisive attack");
    Ok(Some(v))
}

/// The defender's best effort outside the family: the response whose
/// configuration survives the longest, preferring family members. `None`
/// when no dominating response exists.
pub fn survival_move(family: &SafeFamily, config: VertexSet, attack: usize) -> Result<Option<(usize, VertexSet)>, GameError> {
    let g = family.graph();
    g.check_set(config)?;
    g.check_vertex(attack)?;
    if family.contains(config) {
        return family.defender_move(config, attack).map(Some);
    }
    Ok(responses(g, config, attack).max_by_key(|&(u, next)| {
        let round = family.elimination_round(next).unwrap_or(usize::MAX);
        (round, std::cmp::Reverse(u))
    }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::eternal::family::safe_family;

    fn set(v: &[usize]) -> VertexSet {
        v.iter().collect()
    }

    fn seq(v: &[usize]) -> AttackSequence {
        AttackSequence::new(v.to_vec()).unwrap()
    }

    #[test]
    fn attacks_on_guards_change_nothing() {
        let g = Graph::cycle(5);
        let out = evaluate_strategy(&g, set(&[0, 2]), &seq(&[0, 2, 0])).unwrap();
        assert_eq!(out.verdict, Verdict::Losing);
        assert_eq!(out.surviving, vec![set(&[0, 2])]);
        assert_eq!(out.trace, vec![1, 1, 1]);
    }

    #[test]
    fn cycle_five_two_guards() {
        let g = Graph::cycle(5);
        let out = evaluate_strategy(&g, set(&[0, 2]), &seq(&[3])).unwrap();
        assert_eq!(out.verdict, Verdict::Losing);
        assert_eq!(out.surviving, vec![set(&[0, 3])]);

        let f = safe_family(&g, 2).unwrap();
        let a = find_winning_attack(&f, set(&[0, 2]), DEFAULT_ATTACK_BUDGET).unwrap().unwrap();
        assert!(a.attacks().len() <= 2);
        let out = evaluate_strategy(&g, set(&[0, 2]), a.attacks()).unwrap();
        assert_eq!(out.verdict, Verdict::Winning);
        assert!(out.surviving.is_empty());
    }

    #[test]
    fn non_dominating_start() {
        let g = Graph::path(3);
        assert_eq!(
            evaluate_strategy(&g, set(&[0]), &seq(&[1])),
            Err(GameError::NotDominating { undominated: 2 })
        );
        let f = safe_family(&g, 1).unwrap();
        assert_eq!(
            find_winning_attack(&f, set(&[0]), 10).unwrap(),
            Some(WinningAttack::NotDominating(seq(&[2])))
        );
    }

    #[test]
    fn path_three_centre_guard() {
        let g = Graph::path(3);
        let f = safe_family(&g, 1).unwrap();
        let a = find_winning_attack(&f, set(&[1]), 10).unwrap().unwrap();
        assert_eq!(a.attacks().len(), 1);
        assert!([0, 2].contains(&a.attacks().vertices()[0]));
        assert_eq!(attacker_move(&f, set(&[1])).unwrap(), Some(0));
        assert_eq!(survival_move(&f, set(&[1]), 0).unwrap(), None);
    }

    #[test]
    fn eternal_sets_have_no_winning_attack() {
        let g = Graph::complete(4);
        let f = safe_family(&g, 1).unwrap();
        for v in 0..4 {
            assert_eq!(find_winning_attack(&f, set(&[v]), 10).unwrap(), None);
            assert_eq!(attacker_move(&f, set(&[v])).unwrap(), None);
        }
    }

    #[test]
    fn attack_sequence_serde() {
        let a = seq(&[1, 0, 3]);
        let json = serde_json::to_string(&a).unwrap();
        assert_eq!(json, "[1,0,3]");
        assert!(serde_json::from_str::<AttackSequence>("[]").is_err());
    }
}
