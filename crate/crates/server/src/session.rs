//! The game state machine, independent of any transport.
//!
//! Both engine roles draw on one [`SafeFamily`] for the session's guard
//! count: the defender answers from its move table, and the attacker uses
//! the elimination rounds to pick attacks that push the defender towards
//! configurations that die sooner.

use gammatheta_core::eternal::{attacker_move, safe_family, survival_move, SafeFamily};
use gammatheta_core::invariants::{is_dominating, undominated_vertex};
use gammatheta_core::{parse_graph6, GameError, Graph, VertexSet};
use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Interactive sessions are limited to this many vertices.
pub const MAX_SESSION_VERTICES: usize = 16;
/// Interactive sessions are limited to this many guards.
pub const MAX_SESSION_GUARDS: usize = 8;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Mode {
    /// The human attacks; the engine defends.
    HumanAttacker,
    /// The engine attacks; the human defends.
    HumanDefender,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Ongoing,
    DefenderDefeated,
    AttackerGaveUp,
}

/// How the guards are placed at the start.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Start {
    /// `k` guards, placed by the engine: on a safe configuration when one
    /// exists, otherwise on the dominating set that survives longest.
    Guards(usize),
    /// Explicit guard positions.
    Config(Vec<usize>),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Move {
    pub attack: usize,
    /// The guard that moved onto `attack`; `None` when no guard could
    /// respond while keeping the vertices dominated.
    pub guard: Option<usize>,
    /// Guard positions after the move.
    pub config: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SessionError {
    #[error("graph6 error at byte {offset}: {message}")]
    Graph6 { offset: usize, message: String },
    #[error("sessions are limited to {MAX_SESSION_VERTICES} vertices and {MAX_SESSION_GUARDS} guards, got n = {n}, k = {k}")]
    TooLarge { n: usize, k: usize },
    #[error("guard count {k} outside 1..={n}")]
    GuardCount { k: usize, n: usize },
    #[error("vertex {vertex} out of range for graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("guard positions must be distinct")]
    DuplicateGuard,
    #[error("guards do not dominate vertex {undominated}")]
    NotDominating { undominated: usize },
    #[error("no {k} vertices dominate the graph")]
    NoDominatingSet { k: usize },
    #[error("the session is over ({0:?})")]
    Closed(Status),
    #[error("this move belongs to the engine in a {0:?} session")]
    WrongRole(Mode),
    #[error("guard {guard} cannot answer an attack on {attack}")]
    IllegalMove { guard: usize, attack: usize },
    #[error("history does not replay: {0}")]
    BadHistory(String),
    #[error(transparent)]
    Game(#[from] GameError),
}

/// Advice for the human player.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Hint {
    /// Attack this vertex next; a winning continuation exists.
    Attack { vertex: usize },
    /// Move this guard onto the attacked vertex.
    Defend { guard: usize, attack: usize },
    None { reason: String },
}

#[derive(Clone, Debug)]
pub struct Session {
    mode: Mode,
    start: VertexSet,
    config: VertexSet,
    family: SafeFamily,
    history: Vec<Move>,
    status: Status,
    /// The engine's outstanding attack in a human-defender session.
    pending_attack: Option<usize>,
}

fn list(s: VertexSet) -> Vec<usize> {
    s.iter().collect()
}

fn to_set(g: &Graph, vertices: &[usize]) -> Result<VertexSet, SessionError> {
    let mut s = VertexSet::EMPTY;
    for &v in vertices {
        if v >= g.n() {
            return Err(SessionError::VertexOutOfRange { vertex: v, n: g.n() });
        }
        if s.contains(v) {
            return Err(SessionError::DuplicateGuard);
        }
        s = s.with(v);
    }
    Ok(s)
}

/// The dominating `k`-set the engine would rather hold: a family member
/// if there is one, else the set eliminated last.
fn engine_placement(family: &SafeFamily) -> Option<VertexSet> {
    if let Some(&c) = family.configs().first() {
        return Some(c);
    }
    (1..=family.rounds()).rev().find_map(|r| family.eliminated_in(r).first().copied())
}

impl Session {
    pub fn new(graph6: &str, mode: Mode, start: Start) -> Result<Session, SessionError> {
        let g = parse_graph6(graph6.trim()).map_err(|e| SessionError::Graph6 {
            offset: e.offset,
            message: e.kind.to_string(),
        })?;
        let n = g.n();
        let k = match &start {
            Start::Guards(k) => *k,
            Start::Config(v) => v.len(),
        };
        if n > MAX_SESSION_VERTICES || k > MAX_SESSION_GUARDS {
            return Err(SessionError::TooLarge { n, k });
        }
        if k == 0 || k > n {
            return Err(SessionError::GuardCount { k, n });
        }
        let explicit = match &start {
            Start::Config(v) => {
                let d = to_set(&g, v)?;
                if let Some(u) = undominated_vertex(&g, d) {
                    return Err(SessionError::NotDominating { undominated: u });
                }
                Some(d)
            }
            Start::Guards(_) => None,
        };
        let family = safe_family(&g, k)?;
        let config = match explicit {
            Some(d) => d,
            None => engine_placement(&family).ok_or(SessionError::NoDominatingSet { k })?,
        };
        let mut session = Session {
            mode,
            start: config,
            config,
            family,
            history: Vec::new(),
            status: Status::Ongoing,
            pending_attack: None,
        };
        if mode == Mode::HumanDefender {
            session.engine_attack();
        }
        Ok(session)
    }

    pub fn graph(&self) -> &Graph {
        self.family.graph()
    }

    pub fn family(&self) -> &SafeFamily {
        &self.family
    }

    pub fn mode(&self) -> Mode {
        self.mode
    }

    pub fn k(&self) -> usize {
        self.family.k()
    }

    pub fn start(&self) -> VertexSet {
        self.start
    }

    pub fn config(&self) -> VertexSet {
        self.config
    }

    pub fn status(&self) -> Status {
        self.status
    }

    pub fn history(&self) -> &[Move] {
        &self.history
    }

    pub fn pending_attack(&self) -> Option<usize> {
        self.pending_attack
    }

    /// Whether the starting configuration is provably eternal.
    pub fn start_is_eternal(&self) -> bool {
        self.family.contains(self.start)
    }

    /// Whether the current configuration is in the safe family.
    pub fn is_safe(&self) -> bool {
        self.family.contains(self.config)
    }

    fn check_vertex(&self, v: usize) -> Result<(), SessionError> {
        let n = self.graph().n();
        if v >= n {
            return Err(SessionError::VertexOutOfRange { vertex: v, n });
        }
        Ok(())
    }

    fn check_turn(&self, human: Mode) -> Result<(), SessionError> {
        if self.status != Status::Ongoing {
            return Err(SessionError::Closed(self.status));
        }
        if self.mode != human {
            return Err(SessionError::WrongRole(self.mode));
        }
        Ok(())
    }

    /// The human attacks `v`; the engine defends.
    pub fn attack(&mut self, v: usize) -> Result<Move, SessionError> {
        self.check_turn(Mode::HumanAttacker)?;
        self.check_vertex(v)?;
        let m = match survival_move(&self.family, self.config, v)? {
            Some((u, next)) => {
                self.config = next;
                Move {
                    attack: v,
                    guard: Some(u),
                    config: list(next),
                }
            }
            None => {
                self.status = Status::DefenderDefeated;
                Move {
                    attack: v,
                    guard: None,
                    config: list(self.config),
                }
            }
        };
        self.history.push(m.clone());
        Ok(m)
    }

    /// The human moves guard `u` onto the pending attack; the engine then
    /// attacks again or gives up.
    pub fn defend(&mut self, u: usize) -> Result<Move, SessionError> {
        self.check_turn(Mode::HumanDefender)?;
        self.check_vertex(u)?;
        let attack = self.pending_attack.expect("an ongoing human-defender session has a pending attack");
        let legal = self.config.contains(u) && (u == attack || self.graph().has_edge(u, attack));
        if !legal {
            return Err(SessionError::IllegalMove { guard: u, attack });
        }
        let next = self.config.without(u).with(attack);
        self.config = next;
        let m = Move {
            attack,
            guard: Some(u),
            config: list(next),
        };
        self.history.push(m.clone());
        if is_dominating(self.graph(), next) {
            self.engine_attack();
        } else {
            self.status = Status::DefenderDefeated;
            self.pending_attack = None;
        }
        Ok(m)
    }

    fn engine_attack(&mut self) {
        if self.family.contains(self.config) {
            self.status = Status::AttackerGaveUp;
            self.pending_attack = None;
            return;
        }
        let v = attacker_move(&self.family, self.config).expect("config has the session's guard count");
        self.pending_attack = v;
        if v.is_none() {
            self.status = Status::AttackerGaveUp;
        }
    }

    /// Deterministic advice for the human side.
    pub fn hint(&self) -> Hint {
        if self.status != Status::Ongoing {
            return Hint::None {
                reason: "the session is over".into(),
            };
        }
        match self.mode {
            Mode::HumanAttacker => match attacker_move(&self.family, self.config) {
                Ok(Some(vertex)) => Hint::Attack { vertex },
                _ => Hint::None {
                    reason: "no winning attack known".into(),
                },
            },
            Mode::HumanDefender => {
                let attack = self.pending_attack.expect("pending attack");
                match survival_move(&self.family, self.config, attack) {
                    Ok(Some((guard, _))) => Hint::Defend { guard, attack },
                    _ => Hint::None {
                        reason: "no guard can answer while keeping every vertex dominated".into(),
                    },
                }
            }
        }
    }

    /// Recomputes the current configuration from the start and the history,
    /// checking every move for legality.
    pub fn replay(&self) -> Result<VertexSet, SessionError> {
        replay(self.graph(), self.start, &self.history)
    }
}

/// Applies `history` to `start`, checking that every guard move is legal and
/// that only a final unanswered attack leaves the guards in place.
pub fn replay(g: &Graph, start: VertexSet, history: &[Move]) -> Result<VertexSet, SessionError> {
    let mut config = start;
    for (i, m) in history.iter().enumerate() {
        let bad = |what: &str| SessionError::BadHistory(format!("move {i}: {what}"));
        match m.guard {
            Some(u) => {
                let legal = config.contains(u) && (u == m.attack || g.has_edge(u, m.attack));
                if !legal || (u == m.attack) != config.contains(m.attack) {
                    return Err(bad("illegal guard move"));
                }
                config = config.without(u).with(m.attack);
            }
            None if i + 1 == history.len() => {}
            None => return Err(bad("play continued after an unanswered attack")),
        }
        if to_set(g, &m.config)? != config {
            return Err(bad("recorded configuration differs"));
        }
    }
    Ok(config)
}
