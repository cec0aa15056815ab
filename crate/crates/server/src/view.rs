//! JSON shapes of the HTTP and WebSocket interface.

use serde::{Deserialize, Serialize};

use crate::session::{Mode, Move, Session, Status};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SessionView {
    pub id: String,
    pub graph6: String,
    pub n: usize,
    pub edges: Vec<(usize, usize)>,
    pub mode: Mode,
    pub k: usize,
    pub start: Vec<usize>,
    pub config: Vec<usize>,
    pub status: Status,
    /// Whether the starting configuration is provably eternal.
    pub start_is_eternal: bool,
    /// Whether the current configuration is in the safe family.
    pub safe: bool,
    /// The engine's outstanding attack, in human-defender sessions.
    pub pending_attack: Option<usize>,
    pub history: Vec<Move>,
    /// Number of configurations in the engine's safe family.
    pub family_size: usize,
}

impl SessionView {
    pub fn new(id: &str, s: &Session) -> Self {
        SessionView {
            id: id.to_string(),
            graph6: gammatheta_core::encode_graph6(s.graph()),
            n: s.graph().n(),
            edges: s.graph().edges().collect(),
            mode: s.mode(),
            k: s.k(),
            start: s.start().iter().collect(),
            config: s.config().iter().collect(),
            status: s.status(),
            start_is_eternal: s.start_is_eternal(),
            safe: s.is_safe(),
            pending_attack: s.pending_attack(),
            history: s.history().to_vec(),
            family_size: s.family().len(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CreateSession {
    pub graph6: String,
    pub mode: Mode,
    /// Guard count; the engine places the guards.
    #[serde(default)]
    pub k: Option<usize>,
    /// Explicit 0-based guard positions.
    #[serde(default)]
    pub guards: Option<Vec<usize>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AttackRequest {
    pub vertex: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DefendRequest {
    pub guard: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MoveReport {
    #[serde(rename = "move")]
    pub mv: Move,
    pub session: SessionView,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum EventKind {
    /// Full state, sent when a subscriber connects.
    Snapshot,
    Attack,
    Defend,
}

/// A WebSocket message.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Event {
    pub seq: u64,
    pub kind: EventKind,
    #[serde(rename = "move")]
    pub mv: Option<Move>,
    pub session: SessionView,
}
