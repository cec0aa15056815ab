//! The eternal domination game as a service: sessions pit a human attacker
//! against the engine defender, or the engine attacker against a human
//! defender, over JSON/HTTP with a WebSocket event feed.

pub mod api;
pub mod session;
pub mod store;
pub mod view;

pub use api::{router, serve, AppState};
pub use session::{replay, Hint, Mode, Move, Session, SessionError, Start, Status};
pub use view::{AttackRequest, CreateSession, DefendRequest, Event, EventKind, MoveReport, SessionView};
