//! HTTP routes and the WebSocket event feed.

use std::sync::Arc;
use std::time::{Duration, Instant};

use axum::extract::rejection::JsonRejection;
use axum::extract::ws::{Message, WebSocket, WebSocketUpgrade};
use axum::extract::{Path, State};
use axum::http::StatusCode;
use axum::response::{IntoResponse, Response};
use axum::routing::{get, post};
use axum::{Json, Router};
use serde::Serialize;
use tokio::net::TcpListener;
use tokio::sync::broadcast::error::RecvError;

use crate::session::{Hint, Session, SessionError, Start};
use crate::store::{Handle, Store};
use crate::view::{AttackRequest, CreateSession, DefendRequest, Event, EventKind, MoveReport, SessionView};

#[derive(Clone)]
pub struct AppState {
    pub store: Arc<Store>,
}

impl AppState {
    pub fn new(ttl: Duration) -> Self {
        AppState {
            store: Arc::new(Store::new(ttl)),
        }
    }
}

#[derive(Debug, Serialize)]
struct ErrorBody {
    error: &'static str,
    message: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    offset: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    undominated: Option<usize>,
}

#[derive(Debug)]
pub struct ApiError {
    status: StatusCode,
    body: ErrorBody,
}

impl ApiError {
    fn new(status: StatusCode, error: &'static str, message: String) -> Self {
        ApiError {
            status,
            body: ErrorBody {
                error,
                message,
                offset: None,
                undominated: None,
            },
        }
    }

    fn unknown_session(id: &str) -> Self {
        ApiError::new(StatusCode::NOT_FOUND, "unknown_session", format!("no session {id}"))
    }
}

impl From<SessionError> for ApiError {
    fn from(e: SessionError) -> Self {
        let message = e.to_string();
        let (status, code) = match &e {
            SessionError::Graph6 { .. } => (StatusCode::BAD_REQUEST, "invalid_graph6"),
            SessionError::TooLarge { .. } => (StatusCode::UNPROCESSABLE_ENTITY, "too_large"),
            SessionError::NotDominating { .. } => (StatusCode::UNPROCESSABLE_ENTITY, "not_dominating"),
            SessionError::IllegalMove { .. } => (StatusCode::UNPROCESSABLE_ENTITY, "illegal_move"),
            SessionError::Closed(_) => (StatusCode::CONFLICT, "session_closed"),
            SessionError::WrongRole(_) => (StatusCode::CONFLICT, "wrong_role"),
            _ => (StatusCode::UNPROCESSABLE_ENTITY, "invalid_request"),
        };
        let mut err = ApiError::new(status, code, message);
        match e {
            SessionError::Graph6 { offset, .. } => err.body.offset = Some(offset),
            SessionError::NotDominating { undominated } => err.body.undominated = Some(undominated),
            _ => {}
        }
        err
    }
}

impl From<JsonRejection> for ApiError {
    fn from(e: JsonRejection) -> Self {
        ApiError::new(e.status(), "bad_body", e.body_text())
    }
}

impl IntoResponse for ApiError {
    fn into_response(self) -> Response {
        (self.status, Json(self.body)).into_response()
    }
}

type ApiResult<T> = Result<T, ApiError>;

pub fn router(state: AppState) -> Router {
    Router::new()
        .route("/sessions", post(create))
        .route("/sessions/{id}", get(show))
        .route("/sessions/{id}/attack", post(attack))
        .route("/sessions/{id}/defend", post(defend))
        .route("/sessions/{id}/hint", get(hint))
        .route("/sessions/{id}/events", get(events))
        .with_state(state)
}

fn lookup(state: &AppState, id: &str) -> ApiResult<Handle> {
    state.store.get(id).ok_or_else(|| ApiError::unknown_session(id))
}

async fn create(
    State(state): State<AppState>,
    body: Result<Json<CreateSession>, JsonRejection>,
) -> ApiResult<(StatusCode, Json<SessionView>)> {
    let Json(req) = body?;
    let start = match (req.k, req.guards) {
        (Some(k), None) => Start::Guards(k),
        (None, Some(guards)) => Start::Config(guards),
        _ => {
            return Err(ApiError::new(
                StatusCode::UNPROCESSABLE_ENTITY,
                "invalid_request",
                "give exactly one of k and guards".into(),
            ))
        }
    };
    let mode = req.mode;
    let graph6 = req.graph6;
    let session = tokio::task::spawn_blocking(move || Session::new(&graph6, mode, start))
        .await
        .map_err(|e| ApiError::new(StatusCode::INTERNAL_SERVER_ERROR, "internal", e.to_string()))??;
    let (id, handle) = state.store.insert(session);
    let view = SessionView::new(&id, &handle.lock().session);
    Ok((StatusCode::CREATED, Json(view)))
}

async fn show(State(state): State<AppState>, Path(id): Path<String>) -> ApiResult<Json<SessionView>> {
    let handle = lookup(&state, &id)?;
    let view = SessionView::new(&id, &handle.lock().session);
    Ok(Json(view))
}

/// Applies a move under the session lock and publishes it.
fn play(
    state: &AppState,
    id: &str,
    kind: EventKind,
    f: impl FnOnce(&mut Session) -> Result<crate::session::Move, SessionError>,
) -> ApiResult<Json<MoveReport>> {
    let handle = lookup(state, id)?;
    let mut slot = handle.lock();
    let mv = f(&mut slot.session)?;
    slot.seq += 1;
    let session = SessionView::new(id, &slot.session);
    // No subscribers is not an error.
    let _ = handle.events.send(Event {
        seq: slot.seq,
        kind,
        mv: Some(mv.clone()),
        session: session.clone(),
    });
    Ok(Json(MoveReport { mv, session }))
}

async fn attack(
    State(state): State<AppState>,
    Path(id): Path<String>,
    body: Result<Json<AttackRequest>, JsonRejection>,
) -> ApiResult<Json<MoveReport>> {
    let Json(req) = body?;
    play(&state, &id, EventKind::Attack, |s| s.attack(req.vertex))
}

async fn defend(
    State(state): State<AppState>,
    Path(id): Path<String>,
    body: Result<Json<DefendRequest>, JsonRejection>,
) -> ApiResult<Json<MoveReport>> {
    let Json(req) = body?;
    play(&state, &id, EventKind::Defend, |s| s.defend(req.guard))
}

async fn hint(State(state): State<AppState>, Path(id): Path<String>) -> ApiResult<Json<Hint>> {
    let handle = lookup(&state, &id)?;
    let hint = handle.lock().session.hint();
    Ok(Json(hint))
}

async fn events(State(state): State<AppState>, Path(id): Path<String>, ws: WebSocketUpgrade) -> ApiResult<Response> {
    let handle = lookup(&state, &id)?;
    Ok(ws.on_upgrade(move |socket| feed(socket, id, handle)))
}

fn snapshot(id: &str, handle: &Handle) -> Event {
    let slot = handle.lock();
    Event {
        seq: slot.seq,
        kind: EventKind::Snapshot,
        mv: None,
        session: SessionView::new(id, &slot.session),
    }
}

async fn send(socket: &mut WebSocket, event: &Event) -> bool {
    let text = serde_json::to_string(event).expect("events serialize");
    socket.send(Message::Text(text.into())).await.is_ok()
}

/// Sends a snapshot, then every subsequent event, until the client leaves.
async fn feed(mut socket: WebSocket, id: String, handle: Handle) {
    // Subscribe before the snapshot so no event falls in between.
    let mut rx = handle.events.subscribe();
    let first = snapshot(&id, &handle);
    let mut last_seq = first.seq;
    if !send(&mut socket, &first).await {
        return;
    }
    loop {
        tokio::select! {
            event = rx.recv() => {
                let event = match event {
                    Ok(e) if e.seq <= last_seq => continue,
                    Ok(e) => e,
                    Err(RecvError::Lagged(_)) => snapshot(&id, &handle),
                    Err(RecvError::Closed) => break,
                };
                last_seq = event.seq;
                if !send(&mut socket, &event).await {
                    break;
                }
            }
            incoming = socket.recv() => match incoming {
                Some(Ok(Message::Close(_))) | Some(Err(_)) | None => break,
                Some(Ok(_)) => {}
            },
        }
    }
}

/// Serves the API on `listener`, evicting sessions idle for longer than `ttl`.
pub async fn serve(listener: TcpListener, ttl: Duration) -> std::io::Result<()> {
    let state = AppState::new(ttl);
    let store = state.store.clone();
    let period = (ttl / 4).max(Duration::from_secs(1));
    tokio::spawn(async move {
        let mut tick = tokio::time::interval(period);
        loop {
            tick.tick().await;
            store.evict_idle(Instant::now());
        }
    });
    axum::serve(listener, router(state)).await
}
