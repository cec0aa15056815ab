//! In-memory session storage with idle eviction and a per-session event
//! channel.

use std::collections::HashMap;
use std::sync::{Arc, Mutex, MutexGuard};
use std::time::{Duration, Instant};

use tokio::sync::broadcast;

use crate::session::Session;
use crate::view::Event;

const EVENT_CAPACITY: usize = 64;

/// A stored session. The mutex serializes operations on one session.
pub struct Slot {
    pub session: Session,
    /// Sequence number of the last published event.
    pub seq: u64,
}

#[derive(Clone)]
pub struct Handle {
    pub slot: Arc<Mutex<Slot>>,
    pub events: broadcast::Sender<Event>,
}

impl Handle {
    pub fn lock(&self) -> MutexGuard<'_, Slot> {
        self.slot.lock().unwrap_or_else(|e| e.into_inner())
    }
}

struct Entry {
    handle: Handle,
    last_used: Instant,
}

pub struct Store {
    entries: Mutex<HashMap<String, Entry>>,
    ttl: Duration,
}

impl Store {
    pub fn new(ttl: Duration) -> Self {
        Store {
            entries: Mutex::new(HashMap::new()),
            ttl,
        }
    }

    pub fn ttl(&self) -> Duration {
        self.ttl
    }

    fn entries(&self) -> MutexGuard<'_, HashMap<String, Entry>> {
        self.entries.lock().unwrap_or_else(|e| e.into_inner())
    }

    /// Stores `session` under a fresh random id.
    pub fn insert(&self, session: Session) -> (String, Handle) {
        let id = uuid::Uuid::new_v4().simple().to_string();
        let (events, _) = broadcast::channel(EVENT_CAPACITY);
        let handle = Handle {
            slot: Arc::new(Mutex::new(Slot { session, seq: 0 })),
            events,
        };
        let entry = Entry {
            handle: handle.clone(),
            last_used: Instant::now(),
        };
        self.entries().insert(id.clone(), entry);
        (id, handle)
    }

    /// Looks up a live session and marks it used.
    pub fn get(&self, id: &str) -> Option<Handle> {
        let now = Instant::now();
        let mut entries = self.entries();
        let entry = entries.get_mut(id)?;
        if now.duration_since(entry.last_used) > self.ttl {
            entries.remove(id);
            return None;
        }
        entry.last_used = now;
        Some(entry.handle.clone())
    }

    /// Drops sessions idle for longer than the TTL as of `now`; returns how
    /// many were removed.
    pub fn evict_idle(&self, now: Instant) -> usize {
        let mut entries = self.entries();
        let before = entries.len();
        entries.retain(|_, e| now.saturating_duration_since(e.last_used) <= self.ttl);
        before - entries.len()
    }

    pub fn len(&self) -> usize {
        self.entries().len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}
