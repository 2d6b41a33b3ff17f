//! Process-wide hash-consing table for game forms and the memo tables that
//! sit on top of it.
//!
//! Readers never block each other; insertion into the intern table is
//! serialized by a mutex so that every structurally distinct form receives
//! exactly one id.

use std::hash::BuildHasherDefault;
use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::{Arc, OnceLock};

use dashmap::DashMap;
use parking_lot::{Mutex, RwLock};
use rustc_hash::FxHasher;

use super::{Dyadic, Game, OutcomeClass};

type FxDashMap<K, V> = DashMap<K, V, BuildHasherDefault<FxHasher>>;

/// Option lists of an interned form, sorted by id and deduplicated.
#[derive(Debug, PartialEq, Eq, Hash)]
pub(crate) struct Node {
    pub left: Box<[Game]>,
    pub right: Box<[Game]>,
}

pub(crate) struct Store {
    nodes: RwLock<Vec<Arc<Node>>>,
    index: FxDashMap<Arc<Node>, Game>,
    insert: Mutex<()>,
    pub memo: Memo,
}

#[derive(Default)]
pub(crate) struct Memo {
    pub neg: FxDashMap<Game, Game>,
    pub sum: FxDashMap<(Game, Game), Game>,
    pub leq: FxDashMap<(Game, Game), bool>,
    pub canonical: FxDashMap<Game, Game>,
    pub number: FxDashMap<Game, Option<Dyadic>>,
    pub birthday: FxDashMap<Game, u32>,
    pub left_first: FxDashMap<Game, bool>,
    pub right_first: FxDashMap<Game, bool>,
    pub outcome: FxDashMap<Game, OutcomeClass>,
    inserts: AtomicUsize,
}

/// Rough per-entry footprint used for the memory cap.
const ENTRY_BYTES: usize = 48;
const CHECK_EVERY: usize = 1 << 16;

impl Memo {
    fn len(&self) -> usize {
        self.neg.len()
            + self.sum.len()
            + self.leq.len()
            + self.canonical.len()
            + self.number.len()
            + self.birthday.len()
            + self.left_first.len()
            + self.right_first.len()
            + self.outcome.len()
    }

    /// Called after every memo insertion; drops all memoized results once
    /// the tables outgrow `DIPLACE_MEMO_LIMIT_MB`.
    pub fn note_insert(&self) {
        let n = self.inserts.fetch_add(1, Ordering::Relaxed);
        if n % CHECK_EVERY != 0 || n == 0 {
            return;
        }
        if self.len() * ENTRY_BYTES > crate::memo_limit_bytes() {
            self.clear();
        }
    }

    pub fn clear(&self) {
        self.neg.clear();
        self.sum.clear();
        self.leq.clear();
        self.canonical.clear();
        self.number.clear();
        self.birthday.clear();
        self.left_first.clear();
        self.right_first.clear();
        self.outcome.clear();
    }
}

pub(crate) fn store() -> &'static Store {
    static STORE: OnceLock<Store> = OnceLock::new();
    STORE.get_or_init(|| {
        let store = Store {
            nodes: RwLock::new(Vec::new()),
            index: FxDashMap::default(),
            insert: Mutex::new(()),
            memo: Memo::default(),
        };
        // Id 0 is always the empty game.
        let zero = store.intern(Vec::new(), Vec::new());
        debug_assert_eq!(zero, Game(0));
        store
    })
}

impl Store {
    pub fn intern(&self, mut left: Vec<Game>, mut right: Vec<Game>) -> Game {
        left.sort_unstable();
        left.dedup();
        right.sort_unstable();
        right.dedup();
        let node = Arc::new(Node { left: left.into(), right: right.into() });
        if let Some(g) = self.index.get(&node) {
            return *g;
        }
        let _guard = self.insert.lock();
        if let Some(g) = self.index.get(&node) {
            return *g;
        }
        let mut nodes = self.nodes.write();
        let id = Game(u32::try_from(nodes.len()).expect("intern table overflow"));
        nodes.push(Arc::clone(&node));
        drop(nodes);
        self.index.insert(node, id);
        id
    }

    pub fn node(&self, g: Game) -> Arc<Node> {
        Arc::clone(&self.nodes.read()[g.0 as usize])
    }

    pub fn len(&self) -> usize {
        self.nodes.read().len()
    }
}
