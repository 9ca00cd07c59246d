//! Memoized constant-sum minimax over relative scores, driven by an
//! explicit stack.
//!
//! Every node stores both its Left-score and Right-score:
//! `Ls = max_L (gain + Rs(child))` and `Rs = min_R (Ls(child) - gain)`.

use std::hash::Hash;

use crate::graph::Side;
use crate::par::{self, Parallelism};

use super::memo::MemoTable;
use super::RelScores;

pub(crate) struct Edge<K> {
    pub side: Side,
    /// Vertices taken by the mover, forced ones included.
    pub gain: i32,
    pub child: K,
}

pub(crate) enum Expansion<K> {
    Terminal(RelScores),
    Moves(Vec<Edge<K>>),
}

pub(crate) trait GameTree: Sync {
    type Key: Clone + Eq + Hash + Send + Sync;

    fn expand(&self, key: &Self::Key) -> Expansion<Self::Key>;

    /// Called once per freshly computed interior node.
    fn audit(&self, _key: &Self::Key, _value: RelScores) {}
}

struct Frame<K> {
    key: K,
    edges: Vec<Edge<K>>,
    next: usize,
    acc: Accumulator,
}

#[derive(Clone, Copy)]
struct Accumulator {
    ls: i32,
    rs: i32,
}

impl Accumulator {
    fn new() -> Self {
        Accumulator {
            ls: i32::MIN,
            rs: i32::MAX,
        }
    }

    fn fold(&mut self, side: Side, gain: i32, child: RelScores) {
        match side {
            Side::Left => self.ls = self.ls.max(gain + child.rs),
            Side::Right => self.rs = self.rs.min(child.ls - gain),
        }
    }

    fn finish(self) -> RelScores {
        assert!(
            self.ls != i32::MIN && self.rs != i32::MAX,
            "interior node without moves for both players"
        );
        RelScores {
            ls: self.ls,
            rs: self.rs,
        }
    }
}

/// Value of `root`, filling `memo` along the way.
pub(crate) fn evaluate<T: GameTree>(
    tree: &T,
    memo: &MemoTable<T::Key, RelScores>,
    root: T::Key,
) -> RelScores {
    if let Some(v) = memo.get(&root) {
        return v;
    }
    let edges = match tree.expand(&root) {
        Expansion::Terminal(v) => return v,
        Expansion::Moves(edges) => edges,
    };
    let mut stack = vec![Frame {
        key: root,
        edges,
        next: 0,
        acc: Accumulator::new(),
    }];
    // Value of the frame just popped, to fold into its parent.
    let mut returned: Option<RelScores> = None;

    while let Some(top) = stack.last_mut() {
        if let Some(v) = returned.take() {
            let e = &top.edges[top.next];
            top.acc.fold(e.side, e.gain, v);
            top.next += 1;
            continue;
        }
        if top.next == top.edges.len() {
            let frame = stack.pop().unwrap();
            let value = frame.acc.finish();
            tree.audit(&frame.key, value);
            memo.insert(frame.key, value);
            returned = Some(value);
            continue;
        }
        let e = &top.edges[top.next];
        if let Some(v) = memo.get(&e.child) {
            top.acc.fold(e.side, e.gain, v);
            top.next += 1;
            continue;
        }
        match tree.expand(&e.child) {
            Expansion::Terminal(v) => {
                top.acc.fold(e.side, e.gain, v);
                top.next += 1;
            }
            Expansion::Moves(edges) => {
                let key = e.child.clone();
                stack.push(Frame {
                    key,
                    edges,
                    next: 0,
                    acc: Accumulator::new(),
                });
            }
        }
    }
    returned.expect("root frame produced a value")
}

/// Like [`evaluate`], but the root's children may be searched concurrently.
pub(crate) fn evaluate_root<T: GameTree>(
    tree: &T,
    memo: &MemoTable<T::Key, RelScores>,
    root: T::Key,
    mode: Parallelism,
) -> RelScores {
    if !mode.is_parallel() {
        return evaluate(tree, memo, root);
    }
    if let Some(v) = memo.get(&root) {
        return v;
    }
    let edges = match tree.expand(&root) {
        Expansion::Terminal(v) => return v,
        Expansion::Moves(edges) => edges,
    };
    let values = par::map(mode, &edges, |e| evaluate(tree, memo, e.child.clone()));
    let mut acc = Accumulator::new();
    for (e, v) in edges.iter().zip(values) {
        acc.fold(e.side, e.gain, v);
    }
    let value = acc.finish();
    tree.audit(&root, value);
    memo.insert(root, value);
    value
}
