//! Brute-force reference for the raw rules, sharing nothing with the
//! library solver but the graph type.

#![allow(dead_code)]

use std::collections::HashMap;

use influence_core::{GameGraph, Side};

/// Relative scores `(Ls, Rs)` by plain memoized minimax over alive masks.
pub struct Naive {
    left: u64,
    succ: Vec<u64>,
    pred: Vec<u64>,
    memo: HashMap<u64, (i32, i32)>,
}

impl Naive {
    pub fn new(g: &GameGraph) -> Self {
        let n = g.len();
        assert!(n <= 64);
        let mut succ = vec![0u64; n];
        let mut pred = vec![0u64; n];
        for &(a, b) in g.arcs() {
            succ[a] |= 1 << b;
            pred[b] |= 1 << a;
        }
        let left = (0..n).filter(|&v| g.color(v) == Side::Left).fold(0, |m, v| m | 1 << v);
        Naive {
            left,
            succ,
            pred,
            memo: HashMap::new(),
        }
    }

    fn reach(adj: &[u64], v: usize, alive: u64) -> u64 {
        let mut seen = 1u64 << v;
        let mut stack = vec![v];
        while let Some(u) = stack.pop() {
            let mut next = adj[u] & alive & !seen;
            seen |= next;
            while next != 0 {
                stack.push(next.trailing_zeros() as usize);
                next &= next - 1;
            }
        }
        seen
    }

    pub fn scores(&mut self, alive: u64) -> (i32, i32) {
        if alive == 0 {
            return (0, 0);
        }
        if let Some(&v) = self.memo.get(&alive) {
            return v;
        }
        let total = alive.count_ones() as i32;
        let ls_set = alive & self.left;
        let rs_set = alive & !self.left;
        let out = if ls_set == 0 {
            (-total, -total)
        } else if rs_set == 0 {
            (total, total)
        } else {
            let mut ls = i32::MIN;
            let mut m = ls_set;
            while m != 0 {
                let x = m.trailing_zeros() as usize;
                m &= m - 1;
                let cap = Self::reach(&self.succ, x, alive);
                ls = ls.max(cap.count_ones() as i32 + self.scores(alive & !cap).1);
            }
            let mut rs = i32::MAX;
            let mut m = rs_set;
            while m != 0 {
                let y = m.trailing_zeros() as usize;
                m &= m - 1;
                let cap = Self::reach(&self.pred, y, alive);
                rs = rs.min(self.scores(alive & !cap).0 - cap.count_ones() as i32);
            }
            (ls, rs)
        };
        self.memo.insert(alive, out);
        out
    }

    pub fn root(&mut self) -> (i32, i32) {
        let n = self.succ.len();
        let all = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
        self.scores(all)
    }
}

pub fn naive(g: &GameGraph) -> (i32, i32) {
    Naive::new(g).root()
}

/// Alternating path built directly: colors alternate starting with
/// `first`, and every L-vertex points at its neighbours.
#[allow(clippy::needless_range_loop)]
pub fn path(len: usize, first: Side) -> GameGraph {
    let colors: Vec<Side> = (0..len).map(|i| if i % 2 == 0 { first } else { first.opponent() }).collect();
    let mut arcs = Vec::new();
    for i in 0..len {
        if colors[i] == Side::Left {
            if i > 0 {
                arcs.push((i, i - 1));
            }
            if i + 1 < len {
                arcs.push((i, i + 1));
            }
        }
    }
    GameGraph::new(colors, arcs).unwrap()
}

/// Even segments and odd ones with more R-vertices start with R; odd ones
/// with more L-vertices start with L.
pub fn seg_even(len: usize) -> GameGraph {
    assert!(len.is_multiple_of(2));
    path(len, Side::Right)
}

pub fn seg_minus(len: usize) -> GameGraph {
    assert!(len % 2 == 1);
    path(len, Side::Right)
}

pub fn seg_plus(len: usize) -> GameGraph {
    assert!(len % 2 == 1);
    path(len, Side::Left)
}

pub fn sum(parts: &[GameGraph]) -> GameGraph {
    parts.iter().fold(GameGraph::empty(), |acc, g| acc.disjoint_sum(g))
}

/// Alternating cycle on `n` vertices, arcs from every L-vertex to both
/// neighbours.
pub fn cycle(n: usize) -> GameGraph {
    let colors: Vec<Side> = (0..n).map(|i| if i % 2 == 0 { Side::Left } else { Side::Right }).collect();
    let arcs = (0..n).step_by(2).flat_map(|i| [(i, (i + 1) % n), (i, (i + n - 1) % n)]);
    GameGraph::new(colors, arcs).unwrap()
}

/// Table 1 as printed, `n = 1..=38`, odd sizes taken with more R-vertices.
pub const TABLE_LS: [i32; 38] = [
    -1, 2, 3, 4, 1, 2, 3, 2, 1, 2, 3, 2, 1, 4, 3, 2, 1, 2, 3, //
    2, 1, 4, 3, 2, 1, 2, 3, 2, 1, 4, 3, 2, 1, 2, 3, 2, 1, 2,
];
pub const TABLE_RS: [i32; 38] = [
    -1, -2, -3, -4, -5, -2, -1, -2, -3, -2, -1, -2, -3, -4, -3, -2, -3, -2, -3, //
    -2, -5, -4, -3, -2, -3, -2, -3, -2, -5, -4, -3, -2, -3, -2, -3, -2, -5, -2,
];
