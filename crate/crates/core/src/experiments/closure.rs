//! Reachability relations on a few vertices.
//!
//! A raw move removes a set closed under successors or under predecessors,
//! so reachability between surviving vertices never routes through a
//! removed one. Scores therefore depend only on the colors and the
//! transitive closure, and enumerating transitive relations covers every
//! graph of that size.

use crate::graph::{GameGraph, Side};

/// A transitive relation on `n <= 16` vertices; `reach[v]` holds the
/// vertices `v` reaches, `v` itself excluded.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Reach {
    pub reach: Vec<u16>,
}

impl Reach {
    pub fn len(&self) -> usize {
        self.reach.len()
    }

    pub fn is_empty(&self) -> bool {
        self.reach.is_empty()
    }

    fn in_degree(&self, v: usize) -> u32 {
        self.reach.iter().filter(|&&r| r >> v & 1 == 1).count() as u32
    }

    /// `(out-degree, in-degree)` of `v`; invariant under relabeling.
    fn degree(&self, v: usize) -> (u32, u32) {
        (self.reach[v].count_ones(), self.in_degree(v))
    }

    /// Labeled so that vertex degrees never decrease. Every relation has
    /// such a labeling, so these relations meet every isomorphism class.
    pub fn is_sorted(&self) -> bool {
        (1..self.len()).all(|v| self.degree(v - 1) <= self.degree(v))
    }

    /// The graph with one arc per related pair.
    pub fn to_graph(&self, colors: Vec<Side>) -> GameGraph {
        assert_eq!(colors.len(), self.len());
        let arcs = (0..self.len()).flat_map(|a| {
            let r = self.reach[a];
            (0..self.len()).filter(move |&b| r >> b & 1 == 1).map(move |b| (a, b))
        });
        GameGraph::new(colors, arcs).expect("relation has no loops")
    }
}

/// Every transitive relation on `n` labeled vertices, each exactly once.
/// Counts for `n = 0..=5` are 1, 1, 4, 29, 355, 6942.
pub fn transitive_relations(n: usize) -> Vec<Reach> {
    assert!(n <= 16);
    let mut out = Vec::new();
    let mut reach = Vec::with_capacity(n);
    extend(n, &mut reach, &mut |r| out.push(Reach { reach: r.to_vec() }));
    out
}

/// Transitive relations on `n` vertices with sorted degrees: at least one
/// per isomorphism class, and far fewer than all labeled ones.
pub fn relation_representatives(n: usize) -> Vec<Reach> {
    let mut out = Vec::new();
    let mut reach = Vec::with_capacity(n);
    extend(n, &mut reach, &mut |r| {
        let rel = Reach { reach: r.to_vec() };
        if rel.is_sorted() {
            out.push(rel);
        }
    });
    out
}

/// Adds vertex `k = reach.len()` with every consistent pair of an
/// up-closed out-set and a down-closed in-set.
#[allow(clippy::needless_range_loop)]
fn extend(n: usize, reach: &mut Vec<u16>, emit: &mut dyn FnMut(&[u16])) {
    let k = reach.len();
    if k == n {
        emit(reach);
        return;
    }
    for out in 0u16..(1 << k) {
        if (0..k).any(|a| out >> a & 1 == 1 && reach[a] & !out != 0) {
            continue;
        }
        'ins: for ins in 0u16..(1 << k) {
            for b in 0..k {
                let inside = ins >> b & 1 == 1;
                if !inside && reach[b] & ins != 0 {
                    continue 'ins;
                }
                // a -> k -> c must already hold as a -> c
                if inside && out & !(1 << b) & !reach[b] != 0 {
                    continue 'ins;
                }
            }
            for a in 0..k {
                if ins >> a & 1 == 1 {
                    reach[a] |= 1 << k;
                }
            }
            reach.push(out);
            extend(n, reach, emit);
            reach.pop();
            for a in 0..k {
                reach[a] &= !(1 << k);
            }
        }
    }
}

/// The transitive closure of `g` as a graph on the same vertices.
pub fn closure_graph(g: &GameGraph) -> GameGraph {
    let all = g.all_vertices();
    let arcs: Vec<(usize, usize)> = (0..g.len())
        .flat_map(|v| g.succ_within(v, &all).iter().filter(move |&u| u != v).map(move |u| (v, u)).collect::<Vec<_>>())
        .collect();
    GameGraph::new(g.colors().to_vec(), arcs).expect("closure has no loops")
}
