//! The trees `T_n^c` and their doubled sums `J_n^c`.

use serde::{Deserialize, Serialize};

use crate::bitset::VertexSet;
use crate::graph::{GameGraph, Side};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TreeSpec {
    /// Depth of the last level of `L` vertices.
    pub n: u32,
    /// Leaves below each vertex of level `n`.
    pub c: u32,
}

impl TreeSpec {
    pub fn new(n: u32, c: u32) -> Self {
        assert!(c >= 1, "leaf fan-out must be positive");
        TreeSpec { n, c }
    }

    pub fn left_count(&self) -> usize {
        (3usize.pow(self.n + 1) - 1) / 2
    }

    pub fn leaf_count(&self) -> usize {
        self.c as usize * 3usize.pow(self.n)
    }

    pub fn vertex_count(&self) -> usize {
        self.left_count() + self.leaf_count()
    }
}

/// Levels `0..=n` of ternary `L` vertices, then `c` `R` leaves under each
/// vertex of level `n`; arcs point away from the root. Vertices are
/// numbered level by level.
pub fn make_tree(spec: TreeSpec) -> GameGraph {
    let mut colors = vec![Side::Left; spec.left_count()];
    colors.extend(std::iter::repeat_n(Side::Right, spec.leaf_count()));
    let mut arcs = Vec::with_capacity(colors.len());
    let mut level_start = 0;
    let mut level_len = 1;
    for depth in 0..=spec.n {
        let fan = if depth == spec.n { spec.c as usize } else { 3 };
        let next = level_start + level_len;
        for k in 0..level_len {
            for j in 0..fan {
                arcs.push((level_start + k, next + k * fan + j));
            }
        }
        level_start = next;
        level_len *= fan;
    }
    GameGraph::new(colors, arcs).expect("tree is well formed")
}

/// Two disjoint copies of `T_n^c`.
pub fn make_j(spec: TreeSpec) -> GameGraph {
    let t = make_tree(spec);
    t.disjoint_sum(&t)
}

/// Canonical form of the out-tree rooted at `root` inside `alive`, as a
/// bracket string with vertex colors.
pub fn rooted_signature(g: &GameGraph, root: usize, alive: &VertexSet) -> String {
    let mut children: Vec<String> = g
        .successors(root)
        .iter()
        .filter(|&&w| alive.contains(w))
        .map(|&w| rooted_signature(g, w, alive))
        .collect();
    children.sort();
    format!("{}({})", g.color(root).letter(), children.concat())
}

/// Signatures of the weak components of `alive`, each rooted at its unique
/// source; `None` if some component is not an out-tree.
pub fn forest_signatures(g: &GameGraph, alive: &VertexSet) -> Option<Vec<String>> {
    let mut out = Vec::new();
    for comp in g.components_within(alive) {
        let sources: Vec<usize> = comp
            .iter()
            .filter(|&v| !g.predecessors(v).iter().any(|&u| alive.contains(u)))
            .collect();
        let arcs: usize = comp
            .iter()
            .map(|v| g.successors(v).iter().filter(|&&w| alive.contains(w)).count())
            .sum();
        if sources.len() != 1 || arcs + 1 != comp.len() {
            return None;
        }
        out.push(rooted_signature(g, sources[0], alive));
    }
    out.sort();
    Some(out)
}
