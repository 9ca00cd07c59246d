//! Colored directed graphs, reachability closures and the relevant-graph
//! reduction that the solver works on.

mod format;
mod position;

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::bitset::VertexSet;

pub use format::{to_dot, GraphDoc, ParseError, ParseErrorKind};
pub use position::{MoveMode, Position, RemovalKind, RemovalSet};
pub(crate) use position::dominant_within;

/// A player, and the vertex color owned by that player.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Side {
    #[serde(rename = "L")]
    Left,
    #[serde(rename = "R")]
    Right,
}

impl Side {
    pub fn opponent(self) -> Side {
        match self {
            Side::Left => Side::Right,
            Side::Right => Side::Left,
        }
    }

    pub fn letter(self) -> char {
        match self {
            Side::Left => 'L',
            Side::Right => 'R',
        }
    }
}

impl fmt::Display for Side {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.letter())
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("self-loop on vertex {0}")]
    SelfLoop(usize),
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("vertex {0} is not alive in this position")]
    InvalidVertex(usize),
    #[error("position is not relevant (it still has forced vertices)")]
    NotRelevant,
    #[error("{mover} cannot play vertex {vertex}: it belongs to {owner}")]
    IllegalMove {
        vertex: usize,
        mover: Side,
        owner: Side,
    },
    #[error("{0} has no vertex to play")]
    NoMove(Side),
}

/// An immutable directed graph whose vertices `0..n` are colored `L` or `R`.
///
/// Arcs are stored sorted and deduplicated; self-loops are rejected.
#[derive(Clone, PartialEq, Eq)]
pub struct GameGraph {
    colors: Vec<Side>,
    arcs: Vec<(usize, usize)>,
    succ: Vec<Vec<usize>>,
    pred: Vec<Vec<usize>>,
    left: VertexSet,
    right: VertexSet,
}

impl GameGraph {
    pub fn new<I>(colors: Vec<Side>, arcs: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let n = colors.len();
        let mut arcs: Vec<(usize, usize)> = arcs.into_iter().collect();
        for &(a, b) in &arcs {
            for v in [a, b] {
                if v >= n {
                    return Err(GraphError::VertexOutOfRange { vertex: v, n });
                }
            }
            if a == b {
                return Err(GraphError::SelfLoop(a));
            }
        }
        arcs.sort_unstable();
        arcs.dedup();

        let mut succ = vec![Vec::new(); n];
        let mut pred = vec![Vec::new(); n];
        for &(a, b) in &arcs {
            succ[a].push(b);
            pred[b].push(a);
        }
        let left = VertexSet::from_iter_with_capacity(
            n,
            (0..n).filter(|&v| colors[v] == Side::Left),
        );
        let right = VertexSet::from_iter_with_capacity(
            n,
            (0..n).filter(|&v| colors[v] == Side::Right),
        );
        Ok(GameGraph {
            colors,
            arcs,
            succ,
            pred,
            left,
            right,
        })
    }

    pub fn empty() -> Self {
        GameGraph::new(Vec::new(), []).expect("empty graph is well formed")
    }

    pub fn len(&self) -> usize {
        self.colors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.colors.is_empty()
    }

    pub fn color(&self, v: usize) -> Side {
        self.colors[v]
    }

    pub fn colors(&self) -> &[Side] {
        &self.colors
    }

    /// Arcs in lexicographic order.
    pub fn arcs(&self) -> &[(usize, usize)] {
        &self.arcs
    }

    pub fn successors(&self, v: usize) -> &[usize] {
        &self.succ[v]
    }

    pub fn predecessors(&self, v: usize) -> &[usize] {
        &self.pred[v]
    }

    /// All vertices of the given color.
    pub fn side_mask(&self, side: Side) -> &VertexSet {
        match side {
            Side::Left => &self.left,
            Side::Right => &self.right,
        }
    }

    pub fn all_vertices(&self) -> VertexSet {
        VertexSet::full(self.len())
    }

    pub fn count(&self, side: Side) -> usize {
        self.side_mask(side).len()
    }

    /// Vertices reachable from `v` inside `alive`, `v` included.
    pub fn succ_within(&self, v: usize, alive: &VertexSet) -> VertexSet {
        closure(&self.succ, std::iter::once(v), alive, self.len())
    }

    /// Vertices that reach `v` inside `alive`, `v` included.
    pub fn pred_within(&self, v: usize, alive: &VertexSet) -> VertexSet {
        closure(&self.pred, std::iter::once(v), alive, self.len())
    }

    /// Closure removed by `v` under the raw rules: successors for an
    /// L-vertex, predecessors for an R-vertex.
    pub fn capture_within(&self, v: usize, alive: &VertexSet) -> VertexSet {
        match self.colors[v] {
            Side::Left => self.succ_within(v, alive),
            Side::Right => self.pred_within(v, alive),
        }
    }

    /// `(Forc_L, Forc_R)` of the subgraph induced by `alive`.
    ///
    /// An L-vertex is forced when no R-vertex is reachable from it; an
    /// R-vertex is forced when no L-vertex reaches it.
    pub fn forced_within(&self, alive: &VertexSet) -> (VertexSet, VertexSet) {
        let alive_left = self.left.intersection(alive);
        let alive_right = self.right.intersection(alive);
        let reaches_right = closure(&self.pred, alive_right.iter(), alive, self.len());
        let reached_from_left = closure(&self.succ, alive_left.iter(), alive, self.len());
        (
            alive_left.difference(&reaches_right),
            alive_right.difference(&reached_from_left),
        )
    }

    pub fn is_relevant_within(&self, alive: &VertexSet) -> bool {
        let (fl, fr) = self.forced_within(alive);
        fl.is_empty() && fr.is_empty()
    }

    /// `Rmv(G_alive, v)`: the capture closure plus the vertices it leaves
    /// forced. Returns the full set and the forced part separately.
    ///
    /// `alive` must induce a relevant graph.
    pub fn rmv_within(&self, v: usize, alive: &VertexSet) -> (VertexSet, VertexSet) {
        let mut removed = self.capture_within(v, alive);
        let rest = alive.difference(&removed);
        let (fl, fr) = self.forced_within(&rest);
        let forced = match self.colors[v] {
            Side::Left => {
                debug_assert!(fr.is_empty(), "Left move left R-vertices forced");
                fl
            }
            Side::Right => {
                debug_assert!(fl.is_empty(), "Right move left L-vertices forced");
                fr
            }
        };
        removed.union_with(&forced);
        (removed, forced)
    }

    /// The alternative characterization of `Rmv`, evaluated vertex by
    /// vertex: for an L-move `x`, every `z` with `Succ(z) ⊆ L ∪ Succ(x)`;
    /// symmetric for R-moves.
    pub fn rmv_by_inclusion_within(&self, v: usize, alive: &VertexSet) -> VertexSet {
        let side = self.colors[v];
        let own = self.side_mask(side);
        let mut allowed = self.capture_within(v, alive);
        allowed.union_with(own);
        let mut out = VertexSet::empty(self.len());
        for z in alive {
            let reach = match side {
                Side::Left => self.succ_within(z, alive),
                Side::Right => self.pred_within(z, alive),
            };
            if reach.is_subset(&allowed) {
                out.insert(z);
            }
        }
        out
    }

    /// The negative: colors swapped and every arc reversed.
    pub fn negative(&self) -> GameGraph {
        let colors = self.colors.iter().map(|c| c.opponent()).collect();
        GameGraph::new(colors, self.arcs.iter().map(|&(a, b)| (b, a)))
            .expect("reversal preserves well-formedness")
    }

    /// Disjoint union; vertices of `other` are shifted past those of `self`.
    pub fn disjoint_sum(&self, other: &GameGraph) -> GameGraph {
        let shift = self.len();
        let colors = self.colors.iter().chain(&other.colors).copied().collect();
        let arcs = self
            .arcs
            .iter()
            .copied()
            .chain(other.arcs.iter().map(|&(a, b)| (a + shift, b + shift)));
        GameGraph::new(colors, arcs).expect("sum of well-formed graphs")
    }

    /// Subgraph induced by `keep`, re-densified. The second value maps new
    /// ids to old ones.
    pub fn induced(&self, keep: &VertexSet) -> (GameGraph, Vec<usize>) {
        let old: Vec<usize> = keep.iter().collect();
        let mut new_id = vec![usize::MAX; self.len()];
        for (i, &v) in old.iter().enumerate() {
            new_id[v] = i;
        }
        let colors = old.iter().map(|&v| self.colors[v]).collect();
        let arcs = self
            .arcs
            .iter()
            .filter(|&&(a, b)| keep.contains(a) && keep.contains(b))
            .map(|&(a, b)| (new_id[a], new_id[b]));
        let g = GameGraph::new(colors, arcs).expect("induced subgraph is well formed");
        (g, old)
    }

    /// Weakly connected components of the subgraph induced by `alive`,
    /// each sorted, ordered by smallest member.
    pub fn components_within(&self, alive: &VertexSet) -> Vec<VertexSet> {
        let mut seen = VertexSet::empty(self.len());
        let mut out = Vec::new();
        for start in alive {
            if seen.contains(start) {
                continue;
            }
            let mut comp = VertexSet::empty(self.len());
            let mut stack = vec![start];
            seen.insert(start);
            while let Some(u) = stack.pop() {
                comp.insert(u);
                for &w in self.succ[u].iter().chain(&self.pred[u]) {
                    if alive.contains(w) && seen.insert(w) {
                        stack.push(w);
                    }
                }
            }
            out.push(comp);
        }
        out
    }

    pub fn components(&self) -> Vec<VertexSet> {
        self.components_within(&self.all_vertices())
    }
}

impl fmt::Debug for GameGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let colors: String = self.colors.iter().map(|c| c.letter()).collect();
        f.debug_struct("GameGraph")
            .field("colors", &colors)
            .field("arcs", &self.arcs)
            .finish()
    }
}

/// Worklist closure over `adj`, restricted to `alive`, seeded by `sources`.
fn closure<I>(adj: &[Vec<usize>], sources: I, alive: &VertexSet, n: usize) -> VertexSet
where
    I: IntoIterator<Item = usize>,
{
    let mut seen = VertexSet::empty(n);
    let mut stack = Vec::new();
    for s in sources {
        if alive.contains(s) && seen.insert(s) {
            stack.push(s);
        }
    }
    while let Some(u) = stack.pop() {
        for &w in &adj[u] {
            if alive.contains(w) && seen.insert(w) {
                stack.push(w);
            }
        }
    }
    seen
}

/// The graph of Figure 1 style worked example: `u, v, w, x, y, z` as ids
/// `0..6`, with `u, w` owned by Left.
pub fn example_graph() -> GameGraph {
    use Side::{Left as L, Right as R};
    GameGraph::new(
        vec![L, R, L, R, R, R],
        [(0, 2), (1, 2), (2, 4), (2, 5), (3, 5), (3, 1)],
    )
    .expect("static graph")
}
