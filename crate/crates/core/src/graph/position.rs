use crate::bitset::VertexSet;

use super::{GameGraph, GraphError, Side};

/// How a move removes vertices.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, serde::Serialize, serde::Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum MoveMode {
    /// Remove only the successor (Left) or predecessor (Right) closure.
    Raw,
    /// Remove `Rmv`: the closure plus any vertices it leaves forced.
    Relevant,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RemovalKind {
    Plain,
    WithForced,
}

/// Vertices taken by one move.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RemovalSet {
    pub vertices: VertexSet,
    pub by_player: Side,
    pub kind: RemovalKind,
    /// Part of `vertices` that was forced rather than captured directly.
    pub forced: VertexSet,
}

impl RemovalSet {
    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }
}

/// A subposition of a base graph: the alive vertices plus the counts each
/// player has banked from forced-vertex removals.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Position<'g> {
    graph: &'g GameGraph,
    alive: VertexSet,
    pub credit_left: u32,
    pub credit_right: u32,
}

impl<'g> Position<'g> {
    pub fn initial(graph: &'g GameGraph) -> Self {
        Position {
            graph,
            alive: graph.all_vertices(),
            credit_left: 0,
            credit_right: 0,
        }
    }

    pub fn with_alive(graph: &'g GameGraph, alive: VertexSet) -> Self {
        debug_assert!(alive.is_subset(&graph.all_vertices()));
        Position {
            graph,
            alive,
            credit_left: 0,
            credit_right: 0,
        }
    }

    pub fn graph(&self) -> &'g GameGraph {
        self.graph
    }

    pub fn alive(&self) -> &VertexSet {
        &self.alive
    }

    pub fn is_alive(&self, v: usize) -> bool {
        self.alive.contains(v)
    }

    pub fn alive_of(&self, side: Side) -> VertexSet {
        self.graph.side_mask(side).intersection(&self.alive)
    }

    fn check_alive(&self, v: usize) -> Result<(), GraphError> {
        if self.alive.contains(v) {
            Ok(())
        } else {
            Err(GraphError::InvalidVertex(v))
        }
    }

    pub fn succ_closure(&self, v: usize) -> Result<VertexSet, GraphError> {
        self.check_alive(v)?;
        Ok(self.graph.succ_within(v, &self.alive))
    }

    pub fn pred_closure(&self, v: usize) -> Result<VertexSet, GraphError> {
        self.check_alive(v)?;
        Ok(self.graph.pred_within(v, &self.alive))
    }

    /// `(Forc_L, Forc_R)` of the alive subgraph.
    pub fn forced_sets(&self) -> (VertexSet, VertexSet) {
        self.graph.forced_within(&self.alive)
    }

    pub fn is_relevant(&self) -> bool {
        self.graph.is_relevant_within(&self.alive)
    }

    /// Removes forced vertices until none remain, banking them as credits.
    pub fn relevant_reduce(&self) -> Position<'g> {
        let mut p = self.clone();
        loop {
            let (fl, fr) = p.forced_sets();
            if fl.is_empty() && fr.is_empty() {
                return p;
            }
            p.credit_left += fl.len() as u32;
            p.credit_right += fr.len() as u32;
            p.alive.difference_with(&fl);
            p.alive.difference_with(&fr);
        }
    }

    /// `Rmv(p, v)`. Requires a relevant position.
    pub fn rmv(&self, v: usize) -> Result<RemovalSet, GraphError> {
        self.check_alive(v)?;
        if !self.is_relevant() {
            return Err(GraphError::NotRelevant);
        }
        let (vertices, forced) = self.graph.rmv_within(v, &self.alive);
        debug_assert_eq!(
            vertices,
            self.graph.rmv_by_inclusion_within(v, &self.alive),
            "Rmv characterizations disagree at vertex {v}"
        );
        Ok(RemovalSet {
            vertices,
            by_player: self.graph.color(v),
            kind: RemovalKind::WithForced,
            forced,
        })
    }

    /// The vertices `mover` would take by playing `v`.
    pub fn removal(&self, mover: Side, v: usize, mode: MoveMode) -> Result<RemovalSet, GraphError> {
        self.check_alive(v)?;
        let owner = self.graph.color(v);
        if owner != mover {
            return Err(GraphError::IllegalMove {
                vertex: v,
                mover,
                owner,
            });
        }
        match mode {
            MoveMode::Raw => Ok(RemovalSet {
                vertices: self.graph.capture_within(v, &self.alive),
                by_player: mover,
                kind: RemovalKind::Plain,
                forced: VertexSet::empty(self.graph.len()),
            }),
            MoveMode::Relevant => self.rmv(v),
        }
    }

    /// Plays `v` for `mover`. In relevant mode the forced vertices the move
    /// creates are banked for the mover.
    pub fn apply_move(&self, mover: Side, v: usize, mode: MoveMode) -> Result<Position<'g>, GraphError> {
        if self.alive.is_empty() {
            return Err(GraphError::NoMove(mover));
        }
        let removal = self.removal(mover, v, mode)?;
        let mut next = self.clone();
        next.alive.difference_with(&removal.vertices);
        let banked = removal.forced.len() as u32;
        match mover {
            Side::Left => next.credit_left += banked,
            Side::Right => next.credit_right += banked,
        }
        Ok(next)
    }

    /// The mover's moves that survive domination pruning: `v'` is dropped
    /// when `v' ∈ Rmv(p, v)` for another vertex `v` of the same color
    /// (ties between mutually included moves keep the lowest id).
    pub fn dominant_moves(&self, mover: Side) -> Result<Vec<usize>, GraphError> {
        if !self.is_relevant() {
            return Err(GraphError::NotRelevant);
        }
        Ok(dominant_within(self.graph, &self.alive, mover)
            .into_iter()
            .map(|(v, _)| v)
            .collect())
    }
}

/// Undominated moves with their `Rmv` sets, ascending by vertex id.
pub(crate) fn dominant_within(
    graph: &GameGraph,
    alive: &VertexSet,
    mover: Side,
) -> Vec<(usize, VertexSet)> {
    let moves: Vec<(usize, VertexSet)> = graph
        .side_mask(mover)
        .intersection(alive)
        .iter()
        .map(|v| (v, graph.rmv_within(v, alive).0))
        .collect();
    let mut keep = Vec::with_capacity(moves.len());
    'outer: for (i, (v, rv)) in moves.iter().enumerate() {
        for (j, (w, rw)) in moves.iter().enumerate() {
            if i != j && rw.contains(*v) && (!rv.contains(*w) || w < v) {
                continue 'outer;
            }
        }
        keep.push((*v, rv.clone()));
    }
    keep
}
