//! Exact scores of INFLUENCE positions.
//!
//! Two move semantics are supported. `Raw` plays the rules literally:
//! a move removes the successor (Left) or predecessor (Right) closure and a
//! player without vertices waits. `Relevant` first banks every forced
//! vertex, then plays `Rmv` moves on relevant graphs. Both report the scores
//! of the original game.

mod engine;
mod memo;

use std::time::Instant;

use serde::{Deserialize, Serialize};

use crate::bitset::VertexSet;
use crate::experiments::{Claim, VerifyReport};
use crate::families::{recognize_segments, SegmentSolver};
use crate::graph::{GameGraph, GraphError, MoveMode, Position, Side};
use crate::par::Parallelism;

pub(crate) use engine::{Edge, Expansion, GameTree};

pub use memo::MemoTable;

pub(crate) use engine::evaluate_root;

/// Absolute scores: `sl1` is Left's score when Left starts, `sl2` when
/// Right starts; likewise for Right.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ScoreQuad {
    #[serde(rename = "sL1")]
    pub sl1: u32,
    #[serde(rename = "sL2")]
    pub sl2: u32,
    #[serde(rename = "sR1")]
    pub sr1: u32,
    #[serde(rename = "sR2")]
    pub sr2: u32,
}

impl ScoreQuad {
    /// Rebuilds the quad of an `n`-vertex game from its relative scores.
    pub fn from_rel(rel: RelScores, n: usize) -> Self {
        let n = n as i32;
        debug_assert_eq!((rel.ls + n).rem_euclid(2), 0);
        debug_assert_eq!((rel.rs + n).rem_euclid(2), 0);
        let sl1 = (rel.ls + n) / 2;
        let sl2 = (rel.rs + n) / 2;
        ScoreQuad {
            sl1: sl1 as u32,
            sl2: sl2 as u32,
            sr1: (n - sl2) as u32,
            sr2: (n - sl1) as u32,
        }
    }

    pub fn total(&self) -> u32 {
        self.sl1 + self.sr2
    }

    pub fn rel(&self) -> RelScores {
        RelScores {
            ls: self.sl1 as i32 - self.sr2 as i32,
            rs: self.sl2 as i32 - self.sr1 as i32,
        }
    }
}

/// `Ls = sL1 - sR2` and `Rs = sL2 - sR1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct RelScores {
    pub ls: i32,
    pub rs: i32,
}

impl RelScores {
    pub const ZERO: RelScores = RelScores { ls: 0, rs: 0 };

    pub fn incentive(&self) -> i32 {
        self.ls - self.rs
    }

    pub fn shifted(self, by: i32) -> RelScores {
        RelScores {
            ls: self.ls + by,
            rs: self.rs + by,
        }
    }

    /// Both scores share the parity of the vertex count.
    pub fn parity_ok(&self, n: usize) -> bool {
        let n = n as i32;
        (self.ls - n).rem_euclid(2) == 0 && (self.rs - n).rem_euclid(2) == 0
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SolveOptions {
    pub mode: MoveMode,
    /// Drop moves dominated by an including move (relevant mode only).
    pub pruning: bool,
    pub parallel_root: bool,
    /// Check parity, nonzugzwang and both `Rmv` characterizations on every
    /// computed entry; panics on violation.
    pub audit: bool,
    /// Hand positions that are sums of segments to the segment solver.
    pub segment_routing: bool,
}

impl Default for SolveOptions {
    fn default() -> Self {
        SolveOptions {
            mode: MoveMode::Relevant,
            pruning: true,
            parallel_root: false,
            audit: false,
            segment_routing: true,
        }
    }
}

impl SolveOptions {
    pub fn raw() -> Self {
        SolveOptions {
            mode: MoveMode::Raw,
            pruning: false,
            segment_routing: false,
            ..Self::default()
        }
    }

    /// Relevant mode with every shortcut disabled.
    pub fn plain() -> Self {
        SolveOptions {
            pruning: false,
            segment_routing: false,
            ..Self::default()
        }
    }
}

/// Search tree over alive subsets of one base graph.
struct GraphTree<'g> {
    graph: &'g GameGraph,
    opts: SolveOptions,
    segments: &'g SegmentSolver,
}

impl GameTree for GraphTree<'_> {
    type Key = VertexSet;

    fn expand(&self, alive: &VertexSet) -> Expansion<VertexSet> {
        let n = alive.len() as i32;
        if n == 0 {
            return Expansion::Terminal(RelScores::ZERO);
        }
        let g = self.graph;
        let left = g.side_mask(Side::Left).intersection(alive);
        let right = g.side_mask(Side::Right).intersection(alive);
        match self.opts.mode {
            MoveMode::Raw => {
                if left.is_empty() {
                    return Expansion::Terminal(RelScores { ls: -n, rs: -n });
                }
                if right.is_empty() {
                    return Expansion::Terminal(RelScores { ls: n, rs: n });
                }
                let mut edges = Vec::with_capacity(alive.len());
                for (side, movers) in [(Side::Left, &left), (Side::Right, &right)] {
                    for v in movers {
                        let taken = g.capture_within(v, alive);
                        edges.push(Edge {
                            side,
                            gain: taken.len() as i32,
                            child: alive.difference(&taken),
                        });
                    }
                }
                Expansion::Moves(edges)
            }
            MoveMode::Relevant => {
                assert!(
                    !left.is_empty() && !right.is_empty(),
                    "nonempty relevant position must be a dicot"
                );
                if self.opts.segment_routing {
                    if let Some(config) = recognize_segments(g, alive) {
                        return Expansion::Terminal(self.segments.rel_scores(&config));
                    }
                }
                let mut edges = Vec::with_capacity(alive.len());
                for side in [Side::Left, Side::Right] {
                    let mut moves: Vec<(usize, VertexSet)> = if self.opts.pruning {
                        crate::graph::dominant_within(g, alive, side)
                    } else {
                        g.side_mask(side)
                            .intersection(alive)
                            .iter()
                            .map(|v| (v, g.rmv_within(v, alive).0))
                            .collect()
                    };
                    // larger captures first, then lowest id
                    moves.sort_by(|a, b| b.1.len().cmp(&a.1.len()).then(a.0.cmp(&b.0)));
                    for (v, removed) in moves {
                        if self.opts.audit {
                            assert_eq!(
                                removed,
                                g.rmv_by_inclusion_within(v, alive),
                                "Rmv characterizations disagree at {v} in {alive:?}"
                            );
                        }
                        edges.push(Edge {
                            side,
                            gain: removed.len() as i32,
                            child: alive.difference(&removed),
                        });
                    }
                }
                Expansion::Moves(edges)
            }
        }
    }

    fn audit(&self, alive: &VertexSet, value: RelScores) {
        if !self.opts.audit {
            return;
        }
        assert!(
            value.parity_ok(alive.len()),
            "parity violated at {alive:?}: {value:?}"
        );
        if self.opts.mode == MoveMode::Relevant {
            assert!(
                value.ls >= value.rs,
                "zugzwang at {alive:?}: {value:?}"
            );
        }
    }
}

/// Solver bound to one base graph; its memo persists across queries.
pub struct Solver<'g> {
    graph: &'g GameGraph,
    opts: SolveOptions,
    memo: MemoTable<VertexSet, RelScores>,
    segments: SegmentSolver,
}

/// An optimal move with the resulting position's exact scores.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BestMove {
    pub vertex: usize,
    /// Vertices the move takes, forced ones included.
    pub gain: u32,
    /// Relative score the mover secures, from Left's point of view.
    pub value: i32,
    /// Scores of the resulting position's remaining vertices.
    pub child: ScoreQuad,
}

impl<'g> Solver<'g> {
    pub fn new(graph: &'g GameGraph, opts: SolveOptions) -> Self {
        Solver {
            graph,
            opts,
            memo: MemoTable::new(),
            segments: SegmentSolver::new(),
        }
    }

    pub fn options(&self) -> &SolveOptions {
        &self.opts
    }

    pub fn memo_entries(&self) -> usize {
        self.memo.len()
    }

    pub fn memo(&self) -> &MemoTable<VertexSet, RelScores> {
        &self.memo
    }

    fn tree(&self) -> GraphTree<'_> {
        GraphTree {
            graph: self.graph,
            opts: self.opts,
            segments: &self.segments,
        }
    }

    /// Relative scores of the game played from `p`, credits included.
    pub fn position_scores(&self, p: &Position<'_>) -> RelScores {
        self.position_scores_with(p, Parallelism::Sequential)
    }

    fn position_scores_with(&self, p: &Position<'_>, mode: Parallelism) -> RelScores {
        let p = match self.opts.mode {
            MoveMode::Raw => p.clone(),
            MoveMode::Relevant => p.relevant_reduce(),
        };
        let credit = p.credit_left as i32 - p.credit_right as i32;
        evaluate_root(&self.tree(), &self.memo, p.alive().clone(), mode).shifted(credit)
    }

    /// Scores of the whole base graph.
    pub fn solve(&self) -> ScoreQuad {
        let p = Position::initial(self.graph);
        let mode = Parallelism::from_flag(self.opts.parallel_root);
        let rel = self.position_scores_with(&p, mode);
        ScoreQuad::from_rel(rel, self.graph.len())
    }

    pub fn rel_scores(&self) -> RelScores {
        self.solve().rel()
    }

    /// Optimal move for `mover` from `p`, lowest vertex id among ties.
    /// Every legal move is evaluated, so the choice does not depend on
    /// pruning.
    pub fn best_move(&self, p: &Position<'_>, mover: Side) -> Result<BestMove, GraphError> {
        let base = match self.opts.mode {
            MoveMode::Raw => p.clone(),
            MoveMode::Relevant => p.relevant_reduce(),
        };
        let candidates = base.alive_of(mover);
        if candidates.is_empty() {
            return Err(GraphError::NoMove(mover));
        }
        let credit = base.credit_left as i32 - base.credit_right as i32;
        let mut best: Option<BestMove> = None;
        for v in &candidates {
            let removal = base.removal(mover, v, self.opts.mode)?;
            let child_alive = base.alive().difference(&removal.vertices);
            let child = Position::with_alive(self.graph, child_alive.clone());
            let rel = self.position_scores(&child);
            let gain = removal.len() as i32;
            let value = match mover {
                Side::Left => credit + gain + rel.rs,
                Side::Right => credit + rel.ls - gain,
            };
            let better = match &best {
                None => true,
                Some(b) => match mover {
                    Side::Left => value > b.value,
                    Side::Right => value < b.value,
                },
            };
            if better {
                best = Some(BestMove {
                    vertex: v,
                    gain: gain as u32,
                    value,
                    child: ScoreQuad::from_rel(rel, child_alive.len()),
                });
            }
        }
        Ok(best.expect("at least one candidate"))
    }
}

pub fn solve(g: &GameGraph, opts: SolveOptions) -> ScoreQuad {
    Solver::new(g, opts).solve()
}

pub fn rel_scores(g: &GameGraph, opts: SolveOptions) -> RelScores {
    let rel = solve(g, opts).rel();
    debug_assert!(rel.parity_ok(g.len()));
    rel
}

pub fn incentive(g: &GameGraph, opts: SolveOptions) -> i32 {
    rel_scores(g, opts).incentive()
}

pub fn best_move(p: &Position<'_>, mover: Side, opts: SolveOptions) -> Result<BestMove, GraphError> {
    Solver::new(p.graph(), opts).best_move(p, mover)
}

/// Checks both sides of the sum inequalities for two relevant games:
/// `max(Ls+Rs', Rs+Ls') <= Ls(G+G') <= Ls+Ls'` and
/// `Rs+Rs' <= Rs(G+G') <= min(Ls+Rs', Rs+Ls')`.
pub fn milnor_bounds_check(g1: &GameGraph, g2: &GameGraph) -> VerifyReport {
    let started = Instant::now();
    let opts = SolveOptions::default();
    let a = rel_scores(g1, opts);
    let b = rel_scores(g2, opts);
    let s = rel_scores(&g1.disjoint_sum(g2), opts);
    let lower_ls = (a.ls + b.rs).max(a.rs + b.ls);
    let upper_rs = (a.ls + b.rs).min(a.rs + b.ls);
    let witness = serde_json::json!({
        "g": a, "h": b, "sum": s,
    });
    let mut report = VerifyReport::new("milnor", 0);
    let checks = [
        ("ls-lower", lower_ls <= s.ls),
        ("ls-upper", s.ls <= a.ls + b.ls),
        ("rs-lower", a.rs + b.rs <= s.rs),
        ("rs-upper", s.rs <= upper_rs),
    ];
    for (id, ok) in checks {
        report.push(Claim::hard(id, "Milnor sum inequalities", ok, witness.clone()));
    }
    report.finish(started);
    report
}
