//! Exact scores of sums of segments, computed on symbolic configurations.
//!
//! A position is the sorted list of its segment codes. Playing offset `i`
//! of a segment removes `[i-1, i+1]`; a leftover piece of one vertex is
//! forced and goes to the mover, longer pieces stay as segments.

use smallvec::SmallVec;

use crate::graph::Side;
use crate::par::Parallelism;
use crate::solver::{evaluate_root, Edge, Expansion, GameTree, MemoTable, RelScores, ScoreQuad};

use super::segment::{play_in_segment, recognize_segments, SegmentConfig, SegmentDescriptor};

pub(crate) type ConfigKey = SmallVec<[u16; 8]>;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SegmentOptions {
    /// Only play 2-moves on segments of two vertices.
    pub restrict_two_moves: bool,
    /// Drop pairs of mutually negative segments from every position.
    pub cancel_inverses: bool,
    /// Materialize every expanded position and compare each move against
    /// the graph's own `Rmv`; panics on mismatch.
    pub check_moves: bool,
}

impl Default for SegmentOptions {
    fn default() -> Self {
        SegmentOptions {
            restrict_two_moves: true,
            cancel_inverses: true,
            check_moves: false,
        }
    }
}

impl SegmentOptions {
    /// Every move of every segment, no cancellation.
    pub fn exhaustive() -> Self {
        SegmentOptions {
            restrict_two_moves: false,
            cancel_inverses: false,
            check_moves: false,
        }
    }
}

/// Largest configuration the move checker materializes.
const CHECK_LIMIT: usize = 40;

/// Segment-sum solver with a config memo shared by all its queries.
pub struct SegmentSolver {
    opts: SegmentOptions,
    memo: MemoTable<ConfigKey, RelScores>,
}

impl Default for SegmentSolver {
    fn default() -> Self {
        Self::new()
    }
}

impl SegmentSolver {
    pub fn new() -> Self {
        Self::with_options(SegmentOptions::default())
    }

    pub fn with_options(opts: SegmentOptions) -> Self {
        SegmentSolver {
            opts,
            memo: MemoTable::new(),
        }
    }

    pub fn options(&self) -> SegmentOptions {
        self.opts
    }

    pub fn memo_entries(&self) -> usize {
        self.memo.len()
    }

    pub fn rel_scores(&self, config: &SegmentConfig) -> RelScores {
        self.rel_scores_with(config, Parallelism::Sequential)
    }

    /// Like [`rel_scores`](Self::rel_scores), with the root's moves
    /// searched according to `mode`.
    pub fn rel_scores_with(&self, config: &SegmentConfig, mode: Parallelism) -> RelScores {
        // single vertices are forced and belong to their owner
        let mut offset = 0;
        let mut key = ConfigKey::new();
        for d in config.parts() {
            if d.len == 1 {
                offset += match d.color_at(0) {
                    Side::Left => 1,
                    Side::Right => -1,
                };
            } else {
                key.push(d.code());
            }
        }
        self.canonicalize(&mut key);
        evaluate_root(self, &self.memo, key, mode).shifted(offset)
    }

    pub fn quad(&self, config: &SegmentConfig) -> ScoreQuad {
        ScoreQuad::from_rel(self.rel_scores(config), config.total_len())
    }

    fn canonicalize(&self, key: &mut ConfigKey) {
        key.sort_unstable();
        if self.opts.cancel_inverses {
            cancel_inverses(key);
        }
    }

    fn check_moves(&self, key: &ConfigKey, edges: &[(usize, usize, Edge<ConfigKey>)]) {
        let config = config_of(key);
        if config.total_len() > CHECK_LIMIT {
            return;
        }
        let g = config.to_graph().expect("segments of length at least two");
        let all = g.all_vertices();
        let mut bases = Vec::with_capacity(key.len());
        let mut at = 0;
        for d in config.parts() {
            bases.push(at);
            at += d.len;
        }
        for (idx, i, edge) in edges {
            let v = bases[*idx] + i;
            assert_eq!(g.color(v), edge.side, "mover color at {v} in {config}");
            let (removed, _) = g.rmv_within(v, &all);
            assert_eq!(
                removed.len() as i32,
                edge.gain,
                "move {v} in {config} removes {removed:?}"
            );
            assert!((2..=5).contains(&removed.len()), "{}-move in {config}", removed.len());
            let rest = all.difference(&removed);
            let mut found = recognize_segments(&g, &rest)
                .expect("moves keep sums of segments")
                .codes();
            self.canonicalize(&mut found);
            assert_eq!(found, edge.child, "child of {v} in {config}");
        }
    }
}

impl GameTree for SegmentSolver {
    type Key = ConfigKey;

    fn expand(&self, key: &ConfigKey) -> Expansion<ConfigKey> {
        if key.is_empty() {
            return Expansion::Terminal(RelScores::ZERO);
        }
        let mut edges = Vec::new();
        for (idx, &code) in key.iter().enumerate() {
            if idx > 0 && key[idx - 1] == code {
                continue;
            }
            let d = SegmentDescriptor::from_code(code);
            // odd segments read the same from both ends
            let upto = if d.len % 2 == 1 { d.len.div_ceil(2) } else { d.len };
            for i in 0..upto {
                let m = play_in_segment(&d, i);
                if self.opts.restrict_two_moves && m.removed == 2 && d.len != 2 {
                    continue;
                }
                let mut child = key.clone();
                child.remove(idx);
                child.extend(m.pieces.iter().map(|p| p.code()));
                self.canonicalize(&mut child);
                edges.push((
                    idx,
                    i,
                    Edge {
                        side: m.side,
                        gain: m.removed as i32,
                        child,
                    },
                ));
            }
        }
        if self.opts.check_moves {
            self.check_moves(key, &edges);
        }
        Expansion::Moves(edges.into_iter().map(|(_, _, e)| e).collect())
    }

    fn audit(&self, key: &ConfigKey, value: RelScores) {
        if self.opts.check_moves {
            let n: usize = key.iter().map(|&c| (c / 2) as usize).sum();
            assert!(value.parity_ok(n), "parity violated at {key:?}");
            assert!(value.ls >= value.rs, "zugzwang at {key:?}");
        }
    }
}

fn config_of(key: &[u16]) -> SegmentConfig {
    SegmentConfig::new(key.iter().map(|&c| SegmentDescriptor::from_code(c)).collect())
}

/// Removes pairs of equal even segments and pairs of opposite odd
/// segments of equal length from a sorted key.
fn cancel_inverses(key: &mut ConfigKey) {
    let mut out = ConfigKey::new();
    let mut i = 0;
    while i < key.len() {
        let len = key[i] / 2;
        let mut j = i;
        let (mut minus, mut plus) = (0usize, 0usize);
        while j < key.len() && key[j] / 2 == len {
            if key[j] % 2 == 1 {
                plus += 1;
            } else {
                minus += 1;
            }
            j += 1;
        }
        if len.is_multiple_of(2) {
            if minus % 2 == 1 {
                out.push(len * 2);
            }
        } else if minus > plus {
            out.extend(std::iter::repeat_n(len * 2, minus - plus));
        } else {
            out.extend(std::iter::repeat_n(len * 2 + 1, plus - minus));
        }
        i = j;
    }
    *key = out;
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::OddClass;
    use crate::solver::{rel_scores, SolveOptions};

    fn cfg(parts: &[(usize, OddClass)]) -> SegmentConfig {
        SegmentConfig::new(
            parts
                .iter()
                .map(|&(n, c)| SegmentDescriptor::new(n, c).unwrap())
                .collect(),
        )
    }

    #[test]
    fn cancellation() {
        let mut k: ConfigKey = SmallVec::from_slice(&[4, 4, 4, 10, 11, 11, 14]);
        cancel_inverses(&mut k);
        assert_eq!(k.as_slice(), &[4, 11, 14]);
    }

    #[test]
    fn small_segments_match_graph_solver() {
        let checked = SegmentSolver::with_options(SegmentOptions {
            check_moves: true,
            ..SegmentOptions::exhaustive()
        });
        for n in 2..=11 {
            let class = OddClass::default_for(n);
            for class in [class, class.negated()] {
                let c = cfg(&[(n, class)]);
                let g = c.to_graph().unwrap();
                assert_eq!(checked.rel_scores(&c), rel_scores(&g, SolveOptions::plain()), "{c}");
            }
        }
    }

    #[test]
    fn single_vertices_are_offsets() {
        let s = SegmentSolver::new();
        assert_eq!(s.rel_scores(&cfg(&[(1, OddClass::Minus)])), RelScores { ls: -1, rs: -1 });
        assert_eq!(s.rel_scores(&cfg(&[(1, OddClass::Plus)])), RelScores { ls: 1, rs: 1 });
        assert_eq!(s.rel_scores(&SegmentConfig::default()), RelScores::ZERO);
    }

    #[test]
    fn quad_is_constant_sum() {
        let s = SegmentSolver::new();
        let c = cfg(&[(5, OddClass::Minus), (4, OddClass::None)]);
        let q = s.quad(&c);
        assert_eq!(q.sl1 + q.sr2, 9);
        assert_eq!(q.sl2 + q.sr1, 9);
    }
}
