//! Relevant graphs whose underlying undirected graph is a path, and
//! collections of them.

use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::graph::{GameGraph, Side};

use super::FamilyError;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct QuasiPathSpec {
    pub colors: Vec<Side>,
    /// `forward[i]` orients the edge between vertices `i` and `i+1` as
    /// `i -> i+1`, otherwise `i+1 -> i`.
    pub forward: Vec<bool>,
}

impl QuasiPathSpec {
    pub fn arcs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.forward
            .iter()
            .enumerate()
            .map(|(i, &f)| if f { (i, i + 1) } else { (i + 1, i) })
    }

    /// The ordinary segment: alternating colors starting with `first`,
    /// every arc from `L` to `R`.
    pub fn alternating(len: usize, first: Side) -> Self {
        let colors: Vec<Side> = (0..len)
            .map(|i| if i % 2 == 0 { first } else { first.opponent() })
            .collect();
        let forward = (0..len.saturating_sub(1)).map(|i| colors[i] == Side::Left).collect();
        QuasiPathSpec { colors, forward }
    }

    fn raw_graph(&self) -> Result<GameGraph, FamilyError> {
        if self.colors.is_empty() || self.forward.len() + 1 != self.colors.len() {
            return Err(FamilyError::LengthMismatch {
                vertices: self.colors.len(),
                edges: self.forward.len(),
            });
        }
        Ok(GameGraph::new(self.colors.clone(), self.arcs()).expect("path is well formed"))
    }
}

/// The quasi-path of `spec`; fails unless the graph is relevant.
pub fn make_quasi_path(spec: &QuasiPathSpec) -> Result<GameGraph, FamilyError> {
    make_quasi_paths(std::slice::from_ref(spec))
}

/// Disjoint sum of the given quasi-paths; fails unless relevant.
pub fn make_quasi_paths(specs: &[QuasiPathSpec]) -> Result<GameGraph, FamilyError> {
    let mut g = GameGraph::empty();
    for s in specs {
        g = g.disjoint_sum(&s.raw_graph()?);
    }
    if !g.is_relevant_within(&g.all_vertices()) {
        return Err(FamilyError::NotRelevant);
    }
    Ok(g)
}

/// A relevant collection drawn by rejection, with the number of rejected
/// draws.
#[derive(Clone, Debug)]
pub struct QuasiPathSample {
    pub specs: Vec<QuasiPathSpec>,
    pub graph: GameGraph,
    pub rejections: usize,
}

/// Draws component lengths (each ≥ 2, total in `min_total..=max_total`,
/// at most `max_parts` parts), then uniform colors and orientations,
/// retrying until the result is relevant.
pub fn random_quasi_paths<R: Rng>(
    rng: &mut R,
    min_total: usize,
    max_total: usize,
    max_parts: usize,
) -> QuasiPathSample {
    assert!(min_total >= 2 && min_total <= max_total && max_parts >= 1);
    let mut rejections = 0;
    loop {
        let total = rng.gen_range(min_total..=max_total);
        let parts = rng.gen_range(1..=max_parts.min(total / 2));
        let mut lens = vec![2; parts];
        for _ in 0..total - 2 * parts {
            let k = rng.gen_range(0..parts);
            lens[k] += 1;
        }
        let specs: Vec<QuasiPathSpec> = lens
            .iter()
            .map(|&len| QuasiPathSpec {
                colors: (0..len)
                    .map(|_| if rng.gen::<bool>() { Side::Left } else { Side::Right })
                    .collect(),
                forward: (0..len - 1).map(|_| rng.gen()).collect(),
            })
            .collect();
        match make_quasi_paths(&specs) {
            Ok(graph) => {
                return QuasiPathSample {
                    specs,
                    graph,
                    rejections,
                }
            }
            Err(_) => rejections += 1,
        }
    }
}
