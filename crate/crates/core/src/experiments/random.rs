//! Seeded random instances.

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::graph::{GameGraph, Position, Side};

pub type SuiteRng = ChaCha8Rng;

pub fn rng(seed: u64) -> SuiteRng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// `n` vertices with uniform colors; each ordered pair is an arc with
/// probability `density`.
pub fn random_graph<R: Rng>(rng: &mut R, n: usize, density: f64) -> GameGraph {
    let colors = (0..n)
        .map(|_| if rng.gen::<bool>() { Side::Left } else { Side::Right })
        .collect();
    let mut arcs = Vec::new();
    for a in 0..n {
        for b in 0..n {
            if a != b && rng.gen_bool(density) {
                arcs.push((a, b));
            }
        }
    }
    GameGraph::new(colors, arcs).expect("random graph is well formed")
}

/// A relevant graph on `min_n..=max_n` vertices: a random graph of
/// `max_n` vertices cut down to its relevant core, redrawn until the core
/// is large enough.
pub fn random_relevant_graph<R: Rng>(rng: &mut R, min_n: usize, max_n: usize) -> GameGraph {
    assert!(min_n <= max_n);
    loop {
        let n = rng.gen_range(min_n.max(1)..=max_n);
        let density = rng.gen_range(0.1..0.45);
        let g = random_graph(rng, n, density);
        let core = Position::initial(&g).relevant_reduce();
        if core.alive().len() >= min_n {
            return g.induced(core.alive()).0;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn relevant_and_sized() {
        let mut r = rng(1);
        for _ in 0..100 {
            let g = random_relevant_graph(&mut r, 2, 9);
            assert!((2..=9).contains(&g.len()));
            assert!(g.is_relevant_within(&g.all_vertices()));
        }
    }

    #[test]
    fn seeded() {
        let a = random_graph(&mut rng(5), 8, 0.3);
        let b = random_graph(&mut rng(5), 8, 0.3);
        assert_eq!(a, b);
    }
}
