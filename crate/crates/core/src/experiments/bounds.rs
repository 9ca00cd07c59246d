//! Trees that favour the player with few vertices, and the matching bound
//! on quasi-paths.

use std::time::Instant;

use serde_json::json;

use crate::bitset::VertexSet;
use crate::families::{forest_signatures, make_j, make_tree, random_quasi_paths, TreeSpec};
use crate::graph::{GameGraph, Position, Side};
use crate::solver::{solve, SolveOptions};

use super::general::Tally;
use super::random::rng;
use super::{
    Claim, SuiteParams, VerifyReport, QUASI_PATH_MAX_LEN, QUASI_PATH_TRIALS, TREE_EXACT_MAX_N, TREE_MAX_C,
};

/// `J_1^c` is solved exactly only up to this fan-out.
const TREE_J1_MAX_C: u32 = 3;
/// The leaf-removal decomposition is checked structurally up to this depth.
const TREE_STRUCTURAL_MAX_N: u32 = 2;

fn corollary_bound(n: u32, c: u32) -> u64 {
    (1u64 << n) * u64::from(n + c) + 1
}

/// Exact `s_1^R(J_n^c)` on the solvable range, the bound it is compared
/// to, and the leaf-removal decomposition of `T_n^c`.
pub fn tree_bounds(n_max: u32, c_max: u32) -> VerifyReport {
    let started = Instant::now();
    let mut report = VerifyReport::new("trees", 0);

    let mut exact: Vec<(u32, u32, u32, usize, usize)> = Vec::new();
    for n in 0..=n_max.min(TREE_EXACT_MAX_N) {
        let c_top = if n == 0 { c_max } else { c_max.min(TREE_J1_MAX_C) };
        for c in 1..=c_top {
            let j = make_j(TreeSpec::new(n, c));
            let q = solve(&j, SolveOptions::default());
            exact.push((n, c, q.sr1, q.sl2 as usize, j.len()));
        }
    }
    let s1r = |n: u32, c: u32| exact.iter().find(|e| e.0 == n && e.1 == c).map(|e| e.2);

    let mut equality = Tally::new("j0-equality", "Corollary 8, met with equality on J_0^c");
    let mut bound = Tally::new("upper-bound", "Corollary 8, upper bound on s_1^R");
    let mut recurrence = Tally::new("recurrence", "Lemma 9, recurrence on s_1^R");
    let mut rows = Vec::new();
    for &(n, c, sr1, sl2, v) in &exact {
        let w = || json!({"n": n, "c": c, "sR1": sr1});
        if n == 0 {
            equality.check(sr1 == c + 1, w);
        }
        bound.check(u64::from(sr1) <= corollary_bound(n, c), w);
        let earlier: Option<u32> = (0..n).map(|i| s1r(i, c)).sum();
        if let Some(earlier) = earlier {
            recurrence.check(sr1 <= n + 1 + c + earlier, w);
        }
        let left = 3usize.pow(n + 1) - 1;
        rows.push(json!({
            "n": n, "c": c, "vertices": v, "sR1": sr1, "bound": corollary_bound(n, c),
            "left_fraction": left as f64 / v as f64,
            "sL2_fraction": sl2 as f64 / v as f64,
        }));
    }

    // deeper trees favour Left more; wider fan-out dilutes L
    let mut trend = Tally::new("trend", "Theorem 3, trend in n and c");
    for &(n, c, _, sl2, v) in exact.iter().filter(|e| e.0 >= 1) {
        if let Some(&(_, _, _, sl2_prev, v_prev)) = exact.iter().find(|e| e.0 == n - 1 && e.1 == c) {
            trend.check(sl2 * v_prev >= sl2_prev * v, || json!({"n": n, "c": c}));
        }
    }
    for n in 0..=n_max.max(TREE_STRUCTURAL_MAX_N) {
        for c in 1..c_max {
            let a = TreeSpec::new(n, c);
            let b = TreeSpec::new(n, c + 1);
            let la = 2 * a.left_count();
            let lb = 2 * b.left_count();
            trend.check(lb * 2 * a.vertex_count() < la * 2 * b.vertex_count(), || json!({"n": n, "c": c}));
        }
    }

    let mut left_count = Tally::new("left-count", "Theorem 3, count of L-vertices");
    for n in 0..=3 {
        let j = make_j(TreeSpec::new(n, 2));
        left_count.check(j.count(Side::Left) == 3usize.pow(n + 1) - 1, || json!({"n": n}));
    }

    let mut lemma8 = Tally::new("leaf-decomposition", "Lemma 8, leaf removal");
    for n in 0..=TREE_STRUCTURAL_MAX_N.min(n_max.max(TREE_STRUCTURAL_MAX_N)) {
        for c in 1..=c_max.min(4) {
            let t = make_tree(TreeSpec::new(n, c));
            let mut expected: Vec<String> = Vec::new();
            for k in 0..n {
                let j = make_j(TreeSpec::new(k, c));
                expected.extend(forest_signatures(&j, &j.all_vertices()).expect("forest"));
            }
            expected.sort();
            let p = Position::initial(&t);
            for y in (0..t.len()).filter(|&v| t.color(v) == Side::Right) {
                let removed = p.rmv(y).expect("tree is relevant").vertices;
                let rest: VertexSet = t.all_vertices().difference(&removed);
                let got = forest_signatures(&t, &rest);
                lemma8.check(got.as_ref() == Some(&expected), || {
                    json!({"n": n, "c": c, "leaf": y, "components": got.map(|g| g.len())})
                });
            }
        }
    }

    for t in [equality, bound, recurrence, trend, left_count, lemma8] {
        report.push(t.claim());
    }
    report.push(Claim::report(
        "proportions",
        "Theorem 3, proportions on the solvable range",
        true,
        json!({"rows": rows}),
    ));
    report.finish(started);
    report
}

fn is_path_collection(g: &GameGraph) -> bool {
    let all = g.all_vertices();
    let comps = g.components_within(&all);
    let degree_ok = (0..g.len()).all(|v| g.successors(v).len() + g.predecessors(v).len() <= 2);
    degree_ok && g.arcs().len() + comps.len() == g.len()
}

/// Checks `s_2^L(G)/|V| <= (2+u)/3` on `trials` random relevant
/// collections of quasi-paths with at most `max_len` vertices in total.
pub fn quasi_path_bound(trials: usize, max_len: usize, seed: u64) -> VerifyReport {
    let started = Instant::now();
    let mut r = rng(seed);
    let mut shape = Tally::new("quasi-path-shape", "Definition 8, quasi-path shape");
    let mut bound = Tally::new("score-bound", "Theorem 4, score bound");
    let mut rows = Vec::with_capacity(trials);
    let mut rejections = 0;
    let mut half = 0;
    for _ in 0..trials {
        let sample = random_quasi_paths(&mut r, 4.min(max_len), max_len, 3);
        rejections += sample.rejections;
        let g = &sample.graph;
        let text = || super::graph_text(g);
        shape.check(
            is_path_collection(g) && g.is_relevant_within(&g.all_vertices()),
            || json!({"graph": text()}),
        );
        let q = solve(g, SolveOptions::default());
        let n = g.len();
        let n_left = g.count(Side::Left);
        // s/n <= (2 + nL/n)/3  <=>  3 s <= 2n + nL
        let ok = 3 * q.sl2 as usize <= 2 * n + n_left;
        bound.check(ok, || json!({"graph": text(), "sL2": q.sl2, "n": n, "nL": n_left}));
        if 2 * n_left == n {
            half += 1;
        }
        let u = n_left as f64 / n as f64;
        rows.push(json!([n, n_left, u, q.sl2 as f64 / n as f64, (2.0 + u) / 3.0]));
    }
    let mut report = VerifyReport::new("quasi-paths", seed);
    report.push(shape.claim());
    report.push(bound.claim());
    report.push(Claim::report(
        "instances",
        "Theorem 4, per-instance ratios (n, nL, u, ratio, bound)",
        true,
        json!({"rejections": rejections, "u_half": half, "rows": rows}),
    ));
    report.finish(started);
    report
}

pub(super) fn trees(params: &SuiteParams, seed: u64) -> VerifyReport {
    let n_max = params.max_n.map_or(TREE_EXACT_MAX_N, |n| n as u32);
    let mut report = tree_bounds(n_max, TREE_MAX_C);
    report.seed = seed;
    report
}

pub(super) fn quasi_paths(params: &SuiteParams, seed: u64) -> VerifyReport {
    let max_len = params.max_vertices.unwrap_or(QUASI_PATH_MAX_LEN);
    quasi_path_bound(params.trials(QUASI_PATH_TRIALS), max_len, seed)
}
