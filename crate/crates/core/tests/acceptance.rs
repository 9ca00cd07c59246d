//! Acceptance gate: one PASS/FAIL line per criterion.
//!
//! Runs without the libtest harness so the criteria execute one after the
//! other and their timings are not distorted by sibling tests. The process
//! exits nonzero on any failure except the single documented one (the
//! 4-cycle, criterion 6).

mod common;

use std::time::{Duration, Instant};

use influence_core::experiments::random::rng;
use influence_core::experiments::{
    enumerate_configs, quasi_path_bound, run_suite, tree_bounds, SuiteParams, VerifyReport, DEFAULT_SEED,
};
use influence_core::families::{
    make_cycle, make_j, periodic_on, random_quasi_paths, segment_table_with, OddClass, SegmentConfig,
    SegmentDescriptor as D, SegmentOptions, SegmentSolver, TableRow, TreeSpec,
};
use influence_core::solver::{rel_scores, solve};
use influence_core::{GameGraph, GraphDoc, Parallelism, ScoreQuad, Side, SolveOptions};

use common::{naive, seg_even, seg_minus, seg_plus, sum, TABLE_LS, TABLE_RS};

const FIGURE1: &str = "influence v1\nv 0 L\nv 1 R\nv 2 L\nv 3 R\nv 4 R\nv 5 R\na 0 2\na 1 2\na 2 4\na 2 5\na 3 1\na 3 5\n";

struct Outcome {
    pass: bool,
    detail: String,
    /// Failure matching a documented, unattainable part of the criterion.
    documented: bool,
}

impl Outcome {
    fn new(pass: bool, detail: String) -> Self {
        Outcome {
            pass,
            detail,
            documented: false,
        }
    }
}

#[derive(Default)]
struct Gate {
    unexpected: Vec<u32>,
    documented: Vec<u32>,
}

impl Gate {
    fn run(&mut self, id: u32, name: &str, f: impl FnOnce() -> Outcome) {
        let started = Instant::now();
        let out = f();
        let tag = if out.pass { "PASS" } else { "FAIL" };
        println!("{tag} {id:>2} {name:<34} {:>8.2?}  {}", started.elapsed(), out.detail);
        if !out.pass {
            if out.documented {
                self.documented.push(id);
            } else {
                self.unexpected.push(id);
            }
        }
    }
}

fn timed<T>(f: impl FnOnce() -> T) -> (T, Duration) {
    let t = Instant::now();
    let v = f();
    (v, t.elapsed())
}

fn all_hard_pass(r: &VerifyReport) -> Result<usize, String> {
    let failed: Vec<&str> = r.failures().map(|c| c.id.as_str()).collect();
    if failed.is_empty() {
        Ok(r.claims.len())
    } else {
        Err(format!("{}: {}", r.suite, failed.join(", ")))
    }
}

fn checked(r: &VerifyReport, id: &str) -> u64 {
    r.claim(id).and_then(|c| c.witness["checked"].as_u64()).unwrap_or(0)
}

fn criterion_1() -> Outcome {
    let doc = GraphDoc::parse(FIGURE1).expect("fixture parses");
    let g = &doc.graph;
    // warm allocator and code paths once; the timed solve is a fresh one
    solve(g, SolveOptions::default());
    let (q, t) = timed(|| solve(g, SolveOptions::default()));
    let rel = q.rel();
    let expected = ScoreQuad {
        sl1: 4,
        sl2: 0,
        sr1: 6,
        sr2: 2,
    };
    let oracle = naive(g);
    let pass = q == expected && (rel.ls, rel.rs) == (2, -6) && oracle == (2, -6) && t < Duration::from_millis(1);
    Outcome::new(
        pass,
        format!(
            "quad ({},{},{},{}) Ls={} Rs={} oracle={oracle:?} solve {t:.2?}",
            q.sl1, q.sl2, q.sr1, q.sr2, rel.ls, rel.rs
        ),
    )
}

fn criterion_2(solver: &SegmentSolver) -> Outcome {
    let (rows38, t38) = timed(|| segment_table_with(&SegmentSolver::new(), 38, OddClass::Minus, Parallelism::Sequential));
    let mismatches: Vec<usize> = rows38
        .iter()
        .filter(|r| (r.ls, r.rs) != (TABLE_LS[r.n - 1], TABLE_RS[r.n - 1]))
        .map(|r| r.n)
        .collect();
    let (rows80, t80) = timed(|| segment_table_with(solver, 80, OddClass::Minus, Parallelism::Sequential));
    let periodic = periodic_on(&rows80, 4, 38, 76);
    let rs77 = rows80[76].rs;
    // period 4 on 38..76 by direct comparison as well
    let direct = (38..=72).all(|n| (rows80[n - 1].ls, rows80[n - 1].rs) == (rows80[n + 3].ls, rows80[n + 3].rs));
    let pass = mismatches.is_empty()
        && t38 < Duration::from_secs(1)
        && periodic
        && direct
        && rs77 == -5
        && t80 < Duration::from_secs(30);
    Outcome::new(
        pass,
        format!(
            "76 values, mismatches {mismatches:?} in {t38:.2?}; period 4 on 38..76 {periodic}; Rs(S77)={rs77}; n=80 in {t80:.2?}"
        ),
    )
}

fn theorem1_ok(class: OddClass, count_left: usize, r: &TableRow) -> bool {
    match class {
        OddClass::None => [2, 4].contains(&r.ls) && [-2, -4].contains(&r.rs),
        OddClass::Minus => {
            [1, 3].contains(&r.ls) && [-1, -3, -5].contains(&r.rs) && (count_left.is_multiple_of(2) || r.ls == 3)
        }
        OddClass::Plus => {
            [1, 3, 5].contains(&r.ls) && [-1, -3].contains(&r.rs) && (count_left % 2 == 1 || r.rs == -3)
        }
    }
}

fn criterion_3(solver: &SegmentSolver) -> Outcome {
    let mut bad = Vec::new();
    let mut checked = 0;
    for odd in [OddClass::Minus, OddClass::Plus] {
        for r in segment_table_with(solver, 80, odd, Parallelism::Sequential).iter().skip(1) {
            let class = if r.n % 2 == 0 { OddClass::None } else { odd };
            if r.n % 2 == 0 && odd == OddClass::Plus {
                continue;
            }
            let left = match class {
                OddClass::Plus => r.n.div_ceil(2),
                _ => r.n / 2,
            };
            checked += 1;
            if !theorem1_ok(class, left, r) {
                bad.push((r.n, class, r.ls, r.rs));
            }
        }
    }
    // the oracle agrees on the short ones
    let mut oracle_bad = Vec::new();
    for n in 2..=16 {
        let cases: Vec<(GameGraph, OddClass)> = if n % 2 == 0 {
            vec![(seg_even(n), OddClass::None)]
        } else {
            vec![(seg_minus(n), OddClass::Minus), (seg_plus(n), OddClass::Plus)]
        };
        for (g, class) in cases {
            let r = solver.rel_scores(&SegmentConfig::single(D::new(n, class).unwrap()));
            if naive(&g) != (r.ls, r.rs) {
                oracle_bad.push((n, class));
            }
        }
    }
    Outcome::new(
        bad.is_empty() && oracle_bad.is_empty(),
        format!("{checked} segments in the theorem's sets; violations {bad:?}; oracle mismatches {oracle_bad:?}"),
    )
}

fn criterion_4() -> Outcome {
    // no inverse cancellation, so pts. 1 and 2 are computed, not assumed
    let solver = SegmentSolver::with_options(SegmentOptions {
        cancel_inverses: false,
        ..SegmentOptions::default()
    });
    let rs = |parts: Vec<D>| solver.rel_scores(&SegmentConfig::new(parts)).rs;
    let mut bad = Vec::new();
    let mut oracle_bad = Vec::new();
    for k in 1..=6usize {
        let values = [
            rs(vec![D::even(2 * k), D::even(2 * k)]),
            rs(vec![D::minus(2 * k + 1), D::plus(2 * k + 1)]),
            rs(vec![D::even(2 * k), D::even(2 * k + 2)]),
            rs(vec![D::even(2 * k), D::plus(2 * k + 1)]),
            rs(vec![D::even(2 * k), D::plus(2 * k - 1)]),
        ];
        let ok = [values[0] == 0, values[1] == 0, values[2] == -2, values[3] == -1, values[4] >= -1];
        for (pt, holds) in ok.iter().enumerate() {
            if !holds {
                bad.push((k, pt + 1, values[pt]));
            }
        }
        if k <= 3 {
            let single_l = GameGraph::new(vec![Side::Left], []).unwrap();
            let shorter = if k == 1 { single_l } else { seg_plus(2 * k - 1) };
            let graphs = [
                sum(&[seg_even(2 * k), seg_even(2 * k)]),
                sum(&[seg_minus(2 * k + 1), seg_plus(2 * k + 1)]),
                sum(&[seg_even(2 * k), seg_even(2 * k + 2)]),
                sum(&[seg_even(2 * k), seg_plus(2 * k + 1)]),
                sum(&[seg_even(2 * k), shorter]),
            ];
            for (pt, g) in graphs.iter().enumerate() {
                if naive(g).1 != values[pt] {
                    oracle_bad.push((k, pt + 1));
                }
            }
        }
    }
    Outcome::new(
        bad.is_empty() && oracle_bad.is_empty(),
        format!("30 identities for k=1..6; violations {bad:?}; oracle mismatches (k<=3) {oracle_bad:?}"),
    )
}

fn criterion_5() -> Outcome {
    let solver = SegmentSolver::new();
    let a = solver.rel_scores(&SegmentConfig::new(vec![D::plus(5), D::plus(17)]));
    let b = solver.rel_scores(&SegmentConfig::new(vec![D::even(10), D::minus(17)]));
    let oracle_a = naive(&sum(&[seg_plus(5), seg_plus(17)]));
    let oracle_b = naive(&sum(&[seg_even(10), seg_minus(17)]));
    let pass = a.ls == 6 && b.ls == -1 && oracle_a.0 == a.ls && oracle_b.0 == b.ls;
    Outcome::new(
        pass,
        format!(
            "Ls(S5+ + S17+)={} (oracle {}), Ls(S10 + S17-)={} (oracle {})",
            a.ls, oracle_a.0, b.ls, oracle_b.0
        ),
    )
}

fn criterion_6() -> Outcome {
    let (values, t) = timed(|| {
        (4..=40)
            .step_by(2)
            .map(|n| (n, rel_scores(&make_cycle(n).unwrap(), SolveOptions::default()).ls))
            .collect::<Vec<_>>()
    });
    let outside: Vec<(usize, i32)> = values.iter().copied().filter(|&(_, ls)| ls != 0 && ls != 2).collect();
    let odd_left_bad: Vec<(usize, i32)> = values.iter().copied().filter(|&(n, ls)| (n / 2) % 2 == 1 && ls != 0).collect();
    let oracle_bad: Vec<usize> = (4..=16)
        .step_by(2)
        .filter(|&n| naive(&common::cycle(n)).0 != values[(n - 4) / 2].1)
        .collect();
    let in_time = t < Duration::from_secs(10);
    let pass = outside.is_empty() && odd_left_bad.is_empty() && oracle_bad.is_empty() && in_time;
    // C_4: the first move leaves one R-vertex, outside the segment family
    let documented = outside == [(4, 4)] && odd_left_bad.is_empty() && oracle_bad.is_empty() && in_time;
    Outcome {
        pass,
        detail: format!(
            "Ls outside {{0,2}}: {outside:?}; |L| odd with Ls != 0: {odd_left_bad:?}; oracle mismatches {oracle_bad:?}; {t:.2?}{}",
            if documented { " (documented: C4 has Ls=4, n=6..40 hold)" } else { "" }
        ),
        documented,
    }
}

fn criterion_7() -> Outcome {
    let params = SuiteParams::default();
    let props = run_suite("properties", &params, DEFAULT_SEED).unwrap();
    let milnor = run_suite("milnor", &params, DEFAULT_SEED).unwrap();
    let required = [
        "parity",
        "nonzugzwang",
        "subposition-monotonicity",
        "closure-evolution",
        "move-commutation",
        "rmv-characterizations",
        "pruning-parallel-determinism",
        "negation-antisymmetry",
        "sum-with-negative",
        "raw-vs-relevant",
    ];
    let missing: Vec<&str> = required.iter().copied().filter(|id| props.claim(id).is_none()).collect();
    let result = all_hard_pass(&props).and_then(|a| all_hard_pass(&milnor).map(|b| a + b));
    let instances = checked(&props, "sum-with-negative").min(checked(&milnor, "ls-lower"));
    let modes = checked(&props, "raw-vs-relevant");
    let pass = result.is_ok() && missing.is_empty() && instances >= 100;
    Outcome::new(
        pass,
        format!(
            "{}; missing {missing:?}; {instances} instances per random suite; {modes} graphs in mode check",
            match &result {
                Ok(n) => format!("{n} claims pass"),
                Err(e) => format!("failed {e}"),
            }
        ),
    )
}

fn criterion_8() -> Outcome {
    let report = tree_bounds(1, 6);
    let mut j0 = Vec::new();
    for c in 1..=6 {
        let q = solve(&make_j(TreeSpec::new(0, c)), SolveOptions::default());
        // bound 2^0 (0 + c) + 1 met with equality
        j0.push(q.sr1 == c + 1);
    }
    let mut j1 = Vec::new();
    for c in 1..=3 {
        let g = make_j(TreeSpec::new(1, c));
        let q = solve(&g, SolveOptions::default());
        let oracle = naive(&g);
        // Rs = s_2^L - s_1^R and s_2^L + s_1^R = |V|
        let sr1_oracle = (g.len() as i32 - oracle.1) / 2;
        j1.push(q.sr1 <= 2 * (1 + c) + 1 && q.sr1 as i32 == sr1_oracle);
    }
    let claims = ["leaf-decomposition", "trend", "j0-equality", "upper-bound", "recurrence", "left-count"];
    let claims_ok = claims
        .iter()
        .all(|id| report.claim(id).is_some_and(|c| !c.failed()));
    let pass = j0.iter().all(|&b| b) && j1.iter().all(|&b| b) && claims_ok && report.passed();
    Outcome::new(
        pass,
        format!("J0 equality {j0:?}; J1 bound+oracle {j1:?}; structural and trend claims {claims_ok}"),
    )
}

fn criterion_9() -> Outcome {
    let (report, t) = timed(|| quasi_path_bound(500, 20, DEFAULT_SEED));
    let bound = report.claim("score-bound").map(|c| !c.failed()).unwrap_or(false);
    // the oracle redraws the same instances and checks the bound itself
    let mut r = rng(DEFAULT_SEED);
    let mut violations = 0;
    for _ in 0..500 {
        let sample = random_quasi_paths(&mut r, 4, 20, 3);
        let g = &sample.graph;
        let (_, rs) = naive(g);
        let n = g.len() as i32;
        let sl2 = (n + rs) / 2;
        let nl = g.count(Side::Left) as i32;
        if 3 * sl2 > 2 * n + nl {
            violations += 1;
        }
    }
    let pass = bound && report.passed() && violations == 0 && t < Duration::from_secs(60);
    Outcome::new(
        pass,
        format!("500 instances, library bound holds {bound}, oracle violations {violations}, {t:.2?}"),
    )
}

fn criterion_10() -> Outcome {
    let configs = enumerate_configs(22, 3);
    let fast = SegmentSolver::new();
    let general = SolveOptions {
        segment_routing: false,
        ..SolveOptions::default()
    };
    let mut bad = Vec::new();
    let mut oracle_bad = Vec::new();
    for c in &configs {
        let g = c.to_graph().unwrap();
        let v = fast.rel_scores(c);
        if rel_scores(&g, general) != v {
            bad.push(c.to_string());
        }
        if c.total_len() <= 14 && naive(&g) != (v.ls, v.rs) {
            oracle_bad.push(c.to_string());
        }
    }
    Outcome::new(
        bad.is_empty() && oracle_bad.is_empty(),
        format!(
            "{} configs (<= 3 parts, total <= 22); mismatches {bad:?}; oracle mismatches (total <= 14) {oracle_bad:?}",
            configs.len()
        ),
    )
}

fn main() {
    let mut gate = Gate::default();
    let shared = SegmentSolver::new();
    gate.run(1, "figure 1 regression", criterion_1);
    gate.run(2, "table 1 and extension to 80", || criterion_2(&shared));
    gate.run(3, "theorem 1 membership, n <= 80", || criterion_3(&shared));
    gate.run(4, "lemma 7 identities, k = 1..6", criterion_4);
    gate.run(5, "special sums", criterion_5);
    gate.run(6, "cycles 4..40", criterion_6);
    gate.run(7, "property suites", criterion_7);
    gate.run(8, "tree family", criterion_8);
    gate.run(9, "quasi-path bound", criterion_9);
    gate.run(10, "segment solver vs general solver", criterion_10);
    println!(
        "acceptance: {} unexpected failure(s) {:?}, documented {:?}",
        gate.unexpected.len(),
        gate.unexpected,
        gate.documented
    );
    if !gate.unexpected.is_empty() {
        std::process::exit(1);
    }
}
