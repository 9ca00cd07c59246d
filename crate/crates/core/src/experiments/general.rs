//! Suites on general graphs.

use rand::Rng;
use serde_json::{json, Value};

use crate::bitset::VertexSet;
use crate::families::{segment_doc, OddClass};
use crate::graph::{example_graph, GameGraph, MoveMode, Position, Side};
use crate::solver::{milnor_bounds_check, solve, RelScores, ScoreQuad, SolveOptions, Solver};

use super::closure::{closure_graph, relation_representatives};
use super::random::{random_graph, random_relevant_graph, rng};
use super::{
    graph_text, Claim, SuiteParams, VerifyReport, DEFAULT_TRIALS, MODE_MAX_VERTICES, PROPERTY_MAX_VERTICES,
};

/// Counts checks of one property and keeps the first counterexample.
pub(super) struct Tally {
    id: &'static str,
    anchor: &'static str,
    checked: usize,
    violations: usize,
    first: Option<Value>,
}

impl Tally {
    pub(super) fn new(id: &'static str, anchor: &'static str) -> Self {
        Tally {
            id,
            anchor,
            checked: 0,
            violations: 0,
            first: None,
        }
    }

    pub(super) fn check(&mut self, ok: bool, witness: impl FnOnce() -> Value) {
        self.checked += 1;
        if !ok {
            self.violations += 1;
            if self.first.is_none() {
                self.first = Some(witness());
            }
        }
    }

    pub(super) fn claim(self) -> Claim {
        let ok = self.violations == 0 && self.checked > 0;
        Claim::hard(
            self.id,
            self.anchor,
            ok,
            json!({
                "checked": self.checked,
                "violations": self.violations,
                "first_violation": self.first,
            }),
        )
    }
}

fn quad_json(q: ScoreQuad) -> Value {
    serde_json::to_value(q).expect("quad serializes")
}

pub(super) fn figure1(_: &SuiteParams, seed: u64) -> VerifyReport {
    let mut report = VerifyReport::new("figure1", seed);
    let g = example_graph();
    let expected = ScoreQuad {
        sl1: 4,
        sl2: 0,
        sr1: 6,
        sr2: 2,
    };
    let modes = [
        ("raw", SolveOptions::raw()),
        ("relevant", SolveOptions::plain()),
        ("pruned", SolveOptions::default()),
    ];
    for (name, opts) in modes {
        let q = solve(&g, opts);
        let anchor = if name == "raw" {
            "Remark 1, raw recursion on the example"
        } else {
            "Example 1, score quad"
        };
        report.push(Claim::hard(
            &format!("quad-{name}"),
            anchor,
            q == expected,
            json!({"graph": graph_text(&g), "quad": quad_json(q)}),
        ));
    }
    let rel = solve(&g, SolveOptions::default()).rel();
    report.push(Claim::hard(
        "rel-scores",
        "Definition 2, Ls and Rs of Example 1",
        rel == RelScores { ls: 2, rs: -6 },
        json!({"ls": rel.ls, "rs": rel.rs}),
    ));

    let p = Position::initial(&g);
    let solver = Solver::new(&g, SolveOptions::default());
    let l = solver.best_move(&p, Side::Left).map(|m| m.vertex).ok();
    let r = solver.best_move(&p, Side::Right).map(|m| m.vertex).ok();
    report.push(Claim::hard(
        "best-moves",
        "Example 1, best moves",
        l == Some(0) && r == Some(4),
        json!({"left": l, "right": r}),
    ));

    let single = |side| GameGraph::new(vec![side], []).expect("one vertex");
    let ql = solve(&single(Side::Left), SolveOptions::raw());
    let qr = solve(&single(Side::Right), SolveOptions::raw());
    let q0 = solve(&GameGraph::empty(), SolveOptions::raw());
    report.push(Claim::hard(
        "initial-conditions",
        "Remark 2, initial conditions",
        (ql.sl1, ql.sl2, ql.sr1, ql.sr2) == (1, 1, 0, 0)
            && qr.rel() == RelScores { ls: -1, rs: -1 }
            && q0.rel() == RelScores::ZERO,
        json!({"left": quad_json(ql), "right": quad_json(qr), "empty": quad_json(q0)}),
    ));

    let (fl, fr) = p.forced_sets();
    report.push(Claim::hard(
        "forced-sets",
        "Definition 3, forced vertices of Example 1",
        fl.is_empty() && fr.to_vec() == [1, 3],
        json!({"left": fl.to_vec(), "right": fr.to_vec()}),
    ));
    let reduced = p.relevant_reduce();
    report.push(Claim::hard(
        "relevant-reduce",
        "Definition 4, forced vertices banked",
        reduced.alive().to_vec() == [0, 2, 4, 5] && (reduced.credit_left, reduced.credit_right) == (0, 2),
        json!({"alive": reduced.alive().to_vec(), "credits": [reduced.credit_left, reduced.credit_right]}),
    ));

    // label 4 of the segment [1,5], then label 4 of the segment [2,6]
    let rmv_labels = |class, offset| {
        let doc = segment_doc(5, class).expect("segment");
        let p = Position::initial(&doc.graph);
        let removed = p.rmv(offset).expect("relevant segment").vertices;
        removed.iter().map(|v| doc.ids[v]).collect::<Vec<u64>>()
    };
    let three = rmv_labels(OddClass::Minus, 3);
    let five = rmv_labels(OddClass::Plus, 2);
    report.push(Claim::hard(
        "rmv-segments",
        "Definition 4, Rmv on segments",
        three == [3, 4, 5] && five == [0, 1, 2, 3, 4],
        json!({"minus_5_play_4": three, "plus_5_play_2": five}),
    ));

    // x = 0 and x' = 1 on the left, 2, 4, 5 on the right
    let fig2 = GameGraph::new(
        vec![Side::Left, Side::Left, Side::Right, Side::Left, Side::Right, Side::Right],
        [(0, 2), (1, 2), (2, 4), (2, 5), (3, 5), (0, 4), (1, 3)],
    )
    .expect("figure graph");
    let all = fig2.all_vertices();
    let succ = fig2.succ_within(0, &all);
    let (forced_after, _) = fig2.forced_within(&all.difference(&succ));
    let (rmv, forced) = fig2.rmv_within(0, &all);
    report.push(Claim::hard(
        "figure2-forced-after-move",
        "Figure 2, vertex forced by a capture",
        fig2.is_relevant_within(&all) && forced_after.contains(1) && rmv == all && forced.to_vec() == [1, 3],
        json!({"succ": succ.to_vec(), "forced": forced.to_vec(), "rmv": rmv.to_vec()}),
    ));
    report
}

fn child_quad(solver: &Solver<'_>, g: &GameGraph, alive: &VertexSet) -> ScoreQuad {
    let rel = solver.position_scores(&Position::with_alive(g, alive.clone()));
    ScoreQuad::from_rel(rel, alive.len())
}

pub(super) fn properties(params: &SuiteParams, seed: u64) -> VerifyReport {
    let trials = params.trials(DEFAULT_TRIALS);
    let max_v = params.max_vertices.unwrap_or(PROPERTY_MAX_VERTICES);
    let mut r = rng(seed);

    let mut parity = Tally::new("parity", "Lemma 1, parity");
    let mut nonzugzwang = Tally::new("nonzugzwang", "Corollary 1, nonzugzwang");
    let mut monotone = Tally::new("subposition-monotonicity", "Lemma 4, subposition monotonicity");
    let mut evolution = Tally::new("closure-evolution", "Lemma 2, closures after a move");
    let mut commute = Tally::new("move-commutation", "Lemma 3, commuting moves");
    let mut remark3 = Tally::new("rmv-characterizations", "Remark 3, two definitions of Rmv");
    let mut pruning = Tally::new("pruning-parallel-determinism", "Corollary 2, included moves are dominated");
    let mut negation = Tally::new("negation-antisymmetry", "Corollary 4, Ls(-H) = -Rs(H)");
    let mut inverse = Tally::new("sum-with-negative", "Corollary 4, H + (-H) scores zero");
    let mut modes = Tally::new("raw-vs-relevant", "Corollary 1, passing is of no interest");
    let mut closure = Tally::new("closure-invariance", "Lemma 2, scores depend on reachability only");

    for _ in 0..trials {
        let g = random_relevant_graph(&mut r, 2, max_v);
        let text = || graph_text(&g);
        let solver = Solver::new(&g, SolveOptions::plain());
        let q = solver.solve();
        for (alive, v) in solver.memo().entries() {
            parity.check(v.parity_ok(alive.len()), || {
                json!({"graph": text(), "alive": alive.to_vec(), "value": v})
            });
            nonzugzwang.check(v.ls >= v.rs, || {
                json!({"graph": text(), "alive": alive.to_vec(), "value": v})
            });
        }
        parity.check(q.rel().parity_ok(g.len()), || json!({"graph": text(), "quad": quad_json(q)}));
        nonzugzwang.check(q.sl1 >= q.sl2 && q.sr1 >= q.sr2, || {
            json!({"graph": text(), "quad": quad_json(q)})
        });

        for opts in [
            SolveOptions::default(),
            SolveOptions { parallel_root: true, ..SolveOptions::default() },
            SolveOptions { pruning: true, segment_routing: false, ..SolveOptions::plain() },
        ] {
            let other = solve(&g, opts);
            pruning.check(other == q, || {
                json!({"graph": text(), "plain": quad_json(q), "other": quad_json(other), "opts": format!("{opts:?}")})
            });
        }

        let neg = solve(&g.negative(), SolveOptions::default()).rel();
        let rel = q.rel();
        negation.check(neg.ls == -rel.rs && neg.rs == -rel.ls, || {
            json!({"graph": text(), "g": rel, "negative": neg})
        });

        let p = Position::initial(&g);
        let mut rmv = Vec::with_capacity(g.len());
        for v in 0..g.len() {
            let removed = p.rmv(v).expect("relevant instance").vertices;
            let alt = g.rmv_by_inclusion_within(v, p.alive());
            remark3.check(removed == alt, || {
                json!({"graph": text(), "vertex": v, "rmv": removed.to_vec(), "inclusion": alt.to_vec()})
            });
            rmv.push(removed);
        }

        for v in 0..g.len() {
            let side = g.color(v);
            let child = p.apply_move(side, v, MoveMode::Relevant).expect("legal move");
            let cq = child_quad(&solver, &g, child.alive());
            let ok = match side {
                Side::Right => q.sl1 >= cq.sl1 && q.sl2 >= cq.sl2,
                Side::Left => q.sr1 >= cq.sr1 && q.sr2 >= cq.sr2,
            };
            monotone.check(ok, || {
                json!({"graph": text(), "vertex": v, "g": quad_json(q), "child": quad_json(cq)})
            });
            for w in child.alive() {
                let succ = p.succ_closure(w).unwrap().intersection(child.alive());
                let pred = p.pred_closure(w).unwrap().intersection(child.alive());
                let ok = child.succ_closure(w).unwrap() == succ && child.pred_closure(w).unwrap() == pred;
                evolution.check(ok, || json!({"graph": text(), "move": v, "vertex": w}));
            }
        }

        let after = |first: usize, second: usize| -> Option<VertexSet> {
            let c = p.apply_move(g.color(first), first, MoveMode::Relevant).ok()?;
            if !c.is_alive(second) {
                return None;
            }
            Some(c.apply_move(g.color(second), second, MoveMode::Relevant).ok()?.alive().clone())
        };
        for x in 0..g.len() {
            for x2 in 0..g.len() {
                if x == x2 {
                    continue;
                }
                let witness = || json!({"graph": text(), "x": x, "x2": x2});
                if g.color(x) == g.color(x2) {
                    if rmv[x].contains(x2) {
                        commute.check(rmv[x2].is_subset(&rmv[x]), witness);
                        if !rmv[x2].contains(x) {
                            let gx = p.alive().difference(&rmv[x]);
                            commute.check(after(x2, x).as_ref() == Some(&gx), witness);
                        }
                    } else if !rmv[x2].contains(x) {
                        commute.check(after(x, x2).is_some() && after(x, x2) == after(x2, x), witness);
                    }
                } else if !rmv[x2].contains(x) {
                    let gx = p.apply_move(g.color(x), x, MoveMode::Relevant).unwrap();
                    let same = gx.rmv(x2).map(|s| s.vertices).ok() == Some(rmv[x2].clone());
                    commute.check(same && after(x, x2) == after(x2, x), witness);
                }
            }
        }
    }

    // the sum of a graph and its negative stays within the size cap
    for _ in 0..trials {
        let h = random_relevant_graph(&mut r, 1, (max_v / 2).max(1));
        let s = solve(&h.disjoint_sum(&h.negative()), SolveOptions::default()).rel();
        inverse.check(s == RelScores::ZERO, || json!({"graph": graph_text(&h), "sum": s}));
    }

    // every coloring of every reachability relation, up to relabeling
    for n in 0..=MODE_MAX_VERTICES.min(max_v) {
        for rel in relation_representatives(n) {
            for mask in 0u32..(1 << n) {
                check_modes(&mut modes, &rel.to_graph(coloring(n, mask)));
            }
        }
    }
    for _ in 0..trials {
        let n = r.gen_range(1..=max_v);
        let density = r.gen_range(0.05..0.4);
        let g = random_graph(&mut r, n, density);
        let c = closure_graph(&g);
        for opts in [SolveOptions::raw(), SolveOptions::default()] {
            let (a, b) = (solve(&g, opts), solve(&c, opts));
            closure.check(a == b, || json!({"graph": graph_text(&g), "g": quad_json(a), "closure": quad_json(b)}));
        }
    }

    let mut report = VerifyReport::new("properties", seed);
    for t in [
        parity, nonzugzwang, monotone, evolution, commute, remark3, pruning, negation, inverse, modes, closure,
    ] {
        report.push(t.claim());
    }
    report
}

fn coloring(n: usize, mask: u32) -> Vec<Side> {
    (0..n).map(|i| if mask >> i & 1 == 1 { Side::Left } else { Side::Right }).collect()
}

fn check_modes(tally: &mut Tally, g: &GameGraph) {
    let raw = solve(g, SolveOptions::raw());
    let rel = solve(g, SolveOptions::plain());
    let fast = solve(g, SolveOptions::default());
    tally.check(raw == rel && rel == fast, || {
        json!({"graph": graph_text(g), "raw": quad_json(raw), "relevant": quad_json(rel), "pruned": quad_json(fast)})
    });
}

pub(super) fn milnor(params: &SuiteParams, seed: u64) -> VerifyReport {
    let trials = params.trials(DEFAULT_TRIALS);
    let max_v = params.max_vertices.unwrap_or(8);
    let mut r = rng(seed);
    let ids = ["ls-lower", "ls-upper", "rs-lower", "rs-upper"];
    let anchor = "Corollary 3, sum inequalities";
    let mut tallies: Vec<Tally> = ids.iter().map(|id| Tally::new(id, anchor)).collect();
    for _ in 0..trials {
        let g1 = random_relevant_graph(&mut r, 1, max_v);
        let g2 = random_relevant_graph(&mut r, 1, max_v);
        let check = milnor_bounds_check(&g1, &g2);
        for (t, c) in tallies.iter_mut().zip(&check.claims) {
            t.check(!c.failed(), || {
                json!({"g": graph_text(&g1), "h": graph_text(&g2), "values": c.witness})
            });
        }
    }
    let mut report = VerifyReport::new("milnor", seed);
    for t in tallies {
        report.push(t.claim());
    }
    report
}
