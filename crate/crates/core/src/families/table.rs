//! Score sequences of single segments.

use std::time::Instant;

use serde::{Deserialize, Serialize};
use serde_json::json;

use crate::experiments::{Claim, VerifyReport};
use crate::par::{self, Parallelism};

use super::segment::{OddClass, SegmentConfig, SegmentDescriptor};
use super::segment_solver::SegmentSolver;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableRow {
    pub n: usize,
    pub ls: i32,
    pub rs: i32,
}

/// Scores of `S_n` for `n` in `1..=max_n`, odd lengths taken in `odd`.
/// `S_1` is the lone vertex of the odd class's endpoint color.
pub fn segment_table_with(
    solver: &SegmentSolver,
    max_n: usize,
    odd: OddClass,
    mode: Parallelism,
) -> Vec<TableRow> {
    assert!(odd != OddClass::None, "odd lengths need an odd class");
    par::map_range(mode, max_n, |i| row(solver, i + 1, odd))
}

/// Calls `each` on the rows in increasing `n` as they are computed.
pub fn segment_table_each<F: FnMut(TableRow)>(
    solver: &SegmentSolver,
    max_n: usize,
    odd: OddClass,
    mut each: F,
) {
    for n in 1..=max_n {
        each(row(solver, n, odd));
    }
}

/// Table of `S_n` for `n` in `1..=max_n`, odd lengths in `Minus`.
pub fn segment_table(max_n: usize, mode: Parallelism) -> Vec<TableRow> {
    segment_table_with(&SegmentSolver::new(), max_n, OddClass::Minus, mode)
}

fn row(solver: &SegmentSolver, n: usize, odd: OddClass) -> TableRow {
    let class = if n.is_multiple_of(2) { OddClass::None } else { odd };
    let d = SegmentDescriptor::new(n, class).expect("class matches parity");
    let r = solver.rel_scores(&SegmentConfig::single(d));
    TableRow { n, ls: r.ls, rs: r.rs }
}

/// Smallest start from which both sequences repeat with period `p` up to
/// the end of `rows`, if at least two full periods are covered.
pub fn periodic_from(rows: &[TableRow], p: usize) -> Option<usize> {
    let mut start = rows.len();
    while start > 0 {
        let k = start - 1;
        if k + p < rows.len() && (rows[k].ls != rows[k + p].ls || rows[k].rs != rows[k + p].rs) {
            break;
        }
        start = k;
    }
    (rows.len() - start >= 2 * p).then(|| rows[start].n)
}

/// Whether both sequences have period `p` on `lo..=hi`.
pub fn periodic_on(rows: &[TableRow], p: usize, lo: usize, hi: usize) -> bool {
    let at = |n: usize| rows.iter().find(|r| r.n == n);
    (lo..=hi.saturating_sub(p)).all(|n| match (at(n), at(n + p)) {
        (Some(a), Some(b)) => a.ls == b.ls && a.rs == b.rs,
        _ => false,
    })
}

/// Reports how the computed sequences sit against the open conjectures.
/// Every claim is report-only.
pub fn probe_conjectures(max_n: usize) -> VerifyReport {
    let started = Instant::now();
    let rows = segment_table(max_n, Parallelism::Parallel);
    let mut report = probe_rows(&rows);
    report.finish(started);
    report
}

pub fn probe_rows(rows: &[TableRow]) -> VerifyReport {
    let mut report = VerifyReport::new("conjectures", 0);
    let max_n = rows.last().map_or(0, |r| r.n);

    let candidates: Vec<_> = (1..=12)
        .filter_map(|p| periodic_from(rows, p).map(|s| json!({"period": p, "from": s})))
        .collect();
    report.push(Claim::report(
        "ultimately-periodic",
        "Conjecture 1, ultimate periodicity",
        !candidates.is_empty(),
        json!({"max_n": max_n, "candidates": candidates}),
    ));

    if max_n >= 76 {
        report.push(Claim::report(
            "period-4-38-76",
            "Table 1, period 4 on 38..76",
            periodic_on(rows, 4, 38, 76),
            json!({"lo": 38, "hi": 76}),
        ));
    }
    if max_n >= 80 {
        let breaks: Vec<usize> = (77..=max_n)
            .filter(|&n| {
                let a = &rows[n - 1];
                let b = &rows[n - 5];
                a.ls != b.ls || a.rs != b.rs
            })
            .collect();
        report.push(Claim::report(
            "period-4-broken-77",
            "Table 1, Rs(S_77) = -5",
            rows[76].rs == -5 && breaks.first() == Some(&77),
            json!({"rs_77": rows[76].rs, "breaks": breaks}),
        ));
    }

    let mut probe = |id: &str, anchor: &str, filter: &dyn Fn(usize) -> bool, want: i32| {
        let hits: Vec<usize> = rows.iter().filter(|r| filter(r.n)).map(|r| r.n).collect();
        let counter: Vec<usize> = rows
            .iter()
            .filter(|r| filter(r.n) && r.ls != want)
            .map(|r| r.n)
            .collect();
        report.push(Claim::report(
            id,
            anchor,
            counter.is_empty(),
            json!({"checked": hits.len(), "counterexamples": counter}),
        ));
    };
    probe(
        "ls-1-mod-4",
        "Conjecture 2, Ls = 1 for n = 1 mod 4",
        &|n| n % 4 == 1 && n > 1,
        1,
    );
    probe(
        "ls-2-mod-4",
        "Conjecture 3, Ls = 2 for n = 0 mod 4",
        &|n| n % 4 == 0 && n > 4,
        2,
    );
    probe(
        "ls-2-even-past-30",
        "Conjecture 3, all even n past 30",
        &|n| n % 2 == 0 && n > 30,
        2,
    );

    let rare: Vec<_> = rows
        .iter()
        .filter(|r| (r.ls, r.rs) == (4, -4) || (r.ls, r.rs) == (1, -5))
        .map(|r| json!({"n": r.n, "ls": r.ls, "rs": r.rs}))
        .collect();
    let last_44 = rows.iter().rev().find(|r| (r.ls, r.rs) == (4, -4)).map(|r| r.n);
    report.push(Claim::report(
        "rare-scores",
        "Table 1, rare scores",
        last_44 == Some(30),
        json!({"rare": rare, "last_4_-4": last_44}),
    ));
    report
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rows(ls: &[i32]) -> Vec<TableRow> {
        ls.iter()
            .enumerate()
            .map(|(i, &v)| TableRow { n: i + 1, ls: v, rs: -v })
            .collect()
    }

    #[test]
    fn detects_period() {
        let r = rows(&[9, 9, 1, 2, 1, 2, 1, 2]);
        assert_eq!(periodic_from(&r, 2), Some(3));
        assert_eq!(periodic_from(&r, 3), None);
        assert!(periodic_on(&r, 2, 3, 8));
        assert!(!periodic_on(&r, 2, 1, 8));
    }

    #[test]
    fn first_rows() {
        let t = segment_table(8, Parallelism::Sequential);
        let got: Vec<(i32, i32)> = t.iter().map(|r| (r.ls, r.rs)).collect();
        assert_eq!(got, [(-1, -1), (2, -2), (3, -3), (4, -4), (1, -5), (2, -2), (3, -1), (2, -2)]);
    }
}
