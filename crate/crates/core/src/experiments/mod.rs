//! Verification suites with seeded randomness and JSON reports.

mod bounds;
pub mod closure;
mod general;
pub mod random;
mod report;
mod segments;

use std::time::Instant;

use thiserror::Error;

use crate::graph::{GameGraph, GraphDoc};

pub use bounds::{quasi_path_bound, tree_bounds};
pub use report::{Claim, ClaimStatus, VerifyReport};
pub use segments::enumerate_configs;

/// Largest general graph solved exhaustively by the suites. Reachable
/// subsets of a 22-vertex graph still fit comfortably in memory.
pub const GENERAL_MAX_VERTICES: usize = 22;
/// Random instances of the property suites stay at or below this size so
/// that a hundred exact solves take well under a second each.
pub const PROPERTY_MAX_VERTICES: usize = 12;
/// Raw and relevant semantics are compared on every colored reachability
/// relation up to this size; 7 vertices take about 20 s.
pub const MODE_MAX_VERTICES: usize = 7;
/// Longest single segment tabulated by default.
pub const SEGMENT_MAX_N: usize = 80;
/// Deepest tree solved exactly; `J_2^c` already has hundreds of vertices.
pub const TREE_EXACT_MAX_N: u32 = 1;
pub const TREE_MAX_C: u32 = 6;
pub const QUASI_PATH_TRIALS: usize = 500;
pub const QUASI_PATH_MAX_LEN: usize = 20;
pub const DEFAULT_TRIALS: usize = 100;
pub const DEFAULT_SEED: u64 = 0x1f1_0e0c;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ExperimentError {
    #[error("unknown suite {name:?}; known suites: {known}", name = .0, known = suite_names().join(", "))]
    UnknownSuite(String),
}

/// Optional overrides; `None` means the suite's default.
#[derive(Clone, Debug, Default)]
pub struct SuiteParams {
    pub max_n: Option<usize>,
    pub trials: Option<usize>,
    pub max_vertices: Option<usize>,
    pub parallel: bool,
}

impl SuiteParams {
    pub fn trials(&self, default: usize) -> usize {
        self.trials.unwrap_or(default)
    }
}

pub struct SuiteInfo {
    pub name: &'static str,
    /// Named results the suite checks.
    pub anchors: &'static [&'static str],
    run: fn(&SuiteParams, u64) -> VerifyReport,
}

pub const SUITES: &[SuiteInfo] = &[
    SuiteInfo {
        name: "figure1",
        anchors: &["Example 1", "Remark 1", "Remark 2", "Definition 2", "Definition 3", "Definition 4", "Figure 2"],
        run: general::figure1,
    },
    SuiteInfo {
        name: "properties",
        anchors: &[
            "Lemma 1",
            "Lemma 2",
            "Lemma 3",
            "Lemma 4",
            "Remark 3",
            "Corollary 1",
            "Corollary 2",
            "Corollary 4",
        ],
        run: general::properties,
    },
    SuiteInfo {
        name: "milnor",
        anchors: &["Corollary 3"],
        run: general::milnor,
    },
    SuiteInfo {
        name: "table1",
        anchors: &["Table 1"],
        run: segments::table1,
    },
    SuiteInfo {
        name: "theorem1",
        anchors: &["Theorem 1", "Proposition 1", "Definition 6", "Definition 7"],
        run: segments::theorem1,
    },
    SuiteInfo {
        name: "lemma7",
        anchors: &["Lemma 6", "Lemma 7"],
        run: segments::lemma7,
    },
    SuiteInfo {
        name: "special-sums",
        anchors: &["Proposition 1"],
        run: segments::special_sums,
    },
    SuiteInfo {
        name: "cycles",
        anchors: &["Corollary 5"],
        run: segments::cycles,
    },
    SuiteInfo {
        name: "segment-oracle",
        anchors: &["Remark 4", "Definition 6", "Corollary 4"],
        run: segments::oracle,
    },
    SuiteInfo {
        name: "conjectures",
        anchors: &["Conjecture 1", "Conjecture 2", "Conjecture 3", "Table 1"],
        run: segments::conjectures,
    },
    SuiteInfo {
        name: "trees",
        anchors: &["Lemma 8", "Lemma 9", "Corollary 8", "Theorem 3"],
        run: bounds::trees,
    },
    SuiteInfo {
        name: "quasi-paths",
        anchors: &["Definition 8", "Theorem 4"],
        run: bounds::quasi_paths,
    },
];

pub fn suite_names() -> Vec<&'static str> {
    SUITES.iter().map(|s| s.name).collect()
}

/// Runs one registered suite; the report depends only on the parameters
/// and the seed.
pub fn run_suite(name: &str, params: &SuiteParams, seed: u64) -> Result<VerifyReport, ExperimentError> {
    let info = SUITES
        .iter()
        .find(|s| s.name == name)
        .ok_or_else(|| ExperimentError::UnknownSuite(name.to_owned()))?;
    let started = Instant::now();
    let mut report = (info.run)(params, seed);
    report.finish(started);
    Ok(report)
}

/// A graph as its file text, for witnesses.
pub fn graph_text(g: &GameGraph) -> String {
    GraphDoc::from_graph(g.clone()).serialize()
}
