//! Instance families: segments and their sums, cycles, trees and
//! quasi-paths, plus the dedicated solver for sums of segments.

mod quasi_path;
mod segment;
mod segment_solver;
mod table;
mod trees;

use thiserror::Error;

pub use quasi_path::{make_quasi_path, make_quasi_paths, random_quasi_paths, QuasiPathSample, QuasiPathSpec};
pub use segment::{
    classify_move, cycle_doc, make_cycle, make_segment, recognize_segments, segment_doc, ConfigClass,
    MoveClass, MoveKind, OddClass, SegmentConfig, SegmentDescriptor,
};
pub use segment_solver::{SegmentOptions, SegmentSolver};
pub use table::{
    periodic_from, periodic_on, probe_conjectures, probe_rows, segment_table, segment_table_each,
    segment_table_with, TableRow,
};
pub use trees::{forest_signatures, make_j, make_tree, rooted_signature, TreeSpec};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FamilyError {
    #[error("a segment of length {len} cannot have class {class:?}")]
    ClassParity { len: usize, class: OddClass },
    #[error("length {len} is below the minimum {min}")]
    TooShort { len: usize, min: usize },
    #[error("odd cycle of length {0} is not in the family")]
    OddCycle(usize),
    #[error("{vertices} vertices need {} edge orientations, got {edges}", vertices.saturating_sub(1))]
    LengthMismatch { vertices: usize, edges: usize },
    #[error("the graph has forced vertices")]
    NotRelevant,
}
