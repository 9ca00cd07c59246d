//! Exact analysis of INFLUENCE, a scoring game on directed graphs whose
//! vertices belong to one of two players.
//!
//! Left plays one of its vertices and takes every vertex it reaches; Right
//! plays one of its own and takes every vertex reaching it. [`solver`] computes
//! the exact scores of any position, [`families`] builds the instance
//! families studied here and solves sums of segments symbolically, and
//! [`experiments`] checks structural results against exact values.

pub mod bitset;
pub mod experiments;
pub mod families;
pub mod graph;
pub mod par;
pub mod solver;

pub use bitset::VertexSet;
pub use graph::{GameGraph, GraphDoc, GraphError, MoveMode, Position, Side};
pub use par::Parallelism;
pub use solver::{RelScores, ScoreQuad, SolveOptions, Solver};
