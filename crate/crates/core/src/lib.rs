//! Semitotal domination in graphs.
//!
//! A set `D` of vertices is a semitotal dominating set when it dominates the
//! graph and every member of `D` lies within distance 2 of another member.
//! This crate provides verifiers and an exact oracle for the dominating,
//! total and semitotal variants, an `O(n²)` solver for interval graphs, a
//! greedy logarithmic-ratio approximation, the reduction gadgets that relate
//! semitotal domination to domination, total domination and vertex cover,
//! and seeded instance generators.

pub mod approx;
pub mod domination;
pub mod generators;
pub mod graph;
pub mod interval_model;
pub mod interval_solver;
pub mod reductions;

pub use domination::{exact_min, verify, DominationKind, VerificationReport};
pub use graph::{Graph, SplitPartition, Vertex, VertexSet};
pub use interval_model::{CanonicalModel, Interval, IntervalModel};
