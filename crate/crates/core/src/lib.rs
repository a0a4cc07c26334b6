//! Exact computation of the restrained Italian domination number.
//!
//! A restrained Italian dominating function (RID function) of a graph assigns
//! each vertex a value in `{0, 1, 2}` such that every 0-vertex has neighbor
//! value sum at least 2 and at least one 0-neighbor. The crate provides:
//!
//! * [`graph`]: bitset graphs, graph6 I/O, constructors, isomorph-free
//!   enumeration of trees and connected graphs, canonical forms.
//! * [`rid`]: labelings, vertex sets and verifiers for every domination
//!   variant used here.
//! * [`solvers`]: branch and bound for the general case, a linear-time
//!   tree dynamic program, companion parameters and the η lower bound.
//! * [`families`]: generators and membership predicates for the extremal
//!   families, the NP-hardness gadget and the structural conditions that
//!   force small values.
//! * [`harness`]: exhaustive sweeps that re-check every claim and produce
//!   machine-readable reports.

pub mod error;
pub mod families;
pub mod graph;
pub mod harness;
pub mod rid;
pub mod solvers;

pub use error::{Error, Result};
pub use graph::Graph;
pub use rid::{Labeling, VertexSet};
pub use solvers::SolveResult;
