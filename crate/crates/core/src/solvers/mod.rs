//! Exact solvers.
//!
//! * [`rid_number_exact`]: branch and bound on any graph.
//! * [`rid_number_tree_dp`]: linear-time dynamic program on trees.
//! * [`domination_number`], [`restrained_domination_number`]: subset search.
//! * [`rrd_number`]: the branch and bound with the Roman rule swapped in.
//! * [`eta_bound`]: the η lower bound in exact rationals.
//!
//! Graphs with several components are solved per component and the values
//! summed; an isolated vertex contributes 1. This extends the usual
//! definition, which is stated for connected graphs only.

mod bnb;
mod eta;
mod sets;
mod tree_dp;

use serde::Serialize;

pub use bnb::{rid_number_exact, rrd_number};
pub use eta::{eta_bound, eta_terms, EtaTerms, Rational};
pub use sets::{domination_number, restrained_domination_number};
pub use tree_dp::{rid_number_tree_dp, DpState};

/// Optimum value, a witness achieving it and a search statistic.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SolveResult<W> {
    pub value: u32,
    pub witness: W,
    pub nodes_explored: u64,
}
