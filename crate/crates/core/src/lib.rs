//! Exact graph invariants, extremal families, and inequality checks for
//! K_{1,r}-free graphs.
//!
//! The crate computes independence, domination, and coloring invariants
//! exactly (branch and bound over bitset adjacency, graphs up to 512
//! vertices), generates the extremal families on which the implemented
//! inequalities are tight, and evaluates each inequality together with its
//! hypotheses on arbitrary input graphs.

pub mod bits;
pub mod check;
pub mod codec;
pub mod enumerate;
pub mod error;
pub mod families;
pub mod graph;
pub mod iso;
pub mod planar;
pub mod ramsey;
pub mod sample;
pub mod solve;
pub mod sweep;
pub mod tdp;

pub use bits::{VertexSet, MAX_VERTICES};
pub use error::{Error, Result};
pub use graph::Graph;
pub use solve::{InvariantKind, InvariantValue, Witness};
