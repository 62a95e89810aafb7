//! Decomposability of edge polytopes of finite simple graphs.
//!
//! The edge polytope of a graph `G` on `[d]` is the convex hull of
//! `e_i + e_j` over the edges `{i, j}`. It is decomposable when some
//! hyperplane through its interior cuts it into two integral polytopes.
//! Such hyperplanes can be taken of the form `sum a_i x_i = 0` with
//! `a in {-1, 0, 1}^d`, and a weighting separates exactly when it produces a
//! positive and a negative edge and every (positive, negative) pair spans a
//! 4-cycle. This crate searches for such weightings, classifies them as
//! pattern I or II, and derives the partition and zero-subgraph views.

pub mod decompose;
pub mod error;
pub mod families;
pub mod graph;
pub mod io;
pub mod polytope;
pub mod sweep;

pub use decompose::*;
pub use error::{Error, Result};
pub use graph::{Edge, Graph};
