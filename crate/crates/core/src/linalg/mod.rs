//! Exact integer linear algebra. Nothing here touches floating point.

mod interp;
mod matrix;
mod poly;
mod ring;

pub use interp::{interpolate, node, polymat_det};
pub use matrix::{rank_exact, IntMatrix};
pub use poly::{AffineTriPoly, BiPoly, IntPoly};

pub(crate) use interp::interpolate_values;
pub(crate) use matrix::{charpoly_i64, det_i128};
