//! Exact Ihara and Bartholdi zeta functions, generalized characteristic
//! polynomials, cospectral constructions and isomorph-free graph censuses.
//!
//! All arithmetic is exact: checked `i128` with a `BigInt` retry.

pub mod census;
pub mod error;
pub mod exec;
pub mod graph;
pub mod graph6;
pub mod iso;
pub mod linalg;
pub mod switching;
pub mod verify;
pub mod walks;
pub mod zeta;

pub use error::{Error, Result};
pub use exec::Exec;
pub use graph::{DanglingCover, DanglingFamily, Graph};
