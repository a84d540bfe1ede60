//! Canonical forms, isomorphism testing and isomorph-free generation.

mod canon;
mod generate;

pub use canon::{
    canonical_form, canonical_g6, canonical_graph, canonical_labeling, is_isomorphic,
    CanonicalForm, Labeling, MAX_CANON_ORDER,
};
pub use generate::{generate_all, generate_g6, read_catalog, Filter, MAX_GEN_ORDER};
