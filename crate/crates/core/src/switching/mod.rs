//! Cospectral constructions: GM and GM* switching, the 4x4-block construction
//! with an `x`-dependent conjugator, and coalescence/join families.

mod construction;
mod families;
mod gm;

pub use construction::{
    construction_sweep, intertwiner_block_det, intertwiner_det, new_construction,
    nine_vertex_spec, uniform_intertwiner_exists, verify_intertwiner, ConstructionSpec,
};
pub use families::{
    coalescence_family, gm_distinguishing_rate, join_family, regular_block, CoalescenceFamily,
    JoinFamily, RateReport,
};
pub use gm::{
    check_gm_condition, check_gm_star, even_block_sizes, find_gm_pairs, gm_switch,
    has_gm_partner, PartitionBlocks, SwitchingPartition,
};
