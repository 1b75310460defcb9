//! Exhaustive freeness checks with re-verified witnesses, and the
//! `k`-partite representation test.

mod freeness;
mod partite;

pub use freeness::{is_c2k_free, is_qk_free, verify_free, FreenessVerdict, Witness};
pub use partite::{has_k_partite_representation, is_partite_coloring, PartiteRepresentation};
