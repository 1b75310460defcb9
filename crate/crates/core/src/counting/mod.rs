//! Exact counts of sub-cubes and even cycles, in `Q_n` (closed form) and in
//! arbitrary subgraphs (enumeration).

mod closed;
mod cycles;
mod report;
mod zwords;
mod ztable;

pub use closed::{
    binomial, binomial_residue_sum, ceil_log2, closed_count_c2l, closed_count_qk, pow2,
};
pub use cycles::{
    count_cycles, enumerate_cycles, first_cycle, z_kl, CycleWitness, MAX_CYCLE_DIM, MAX_CYCLE_LEN,
};
pub use report::{ambient_count, count_in, count_report, closed_form_report, CountMethod, CountReport};
pub use zwords::{count_z_words, enumerate_z_words, z_ll_via_words, ZWord, MAX_COUNT_L, MAX_LIST_L};
pub use ztable::ZTable;

use rayon::prelude::*;

use crate::cube::{low_mask, masks_with_popcount, subsets, EdgeSet, StarVector};
use crate::error::Result;

/// Number of sub-cubes `Q_l` all of whose edges lie in `g`.
///
/// `Q_0` copies are vertices, all of which belong to every subgraph.
pub fn count_copies_qk<G: EdgeSet + ?Sized>(g: &G, l: usize) -> Result<u64> {
    let n = g.dim();
    crate::cube::check_materialize(n)?;
    if l > n {
        return Err(crate::Error::BadRange(format!("l = {l} exceeds n = {n}")));
    }
    if l == 0 {
        return Ok(1 << n);
    }
    let masks: Vec<u64> = masks_with_popcount(n, l).collect();
    Ok(masks
        .into_par_iter()
        .map(|stars| {
            subsets(low_mask(n) & !stars)
                .filter(|&ones| {
                    StarVector::new(n, stars, ones)
                        .expect("in range")
                        .all_edges(|e| g.has_edge(e))
                })
                .count() as u64
        })
        .sum())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cube::{Edge, FullCube, Subgraph};

    #[test]
    fn copies_in_full_cube() {
        for n in 1..=6 {
            for k in 0..=n {
                assert_eq!(
                    num_bigint::BigUint::from(count_copies_qk(&FullCube(n), k).unwrap()),
                    closed_count_qk(n as u64, k as u64).unwrap()
                );
            }
        }
    }

    #[test]
    fn copies_in_sparse_graphs() {
        assert_eq!(count_copies_qk(&Subgraph::empty(3).unwrap(), 1).unwrap(), 0);
        let minus = Subgraph::full_cube(3)
            .unwrap()
            .without_edge(&Edge::parse("0*1", 3).unwrap());
        // six faces minus the two through the removed edge
        assert_eq!(count_copies_qk(&minus, 2).unwrap(), 4);
        assert!(count_copies_qk(&minus, 4).is_err());
    }
}
