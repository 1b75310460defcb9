use serde::Serialize;

use crate::cube::StarVector;
use crate::error::{Error, Result};

/// A coloring `sigma` of the positions of `Q_l` by `1..=k` under which every
/// edge's non-zero positions (its star and its ones) get all `k` colors.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PartiteRepresentation {
    pub l: usize,
    pub k: usize,
    /// `sigma[p]` for each position `p`, or `None` when no coloring exists.
    pub sigma: Option<Vec<usize>>,
}

fn non_zero(e: &StarVector) -> u64 {
    e.star_mask() | e.ones_mask()
}

/// Whether `sigma` is a `k`-partite representation of `h`.
pub fn is_partite_coloring(h: &[StarVector], k: usize, sigma: &[usize]) -> bool {
    h.iter().all(|e| {
        let mut seen = 0u64;
        for p in (0..e.n()).filter(|p| non_zero(e) >> p & 1 == 1) {
            let c = sigma[p];
            if c == 0 || c > k || seen >> c & 1 == 1 {
                return false;
            }
            seen |= 1 << c;
        }
        seen.count_ones() as usize == k
    })
}

/// Backtracking search over the positions used by some edge, trying colors
/// in increasing order; the first coloring found is the lexicographically
/// smallest one. Unused positions get color 1.
pub fn has_k_partite_representation(h: &[StarVector], k: usize) -> Result<PartiteRepresentation> {
    let first = h
        .first()
        .ok_or_else(|| Error::BadRange("edge list is empty".into()))?;
    let l = first.n();
    for e in h {
        if e.n() != l {
            return Err(Error::MixedDimensions {
                first: l,
                other: e.n(),
            });
        }
        if e.k() != 1 {
            return Err(Error::BadRange(format!("{e} is not an edge")));
        }
    }
    if k == 0 || k > 63 {
        return Err(Error::BadRange(format!("k must be in 1..=63, got {k}")));
    }
    let absent = PartiteRepresentation { l, k, sigma: None };
    if h.iter().any(|e| non_zero(e).count_ones() as usize != k) {
        return Ok(absent);
    }
    // every edge has exactly k non-zero positions, so distinct colors on
    // each edge already cover 1..=k
    let mut conflicts = vec![0u64; l];
    let mut used = 0u64;
    for e in h {
        let s = non_zero(e);
        used |= s;
        for (p, c) in conflicts.iter_mut().enumerate() {
            if s >> p & 1 == 1 {
                *c |= s & !(1 << p);
            }
        }
    }
    let order: Vec<usize> = (0..l).filter(|p| used >> p & 1 == 1).collect();
    let mut sigma = vec![1usize; l];
    if assign(&order, 0, k, &conflicts, &mut sigma) {
        debug_assert!(is_partite_coloring(h, k, &sigma));
        Ok(PartiteRepresentation {
            l,
            k,
            sigma: Some(sigma),
        })
    } else {
        Ok(absent)
    }
}

fn assign(order: &[usize], at: usize, k: usize, conflicts: &[u64], sigma: &mut [usize]) -> bool {
    let Some(&p) = order.get(at) else {
        return true;
    };
    let taken = order[..at]
        .iter()
        .filter(|&&q| conflicts[p] >> q & 1 == 1)
        .fold(0u64, |m, &q| m | 1 << sigma[q]);
    for c in 1..=k {
        if taken >> c & 1 == 0 {
            sigma[p] = c;
            if assign(order, at + 1, k, conflicts, sigma) {
                return true;
            }
        }
    }
    sigma[p] = 1;
    false
}
