//! `Q_2`'s whose stars sit at 1-based positions `2t+1, 2t+2` (0-based
//! `2t, 2t+1`) with even prefix and even suffix.

use num_bigint::BigUint;
use num_rational::BigRational;

use crate::counting::pow2;
use crate::cube::{low_mask, subsets, StarVector, Subgraph};
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParityPacking {
    /// Selected `Q_2` star vectors in canonical order.
    pub selected: Vec<StarVector>,
    pub graph: Subgraph,
}

fn check_n(n: usize) -> Result<()> {
    if n < 3 {
        return Err(Error::BadRange(format!("parity-q2 needs n >= 3, got {n}")));
    }
    Ok(())
}

/// Whether `sv` is one of the selected `Q_2`'s.
pub fn parity_selects(sv: &StarVector) -> bool {
    let stars = sv.star_mask();
    if sv.k() != 2 {
        return false;
    }
    let a = stars.trailing_zeros() as usize;
    if a % 2 == 1 || stars != 0b11 << a {
        return false;
    }
    let ones = sv.ones_mask();
    (ones & low_mask(a)).count_ones().is_multiple_of(2) && (ones >> (a + 2)).count_ones().is_multiple_of(2)
}

pub fn parity_q2_packing(n: usize) -> Result<ParityPacking> {
    check_n(n)?;
    let mut selected = Vec::new();
    for a in (0..n - 1).step_by(2) {
        let stars = 0b11 << a;
        for ones in subsets(low_mask(n) & !stars) {
            let sv = StarVector::new(n, stars, ones)?;
            if parity_selects(&sv) {
                selected.push(sv);
            }
        }
    }
    selected.sort();
    let graph = Subgraph::from_subcubes(n, &selected)?.with_name(format!("parity-q2 n={n}"));
    Ok(ParityPacking { selected, graph })
}

// binary words of length m with an even number of ones
fn even_words(m: usize) -> BigUint {
    if m == 0 {
        BigUint::from(1u32)
    } else {
        pow2(m as u64 - 1)
    }
}

/// Exact number of selected `Q_2`'s, summed over the 0-based first star
/// position `a` as `E(a) E(n-a-2)` with `E` counting even words.
pub fn parity_q2_count(n: usize) -> Result<BigUint> {
    check_n(n)?;
    Ok((0..n - 1)
        .step_by(2)
        .map(|a| even_words(a) * even_words(n - a - 2))
        .sum())
}

/// The sum over odd 1-based `p` in `3..=n-2` plus the `p = 1` term.
/// For even `n` it leaves out `p = n-1`, worth `2^(n-3)`.
pub fn parity_q2_odd_sum(n: usize) -> Result<BigUint> {
    check_n(n)?;
    let mut total = pow2(n as u64 - 3);
    let mut p = 3;
    while p + 2 <= n {
        total += pow2(p as u64 - 2) * pow2((n - p - 2) as u64);
        p += 2;
    }
    Ok(total)
}

/// `(n/2) 2^(n-4)`.
pub fn parity_q2_lower_bound(n: usize) -> BigRational {
    let v = BigRational::from_integer(n.into()) / BigRational::from_integer(2.into());
    if n >= 4 {
        v * BigRational::from_integer(pow2(n as u64 - 4).into())
    } else {
        v / BigRational::from_integer(pow2(4 - n as u64).into())
    }
}


#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn n5_selects_six() {
        let p = parity_q2_packing(5).unwrap();
        assert_eq!(p.selected.len(), 6);
        // oracle: filter all 80 Q_2 star vectors of Q_5
        let all = Subgraph::full_cube(5).unwrap().subcubes(2);
        assert_eq!(all.len(), 80);
        let mut filtered: Vec<_> = all.into_iter().filter(parity_selects).collect();
        filtered.sort();
        assert_eq!(filtered, p.selected);
        assert_eq!(p.graph.len(), 24);
    }

    #[test]
    fn counts_and_odd_sum() {
        for n in 3..=12 {
            let exact = parity_q2_count(n).unwrap();
            assert_eq!(exact, BigUint::from(parity_q2_packing(n).unwrap().selected.len()));
            let sum = parity_q2_odd_sum(n).unwrap();
            if n % 2 == 1 {
                assert_eq!(exact, sum, "n={n}");
            } else {
                assert_eq!(exact, sum + pow2(n as u64 - 3), "n={n}");
            }
        }
        assert_eq!(parity_q2_count(8).unwrap(), BigUint::from(96u32));
    }

    #[test]
    fn first_star_at_even_index() {
        assert!(parity_selects(&StarVector::parse("**000", 5).unwrap()));
        assert!(parity_selects(&StarVector::parse("11**0", 5).unwrap()));
        assert!(!parity_selects(&StarVector::parse("1**00", 5).unwrap()));
        assert!(!parity_selects(&StarVector::parse("10**0", 5).unwrap()));
        assert!(!parity_selects(&StarVector::parse("**100", 5).unwrap()));
    }
}
