//! Conder's 3-coloring graph, the mod-3 `Q_l` selection and one explicit
//! `2l`-cycle inside each selected `Q_l`.

use num_bigint::BigUint;
use num_rational::BigRational;
use rayon::prelude::*;

use crate::counting::{binomial, binomial_residue_sum, pow2, CycleWitness};
use crate::cube::{check_materialize, deposit, masks_with_popcount, StarVector, Subgraph, Vertex};
use crate::error::{Error, Result};

/// Largest selection that is materialized as a list.
pub const MAX_SELECTION: u64 = 1 << 24;

/// Edges `l*r` with `ones(l) - ones(r) = 0 (mod 3)`.
pub fn conder_graph(n: usize) -> Result<Subgraph> {
    Ok(
        Subgraph::from_predicate(n, |e| (e.prefix_ones() + 3 * n - e.suffix_ones()).is_multiple_of(3))?
            .with_name(format!("conder n={n}")),
    )
}

/// Which residues the segments `p_0 * p_1 * ... * p_l` must have mod 3.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Mod3Rule {
    /// All segments 0 for `l >= 6`; for `l` in `{4, 5}` the outer segments
    /// are 0 and the inner ones are 1.
    #[default]
    Standard,
    /// All segments 0 at every `l`.
    AllZero,
}

impl Mod3Rule {
    pub fn residues(self, l: usize) -> Vec<usize> {
        let mut r = vec![0; l + 1];
        if self == Mod3Rule::Standard && l < 6 {
            for x in &mut r[1..l] {
                *x = 1;
            }
        }
        r
    }
}

fn check_selection(n: usize, l: usize) -> Result<()> {
    if l < 4 || n < l {
        return Err(Error::BadRange(format!(
            "mod-3 selection needs 4 <= l <= n, got n={n} l={l}"
        )));
    }
    Ok(())
}

pub fn mod3_selects(sv: &StarVector, rule: Mod3Rule) -> bool {
    let residues = rule.residues(sv.k());
    sv.k() >= 1
        && sv
            .segment_ones()
            .iter()
            .zip(&residues)
            .all(|(ones, r)| ones % 3 == *r)
}

// words of `len` bits with ones = r (mod 3)
fn residue_words(len: usize, r: usize) -> Vec<u64> {
    (0..1u64 << len)
        .filter(|w| w.count_ones() as usize % 3 == r)
        .collect()
}

/// Selected `Q_l`'s under the standard rule, in canonical order.
pub fn mod3_ql_selection(n: usize, l: usize) -> Result<Vec<StarVector>> {
    mod3_ql_selection_with(n, l, Mod3Rule::Standard)
}

pub fn mod3_ql_selection_with(n: usize, l: usize, rule: Mod3Rule) -> Result<Vec<StarVector>> {
    check_selection(n, l)?;
    check_materialize(n)?;
    let total = mod3_selection_count(n, l, rule)?;
    if total > BigUint::from(MAX_SELECTION) {
        return Err(Error::EnumerationTooLarge(format!(
            "{total} selected Q_{l}'s in Q_{n}"
        )));
    }
    let residues = rule.residues(l);
    let words: Vec<Vec<Vec<u64>>> = (0..=n - l)
        .map(|len| (0..3).map(|r| residue_words(len, r)).collect())
        .collect();
    let star_masks: Vec<u64> = masks_with_popcount(n, l).collect();
    let mut out: Vec<StarVector> = star_masks
        .into_par_iter()
        .flat_map_iter(|stars| {
            // (offset, length) of each segment
            let mut segments = Vec::with_capacity(l + 1);
            let mut start = 0;
            for p in (0..n).filter(|p| stars >> p & 1 == 1).chain([n]) {
                segments.push((start, p - start));
                start = p + 1;
            }
            let mut fills = vec![0u64];
            for (i, &(offset, len)) in segments.iter().enumerate() {
                let choices = &words[len][residues[i]];
                fills = fills
                    .iter()
                    .flat_map(|f| choices.iter().map(move |w| f | w << offset))
                    .collect();
            }
            fills
                .into_iter()
                .map(move |ones| StarVector::new(n, stars, ones).expect("disjoint masks"))
        })
        .collect();
    out.sort();
    Ok(out)
}

/// Exact number of selected `Q_l`'s without listing them: a sum over segment
/// lengths of products of residue-class binomial sums.
pub fn mod3_selection_count(n: usize, l: usize, rule: Mod3Rule) -> Result<BigUint> {
    check_selection(n, l)?;
    let free = n - l;
    let residues = rule.residues(l);
    let table: Vec<[BigUint; 3]> = (0..=free as u64)
        .map(|m| {
            let s = |r| binomial_residue_sum(m, 3, r).expect("r < 3");
            [s(0), s(1), s(2)]
        })
        .collect();
    // ways[s]: fillings of the segments so far with total length s
    let mut ways: Vec<BigUint> = (0..=free).map(|s| table[s][residues[0]].clone()).collect();
    for &r in &residues[1..] {
        ways = (0..=free)
            .map(|s| (0..=s).map(|t| &ways[s - t] * &table[t][r]).sum())
            .collect();
    }
    Ok(ways[free].clone())
}

/// `C(n, l) 2^(n-3l-2)`, a rational when `n < 3l + 2`.
pub fn mod3_selection_lower_bound(n: usize, l: usize) -> BigRational {
    let c = BigRational::from_integer(binomial(n as u64, l as u64).into());
    let e = n as i64 - 3 * l as i64 - 2;
    let p = BigRational::from_integer(pow2(e.unsigned_abs()).into());
    if e >= 0 {
        c * p
    } else {
        c / p
    }
}

/// A selected `Q_l` with the explicit `2l`-cycle on its star positions.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CycleFamily {
    pub n: usize,
    pub l: usize,
    pub members: Vec<(StarVector, CycleWitness)>,
    pub union_graph: Subgraph,
}

/// Values on the star positions along `C(Q)`, bit `t` for the `t`-th star
/// from the left.
pub fn conder_cycle_pattern(l: usize) -> Result<Vec<u64>> {
    let rows = |table: &[&str]| {
        table
            .iter()
            .map(|row| {
                row.bytes()
                    .enumerate()
                    .fold(0u64, |acc, (t, b)| acc | u64::from(b == b'1') << t)
            })
            .collect()
    };
    match l {
        4 => Ok(rows(&[
            "0000", "1000", "1100", "1110", "1111", "0111", "0011", "0001",
        ])),
        5 => Ok(rows(&[
            "00100", "01100", "01101", "01001", "11001", "11011", "10011", "10010", "10110",
            "00110",
        ])),
        _ if (6..=64).contains(&l) => {
            // a window of three ones slides right, then a five-step tail
            // returns to the start
            let bit = |star: usize| 1u64 << (star - 1);
            let mut cur = bit(1) | bit(2) | bit(3);
            let mut out = vec![cur];
            for t in 1..=l - 3 {
                cur |= bit(t + 3);
                out.push(cur);
                cur &= !bit(t);
                out.push(cur);
            }
            for (add, star) in [(true, 2), (false, l), (false, l - 2), (true, 3), (true, 1)] {
                if add {
                    cur |= bit(star);
                } else {
                    cur &= !bit(star);
                }
                out.push(cur);
            }
            debug_assert_eq!(cur & !bit(l - 1), out[0]);
            Ok(out)
        }
        _ => Err(Error::BadRange(format!("C(Q) is given for l >= 4, got {l}"))),
    }
}

/// `C(Q)` for one selected `Q_l`.
pub fn conder_cycle(q: &StarVector) -> Result<CycleWitness> {
    let pattern = conder_cycle_pattern(q.k())?;
    let vertices = pattern
        .iter()
        .map(|&row| Vertex::new(q.n(), q.ones_mask() | deposit(row, q.star_mask())))
        .collect::<Result<Vec<_>>>()?;
    CycleWitness::new(vertices)
}

pub fn conder_cycle_family(n: usize, l: usize) -> Result<CycleFamily> {
    let selected = mod3_ql_selection(n, l)?;
    let members = selected
        .into_par_iter()
        .map(|q| conder_cycle(&q).map(|c| (q, c)))
        .collect::<Result<Vec<_>>>()?;
    let union_graph = Subgraph::from_edges(n, members.iter().flat_map(|(_, c)| c.edges()))?
        .with_name(format!("conder-cycles n={n} l={l}"));
    Ok(CycleFamily {
        n,
        l,
        members,
        union_graph,
    })
}
