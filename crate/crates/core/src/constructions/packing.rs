use crate::counting::{ceil_log2, CycleWitness};
use crate::cube::{StarVector, Subgraph, Vertex};
use crate::error::{Error, Result};

/// The `2^(n-m)` vertex-disjoint `Q_m`'s with stars in the first `m`
/// positions, or with `cycle_half_length = Some(l)` one `2l`-cycle in each.
///
/// The cycle walks the first `l` Gray codewords of `Q_(m-1)` out and back
/// on either side of the last block direction, so any `2 <= l <= 2^(m-1)`
/// fits without search.
pub fn disjoint_qm_packing(
    n: usize,
    m: usize,
    cycle_half_length: Option<usize>,
) -> Result<Subgraph> {
    if m == 0 || m > n {
        return Err(Error::BadRange(format!(
            "qm-packing needs 1 <= m <= n, got n={n} m={m}"
        )));
    }
    crate::cube::check_materialize(n)?;
    let blocks = 0..1u64 << (n - m);
    match cycle_half_length {
        None => {
            let cubes: Vec<StarVector> = blocks
                .map(|b| StarVector::new(n, (1 << m) - 1, b << m))
                .collect::<Result<_>>()?;
            Ok(Subgraph::from_subcubes(n, &cubes)?.with_name(format!("qm-packing n={n} m={m}")))
        }
        Some(l) => {
            let cycle = block_cycle(m, l)?;
            let mut edges = Vec::new();
            for b in blocks {
                let shifted = cycle
                    .vertices()
                    .iter()
                    .map(|v| Vertex::new(n, v.bits() | b << m))
                    .collect::<Result<Vec<_>>>()?;
                edges.extend(CycleWitness::new(shifted)?.edges());
            }
            Ok(Subgraph::from_edges(n, edges)?
                .with_name(format!("qm-packing n={n} m={m} l={l}")))
        }
    }
}

fn block_cycle(m: usize, l: usize) -> Result<CycleWitness> {
    if l < 2 || (ceil_log2(2 * l as u64) as usize) > m {
        return Err(Error::CycleDoesNotFit { len: 2 * l, m });
    }
    // a ladder: the first l Gray codewords of Q_{m-1} with the top bit
    // clear, then the same codewords backwards with it set
    let top = 1u64 << (m - 1);
    let gray = |i: u64| i ^ (i >> 1);
    let rungs = (0..l as u64).map(gray);
    let back = (0..l as u64).rev().map(|i| gray(i) | top);
    let vertices = rungs
        .chain(back)
        .map(|bits| Vertex::new(m, bits))
        .collect::<Result<Vec<_>>>()?;
    CycleWitness::new(vertices)
}
