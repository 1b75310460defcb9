use crate::cube::Subgraph;
use crate::error::{Error, Result};

/// Edges whose layer is not `i` modulo `k`.
///
/// Any `Q_k` spans `k` consecutive edge layers, so one of them is missing.
pub fn layer_complement(n: usize, k: usize, i: usize) -> Result<Subgraph> {
    if k < 2 || k > n || i >= k {
        return Err(Error::BadRange(format!(
            "layer-complement needs 2 <= k <= n and i < k, got n={n} k={k} i={i}"
        )));
    }
    Ok(Subgraph::from_predicate(n, |e| e.layer().value() % k != i)?
        .with_name(format!("layer-complement n={n} k={k} i={i}")))
}

/// The union of edge layers `j, j + k, j + 2k, ...`, or its complement.
pub fn layer_union_mod(n: usize, k: usize, j: usize, complement: bool) -> Result<Subgraph> {
    if k == 0 || j >= k {
        return Err(Error::BadRange(format!(
            "layer-mod needs k >= 1 and j < k, got k={k} j={j}"
        )));
    }
    let g = Subgraph::from_predicate(n, |e| (e.layer().value() % k == j) != complement)?;
    let tag = if complement { " complement" } else { "" };
    Ok(g.with_name(format!("layer-mod n={n} k={k} j={j}{tag}")))
}

/// Even (`j = 0`) or odd (`j = 1`) edge layers. Neither contains a 4-cycle:
/// every `Q_2` has its edges in two consecutive layers.
pub fn even_odd_layer_graph(n: usize, j: usize) -> Result<Subgraph> {
    if j > 1 {
        return Err(Error::BadRange(format!("even-odd needs j in {{0, 1}}, got {j}")));
    }
    Ok(layer_union_mod(n, 2, j, false)?.with_name(format!("even-odd n={n} j={j}")))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn layer_sizes_of_q3() {
        let g = layer_complement(3, 2, 1).unwrap();
        assert_eq!(g.len(), 6);
        assert_eq!(g.layer_sizes(), vec![3, 0, 3]);
        assert_eq!(layer_union_mod(3, 2, 0, false).unwrap(), g);
    }

    #[test]
    fn complement_partitions() {
        let a = layer_union_mod(5, 3, 1, false).unwrap();
        let b = layer_union_mod(5, 3, 1, true).unwrap();
        assert_eq!(a.len() + b.len(), 80);
        assert_eq!(a.complement(), b);
    }

    #[test]
    fn ranges() {
        assert!(layer_complement(3, 4, 0).is_err());
        assert!(layer_complement(3, 2, 2).is_err());
        assert!(layer_union_mod(3, 0, 0, false).is_err());
        assert!(even_odd_layer_graph(3, 2).is_err());
    }
}
