use crate::cube::{Edge, Subgraph};
use crate::error::{Error, Result};

fn aks_moduli(k: usize) -> (usize, usize) {
    (k.div_ceil(2), (k + 2) / 2)
}

fn appendix_moduli(k: usize) -> (usize, usize) {
    ((k - 1) / 2, k / 2)
}

fn check_aks(k: usize, i: usize, j: usize) -> Result<()> {
    let (a, b) = aks_moduli(k);
    if k < 2 || i >= a || j >= b {
        return Err(Error::BadRange(format!(
            "aks needs k >= 2, i < {a}, j < {b}; got k={k} i={i} j={j}"
        )));
    }
    Ok(())
}

fn check_appendix(k: usize) -> Result<()> {
    if k < 3 {
        return Err(Error::BadRange(format!(
            "aks-appendix needs k >= 3 (both moduli positive), got {k}"
        )));
    }
    Ok(())
}

/// Whether `G(i, j)` deletes `e`: `ones(l) = i` modulo `floor((k+1)/2)`
/// and `ones(r) = j` modulo `ceil((k+1)/2)`.
pub fn aks_deletes(k: usize, i: usize, j: usize, e: &Edge) -> Result<bool> {
    check_aks(k, i, j)?;
    let (a, b) = aks_moduli(k);
    Ok(e.prefix_ones() % a == i && e.suffix_ones() % b == j)
}

/// Whether the appendix graph deletes `e`: `ones(l) = 0` modulo
/// `floor((k-1)/2)` and `ones(r) = 0` modulo `ceil((k-1)/2)`.
pub fn aks_appendix_deletes(k: usize, e: &Edge) -> Result<bool> {
    check_appendix(k)?;
    let (a, b) = appendix_moduli(k);
    Ok(e.prefix_ones().is_multiple_of(a) && e.suffix_ones().is_multiple_of(b))
}

/// `G(i, j)`, which is `Q_k`-free: the middle star of any `Q_k` has enough
/// stars on each side to hit both residues.
pub fn aks_graph(n: usize, k: usize, i: usize, j: usize) -> Result<Subgraph> {
    check_aks(k, i, j)?;
    let (a, b) = aks_moduli(k);
    Ok(
        Subgraph::from_predicate(n, |e| !(e.prefix_ones() % a == i && e.suffix_ones() % b == j))?
            .with_name(format!("aks n={n} k={k} i={i} j={j}")),
    )
}

pub fn aks_appendix_graph(n: usize, k: usize) -> Result<Subgraph> {
    check_appendix(k)?;
    let (a, b) = appendix_moduli(k);
    Ok(
        Subgraph::from_predicate(n, |e| !(e.prefix_ones() % a == 0 && e.suffix_ones() % b == 0))?
            .with_name(format!("aks-appendix n={n} k={k}")),
    )
}
