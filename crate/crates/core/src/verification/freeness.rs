use rayon::prelude::*;
use serde::Serialize;

use crate::counting::{first_cycle, CycleWitness};
use crate::cube::{check_materialize, low_mask, masks_with_popcount, subsets, EdgeSet, StarVector};
use crate::error::{Error, Result};
use crate::pattern::Pattern;

/// A copy of the forbidden pattern found in a subgraph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Witness {
    SubCube(StarVector),
    Cycle(CycleWitness),
}

impl Witness {
    pub fn lies_in<G: EdgeSet + ?Sized>(&self, g: &G) -> bool {
        match self {
            Witness::SubCube(sv) => sv.n() == g.dim() && sv.all_edges(|e| g.has_edge(e)),
            Witness::Cycle(c) => c.n() == g.dim() && c.edges().iter().all(|e| g.has_edge(e)),
        }
    }
}

impl Serialize for Witness {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeMap;
        let mut map = s.serialize_map(None)?;
        match self {
            Witness::SubCube(sv) => {
                map.serialize_entry("kind", "sub-cube")?;
                map.serialize_entry("star_vector", &sv.to_string())?;
            }
            Witness::Cycle(c) => {
                let vertices: Vec<String> = c.vertices().iter().map(|v| v.to_string()).collect();
                map.serialize_entry("kind", "cycle")?;
                map.serialize_entry("vertices", &vertices)?;
                map.serialize_entry("star_list", c.star_list())?;
            }
        }
        map.end()
    }
}

/// Outcome of an exhaustive freeness check.
///
/// `checked_count` is the number of candidates examined in canonical order
/// up to and including the witness: sub-cube star vectors for `Q_k`, start
/// vertices for cycles.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FreenessVerdict {
    pub pattern: Pattern,
    pub free: bool,
    pub witness: Option<Witness>,
    pub checked_count: u64,
}

impl FreenessVerdict {
    fn free(pattern: Pattern, checked_count: u64) -> Self {
        FreenessVerdict {
            pattern,
            free: true,
            witness: None,
            checked_count,
        }
    }

    fn found<G: EdgeSet + ?Sized>(pattern: Pattern, g: &G, w: Witness, checked: u64) -> Self {
        assert!(w.lies_in(g), "witness must lie in the subgraph");
        FreenessVerdict {
            pattern,
            free: false,
            witness: Some(w),
            checked_count: checked,
        }
    }
}

// star masks per parallel batch
const BATCH: usize = 256;

/// Whether `g` has no `Q_k`, scanning star sets in colexicographic order and
/// then the remaining cells in binary order. The reported witness is the
/// first in that order regardless of the thread count.
pub fn is_qk_free<G: EdgeSet + ?Sized>(g: &G, k: usize) -> Result<FreenessVerdict> {
    let n = g.dim();
    check_materialize(n)?;
    if k == 0 || k > n {
        return Err(Error::BadRange(format!("Q_k check needs 1 <= k <= n, got k={k} n={n}")));
    }
    let pattern = Pattern::SubCube(k);
    let per_mask = 1u64 << (n - k);
    let mut masks = masks_with_popcount(n, k).peekable();
    let mut scanned = 0u64;
    while masks.peek().is_some() {
        let batch: Vec<u64> = masks.by_ref().take(BATCH).collect();
        let hit = batch.par_iter().enumerate().find_map_first(|(i, &stars)| {
            subsets(low_mask(n) & !stars).enumerate().find_map(|(rank, ones)| {
                let sv = StarVector::new(n, stars, ones).expect("disjoint masks");
                sv.all_edges(|e| g.has_edge(e)).then_some((i, rank, sv))
            })
        });
        if let Some((i, rank, sv)) = hit {
            let checked = (scanned + i as u64) * per_mask + rank as u64 + 1;
            return Ok(FreenessVerdict::found(pattern, g, Witness::SubCube(sv), checked));
        }
        scanned += batch.len() as u64;
    }
    Ok(FreenessVerdict::free(pattern, scanned * per_mask))
}

/// Whether `g` has no `2k`-cycle; the witness is the lexicographically
/// smallest canonical cycle.
pub fn is_c2k_free<G: EdgeSet + ?Sized>(g: &G, k: usize) -> Result<FreenessVerdict> {
    if k < 2 {
        return Err(Error::BadCycleLength(2 * k));
    }
    check_materialize(g.dim())?;
    let pattern = Pattern::Cycle(2 * k);
    let (found, scanned) = first_cycle(g, 2 * k)?;
    Ok(match found {
        Some(c) => FreenessVerdict::found(pattern, g, Witness::Cycle(c), scanned),
        None => FreenessVerdict::free(pattern, scanned),
    })
}

/// Freeness for any pattern. Sub-cubes larger than the ambient cube are
/// trivially absent.
pub fn verify_free<G: EdgeSet + ?Sized>(g: &G, pattern: Pattern) -> Result<FreenessVerdict> {
    match pattern {
        Pattern::Edge => Ok(FreenessVerdict {
            pattern,
            ..is_qk_free(g, 1)?
        }),
        Pattern::SubCube(k) if k > g.dim() => Ok(FreenessVerdict::free(pattern, 0)),
        Pattern::SubCube(k) => is_qk_free(g, k),
        Pattern::Cycle(m) => is_c2k_free(g, m / 2),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{aks_graph, conder_graph, layer_complement, parity_q2_packing};
    use crate::cube::{FullCube, Subgraph};

    #[test]
    fn full_cube_has_everything() {
        for k in 1..=4 {
            let v = is_qk_free(&FullCube(4), k).unwrap();
            assert!(!v.free);
            assert_eq!(v.checked_count, 1);
            let Some(Witness::SubCube(sv)) = v.witness else { panic!() };
            assert_eq!(sv.star_mask(), (1 << k) - 1);
            assert_eq!(sv.ones_mask(), 0);
        }
        let v = is_c2k_free(&FullCube(3), 2).unwrap();
        assert!(!v.free);
        let Some(Witness::Cycle(c)) = v.witness else { panic!() };
        assert_eq!(c.len(), 4);
    }

    #[test]
    fn construction_examples() {
        assert!(is_qk_free(&aks_graph(6, 3, 0, 0).unwrap(), 3).unwrap().free);
        assert!(is_qk_free(&layer_complement(5, 2, 0).unwrap(), 2).unwrap().free);
        assert!(is_c2k_free(&conder_graph(7).unwrap(), 3).unwrap().free);
        assert!(is_c2k_free(&parity_q2_packing(7).unwrap().graph, 3).unwrap().free);
    }

    #[test]
    fn free_verdict_counts_all_candidates() {
        let g = Subgraph::empty(4).unwrap();
        let v = is_qk_free(&g, 2).unwrap();
        assert!(v.free && v.witness.is_none());
        assert_eq!(v.checked_count, 24);
        assert_eq!(is_c2k_free(&g, 2).unwrap().checked_count, 16);
    }

    #[test]
    fn witness_is_first_in_order() {
        // only the face 1**1 survives among Q_2's on positions {1, 2}
        let g = Subgraph::from_subcubes(4, &[StarVector::parse("1**1", 4).unwrap()]).unwrap();
        let v = is_qk_free(&g, 2).unwrap();
        let Some(Witness::SubCube(sv)) = &v.witness else { panic!() };
        assert_eq!(sv.to_string(), "1**1");
        // star masks 0b0011, 0b0101 come first, then fills 00, 01, 10, 11 of 0b0110
        assert_eq!(v.checked_count, 2 * 4 + 4);
        let json = serde_json::to_value(&v).unwrap();
        assert_eq!(json["witness"]["star_vector"], "1**1");
        assert_eq!(json["pattern"], "q2");
    }

    #[test]
    fn argument_checks() {
        assert!(is_qk_free(&FullCube(3), 4).is_err());
        assert!(is_qk_free(&FullCube(31), 1).is_err());
        assert!(verify_free(&FullCube(3), Pattern::SubCube(4)).unwrap().free);
        assert!(!verify_free(&FullCube(3), Pattern::Edge).unwrap().free);
    }
}
