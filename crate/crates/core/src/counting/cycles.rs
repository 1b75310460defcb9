use std::fmt;
use std::ops::ControlFlow;

use rayon::prelude::*;

use crate::cube::{EdgeSet, FullCube, Vertex, Edge};
use crate::error::{Error, Result};

/// Largest dimension the cycle enumerator accepts.
pub const MAX_CYCLE_DIM: usize = 20;

/// Longest cycle (in vertices) the enumerator accepts.
pub const MAX_CYCLE_LEN: usize = 64;

/// A cycle of a hypercube subgraph, stored in canonical orientation: it
/// starts at its smallest vertex and the second vertex is smaller than the
/// last, which makes the vertex sequence the lexicographically smallest of
/// its `2 * len` rotations and reflections.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CycleWitness {
    vertices: Vec<Vertex>,
    star_list: Vec<usize>,
}

impl CycleWitness {
    /// Validates a closed vertex sequence and stores its canonical form.
    pub fn new(vertices: Vec<Vertex>) -> Result<Self> {
        let len = vertices.len();
        if len < 4 || len % 2 == 1 {
            return Err(Error::BadCycleLength(len));
        }
        let n = vertices[0].n();
        for v in &vertices {
            if v.n() != n {
                return Err(Error::DimensionMismatch {
                    expected: n,
                    found: v.n(),
                });
            }
        }
        for i in 0..len {
            let (a, b) = (vertices[i], vertices[(i + 1) % len]);
            if (a.bits() ^ b.bits()).count_ones() != 1 {
                return Err(Error::BadRange(format!(
                    "{a} and {b} are not adjacent"
                )));
            }
        }
        let mut sorted: Vec<u64> = vertices.iter().map(|v| v.bits()).collect();
        sorted.sort_unstable();
        if sorted.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::BadRange("cycle repeats a vertex".into()));
        }
        Ok(Self::canonical(vertices))
    }

    fn canonical(vertices: Vec<Vertex>) -> Self {
        let len = vertices.len();
        let start = (0..len).min_by_key(|&i| vertices[i].bits()).expect("non-empty");
        let next = vertices[(start + 1) % len];
        let prev = vertices[(start + len - 1) % len];
        let ordered: Vec<Vertex> = if next.bits() < prev.bits() {
            (0..len).map(|i| vertices[(start + i) % len]).collect()
        } else {
            (0..len).map(|i| vertices[(start + len - i) % len]).collect()
        };
        Self::from_canonical(ordered)
    }

    fn from_canonical(vertices: Vec<Vertex>) -> Self {
        let len = vertices.len();
        let star_list = (0..len)
            .map(|i| (vertices[i].bits() ^ vertices[(i + 1) % len].bits()).trailing_zeros() as usize)
            .collect();
        CycleWitness {
            vertices,
            star_list,
        }
    }

    pub(crate) fn from_bits(n: usize, path: &[u64]) -> Self {
        Self::from_canonical(path.iter().map(|&b| Vertex::raw(n, b)).collect())
    }

    pub fn n(&self) -> usize {
        self.vertices[0].n()
    }

    /// Number of vertices (and edges).
    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn vertices(&self) -> &[Vertex] {
        &self.vertices
    }

    /// Star positions of the edges in traversal order.
    pub fn star_list(&self) -> &[usize] {
        &self.star_list
    }

    /// Mask of the star positions used by the cycle.
    pub fn position_mask(&self) -> u64 {
        self.star_list.iter().fold(0, |m, &p| m | 1 << p)
    }

    pub fn edges(&self) -> Vec<Edge> {
        let len = self.len();
        (0..len)
            .map(|i| {
                self.vertices[i]
                    .edge_with(&self.vertices[(i + 1) % len])
                    .expect("adjacent by construction")
            })
            .collect()
    }

    pub fn lies_in(&self, g: &impl EdgeSet) -> bool {
        g.dim() == self.n() && self.edges().iter().all(|e| g.has_edge(e))
    }
}

impl fmt::Display for CycleWitness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, v) in self.vertices.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{v}")?;
        }
        Ok(())
    }
}

pub(crate) fn check_cycle_args(n: usize, len: usize) -> Result<()> {
    if len < 4 || len % 2 == 1 {
        return Err(Error::BadCycleLength(len));
    }
    if n > MAX_CYCLE_DIM || len > MAX_CYCLE_LEN {
        return Err(Error::EnumerationTooLarge(format!(
            "{len}-cycles in dimension {n} (limits: n <= {MAX_CYCLE_DIM}, length <= {MAX_CYCLE_LEN})"
        )));
    }
    Ok(())
}

/// Visits, in lexicographic order, every canonical `len`-cycle of `g` whose
/// smallest vertex is `start`. The callback receives the canonical vertex
/// sequence.
pub(crate) fn cycles_from<G: EdgeSet + ?Sized>(
    g: &G,
    start: u64,
    len: usize,
    visit: &mut impl FnMut(&[u64]) -> ControlFlow<()>,
) -> ControlFlow<()> {
    let mut path = Vec::with_capacity(len);
    path.push(start);
    extend(g, start, len, &mut path, visit)
}

fn extend<G: EdgeSet + ?Sized>(
    g: &G,
    start: u64,
    len: usize,
    path: &mut Vec<u64>,
    visit: &mut impl FnMut(&[u64]) -> ControlFlow<()>,
) -> ControlFlow<()> {
    let n = g.dim();
    let cur = *path.last().expect("non-empty path");
    if path.len() == len {
        let closing = cur ^ start;
        if closing.count_ones() == 1
            && path[1] < cur
            && g.has_edge_at(cur, closing.trailing_zeros() as usize)
        {
            return visit(path);
        }
        return ControlFlow::Continue(());
    }
    // steps still needed to get back to `start` once the next vertex is placed
    let remaining = (len - path.len()) as u32;
    let mut next = [0u64; 64];
    let mut count = 0;
    for p in 0..n {
        let v = cur ^ (1 << p);
        if v > start
            && (v ^ start).count_ones() <= remaining
            && g.has_edge_at(cur, p)
            && !path.contains(&v)
        {
            next[count] = v;
            count += 1;
        }
    }
    let next = &mut next[..count];
    next.sort_unstable();
    for &v in next.iter() {
        path.push(v);
        let flow = extend(g, start, len, path, visit);
        path.pop();
        flow?;
    }
    ControlFlow::Continue(())
}

/// Number of `len`-cycles of `g` (distinct canonical forms).
pub fn count_cycles<G: EdgeSet + ?Sized>(g: &G, len: usize) -> Result<u64> {
    let n = g.dim();
    check_cycle_args(n, len)?;
    Ok((0..1u64 << n)
        .into_par_iter()
        .map(|start| {
            let mut count = 0u64;
            let _ = cycles_from(g, start, len, &mut |_| {
                count += 1;
                ControlFlow::Continue(())
            });
            count
        })
        .sum())
}

/// All canonical `len`-cycles of `g`, in lexicographic order.
pub fn enumerate_cycles<G: EdgeSet + ?Sized>(g: &G, len: usize) -> Result<Vec<CycleWitness>> {
    let n = g.dim();
    check_cycle_args(n, len)?;
    let per_start: Vec<Vec<CycleWitness>> = (0..1u64 << n)
        .into_par_iter()
        .map(|start| {
            let mut out = Vec::new();
            let _ = cycles_from(g, start, len, &mut |path| {
                out.push(CycleWitness::from_bits(n, path));
                ControlFlow::Continue(())
            });
            out
        })
        .collect();
    Ok(per_start.into_iter().flatten().collect())
}

/// The lexicographically smallest `len`-cycle of `g`, with the number of
/// start vertices scanned to find it (all of them when there is none).
pub fn first_cycle<G: EdgeSet + ?Sized>(g: &G, len: usize) -> Result<(Option<CycleWitness>, u64)> {
    let n = g.dim();
    check_cycle_args(n, len)?;
    let found = (0..1u64 << n).into_par_iter().find_map_first(|start| {
        let mut hit = None;
        let _ = cycles_from(g, start, len, &mut |path| {
            hit = Some(CycleWitness::from_bits(n, path));
            ControlFlow::Break(())
        });
        hit.map(|w| (start, w))
    });
    Ok(match found {
        Some((start, w)) => (Some(w), start + 1),
        None => (None, 1u64 << n),
    })
}

/// `z_{k,l}`: number of `2l`-cycles in `Q_k` whose star lists use all `k`
/// positions, by direct canonical enumeration.
pub fn z_kl(k: usize, l: usize) -> Result<u64> {
    if k == 0 || l < 2 {
        return Err(Error::BadRange(format!("z({k},{l}) needs k >= 1, l >= 2")));
    }
    check_cycle_args(k, 2 * l)?;
    if k > 12 {
        return Err(Error::EnumerationTooLarge(format!("z({k},{l}) with k > 12")));
    }
    let cube = FullCube(k);
    let all = crate::cube::low_mask(k);
    Ok((0..1u64 << k)
        .into_par_iter()
        .map(|start| {
            let mut count = 0u64;
            let _ = cycles_from(&cube, start, 2 * l, &mut |path| {
                let used = (0..path.len())
                    .fold(0, |m, i| m | (path[i] ^ path[(i + 1) % path.len()]));
                if used == all {
                    count += 1;
                }
                ControlFlow::Continue(())
            });
            count
        })
        .sum())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cube::Subgraph;

    #[test]
    fn cube_cycle_counts() {
        assert_eq!(count_cycles(&FullCube(3), 6).unwrap(), 16);
        assert_eq!(count_cycles(&FullCube(3), 4).unwrap(), 6);
        assert_eq!(count_cycles(&FullCube(2), 4).unwrap(), 1);
        assert_eq!(count_cycles(&Subgraph::full_cube(3).unwrap(), 6).unwrap(), 16);
    }

    #[test]
    fn bad_lengths() {
        assert_eq!(count_cycles(&FullCube(3), 5), Err(Error::BadCycleLength(5)));
        assert_eq!(count_cycles(&FullCube(3), 2), Err(Error::BadCycleLength(2)));
        assert!(matches!(
            count_cycles(&FullCube(21), 4),
            Err(Error::EnumerationTooLarge(_))
        ));
    }

    #[test]
    fn z_examples() {
        assert_eq!(z_kl(3, 3).unwrap(), 16);
        assert_eq!(z_kl(3, 2).unwrap(), 0);
        assert_eq!(z_kl(2, 2).unwrap(), 1);
    }

    #[test]
    fn witness_is_canonical() {
        let q = FullCube(3);
        let all = enumerate_cycles(&q, 6).unwrap();
        assert_eq!(all.len(), 16);
        for w in &all {
            let bits: Vec<u64> = w.vertices().iter().map(|v| v.bits()).collect();
            assert_eq!(bits[0], *bits.iter().min().unwrap());
            assert!(bits[1] < bits[5]);
            let again = CycleWitness::new(w.vertices().iter().rev().copied().collect()).unwrap();
            assert_eq!(&again, w);
            // every used position appears an even number of times
            for p in 0..3 {
                assert_eq!(w.star_list().iter().filter(|&&s| s == p).count() % 2, 0);
            }
        }
        let mut sorted = all.clone();
        sorted.sort();
        assert_eq!(sorted, all);
        let (first, scanned) = first_cycle(&q, 6).unwrap();
        assert_eq!(first.as_ref(), all.first());
        assert_eq!(scanned, 1);
    }

    #[test]
    fn witness_validation() {
        let v = |s: &str| Vertex::parse(s, 2).unwrap();
        assert!(CycleWitness::new(vec![v("00"), v("10"), v("11"), v("01")]).is_ok());
        assert!(CycleWitness::new(vec![v("00"), v("11"), v("10"), v("01")]).is_err());
        assert!(CycleWitness::new(vec![v("00"), v("10"), v("00"), v("10")]).is_err());
    }
}
