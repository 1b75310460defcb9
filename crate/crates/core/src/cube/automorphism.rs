use super::star::{Edge, StarVector, Vertex};
use super::subgraph::Subgraph;
use crate::error::{Error, Result};

/// A hypercube automorphism: move the cell at position `i` to `perm[i]`,
/// then XOR the non-star cells with `flips`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Automorphism {
    perm: Vec<usize>,
    flips: u64,
}

impl Automorphism {
    pub fn new(perm: Vec<usize>, flips: u64) -> Result<Self> {
        let n = perm.len();
        let mut seen = vec![false; n];
        for &p in &perm {
            if p >= n || seen[p] {
                return Err(Error::BadRange(format!("{perm:?} is not a permutation")));
            }
            seen[p] = true;
        }
        if n < 64 && flips >> n != 0 {
            return Err(Error::BadRange(format!("flip mask exceeds dimension {n}")));
        }
        Ok(Automorphism { perm, flips })
    }

    pub fn identity(n: usize) -> Self {
        Automorphism {
            perm: (0..n).collect(),
            flips: 0,
        }
    }

    pub fn n(&self) -> usize {
        self.perm.len()
    }

    pub fn perm(&self) -> &[usize] {
        &self.perm
    }

    pub fn flips(&self) -> u64 {
        self.flips
    }

    fn permute_bits(&self, bits: u64) -> u64 {
        self.perm
            .iter()
            .enumerate()
            .fold(0, |acc, (i, &p)| acc | ((bits >> i & 1) << p))
    }

    fn check(&self, n: usize) -> Result<()> {
        if n != self.n() {
            return Err(Error::DimensionMismatch {
                expected: self.n(),
                found: n,
            });
        }
        Ok(())
    }

    pub fn apply_vertex(&self, v: &Vertex) -> Result<Vertex> {
        self.check(v.n())?;
        Ok(Vertex::raw(v.n(), self.permute_bits(v.bits()) ^ self.flips))
    }

    pub fn apply_star_vector(&self, sv: &StarVector) -> Result<StarVector> {
        self.check(sv.n())?;
        let stars = self.permute_bits(sv.star_mask());
        let ones = (self.permute_bits(sv.ones_mask()) ^ self.flips) & !stars;
        StarVector::new(sv.n(), stars, ones)
    }

    pub fn apply_edge(&self, e: &Edge) -> Result<Edge> {
        self.check(e.n())?;
        let star = self.perm[e.star_position()];
        let bits = (self.permute_bits(e.bits()) ^ self.flips) & !(1 << star);
        Ok(Edge::raw(e.n(), star, bits))
    }

    pub fn apply(&self, g: &Subgraph) -> Result<Subgraph> {
        self.check(g.n())?;
        let edges = g
            .edges()
            .iter()
            .map(|e| self.apply_edge(e))
            .collect::<Result<Vec<_>>>()?;
        Subgraph::from_edges(g.n(), edges)
    }

    /// `other` after `self`.
    pub fn then(&self, other: &Automorphism) -> Result<Automorphism> {
        self.check(other.n())?;
        let perm = self.perm.iter().map(|&p| other.perm[p]).collect();
        let flips = other.permute_bits(self.flips) ^ other.flips;
        Ok(Automorphism { perm, flips })
    }

    pub fn inverse(&self) -> Automorphism {
        let mut perm = vec![0; self.n()];
        for (i, &p) in self.perm.iter().enumerate() {
            perm[p] = i;
        }
        let inv = Automorphism { perm, flips: 0 };
        let flips = inv.permute_bits(self.flips);
        Automorphism { flips, ..inv }
    }
}

/// Image of `g` under "permute positions, then XOR non-star cells with
/// `flips`".
pub fn apply_automorphism(perm: &[usize], flips: u64, g: &Subgraph) -> Result<Subgraph> {
    Automorphism::new(perm.to_vec(), flips)?.apply(g)
}
