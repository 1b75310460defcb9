use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// Widest dimension a star vector can be stored in (one bit per cell).
pub const MAX_STAR_DIM: usize = 64;

/// Operations that materialize per-vertex or per-edge state reject larger `n`.
pub const MAX_MATERIALIZE_DIM: usize = 30;

pub(crate) fn low_mask(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

pub(crate) fn check_materialize(n: usize) -> Result<()> {
    if n > MAX_MATERIALIZE_DIM {
        return Err(Error::DimensionTooLarge {
            n,
            limit: MAX_MATERIALIZE_DIM,
        });
    }
    Ok(())
}

fn check_dim(n: usize) -> Result<()> {
    if n == 0 {
        return Err(Error::BadRange("dimension must be positive".into()));
    }
    if n > MAX_STAR_DIM {
        return Err(Error::DimensionTooLarge {
            n,
            limit: MAX_STAR_DIM,
        });
    }
    Ok(())
}

/// One cell of a star representation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Cell {
    Zero,
    One,
    Star,
}

impl Cell {
    pub fn as_char(self) -> char {
        match self {
            Cell::Zero => '0',
            Cell::One => '1',
            Cell::Star => '*',
        }
    }

    // '*' < '0' < '1', the byte order of the canonical text form
    fn rank(self) -> u8 {
        match self {
            Cell::Star => 0,
            Cell::Zero => 1,
            Cell::One => 2,
        }
    }
}

/// A word over `{0, 1, *}` naming a sub-cube `Q_k` of `Q_n`, `k` being the
/// number of stars.
///
/// Position `i` of the word is bit `i` of both masks; position 0 is the
/// leftmost character of the text form.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct StarVector {
    n: usize,
    stars: u64,
    ones: u64,
}

impl StarVector {
    pub fn new(n: usize, stars: u64, ones: u64) -> Result<Self> {
        check_dim(n)?;
        let mask = low_mask(n);
        if stars & !mask != 0 || ones & !mask != 0 {
            return Err(Error::BadRange(format!(
                "cell mask exceeds dimension {n}"
            )));
        }
        if stars & ones != 0 {
            return Err(Error::BadRange("a cell cannot be both star and one".into()));
        }
        Ok(StarVector { n, stars, ones })
    }

    /// Parses the text form; `*` and `★` are both accepted as the star.
    pub fn parse(text: &str, n: usize) -> Result<Self> {
        check_dim(n)?;
        let chars: Vec<char> = text.chars().collect();
        if chars.len() != n {
            return Err(Error::BadLength {
                expected: n,
                found: chars.len(),
            });
        }
        let (mut stars, mut ones) = (0u64, 0u64);
        for (position, &ch) in chars.iter().enumerate() {
            match ch {
                '0' => {}
                '1' => ones |= 1 << position,
                '*' | '★' => stars |= 1 << position,
                _ => return Err(Error::BadChar { ch, position }),
            }
        }
        Ok(StarVector { n, stars, ones })
    }

    /// The whole cube `Q_n` as a single star vector.
    pub fn full(n: usize) -> Result<Self> {
        check_dim(n)?;
        Ok(StarVector {
            n,
            stars: low_mask(n),
            ones: 0,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Number of stars.
    pub fn k(&self) -> usize {
        self.stars.count_ones() as usize
    }

    pub fn star_mask(&self) -> u64 {
        self.stars
    }

    pub fn ones_mask(&self) -> u64 {
        self.ones
    }

    pub fn cell(&self, position: usize) -> Cell {
        if self.stars >> position & 1 == 1 {
            Cell::Star
        } else if self.ones >> position & 1 == 1 {
            Cell::One
        } else {
            Cell::Zero
        }
    }

    pub fn star_positions(&self) -> Vec<usize> {
        bit_positions(self.stars).collect()
    }

    /// Number of 1-cells.
    pub fn ones(&self) -> usize {
        self.ones.count_ones() as usize
    }

    pub fn is_vertex(&self) -> bool {
        self.stars == 0
    }

    pub fn as_edge(&self) -> Option<Edge> {
        (self.stars.count_ones() == 1).then(|| Edge {
            n: self.n,
            star: self.stars.trailing_zeros() as usize,
            bits: self.ones,
        })
    }

    pub fn as_vertex(&self) -> Option<Vertex> {
        self.is_vertex().then_some(Vertex {
            n: self.n,
            bits: self.ones,
        })
    }

    /// All `2^k` vertices, in increasing integer order.
    pub fn expand_vertices(&self) -> Result<Vec<Vertex>> {
        check_materialize(self.k())?;
        let mut out: Vec<Vertex> = subsets(self.stars)
            .map(|fill| Vertex {
                n: self.n,
                bits: self.ones | fill,
            })
            .collect();
        out.sort();
        Ok(out)
    }

    /// All `k * 2^(k-1)` edges of the sub-cube, in canonical key order.
    pub fn expand_edges(&self) -> Result<Vec<Edge>> {
        if self.stars == 0 {
            return Err(Error::NoStars);
        }
        check_materialize(self.k())?;
        let mut out = Vec::with_capacity(self.k() << (self.k() - 1));
        for star in bit_positions(self.stars) {
            let rest = self.stars & !(1 << star);
            for fill in subsets(rest) {
                out.push(Edge {
                    n: self.n,
                    star,
                    bits: self.ones | fill,
                });
            }
        }
        out.sort();
        Ok(out)
    }

    /// True when every edge of the sub-cube satisfies `has_edge`.
    pub fn all_edges(&self, mut has_edge: impl FnMut(&Edge) -> bool) -> bool {
        for star in bit_positions(self.stars) {
            let rest = self.stars & !(1 << star);
            for fill in subsets(rest) {
                let e = Edge {
                    n: self.n,
                    star,
                    bits: self.ones | fill,
                };
                if !has_edge(&e) {
                    return false;
                }
            }
        }
        true
    }

    /// The binary segments between consecutive stars, `p_0 * p_1 * ... * p_k`,
    /// as ones-counts.
    pub fn segment_ones(&self) -> Vec<usize> {
        let mut out = Vec::with_capacity(self.k() + 1);
        let mut count = 0;
        for p in 0..self.n {
            match self.cell(p) {
                Cell::Star => {
                    out.push(count);
                    count = 0;
                }
                Cell::One => count += 1,
                Cell::Zero => {}
            }
        }
        out.push(count);
        out
    }

    fn cmp_key(&self, other: &Self) -> Ordering {
        self.n.cmp(&other.n).then_with(|| {
            (0..self.n)
                .map(|p| self.cell(p).rank().cmp(&other.cell(p).rank()))
                .find(|o| o.is_ne())
                .unwrap_or(Ordering::Equal)
        })
    }
}

impl Ord for StarVector {
    fn cmp(&self, other: &Self) -> Ordering {
        self.cmp_key(other)
    }
}

impl PartialOrd for StarVector {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for StarVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for p in 0..self.n {
            write!(f, "{}", self.cell(p).as_char())?;
        }
        Ok(())
    }
}

impl FromStr for StarVector {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        StarVector::parse(s, s.chars().count())
    }
}

/// A vertex of `Q_n`; position `i` is bit `i` of `bits`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Vertex {
    n: usize,
    bits: u64,
}

impl Vertex {
    pub fn new(n: usize, bits: u64) -> Result<Self> {
        check_dim(n)?;
        if bits & !low_mask(n) != 0 {
            return Err(Error::BadRange(format!("vertex {bits} outside Q_{n}")));
        }
        Ok(Vertex { n, bits })
    }

    pub(crate) fn raw(n: usize, bits: u64) -> Self {
        Vertex { n, bits }
    }

    pub fn parse(text: &str, n: usize) -> Result<Self> {
        let sv = StarVector::parse(text, n)?;
        sv.as_vertex().ok_or(Error::BadChar {
            ch: '*',
            position: sv.stars.trailing_zeros() as usize,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn bits(&self) -> u64 {
        self.bits
    }

    pub fn ones(&self) -> usize {
        self.bits.count_ones() as usize
    }

    pub fn flip(&self, position: usize) -> Vertex {
        Vertex {
            n: self.n,
            bits: self.bits ^ (1 << position),
        }
    }

    /// The edge between this vertex and its neighbor across `position`.
    pub fn edge_to(&self, position: usize) -> Edge {
        Edge {
            n: self.n,
            star: position,
            bits: self.bits & !(1 << position),
        }
    }

    /// The edge joining two adjacent vertices, or `None` if they are not at
    /// Hamming distance one.
    pub fn edge_with(&self, other: &Vertex) -> Option<Edge> {
        let diff = self.bits ^ other.bits;
        (self.n == other.n && diff.count_ones() == 1)
            .then(|| self.edge_to(diff.trailing_zeros() as usize))
    }
}

impl fmt::Display for Vertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for p in 0..self.n {
            write!(f, "{}", if self.bits >> p & 1 == 1 { '1' } else { '0' })?;
        }
        Ok(())
    }
}

/// An edge `l * r` of `Q_n`: a star vector with exactly one star.
///
/// `bits` holds the non-star cells; the star bit is always clear, so `bits`
/// is also the lower endpoint.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Edge {
    n: usize,
    star: usize,
    bits: u64,
}

impl Edge {
    pub fn new(n: usize, star: usize, bits: u64) -> Result<Self> {
        check_dim(n)?;
        if star >= n {
            return Err(Error::BadRange(format!("star position {star} >= {n}")));
        }
        if bits & !low_mask(n) != 0 {
            return Err(Error::BadRange(format!("edge bits exceed dimension {n}")));
        }
        Ok(Edge {
            n,
            star,
            bits: bits & !(1 << star),
        })
    }

    pub(crate) fn raw(n: usize, star: usize, bits: u64) -> Self {
        Edge { n, star, bits }
    }

    /// Parses a one-star text form.
    pub fn parse(text: &str, n: usize) -> Result<Self> {
        let sv = StarVector::parse(text, n)?;
        match sv.k() {
            1 => Ok(sv.as_edge().expect("one star")),
            0 => Err(Error::NoStars),
            _ => Err(Error::BadRange(format!("{text:?} has {} stars", sv.k()))),
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn star_position(&self) -> usize {
        self.star
    }

    pub fn bits(&self) -> u64 {
        self.bits
    }

    pub fn endpoints(&self) -> (Vertex, Vertex) {
        (
            Vertex::raw(self.n, self.bits),
            Vertex::raw(self.n, self.bits | (1 << self.star)),
        )
    }

    /// Ones-count of the cells left of the star.
    pub fn prefix_ones(&self) -> usize {
        (self.bits & low_mask(self.star)).count_ones() as usize
    }

    /// Ones-count of the cells right of the star.
    pub fn suffix_ones(&self) -> usize {
        (self.bits >> self.star).count_ones() as usize
    }

    pub fn prefix(&self) -> String {
        (0..self.star).map(|p| bit_char(self.bits, p)).collect()
    }

    pub fn suffix(&self) -> String {
        (self.star + 1..self.n).map(|p| bit_char(self.bits, p)).collect()
    }

    /// Edge layer: total number of 1-cells.
    pub fn layer(&self) -> EdgeLayerIndex {
        EdgeLayerIndex(self.bits.count_ones() as usize)
    }

    pub fn to_star_vector(&self) -> StarVector {
        StarVector {
            n: self.n,
            stars: 1 << self.star,
            ones: self.bits,
        }
    }

    /// Dense index in `[0, n 2^(n-1))`: star position major, then the
    /// non-star cells packed into `n-1` bits.
    pub fn index(&self) -> usize {
        let low = self.bits & low_mask(self.star);
        let high = self.bits >> (self.star + 1);
        (self.star << (self.n - 1)) | (low | high << self.star) as usize
    }

    pub fn from_index(n: usize, index: usize) -> Edge {
        let star = index >> (n - 1);
        let packed = (index as u64) & low_mask(n - 1);
        let bits = (packed & low_mask(star)) | ((packed >> star) << (star + 1));
        Edge { n, star, bits }
    }
}

fn bit_char(bits: u64, p: usize) -> char {
    if bits >> p & 1 == 1 {
        '1'
    } else {
        '0'
    }
}

impl Ord for Edge {
    fn cmp(&self, other: &Self) -> Ordering {
        self.to_star_vector().cmp(&other.to_star_vector())
    }
}

impl PartialOrd for Edge {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.to_star_vector().fmt(f)
    }
}

/// Number of 1-cells in an edge's star representation, in `[0, n-1]`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct EdgeLayerIndex(usize);

impl EdgeLayerIndex {
    pub fn value(self) -> usize {
        self.0
    }
}

pub fn edge_layer(e: &Edge) -> EdgeLayerIndex {
    e.layer()
}

/// Iterates the set bit positions of `mask` in increasing order.
pub(crate) fn bit_positions(mut mask: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        (mask != 0).then(|| {
            let p = mask.trailing_zeros() as usize;
            mask &= mask - 1;
            p
        })
    })
}

/// Iterates all submasks of `mask`, starting from 0, in increasing order.
pub(crate) fn subsets(mask: u64) -> impl Iterator<Item = u64> {
    let mut next = Some(0u64);
    std::iter::from_fn(move || {
        let cur = next?;
        next = if cur == mask {
            None
        } else {
            Some(((cur | !mask).wrapping_add(1)) & mask)
        };
        Some(cur)
    })
}

/// Spreads the low bits of `value` over the set positions of `mask`.
pub(crate) fn deposit(value: u64, mask: u64) -> u64 {
    let mut out = 0;
    for (i, p) in bit_positions(mask).enumerate() {
        out |= (value >> i & 1) << p;
    }
    out
}

/// Masks over `n` bits with exactly `k` bits set, in increasing numeric
/// (colexicographic) order.
pub(crate) fn masks_with_popcount(n: usize, k: usize) -> impl Iterator<Item = u64> {
    let limit = if n >= 64 { u128::MAX } else { 1u128 << n };
    let mut next: Option<u64> = if k > n {
        None
    } else {
        Some(low_mask(k))
    };
    std::iter::from_fn(move || {
        let cur = next?;
        next = if cur == 0 {
            None
        } else {
            // Gosper's hack
            let c = cur & cur.wrapping_neg();
            let r = cur.wrapping_add(c);
            let nxt = (((r ^ cur) >> 2) / c) | r;
            (r != 0 && (nxt as u128) < limit).then_some(nxt)
        };
        Some(cur)
    })
}
