use std::fmt::Write as _;
use std::path::Path;

use super::star::{check_materialize, masks_with_popcount, Edge, StarVector, Vertex};
use crate::error::{Error, Result};

/// Read access to an edge set on the vertices of `Q_n`, addressed by
/// dense edge index (see [`Edge::index`]).
pub trait EdgeSet: Sync {
    fn dim(&self) -> usize;

    fn contains_index(&self, index: usize) -> bool;

    fn has_edge(&self, e: &Edge) -> bool {
        e.n() == self.dim() && self.contains_index(e.index())
    }

    /// Whether the edge leaving `v` across `position` is present.
    fn has_edge_at(&self, v: u64, position: usize) -> bool {
        self.contains_index(Edge::raw(self.dim(), position, v & !(1 << position)).index())
    }
}

/// The complete hypercube, without materializing anything.
#[derive(Debug, Clone, Copy)]
pub struct FullCube(pub usize);

impl EdgeSet for FullCube {
    fn dim(&self) -> usize {
        self.0
    }

    fn contains_index(&self, _index: usize) -> bool {
        true
    }
}

/// An immutable edge set on the full vertex set of `Q_n`.
#[derive(Debug, Clone)]
pub struct Subgraph {
    n: usize,
    edges: Vec<Edge>,
    member: Vec<u64>,
    name: Option<String>,
}

impl PartialEq for Subgraph {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.edges == other.edges
    }
}

impl Eq for Subgraph {}

pub fn edge_count_of_cube(n: usize) -> usize {
    n << (n - 1)
}

impl Subgraph {
    /// Builds a subgraph from edges; repeated edges collapse.
    pub fn from_edges(n: usize, edges: impl IntoIterator<Item = Edge>) -> Result<Self> {
        if n == 0 {
            return Err(Error::BadRange("dimension must be positive".into()));
        }
        check_materialize(n)?;
        let mut member = vec![0u64; edge_count_of_cube(n).div_ceil(64)];
        let mut list = Vec::new();
        for e in edges {
            if e.n() != n {
                return Err(Error::DimensionMismatch {
                    expected: n,
                    found: e.n(),
                });
            }
            let i = e.index();
            if member[i / 64] >> (i % 64) & 1 == 0 {
                member[i / 64] |= 1 << (i % 64);
                list.push(e);
            }
        }
        list.sort();
        Ok(Subgraph {
            n,
            edges: list,
            member,
            name: None,
        })
    }

    pub fn full_cube(n: usize) -> Result<Self> {
        Self::from_predicate(n, |_| true).map(|g| g.with_name(format!("Q{n}")))
    }

    pub fn empty(n: usize) -> Result<Self> {
        Self::from_edges(n, std::iter::empty())
    }

    /// All edges of `Q_n` accepted by `keep`.
    pub fn from_predicate(n: usize, mut keep: impl FnMut(&Edge) -> bool) -> Result<Self> {
        if n == 0 {
            return Err(Error::BadRange("dimension must be positive".into()));
        }
        check_materialize(n)?;
        let total = edge_count_of_cube(n);
        Self::from_edges(
            n,
            (0..total).map(|i| Edge::from_index(n, i)).filter(|e| keep(e)),
        )
    }

    /// Union of the edge sets of the given sub-cubes.
    pub fn from_subcubes<'a>(
        n: usize,
        cubes: impl IntoIterator<Item = &'a StarVector>,
    ) -> Result<Self> {
        let mut edges = Vec::new();
        for sv in cubes {
            if sv.n() != n {
                return Err(Error::DimensionMismatch {
                    expected: n,
                    found: sv.n(),
                });
            }
            edges.extend(sv.expand_edges()?);
        }
        Self::from_edges(n, edges)
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = Some(name.into());
        self
    }

    pub fn name(&self) -> Option<&str> {
        self.name.as_deref()
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Number of edges, `||G||`.
    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    /// Edges in canonical (lexicographic key) order.
    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn contains(&self, e: &Edge) -> bool {
        self.has_edge(e)
    }

    pub fn neighbors(&self, v: &Vertex) -> impl Iterator<Item = Vertex> + '_ {
        let v = *v;
        (0..self.n)
            .filter(move |&p| self.has_edge_at(v.bits(), p))
            .map(move |p| v.flip(p))
    }

    pub fn without_edge(&self, e: &Edge) -> Subgraph {
        let edges = self.edges.iter().copied().filter(|x| x != e);
        let mut g = Subgraph::from_edges(self.n, edges).expect("same dimension");
        g.name = self.name.clone();
        g
    }

    /// Edges of `self` not in `other` (`G - H`).
    pub fn difference(&self, other: &Subgraph) -> Result<Subgraph> {
        self.same_dim(other)?;
        Subgraph::from_edges(
            self.n,
            self.edges.iter().copied().filter(|e| !other.contains(e)),
        )
    }

    pub fn union(&self, other: &Subgraph) -> Result<Subgraph> {
        self.same_dim(other)?;
        Subgraph::from_edges(
            self.n,
            self.edges.iter().chain(other.edges.iter()).copied(),
        )
    }

    /// `Q_n - G`.
    pub fn complement(&self) -> Subgraph {
        Subgraph::from_predicate(self.n, |e| !self.contains(e)).expect("dimension already checked")
    }

    pub fn is_subgraph_of(&self, other: &Subgraph) -> bool {
        self.n == other.n && self.edges.iter().all(|e| other.contains(e))
    }

    /// Number of edges in each edge layer `0..n`.
    pub fn layer_sizes(&self) -> Vec<usize> {
        let mut out = vec![0; self.n];
        for e in &self.edges {
            out[e.layer().value()] += 1;
        }
        out
    }

    /// All sub-cubes of the given order whose edges all lie in `self`.
    pub fn subcubes(&self, order: usize) -> Vec<StarVector> {
        let mut out = Vec::new();
        for stars in masks_with_popcount(self.n, order) {
            let free = super::star::low_mask(self.n) & !stars;
            for ones in super::star::subsets(free) {
                let sv = StarVector::new(self.n, stars, ones).expect("in range");
                if sv.all_edges(|e| self.contains(e)) {
                    out.push(sv);
                }
            }
        }
        out
    }

    fn same_dim(&self, other: &Subgraph) -> Result<()> {
        if self.n != other.n {
            return Err(Error::DimensionMismatch {
                expected: self.n,
                found: other.n,
            });
        }
        Ok(())
    }

    /// Canonical text form: header line then one edge per line in
    /// lexicographic order.
    pub fn to_text(&self) -> String {
        let mut out = String::with_capacity((self.n + 1) * (self.edges.len() + 1));
        writeln!(out, "cube v1 n={}", self.n).unwrap();
        for e in &self.edges {
            writeln!(out, "{e}").unwrap();
        }
        out
    }

    pub fn from_text(text: &str) -> Result<Subgraph> {
        let mut lines = text.split('\n').enumerate();
        let (_, header) = lines.next().expect("split yields at least one item");
        let n = parse_header(header, 1)?;
        check_materialize(n)?;
        let mut member = vec![0u64; edge_count_of_cube(n).div_ceil(64)];
        let mut edges = Vec::new();
        for (i, raw) in lines {
            let line_no = i + 1;
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let e = Edge::parse(line, n).map_err(|err| Error::Parse {
                line: line_no,
                message: format!("{line:?}: {err}"),
            })?;
            let idx = e.index();
            if member[idx / 64] >> (idx % 64) & 1 == 1 {
                return Err(Error::DuplicateEdge {
                    line: line_no,
                    edge: e.to_string(),
                });
            }
            member[idx / 64] |= 1 << (idx % 64);
            edges.push(e);
        }
        edges.sort();
        Ok(Subgraph {
            n,
            edges,
            member,
            name: None,
        })
    }

    pub fn save(&self, path: impl AsRef<Path>) -> Result<()> {
        std::fs::write(path, self.to_text())?;
        Ok(())
    }

    pub fn load(path: impl AsRef<Path>) -> Result<Subgraph> {
        let text = std::fs::read_to_string(path)?;
        Subgraph::from_text(&text)
    }
}

fn parse_header(line: &str, line_no: usize) -> Result<usize> {
    let bad = |message: String| Error::Parse {
        line: line_no,
        message,
    };
    let rest = line
        .trim_end_matches('\r')
        .strip_prefix("cube v1 n=")
        .ok_or_else(|| bad(format!("expected header `cube v1 n=<n>`, found {line:?}")))?;
    let n: usize = rest
        .parse()
        .map_err(|_| bad(format!("bad dimension {rest:?}")))?;
    if n == 0 {
        return Err(bad("dimension must be positive".into()));
    }
    Ok(n)
}

impl EdgeSet for Subgraph {
    fn dim(&self) -> usize {
        self.n
    }

    fn contains_index(&self, index: usize) -> bool {
        self.member[index / 64] >> (index % 64) & 1 == 1
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn full_cube_sizes() {
        for n in 1..=6 {
            let g = Subgraph::full_cube(n).unwrap();
            assert_eq!(g.len(), n << (n - 1));
        }
    }

    #[test]
    fn text_round_trip() {
        let g = Subgraph::full_cube(3).unwrap();
        let text = g.to_text();
        assert!(text.starts_with("cube v1 n=3\n*00\n"));
        let back = Subgraph::from_text(&text).unwrap();
        assert_eq!(back, g);
        assert_eq!(back.len(), 12);
        assert_eq!(back.to_text(), text);
    }

    #[test]
    fn comments_and_blank_lines_are_skipped() {
        let g = Subgraph::from_text("cube v1 n=2\n# a comment\n\n*0\n1*\n").unwrap();
        assert_eq!(g.len(), 2);
    }

    #[test]
    fn duplicate_edge_is_rejected() {
        let err = Subgraph::from_text("cube v1 n=2\n*0\n1*\n*0\n").unwrap_err();
        assert_eq!(
            err,
            Error::DuplicateEdge {
                line: 4,
                edge: "*0".into()
            }
        );
    }

    #[test]
    fn wrong_length_edge_is_a_parse_error() {
        let err = Subgraph::from_text("cube v1 n=5\n01*1\n").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 2, .. }), "{err:?}");
    }

    #[test]
    fn bad_header() {
        assert!(matches!(
            Subgraph::from_text("cube v2 n=3\n"),
            Err(Error::Parse { line: 1, .. })
        ));
        assert!(matches!(
            Subgraph::from_text("cube v1 n=3\n0*1*\n"),
            Err(Error::Parse { line: 2, .. })
        ));
        assert!(matches!(
            Subgraph::from_text("cube v1 n=3\n010\n"),
            Err(Error::Parse { line: 2, .. })
        ));
    }

    #[test]
    fn save_and_load() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("q3.cube");
        let g = Subgraph::full_cube(3).unwrap();
        g.save(&path).unwrap();
        assert_eq!(Subgraph::load(&path).unwrap(), g);
    }

    #[test]
    fn too_large_dimension() {
        assert!(matches!(
            Subgraph::empty(31),
            Err(Error::DimensionTooLarge { n: 31, .. })
        ));
    }

    #[test]
    fn neighbors_follow_membership() {
        let g = Subgraph::from_text("cube v1 n=3\n*00\n00*\n").unwrap();
        let v = Vertex::parse("000", 3).unwrap();
        let ns: Vec<String> = g.neighbors(&v).map(|x| x.to_string()).collect();
        assert_eq!(ns, vec!["100", "001"]);
    }

    #[test]
    fn set_operations() {
        let q = Subgraph::full_cube(3).unwrap();
        let e = Edge::parse("0*1", 3).unwrap();
        let minus = q.without_edge(&e);
        assert_eq!(minus.len(), 11);
        assert!(!minus.contains(&e));
        assert_eq!(q.difference(&minus).unwrap().edges(), &[e]);
        assert_eq!(minus.complement().edges(), &[e]);
        assert!(minus.is_subgraph_of(&q));
        assert_eq!(minus.union(&q.difference(&minus).unwrap()).unwrap(), q);
        assert_eq!(q.layer_sizes(), vec![3, 6, 3]);
    }
}
