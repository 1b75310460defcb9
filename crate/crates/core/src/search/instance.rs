use crate::counting::enumerate_cycles;
use crate::cube::{edge_count_of_cube, masks_with_popcount, low_mask, subsets, Edge, FullCube, StarVector};
use crate::error::Result;
use crate::pattern::Pattern;

use super::TieOrder;

/// Edges of `Q_n` in decision order, with every target and forbidden copy
/// as a bitmask over decision positions (bit `i` is `edges[i]`).
pub(crate) struct Instance {
    pub edges: Vec<Edge>,
    pub targets: Vec<u64>,
    pub forbidden: Vec<u64>,
}

fn copies(n: usize, pattern: Pattern) -> Result<Vec<Vec<Edge>>> {
    Ok(match pattern {
        Pattern::Edge => (0..edge_count_of_cube(n))
            .map(|i| vec![Edge::from_index(n, i)])
            .collect(),
        Pattern::SubCube(k) if k > n => Vec::new(),
        Pattern::SubCube(k) => masks_with_popcount(n, k)
            .flat_map(|stars| {
                subsets(low_mask(n) & !stars).map(move |ones| {
                    StarVector::new(n, stars, ones)
                        .and_then(|sv| sv.expand_edges())
                        .expect("valid sub-cube")
                })
            })
            .collect(),
        Pattern::Cycle(m) if m > 1 << n => Vec::new(),
        Pattern::Cycle(m) => enumerate_cycles(&FullCube(n), m)?
            .into_iter()
            .map(|c| c.edges())
            .collect(),
    })
}

impl Instance {
    /// Orders edges by decreasing number of target copies through them,
    /// ties by canonical key (or its reverse).
    pub fn new(n: usize, target: Pattern, forbid: Pattern, ties: TieOrder) -> Result<Self> {
        let total = edge_count_of_cube(n);
        let target_copies = copies(n, target)?;
        let mut through = vec![0usize; total];
        for copy in &target_copies {
            for e in copy {
                through[e.index()] += 1;
            }
        }
        let mut edges: Vec<Edge> = (0..total).map(|i| Edge::from_index(n, i)).collect();
        edges.sort_by(|a, b| {
            let by_key = match ties {
                TieOrder::Canonical => a.cmp(b),
                TieOrder::Reversed => b.cmp(a),
            };
            through[b.index()].cmp(&through[a.index()]).then(by_key)
        });
        let mut position = vec![0usize; total];
        for (i, e) in edges.iter().enumerate() {
            position[e.index()] = i;
        }
        let to_mask =
            |copy: &Vec<Edge>| copy.iter().fold(0u64, |m, e| m | 1 << position[e.index()]);
        let targets = target_copies.iter().map(to_mask).collect();
        let forbidden = copies(n, forbid)?.iter().map(to_mask).collect();
        Ok(Instance {
            edges,
            targets,
            forbidden,
        })
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_feasible(&self, kept: u64) -> bool {
        self.forbidden.iter().all(|&f| f & !kept != 0)
    }

    pub fn value(&self, kept: u64) -> u64 {
        self.targets.iter().filter(|&&t| t & !kept == 0).count() as u64
    }

    /// Ranks edge sets so that, at the first decision position where two
    /// sets differ, the one keeping that edge is larger.
    pub fn preference(&self, kept: u64) -> u64 {
        kept.reverse_bits() >> (64 - self.len())
    }

    pub fn edges_of(&self, kept: u64) -> Vec<Edge> {
        (0..self.len())
            .filter(|i| kept >> i & 1 == 1)
            .map(|i| self.edges[i])
            .collect()
    }
}
