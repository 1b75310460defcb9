//! Exact `ex(Q_n, T, H)` for small `n`, with a certified extremal subgraph.
//!
//! Edge sets are bitmasks over the `n 2^(n-1) <= 32` edges. Two solvers
//! share one instance: full enumeration (`n <= 3`) and a keep-first
//! branch and bound. Both report the same witness: among optimal edge sets,
//! the one that keeps the earliest edge in decision order wherever two
//! optimal sets differ.

mod instance;
mod solver;

use num_bigint::BigUint;
use num_rational::BigRational;
use num_traits::Zero;
use serde::Serialize;

use crate::counting::count_in;
use crate::cube::Subgraph;
use crate::error::{Error, Result};
use crate::json::{ratio, Ratio};
use crate::pattern::Pattern;
use crate::verification::verify_free;

use instance::Instance;

/// Largest dimension the search accepts.
pub const MAX_SEARCH_DIM: usize = 4;

/// Largest dimension for full enumeration.
pub const MAX_EXHAUSTIVE_DIM: usize = 3;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum SearchMethod {
    Exhaustive,
    BranchAndBound,
}

/// Node and wall-clock limits; `None` is unlimited.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct Budget {
    pub nodes: Option<u64>,
    pub seconds: Option<f64>,
}

/// How edges with equal target-copy counts are ordered.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub enum TieOrder {
    #[default]
    Canonical,
    Reversed,
}

#[derive(Debug, Clone, PartialEq)]
pub struct SearchOptions {
    pub budget: Budget,
    pub method: SearchMethod,
    pub ties: TieOrder,
}

impl Default for SearchOptions {
    fn default() -> Self {
        SearchOptions {
            budget: Budget::default(),
            method: SearchMethod::BranchAndBound,
            ties: TieOrder::Canonical,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchResult {
    pub n: usize,
    pub target: Pattern,
    pub forbid: Pattern,
    pub value: u64,
    pub witness: Subgraph,
    pub ambient_total: BigUint,
    pub nodes_explored: u64,
    pub method: SearchMethod,
}

impl SearchResult {
    /// `value / ambient_total`; 0 when the target does not occur in `Q_n`.
    pub fn density(&self) -> BigRational {
        if self.ambient_total.is_zero() {
            return BigRational::zero();
        }
        BigRational::new(self.value.into(), self.ambient_total.clone().into())
    }
}

#[derive(Serialize)]
struct SearchResultJson {
    n: usize,
    target: Pattern,
    forbid: Pattern,
    value: String,
    ambient_total: String,
    density: Ratio,
    nodes_explored: u64,
    method: SearchMethod,
    witness: Vec<String>,
}

impl Serialize for SearchResult {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        SearchResultJson {
            n: self.n,
            target: self.target,
            forbid: self.forbid,
            value: self.value.to_string(),
            ambient_total: self.ambient_total.to_string(),
            density: ratio(&self.density()),
            nodes_explored: self.nodes_explored,
            method: self.method,
            witness: self.witness.edges().iter().map(|e| e.to_string()).collect(),
        }
        .serialize(s)
    }
}

/// `ex(Q_n, target, forbid)` with a witness that is re-verified to be
/// `forbid`-free and re-counted.
pub fn exact_extremal(
    n: usize,
    target: Pattern,
    forbid: Pattern,
    options: &SearchOptions,
) -> Result<SearchResult> {
    if target == forbid {
        return Err(Error::BadRange(format!("target and forbidden pattern are both {target}")));
    }
    if n == 0 {
        return Err(Error::BadRange("dimension must be positive".into()));
    }
    if n > MAX_SEARCH_DIM {
        return Err(Error::DimensionTooLarge {
            n,
            limit: MAX_SEARCH_DIM,
        });
    }
    if options.method == SearchMethod::Exhaustive && n > MAX_EXHAUSTIVE_DIM {
        return Err(Error::EnumerationTooLarge(format!(
            "all 2^{} edge sets of Q_{n}",
            n << (n - 1)
        )));
    }
    let inst = Instance::new(n, target, forbid, options.ties)?;
    let solution = match options.method {
        SearchMethod::Exhaustive => solver::exhaustive(&inst),
        SearchMethod::BranchAndBound => solver::branch_and_bound(&inst, &options.budget)?,
    };
    let witness = Subgraph::from_edges(n, inst.edges_of(solution.kept))?
        .with_name(format!("ex(Q_{n}, {target}, {forbid})"));
    assert!(verify_free(&witness, forbid)?.free, "witness must be {forbid}-free");
    let recount = match target {
        Pattern::SubCube(k) if k > n => 0,
        Pattern::Cycle(m) if m > 1 << n => 0,
        _ => count_in(&witness, target)?,
    };
    assert_eq!(recount, solution.value, "witness must re-count to the optimum");
    Ok(SearchResult {
        n,
        target,
        forbid,
        value: solution.value,
        witness,
        ambient_total: inst.targets.len().into(),
        nodes_explored: solution.nodes,
        method: options.method,
    })
}

/// `d(Q_n, target, forbid) = ex(Q_n, target, forbid) / N(Q_n, target)`.
pub fn density(
    n: usize,
    target: Pattern,
    forbid: Pattern,
    options: &SearchOptions,
) -> Result<BigRational> {
    Ok(exact_extremal(n, target, forbid, options)?.density())
}
