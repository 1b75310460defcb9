//! Exact computation for generalized Turán problems in the hypercube `Q_n`.
//!
//! * [`cube`]: star vectors, edges, edge layers, subgraph files and the
//!   automorphism action.
//! * [`counting`]: copies of `Q_k` and `C_2l`, the `z_{k,l}` table, `Z(l)`
//!   words and residue-class binomial sums.
//! * [`constructions`]: every lower-bound construction as a deterministic
//!   generator.
//! * [`verification`]: exhaustive `H`-freeness checks with witnesses and the
//!   `k`-partite representation test.
//! * [`search`]: exact `ex(Q_n, T, H)` at small `n`.
//! * [`bounds`]: the theorem bounds as exact rationals or symbolic records.
//! * [`cli`]: the command-line front end.

pub mod bounds;
pub mod cli;
pub mod constructions;
pub mod counting;
pub mod cube;
mod error;
pub mod json;
mod pattern;
pub mod search;
pub mod verification;

pub use error::{Error, Result};
pub use pattern::Pattern;
