use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A target or forbidden graph: an edge, a sub-cube `Q_k`, or an even cycle
/// `C_m`.
///
/// Text form: `e`, `q<k>`, `c<m>`. `q1` and `e` name the same objects, as do
/// `q2` and `c4`; they stay distinct patterns.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "String", into = "String")]
pub enum Pattern {
    Edge,
    SubCube(usize),
    /// Cycle with the given number of vertices.
    Cycle(usize),
}

impl Pattern {
    pub fn sub_cube(k: usize) -> Result<Self> {
        if k == 0 {
            return Err(Error::BadPattern("q0".into()));
        }
        Ok(Pattern::SubCube(k))
    }

    pub fn cycle(len: usize) -> Result<Self> {
        if len < 4 || len % 2 == 1 {
            return Err(Error::BadCycleLength(len));
        }
        Ok(Pattern::Cycle(len))
    }

    /// Number of edges of one copy.
    pub fn edge_count(&self) -> usize {
        match *self {
            Pattern::Edge => 1,
            Pattern::SubCube(k) => k << (k - 1),
            Pattern::Cycle(m) => m,
        }
    }
}

impl fmt::Display for Pattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Pattern::Edge => write!(f, "e"),
            Pattern::SubCube(k) => write!(f, "q{k}"),
            Pattern::Cycle(m) => write!(f, "c{m}"),
        }
    }
}

impl FromStr for Pattern {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::BadPattern(s.to_string());
        if s == "e" {
            return Ok(Pattern::Edge);
        }
        let (kind, digits) = s.split_at(s.char_indices().nth(1).map_or(s.len(), |(i, _)| i));
        if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
            return Err(bad());
        }
        let value: usize = digits.parse().map_err(|_| bad())?;
        match kind {
            "q" if value >= 1 => Ok(Pattern::SubCube(value)),
            "c" if value >= 4 && value.is_multiple_of(2) => Ok(Pattern::Cycle(value)),
            _ => Err(bad()),
        }
    }
}

impl TryFrom<String> for Pattern {
    type Error = Error;

    fn try_from(s: String) -> Result<Self> {
        s.parse()
    }
}

impl From<Pattern> for String {
    fn from(p: Pattern) -> String {
        p.to_string()
    }
}
