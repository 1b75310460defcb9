use num_bigint::BigUint;
use num_rational::BigRational;
use num_traits::Zero;
use serde::Serialize;

use super::closed::{closed_count_c2l, closed_count_qk};
use super::cycles::count_cycles;
use super::ztable::ZTable;
use super::count_copies_qk;
use crate::cube::EdgeSet;
use crate::error::Result;
use crate::json::{ratio, Ratio};
use crate::pattern::Pattern;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum CountMethod {
    ClosedForm,
    Enumeration,
}

/// An exact count together with the ambient count in `Q_n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CountReport {
    pub n: usize,
    pub pattern: Pattern,
    pub count: BigUint,
    pub ambient_total: BigUint,
    pub method: CountMethod,
}

impl CountReport {
    /// `count / ambient_total` in lowest terms (0 when nothing is counted).
    pub fn density(&self) -> BigRational {
        if self.ambient_total.is_zero() {
            return BigRational::zero();
        }
        BigRational::new(self.count.clone().into(), self.ambient_total.clone().into())
    }
}

#[derive(Serialize)]
struct CountReportJson {
    n: usize,
    pattern: String,
    count: String,
    ambient_total: String,
    density: Ratio,
    method: CountMethod,
}

impl Serialize for CountReport {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        CountReportJson {
            n: self.n,
            pattern: self.pattern.to_string(),
            count: self.count.to_string(),
            ambient_total: self.ambient_total.to_string(),
            density: ratio(&self.density()),
            method: self.method,
        }
        .serialize(s)
    }
}

/// Copies of `pattern` in `g`, by enumeration.
pub fn count_in<G: EdgeSet + ?Sized>(g: &G, pattern: Pattern) -> Result<u64> {
    match pattern {
        Pattern::Edge => count_copies_qk(g, 1),
        Pattern::SubCube(k) => count_copies_qk(g, k),
        Pattern::Cycle(m) => count_cycles(g, m),
    }
}

/// `N(Q_n, pattern)` in closed form; cycle counts fill `z` as needed.
pub fn ambient_count(n: usize, pattern: Pattern, z: &mut ZTable) -> Result<BigUint> {
    match pattern {
        Pattern::Edge => closed_count_qk(n as u64, 1),
        Pattern::SubCube(k) if k > n => Ok(BigUint::zero()),
        Pattern::SubCube(k) => closed_count_qk(n as u64, k as u64),
        Pattern::Cycle(m) => {
            let l = m / 2;
            if n < 64 && l > 1 << (n - 1) {
                return Ok(BigUint::zero());
            }
            z.ensure_for_cycles(n, l)?;
            closed_count_c2l(n as u64, l as u64, z)
        }
    }
}

pub fn closed_form_report(n: usize, pattern: Pattern, z: &mut ZTable) -> Result<CountReport> {
    let total = ambient_count(n, pattern, z)?;
    Ok(CountReport {
        n,
        pattern,
        count: total.clone(),
        ambient_total: total,
        method: CountMethod::ClosedForm,
    })
}

pub fn count_report<G: EdgeSet + ?Sized>(
    g: &G,
    pattern: Pattern,
    z: &mut ZTable,
) -> Result<CountReport> {
    let n = g.dim();
    let count = match pattern {
        Pattern::SubCube(k) if k > n => 0,
        _ => count_in(g, pattern)?,
    };
    Ok(CountReport {
        n,
        pattern,
        count: count.into(),
        ambient_total: ambient_count(n, pattern, z)?,
        method: CountMethod::Enumeration,
    })
}
