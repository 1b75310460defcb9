//! The theorem bounds on `d(Q_n, T, H)` as exact rationals, or as symbolic
//! records when they involve the unspecified constants `alpha` and `c_k`.

mod sandwich;

pub use sandwich::{bound_sandwich_report, CheckStatus, Measured, SandwichCheck, SandwichReport};

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::{Serialize, Serializer};

use crate::counting::{binomial, ceil_log2, pow2, ZTable};
use crate::error::{Error, Result};
use crate::json::ratio;
use crate::pattern::Pattern;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum TheoremId {
    T1,
    T2,
    T3,
    T4,
    T5,
    T6,
    T7,
    /// Alternative lower bound for `d(Q_n, Q_l, Q_k)`.
    A6,
    /// Improved lower bound for `d(Q_n, C_2l, C_6)`.
    A7,
}

impl TheoremId {
    pub const ALL: [TheoremId; 9] = [
        TheoremId::T1,
        TheoremId::T2,
        TheoremId::T3,
        TheoremId::T4,
        TheoremId::T5,
        TheoremId::T6,
        TheoremId::T7,
        TheoremId::A6,
        TheoremId::A7,
    ];

    /// The density each theorem bounds.
    pub fn subject(self) -> &'static str {
        match self {
            TheoremId::T1 | TheoremId::A6 => "d(Q_n, Q_l, Q_k)",
            TheoremId::T2 => "d(Q_n, C_4, C_6)",
            TheoremId::T3 | TheoremId::A7 => "d(Q_n, C_2l, C_6)",
            TheoremId::T4 => "d(Q_n, Q_l, C_2k)",
            TheoremId::T5 => "d(Q_n, C_2l, Q_k)",
            TheoremId::T6 => "d(Q_n, C_6, C_4)",
            TheoremId::T7 => "d(Q_n, C_2l, C_2k)",
        }
    }

    pub fn sides(self) -> &'static [Side] {
        match self {
            TheoremId::A6 | TheoremId::A7 => &[Side::Lower],
            _ => &[Side::Lower, Side::Upper],
        }
    }
}

impl fmt::Display for TheoremId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

impl FromStr for TheoremId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        TheoremId::ALL
            .into_iter()
            .find(|t| t.to_string().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::BadTheoremId(s.to_string()))
    }
}

impl Serialize for TheoremId {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Side {
    Lower,
    Upper,
}

impl FromStr for Side {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "lower" => Ok(Side::Lower),
            "upper" => Ok(Side::Upper),
            _ => Err(Error::BadRange(format!("side must be lower or upper, got {s:?}"))),
        }
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize)]
pub struct BoundParams {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub n: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub k: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub l: Option<u64>,
}

impl BoundParams {
    fn n(&self) -> Result<u64> {
        self.n.ok_or(Error::MissingParam("n"))
    }

    fn k(&self) -> Result<u64> {
        self.k.ok_or(Error::MissingParam("k"))
    }

    fn l(&self) -> Result<u64> {
        self.l.ok_or(Error::MissingParam("l"))
    }
}

/// One side of a theorem at given parameters.
///
/// `value` is absent exactly when `unresolved` is non-empty. `asymptotic`
/// marks bounds stated for sufficiently large `n` or with a `1 +- o(1)`
/// factor, which is dropped from `value`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundValue {
    pub theorem: TheoremId,
    pub side: Side,
    pub params: BoundParams,
    pub expression: String,
    pub value: Option<BigRational>,
    pub asymptotic: bool,
    pub unresolved: Vec<String>,
}

#[derive(Serialize)]
struct BoundValueJson<'a> {
    theorem: TheoremId,
    side: Side,
    params: &'a BoundParams,
    expression: &'a str,
    value: Option<crate::json::Ratio>,
    asymptotic: bool,
    unresolved: &'a [String],
}

impl Serialize for BoundValue {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        BoundValueJson {
            theorem: self.theorem,
            side: self.side,
            params: &self.params,
            expression: &self.expression,
            value: self.value.as_ref().map(ratio),
            asymptotic: self.asymptotic,
            unresolved: &self.unresolved,
        }
        .serialize(s)
    }
}

/// A terminating decimal as an exact rational.
pub fn decimal(text: &str) -> BigRational {
    let (int, frac) = text.split_once('.').unwrap_or((text, ""));
    let digits: BigInt = format!("{int}{frac}").parse().expect("decimal literal");
    BigRational::new(digits, BigInt::from(10u32).pow(frac.len() as u32))
}

fn int(x: impl Into<BigInt>) -> BigRational {
    BigRational::from_integer(x.into())
}

fn big(x: num_bigint::BigUint) -> BigRational {
    BigRational::from_integer(x.into())
}

fn range(cond: bool, message: impl FnOnce() -> String) -> Result<()> {
    if cond {
        Ok(())
    } else {
        Err(Error::BadRange(message()))
    }
}

fn check_l_below_k(l: u64, k: u64) -> Result<()> {
    range(2 <= l && l < k, || format!("needs 2 <= l < k, got l={l} k={k}"))
}

fn z_ll(z: &mut ZTable, l: u64) -> Result<BigRational> {
    Ok(int(z.get_or_compute_diagonal(l as usize)?))
}

/// The `(target, forbidden)` pair whose density the theorem bounds.
pub fn subject_patterns(theorem: TheoremId, params: &BoundParams) -> Result<(Pattern, Pattern)> {
    use TheoremId::*;
    let cube = |k: u64| Pattern::sub_cube(k as usize);
    let cycle = |half: u64| Pattern::cycle(2 * half as usize);
    Ok(match theorem {
        T1 | A6 => (cube(params.l()?)?, cube(params.k()?)?),
        T2 => (Pattern::Cycle(4), Pattern::Cycle(6)),
        T3 | A7 => (cycle(params.l()?)?, Pattern::Cycle(6)),
        T4 => (cube(params.l()?)?, cycle(params.k()?)?),
        T5 => (cycle(params.l()?)?, cube(params.k()?)?),
        T6 => (Pattern::Cycle(6), Pattern::Cycle(4)),
        T7 => (cycle(params.l()?)?, cycle(params.k()?)?),
    })
}

/// `1 - l/k` and `1 - 4 C(l+2,3)/(k(k+2))`.
pub fn t1_lower_branches(l: u64, k: u64) -> (BigRational, BigRational) {
    let one = BigRational::one();
    let first = &one - BigRational::new(l.into(), k.into());
    let second = one - int(4u32) * big(binomial(l + 2, 3)) / int(k * (k + 2));
    (first, second)
}

/// Evaluates one side of a theorem. `z` supplies (and caches) `z_{l,l}`.
pub fn eval_bound(
    theorem: TheoremId,
    side: Side,
    params: &BoundParams,
    z: &mut ZTable,
) -> Result<BoundValue> {
    use Side::{Lower, Upper};
    use TheoremId::*;
    let one = BigRational::one();
    let symbolic = |name: &str| vec![name.to_string()];
    let (expression, value, asymptotic, unresolved): (&str, Option<BigRational>, bool, Vec<String>) =
        match (theorem, side) {
            (T1, Lower) => {
                let (l, k) = (params.l()?, params.k()?);
                check_l_below_k(l, k)?;
                let (a, b) = t1_lower_branches(l, k);
                ("max{1 - l/k, 1 - 4 C(l+2,3)/(k(k+2))}", Some(a.max(b)), true, vec![])
            }
            (T1, Upper) => {
                check_l_below_k(params.l()?, params.k()?)?;
                (
                    "min{1 - l 2^l/(k 2^k), 1 - alpha log k/(k 2^k)}",
                    None,
                    true,
                    symbolic("alpha"),
                )
            }
            (T2, _) => {
                let n = params.n()?;
                range(n >= 1, || "needs n >= 1".into())?;
                let (expr, c) = match side {
                    Lower => ("0.25/n", decimal("0.25")),
                    Upper => ("0.36578/n", decimal("0.36578")),
                };
                (expr, Some(c / int(n)), true, vec![])
            }
            (T3, Lower) => {
                let l = params.l()?;
                range(l >= 4, || format!("needs l >= 4, got {l}"))?;
                let value = one / (big(pow2(2 * (l + 1))) * z_ll(z, l)?);
                ("1/(4^(l+1) z_{l,l})", Some(value), true, vec![])
            }
            (T3, Upper) => {
                range(params.l()? >= 4, || "needs l >= 4".into())?;
                ("0.36577", Some(decimal("0.36577")), true, vec![])
            }
            (T4, _) => {
                let (n, k, l) = (params.n()?, params.k()?, params.l()?);
                range(k >= 2 && l >= 1 && n >= 1, || {
                    format!("needs k >= 2, l >= 1, n >= 1; got n={n} k={k} l={l}")
                })?;
                if l >= ceil_log2(2 * k) as u64 {
                    // Q_l holds every even cycle up to length 2^l
                    ("0", Some(BigRational::zero()), false, vec![])
                } else {
                    range(k >= 4 && k != 5 && l >= 2 && ceil_log2(2 * k) as u64 <= n, || {
                        format!(
                            "needs k >= 4, k != 5, 2 <= l < log2(2k) <= n; got n={n} k={k} l={l}"
                        )
                    })?;
                    match side {
                        Lower => {
                            let m = ceil_log2(2 * k) as u64 - 1;
                            let value = big(binomial(m, l)) / big(binomial(n, l));
                            ("C(m,l)/C(n,l), m = ceil(log2(2k)) - 1", Some(value), false, vec![])
                        }
                        Upper => ("c_k n^(-1/16)", None, false, symbolic("c_k")),
                    }
                }
            }
            (T5, Lower) => {
                let (l, k) = (params.l()?, params.k()?);
                range(k >= 2 && l >= 2, || format!("needs k >= 2, l >= 2; got l={l} k={k}"))?;
                let factorial: BigInt = (1..l).map(BigInt::from).product();
                let first = (&one - BigRational::new(1.into(), k.into()))
                    * BigRational::from_integer(factorial)
                    / (int(2u32) * z_ll(z, l)?);
                let second = &one - BigRational::new(l.into(), k.into());
                (
                    "max{(1 - 1/k)(l-1)!/(2 z_{l,l}), 1 - l/k}",
                    Some(first.max(second)),
                    true,
                    vec![],
                )
            }
            (T5, Upper) => {
                range(params.k()? >= 2, || "needs k >= 2".into())?;
                ("1 - alpha log k/(k 2^k)", None, true, symbolic("alpha"))
            }
            (T6, Lower) => ("0.03125", Some(decimal("0.03125")), true, vec![]),
            (T6, Upper) => ("0.1625", Some(decimal("0.1625")), true, vec![]),
            (T7, _) => {
                let (n, k, l) = (params.n()?, params.k()?, params.l()?);
                let cap = if n < 63 { 1u64 << n } else { u64::MAX };
                range(
                    4 <= k && k <= cap && k != 5 && 2 <= l && l <= cap && l != k,
                    || format!("needs 4 <= k <= 2^n, k != 5, 2 <= l <= 2^n, l != k; got n={n} k={k} l={l}"),
                )?;
                match side {
                    Lower => {
                        range(l <= n, || format!("C(n,l) vanishes for l={l} > n={n}"))?;
                        let value = big(pow2(l - ceil_log2(2 * l) as u64))
                            / (big(binomial(n, l)) * z_ll(z, l)?);
                        ("2^(l - ceil(log2(2l)))/(C(n,l) z_{l,l})", Some(value), true, vec![])
                    }
                    Upper => ("c_k n^(-1/16)", None, false, symbolic("c_k")),
                }
            }
            (A6, Lower) => {
                let (l, k) = (params.l()?, params.k()?);
                check_l_below_k(l, k)?;
                let value = &one - int(4u32) * big(binomial(l + 2, 3)) / int(k * k - 2 * k);
                ("1 - 4 C(l+2,3)/(k^2 - 2k)", Some(value), true, vec![])
            }
            (A7, Lower) => {
                let l = params.l()?;
                range(l >= 6, || format!("needs l >= 6, got {l}"))?;
                let value = one / (big(num_bigint::BigUint::from(3u32).pow(l as u32 + 1)) * z_ll(z, l)?);
                ("1/(3^(l+1) z_{l,l})", Some(value), true, vec![])
            }
            (A6 | A7, Upper) => {
                return Err(Error::BadRange(format!("{theorem} gives only a lower bound")))
            }
        };
    Ok(BoundValue {
        theorem,
        side,
        params: *params,
        expression: expression.to_string(),
        value,
        asymptotic,
        unresolved,
    })
}

/// Every side the theorem states.
pub fn eval_sides(theorem: TheoremId, params: &BoundParams, z: &mut ZTable) -> Result<Vec<BoundValue>> {
    theorem
        .sides()
        .iter()
        .map(|&side| eval_bound(theorem, side, params, z))
        .collect()
}
