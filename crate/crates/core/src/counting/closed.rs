use num_bigint::BigUint;
use num_traits::{One, Zero};

use super::ztable::ZTable;
use crate::error::{Error, Result};

/// Exact binomial coefficient `C(n, k)`.
pub fn binomial(n: u64, k: u64) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigUint::one();
    for i in 0..k {
        acc *= n - i;
        acc /= i + 1;
    }
    acc
}

pub fn pow2(e: u64) -> BigUint {
    BigUint::one() << e
}

/// `ceil(log2(x))` for `x >= 1`.
pub fn ceil_log2(x: u64) -> u32 {
    if x <= 1 {
        0
    } else {
        64 - (x - 1).leading_zeros()
    }
}

/// Number of copies of `Q_k` in `Q_n`: `C(n,k) 2^(n-k)`.
pub fn closed_count_qk(n: u64, k: u64) -> Result<BigUint> {
    if k > n {
        return Err(Error::BadRange(format!("k = {k} exceeds n = {n}")));
    }
    Ok(binomial(n, k) * pow2(n - k))
}

/// Number of `2l`-cycles in `Q_n`:
/// `sum_{k = ceil(log2 2l)}^{min(l, n)} C(n,k) 2^(n-k) z_{k,l}`.
pub fn closed_count_c2l(n: u64, l: u64, z: &ZTable) -> Result<BigUint> {
    if l < 2 {
        return Err(Error::BadRange(format!("half-length {l} < 2")));
    }
    if n == 0 || (n <= 64 && l > 1u64 << (n - 1)) {
        return Err(Error::BadRange(format!(
            "half-length {l} exceeds 2^(n-1) for n = {n}"
        )));
    }
    let lo = u64::from(ceil_log2(2 * l));
    let hi = l.min(n);
    let mut total = BigUint::zero();
    for k in lo..=hi {
        let zk = z
            .get(k as usize, l as usize)
            .ok_or(Error::MissingZEntry {
                k: k as usize,
                l: l as usize,
            })?;
        total += binomial(n, k) * pow2(n - k) * zk;
    }
    Ok(total)
}

/// `sum_{j >= 0} C(m, a + r j)` by direct summation.
pub fn binomial_residue_sum(m: u64, r: u64, a: u64) -> Result<BigUint> {
    if r == 0 || a >= r {
        return Err(Error::BadRange(format!("need 0 <= a < r, got a = {a}, r = {r}")));
    }
    let mut total = BigUint::zero();
    let mut i = a;
    while i <= m {
        total += binomial(m, i);
        i += r;
    }
    Ok(total)
}
