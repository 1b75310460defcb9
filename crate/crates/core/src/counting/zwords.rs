//! Star-list words of cycles that use every position of their cube.
//!
//! A word of length `2l` over `1..=l` in which every symbol occurs twice is
//! in `Z(l)` when no proper contiguous window of even length has every
//! symbol an even number of times. Writing `P_i` for the parity vector of
//! the first `i` letters, a window `[a, b)` is all-even exactly when
//! `P_a == P_b`, so the condition is that `P_0, ..., P_{2l-1}` are distinct.
//! The complement of a window that wraps around the end is a linear window,
//! so the cyclic reading of "window" gives the same set.

use std::fmt;

use rayon::prelude::*;

use crate::error::{Error, Result};

/// Largest `l` for which words are materialized.
pub const MAX_LIST_L: usize = 7;

/// Largest `l` for which words are counted.
pub const MAX_COUNT_L: usize = 10;

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ZWord {
    symbols: Vec<u8>,
}

impl ZWord {
    /// Symbols are 1-based.
    pub fn symbols(&self) -> &[u8] {
        &self.symbols
    }

    /// Whether `symbols` satisfies the `Z(l)` conditions.
    pub fn is_valid(symbols: &[u8]) -> bool {
        let len = symbols.len();
        if len < 4 || len % 2 == 1 {
            return false;
        }
        let l = len / 2;
        let mut counts = vec![0u8; l + 1];
        for &s in symbols {
            if s == 0 || s as usize > l {
                return false;
            }
            counts[s as usize] += 1;
        }
        if counts[1..].iter().any(|&c| c != 2) {
            return false;
        }
        for a in 0..len {
            let mut parity = vec![false; l + 1];
            for b in a..len {
                parity[symbols[b] as usize] ^= true;
                let width = b + 1 - a;
                if width < len && width % 2 == 0 && parity.iter().all(|&p| !p) {
                    return false;
                }
            }
        }
        true
    }
}

impl fmt::Display for ZWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sep = if self.symbols.len() > 18 { " " } else { "" };
        for (i, s) in self.symbols.iter().enumerate() {
            if i > 0 {
                write!(f, "{sep}")?;
            }
            write!(f, "{s}")?;
        }
        Ok(())
    }
}

struct Search {
    l: usize,
    word: Vec<u8>,
    counts: Vec<u8>,
    // prefix parity vectors already reached
    seen: Vec<bool>,
    /// introduce symbols only in first-occurrence order
    canonical: bool,
    introduced: usize,
}

impl Search {
    fn new(l: usize, canonical: bool) -> Self {
        let mut seen = vec![false; 1 << l];
        seen[0] = true;
        Search {
            l,
            word: Vec::with_capacity(2 * l),
            counts: vec![0; l + 1],
            seen,
            canonical,
            introduced: 0,
        }
    }

    fn candidates(&self) -> Vec<u8> {
        let limit = if self.canonical {
            (self.introduced + 1).min(self.l)
        } else {
            self.l
        };
        (1..=limit as u8)
            .filter(|&s| self.counts[s as usize] < 2)
            .collect()
    }

    /// Places `s` and returns the new prefix parity, or `None` (state
    /// untouched) when that parity was already reached.
    fn push(&mut self, s: u8, parity: usize) -> Option<usize> {
        let next = parity ^ (1 << (s - 1));
        let complete = self.word.len() + 1 == 2 * self.l;
        if !complete && self.seen[next] {
            return None;
        }
        if !complete {
            self.seen[next] = true;
        }
        self.word.push(s);
        self.counts[s as usize] += 1;
        if self.counts[s as usize] == 1 {
            self.introduced += 1;
        }
        Some(next)
    }

    fn pop(&mut self, next: usize) {
        let s = self.word.pop().expect("non-empty");
        if self.counts[s as usize] == 1 {
            self.introduced -= 1;
        }
        self.counts[s as usize] -= 1;
        if self.word.len() + 1 != 2 * self.l {
            self.seen[next] = false;
        }
    }

    fn run(&mut self, parity: usize, visit: &mut impl FnMut(&[u8])) {
        if self.word.len() == 2 * self.l {
            visit(&self.word);
            return;
        }
        for s in self.candidates() {
            if let Some(next) = self.push(s, parity) {
                self.run(next, visit);
                self.pop(next);
            }
        }
    }
}

fn check_l(l: usize, max: usize) -> Result<()> {
    if l < 2 {
        return Err(Error::BadRange(format!("Z(l) needs l >= 2, got {l}")));
    }
    if l > max {
        return Err(Error::EnumerationTooLarge(format!("Z({l}) with l > {max}")));
    }
    Ok(())
}

/// Every word of `Z(l)`, in lexicographic order.
pub fn enumerate_z_words(l: usize) -> Result<Vec<ZWord>> {
    check_l(l, MAX_LIST_L)?;
    let mut out = Vec::new();
    Search::new(l, false).run(0, &mut |w| {
        out.push(ZWord {
            symbols: w.to_vec(),
        })
    });
    Ok(out)
}

/// `|Z(l)|`, counted over words whose symbols first appear in the order
/// `1, 2, ..., l` and scaled by `l!` (relabeling acts freely and preserves
/// the conditions).
pub fn count_z_words(l: usize) -> Result<u128> {
    check_l(l, MAX_COUNT_L)?;
    // split on the first three letters to spread the work
    let mut prefixes = Vec::new();
    collect_prefixes(&mut Search::new(l, true), 0, 3, &mut prefixes);
    let canonical: u128 = prefixes
        .into_par_iter()
        .map(|prefix| {
            let mut search = Search::new(l, true);
            let mut parity = 0;
            for &s in &prefix {
                parity = search.push(s, parity).expect("valid prefix");
            }
            let mut count = 0u128;
            search.run(parity, &mut |_| count += 1);
            count
        })
        .sum();
    let factorial: u128 = (1..=l as u128).product();
    Ok(canonical * factorial)
}

fn collect_prefixes(search: &mut Search, parity: usize, depth: usize, out: &mut Vec<Vec<u8>>) {
    if depth == 0 || search.word.len() == 2 * search.l {
        out.push(search.word.clone());
        return;
    }
    for s in search.candidates() {
        if let Some(next) = search.push(s, parity) {
            collect_prefixes(search, next, depth - 1, out);
            search.pop(next);
        }
    }
}

/// `z_{l,l} = |Z(l)| 2^l / (4l)`.
///
/// The identity is asserted for `l >= 4`; smaller `l` need
/// `allow_small = true`.
pub fn z_ll_via_words(l: usize, allow_small: bool) -> Result<u128> {
    if l < 4 && !allow_small {
        return Err(Error::BadRange(format!(
            "word formula is stated for l >= 4, got {l}"
        )));
    }
    let words = count_z_words(l)?;
    let numerator = words << l;
    let denominator = 4 * l as u128;
    if !numerator.is_multiple_of(denominator) {
        return Err(Error::NonIntegralResult(format!(
            "|Z({l})| 2^{l} = {numerator} is not divisible by {denominator}"
        )));
    }
    Ok(numerator / denominator)
}
