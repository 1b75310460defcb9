use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::path::Path;

use super::closed::ceil_log2;
use super::cycles::z_kl;
use super::zwords::z_ll_via_words;
use crate::error::{Error, Result};

const CACHE_HEADER: &str = "# cubeturan z-table";

/// Memoized `z_{k,l}` values.
///
/// The cache file holds one `z <k> <l> <value>` line per entry under a
/// version comment; a cache written by another version is ignored.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ZTable {
    entries: BTreeMap<(usize, usize), u64>,
}

impl ZTable {
    pub fn get(&self, k: usize, l: usize) -> Option<u64> {
        self.entries.get(&(k, l)).copied()
    }

    pub fn insert(&mut self, k: usize, l: usize, value: u64) {
        self.entries.insert((k, l), value);
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = ((usize, usize), u64)> + '_ {
        self.entries.iter().map(|(&k, &v)| (k, v))
    }

    pub fn get_or_compute(&mut self, k: usize, l: usize) -> Result<u64> {
        if let Some(v) = self.get(k, l) {
            return Ok(v);
        }
        let v = z_kl(k, l)?;
        self.insert(k, l, v);
        Ok(v)
    }

    /// `z_{l,l}`: direct enumeration up to `l = 6`, the `Z(l)` word formula
    /// beyond (it agrees with enumeration wherever both run).
    pub fn get_or_compute_diagonal(&mut self, l: usize) -> Result<u64> {
        if l <= 6 {
            return self.get_or_compute(l, l);
        }
        if let Some(v) = self.get(l, l) {
            return Ok(v);
        }
        let v = z_ll_via_words(l, false)?;
        let v = u64::try_from(v)
            .map_err(|_| Error::EnumerationTooLarge(format!("z({l},{l}) exceeds 64 bits")))?;
        self.insert(l, l, v);
        Ok(v)
    }

    /// Fills every entry the `2l`-cycle count of `Q_n` needs.
    pub fn ensure_for_cycles(&mut self, n: usize, l: usize) -> Result<()> {
        let lo = ceil_log2(2 * l as u64) as usize;
        for k in lo..=l.min(n) {
            self.get_or_compute(k, l)?;
        }
        Ok(())
    }

    pub fn to_text(&self) -> String {
        let mut out = format!("{CACHE_HEADER} {}\n", env!("CARGO_PKG_VERSION"));
        for ((k, l), v) in &self.entries {
            writeln!(out, "z {k} {l} {v}").unwrap();
        }
        out
    }

    pub fn from_text(text: &str) -> Result<ZTable> {
        let mut table = ZTable::default();
        for (i, raw) in text.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let bad = || Error::Parse {
                line: i + 1,
                message: format!("expected `z <k> <l> <value>`, found {line:?}"),
            };
            let fields: Vec<&str> = line.split_whitespace().collect();
            if fields.len() != 4 || fields[0] != "z" {
                return Err(bad());
            }
            let k = fields[1].parse().map_err(|_| bad())?;
            let l = fields[2].parse().map_err(|_| bad())?;
            let v = fields[3].parse().map_err(|_| bad())?;
            table.insert(k, l, v);
        }
        Ok(table)
    }

    /// Loads a cache file. Missing files and caches from other versions
    /// give an empty table.
    pub fn load_cache(path: impl AsRef<Path>) -> Result<ZTable> {
        let text = match std::fs::read_to_string(path) {
            Ok(t) => t,
            Err(e) if e.kind() == std::io::ErrorKind::NotFound => return Ok(ZTable::default()),
            Err(e) => return Err(e.into()),
        };
        let expected = format!("{CACHE_HEADER} {}", env!("CARGO_PKG_VERSION"));
        if text.lines().next().map(str::trim) != Some(expected.as_str()) {
            return Ok(ZTable::default());
        }
        ZTable::from_text(&text)
    }

    pub fn save_cache(&self, path: impl AsRef<Path>) -> Result<()> {
        std::fs::write(path, self.to_text())?;
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cache_round_trip() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("z.txt");
        let mut t = ZTable::default();
        t.get_or_compute(3, 3).unwrap();
        t.get_or_compute(2, 2).unwrap();
        t.save_cache(&path).unwrap();
        let back = ZTable::load_cache(&path).unwrap();
        assert_eq!(back, t);
        assert_eq!(back.get(3, 3), Some(16));
        assert!(std::fs::read_to_string(&path).unwrap().contains("z 3 3 16\n"));
    }

    #[test]
    fn stale_or_missing_cache_is_empty() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("z.txt");
        assert!(ZTable::load_cache(&path).unwrap().is_empty());
        std::fs::write(&path, "# cubeturan z-table 0.0.0-old\nz 3 3 99\n").unwrap();
        assert!(ZTable::load_cache(&path).unwrap().is_empty());
    }

    #[test]
    fn malformed_line() {
        assert!(matches!(
            ZTable::from_text("z 3 3\n"),
            Err(Error::Parse { line: 1, .. })
        ));
    }

    #[test]
    fn diagonal_entries() {
        let mut t = ZTable::default();
        assert_eq!(t.get_or_compute_diagonal(3).unwrap(), 16);
        assert_eq!(t.get_or_compute_diagonal(7).unwrap(), 880_865_280);
        assert_eq!(t.get(7, 7), Some(880_865_280));
    }

    #[test]
    fn ensure_fills_range() {
        let mut t = ZTable::default();
        t.ensure_for_cycles(5, 4).unwrap();
        // k from ceil(log2 8) = 3 to min(4, 5)
        assert!(t.get(3, 4).is_some() && t.get(4, 4).is_some());
        assert_eq!(t.len(), 2);
    }
}
