//! Persistent table of computed values of `J(t) = int_0^t Z(u)^2 du`.
//!
//! On disk: one record per line, `t <tab> J(t) <tab> tol`, sorted by `t`,
//! 17 significant digits (round-trips f64 bit-exactly).

use std::collections::BTreeMap;
use std::io::{BufRead, BufReader, Write};
use std::path::Path;

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Checkpoint {
    pub t: f64,
    pub j: f64,
    /// Absolute error budget under which this value was computed.
    pub tol: f64,
}

/// Ordered map from grid height to computed integral value. Keys are the bit
/// patterns of nonnegative finite f64s, which order identically to the values.
#[derive(Debug, Clone, Default)]
pub struct CheckpointStore {
    records: BTreeMap<u64, Checkpoint>,
}

impl CheckpointStore {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn len(&self) -> usize {
        self.records.len()
    }

    pub fn is_empty(&self) -> bool {
        self.records.is_empty()
    }

    /// The record with the largest `t <= height`, if any.
    pub fn nearest_at_or_below(&self, height: f64) -> Option<Checkpoint> {
        self.records
            .range(..=height.to_bits())
            .next_back()
            .map(|(_, r)| *r)
    }

    pub fn get(&self, t: f64) -> Option<Checkpoint> {
        self.records.get(&t.to_bits()).copied()
    }

    pub fn insert(&mut self, t: f64, j: f64, tol: f64) {
        debug_assert!(t >= 0.0 && t.is_finite() && j >= 0.0);
        // Keep the tighter of two records for the same height.
        match self.records.get(&t.to_bits()) {
            Some(old) if old.tol <= tol => {}
            _ => {
                self.records.insert(t.to_bits(), Checkpoint { t, j, tol });
            }
        }
    }

    pub fn iter(&self) -> impl Iterator<Item = &Checkpoint> {
        self.records.values()
    }

    pub fn load(path: &Path) -> Result<Self> {
        let file = std::fs::File::open(path)?;
        let mut store = Self::new();
        let mut prev_j = f64::NEG_INFINITY;
        for (idx, line) in BufReader::new(file).lines().enumerate() {
            let line = line?;
            if line.trim().is_empty() || line.starts_with('#') {
                continue;
            }
            let corrupt = |reason: String| Error::CorruptStore {
                path: path.display().to_string(),
                line: idx + 1,
                reason,
            };
            let mut fields = line.split('\t');
            let mut next = |name: &str| -> Result<f64> {
                fields
                    .next()
                    .ok_or_else(|| corrupt(format!("missing field `{name}`")))?
                    .parse::<f64>()
                    .map_err(|e| corrupt(format!("bad {name}: {e} in `{line}`")))
            };
            let t = next("t")?;
            let j = next("J")?;
            let tol = next("tol")?;
            if !(t >= 0.0) || !(j >= 0.0) || !(tol > 0.0) {
                return Err(corrupt(format!(
                    "record out of range: t = {t}, J = {j}, tol = {tol}"
                )));
            }
            if j < prev_j {
                return Err(corrupt(format!(
                    "J not nondecreasing: {j} after {prev_j} (t = {t})"
                )));
            }
            prev_j = j;
            store.insert(t, j, tol);
        }
        Ok(store)
    }

    pub fn save(&self, path: &Path) -> Result<()> {
        let mut out = std::io::BufWriter::new(std::fs::File::create(path)?);
        for r in self.records.values() {
            writeln!(out, "{:.16e}\t{:.16e}\t{:.16e}", r.t, r.j, r.tol)?;
        }
        out.flush()?;
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn nearest_lookup() {
        let mut s = CheckpointStore::new();
        s.insert(0.0, 0.0, 1e-9);
        s.insert(100.0, 77.0, 1e-3);
        s.insert(1000.0, 5000.0, 1e-3);
        assert_eq!(s.nearest_at_or_below(50.0).unwrap().t, 0.0);
        assert_eq!(s.nearest_at_or_below(100.0).unwrap().t, 100.0);
        assert_eq!(s.nearest_at_or_below(999.9).unwrap().t, 100.0);
        assert_eq!(s.nearest_at_or_below(1e9).unwrap().t, 1000.0);
    }

    #[test]
    fn bit_exact_round_trip() {
        let mut s = CheckpointStore::new();
        s.insert(0.1 + 0.2, 1.0 / 3.0, 1e-3);
        s.insert(1234.5678, std::f64::consts::PI * 1e6, 2.5e-4);
        let dir = std::env::temp_dir().join("zl_store_test");
        std::fs::create_dir_all(&dir).unwrap();
        let path = dir.join("roundtrip.tsv");
        s.save(&path).unwrap();
        let loaded = CheckpointStore::load(&path).unwrap();
        assert_eq!(s.len(), loaded.len());
        for (a, b) in s.iter().zip(loaded.iter()) {
            assert_eq!(a.t.to_bits(), b.t.to_bits());
            assert_eq!(a.j.to_bits(), b.j.to_bits());
            assert_eq!(a.tol.to_bits(), b.tol.to_bits());
        }
    }

    #[test]
    fn corrupt_record_is_named() {
        let dir = std::env::temp_dir().join("zl_store_test");
        std::fs::create_dir_all(&dir).unwrap();
        let path = dir.join("corrupt.tsv");
        std::fs::write(&path, "1.0\t2.0\t1e-3\n5.0\tnot-a-number\t1e-3\n").unwrap();
        match CheckpointStore::load(&path) {
            Err(Error::CorruptStore { line, .. }) => assert_eq!(line, 2),
            other => panic!("expected CorruptStore, got {other:?}"),
        }
    }

    #[test]
    fn rejects_decreasing_j() {
        let dir = std::env::temp_dir().join("zl_store_test");
        std::fs::create_dir_all(&dir).unwrap();
        let path = dir.join("decreasing.tsv");
        std::fs::write(&path, "1.0\t2.0\t1e-3\n5.0\t1.5\t1e-3\n").unwrap();
        assert!(matches!(
            CheckpointStore::load(&path),
            Err(Error::CorruptStore { .. })
        ));
    }
}
