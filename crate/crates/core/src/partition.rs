//! Partitions as weakly decreasing sequences of positive parts.

use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};
use std::fmt;

/// A partition: parts stored weakly decreasing, every part positive.
///
/// Because the stored form is canonical, `Eq`/`Hash` give multiset equality
/// and the derived `Ord` is lexicographic on the part sequence, which is the
/// order enumeration emits (largest first).
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<u64>", into = "Vec<u64>")]
pub struct Partition {
    parts: Vec<u64>,
}

impl Partition {
    /// Wraps an already weakly decreasing sequence of positive parts.
    pub fn new(parts: Vec<u64>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::Domain("partition parts must be positive".into()));
        }
        if !parts.windows(2).all(|w| w[0] >= w[1]) {
            return Err(Error::Domain(format!(
                "parts {parts:?} are not weakly decreasing"
            )));
        }
        Ok(Partition { parts })
    }

    /// Sorts the given parts into canonical order first.
    pub fn from_unsorted(mut parts: Vec<u64>) -> Result<Self> {
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Self::new(parts)
    }

    /// Builds from `(part, multiplicity)` pairs; zero multiplicities are fine.
    pub fn from_run_lengths(runs: &[(u64, u64)]) -> Result<Self> {
        let mut parts = Vec::new();
        for &(part, mult) in runs {
            for _ in 0..mult {
                parts.push(part);
            }
        }
        Self::from_unsorted(parts)
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    pub fn parts(&self) -> &[u64] {
        &self.parts
    }

    /// The weight: sum of all parts.
    pub fn sum(&self) -> u64 {
        self.parts.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn multiplicity(&self, part: u64) -> u64 {
        self.parts.iter().filter(|&&p| p == part).count() as u64
    }

    /// Distinct parts with multiplicities, largest part first.
    pub fn run_lengths(&self) -> Vec<(u64, u64)> {
        let mut runs: Vec<(u64, u64)> = Vec::new();
        for &p in &self.parts {
            match runs.last_mut() {
                Some((q, m)) if *q == p => *m += 1,
                _ => runs.push((p, 1)),
            }
        }
        runs
    }
}

impl TryFrom<Vec<u64>> for Partition {
    type Error = Error;
    fn try_from(parts: Vec<u64>) -> Result<Self> {
        Partition::new(parts)
    }
}

impl From<Partition> for Vec<u64> {
    fn from(p: Partition) -> Vec<u64> {
        p.parts
    }
}

impl fmt::Display for Partition {
    /// Exponent notation, e.g. `(5^2, 2, 1^3)`; the empty partition is `()`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, (part, mult)) in self.run_lengths().into_iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            if mult == 1 {
                write!(f, "{part}")?;
            } else {
                write!(f, "{part}^{mult}")?;
            }
        }
        write!(f, ")")
    }
}
