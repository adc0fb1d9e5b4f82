//! Partition counting tables.

use crate::error::{Error, Result};
use crate::set::PartSet;
use num_bigint::BigUint;
use num_traits::{One, Zero};

/// Counts of partitions of every weight 0..=bound with parts from one set.
///
/// Counts are exact big integers. The table remembers the set it was built
/// for (including any excluded part), so a restricted table such as "no
/// second-smallest parts" is just a table for `set.with_excluded(a2)`.
#[derive(Debug, Clone)]
pub struct CountTable {
    set: PartSet,
    counts: Vec<BigUint>,
}

impl CountTable {
    /// Standard coin-counting sweep: one pass per part in increasing order,
    /// accumulating `counts[n] += counts[n - a]`.
    pub fn build(set: &PartSet, bound: u64) -> CountTable {
        let len = bound as usize + 1;
        let mut counts = vec![BigUint::zero(); len];
        counts[0] = BigUint::one();
        for a in set.parts_up_to(bound) {
            let a = a as usize;
            for n in a..len {
                let (lo, hi) = counts.split_at_mut(n);
                hi[0] += &lo[n - a];
            }
        }
        CountTable {
            set: set.clone(),
            counts,
        }
    }

    pub fn set(&self) -> &PartSet {
        &self.set
    }

    /// Largest weight the table covers.
    pub fn bound(&self) -> u64 {
        (self.counts.len() - 1) as u64
    }

    /// The excluded part the table was built without, if any.
    pub fn restriction(&self) -> Option<u64> {
        self.set.excluded()
    }

    pub fn get(&self, n: u64) -> Result<&BigUint> {
        self.counts.get(n as usize).ok_or(Error::BoundExceeded {
            what: "count table lookup",
            n,
            bound: self.bound(),
        })
    }

    pub fn counts(&self) -> &[BigUint] {
        &self.counts
    }

    /// CSV dump with an `n,count` header; counts in decimal.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("n,count\n");
        for (n, c) in self.counts.iter().enumerate() {
            out.push_str(&format!("{n},{c}\n"));
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn count(spec: &str, n: u64) -> u64 {
        let set: PartSet = spec.parse().unwrap();
        let table = CountTable::build(&set, n);
        let big = table.get(n).unwrap();
        u64::try_from(big.clone()).unwrap()
    }

    #[test]
    fn empty_weight_has_one_partition() {
        for spec in [
            "mary:2",
            "power:3",
            "fib",
            "factorial",
            "all",
            "explicit:2,3",
        ] {
            assert_eq!(count(spec, 0), 1, "{spec}");
        }
    }

    #[test]
    fn known_small_counts() {
        assert_eq!(count("all", 4), 5);
        assert_eq!(count("mary:2", 12), 20);
        assert_eq!(count("mary:4", 20), 8);
        assert_eq!(count("power:2", 9), 4);
        assert_eq!(count("power:2", 25), 19);
        assert_eq!(count("fib", 8), 14);
        assert_eq!(count("fib", 13), 41);
    }

    #[test]
    fn restriction_excludes_the_part() {
        // Partitions of 9 into squares avoiding 4: (9) and (1^9).
        assert_eq!(count("power:2!exclude=4", 9), 2);
    }

    #[test]
    fn lookup_past_bound_is_an_error() {
        let table = CountTable::build(&PartSet::fibonacci(), 10);
        assert!(table.get(10).is_ok());
        assert!(matches!(table.get(11), Err(Error::BoundExceeded { .. })));
    }

    #[test]
    fn csv_has_header_and_decimal_rows() {
        let table = CountTable::build(&"mary:2".parse().unwrap(), 3);
        assert_eq!(table.to_csv(), "n,count\n0,1\n1,1\n2,2\n3,2\n");
    }

    #[test]
    fn splitting_identity() {
        // p(n) = p(n - a2) + p(n | no a2's) for every n >= a2.
        for spec in ["mary:2", "mary:3", "power:2", "fib", "factorial", "all"] {
            let set: PartSet = spec.parse().unwrap();
            let a2 = set.a2().unwrap();
            let full = CountTable::build(&set, 120);
            let restricted = CountTable::build(&set.with_excluded(a2).unwrap(), 120);
            for n in a2..=120 {
                let lhs = full.get(n).unwrap();
                let rhs = full.get(n - a2).unwrap() + restricted.get(n).unwrap();
                assert_eq!(*lhs, rhs, "{spec} at n={n}");
            }
        }
    }
}
