//! The count function extended to partitions, and its maximum per weight.
//!
//! For a partition with parts from A, the extended value is the product of the
//! per-part counts p_A(part). `max_value` finds the largest extended value
//! over all partitions of n, together with every partition attaining it.

use crate::count::CountTable;
use crate::error::{Error, Result};
use crate::partition::Partition;
use crate::set::PartSet;
use num_bigint::BigUint;
use num_traits::{One, Zero};
use serde::Serialize;

/// Default ceiling on how many maximizing partitions are recovered.
pub const DEFAULT_WITNESS_CAP: usize = 64;

/// Product of per-part counts. Every part must be a usable member of the
/// table's set and within the table's bound.
pub fn extended_value(table: &CountTable, partition: &Partition) -> Result<BigUint> {
    let mut acc = BigUint::one();
    for &part in partition.parts() {
        if !table.set().contains(part) {
            return Err(Error::Domain(format!(
                "part {part} is not usable in {}",
                table.set().label()
            )));
        }
        acc *= table.get(part)?;
    }
    Ok(acc)
}

/// The maximum extended value over partitions of one weight, with witnesses.
#[derive(Debug, Clone, Serialize)]
pub struct MaxResult {
    pub n: u64,
    /// Zero exactly when `n` has no partition at all (possible only for sets
    /// that exclude or lack 1).
    #[serde(with = "crate::decimal")]
    pub value: BigUint,
    /// Every maximizing partition, decreasing lexicographic, unless capped.
    pub witnesses: Vec<Partition>,
    /// True when more witnesses exist than the cap allowed us to list.
    pub witness_cap_hit: bool,
}

/// [`max_value_capped`] with the default witness cap.
pub fn max_value(set: &PartSet, n: u64) -> MaxResult {
    max_value_capped(set, n, DEFAULT_WITNESS_CAP)
}

/// Maximizes the extended value over all partitions of `n`.
///
/// Dynamic program over weights: best(k) = max over usable parts a <= k of
/// p_A(a) * best(k - a). Witnesses are rebuilt by walking optimal first-part
/// choices in decreasing order under a "no part larger than the previous"
/// constraint, which yields each maximizing multiset exactly once, largest
/// lexicographic first.
pub fn max_value_capped(set: &PartSet, n: u64, witness_cap: usize) -> MaxResult {
    let counts = CountTable::build(set, n);
    let parts = set.parts_up_to(n);
    let len = n as usize + 1;

    let mut best: Vec<Option<BigUint>> = vec![None; len];
    best[0] = Some(BigUint::one());
    for k in 1..len {
        let mut top: Option<BigUint> = None;
        for &a in &parts {
            let a = a as usize;
            if a > k {
                break;
            }
            if let Some(tail) = &best[k - a] {
                let cand = counts.get(a as u64).unwrap() * tail;
                if top.as_ref().is_none_or(|t| cand > *t) {
                    top = Some(cand);
                }
            }
        }
        best[k] = top;
    }

    let Some(value) = best[n as usize].clone() else {
        return MaxResult {
            n,
            value: BigUint::zero(),
            witnesses: Vec::new(),
            witness_cap_hit: false,
        };
    };

    let mut witnesses = Vec::new();
    let mut cap_hit = false;
    let mut stack = Vec::new();
    recover(
        &parts,
        &counts,
        &best,
        n as usize,
        u64::MAX,
        &mut stack,
        &mut witnesses,
        witness_cap,
        &mut cap_hit,
    );
    MaxResult {
        n,
        value,
        witnesses,
        witness_cap_hit: cap_hit,
    }
}

#[allow(clippy::too_many_arguments)]
fn recover(
    parts: &[u64],
    counts: &CountTable,
    best: &[Option<BigUint>],
    k: usize,
    max_part: u64,
    stack: &mut Vec<u64>,
    out: &mut Vec<Partition>,
    cap: usize,
    cap_hit: &mut bool,
) {
    if *cap_hit {
        return;
    }
    if k == 0 {
        if out.len() == cap {
            *cap_hit = true;
        } else {
            out.push(Partition::new(stack.clone()).expect("recovery emits canonical order"));
        }
        return;
    }
    let target = best[k]
        .as_ref()
        .expect("recovery only visits reachable weights");
    for &a in parts.iter().rev() {
        if a > max_part || a as usize > k {
            continue;
        }
        let Some(tail) = &best[k - a as usize] else {
            continue;
        };
        if counts.get(a).unwrap() * tail == *target {
            stack.push(a);
            recover(
                parts,
                counts,
                best,
                k - a as usize,
                a,
                stack,
                out,
                cap,
                cap_hit,
            );
            stack.pop();
            if *cap_hit {
                return;
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::enumerate::enumerate_partitions;

    fn wit(result: &MaxResult) -> Vec<Vec<u64>> {
        result
            .witnesses
            .iter()
            .map(|p| p.parts().to_vec())
            .collect()
    }

    #[test]
    fn binary_weight_six() {
        let set: PartSet = "mary:2".parse().unwrap();
        let r = max_value(&set, 6);
        assert_eq!(r.value, 8u32.into());
        assert_eq!(wit(&r), vec![vec![4, 2], vec![2, 2, 2]]);
        assert!(!r.witness_cap_hit);
    }

    #[test]
    fn squares_weight_nine_ties_with_the_single_part() {
        let set: PartSet = "power:2".parse().unwrap();
        let r = max_value(&set, 9);
        assert_eq!(r.value, 4u32.into());
        assert_eq!(wit(&r), vec![vec![9], vec![4, 4, 1]]);
    }

    #[test]
    fn fibonacci_twelve_and_thirteen() {
        let set = PartSet::fibonacci();
        let r = max_value(&set, 12);
        assert_eq!(r.value, 81u32.into());
        assert_eq!(wit(&r), vec![vec![3, 3, 3, 3]]);

        let r = max_value(&set, 13);
        assert_eq!(r.value, 108u32.into());
        assert_eq!(
            wit(&r),
            vec![vec![5, 5, 3], vec![5, 3, 3, 2], vec![3, 3, 3, 2, 2]]
        );
    }

    #[test]
    fn weight_zero_is_the_empty_product() {
        let r = max_value(&PartSet::fibonacci(), 0);
        assert_eq!(r.value, 1u32.into());
        assert_eq!(r.witnesses, vec![Partition::empty()]);
    }

    #[test]
    fn unreachable_weight_yields_zero() {
        let set: PartSet = "explicit:2,4".parse().unwrap();
        let r = max_value(&set, 7);
        assert!(r.value.is_zero());
        assert!(r.witnesses.is_empty());
    }

    #[test]
    fn cap_truncates_and_flags() {
        let set: PartSet = "mary:2".parse().unwrap();
        let r = max_value_capped(&set, 40, 3);
        assert_eq!(r.witnesses.len(), 3);
        assert!(r.witness_cap_hit);
        let full = max_value(&set, 40);
        assert_eq!(full.witnesses.len(), 11); // shapes (4^i, 2^(20-2i)) for i = 0..=10
        assert_eq!(full.witnesses[..3], r.witnesses[..]);
    }

    #[test]
    fn extended_value_checks_membership_and_bound() {
        let set: PartSet = "power:2".parse().unwrap();
        let table = CountTable::build(&set, 20);
        let ok = Partition::new(vec![16, 4, 1]).unwrap();
        assert_eq!(extended_value(&table, &ok).unwrap(), 16u32.into()); // 8 * 2 * 1
        let bad = Partition::new(vec![5, 4]).unwrap();
        assert!(extended_value(&table, &bad).is_err());
        let too_big = Partition::new(vec![25]).unwrap();
        assert!(extended_value(&table, &too_big).is_err());

        let restricted = CountTable::build(&set.with_excluded(4).unwrap(), 20);
        assert!(extended_value(&restricted, &ok).is_err());
    }

    #[test]
    fn matches_exhaustive_search_on_small_weights() {
        for spec in [
            "mary:2",
            "mary:3",
            "power:2",
            "fib",
            "factorial",
            "all",
            "explicit:2,3,11",
        ] {
            let set: PartSet = spec.parse().unwrap();
            let table = CountTable::build(&set, 30);
            for n in 0..=30u64 {
                let all = enumerate_partitions(&set, n, None).unwrap();
                let brute = all
                    .iter()
                    .map(|p| extended_value(&table, p).unwrap())
                    .max()
                    .unwrap_or_else(BigUint::zero);
                let r = max_value(&set, n);
                assert_eq!(r.value, brute, "{spec} at n={n}");
                let brute_wit: Vec<_> = all
                    .into_iter()
                    .filter(|p| extended_value(&table, p).unwrap() == brute)
                    .collect();
                if r.value.is_zero() {
                    assert!(r.witnesses.is_empty());
                } else {
                    assert_eq!(r.witnesses, brute_wit, "{spec} at n={n}");
                }
            }
        }
    }
}
