//! Explicit enumeration of partitions, in decreasing lexicographic order.
//!
//! This is the slow, obviously-correct route: descend through allowed parts
//! largest-first. It exists both as a user-facing operation and as the oracle
//! the counting tables are tested against.

use crate::error::{Error, Result};
use crate::partition::Partition;
use crate::set::PartSet;

/// Default ceiling on the number of partitions a single call may produce.
pub const DEFAULT_ENUMERATION_CAP: usize = 1_000_000;

/// All partitions of `n` with parts from `set`, optionally bounded by
/// `max_part`, capped at [`DEFAULT_ENUMERATION_CAP`].
pub fn enumerate_partitions(
    set: &PartSet,
    n: u64,
    max_part: Option<u64>,
) -> Result<Vec<Partition>> {
    enumerate_partitions_capped(set, n, max_part, DEFAULT_ENUMERATION_CAP)
}

/// As [`enumerate_partitions`] with an explicit cap. Exceeding the cap is an
/// error rather than a truncation: a partial list would silently corrupt any
/// computation that trusts it to be exhaustive.
pub fn enumerate_partitions_capped(
    set: &PartSet,
    n: u64,
    max_part: Option<u64>,
    cap: usize,
) -> Result<Vec<Partition>> {
    let limit = max_part.unwrap_or(n).min(n);
    let parts = set.parts_up_to(limit);
    let mut out = Vec::new();
    let mut stack = Vec::new();
    descend(&parts, n, limit, &mut stack, &mut out, cap, n)?;
    Ok(out)
}

fn descend(
    parts: &[u64],
    remaining: u64,
    max_part: u64,
    stack: &mut Vec<u64>,
    out: &mut Vec<Partition>,
    cap: usize,
    n: u64,
) -> Result<()> {
    if remaining == 0 {
        if out.len() >= cap {
            return Err(Error::EnumerationOverflow { n, cap });
        }
        out.push(Partition::new(stack.clone()).expect("descent emits canonical order"));
        return Ok(());
    }
    for &a in parts.iter().rev() {
        if a > max_part || a > remaining {
            continue;
        }
        stack.push(a);
        descend(parts, remaining - a, a, stack, out, cap, n)?;
        stack.pop();
    }
    Ok(())
}
