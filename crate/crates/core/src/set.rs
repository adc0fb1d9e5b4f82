//! Part sets: the ground sets A = {a1 < a2 < a3 < ...} that partitions draw
//! their parts from.
//!
//! Infinite families are never materialized whole; every consumer asks for
//! `parts_up_to(bound)` and gets the finite, strictly increasing prefix it
//! needs. Materialization is deterministic and extending the bound only
//! appends elements. A set may also carry a single excluded member, which
//! drops that value from counting and enumeration without renumbering the
//! underlying sequence.

use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};
use std::fmt;
use std::str::FromStr;

/// The sequence a set draws its members from.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SetKind {
    /// A finite strictly increasing list of positive integers.
    Explicit(Vec<u64>),
    /// Powers of a radix m >= 2: 1, m, m^2, ...
    Mary(u64),
    /// Perfect d-th powers for d >= 2: 1, 2^d, 3^d, ...
    Power(u32),
    /// Distinct Fibonacci numbers: 1, 2, 3, 5, 8, 13, ...
    Fibonacci,
    /// Factorials: 1, 2, 6, 24, 120, ...
    Factorial,
    /// Every positive integer.
    AllIntegers,
}

/// A part set, optionally with one member excluded.
///
/// Equality and hashing are structural; the canonical text form (the same
/// mini-grammar accepted by [`PartSet::from_str`]) is available via
/// `Display`/[`PartSet::label`] and round-trips through parsing.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PartSet {
    kind: SetKind,
    excluded: Option<u64>,
}

impl PartSet {
    pub fn new(kind: SetKind) -> Result<Self> {
        match &kind {
            SetKind::Explicit(list) => {
                if list.is_empty() {
                    return Err(Error::ParseSet {
                        spec: "explicit:".into(),
                        reason: "explicit set needs at least one element".into(),
                    });
                }
                if list[0] == 0 || !list.windows(2).all(|w| w[0] < w[1]) {
                    return Err(Error::ParseSet {
                        spec: format!("explicit:{list:?}"),
                        reason: "elements must be positive and strictly increasing".into(),
                    });
                }
            }
            SetKind::Mary(m) if *m < 2 => {
                return Err(Error::ParseSet {
                    spec: format!("mary:{m}"),
                    reason: "radix must be at least 2".into(),
                });
            }
            SetKind::Power(d) if *d < 2 => {
                return Err(Error::ParseSet {
                    spec: format!("power:{d}"),
                    reason: "exponent must be at least 2".into(),
                });
            }
            _ => {}
        }
        Ok(PartSet {
            kind,
            excluded: None,
        })
    }

    pub fn explicit(parts: Vec<u64>) -> Result<Self> {
        Self::new(SetKind::Explicit(parts))
    }

    pub fn mary(m: u64) -> Result<Self> {
        Self::new(SetKind::Mary(m))
    }

    pub fn power(d: u32) -> Result<Self> {
        Self::new(SetKind::Power(d))
    }

    pub fn fibonacci() -> Self {
        PartSet {
            kind: SetKind::Fibonacci,
            excluded: None,
        }
    }

    pub fn factorial() -> Self {
        PartSet {
            kind: SetKind::Factorial,
            excluded: None,
        }
    }

    pub fn all_integers() -> Self {
        PartSet {
            kind: SetKind::AllIntegers,
            excluded: None,
        }
    }

    /// The same set with `part` excluded from counting and enumeration.
    /// Fails unless `part` is a member of the base sequence.
    pub fn with_excluded(&self, part: u64) -> Result<Self> {
        if !self.base_contains(part) {
            return Err(Error::ExcludedNotMember {
                part,
                set: self.base().label(),
            });
        }
        Ok(PartSet {
            kind: self.kind.clone(),
            excluded: Some(part),
        })
    }

    /// The set without any exclusion applied.
    pub fn base(&self) -> Self {
        PartSet {
            kind: self.kind.clone(),
            excluded: None,
        }
    }

    pub fn kind(&self) -> &SetKind {
        &self.kind
    }

    pub fn excluded(&self) -> Option<u64> {
        self.excluded
    }

    /// Canonical mini-grammar form, e.g. `mary:2`, `explicit:1,2,5!exclude=2`.
    pub fn label(&self) -> String {
        self.to_string()
    }

    /// Is `v` usable as a part (member of the base sequence, not excluded)?
    pub fn contains(&self, v: u64) -> bool {
        self.excluded != Some(v) && self.base_contains(v)
    }

    /// Membership in the base sequence, ignoring any exclusion.
    pub fn base_contains(&self, v: u64) -> bool {
        if v == 0 {
            return false;
        }
        match &self.kind {
            SetKind::Explicit(list) => list.binary_search(&v).is_ok(),
            SetKind::Mary(m) => {
                let mut x = v;
                while x.is_multiple_of(*m) {
                    x /= m;
                }
                x == 1
            }
            SetKind::Power(d) => {
                let r = nth_root(v, *d);
                checked_pow(r, *d) == Some(v)
            }
            SetKind::Fibonacci => {
                let (mut a, mut b) = (1u64, 2u64);
                while a < v {
                    let next = a + b;
                    a = b;
                    b = next;
                }
                a == v
            }
            SetKind::Factorial => {
                let mut f = 1u64;
                let mut i = 1u64;
                while f < v {
                    i += 1;
                    f = match f.checked_mul(i) {
                        Some(f) => f,
                        None => return false,
                    };
                }
                f == v
            }
            SetKind::AllIntegers => true,
        }
    }

    /// The k-th smallest member of the base sequence, 1-based.
    /// `None` if the sequence is shorter than k or the value overflows u64.
    pub fn nth_smallest(&self, k: usize) -> Option<u64> {
        if k == 0 {
            return None;
        }
        match &self.kind {
            SetKind::Explicit(list) => list.get(k - 1).copied(),
            SetKind::Mary(m) => checked_pow(*m, (k - 1) as u32),
            SetKind::Power(d) => checked_pow(k as u64, *d),
            SetKind::Fibonacci => {
                let (mut a, mut b) = (1u64, 2u64);
                for _ in 1..k {
                    let next = a.checked_add(b)?;
                    a = b;
                    b = next;
                }
                Some(a)
            }
            SetKind::Factorial => {
                let mut f = 1u64;
                for i in 2..=(k as u64) {
                    f = f.checked_mul(i)?;
                }
                Some(f)
            }
            SetKind::AllIntegers => Some(k as u64),
        }
    }

    /// Second-smallest member of the base sequence, when it exists.
    pub fn a2(&self) -> Option<u64> {
        self.nth_smallest(2)
    }

    /// Third-smallest member of the base sequence, when it exists.
    pub fn a3(&self) -> Option<u64> {
        self.nth_smallest(3)
    }

    /// Fourth-smallest member of the base sequence, when it exists.
    pub fn a4(&self) -> Option<u64> {
        self.nth_smallest(4)
    }

    /// Usable parts up to and including `bound`, increasing, exclusion applied.
    pub fn parts_up_to(&self, bound: u64) -> Vec<u64> {
        let mut parts = self.base_parts_up_to(bound);
        if let Some(x) = self.excluded {
            parts.retain(|&p| p != x);
        }
        parts
    }

    /// The base sequence up to and including `bound`, increasing.
    pub fn base_parts_up_to(&self, bound: u64) -> Vec<u64> {
        let mut out = Vec::new();
        for k in 1.. {
            match self.nth_smallest(k) {
                Some(v) if v <= bound => out.push(v),
                _ => break,
            }
        }
        out
    }
}

fn checked_pow(base: u64, exp: u32) -> Option<u64> {
    base.checked_pow(exp)
}

/// Integer floor of the d-th root of v.
fn nth_root(v: u64, d: u32) -> u64 {
    if v <= 1 {
        return v;
    }
    let mut r = (v as f64).powf(1.0 / d as f64).round() as u64;
    while r > 0 && checked_pow(r, d).is_none_or(|p| p > v) {
        r -= 1;
    }
    while checked_pow(r + 1, d).is_some_and(|p| p <= v) {
        r += 1;
    }
    r
}

impl fmt::Display for PartSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.kind {
            SetKind::Explicit(list) => {
                write!(f, "explicit:")?;
                for (i, p) in list.iter().enumerate() {
                    if i > 0 {
                        write!(f, ",")?;
                    }
                    write!(f, "{p}")?;
                }
            }
            SetKind::Mary(m) => write!(f, "mary:{m}")?,
            SetKind::Power(d) => write!(f, "power:{d}")?,
            SetKind::Fibonacci => write!(f, "fib")?,
            SetKind::Factorial => write!(f, "factorial")?,
            SetKind::AllIntegers => write!(f, "all")?,
        }
        if let Some(x) = self.excluded {
            write!(f, "!exclude={x}")?;
        }
        Ok(())
    }
}

impl FromStr for PartSet {
    type Err = Error;

    /// Parses the set mini-grammar:
    /// `mary:<m>` | `power:<d>` | `fib` | `factorial` | `all` |
    /// `explicit:<increasing comma-separated integers>`,
    /// optionally followed by `!exclude=<member>`.
    fn from_str(spec: &str) -> Result<Self> {
        let bad = |reason: &str| Error::ParseSet {
            spec: spec.into(),
            reason: reason.into(),
        };
        let (head, excl) = match spec.split_once('!') {
            None => (spec, None),
            Some((head, tail)) => {
                let v = tail
                    .strip_prefix("exclude=")
                    .ok_or_else(|| bad("expected `!exclude=<part>` suffix"))?;
                let part: u64 = v
                    .parse()
                    .map_err(|_| bad("exclude value is not a positive integer"))?;
                (head, Some(part))
            }
        };
        let kind = match head.split_once(':') {
            Some(("mary", m)) => {
                SetKind::Mary(m.parse().map_err(|_| bad("radix is not an integer"))?)
            }
            Some(("power", d)) => {
                SetKind::Power(d.parse().map_err(|_| bad("exponent is not an integer"))?)
            }
            Some(("explicit", list)) => {
                let parts: Vec<u64> = list
                    .split(',')
                    .map(|s| {
                        s.trim()
                            .parse()
                            .map_err(|_| bad("element is not an integer"))
                    })
                    .collect::<Result<_>>()?;
                SetKind::Explicit(parts)
            }
            None if head == "fib" => SetKind::Fibonacci,
            None if head == "factorial" => SetKind::Factorial,
            None if head == "all" => SetKind::AllIntegers,
            _ => return Err(bad("unknown set family")),
        };
        let set = PartSet::new(kind).map_err(|e| match e {
            Error::ParseSet { reason, .. } => Error::ParseSet {
                spec: spec.into(),
                reason,
            },
            other => other,
        })?;
        match excl {
            None => Ok(set),
            Some(part) => set.with_excluded(part),
        }
    }
}

impl Serialize for PartSet {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for PartSet {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let text = String::deserialize(d)?;
        text.parse().map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn materialization_examples() {
        assert_eq!(PartSet::mary(2).unwrap().parts_up_to(10), vec![1, 2, 4, 8]);
        assert_eq!(PartSet::power(2).unwrap().parts_up_to(10), vec![1, 4, 9]);
        assert_eq!(
            PartSet::fibonacci().parts_up_to(15),
            vec![1, 2, 3, 5, 8, 13]
        );
        assert_eq!(
            PartSet::factorial().parts_up_to(130),
            vec![1, 2, 6, 24, 120]
        );
        assert_eq!(PartSet::all_integers().parts_up_to(4), vec![1, 2, 3, 4]);
    }

    #[test]
    fn extension_only_appends() {
        let set = PartSet::fibonacci();
        let small = set.parts_up_to(40);
        let large = set.parts_up_to(400);
        assert_eq!(&large[..small.len()], &small[..]);
    }

    #[test]
    fn grammar_round_trips() {
        for spec in [
            "mary:2",
            "mary:10",
            "power:3",
            "fib",
            "factorial",
            "all",
            "explicit:1,2,5",
            "explicit:1,2,6,13,20",
            "power:2!exclude=4",
            "explicit:1,2,5!exclude=2",
        ] {
            let set: PartSet = spec.parse().unwrap();
            assert_eq!(set.label(), spec);
            let again: PartSet = set.label().parse().unwrap();
            assert_eq!(again, set);
        }
    }

    #[test]
    fn parse_rejects_garbage() {
        for spec in [
            "mary:1",
            "mary:x",
            "power:1",
            "explicit:",
            "explicit:3,2",
            "explicit:0,1",
            "unknown",
            "fib!exclude=4",    // 4 is not a Fibonacci number
            "mary:2!exclude=3", // 3 is not a power of 2
            "explicit:1,2!skip=2",
        ] {
            assert!(spec.parse::<PartSet>().is_err(), "{spec} should not parse");
        }
    }

    #[test]
    fn exclusion_drops_exactly_one_member() {
        let set: PartSet = "power:2!exclude=4".parse().unwrap();
        assert_eq!(set.parts_up_to(17), vec![1, 9, 16]);
        assert_eq!(set.base_parts_up_to(17), vec![1, 4, 9, 16]);
        assert!(!set.contains(4));
        assert!(set.base_contains(4));
        assert_eq!(set.excluded(), Some(4));
    }

    #[test]
    fn small_members_by_index() {
        let fib = PartSet::fibonacci();
        assert_eq!((fib.a2(), fib.a3(), fib.a4()), (Some(2), Some(3), Some(5)));
        let fact = PartSet::factorial();
        assert_eq!(
            (fact.a2(), fact.a3(), fact.a4()),
            (Some(2), Some(6), Some(24))
        );
        let sq = PartSet::power(2).unwrap();
        assert_eq!((sq.a2(), sq.a3(), sq.a4()), (Some(4), Some(9), Some(16)));
        let tiny = PartSet::explicit(vec![1, 2]).unwrap();
        assert_eq!(tiny.a3(), None);
    }

    #[test]
    fn membership_matches_materialization() {
        for spec in [
            "mary:3",
            "power:4",
            "fib",
            "factorial",
            "all",
            "explicit:2,4,10",
        ] {
            let set: PartSet = spec.parse().unwrap();
            let members: Vec<u64> = set.parts_up_to(600);
            for v in 1..=600u64 {
                assert_eq!(set.contains(v), members.contains(&v), "{spec} at {v}");
            }
        }
    }

    #[test]
    fn factorial_materialization_stops_before_overflow() {
        let fact = PartSet::factorial();
        let all = fact.parts_up_to(u64::MAX);
        assert_eq!(all.len(), 20); // 21! does not fit in u64
        assert!(fact.base_contains(2_432_902_008_176_640_000)); // 20!
    }
}
