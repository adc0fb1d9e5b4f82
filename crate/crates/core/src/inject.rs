//! Splitting maps on restricted partitions, and their exhaustive verifier.
//!
//! Setting: a part set A with least member 1, second member a2, third member
//! a3, a weight split w + z, and the domain of partitions of w + z that avoid
//! a2. Each map sends such a partition to a pair: a partition of w still
//! avoiding a2, and an unrestricted partition of z. When the map is injective
//! the counting inequality
//!
//! ```text
//! p_A(w | no a2) * p_A(z) >= p_A(w + z | no a2)
//! ```
//!
//! follows immediately, and it is this inequality the certification engine
//! (see [`crate::bo`]) combines with the subtract-a2 splitting identity to
//! push strictness upward by induction.
//!
//! Two variants with different hypotheses on the set:
//!
//! * [`Variant::F`]: members from the third onward must pairwise differ by at
//!   least a3; legal for w >= a3 + 1 and z >= 2*a2.
//! * [`Variant::G`]: only members from the fourth onward need the a3 gap, at
//!   the price of z >= 3*a2. It agrees with `F` everywhere except one
//!   redirected branch (no part equals a2, the 1-multiplicity lies in the
//!   band (z, z + a3], and the smallest part above 1 exceeds a3), whose image
//!   is marked with two a2 parts so the two branches cannot collide.
//!
//! Sets whose least member a1 exceeds 1 are handled by rescaling when a1
//! divides every materialized member (and w and z); mixed divisibility is
//! rejected as unsupported.

use crate::enumerate::{enumerate_partitions_capped, DEFAULT_ENUMERATION_CAP};
use crate::error::{Error, Result};
use crate::partition::Partition;
use crate::set::PartSet;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use std::collections::{BTreeMap, HashMap};
use std::fmt;

/// Which splitting map to use.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Variant {
    /// Seven-case map; needs the gap hypothesis from the third member on.
    #[serde(rename = "f")]
    F,
    /// Same map with one branch redirected; gap hypothesis only from the
    /// fourth member on, but requires z >= 3*a2.
    #[serde(rename = "g")]
    G,
}

impl fmt::Display for Variant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Variant::F => "f",
            Variant::G => "g",
        })
    }
}

/// Case labels for the image construction, plus the redirected branch used
/// only by [`Variant::G`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum CaseId {
    #[serde(rename = "1")]
    C1,
    #[serde(rename = "2")]
    C2,
    #[serde(rename = "3")]
    C3,
    #[serde(rename = "4")]
    C4,
    #[serde(rename = "5")]
    C5,
    #[serde(rename = "6")]
    C6,
    #[serde(rename = "7")]
    C7,
    #[serde(rename = "redirected")]
    Redirected,
}

impl fmt::Display for CaseId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CaseId::C1 => "1",
            CaseId::C2 => "2",
            CaseId::C3 => "3",
            CaseId::C4 => "4",
            CaseId::C5 => "5",
            CaseId::C6 => "6",
            CaseId::C7 => "7",
            CaseId::Redirected => "redirected",
        })
    }
}

/// Where and how a domain partition splits across the (w, z) boundary.
///
/// Scanning positions from the right, `i` is the first (1-based, counted in
/// the full part list including trailing 1's) position whose suffix sum still
/// reaches z. Part i is cut as x + y: the trailing x goes toward z, the
/// leading y stays with w, so x >= 1, y >= 0, part_i = x + y, and i <= t + s
/// always hold. `t` counts the parts above 1 (on the valid domain these are
/// exactly the parts >= a3, since a2 is banned) and `s` is the multiplicity
/// of 1.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct SplitData {
    pub i: usize,
    pub x: u64,
    pub y: u64,
    pub t: usize,
    pub s: u64,
}

/// The image of one domain partition: `left` is the w side (still avoiding
/// a2), `right` the z side, labeled by the case that produced them.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PairImage {
    pub left: Partition,
    pub right: Partition,
    pub case: CaseId,
}

/// Computes the split position for `lam` against the target split (w, z).
///
/// `lam` must be a partition of w + z over `set` avoiding the second member,
/// and the set's least member must be 1 (rescale first otherwise; the public
/// appliers do this automatically).
pub fn split_data(set: &PartSet, lam: &Partition, w: u64, z: u64) -> Result<SplitData> {
    validate_domain(set, lam, w, z)?;
    let parts = lam.parts();
    let n = parts.len();

    // Suffix sums; sfx[j] covers parts[j..] (0-based), sfx[n] = 0.
    let mut sfx = vec![0u64; n + 1];
    for j in (0..n).rev() {
        sfx[j] = sfx[j + 1] + parts[j];
    }
    let i0 = (0..n)
        .rev()
        .find(|&j| sfx[j] >= z)
        .expect("total weight w + z >= z, so position 0 always qualifies");
    let x = z - sfx[i0 + 1];
    let y = parts[i0] - x;
    let t = parts.iter().filter(|&&p| p > 1).count();
    let s = (n - t) as u64;
    Ok(SplitData {
        i: i0 + 1,
        x,
        y,
        t,
        s,
    })
}

/// Decides which of the seven construction cases applies.
///
/// The predicates are evaluated independently and must select exactly one
/// case: more than one match is a transcription bug and panics, zero matches
/// means the split hypotheses do not hold for this (w, z).
pub fn classify_case(set: &PartSet, lam: &Partition, data: &SplitData) -> Result<CaseId> {
    let a3 = set.a3().ok_or_else(|| too_few(set, 3, lam.sum()))?;
    let parts = lam.parts();
    let li = parts[data.i - 1];
    let prev = data.i.checked_sub(2).map(|j| parts[j]);
    // z is recoverable from the split: x plus everything after position i.
    let z = data.x + parts[data.i..].iter().sum::<u64>();
    let (y, s) = (data.y, data.s);

    let predicates = [
        (CaseId::C1, y == 0 && s <= z),
        (CaseId::C2, y == 0 && s > z && s <= a3 + z),
        (CaseId::C3, y == 0 && s > a3 + z),
        (CaseId::C4, y >= 1 && li == a3 && prev == Some(a3)),
        (
            CaseId::C5,
            y >= 1 && li == a3 && prev.is_some_and(|p| p > a3),
        ),
        (CaseId::C6, y >= 1 && li > a3 && y % a3 != 0),
        (CaseId::C7, y >= 1 && li > a3 && y % a3 == 0),
    ];
    let matched: Vec<CaseId> = predicates
        .iter()
        .filter(|(_, p)| *p)
        .map(|(c, _)| *c)
        .collect();
    match matched.as_slice() {
        [one] => Ok(*one),
        [] => Err(Error::Domain(format!(
            "no construction case applies to {lam} at split {data:?}; \
             the w >= a3 + 1 hypothesis is likely violated"
        ))),
        many => panic!("case predicates must be disjoint; {lam} matched {many:?}"),
    }
}

/// Applies the seven-case map. Checks the variant-F hypotheses (gap from the
/// third member, w >= a3 + 1, z >= 2*a2) and rescales sets whose least member
/// exceeds 1.
pub fn f_apply(set: &PartSet, lam: &Partition, w: u64, z: u64) -> Result<PairImage> {
    let prep = Prepared::new(set, w, z, Variant::F)?;
    let scaled = prep.scale_down(lam)?;
    let image = prep.apply(&scaled)?;
    Ok(prep.scale_up(image))
}

/// Applies the redirected-branch variant. Checks the variant-G hypotheses
/// (gap from the fourth member, w >= a3 + 1, z >= 3*a2).
pub fn g_apply(set: &PartSet, lam: &Partition, w: u64, z: u64) -> Result<PairImage> {
    let prep = Prepared::new(set, w, z, Variant::G)?;
    let scaled = prep.scale_down(lam)?;
    let image = prep.apply(&scaled)?;
    Ok(prep.scale_up(image))
}

/// Two or more domain partitions mapping to the same image pair.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct Collision {
    pub left: Partition,
    pub right: Partition,
    pub preimages: Vec<Partition>,
}

/// An image pair that failed re-validation (wrong weight, forbidden part).
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct Violation {
    pub preimage: Partition,
    pub case: CaseId,
    pub problem: String,
}

/// Result of exhaustively applying one variant over the whole domain.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct InjectionReport {
    pub set: String,
    pub w: u64,
    pub z: u64,
    pub variant: Variant,
    pub domain_size: usize,
    /// Distinct images; injectivity means this equals `domain_size`.
    pub image_size: usize,
    pub case_histogram: BTreeMap<CaseId, usize>,
    pub collisions: Vec<Collision>,
    pub violations: Vec<Violation>,
    pub warnings: Vec<String>,
    pub pass: bool,
}

/// Enumerates the whole domain for (w, z), applies the variant to every
/// partition, and checks well-definedness and injectivity.
pub fn verify_injection(
    set: &PartSet,
    w: u64,
    z: u64,
    variant: Variant,
) -> Result<InjectionReport> {
    verify_injection_capped(set, w, z, variant, DEFAULT_ENUMERATION_CAP)
}

/// As [`verify_injection`] with an explicit enumeration cap.
pub fn verify_injection_capped(
    set: &PartSet,
    w: u64,
    z: u64,
    variant: Variant,
    cap: usize,
) -> Result<InjectionReport> {
    let prep = Prepared::new(set, w, z, variant)?;
    let a2 = prep.norm.a2().expect("hypothesis checks require a2");
    let domain =
        enumerate_partitions_capped(&prep.norm.with_excluded(a2)?, prep.w + prep.z, None, cap)?;

    let images: Vec<PairImage> = domain
        .par_iter()
        .map(|lam| prep.apply(lam))
        .collect::<Result<_>>()?;

    let mut case_histogram: BTreeMap<CaseId, usize> = BTreeMap::new();
    let mut by_image: HashMap<(Vec<u64>, Vec<u64>), Vec<usize>> = HashMap::new();
    let mut violations = Vec::new();
    for (idx, image) in images.iter().enumerate() {
        *case_histogram.entry(image.case).or_default() += 1;
        by_image
            .entry((image.left.parts().to_vec(), image.right.parts().to_vec()))
            .or_default()
            .push(idx);
        for problem in revalidate(&prep, image) {
            violations.push(Violation {
                preimage: prep.scale_up_partition(&domain[idx]),
                case: image.case,
                problem,
            });
        }
    }

    let image_size = by_image.len();
    let mut collisions: Vec<Collision> = by_image
        .into_iter()
        .filter(|(_, pre)| pre.len() > 1)
        .map(|(_, pre)| {
            let img = prep.scale_up(images[pre[0]].clone());
            Collision {
                left: img.left,
                right: img.right,
                preimages: pre
                    .iter()
                    .map(|&idx| prep.scale_up_partition(&domain[idx]))
                    .collect(),
            }
        })
        .collect();
    collisions.sort_by(|a, b| (&a.left, &a.right).cmp(&(&b.left, &b.right)));

    let mut warnings = Vec::new();
    let high_case_used =
        case_histogram.contains_key(&CaseId::C6) || case_histogram.contains_key(&CaseId::C7);
    let a4_known = prep.norm.a4().is_some_and(|a4| a4 <= prep.w + prep.z);
    if high_case_used && !a4_known {
        warnings.push(format!(
            "cases 6/7 occurred but {} materializes no fourth member up to {}; \
             their image separation is vacuous here and untested",
            prep.norm.label(),
            prep.w + prep.z,
        ));
    }

    let pass = image_size == domain.len() && violations.is_empty();
    Ok(InjectionReport {
        set: set.label(),
        w,
        z,
        variant,
        domain_size: domain.len(),
        image_size,
        case_histogram,
        collisions,
        violations,
        warnings,
        pass,
    })
}

/// A validated, rescaled context the maps run in.
struct Prepared {
    norm: PartSet,
    factor: u64,
    w: u64,
    z: u64,
    variant: Variant,
    a2: u64,
    a3: u64,
}

impl Prepared {
    fn new(set: &PartSet, w: u64, z: u64, variant: Variant) -> Result<Prepared> {
        if set.excluded().is_some() {
            return Err(Error::Domain(format!(
                "{} carries an exclusion; pass the base set (the maps manage \
                 the no-a2 restriction themselves)",
                set.label()
            )));
        }
        if w == 0 || z == 0 {
            return Err(Error::Domain("both target weights must be positive".into()));
        }
        let (norm, factor, w, z) = normalize(set, w, z)?;
        let a2 = norm.a2().ok_or_else(|| too_few(&norm, 2, w + z))?;
        let a3 = norm.a3().ok_or_else(|| too_few(&norm, 3, w + z))?;

        if w < a3 + 1 {
            return Err(Error::Hypothesis {
                name: "w-at-least-a3-plus-1",
                detail: format!("w = {w} but the third member is {a3}"),
            });
        }
        let (z_floor, z_name): (u64, &'static str) = match variant {
            Variant::F => (2 * a2, "z-at-least-2a2"),
            Variant::G => (3 * a2, "z-at-least-3a2"),
        };
        if z < z_floor {
            return Err(Error::Hypothesis {
                name: z_name,
                detail: format!("z = {z} but the bound is {z_floor}"),
            });
        }

        // Gap hypothesis over everything that can occur as a part, i.e. the
        // members up to w + z. Consecutive differences suffice: the members
        // increase, so any wider difference is a sum of consecutive ones.
        let members = norm.base_parts_up_to(w + z);
        let from = match variant {
            Variant::F => 3,
            Variant::G => 4,
        };
        for (l, pair) in members.windows(2).enumerate().skip(from - 1) {
            if pair[1] - pair[0] < a3 {
                return Err(Error::Hypothesis {
                    name: "gap-condition",
                    detail: format!(
                        "members {} and {} (positions {} and {}) differ by {}, need at least {a3}",
                        pair[0],
                        pair[1],
                        l + 1,
                        l + 2,
                        pair[1] - pair[0],
                    ),
                });
            }
        }

        Ok(Prepared {
            norm,
            factor,
            w,
            z,
            variant,
            a2,
            a3,
        })
    }

    fn scale_down(&self, lam: &Partition) -> Result<Partition> {
        if self.factor == 1 {
            return Ok(lam.clone());
        }
        let parts: Vec<u64> = lam
            .parts()
            .iter()
            .map(|&p| {
                if p % self.factor == 0 {
                    Ok(p / self.factor)
                } else {
                    Err(Error::UnsupportedScaling(format!(
                        "part {p} is not a multiple of the least member {}",
                        self.factor
                    )))
                }
            })
            .collect::<Result<_>>()?;
        Partition::new(parts)
    }

    fn scale_up_partition(&self, p: &Partition) -> Partition {
        if self.factor == 1 {
            return p.clone();
        }
        Partition::new(p.parts().iter().map(|&v| v * self.factor).collect())
            .expect("scaling preserves order")
    }

    fn scale_up(&self, image: PairImage) -> PairImage {
        if self.factor == 1 {
            return image;
        }
        PairImage {
            left: self.scale_up_partition(&image.left),
            right: self.scale_up_partition(&image.right),
            case: image.case,
        }
    }

    /// Runs the map on normalized data. `lam` must already be scaled down.
    fn apply(&self, lam: &Partition) -> Result<PairImage> {
        let data = split_data(&self.norm, lam, self.w, self.z)?;
        let parts = lam.parts();

        if self.variant == Variant::G {
            let redirected = data.y == 0
                && data.s > self.z
                && data.s <= self.z + self.a3
                && data.t >= 1
                && parts[data.t - 1] > self.a3;
            if redirected {
                let last = parts[data.t - 1];
                let left = concat(&parts[..data.t - 1], &[], data.s - self.z + last, 1);
                let right = concat(&[self.a2, self.a2], &[], self.z - 2 * self.a2, 1);
                return Ok(self.finish(lam, left, right, CaseId::Redirected));
            }
        }

        let case = classify_case(&self.norm, lam, &data)?;
        let (a2, a3) = (self.a2, self.a3);
        let SplitData { i, x, y, t, s } = data;
        let (left, right) = match case {
            CaseId::C1 => (parts[..i - 1].to_vec(), parts[i - 1..].to_vec()),
            CaseId::C2 => {
                assert!(
                    t >= 1,
                    "case 2 with no part above 1 contradicts w >= a3 + 1"
                );
                let last = parts[t - 1];
                (
                    concat(&parts[..t - 1], &[], s - self.z + last, 1),
                    vec![1; self.z as usize],
                )
            }
            CaseId::C3 => (
                concat(&parts[..t], &[], s - self.z, 1),
                concat(&[a2], &[], self.z - a2, 1),
            ),
            CaseId::C4 => {
                let moved = x + s;
                (
                    concat(&parts[..i - 2], &[], y + a3, 1),
                    concat(&parts[i..t], &rep(a2, moved / a2), moved % a2, 1),
                )
            }
            CaseId::C5 => (
                concat(&parts[..i - 1], &[], y, 1),
                concat(&parts[i..t], &rep(a2, s / a2), x + s % a2, 1),
            ),
            CaseId::C6 => (
                concat(&parts[..i - 1], &rep(a3, y / a3), y % a3, 1),
                concat(&parts[i..t], &rep(a2, s / a2), x + s % a2, 1),
            ),
            CaseId::C7 => (
                concat(&parts[..i - 1], &rep(a3, y / a3 - 1), a3, 1),
                concat(&parts[i..t], &rep(a2, s / a2), x + s % a2, 1),
            ),
            CaseId::Redirected => unreachable!("redirection is decided before classification"),
        };
        Ok(self.finish(lam, left, right, case))
    }

    /// Asserts the construction invariants; a failure here is a formula
    /// transcription bug, not a data problem.
    fn finish(&self, lam: &Partition, left: Vec<u64>, right: Vec<u64>, case: CaseId) -> PairImage {
        let left = Partition::new(left)
            .unwrap_or_else(|e| panic!("case {case} left image of {lam} not canonical: {e}"));
        let right = Partition::new(right)
            .unwrap_or_else(|e| panic!("case {case} right image of {lam} not canonical: {e}"));
        assert_eq!(
            left.sum(),
            self.w,
            "case {case} left image of {lam} has the wrong weight"
        );
        assert_eq!(
            right.sum(),
            self.z,
            "case {case} right image of {lam} has the wrong weight"
        );
        assert_eq!(
            left.multiplicity(self.a2),
            0,
            "case {case} left image of {lam} contains the excluded member"
        );
        for side in [&left, &right] {
            for &p in side.parts() {
                assert!(
                    self.norm.contains(p),
                    "case {case} image of {lam} uses non-member {p}"
                );
            }
        }
        PairImage { left, right, case }
    }
}

/// Independent re-validation used by the verifier, in normalized scale.
fn revalidate(prep: &Prepared, image: &PairImage) -> Vec<String> {
    let mut problems = Vec::new();
    if image.left.sum() != prep.w {
        problems.push(format!("left weight {} != {}", image.left.sum(), prep.w));
    }
    if image.right.sum() != prep.z {
        problems.push(format!("right weight {} != {}", image.right.sum(), prep.z));
    }
    if image.left.multiplicity(prep.a2) > 0 {
        problems.push(format!("left side contains {}", prep.a2));
    }
    for &p in image.left.parts().iter().chain(image.right.parts()) {
        if !prep.norm.contains(p) {
            problems.push(format!("part {p} is not a member"));
        }
    }
    problems
}

fn validate_domain(set: &PartSet, lam: &Partition, w: u64, z: u64) -> Result<()> {
    if set.nth_smallest(1) != Some(1) {
        return Err(Error::Domain(format!(
            "least member of {} is not 1; rescale before splitting",
            set.label()
        )));
    }
    if w == 0 || z == 0 {
        return Err(Error::Domain("both target weights must be positive".into()));
    }
    if lam.sum() != w + z {
        return Err(Error::Domain(format!(
            "{lam} has weight {}, expected w + z = {}",
            lam.sum(),
            w + z
        )));
    }
    let a2 = set.a2().ok_or_else(|| too_few(set, 2, w + z))?;
    for &p in lam.parts() {
        if p == a2 {
            return Err(Error::Domain(format!(
                "{lam} contains the excluded member {a2}"
            )));
        }
        if !set.base_contains(p) {
            return Err(Error::Domain(format!(
                "part {p} is not a member of {}",
                set.label()
            )));
        }
    }
    Ok(())
}

/// Least-member normalization: divide everything through by a1 when a1 > 1
/// divides every member up to w + z (and w and z themselves).
fn normalize(set: &PartSet, w: u64, z: u64) -> Result<(PartSet, u64, u64, u64)> {
    let total = w
        .checked_add(z)
        .ok_or_else(|| Error::Domain("w + z overflows".into()))?;
    let a1 = set.nth_smallest(1).ok_or_else(|| too_few(set, 1, total))?;
    if a1 == 1 {
        return Ok((set.clone(), 1, w, z));
    }
    let members = set.base_parts_up_to(total);
    if members.is_empty() {
        return Err(too_few(set, 1, total));
    }
    if let Some(&bad) = members.iter().find(|&&p| p % a1 != 0) {
        return Err(Error::UnsupportedScaling(format!(
            "least member {a1} of {} does not divide member {bad}; \
             the mixed-divisibility case is out of scope",
            set.label()
        )));
    }
    if !w.is_multiple_of(a1) || !z.is_multiple_of(a1) {
        return Err(Error::UnsupportedScaling(format!(
            "w = {w} and z = {z} must both be multiples of the least member {a1}"
        )));
    }
    let scaled: Vec<u64> = members.iter().map(|&p| p / a1).collect();
    Ok((PartSet::explicit(scaled)?, a1, w / a1, z / a1))
}

fn too_few(set: &PartSet, need: usize, bound: u64) -> Error {
    Error::TooFewElements {
        set: set.label(),
        have: set.base_parts_up_to(bound).len(),
        need,
        bound,
    }
}

fn rep(v: u64, count: u64) -> Vec<u64> {
    vec![v; count as usize]
}

/// head ++ mid ++ tail_value^tail_count, in that order.
fn concat(head: &[u64], mid: &[u64], tail_count: u64, tail_value: u64) -> Vec<u64> {
    let mut out = Vec::with_capacity(head.len() + mid.len() + tail_count as usize);
    out.extend_from_slice(head);
    out.extend_from_slice(mid);
    out.extend(std::iter::repeat_n(tail_value, tail_count as usize));
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[u64]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    fn set125() -> PartSet {
        "explicit:1,2,5".parse().unwrap()
    }

    #[test]
    fn split_positions_on_worked_examples() {
        let s = set125();
        let d = split_data(&s, &p(&[5, 5]), 6, 4).unwrap();
        assert_eq!(
            d,
            SplitData {
                i: 2,
                x: 4,
                y: 1,
                t: 2,
                s: 0
            }
        );
        let d = split_data(&s, &p(&[5, 1, 1, 1, 1, 1]), 6, 4).unwrap();
        assert_eq!(
            d,
            SplitData {
                i: 3,
                x: 1,
                y: 0,
                t: 1,
                s: 5
            }
        );
        let d = split_data(&s, &p(&[1; 10]), 6, 4).unwrap();
        assert_eq!(
            d,
            SplitData {
                i: 7,
                x: 1,
                y: 0,
                t: 0,
                s: 10
            }
        );
    }

    #[test]
    fn classification_on_worked_examples() {
        let s = set125();
        for (lam, expect) in [
            (p(&[5, 5]), CaseId::C4),
            (p(&[5, 1, 1, 1, 1, 1]), CaseId::C2),
            (p(&[1; 10]), CaseId::C3),
        ] {
            let d = split_data(&s, &lam, 6, 4).unwrap();
            assert_eq!(classify_case(&s, &lam, &d).unwrap(), expect, "{lam}");
        }
    }

    #[test]
    fn images_on_worked_examples() {
        let s = set125();
        let img = f_apply(&s, &p(&[5, 5]), 6, 4).unwrap();
        assert_eq!(
            (img.left.parts(), img.right.parts()),
            (&[1u64; 6][..], &[2u64, 2][..])
        );
        assert_eq!(img.case, CaseId::C4);

        let img = f_apply(&s, &p(&[5, 1, 1, 1, 1, 1]), 6, 4).unwrap();
        assert_eq!(
            (img.left.parts(), img.right.parts()),
            (&[1u64; 6][..], &[1u64; 4][..])
        );

        let img = f_apply(&s, &p(&[1; 10]), 6, 4).unwrap();
        assert_eq!(
            (img.left.parts(), img.right.parts()),
            (&[1u64; 6][..], &[2u64, 1, 1][..])
        );
    }

    #[test]
    fn all_seven_cases_occur_somewhere() {
        // {1,2,5} alone cannot reach cases 5..7 (it has no member above its
        // third), so sweep {1,2,5,10}, whose parts 10 force cuts with y >= 1
        // above a3.
        let s: PartSet = "explicit:1,2,5,10".parse().unwrap();
        let mut seen = std::collections::BTreeSet::new();
        for w in 6..=16u64 {
            for z in 4..=8u64 {
                let report = verify_injection(&s, w, z, Variant::F).unwrap();
                assert!(report.pass, "w={w} z={z}: {report:?}");
                assert!(report.warnings.is_empty(), "fourth member is materialized");
                seen.extend(report.case_histogram.keys().copied());
            }
        }
        for case in [
            CaseId::C1,
            CaseId::C2,
            CaseId::C3,
            CaseId::C4,
            CaseId::C5,
            CaseId::C6,
            CaseId::C7,
        ] {
            assert!(seen.contains(&case), "case {case} never exercised");
        }
    }

    #[test]
    fn hypothesis_gates() {
        let s = set125();
        // w too small.
        let err = verify_injection(&s, 5, 4, Variant::F).unwrap_err();
        assert!(
            matches!(
                err,
                Error::Hypothesis {
                    name: "w-at-least-a3-plus-1",
                    ..
                }
            ),
            "{err}"
        );
        // z too small.
        let err = verify_injection(&s, 6, 3, Variant::F).unwrap_err();
        assert!(
            matches!(
                err,
                Error::Hypothesis {
                    name: "z-at-least-2a2",
                    ..
                }
            ),
            "{err}"
        );
        // z bound is stricter for the redirected variant.
        let err = verify_injection(&s, 6, 5, Variant::G).unwrap_err();
        assert!(
            matches!(
                err,
                Error::Hypothesis {
                    name: "z-at-least-3a2",
                    ..
                }
            ),
            "{err}"
        );
        // Gap violation: squares fail the third-member gap (16 - 9 < 9) ...
        let sq: PartSet = "power:2".parse().unwrap();
        let err = verify_injection(&sq, 17, 12, Variant::F).unwrap_err();
        assert!(
            matches!(
                err,
                Error::Hypothesis {
                    name: "gap-condition",
                    ..
                }
            ),
            "{err}"
        );
        // ... but satisfy the fourth-member gap.
        assert!(verify_injection(&sq, 17, 12, Variant::G).unwrap().pass);
    }

    #[test]
    fn redirected_branch_example() {
        let sq: PartSet = "power:2".parse().unwrap();
        let lam = Partition::from_run_lengths(&[(16, 1), (1, 13)]).unwrap();
        let img = g_apply(&sq, &lam, 17, 12).unwrap();
        assert_eq!(img.case, CaseId::Redirected);
        assert_eq!(img.left.parts(), &[1; 17]);
        assert_eq!(img.right.parts(), &[4, 4, 1, 1, 1, 1]);
    }

    #[test]
    fn g_delegates_when_the_largest_small_part_is_low() {
        // Same shape of partition, but the part above the 1's is only the
        // third member, so the redirect predicate fails and g behaves as f.
        let sq: PartSet = "power:2".parse().unwrap();
        let lam = Partition::from_run_lengths(&[(9, 1), (1, 13)]).unwrap();
        let img = g_apply(&sq, &lam, 10, 12).unwrap();
        assert_ne!(img.case, CaseId::Redirected);
        let data = split_data(&sq, &lam, 10, 12).unwrap();
        assert!(data.y == 0 && data.s > 12 && data.s <= 12 + 9);
    }

    #[test]
    fn variants_agree_outside_the_redirected_branch() {
        let fib = PartSet::fibonacci();
        for w in 4..=14u64 {
            for z in 6..=(20 - w) {
                let f_ok = verify_injection(&fib, w, z, Variant::F);
                assert!(f_ok.is_err(), "fibonacci should fail the third-member gap");
                let report = verify_injection(&fib, w, z, Variant::G).unwrap();
                assert!(report.pass, "w={w} z={z}");
            }
        }
        // Same check pointwise: on a set with no fourth member below the
        // weight, g never redirects and matches f part for part.
        let s = set125();
        for lam in
            crate::enumerate::enumerate_partitions(&s.with_excluded(2).unwrap(), 13, None).unwrap()
        {
            let f = f_apply(&s, &lam, 7, 6).unwrap();
            let g = g_apply(&s, &lam, 7, 6).unwrap();
            assert_eq!((f.left, f.right), (g.left, g.right), "{lam}");
        }
    }

    #[test]
    fn rescaling_reduces_to_the_unit_case() {
        // {2,4,10} is {1,2,5} scaled by 2.
        let doubled: PartSet = "explicit:2,4,10".parse().unwrap();
        let lam = p(&[10, 10]);
        let img = f_apply(&doubled, &lam, 12, 8).unwrap();
        assert_eq!(img.left.parts(), &[2; 6]);
        assert_eq!(img.right.parts(), &[4, 4]);
        assert_eq!(img.case, CaseId::C4);

        let report = verify_injection(&doubled, 12, 8, Variant::F).unwrap();
        assert!(report.pass);
        assert_eq!(report.domain_size, 3);

        // Odd targets cannot be hit by an all-even set.
        let err = verify_injection(&doubled, 13, 8, Variant::F).unwrap_err();
        assert!(matches!(err, Error::UnsupportedScaling(_)));
        // Mixed divisibility is out of scope.
        let mixed: PartSet = "explicit:2,3,9".parse().unwrap();
        let err = verify_injection(&mixed, 12, 8, Variant::F).unwrap_err();
        assert!(matches!(err, Error::UnsupportedScaling(_)));
    }

    #[test]
    fn domain_validation_rejects_bad_partitions() {
        let s = set125();
        // Wrong weight.
        assert!(split_data(&s, &p(&[5, 5]), 6, 5).is_err());
        // Contains the excluded member.
        assert!(split_data(&s, &p(&[5, 2, 1, 1, 1]), 6, 4).is_err());
        // Part outside the set.
        assert!(split_data(&s, &p(&[7, 1, 1, 1]), 6, 4).is_err());
    }

    #[test]
    fn three_member_sets_never_reach_the_upper_cases() {
        // A part above the third member is what cases 5..7 cut; with only
        // three members no such part exists, the upper cases stay vacuous,
        // and the missing-fourth-member flag correspondingly never fires.
        let s = set125();
        for w in 6..=20u64 {
            let report = verify_injection(&s, w, 4, Variant::F).unwrap();
            assert!(report.pass);
            for case in [CaseId::C5, CaseId::C6, CaseId::C7] {
                assert!(!report.case_histogram.contains_key(&case), "w={w}");
            }
            assert!(report.warnings.is_empty());
        }
    }

    #[test]
    fn report_serializes_stably() {
        let report = verify_injection(&set125(), 6, 4, Variant::F).unwrap();
        let json = serde_json::to_value(&report).unwrap();
        assert_eq!(json["set"], "explicit:1,2,5");
        assert_eq!(json["domain_size"], 3);
        assert_eq!(json["image_size"], 3);
        assert_eq!(json["case_histogram"]["2"], 1);
        assert_eq!(json["pass"], true);
        let back: InjectionReport = serde_json::from_value(json).unwrap();
        assert_eq!(back.domain_size, report.domain_size);
    }
}
