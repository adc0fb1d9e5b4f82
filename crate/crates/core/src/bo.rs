//! The product inequality p(w)·p(z) > p(w+z): pointwise checks, exhaustive
//! region scans with first-class equality tracking, hypothesis validation,
//! and the induction engine that turns a verified base window into a
//! certificate covering every pair above a floor.
//!
//! The induction rests on the splitting identity p(n) = p(n-a2) + p(n | no
//! a2's): once the inequality holds strictly on a window of sums of width
//! 2·a2 (and the splitting maps are injective, which the hypothesis checks
//! guarantee), it propagates to all larger sums.

use crate::count::CountTable;
use crate::decimal;
use crate::error::{Error, Result};
use crate::families::{gap_validator, mary_region, GapVerdict, MaryRegion};
use crate::inject::Variant;
use crate::set::PartSet;
use num_bigint::BigUint;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use std::cmp::Ordering;
use std::fmt;
use std::ops::RangeInclusive;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Relation {
    Greater,
    Equal,
    Less,
}

impl Relation {
    fn from_cmp(ord: Ordering) -> Relation {
        match ord {
            Ordering::Greater => Relation::Greater,
            Ordering::Equal => Relation::Equal,
            Ordering::Less => Relation::Less,
        }
    }
}

impl fmt::Display for Relation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Relation::Greater => "greater",
            Relation::Equal => "equal",
            Relation::Less => "less",
        })
    }
}

/// One checked pair: lhs = p(w)·p(z), rhs = p(w+z).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoOutcome {
    pub w: u64,
    pub z: u64,
    #[serde(with = "decimal")]
    pub lhs: BigUint,
    #[serde(with = "decimal")]
    pub rhs: BigUint,
    pub relation: Relation,
}

/// Exact comparison of p(w)·p(z) against p(w+z).
pub fn bo_check_pair(table: &CountTable, w: u64, z: u64) -> Result<BoOutcome> {
    let lhs = table.get(w)? * table.get(z)?;
    let rhs = table.get(w + z)?.clone();
    let relation = Relation::from_cmp(lhs.cmp(&rhs));
    Ok(BoOutcome {
        w,
        z,
        lhs,
        rhs,
        relation,
    })
}

/// A non-strict pair. The separate equality flag mirrors the two kinds of
/// exception a tightness table distinguishes: ties and outright reversals.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExceptionRecord {
    #[serde(flatten)]
    pub outcome: BoOutcome,
    pub equality: bool,
}

impl ExceptionRecord {
    fn new(outcome: BoOutcome) -> ExceptionRecord {
        debug_assert!(outcome.relation != Relation::Greater);
        let equality = outcome.relation == Relation::Equal;
        ExceptionRecord { outcome, equality }
    }

    pub fn pair(&self) -> (u64, u64) {
        (self.outcome.w, self.outcome.z)
    }

    pub fn sum(&self) -> u64 {
        self.outcome.w + self.outcome.z
    }
}

/// A rectangular (w, z) region, optionally cut by a sum bound and by the
/// w <= z symmetry constraint.
#[derive(Debug, Clone)]
pub struct Region {
    pub w: RangeInclusive<u64>,
    pub z: RangeInclusive<u64>,
    pub sum_max: Option<u64>,
    pub require_w_le_z: bool,
}

impl Region {
    /// The standard scan region: part_min <= w <= z, w+z <= sum_max.
    pub fn triangle(part_min: u64, sum_max: u64) -> Region {
        let hi = sum_max.saturating_sub(part_min);
        Region {
            w: part_min..=hi,
            z: part_min..=hi,
            sum_max: Some(sum_max),
            require_w_le_z: true,
        }
    }
}

/// Every non-strict pair in the region, sorted by (w, z). Rows are scanned
/// in parallel; the table is read-only and the merge preserves order.
pub fn scan_region(table: &CountTable, region: &Region) -> Result<Vec<ExceptionRecord>> {
    let ws: Vec<u64> = region.w.clone().collect();
    let rows: Vec<Vec<ExceptionRecord>> = ws
        .par_iter()
        .map(|&w| {
            let mut lo = *region.z.start();
            if region.require_w_le_z {
                lo = lo.max(w);
            }
            let mut hi = *region.z.end();
            if let Some(s) = region.sum_max {
                hi = hi.min(s.saturating_sub(w));
            }
            let mut row = Vec::new();
            for z in lo..=hi {
                let outcome = bo_check_pair(table, w, z)?;
                if outcome.relation != Relation::Greater {
                    row.push(ExceptionRecord::new(outcome));
                }
            }
            Ok(row)
        })
        .collect::<Result<_>>()?;
    Ok(rows.into_iter().flatten().collect())
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct NamedCheck {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

impl NamedCheck {
    fn new(name: &str, passed: bool, detail: String) -> NamedCheck {
        NamedCheck {
            name: name.into(),
            passed,
            detail,
        }
    }
}

/// How the member-gap condition was established when it passed.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "certified-by", rename_all = "kebab-case")]
pub enum GapCertification {
    /// A family-wide argument: unconditional.
    ClosedForm { argument: String },
    /// Verified only over the members materialized up to `bound`.
    ScanBounded { bound: u64 },
}

/// Results of the variant's structural hypotheses on the part set itself,
/// checked over members materialized up to `scan_bound`: 1 is a usable part,
/// consecutive member gaps from the third (variant f) or fourth (variant g)
/// member on are at least the third member, and for variant f additionally
/// 2·a2 <= a3.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct HypothesisReport {
    pub set: String,
    pub variant: Variant,
    pub scan_bound: u64,
    pub checks: Vec<NamedCheck>,
    /// Present exactly when the gap check passed.
    pub gap: Option<GapCertification>,
    pub passed: bool,
}

pub fn check_hypotheses(set: &PartSet, bound: u64, variant: Variant) -> Result<HypothesisReport> {
    let members = set.parts_up_to(bound);
    if members.len() < 3 {
        return Err(Error::TooFewElements {
            set: set.label(),
            have: members.len(),
            need: 3,
            bound,
        });
    }
    let (a2, a3) = (members[1], members[2]);
    let mut checks = Vec::new();

    checks.push(NamedCheck::new(
        "contains-one",
        members[0] == 1,
        format!("smallest usable part is {}", members[0]),
    ));

    if variant == Variant::F {
        checks.push(NamedCheck::new(
            "two-a2-at-most-a3",
            2 * a2 <= a3,
            format!("2*{a2} = {} vs a3 = {a3}", 2 * a2),
        ));
    }

    // Gap condition: consecutive members from the variant's start index must
    // differ by at least a3 (pairwise gaps telescope, so consecutive gaps
    // suffice). A family's closed-form verdict outranks the bounded scan in
    // both directions; the scan still cross-checks a certified pass.
    let skip = match variant {
        Variant::F => 2,
        Variant::G => 3,
    };
    let scan_violation = members
        .windows(2)
        .skip(skip)
        .find(|pair| pair[1] - pair[0] < a3)
        .map(|pair| (pair[0], pair[1]));
    let (gap_passed, gap_detail, gap) = match gap_validator(set, variant) {
        GapVerdict::CertifiedFail { counterexample } => (false, counterexample, None),
        GapVerdict::CertifiedPass { argument } => {
            assert!(
                scan_violation.is_none(),
                "closed-form gap argument for {} contradicted by scan: {scan_violation:?}",
                set.label()
            );
            let detail = argument.clone();
            (
                true,
                detail,
                Some(GapCertification::ClosedForm { argument }),
            )
        }
        GapVerdict::NotApplicable => match scan_violation {
            Some((lo, hi)) => (
                false,
                format!("members {lo} and {hi} differ by {} < {a3}", hi - lo),
                None,
            ),
            None => (
                true,
                format!("all consecutive gaps in scope are at least {a3} up to {bound}"),
                Some(GapCertification::ScanBounded { bound }),
            ),
        },
    };
    checks.push(NamedCheck::new("gap-condition", gap_passed, gap_detail));

    let passed = checks.iter().all(|c| c.passed);
    Ok(HypothesisReport {
        set: set.label(),
        variant,
        scan_bound: bound,
        checks,
        gap,
        passed,
    })
}

/// The induction data: from a base window of sums [2·floor,
/// 2·(floor+step)-1] verified strict, the splitting identity extends
/// strictness to every w, z >= floor.
///
/// `w_min`/`z_min` are the splitting map's preconditions on its two
/// arguments. The step subtracts `step` from the larger side, so the scheme
/// is legal when floor >= z_min and floor + step >= w_min. Defaults from
/// [`InductionScheme::default_for`] are legal whenever the set satisfies the
/// variant's hypotheses; an unsatisfiable set yields an illegal scheme,
/// which certification flags rather than hides.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct InductionScheme {
    pub floor: u64,
    pub step: u64,
    pub variant: Variant,
    pub w_min: u64,
    pub z_min: u64,
}

impl InductionScheme {
    /// Inclusive range of sums the base verification must cover.
    pub fn window(&self) -> (u64, u64) {
        (2 * self.floor, 2 * (self.floor + self.step) - 1)
    }

    pub fn is_legal(&self) -> bool {
        self.floor >= self.z_min && self.floor + self.step >= self.w_min
    }

    /// The variant's standard scheme: variant f proves pairs down to the
    /// third member, variant g down to the smallest legal floor.
    pub fn default_for(set: &PartSet, variant: Variant) -> Result<InductionScheme> {
        let members = leading_members(set, 3);
        if members.len() < 3 {
            return Err(Error::TooFewElements {
                set: set.label(),
                have: members.len(),
                need: 3,
                bound: members.last().copied().unwrap_or(0),
            });
        }
        let (a2, a3) = (members[1], members[2]);
        let w_min = a3 + 1;
        let (z_min, floor) = match variant {
            Variant::F => (2 * a2, a3),
            Variant::G => {
                let z_min = 3 * a2;
                (z_min, z_min.max((a3 + 1).saturating_sub(a2)))
            }
        };
        Ok(InductionScheme {
            floor,
            step: a2,
            variant,
            w_min,
            z_min,
        })
    }
}

/// First `want` usable members, walking the base sequence past any excluded
/// one. Returns fewer only when the set itself runs out.
fn leading_members(set: &PartSet, want: usize) -> Vec<u64> {
    let mut out = Vec::new();
    for k in 1.. {
        match set.nth_smallest(k) {
            Some(v) => {
                if set.excluded() != Some(v) {
                    out.push(v);
                    if out.len() == want {
                        break;
                    }
                }
            }
            None => break,
        }
    }
    out
}

/// Outcome of checking every pair with w, z >= floor whose sum lies in the
/// scheme's window.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct WindowReport {
    pub window: (u64, u64),
    pub pairs_checked: usize,
    pub outcomes: Vec<BoOutcome>,
    pub all_strict: bool,
}

pub fn verify_base_window(table: &CountTable, scheme: &InductionScheme) -> Result<WindowReport> {
    let (lo, hi) = scheme.window();
    if table.bound() < hi {
        return Err(Error::BoundExceeded {
            what: "base window top",
            n: hi,
            bound: table.bound(),
        });
    }
    let mut outcomes = Vec::new();
    for w in scheme.floor..=hi.saturating_sub(scheme.floor) {
        let z_lo = w.max(lo.saturating_sub(w));
        let z_hi = hi - w;
        for z in z_lo..=z_hi {
            outcomes.push(bo_check_pair(table, w, z)?);
        }
    }
    let all_strict = outcomes.iter().all(|o| o.relation == Relation::Greater);
    Ok(WindowReport {
        window: (lo, hi),
        pairs_checked: outcomes.len(),
        outcomes,
        all_strict,
    })
}

/// Numeric re-verification of certified pairs just beyond the window, up to
/// the table bound: cheap insurance against transcription errors in the
/// scheme. An empty sum range (table no bigger than the window) is a vacuous
/// pass.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SpotCheckReport {
    pub sum_range: (u64, u64),
    pub pairs_checked: usize,
    pub all_strict: bool,
    pub failures: Vec<ExceptionRecord>,
}

const SPOT_CHECK_SUM_SLACK: u64 = 200;

fn run_spot_check(table: &CountTable, scheme: &InductionScheme) -> Result<SpotCheckReport> {
    let (_, window_hi) = scheme.window();
    let lo = window_hi + 1;
    let hi = table.bound().min(window_hi + SPOT_CHECK_SUM_SLACK);
    let mut pairs_checked = 0;
    let mut failures = Vec::new();
    let mut sum = lo;
    while sum <= hi {
        for w in scheme.floor..=sum / 2 {
            let z = sum - w;
            if z < scheme.floor {
                continue;
            }
            let outcome = bo_check_pair(table, w, z)?;
            pairs_checked += 1;
            if outcome.relation != Relation::Greater {
                failures.push(ExceptionRecord::new(outcome));
            }
        }
        sum += 1;
    }
    let all_strict = failures.is_empty();
    Ok(SpotCheckReport {
        sum_range: (lo, hi),
        pairs_checked,
        all_strict,
        failures,
    })
}

/// Certificate that p(w)·p(z) > p(w+z) for every w, z >= floor, or a record
/// of exactly which requirement broke. Produced by [`certify_bo`]; never an
/// error, failures are encoded in `checks` and `valid`.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct BoCertificate {
    pub set: String,
    pub scheme: InductionScheme,
    pub checks: Vec<NamedCheck>,
    pub hypotheses: Option<HypothesisReport>,
    pub window: Option<WindowReport>,
    pub spot_check: Option<SpotCheckReport>,
    pub conclusion: String,
    pub caveats: Vec<String>,
    pub valid: bool,
}

pub fn certify_bo(set: &PartSet, scheme: &InductionScheme, table: &CountTable) -> BoCertificate {
    let mut checks: Vec<NamedCheck> = Vec::new();
    let mut caveats: Vec<String> = Vec::new();
    let mut hypotheses = None;
    let mut window = None;
    let mut spot_check = None;

    let members = leading_members(set, 3);
    checks.push(NamedCheck::new(
        "enough-members",
        members.len() >= 3,
        format!("{} usable members", members.len()),
    ));

    if members.len() >= 3 {
        let (a2, a3) = (members[1], members[2]);
        checks.push(NamedCheck::new(
            "step-is-second-member",
            scheme.step == a2,
            format!("step {} vs a2 = {a2}", scheme.step),
        ));
        let (need_z, z_rule) = match scheme.variant {
            Variant::F => (2 * a2, "2*a2"),
            Variant::G => (3 * a2, "3*a2"),
        };
        checks.push(NamedCheck::new(
            "w-hypothesis-strong-enough",
            scheme.w_min > a3,
            format!("w_min {} vs a3 + 1 = {}", scheme.w_min, a3 + 1),
        ));
        checks.push(NamedCheck::new(
            "z-hypothesis-strong-enough",
            scheme.z_min >= need_z,
            format!("z_min {} vs {z_rule} = {need_z}", scheme.z_min),
        ));
        checks.push(NamedCheck::new(
            "floor-covers-z-hypothesis",
            scheme.floor >= scheme.z_min,
            format!("floor {} vs z_min {}", scheme.floor, scheme.z_min),
        ));
        checks.push(NamedCheck::new(
            "floor-plus-step-covers-w-hypothesis",
            scheme.floor + scheme.step >= scheme.w_min,
            format!(
                "floor + step = {} vs w_min {}",
                scheme.floor + scheme.step,
                scheme.w_min
            ),
        ));

        match check_hypotheses(set, table.bound(), scheme.variant) {
            Ok(report) => {
                checks.push(NamedCheck::new(
                    "set-hypotheses",
                    report.passed,
                    match report.checks.iter().find(|c| !c.passed) {
                        Some(failed) => format!("{} failed: {}", failed.name, failed.detail),
                        None => "all set hypotheses hold".into(),
                    },
                ));
                if let Some(GapCertification::ScanBounded { bound }) = &report.gap {
                    caveats.push(format!(
                        "gap condition verified only over members up to {bound}, \
                         not by a closed-form argument"
                    ));
                }
                hypotheses = Some(report);
            }
            Err(err) => {
                checks.push(NamedCheck::new("set-hypotheses", false, err.to_string()));
            }
        }

        let (_, window_hi) = scheme.window();
        let covered = table.bound() >= window_hi;
        checks.push(NamedCheck::new(
            "window-within-table",
            covered,
            format!("window top {window_hi} vs table bound {}", table.bound()),
        ));
        if covered {
            let report = verify_base_window(table, scheme).expect("bound checked above");
            checks.push(NamedCheck::new(
                "base-window-strict",
                report.all_strict,
                format!(
                    "{} pairs with sums in [{}, {}]",
                    report.pairs_checked, report.window.0, report.window.1
                ),
            ));
            window = Some(report);

            let spot = run_spot_check(table, scheme).expect("spot sums stay within the table");
            checks.push(NamedCheck::new(
                "spot-check-strict",
                spot.all_strict,
                format!(
                    "{} pairs with sums in ({}, {}]",
                    spot.pairs_checked, window_hi, spot.sum_range.1
                ),
            ));
            if spot.pairs_checked == 0 {
                caveats
                    .push("table bound leaves no room for a spot check beyond the window".into());
            }
            spot_check = Some(spot);
        }
    }

    let valid = checks.iter().all(|c| c.passed);
    let conclusion = if valid {
        format!(
            "p(w)p(z) > p(w+z) over {} for all w, z >= {}",
            set.label(),
            scheme.floor
        )
    } else {
        "not certified".into()
    };
    BoCertificate {
        set: set.label(),
        scheme: *scheme,
        checks,
        hypotheses,
        window,
        spot_check,
        conclusion,
        caveats,
        valid,
    }
}

/// Smallest N such that every pair with w, z >= part_min and sum at least
/// N is strict, established by exhaustive scan up to `scan_bound`, with the
/// maximal-sum exception as tightness evidence.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ThresholdResult {
    pub set: String,
    pub part_min: u64,
    pub scan_bound: u64,
    pub threshold: u64,
    pub exceptions: Vec<ExceptionRecord>,
    pub tightness_witness: Option<ExceptionRecord>,
}

/// The caller supplies a `scan_bound` past which no exception can exist
/// (justified externally, e.g. by the family's coverage arguments); the scan
/// then determines the threshold. Inconclusive when the bound admits no
/// pairs at all, or when an exception sits on the boundary sum, since either
/// leaves larger sums in doubt.
pub fn find_threshold(
    set: &PartSet,
    part_min: u64,
    scan_bound: u64,
    table: &CountTable,
) -> Result<ThresholdResult> {
    if scan_bound < 2 * part_min {
        return Err(Error::Inconclusive(format!(
            "scan bound {scan_bound} admits no pairs with both entries at least {part_min}"
        )));
    }
    let exceptions = scan_region(table, &Region::triangle(part_min, scan_bound))?;
    let top = exceptions.iter().map(ExceptionRecord::sum).max();
    let (threshold, tightness_witness) = match top {
        Some(max_sum) => {
            if max_sum == scan_bound {
                return Err(Error::Inconclusive(format!(
                    "an exception with sum {max_sum} sits on the scan boundary; \
                     larger sums are unexplored"
                )));
            }
            let witness = exceptions.iter().find(|e| e.sum() == max_sum).cloned();
            (max_sum + 1, witness)
        }
        // No exception anywhere: the claim already holds from the smallest
        // achievable sum on.
        None => (2 * part_min, None),
    };
    Ok(ThresholdResult {
        set: set.label(),
        part_min,
        scan_bound,
        threshold,
        exceptions,
        tightness_witness,
    })
}

/// Non-strict pairs for powers of m that no coverage argument accounts for:
/// the scan over m <= w <= z, w+z <= sum_max minus the pairs the three
/// closed-form regions absorb. With sum_max = 5m^2 + 4m and m in {2, 3, 4}
/// this reproduces the known exception tables exactly.
pub fn mary_uncovered_exceptions(m: u64, sum_max: u64) -> Vec<ExceptionRecord> {
    let set = PartSet::mary(m).expect("radix checked by caller");
    let table = CountTable::build(&set, sum_max);
    let raw = scan_region(&table, &Region::triangle(m, sum_max)).expect("table covers the region");
    raw.into_iter()
        .filter(|e| mary_region(m, e.outcome.w, e.outcome.z) == MaryRegion::Uncovered)
        .collect()
}

/// One set's worth of evidence for the closing conjecture (every gcd-1 set
/// with at least two members has finitely many exceptional pairs): the
/// largest exceptional sum found under an exhaustive bounded scan. A report,
/// not an assertion.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ConjectureSetReport {
    pub set: String,
    pub part_min: u64,
    pub scan_bound: u64,
    pub pairs_checked: u64,
    pub exception_count: usize,
    pub equality_count: usize,
    pub largest_exception: Option<ExceptionRecord>,
}

/// Scans w, z >= a2 (the second usable member), w+z <= scan_bound.
pub fn conjecture_scan_set(set: &PartSet, scan_bound: u64) -> Result<ConjectureSetReport> {
    let members = leading_members(set, 2);
    if members.len() < 2 {
        return Err(Error::TooFewElements {
            set: set.label(),
            have: members.len(),
            need: 2,
            bound: members.last().copied().unwrap_or(0),
        });
    }
    let part_min = members[1];
    let table = CountTable::build(set, scan_bound);
    let exceptions = scan_region(&table, &Region::triangle(part_min, scan_bound))?;
    // For each w the z side runs over w..=scan_bound-w.
    let mut pairs_checked = 0u64;
    let mut w = part_min;
    while 2 * w <= scan_bound {
        pairs_checked += scan_bound - 2 * w + 1;
        w += 1;
    }
    let top = exceptions.iter().map(ExceptionRecord::sum).max();
    let largest = top
        .and_then(|s| exceptions.iter().find(|e| e.sum() == s))
        .cloned();
    let equality_count = exceptions.iter().filter(|e| e.equality).count();
    Ok(ConjectureSetReport {
        set: set.label(),
        part_min,
        scan_bound,
        pairs_checked,
        exception_count: exceptions.len(),
        equality_count,
        largest_exception: largest,
    })
}
