use thiserror::Error;

/// Caller-facing failure conditions.
///
/// Internal invariant violations (a reassembly formula producing the wrong
/// weight, a case classifier matching twice) panic instead of returning one of
/// these: they indicate a transcription bug, not bad input.
#[derive(Debug, Error)]
pub enum Error {
    /// The set mini-grammar string could not be parsed.
    #[error("cannot parse part-set spec `{spec}`: {reason}")]
    ParseSet { spec: String, reason: String },

    /// An exclusion named a value that is not a member of the set.
    #[error("excluded part {part} is not a member of {set}")]
    ExcludedNotMember { part: u64, set: String },

    /// A weight outside the range a table or scan was built for.
    #[error("{what}: n = {n} exceeds the covered bound {bound}")]
    BoundExceeded {
        what: &'static str,
        n: u64,
        bound: u64,
    },

    /// Enumeration would produce more partitions than the configured cap.
    #[error("enumerating partitions of {n} exceeds the cap of {cap}")]
    EnumerationOverflow { n: u64, cap: usize },

    /// A named theorem hypothesis does not hold for the given input.
    #[error("hypothesis `{name}` fails: {detail}")]
    Hypothesis { name: &'static str, detail: String },

    /// Input outside an operation's domain (wrong weight, disallowed part, ...).
    #[error("domain error: {0}")]
    Domain(String),

    /// The set materializes too few elements below the relevant bound.
    #[error("set {set} has only {have} element(s) up to {bound}, need {need}")]
    TooFewElements {
        set: String,
        have: usize,
        need: usize,
        bound: u64,
    },

    /// The least element exceeds 1 and does not divide every other member, so
    /// the rescaling that would reduce to the least-element-1 case is not
    /// available.
    #[error("unsupported scaling: {0}")]
    UnsupportedScaling(String),

    /// A scan that cannot justify its answer within the given bound.
    #[error("inconclusive: {0}")]
    Inconclusive(String),
}

pub type Result<T> = std::result::Result<T, Error>;
