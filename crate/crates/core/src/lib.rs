//! Partition counting over restricted part sets and the machinery around
//! the product inequality p(w)·p(z) > p(w+z) for such counts: exact tables,
//! enumeration, maxima of the count extended over partitions, explicit
//! splitting injections with case-by-case verification, exception scans,
//! thresholds, and induction-based certificates.
//!
//! Entry points: [`PartSet`] names a part set (built-in families or an
//! explicit list, optionally with one member excluded), [`CountTable`]
//! holds exact counts up to a bound, and the [`bo`], [`inject`],
//! [`families`], and [`maxval`] modules build on those.

pub mod bo;
pub mod count;
pub mod decimal;
pub mod enumerate;
pub mod error;
pub mod families;
pub mod inject;
pub mod maxval;
pub mod partition;
pub mod set;

pub use count::CountTable;
pub use error::{Error, Result};
pub use partition::Partition;
pub use set::{PartSet, SetKind};
