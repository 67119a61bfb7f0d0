//! The explicit constructions behind the counting arguments, each checked
//! against the properties its argument relies on.

mod cover;
mod injection;
mod shift_family;
mod witnesses;

pub use cover::{lemma3_cover, CoverCase, CoverSetReport};
pub use injection::{lemma1_injection, strictness_witness, InjectionReport};
pub use shift_family::{lemma2_family, ShiftFamilyReport, ShiftMode, DEFAULT_MAX_TUPLES};
pub use witnesses::{proposition_witnesses, PropositionWitnesses};

use crate::error::{Error, Result};
use crate::partition::Partition;

/// Nondecreasing rearrangement of `x`, as a partition of its sum.
pub fn sort_tuple(x: &[usize]) -> Result<Partition> {
    if x.contains(&0) {
        return Err(Error::Precondition(format!("tuple has a zero entry: {x:?}")));
    }
    Partition::from_unsorted(x.to_vec())
}
