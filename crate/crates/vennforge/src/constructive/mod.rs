//! The structural results as executable algorithms. Each finder either
//! returns the promised witness, an algorithm-specific object, or reports
//! that the input fails the size hypothesis of the corresponding result.
//!
//! Witnesses always name members of the input family and revalidate by
//! independent region recomputation. A falsification error means a
//! constant-free step of a proof failed at runtime, which can only be an
//! implementation bug.

mod boost;
mod decompose;
mod select;
mod six_inner;

pub use boost::{boost, BoostSpec};
pub use decompose::structural_decompose;
pub use select::{select_disjoint_triple, weakly_separated};
pub use six_inner::{cor1_find, full_venn_find, six_inner_find, six_middle_find, seven_inner_find};

use crate::error::ConstructiveError;
use crate::family::Family;
use crate::thresholds::Thresholds;
use crate::venn::{self, VennWitness, MIDDLE6};

/// Uniform result carrier for the guarded finders.
#[derive(Clone, Debug, PartialEq)]
pub enum Outcome<T = ()> {
    /// A validated Venn witness into the input family.
    Witness(VennWitness),
    /// An algorithm-specific payload (e.g. a decomposition).
    Object(T),
    /// The input violates the size hypothesis of the result and the search
    /// found nothing.
    Shortfall {
        reason: &'static str,
        required: usize,
        actual: usize,
    },
}

impl<T> Outcome<T> {
    pub fn witness(&self) -> Option<&VennWitness> {
        match self {
            Outcome::Witness(w) => Some(w),
            _ => None,
        }
    }

    pub fn is_shortfall(&self) -> bool {
        matches!(self, Outcome::Shortfall { .. })
    }
}

/// Finds a triple with at least four of the six middle regions non-empty,
/// guaranteed once `|F| >= gupta_mult * n`.
///
/// The guarantee has no constructive form here, so this finder is search-backed:
/// an exhaustive scan that must succeed whenever the guard holds. With
/// `force`, the scan runs even below the guard.
pub fn gupta_find(
    family: &Family,
    th: &Thresholds,
    force: bool,
) -> Result<Outcome, ConstructiveError> {
    let required = th.gupta_mult * family.ground_size();
    let actual = family.len();
    if actual < required && !force {
        return Ok(Outcome::Shortfall {
            reason: "four-of-six-middle guarantee needs |F| >= gupta_mult * n",
            required,
            actual,
        });
    }
    match venn::find_triple(family, MIDDLE6, 4) {
        Some(w) => Ok(Outcome::Witness(w)),
        None if actual >= required => Err(ConstructiveError::Falsification(format!(
            "family of size {actual} >= {required} on ground {} has no triple with four middle regions",
            family.ground_size()
        ))),
        None => Ok(Outcome::Shortfall {
            reason: "four-of-six-middle guarantee needs |F| >= gupta_mult * n",
            required,
            actual,
        }),
    }
}
