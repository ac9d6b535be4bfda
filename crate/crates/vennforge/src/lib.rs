//! Set families over a finite ground set, their Venn-diagram region
//! structure, VC dimension, extremal searches, and constructive finders for
//! triples filling prescribed regions.
//!
//! Sets are bitset words over grounds of up to 128 elements; elements are
//! 1-based in all text formats and reports, 0-based internally. Witnesses
//! name family members by index and revalidate by recomputing regions from
//! scratch.

pub mod constructive;
pub mod error;
pub mod extremal;
pub mod family;
pub mod io;
pub mod pairlike;
pub mod set_word;
pub mod thresholds;
pub mod vc;
pub mod venn;

pub use error::{ConstructiveError, FamilyError, ParseError};
pub use family::Family;
pub use set_word::{SetWord, MAX_GROUND};
pub use thresholds::Thresholds;
pub use venn::{RegionMask, RegionVector, VennWitness, ALL8, INNER7, MAX_ARITY, MIDDLE6};
