use crate::error::FamilyError;

/// Largest supported ground-set size. One `u128` of membership bits is
/// ample for desk-scale searches.
pub const MAX_GROUND: usize = 128;

/// A subset of the ground set `[n]`, stored as a fixed-width bit vector.
///
/// Elements are 0-based internally; every external format is 1-based to
/// match the usual convention for `[n]`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SetWord {
    ground_size: usize,
    bits: u128,
}

impl SetWord {
    /// The empty subset of `[n]`.
    pub fn empty(ground_size: usize) -> Result<Self, FamilyError> {
        if ground_size == 0 {
            return Err(FamilyError::EmptyGround);
        }
        if ground_size > MAX_GROUND {
            return Err(FamilyError::GroundTooLarge(ground_size));
        }
        Ok(SetWord {
            ground_size,
            bits: 0,
        })
    }

    /// The full ground set `[n]`.
    pub fn full(ground_size: usize) -> Result<Self, FamilyError> {
        let mut w = Self::empty(ground_size)?;
        w.bits = if ground_size == 128 {
            u128::MAX
        } else {
            (1u128 << ground_size) - 1
        };
        Ok(w)
    }

    /// Builds a set from raw bits, masking off anything past the ground.
    pub fn from_bits(ground_size: usize, bits: u128) -> Result<Self, FamilyError> {
        let mut w = Self::full(ground_size)?;
        w.bits &= bits;
        Ok(w)
    }

    /// Builds a set from 0-based elements.
    pub fn from_elements(
        ground_size: usize,
        elements: impl IntoIterator<Item = usize>,
    ) -> Result<Self, FamilyError> {
        let mut w = Self::empty(ground_size)?;
        for e in elements {
            if e >= ground_size {
                return Err(FamilyError::ElementOutOfRange {
                    element: e + 1,
                    ground_size,
                    set_index: 0,
                });
            }
            w.bits |= 1u128 << e;
        }
        Ok(w)
    }

    pub fn ground_size(&self) -> usize {
        self.ground_size
    }

    pub fn bits(&self) -> u128 {
        self.bits
    }

    pub fn contains(&self, element: usize) -> bool {
        element < self.ground_size && self.bits >> element & 1 == 1
    }

    pub fn len(&self) -> usize {
        self.bits.count_ones() as usize
    }

    pub fn is_empty(&self) -> bool {
        self.bits == 0
    }

    /// 0-based elements in increasing order.
    pub fn elements(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.ground_size).filter(move |&e| self.contains(e))
    }

    /// The least element, if any.
    pub fn min_element(&self) -> Option<usize> {
        if self.bits == 0 {
            None
        } else {
            Some(self.bits.trailing_zeros() as usize)
        }
    }

    pub fn complement(&self) -> SetWord {
        let full = Self::full(self.ground_size).expect("valid ground");
        SetWord {
            ground_size: self.ground_size,
            bits: full.bits & !self.bits,
        }
    }

    pub fn union(&self, other: &SetWord) -> SetWord {
        debug_assert_eq!(self.ground_size, other.ground_size);
        SetWord {
            ground_size: self.ground_size,
            bits: self.bits | other.bits,
        }
    }

    pub fn intersection(&self, other: &SetWord) -> SetWord {
        debug_assert_eq!(self.ground_size, other.ground_size);
        SetWord {
            ground_size: self.ground_size,
            bits: self.bits & other.bits,
        }
    }

    pub fn difference(&self, other: &SetWord) -> SetWord {
        debug_assert_eq!(self.ground_size, other.ground_size);
        SetWord {
            ground_size: self.ground_size,
            bits: self.bits & !other.bits,
        }
    }

    pub fn is_subset_of(&self, other: &SetWord) -> bool {
        self.bits & !other.bits == 0
    }

    pub fn is_disjoint_from(&self, other: &SetWord) -> bool {
        self.bits & other.bits == 0
    }

    pub fn insert(&self, element: usize) -> SetWord {
        debug_assert!(element < self.ground_size);
        SetWord {
            ground_size: self.ground_size,
            bits: self.bits | 1u128 << element,
        }
    }

    pub fn remove(&self, element: usize) -> SetWord {
        SetWord {
            ground_size: self.ground_size,
            bits: self.bits & !(1u128 << element),
        }
    }

    /// Reinterprets this set over a different ground size. Fails the
    /// no-stray-bits invariant check if bits beyond the new ground are set.
    pub fn with_ground(&self, ground_size: usize) -> Result<SetWord, FamilyError> {
        Self::from_bits(ground_size, self.bits).and_then(|w| {
            if w.bits == self.bits {
                Ok(w)
            } else {
                Err(FamilyError::ElementOutOfRange {
                    element: (127 - self.bits.leading_zeros() as usize) + 1,
                    ground_size,
                    set_index: 0,
                })
            }
        })
    }
}

impl std::fmt::Debug for SetWord {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{{")?;
        let mut first = true;
        for e in self.elements() {
            if !first {
                write!(f, ",")?;
            }
            first = false;
            write!(f, "{}", e + 1)?;
        }
        write!(f, "}}/{}", self.ground_size)
    }
}
