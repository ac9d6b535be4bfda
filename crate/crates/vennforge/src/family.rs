use std::collections::HashMap;

use crate::error::FamilyError;
use crate::set_word::SetWord;

/// An ordered, duplicate-free collection of subsets of a common ground set.
///
/// Member order is preserved from construction and every witness refers to
/// members by index, so reports are reproducible.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Family {
    ground_size: usize,
    members: Vec<SetWord>,
}

impl Family {
    /// Builds a family from explicit members, rejecting duplicates.
    pub fn new(
        ground_size: usize,
        members: impl IntoIterator<Item = SetWord>,
    ) -> Result<Self, FamilyError> {
        // validate the ground even for the empty family
        SetWord::empty(ground_size)?;
        let mut seen: HashMap<SetWord, usize> = HashMap::new();
        let mut out = Vec::new();
        for (i, m) in members.into_iter().enumerate() {
            if m.ground_size() != ground_size {
                return Err(FamilyError::GroundMismatch(ground_size, m.ground_size()));
            }
            if let Some(&first) = seen.get(&m) {
                return Err(FamilyError::DuplicateSet { first, second: i });
            }
            seen.insert(m, i);
            out.push(m);
        }
        Ok(Family {
            ground_size,
            members: out,
        })
    }

    /// Builds a family from 1-based element lists.
    pub fn from_element_lists(
        ground_size: usize,
        sets: &[Vec<usize>],
    ) -> Result<Self, FamilyError> {
        SetWord::empty(ground_size)?;
        let mut members = Vec::with_capacity(sets.len());
        for (i, set) in sets.iter().enumerate() {
            for &e in set {
                if e < 1 || e > ground_size {
                    return Err(FamilyError::ElementOutOfRange {
                        element: e,
                        ground_size,
                        set_index: i,
                    });
                }
            }
            members.push(SetWord::from_elements(
                ground_size,
                set.iter().map(|&e| e - 1),
            )?);
        }
        Family::new(ground_size, members)
    }

    pub fn empty(ground_size: usize) -> Result<Self, FamilyError> {
        Family::new(ground_size, [])
    }

    pub fn ground_size(&self) -> usize {
        self.ground_size
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn members(&self) -> &[SetWord] {
        &self.members
    }

    pub fn member(&self, index: usize) -> SetWord {
        self.members[index]
    }

    pub fn iter(&self) -> impl Iterator<Item = &SetWord> {
        self.members.iter()
    }

    pub fn contains(&self, set: &SetWord) -> bool {
        self.members.contains(set)
    }

    pub fn position(&self, set: &SetWord) -> Option<usize> {
        self.members.iter().position(|m| m == set)
    }

    /// Member-wise complement. An involution; member `i` of the output is
    /// `[n] \ member i` of the input.
    pub fn complement(&self) -> Family {
        Family {
            ground_size: self.ground_size,
            members: self.members.iter().map(|m| m.complement()).collect(),
        }
    }

    /// Keeps the members at the given indices, in index order.
    pub fn subfamily(&self, indices: &[usize]) -> Family {
        Family {
            ground_size: self.ground_size,
            members: indices.iter().map(|&i| self.members[i]).collect(),
        }
    }

    /// Keeps members satisfying the predicate; returns the subfamily and
    /// the original index of each kept member.
    pub fn filter(&self, mut keep: impl FnMut(&SetWord) -> bool) -> (Family, Vec<usize>) {
        let mut members = Vec::new();
        let mut indices = Vec::new();
        for (i, m) in self.members.iter().enumerate() {
            if keep(m) {
                members.push(*m);
                indices.push(i);
            }
        }
        (
            Family {
                ground_size: self.ground_size,
                members,
            },
            indices,
        )
    }

    /// Projects (traces) the family onto `target`: members become
    /// `M ∩ target`, duplicates merged, ground elements relabeled to
    /// `1..|target|` preserving order. The index map sends each original
    /// member to its projected representative.
    pub fn project(&self, target: &SetWord) -> Result<(Family, Vec<usize>), FamilyError> {
        if target.ground_size() != self.ground_size {
            return Err(FamilyError::GroundMismatch(
                self.ground_size,
                target.ground_size(),
            ));
        }
        if target.is_empty() {
            return Err(FamilyError::EmptyProjection);
        }
        let positions: Vec<usize> = target.elements().collect();
        let new_ground = positions.len();
        let mut seen: HashMap<SetWord, usize> = HashMap::new();
        let mut members = Vec::new();
        let mut index_map = Vec::with_capacity(self.members.len());
        for m in &self.members {
            let trace = SetWord::from_elements(
                new_ground,
                positions
                    .iter()
                    .enumerate()
                    .filter(|(_, &p)| m.contains(p))
                    .map(|(j, _)| j),
            )?;
            let idx = *seen.entry(trace).or_insert_with(|| {
                members.push(trace);
                members.len() - 1
            });
            index_map.push(idx);
        }
        Ok((
            Family {
                ground_size: new_ground,
                members,
            },
            index_map,
        ))
    }

    /// Lifts a set over the projected ground of `project(target)` back to
    /// this family's ground, mapping relabeled element `j` to the `j`-th
    /// element of `target`.
    pub fn embed(set: &SetWord, target: &SetWord) -> SetWord {
        let positions: Vec<usize> = target.elements().collect();
        debug_assert_eq!(set.ground_size(), positions.len());
        SetWord::from_elements(target.ground_size(), set.elements().map(|j| positions[j]))
            .expect("positions lie in the target ground")
    }

    /// Transposes the incidence matrix: one output member per ground
    /// element `x`, equal to `{i : x ∈ member i}`, duplicates merged.
    pub fn transpose(&self) -> Result<Family, FamilyError> {
        if self.members.is_empty() {
            return Err(FamilyError::EmptyFamily);
        }
        let new_ground = self.members.len();
        let mut seen: HashMap<SetWord, ()> = HashMap::new();
        let mut members = Vec::new();
        for x in 0..self.ground_size {
            let row = SetWord::from_elements(
                new_ground,
                self.members
                    .iter()
                    .enumerate()
                    .filter(|(_, m)| m.contains(x))
                    .map(|(i, _)| i),
            )?;
            if seen.insert(row, ()).is_none() {
                members.push(row);
            }
        }
        Ok(Family {
            ground_size: new_ground,
            members,
        })
    }
}
