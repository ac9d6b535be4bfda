//! Lower-bound constructions, feasibility cuts and exhaustive small-n
//! oracles for the maximum size of a family avoiding a k-Venn diagram.

use crate::error::FamilyError;
use crate::family::Family;
use crate::set_word::SetWord;
use crate::vc::{next_combination, sauer_shelah_bound};
use crate::venn;

/// All subsets of `[n]` of size at most `s` (or exactly `s`), ordered by
/// cardinality and lexicographically within each cardinality.
pub fn gen_bounded(n: usize, s: usize, exactly: bool) -> Result<Family, FamilyError> {
    SetWord::empty(n)?;
    if s > n {
        return Err(FamilyError::ElementOutOfRange {
            element: s,
            ground_size: n,
            set_index: 0,
        });
    }
    let sizes = if exactly { s..=s } else { 0..=s };
    let mut members = Vec::new();
    for d in sizes {
        if d == 0 {
            members.push(SetWord::empty(n)?);
            continue;
        }
        let mut combo: Vec<usize> = (0..d).collect();
        loop {
            members.push(SetWord::from_elements(n, combo.iter().copied())?);
            if !next_combination(&mut combo, n) {
                break;
            }
        }
    }
    Family::new(n, members)
}

/// All `C(n, 2)` two-element subsets of `[n]`.
pub fn gen_pairs(n: usize) -> Result<Family, FamilyError> {
    if n < 2 {
        return Err(FamilyError::ElementOutOfRange {
            element: n,
            ground_size: 2,
            set_index: 0,
        });
    }
    gen_bounded(n, 2, true)
}

/// The full power set of `[n]` (desk scale only).
pub fn gen_powerset(n: usize) -> Result<Family, FamilyError> {
    SetWord::empty(n)?;
    assert!(n <= 20, "power set generation is desk scale (n <= 20)");
    let members: Vec<SetWord> = (0..1u128 << n)
        .map(|bits| SetWord::from_bits(n, bits))
        .collect::<Result<_, _>>()?;
    Family::new(n, members)
}

/// True iff the family contains no k-Venn diagram. The search already
/// applies the `n >= 2^k` cut and drops members too small (or too large)
/// to split into `2^(k-1)` non-empty regions.
pub fn verify_no_k_venn(family: &Family, k: usize) -> bool {
    venn::find_k_venn(family, k).is_none()
}

/// Result of an exact or budgeted extremal computation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FkBound {
    pub value: u128,
    /// True when the value is known exact (search completed or the
    /// feasibility cut applies); false when only a best-found lower bound.
    pub exact: bool,
}

// Crossing adjacency over all of P(n): bit j of entry i is set iff the
// sets with bit-codes i and j form a crossing pair.
fn crossing_graph(n: usize) -> Vec<u64> {
    let count = 1usize << n;
    let full = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    let mut adj = vec![0u64; count];
    for i in 0..count {
        for j in i + 1..count {
            let (a, b) = (i as u64, j as u64);
            if a & b != 0 && a & !b != 0 && !a & b & full != 0 && !a & !b & full != 0 {
                adj[i] |= 1 << j;
                adj[j] |= 1 << i;
            }
        }
    }
    adj
}

fn family_from_mask(n: usize, mask: u64) -> Family {
    let members: Vec<SetWord> = (0..1u64 << n)
        .filter(|&i| mask >> i & 1 == 1)
        .map(|i| SetWord::from_bits(n, i as u128).expect("valid ground"))
        .collect();
    Family::new(n, members).expect("distinct bit codes")
}

/// Maximum size of a crossing-pair-free family on `[n]`, with one
/// maximizer. Exhaustive over all subfamilies for `n <= 4`; branch and
/// bound over the crossing graph for `n <= 6`.
pub fn exact_f1(n: usize) -> Result<(usize, Family), FamilyError> {
    SetWord::empty(n)?;
    if n > 6 {
        return Err(FamilyError::GroundTooLarge(n));
    }
    let adj = crossing_graph(n);
    if n <= 4 {
        // Full scan of all 2^(2^n) subfamilies.
        let count = 1u64 << (1 << n);
        let mut best = 0usize;
        let mut best_mask = 0u64;
        for mask in 0..count {
            if (mask.count_ones() as usize) <= best {
                continue;
            }
            let mut ok = true;
            let mut rest = mask;
            while rest != 0 {
                let v = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                if adj[v] & mask != 0 {
                    ok = false;
                    break;
                }
            }
            if ok {
                best = mask.count_ones() as usize;
                best_mask = mask;
            }
        }
        return Ok((best, family_from_mask(n, best_mask)));
    }
    // n = 5 or 6: maximum independent set in the crossing graph.
    let vertices = 1u64 << (1 << n);
    debug_assert!(vertices == 0 || (1 << n) <= 64);
    let all = if (1 << n) == 64 {
        u64::MAX
    } else {
        (1u64 << (1 << n)) - 1
    };
    let mut best = 0usize;
    let mut best_mask = 0u64;
    mis_branch(&adj, all, 0, 0, &mut best, &mut best_mask);
    Ok((best, family_from_mask(n, best_mask)))
}

fn mis_branch(adj: &[u64], allowed: u64, chosen: u64, count: usize, best: &mut usize, best_mask: &mut u64) {
    if count + allowed.count_ones() as usize <= *best {
        return;
    }
    if allowed == 0 {
        if count > *best {
            *best = count;
            *best_mask = chosen;
        }
        return;
    }
    let v = allowed.trailing_zeros() as usize;
    let bit = 1u64 << v;
    // include-first so the first maximum found takes the least vertices
    mis_branch(adj, allowed & !bit & !adj[v], chosen | bit, count + 1, best, best_mask);
    mis_branch(adj, allowed & !bit, chosen, count, best, best_mask);
}

/// Exact maximum size of a family on `[n]` with no k-Venn diagram when the
/// `n < 2^k` feasibility cut applies (the whole power set qualifies);
/// otherwise a budgeted branch-and-bound lower bound, flagged inexact if
/// the node budget runs out. Seeded with the all-small-sets construction,
/// which is k-Venn-free because a participating set needs `2^(k-1)`
/// non-empty private regions.
pub fn exact_fk_small(n: usize, k: usize, budget: u64) -> Result<FkBound, FamilyError> {
    SetWord::empty(n)?;
    assert!((1..=venn::MAX_ARITY).contains(&k));
    if n < 1 << k {
        return Ok(FkBound {
            value: 1u128 << n,
            exact: true,
        });
    }
    if k == 1 && n <= 6 {
        let (value, _) = exact_f1(n)?;
        return Ok(FkBound {
            value: value as u128,
            exact: true,
        });
    }
    let seed = sauer_shelah_bound(n, (1 << (k - 1)) - 1);
    if n > 16 {
        return Ok(FkBound {
            value: seed,
            exact: false,
        });
    }
    let candidates: Vec<SetWord> = (0..1u128 << n)
        .map(|bits| SetWord::from_bits(n, bits))
        .collect::<Result<_, _>>()?;
    let mut state = FkSearch {
        candidates,
        k,
        best: seed as usize,
        nodes: 0,
        budget,
        exhausted: false,
    };
    let mut chosen = Vec::new();
    state.extend(0, &mut chosen);
    Ok(FkBound {
        value: state.best as u128,
        exact: !state.exhausted,
    })
}

struct FkSearch {
    candidates: Vec<SetWord>,
    k: usize,
    best: usize,
    nodes: u64,
    budget: u64,
    exhausted: bool,
}

impl FkSearch {
    fn extend(&mut self, start: usize, chosen: &mut Vec<SetWord>) {
        self.nodes += 1;
        if self.nodes > self.budget {
            self.exhausted = true;
            return;
        }
        if chosen.len() > self.best {
            self.best = chosen.len();
        }
        if chosen.len() + (self.candidates.len() - start) <= self.best {
            return;
        }
        for i in start..self.candidates.len() {
            if self.exhausted {
                return;
            }
            let s = self.candidates[i];
            chosen.push(s);
            if !self.creates_k_venn(chosen) {
                self.extend(i + 1, chosen);
            }
            chosen.pop();
        }
    }

    // The newly added set is the last entry; only tuples through it need
    // rechecking.
    fn creates_k_venn(&self, chosen: &[SetWord]) -> bool {
        if chosen.len() < self.k {
            return false;
        }
        let last = chosen.len() - 1;
        let mut combo: Vec<usize> = (0..self.k - 1).collect();
        loop {
            let mut sets: Vec<SetWord> = combo.iter().map(|&i| chosen[i]).collect();
            sets.push(chosen[last]);
            let rv = venn::region_vector(&sets).expect("common ground");
            if rv.occupancy() == venn::full_mask(self.k) {
                return true;
            }
            if self.k == 1 || !next_combination(&mut combo, last) {
                return false;
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gen_bounded_examples() {
        let f = gen_bounded(4, 1, false).unwrap();
        assert_eq!(f.len(), 5);
        assert!(f.member(0).is_empty());
        assert_eq!(gen_bounded(10, 3, false).unwrap().len(), 176);
        assert_eq!(gen_bounded(9, 3, true).unwrap().len(), 84);
    }

    #[test]
    fn gen_bounded_range_check() {
        assert!(gen_bounded(3, 4, false).is_err());
    }

    #[test]
    fn gen_pairs_counts() {
        assert_eq!(gen_pairs(4).unwrap().len(), 6);
        assert_eq!(gen_pairs(2).unwrap().len(), 1);
        assert_eq!(gen_pairs(15).unwrap().len(), 105);
        assert!(gen_pairs(1).is_err());
    }

    #[test]
    fn bounded_family_has_no_3venn() {
        assert!(verify_no_k_venn(&gen_bounded(12, 3, false).unwrap(), 3));
    }

    #[test]
    fn powerset_of_8_has_3venn() {
        assert!(!verify_no_k_venn(&gen_powerset(8).unwrap(), 3));
    }

    #[test]
    fn f1_tiny_values() {
        assert_eq!(exact_f1(2).unwrap().0, 4);
        assert_eq!(exact_f1(3).unwrap().0, 8);
    }

    #[test]
    fn fk_feasibility_cut() {
        let r = exact_fk_small(7, 3, 1).unwrap();
        assert_eq!(r.value, 128);
        assert!(r.exact);
        let r = exact_fk_small(3, 2, 1).unwrap();
        assert_eq!(r.value, 8);
        assert!(r.exact);
    }

    #[test]
    fn fk_budgeted_bound_at_least_seed() {
        let r = exact_fk_small(8, 3, 10_000).unwrap();
        assert!(r.value >= sauer_shelah_bound(8, 3));
    }
}
