//! Shattering, VC dimension, the Sauer–Shelah bound, dual VC dimension and
//! the M_k forbidden-configuration view. The three routes to the dual
//! quantity (transpose VC, k-Venn search, M_k containment) are used as
//! mutual oracles in the test suites.

use std::collections::HashSet;

use crate::family::Family;
use crate::set_word::SetWord;
use crate::venn;

/// Result of a VC-dimension computation.
///
/// Conventions: the VC dimension of the empty family is -1 (no set, not
/// even the empty one, is shattered); for a non-empty family it is >= 0.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VcReport {
    pub vc: i32,
    /// Lexicographically least shattered set of maximum cardinality.
    pub witness_shattered: Option<SetWord>,
    /// The Sauer–Shelah bound at this VC dimension (0 for the empty family).
    pub sauer_bound: u128,
}

/// True iff every one of the `2^|S|` traces on `S` is realized by some
/// member.
pub fn shatters(family: &Family, s: &SetWord) -> bool {
    let required = 1u64 << s.len();
    if (family.len() as u64) < required {
        return false;
    }
    let positions: Vec<usize> = s.elements().collect();
    let mut seen: HashSet<u64> = HashSet::new();
    for m in family.iter() {
        let mut trace = 0u64;
        for (i, &p) in positions.iter().enumerate() {
            if m.contains(p) {
                trace |= 1 << i;
            }
        }
        seen.insert(trace);
        if seen.len() as u64 == required {
            return true;
        }
    }
    false
}

/// VC dimension with a lexicographically least maximum-cardinality witness.
///
/// Subsets of a shattered set are shattered, so the search scans candidate
/// cardinalities upward and stops at the first with no shattered set. No
/// set larger than `log2 |F|` can be shattered.
pub fn vc_dim(family: &Family) -> VcReport {
    if family.is_empty() {
        return VcReport {
            vc: -1,
            witness_shattered: None,
            sauer_bound: 0,
        };
    }
    let n = family.ground_size();
    let cap = usize::min(n, (usize::BITS - 1 - family.len().leading_zeros()) as usize);
    let mut best = SetWord::empty(n).expect("valid ground");
    let mut vc = 0usize;
    for d in 1..=cap {
        match first_shattered_of_size(family, d) {
            Some(w) => {
                vc = d;
                best = w;
            }
            None => break,
        }
    }
    VcReport {
        vc: vc as i32,
        witness_shattered: Some(best),
        sauer_bound: sauer_shelah_bound(n, vc),
    }
}

/// Least (by element tuple) shattered set of exactly `d` elements.
fn first_shattered_of_size(family: &Family, d: usize) -> Option<SetWord> {
    let n = family.ground_size();
    let mut combo: Vec<usize> = (0..d).collect();
    loop {
        let s = SetWord::from_elements(n, combo.iter().copied()).expect("in range");
        if shatters(family, &s) {
            return Some(s);
        }
        if !next_combination(&mut combo, n) {
            return None;
        }
    }
}

/// Advances `combo` to the next d-combination of `0..n` in lexicographic
/// order; false once exhausted.
pub(crate) fn next_combination(combo: &mut [usize], n: usize) -> bool {
    let d = combo.len();
    if d == 0 {
        return false;
    }
    let mut i = d;
    while i > 0 {
        i -= 1;
        if combo[i] < n - d + i {
            combo[i] += 1;
            for j in i + 1..d {
                combo[j] = combo[j - 1] + 1;
            }
            return true;
        }
    }
    false
}

/// `sum_{k=0..d} C(n, k)` in exact integer arithmetic.
///
/// Panics if `d > n`.
pub fn sauer_shelah_bound(n: usize, d: usize) -> u128 {
    assert!(d <= n, "d must satisfy 0 <= d <= n");
    let mut total: u128 = 0;
    let mut binom: u128 = 1;
    for k in 0..=d {
        total += binom;
        binom = binom * (n - k) as u128 / (k + 1) as u128;
    }
    total
}

/// Largest k such that some k members form a k-Venn diagram; -1 for the
/// empty family, 0 for a non-empty family without a 1-Venn member.
///
/// A k-Venn restricted to k-1 of its sets is a (k-1)-Venn, so the search
/// scans k upward, cut off by the `n >= 2^k` feasibility bound.
pub fn dual_vc_dim(family: &Family) -> i32 {
    if family.is_empty() {
        return -1;
    }
    let n = family.ground_size();
    let mut best = 0i32;
    for k in 1..=venn::MAX_ARITY {
        if n < 1 << k || family.len() < k {
            break;
        }
        if venn::find_k_venn(family, k).is_none() {
            break;
        }
        best = k as i32;
    }
    best
}

/// True iff the incidence matrix contains a row-and-column permutation of
/// M_k: some k members whose traces on some `2^k` elements realize all
/// binary patterns. This is exactly the k-Venn condition, so the check is
/// done directly on member tuples rather than by generic submatrix search.
pub fn contains_config_mk(family: &Family, k: usize) -> bool {
    assert!(k >= 1, "k must be at least 1");
    if k > venn::MAX_ARITY {
        return false;
    }
    venn::find_k_venn(family, k).is_some()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn powerset(n: usize) -> Family {
        let sets: Vec<SetWord> = (0..1u128 << n)
            .map(|bits| SetWord::from_bits(n, bits).unwrap())
            .collect();
        Family::new(n, sets).unwrap()
    }

    fn fam(n: usize, sets: &[&[usize]]) -> Family {
        Family::from_element_lists(n, &sets.iter().map(|s| s.to_vec()).collect::<Vec<_>>())
            .unwrap()
    }

    #[test]
    fn shatters_full_power_set_of_pair() {
        let f = fam(2, &[&[], &[1], &[2], &[1, 2]]);
        let s = SetWord::full(2).unwrap();
        assert!(shatters(&f, &s));
    }

    #[test]
    fn empty_set_always_shattered() {
        let f = fam(4, &[&[2]]);
        assert!(shatters(&f, &SetWord::empty(4).unwrap()));
    }

    #[test]
    fn singletons_do_not_shatter_a_pair() {
        let f = fam(4, &[&[1], &[2], &[3], &[4]]);
        let s = SetWord::from_elements(4, [0, 1]).unwrap();
        assert!(!shatters(&f, &s));
    }

    #[test]
    fn vc_of_power_set() {
        assert_eq!(vc_dim(&powerset(3)).vc, 3);
    }

    #[test]
    fn vc_of_singletons_plus_empty() {
        let f = fam(5, &[&[], &[1], &[2], &[3], &[4], &[5]]);
        let r = vc_dim(&f);
        assert_eq!(r.vc, 1);
        assert_eq!(
            r.witness_shattered.unwrap(),
            SetWord::from_elements(5, [0]).unwrap()
        );
    }

    #[test]
    fn vc_of_empty_family() {
        let f = Family::empty(4).unwrap();
        let r = vc_dim(&f);
        assert_eq!(r.vc, -1);
        assert_eq!(r.witness_shattered, None);
        assert_eq!(r.sauer_bound, 0);
    }

    #[test]
    fn sauer_bound_values() {
        assert_eq!(sauer_shelah_bound(10, 3), 176);
        assert_eq!(sauer_shelah_bound(10, 10), 1024);
        assert_eq!(sauer_shelah_bound(7, 0), 1);
    }

    #[test]
    #[should_panic]
    fn sauer_bound_rejects_d_above_n() {
        sauer_shelah_bound(3, 4);
    }

    #[test]
    fn dual_vc_of_empty_set_family() {
        let f = fam(3, &[&[]]);
        assert_eq!(dual_vc_dim(&f), 0);
    }

    #[test]
    fn dual_vc_of_crossing_pair() {
        let f = fam(4, &[&[1, 2], &[2, 3]]);
        assert_eq!(dual_vc_dim(&f), 2);
    }

    #[test]
    fn dual_vc_of_empty_family() {
        assert_eq!(dual_vc_dim(&Family::empty(5).unwrap()), -1);
    }

    #[test]
    fn mk_config_matches_crossing_pair() {
        let f = fam(4, &[&[1, 2], &[2, 3]]);
        assert!(contains_config_mk(&f, 2));
    }

    #[test]
    fn mk_config_infeasible_on_small_ground() {
        // 8 disjoint non-empty regions need n >= 8.
        assert!(!contains_config_mk(&powerset(7), 3));
    }
}
