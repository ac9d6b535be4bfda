//! Region-occupancy arithmetic for tuples of sets and deterministic
//! brute-force witness search. These searches are the ground-truth oracle
//! for every constructive algorithm in the crate.

use crate::error::FamilyError;
use crate::family::Family;
use crate::set_word::SetWord;

/// Largest supported Venn arity; `2^k` occupancy patterns stay in one word.
pub const MAX_ARITY: usize = 6;

/// Region-pattern mask over the `2^k` Boolean-combination regions of a
/// k-tuple. Bit `p` selects the region whose membership pattern is `p`,
/// where bit `i` of `p` means "inside set `i`" (set 0 is the least
/// significant bit). Pattern 0 is the outermost region, pattern `2^k - 1`
/// the innermost.
pub type RegionMask = u64;

/// All six regions of a 3-Venn except the outermost and innermost.
pub const MIDDLE6: RegionMask = 0b0111_1110;
/// All regions of a 3-Venn except the outermost.
pub const INNER7: RegionMask = 0b1111_1110;
/// All eight regions of a 3-Venn.
pub const ALL8: RegionMask = 0b1111_1111;

pub fn full_mask(k: usize) -> RegionMask {
    if 1 << k == 64 {
        u64::MAX
    } else {
        (1u64 << (1 << k)) - 1
    }
}

/// Exact sizes and least-element representatives of the `2^k` regions of a
/// k-tuple of sets.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RegionVector {
    pub k: usize,
    pub sizes: Vec<usize>,
    pub representatives: Vec<Option<usize>>,
}

impl RegionVector {
    /// Bitmask of non-empty region patterns.
    pub fn occupancy(&self) -> RegionMask {
        self.sizes
            .iter()
            .enumerate()
            .filter(|(_, &s)| s > 0)
            .fold(0u64, |acc, (p, _)| acc | 1 << p)
    }

    /// Number of masked patterns with non-empty regions.
    pub fn count_filled(&self, mask: RegionMask) -> usize {
        (self.occupancy() & mask).count_ones() as usize
    }
}

/// Computes the region vector of `sets` over their common ground.
pub fn region_vector(sets: &[SetWord]) -> Result<RegionVector, FamilyError> {
    let k = sets.len();
    assert!(
        (1..=MAX_ARITY).contains(&k),
        "arity must be between 1 and {MAX_ARITY}"
    );
    let n = sets[0].ground_size();
    for s in sets {
        if s.ground_size() != n {
            return Err(FamilyError::GroundMismatch(n, s.ground_size()));
        }
    }
    let mut sizes = vec![0usize; 1 << k];
    let mut representatives = vec![None; 1 << k];
    for e in 0..n {
        let mut pattern = 0usize;
        for (i, s) in sets.iter().enumerate() {
            if s.contains(e) {
                pattern |= 1 << i;
            }
        }
        sizes[pattern] += 1;
        representatives[pattern].get_or_insert(e);
    }
    Ok(RegionVector {
        k,
        sizes,
        representatives,
    })
}

/// A k-tuple of family members together with their region occupancy.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VennWitness {
    /// Indices into the family, in increasing order.
    pub member_indices: Vec<usize>,
    pub regions: RegionVector,
    /// The patterns that were required by the search and are non-empty.
    pub filled_mask: RegionMask,
}

impl VennWitness {
    pub fn sets(&self, family: &Family) -> Vec<SetWord> {
        self.member_indices
            .iter()
            .map(|&i| family.member(i))
            .collect()
    }

    /// Recomputes the region vector from the named members and checks it
    /// reproduces the stored one exactly.
    pub fn revalidate(&self, family: &Family) -> Result<bool, FamilyError> {
        let recomputed = region_vector(&self.sets(family))?;
        Ok(recomputed == self.regions
            && self.filled_mask & !recomputed.occupancy() == 0)
    }
}

/// Builds a witness for the given member indices, recording which of the
/// masked regions they fill.
pub fn witness_for(family: &Family, indices: Vec<usize>, mask: RegionMask) -> VennWitness {
    let sets: Vec<SetWord> = indices.iter().map(|&i| family.member(i)).collect();
    let regions = region_vector(&sets).expect("family members share a ground");
    let filled = regions.occupancy() & mask;
    VennWitness {
        member_indices: indices,
        regions,
        filled_mask: filled,
    }
}

// Occupancy of the eight 3-Venn patterns as a bitmask, from raw bit words.
fn triple_occupancy(full: u128, a: u128, b: u128, c: u128) -> RegionMask {
    let mut occ = 0u64;
    for p in 0..8u32 {
        let x = if p & 1 != 0 { a } else { full & !a };
        let y = if p & 2 != 0 { b } else { full & !b };
        let z = if p & 4 != 0 { c } else { full & !c };
        if x & y & z != 0 {
            occ |= 1 << p;
        }
    }
    occ
}

/// Exhaustive scan over all member triples `i < j < k` for one whose
/// masked filled count reaches `target`; returns the lexicographically
/// least hit, or `None`.
pub fn find_triple(family: &Family, mask: RegionMask, target: usize) -> Option<VennWitness> {
    assert!(target as u32 <= mask.count_ones(), "target exceeds mask size");
    let n = family.ground_size();
    let full = SetWord::full(n).expect("valid ground").bits();
    let m = family.len();
    let words: Vec<u128> = family.iter().map(|s| s.bits()).collect();
    for i in 0..m {
        for j in i + 1..m {
            for k in j + 1..m {
                let occ = triple_occupancy(full, words[i], words[j], words[k]);
                if (occ & mask).count_ones() as usize >= target {
                    return Some(witness_for(family, vec![i, j, k], mask));
                }
            }
        }
    }
    None
}

/// `find_triple` with the outer loop striped over `threads` workers.
/// Deterministic: every worker reports its least hit and the overall least
/// triple wins, so the result equals the sequential one.
pub fn find_triple_threaded(
    family: &Family,
    mask: RegionMask,
    target: usize,
    threads: usize,
) -> Option<VennWitness> {
    let threads = threads.clamp(1, family.len().max(1));
    if threads == 1 {
        return find_triple(family, mask, target);
    }
    assert!(target as u32 <= mask.count_ones(), "target exceeds mask size");
    let n = family.ground_size();
    let full = SetWord::full(n).expect("valid ground").bits();
    let m = family.len();
    let words: Vec<u128> = family.iter().map(|s| s.bits()).collect();
    let best = std::thread::scope(|scope| {
        let mut handles = Vec::with_capacity(threads);
        for tid in 0..threads {
            let words = &words;
            handles.push(scope.spawn(move || {
                for i in (tid..m).step_by(threads) {
                    for j in i + 1..m {
                        for k in j + 1..m {
                            let occ = triple_occupancy(full, words[i], words[j], words[k]);
                            if (occ & mask).count_ones() as usize >= target {
                                return Some((i, j, k));
                            }
                        }
                    }
                }
                None
            }));
        }
        handles
            .into_iter()
            .filter_map(|h| h.join().expect("worker panicked"))
            .min()
    });
    best.map(|(i, j, k)| witness_for(family, vec![i, j, k], mask))
}

/// Least pair of members with all four regions non-empty.
pub fn find_crossing_pair(family: &Family) -> Option<VennWitness> {
    find_k_venn(family, 2)
}

/// Least k-tuple of members forming a k-Venn diagram (all `2^k` regions
/// non-empty). Immediately absent when `n < 2^k`, as the regions partition
/// the ground set.
pub fn find_k_venn(family: &Family, k: usize) -> Option<VennWitness> {
    assert!((1..=MAX_ARITY).contains(&k), "arity must be 1..={MAX_ARITY}");
    let n = family.ground_size();
    if n < 1 << k {
        return None;
    }
    // Each participating set splits into 2^(k-1) non-empty regions, and so
    // does its complement.
    let least = if k == 0 { 0 } else { 1usize << (k - 1) };
    let candidates: Vec<usize> = (0..family.len())
        .filter(|&i| {
            let len = family.member(i).len();
            len >= least && n - len >= least
        })
        .collect();
    if candidates.len() < k {
        return None;
    }
    let full = full_mask(k);
    let mut choice = vec![0usize; k];
    search_k_venn(family, &candidates, k, 0, 0, &mut choice, full)
}

fn search_k_venn(
    family: &Family,
    candidates: &[usize],
    k: usize,
    depth: usize,
    start: usize,
    choice: &mut Vec<usize>,
    full: RegionMask,
) -> Option<VennWitness> {
    if depth == k {
        let sets: Vec<SetWord> = choice.iter().map(|&i| family.member(i)).collect();
        let rv = region_vector(&sets).ok()?;
        if rv.occupancy() == full {
            return Some(witness_for(family, choice.clone(), full));
        }
        return None;
    }
    for idx in start..candidates.len() {
        choice[depth] = candidates[idx];
        if let Some(w) = search_k_venn(family, candidates, k, depth + 1, idx + 1, choice, full) {
            return Some(w);
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fam(n: usize, sets: &[&[usize]]) -> Family {
        Family::from_element_lists(n, &sets.iter().map(|s| s.to_vec()).collect::<Vec<_>>())
            .unwrap()
    }

    fn set(n: usize, es: &[usize]) -> SetWord {
        SetWord::from_elements(n, es.iter().map(|&e| e - 1)).unwrap()
    }

    #[test]
    fn binary_coordinate_triple_fills_all_eight() {
        // Element m sits in the region of its 3-bit code.
        let a = set(8, &[1, 2, 3, 4]);
        let b = set(8, &[1, 2, 5, 6]);
        let c = set(8, &[1, 3, 5, 7]);
        let rv = region_vector(&[a, b, c]).unwrap();
        assert!(rv.sizes.iter().all(|&s| s == 1));
        assert_eq!(rv.count_filled(ALL8), 8);
    }

    #[test]
    fn all_empty_sets_leave_only_outermost() {
        let e = SetWord::empty(5).unwrap();
        let rv = region_vector(&[e, e, e]).unwrap();
        assert_eq!(rv.sizes[0], 5);
        assert_eq!(rv.sizes[1..].iter().sum::<usize>(), 0);
    }

    #[test]
    fn middle6_and_inner7_read_off() {
        let a = set(6, &[1, 2, 4]);
        let b = set(6, &[2, 3, 5]);
        let c = set(6, &[1, 3, 6]);
        let rv = region_vector(&[a, b, c]).unwrap();
        assert_eq!(rv.count_filled(MIDDLE6), 6);
        assert_eq!(rv.count_filled(INNER7), 6);
        assert_eq!(rv.sizes[7], 0);
    }

    #[test]
    fn identical_sets_fill_at_most_one_inner_region() {
        let a = set(9, &[2, 5]);
        let rv = region_vector(&[a, a, a]).unwrap();
        assert!(rv.count_filled(INNER7) <= 1);
    }

    #[test]
    fn crossing_pair_example() {
        let f = fam(4, &[&[1, 2], &[2, 3]]);
        let w = find_crossing_pair(&f).unwrap();
        assert_eq!(w.member_indices, vec![0, 1]);
        assert_eq!(w.regions.sizes, vec![1, 1, 1, 1]);
        assert!(w.revalidate(&f).unwrap());
    }

    #[test]
    fn no_crossing_pair_on_three_elements() {
        // 4 disjoint non-empty regions need n >= 4.
        let all: Vec<Vec<usize>> = (0..8u32)
            .map(|m| (0..3).filter(|&i| m >> i & 1 == 1).map(|i| i + 1).collect())
            .collect();
        let f = Family::from_element_lists(3, &all).unwrap();
        assert!(find_crossing_pair(&f).is_none());
    }

    #[test]
    fn feasibility_cut_k3_n7() {
        let all: Vec<Vec<usize>> = (0..128u32)
            .map(|m| (0..7).filter(|&i| m >> i & 1 == 1).map(|i| i + 1).collect())
            .collect();
        let f = Family::from_element_lists(7, &all).unwrap();
        assert!(find_k_venn(&f, 3).is_none());
    }

    #[test]
    fn threaded_oracle_matches_sequential() {
        let all: Vec<Vec<usize>> = (0..256u32)
            .map(|m| (0..8).filter(|&i| m >> i & 1 == 1).map(|i| i + 1).collect())
            .collect();
        let f = Family::from_element_lists(8, &all).unwrap();
        let seq = find_triple(&f, ALL8, 8).unwrap();
        for threads in [1, 2, 3, 8] {
            let par = find_triple_threaded(&f, ALL8, 8, threads).unwrap();
            assert_eq!(par.member_indices, seq.member_indices);
        }
    }

    #[test]
    fn find_triple_too_few_members() {
        let f = fam(8, &[&[1], &[2]]);
        assert!(find_triple(&f, MIDDLE6, 1).is_none());
    }
}
