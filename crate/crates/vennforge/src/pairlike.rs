//! Verification of pair-like structure: every member of the structured
//! part must be a disjoint union of two basis parts, and each such pairing
//! must be supported by at least `t` pairwise-disjoint partner parts on
//! each side.

use std::collections::HashSet;

use crate::family::Family;
use crate::set_word::SetWord;

/// Partition of a source family into a junk part and a pair-like part
/// with its basis and per-member component pairs.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PairLikeDecomposition {
    /// Source-family indices of the unstructured part (F1).
    pub junk: Vec<usize>,
    /// Source-family indices of the pair-like part (F2).
    pub structured: Vec<usize>,
    /// The basis parts.
    pub basis: Family,
    /// For each structured member, the basis-index pair whose disjoint
    /// union it equals (parallel to `structured`).
    pub components: Vec<(usize, usize)>,
}

/// Per-member partner evidence produced by `verify`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MemberCertificate {
    /// Index of the member within the verified family.
    pub member: usize,
    /// The certified decomposition (u, v), u < v.
    pub components: (usize, usize),
    /// At least t basis indices w with part_u ∪ part_w in the family, all
    /// parts pairwise disjoint and disjoint from parts u and v.
    pub partners_of_first: Vec<usize>,
    /// Symmetric list for the v side.
    pub partners_of_second: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PartnerCertificate {
    pub t: usize,
    pub members: Vec<MemberCertificate>,
}

/// Why verification failed, pointing at the first bad object.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Violation {
    /// A basis part is the empty set.
    EmptyBasisPart { part: usize },
    /// No disjoint basis pair unions to this member.
    NoDecomposition { member: usize },
    /// Every candidate decomposition of this member lacks t disjoint
    /// partners on one side.
    InsufficientPartners { member: usize },
}

impl std::fmt::Display for Violation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Violation::EmptyBasisPart { part } => write!(f, "basis part #{part} is empty"),
            Violation::NoDecomposition { member } => {
                write!(f, "member #{member} is not a disjoint union of two basis parts")
            }
            Violation::InsufficientPartners { member } => {
                write!(f, "member #{member} has no decomposition with enough partners")
            }
        }
    }
}

/// Checks that `family` is pair-like with respect to `basis` at partner
/// count `t`, returning a full certificate on success.
///
/// A member may decompose in several ways; verification succeeds if any
/// decomposition admits certificates, scanning decompositions in
/// lexicographic basis-index order.
pub fn verify(
    family: &Family,
    basis: &Family,
    t: usize,
) -> Result<PartnerCertificate, Violation> {
    assert!(t >= 1, "partner count t must be at least 1");
    if let Some(part) = basis.iter().position(|p| p.is_empty()) {
        return Err(Violation::EmptyBasisPart { part });
    }
    let in_family: HashSet<SetWord> = family.iter().copied().collect();
    let mut members = Vec::with_capacity(family.len());
    for (mi, m) in family.iter().enumerate() {
        members.push(certify_member(mi, m, family.ground_size(), basis, &in_family, t)?);
    }
    Ok(PartnerCertificate { t, members })
}

fn certify_member(
    mi: usize,
    m: &SetWord,
    _ground: usize,
    basis: &Family,
    in_family: &HashSet<SetWord>,
    t: usize,
) -> Result<MemberCertificate, Violation> {
    let parts = basis.members();
    let mut saw_decomposition = false;
    for u in 0..parts.len() {
        if !parts[u].is_subset_of(m) {
            continue;
        }
        for v in u + 1..parts.len() {
            if !parts[v].is_subset_of(m)
                || !parts[u].is_disjoint_from(&parts[v])
                || parts[u].union(&parts[v]) != *m
            {
                continue;
            }
            saw_decomposition = true;
            let first = partner_list(u, v, basis, in_family, t);
            let second = partner_list(v, u, basis, in_family, t);
            if let (Some(pu), Some(pv)) = (first, second) {
                return Ok(MemberCertificate {
                    member: mi,
                    components: (u, v),
                    partners_of_first: pu,
                    partners_of_second: pv,
                });
            }
        }
    }
    if saw_decomposition {
        Err(Violation::InsufficientPartners { member: mi })
    } else {
        Err(Violation::NoDecomposition { member: mi })
    }
}

/// Looks for `t` basis indices w such that part_u ∪ part_w is a member and
/// {part_u, part_v} ∪ {part_w} is pairwise disjoint. Candidates may
/// overlap each other, so a depth-first search with early exit at `t`
/// picks a pairwise-disjoint subset when one exists.
fn partner_list(
    u: usize,
    v: usize,
    basis: &Family,
    in_family: &HashSet<SetWord>,
    t: usize,
) -> Option<Vec<usize>> {
    let parts = basis.members();
    let blocked = parts[u].union(&parts[v]);
    let candidates: Vec<usize> = (0..parts.len())
        .filter(|&w| {
            w != u
                && w != v
                && parts[w].is_disjoint_from(&blocked)
                && in_family.contains(&parts[u].union(&parts[w]))
        })
        .collect();
    if candidates.len() < t {
        return None;
    }
    let mut chosen = Vec::with_capacity(t);
    if pick_disjoint(&candidates, parts, 0, t, &mut chosen) {
        Some(chosen)
    } else {
        None
    }
}

fn pick_disjoint(
    candidates: &[usize],
    parts: &[SetWord],
    start: usize,
    t: usize,
    chosen: &mut Vec<usize>,
) -> bool {
    if chosen.len() == t {
        return true;
    }
    if candidates.len() - start < t - chosen.len() {
        return false;
    }
    for i in start..candidates.len() {
        let w = candidates[i];
        if chosen.iter().all(|&c| parts[c].is_disjoint_from(&parts[w])) {
            chosen.push(w);
            if pick_disjoint(candidates, parts, i + 1, t, chosen) {
                return true;
            }
            chosen.pop();
        }
    }
    false
}

/// Basis parts appearing as a component of at least one member under the
/// certified decompositions, with per-part occurrence counts.
pub fn popular_parts(
    family: &Family,
    basis: &Family,
    t: usize,
) -> Result<Vec<(usize, usize)>, Violation> {
    let cert = verify(family, basis, t)?;
    let mut counts = vec![0usize; basis.len()];
    for mc in &cert.members {
        counts[mc.components.0] += 1;
        counts[mc.components.1] += 1;
    }
    Ok(counts
        .into_iter()
        .enumerate()
        .filter(|(_, c)| *c > 0)
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn all_pairs(n: usize) -> Family {
        let mut sets = Vec::new();
        for i in 1..=n {
            for j in i + 1..=n {
                sets.push(vec![i, j]);
            }
        }
        Family::from_element_lists(n, &sets).unwrap()
    }

    fn singletons(n: usize) -> Family {
        Family::from_element_lists(n, &(1..=n).map(|i| vec![i]).collect::<Vec<_>>()).unwrap()
    }

    #[test]
    fn pairs_on_15_verify_at_t10() {
        // Each pair {u,v} has 13 disjoint singleton partners per side.
        let cert = verify(&all_pairs(15), &singletons(15), 10).unwrap();
        assert_eq!(cert.members.len(), 105);
        for mc in &cert.members {
            assert_eq!(mc.partners_of_first.len(), 10);
            assert_eq!(mc.partners_of_second.len(), 10);
        }
    }

    #[test]
    fn pairs_on_11_fail_at_t10() {
        // Only 9 partners per side.
        assert_eq!(
            verify(&all_pairs(11), &singletons(11), 10),
            Err(Violation::InsufficientPartners { member: 0 })
        );
    }

    #[test]
    fn empty_family_verifies_vacuously() {
        let cert = verify(&Family::empty(6).unwrap(), &singletons(6), 10).unwrap();
        assert!(cert.members.is_empty());
    }

    #[test]
    fn empty_basis_part_rejected() {
        let basis = Family::from_element_lists(4, &[vec![], vec![1]]).unwrap();
        let fam = Family::empty(4).unwrap();
        assert_eq!(
            verify(&fam, &basis, 1),
            Err(Violation::EmptyBasisPart { part: 0 })
        );
    }

    #[test]
    fn member_not_decomposable() {
        let fam = Family::from_element_lists(5, &[vec![1, 2, 3]]).unwrap();
        assert_eq!(
            verify(&fam, &singletons(5), 1),
            Err(Violation::NoDecomposition { member: 0 })
        );
    }

    #[test]
    fn monotone_in_t() {
        let f = all_pairs(13);
        let b = singletons(13);
        assert!(verify(&f, &b, 11).is_ok());
        for t in 1..=11 {
            assert!(verify(&f, &b, t).is_ok());
        }
    }

    #[test]
    fn popular_parts_all_used() {
        let pops = popular_parts(&all_pairs(15), &singletons(15), 10).unwrap();
        assert_eq!(pops.len(), 15);
        assert!(pops.iter().all(|&(_, c)| c == 14));
    }

    #[test]
    fn unused_basis_part_not_popular() {
        // Pairs on {1..12} plus an extra far-away singleton part {13}.
        let mut sets: Vec<Vec<usize>> = Vec::new();
        for i in 1..=12 {
            for j in i + 1..=12 {
                sets.push(vec![i, j]);
            }
        }
        let fam = Family::from_element_lists(13, &sets).unwrap();
        let basis = singletons(13);
        let pops = popular_parts(&fam, &basis, 10).unwrap();
        assert_eq!(pops.len(), 12);
        assert!(pops.iter().all(|&(p, _)| p < 12));
    }
}
