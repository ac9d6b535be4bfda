//! Disjoint-triple selection: from three families of at least seven
//! pairwise-disjoint non-empty sets, pick one set from each so that every
//! one of the three has a private element outside the other two.

use crate::error::ConstructiveError;
use crate::set_word::SetWord;

/// True iff both differences `x \ y` and `y \ x` are non-empty.
pub fn weakly_separated(x: &SetWord, y: &SetWord) -> bool {
    assert_eq!(x.ground_size(), y.ground_size(), "common ground required");
    !x.difference(y).is_empty() && !y.difference(x).is_empty()
}

fn check_family(
    name: &str,
    fam: &[SetWord],
    ground: usize,
) -> Result<(), ConstructiveError> {
    if fam.len() < 7 {
        return Err(ConstructiveError::Precondition(format!(
            "family {name} has {} < 7 members",
            fam.len()
        )));
    }
    for (i, s) in fam.iter().enumerate() {
        if s.ground_size() != ground {
            return Err(ConstructiveError::Precondition(format!(
                "family {name} member #{i} has mismatched ground"
            )));
        }
        if s.is_empty() {
            return Err(ConstructiveError::Precondition(format!(
                "family {name} member #{i} is empty"
            )));
        }
        for (j, t) in fam.iter().enumerate().skip(i + 1) {
            if !s.is_disjoint_from(t) {
                return Err(ConstructiveError::Precondition(format!(
                    "family {name} members #{i} and #{j} intersect"
                )));
            }
        }
    }
    Ok(())
}

// Given two disjoint pairs {u1,u2} and {v1,v2}, some (u_i, v_j) is weakly
// separated: if u1 and v1 are not, one contains the other, and the
// disjointness of the pair on the containing side separates the other set.
fn separated_from_quads(u: &[SetWord; 2], v: &[SetWord; 2]) -> (usize, usize) {
    if weakly_separated(&u[0], &v[0]) {
        (0, 0)
    } else if u[0].is_subset_of(&v[0]) {
        (0, 1)
    } else {
        (1, 0)
    }
}

/// Picks `(A, B, C)`, one from each family, with `A \ (B ∪ C)`,
/// `B \ (A ∪ C)` and `C \ (A ∪ B)` all non-empty.
///
/// Returns the indices of the chosen sets within each input family.
pub fn select_disjoint_triple(
    a_fam: &[SetWord],
    b_fam: &[SetWord],
    c_fam: &[SetWord],
) -> Result<(usize, usize, usize), ConstructiveError> {
    let ground = a_fam
        .first()
        .map(|s| s.ground_size())
        .ok_or_else(|| ConstructiveError::Precondition("family A is empty".into()))?;
    check_family("A", a_fam, ground)?;
    check_family("B", b_fam, ground)?;
    check_family("C", c_fam, ground)?;

    // Three weakly separated (A_i, B_j) pairs with distinct i's and j's,
    // drawn from the first four sets of each family two at a time.
    let mut a_left: Vec<usize> = (0..4).collect();
    let mut b_left: Vec<usize> = (0..4).collect();
    let mut pairs = Vec::with_capacity(3);
    for _ in 0..3 {
        let u = [a_fam[a_left[0]], a_fam[a_left[1]]];
        let v = [b_fam[b_left[0]], b_fam[b_left[1]]];
        let (ui, vj) = separated_from_quads(&u, &v);
        pairs.push((a_left[ui], b_left[vj]));
        a_left.remove(ui);
        b_left.remove(vj);
    }

    // Representative points from each difference.
    let mut reps = SetWord::empty(ground)?;
    for &(ai, bj) in &pairs {
        let x = a_fam[ai].difference(&b_fam[bj]).min_element().ok_or_else(|| {
            ConstructiveError::Falsification("weakly separated pair with empty difference".into())
        })?;
        let y = b_fam[bj].difference(&a_fam[ai]).min_element().ok_or_else(|| {
            ConstructiveError::Falsification("weakly separated pair with empty difference".into())
        })?;
        reps = reps.insert(x).insert(y);
    }

    // The C-sets are pairwise disjoint, so the six representatives kill at
    // most six of them.
    let ci = c_fam
        .iter()
        .position(|c| c.is_disjoint_from(&reps))
        .ok_or_else(|| {
            ConstructiveError::Falsification(
                "six representatives eliminated seven disjoint sets".into(),
            )
        })?;
    let c = c_fam[ci];

    // Any element of C lies in at most one A_i and one B_j among the
    // three pairs, so some pair's union misses it.
    for &(ai, bj) in &pairs {
        let union = a_fam[ai].union(&b_fam[bj]);
        if !c.difference(&union).is_empty() {
            let a_priv = a_fam[ai].difference(&b_fam[bj].union(&c));
            let b_priv = b_fam[bj].difference(&a_fam[ai].union(&c));
            if a_priv.is_empty() || b_priv.is_empty() {
                return Err(ConstructiveError::Falsification(
                    "representative points failed to certify a private part".into(),
                ));
            }
            return Ok((ai, bj, ci));
        }
    }
    Err(ConstructiveError::Falsification(
        "no pair union avoids the surviving C-set".into(),
    ))
}
