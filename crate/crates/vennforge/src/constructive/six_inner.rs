//! The quadratic-threshold finder for six of the seven inner regions of a
//! 3-Venn, plus the finders derived from it: seven inner regions by
//! boosting, all eight regions for middle-sized sets, and the final
//! all-eight finder for arbitrary families.
//!
//! The six-inner recursion works per pivot element x: members present both
//! with and without x form the intersection family H_x, which either
//! contains a five-inner witness (then x certifies a sixth region) or is
//! pair-like with partner certificates. A member reachable from two pivots
//! then assembles the triple explicitly from its component parts and their
//! partners.

use crate::error::ConstructiveError;
use crate::family::Family;
use crate::pairlike::{self, PartnerCertificate};
use crate::set_word::SetWord;
use crate::thresholds::Thresholds;
use crate::venn::{self, ALL8, INNER7, MIDDLE6};

use super::boost::{boost, resolve_indices, BoostSpec};
use super::decompose::structural_decompose;
use super::select::select_disjoint_triple;
use super::{gupta_find, Outcome};

const SIX_INNER_REASON: &str = "six-inner guarantee needs |F| >= main_mult * n^2";
const COR1_REASON: &str = "all-regions guarantee for [k, n-k]-sized sets needs |F| >= D * n^4 / k";
const FULL_REASON: &str = "all-regions guarantee needs |F| >= (2*C3 + 3*D) * n^3";

/// Finds a triple with at least six of the seven inner regions non-empty,
/// guaranteed once `|F| >= main_mult * n^2`.
pub fn six_inner_find(
    family: &Family,
    th: &Thresholds,
    force: bool,
) -> Result<Outcome, ConstructiveError> {
    th.validate().map_err(ConstructiveError::Precondition)?;
    if th.t < 7 {
        return Err(ConstructiveError::Precondition(
            "six-inner finder needs partner count t >= 7".into(),
        ));
    }
    let n = family.ground_size();
    let required = th.main_mult * n * n;
    let actual = family.len();
    if actual < required && !force {
        return Ok(Outcome::Shortfall {
            reason: SIX_INNER_REASON,
            required,
            actual,
        });
    }
    if let Some(sets) = six_inner_rec(family, th)? {
        let indices = resolve_indices(family, &sets)?;
        let w = venn::witness_for(family, indices, INNER7);
        if w.regions.count_filled(INNER7) < 6 {
            return Err(ConstructiveError::Falsification(format!(
                "assembled triple fills {} < 6 inner regions",
                w.regions.count_filled(INNER7)
            )));
        }
        return Ok(Outcome::Witness(w));
    }
    match venn::find_triple(family, INNER7, 6) {
        Some(w) => Ok(Outcome::Witness(w)),
        None if actual >= required => Err(ConstructiveError::Falsification(format!(
            "family of size {actual} >= {required} on ground {n} has no triple with six inner regions"
        ))),
        None => Ok(Outcome::Shortfall {
            reason: SIX_INNER_REASON,
            required,
            actual,
        }),
    }
}

struct PivotData {
    hx: Family,
    basis: Family,
    cert: PartnerCertificate,
}

fn six_inner_rec(
    family: &Family,
    th: &Thresholds,
) -> Result<Option<Vec<SetWord>>, ConstructiveError> {
    let n = family.ground_size();
    if n <= 7 {
        return Ok(venn::find_triple(family, INNER7, 6).map(|w| w.sets(family)));
    }
    let full = SetWord::full(n)?;
    let mut pivot_data: Vec<Option<PivotData>> = (0..n).map(|_| None).collect();
    let mut recursed = false;

    for x in 0..n {
        let target = full.remove(x);
        let (union_fam, index_map) = family.project(&target)?;

        // If dropping x keeps quadratically many distinct traces, the
        // smaller ground already carries a witness.
        if !recursed && union_fam.len() >= th.main_mult * (n - 1) * (n - 1) {
            recursed = true;
            if let Some(sets) = six_inner_rec(&union_fam, th)? {
                let lifted = sets
                    .iter()
                    .map(|s| {
                        let e = Family::embed(s, &target);
                        if family.contains(&e) {
                            e
                        } else {
                            e.insert(x)
                        }
                    })
                    .collect();
                return Ok(Some(lifted));
            }
        }

        // H_x: traces whose with-x and without-x forms are both members.
        let mut has_with = vec![false; union_fam.len()];
        let mut has_without = vec![false; union_fam.len()];
        for (i, member) in family.iter().enumerate() {
            if member.contains(x) {
                has_with[index_map[i]] = true;
            } else {
                has_without[index_map[i]] = true;
            }
        }
        let inter_indices: Vec<usize> = (0..union_fam.len())
            .filter(|&i| has_with[i] && has_without[i])
            .collect();
        if inter_indices.is_empty() {
            continue;
        }
        let inter = union_fam.subfamily(&inter_indices);

        match structural_decompose(&inter, th)? {
            Outcome::Witness(w) => {
                // Five inner regions without x; placing x into an empty
                // inner pattern certifies a sixth. Both forms of every
                // witness set are members, so the lift stays inside F.
                let mut sets: Vec<SetWord> = w
                    .sets(&inter)
                    .iter()
                    .map(|s| Family::embed(s, &target))
                    .collect();
                let rv = venn::region_vector(&sets)?;
                if let Some(p) = (1..8).find(|&p| INNER7 >> p & 1 == 1 && rv.sizes[p] == 0) {
                    for (i, s) in sets.iter_mut().enumerate() {
                        if p >> i & 1 == 1 {
                            *s = s.insert(x);
                        }
                    }
                }
                return Ok(Some(sets));
            }
            Outcome::Object(d) => {
                if d.structured.is_empty() {
                    continue;
                }
                let hx = Family::new(
                    n,
                    d.structured
                        .iter()
                        .map(|&i| Family::embed(&inter.member(i), &target)),
                )?;
                let basis =
                    Family::new(n, d.basis.iter().map(|p| Family::embed(p, &target)))?;
                let cert = pairlike::verify(&hx, &basis, th.t).map_err(|v| {
                    ConstructiveError::Falsification(format!(
                        "pair-like certificate failed at pivot {}: {v}",
                        x + 1
                    ))
                })?;
                pivot_data[x] = Some(PivotData { hx, basis, cert });
            }
            Outcome::Shortfall { .. } => continue,
        }
    }

    // A member reachable from two pivots assembles the triple directly.
    for m in family.iter() {
        let pivots: Vec<usize> = (0..n)
            .filter(|&x| {
                m.contains(x)
                    && pivot_data[x]
                        .as_ref()
                        .is_some_and(|pd| pd.hx.contains(&m.remove(x)))
            })
            .collect();
        if pivots.len() < 2 {
            continue;
        }
        let (x, y) = (pivots[0], pivots[1]);
        let sets = assemble_from_pivots(
            m,
            x,
            y,
            pivot_data[x].as_ref().unwrap(),
            pivot_data[y].as_ref().unwrap(),
        )?;
        return Ok(Some(sets));
    }
    Ok(None)
}

// The two-pivot assembly. M \ {x} = P1 ∪ P2 with y ∈ P1 (components in
// H_x), M \ {y} = Q1 ∪ Q2 with x ∈ Q1 (components in H_y). Either a P1 or
// Q1 larger than its pivot yields the triple from two of its partners, or
// P1 = {y} and Q1 = {x} force P2 = Q2 = M \ {x, y} and the triple comes
// from one partner on each of the three sides, chosen to have private
// elements.
fn assemble_from_pivots(
    m: &SetWord,
    x: usize,
    y: usize,
    pdx: &PivotData,
    pdy: &PivotData,
) -> Result<Vec<SetWord>, ConstructiveError> {
    let sx = m.remove(x);
    let sy = m.remove(y);
    let (p1, p2, p1_partners, p2_partners) = split_member(&sx, y, pdx)?;
    let (q1, q2, q1_partners, _) = split_member(&sy, x, pdy)?;

    if p1.len() > 1 {
        let p3 = pdx.basis.member(p1_partners[0]);
        let p4 = pdx.basis.member(p1_partners[1]);
        return Ok(vec![p1.union(&p3), p1.union(&p4).insert(x), sy]);
    }
    if q1.len() > 1 {
        let q3 = pdy.basis.member(q1_partners[0]);
        let q4 = pdy.basis.member(q1_partners[1]);
        return Ok(vec![q1.union(&q3), q1.union(&q4).insert(y), sx]);
    }
    if p2 != q2 {
        return Err(ConstructiveError::Falsification(
            "the two pivot decompositions disagree on the common part".into(),
        ));
    }
    let a_parts: Vec<SetWord> = p2_partners.iter().map(|&w| pdx.basis.member(w)).collect();
    let b_parts: Vec<SetWord> = {
        let (_, _, _, q2_partners) = split_member(&sy, x, pdy)?;
        q2_partners.iter().map(|&w| pdy.basis.member(w)).collect()
    };
    let c_parts: Vec<SetWord> = p1_partners.iter().map(|&w| pdx.basis.member(w)).collect();
    let (ai, bj, ck) = select_disjoint_triple(&a_parts, &b_parts, &c_parts)?;
    Ok(vec![
        p2.union(&a_parts[ai]).insert(x),
        q2.union(&b_parts[bj]).insert(y),
        c_parts[ck].union(&p1).insert(x),
    ])
}

// Looks up the certified decomposition of `member` in the pivot data and
// orients it so the first part contains `other`. Returns the two parts and
// their partner lists.
fn split_member<'a>(
    member: &SetWord,
    other: usize,
    pd: &'a PivotData,
) -> Result<(SetWord, SetWord, &'a [usize], &'a [usize]), ConstructiveError> {
    let idx = pd.hx.position(member).ok_or_else(|| {
        ConstructiveError::Falsification("selected member lost from its pivot family".into())
    })?;
    let mc = &pd.cert.members[idx];
    let (u, v) = mc.components;
    let (pu, pv) = (pd.basis.member(u), pd.basis.member(v));
    if pu.contains(other) {
        Ok((pu, pv, &mc.partners_of_first, &mc.partners_of_second))
    } else if pv.contains(other) {
        Ok((pv, pu, &mc.partners_of_second, &mc.partners_of_first))
    } else {
        Err(ConstructiveError::Falsification(
            "component parts of a member miss the second pivot".into(),
        ))
    }
}

/// Finds a triple with all six middle regions non-empty, guaranteed once
/// `|F| >= boost_mult^2 * gupta_mult * n^3`. Two boosting steps over the
/// four-of-six base finder.
pub fn six_middle_find(
    family: &Family,
    th: &Thresholds,
    force: bool,
) -> Result<Outcome, ConstructiveError> {
    th.validate().map_err(ConstructiveError::Precondition)?;
    let five_spec = BoostSpec {
        mask: MIDDLE6,
        base_regions: 4,
        base_coeff: th.gupta_mult,
        base_exponent: 1,
    };
    let six_spec = BoostSpec {
        mask: MIDDLE6,
        base_regions: 5,
        base_coeff: th.boost_mult * th.gupta_mult,
        base_exponent: 2,
    };
    let five = |f: &Family, fo: bool| {
        boost(
            &|g: &Family, fo2: bool| gupta_find(g, th, fo2),
            &five_spec,
            f,
            th,
            fo,
        )
    };
    boost(&five, &six_spec, family, th, force)
}

/// Finds a triple with all seven inner regions non-empty, guaranteed once
/// `|F| >= boost_mult * main_mult * n^3`. One boosting step over the
/// six-inner finder.
pub fn seven_inner_find(
    family: &Family,
    th: &Thresholds,
    force: bool,
) -> Result<Outcome, ConstructiveError> {
    th.validate().map_err(ConstructiveError::Precondition)?;
    let spec = BoostSpec {
        mask: INNER7,
        base_regions: 6,
        base_coeff: th.main_mult,
        base_exponent: 2,
    };
    boost(
        &|f: &Family, fo: bool| six_inner_find(f, th, fo),
        &spec,
        family,
        th,
        force,
    )
}

fn all_eight_witness(
    family: &Family,
    mut indices: Vec<usize>,
) -> Result<Outcome, ConstructiveError> {
    indices.sort_unstable();
    let w = venn::witness_for(family, indices, ALL8);
    if w.regions.count_filled(ALL8) < 8 {
        return Err(ConstructiveError::Falsification(format!(
            "assembled triple fills {} < 8 regions",
            w.regions.count_filled(ALL8)
        )));
    }
    Ok(Outcome::Witness(w))
}

/// Finds a triple with all eight regions non-empty in a family whose member
/// sizes all lie in `[k, n - k]`, guaranteed once
/// `|F| >= 2 * boost_mult^2 * gupta_mult * n^4 / k`.
pub fn cor1_find(
    family: &Family,
    k: usize,
    th: &Thresholds,
    force: bool,
) -> Result<Outcome, ConstructiveError> {
    th.validate().map_err(ConstructiveError::Precondition)?;
    let n = family.ground_size();
    if k < 1 || 2 * k > n {
        return Err(ConstructiveError::Precondition(format!(
            "size bound k = {k} must satisfy 1 <= k <= n/2 on ground {n}"
        )));
    }
    for (i, m) in family.iter().enumerate() {
        let s = m.len();
        if s < k || s > n - k {
            return Err(ConstructiveError::Precondition(format!(
                "member #{i} has size {s} outside [{k}, {}]",
                n - k
            )));
        }
    }
    let d_coeff = 2 * th.boost_mult * th.boost_mult * th.gupta_mult;
    let required = (d_coeff * n.pow(4)).div_ceil(k);
    let actual = family.len();
    if actual < required && !force {
        return Ok(Outcome::Shortfall {
            reason: COR1_REASON,
            required,
            actual,
        });
    }
    if let Some(out) = cor1_pipeline(family, th, force)? {
        return Ok(out);
    }
    match venn::find_k_venn(family, 3) {
        Some(w) => Ok(Outcome::Witness(w)),
        None if actual >= required => Err(ConstructiveError::Falsification(format!(
            "family of size {actual} >= {required} with sizes in [{k}, {}] has no full 3-Venn",
            n - k
        ))),
        None => Ok(Outcome::Shortfall {
            reason: COR1_REASON,
            required,
            actual,
        }),
    }
}

// Whichever of the two sides of element 1 holds a majority, complementing
// flips all eight region patterns at once, so work with members avoiding
// element 1. Among those, a most-covered element x restricts to a cubic
// subfamily of sets containing x: its six middle regions plus x innermost
// plus element 1 outermost give all eight.
fn cor1_pipeline(
    family: &Family,
    th: &Thresholds,
    force: bool,
) -> Result<Option<Outcome>, ConstructiveError> {
    if family.is_empty() {
        return Ok(None);
    }
    let n = family.ground_size();
    let avoiders = family.iter().filter(|m| !m.contains(0)).count();
    let complemented = 2 * avoiders < family.len();
    let work = if complemented {
        family.complement()
    } else {
        family.clone()
    };
    let (sub, sub_indices) = work.filter(|m| !m.contains(0));
    if sub.is_empty() {
        return Ok(None);
    }
    let x = (1..n)
        .max_by_key(|&e| {
            (
                sub.iter().filter(|m| m.contains(e)).count(),
                std::cmp::Reverse(e),
            )
        })
        .expect("ground has at least two elements");
    let (g, g_indices) = sub.filter(|m| m.contains(x));
    match six_middle_find(&g, th, force)? {
        Outcome::Witness(w) => {
            let indices: Vec<usize> = w
                .member_indices
                .iter()
                .map(|&i| sub_indices[g_indices[i]])
                .collect();
            Some(all_eight_witness(family, indices)).transpose()
        }
        _ => Ok(None),
    }
}

/// Finds a triple with all eight regions non-empty in an arbitrary family,
/// guaranteed once `|F| >= (2 * C3 + 3 * D) * n^3` where
/// `C3 = boost_mult * main_mult` and `D = 2 * boost_mult^2 * gupta_mult`.
///
/// Members split into size thirds. A heavy middle third goes through the
/// bounded-size finder; otherwise the heavier of the outer thirds (big sets
/// complemented, so all sets are smaller than n/3) goes through the
/// seven-inner finder, and smallness certifies the outermost region.
pub fn full_venn_find(
    family: &Family,
    th: &Thresholds,
    force: bool,
) -> Result<Outcome, ConstructiveError> {
    th.validate().map_err(ConstructiveError::Precondition)?;
    let n = family.ground_size();
    let c3 = th.boost_mult * th.main_mult;
    let d_coeff = 2 * th.boost_mult * th.boost_mult * th.gupta_mult;
    let required = (2 * c3 + 3 * d_coeff) * n.pow(3);
    let actual = family.len();
    if actual < required && !force {
        return Ok(Outcome::Shortfall {
            reason: FULL_REASON,
            required,
            actual,
        });
    }

    let (mid, mid_indices) = family.filter(|m| n <= 3 * m.len() && 3 * m.len() <= 2 * n);
    let k = n.div_ceil(3);
    if (mid.len() >= 3 * d_coeff * n.pow(3) || force) && !mid.is_empty() && 2 * k <= n {
        if let Outcome::Witness(w) = cor1_find(&mid, k, th, force)? {
            let indices = w.member_indices.iter().map(|&i| mid_indices[i]).collect();
            return all_eight_witness(family, indices);
        }
    }

    let (small, small_indices) = family.filter(|m| 3 * m.len() < n);
    let (big, big_indices) = family.filter(|m| 3 * m.len() > 2 * n);
    let mut sides = [(small, small_indices, false), (big, big_indices, true)];
    if sides[1].0.len() > sides[0].0.len() {
        sides.swap(0, 1);
    }
    for (side, idx_map, complement) in &sides {
        if side.len() < 3 {
            continue;
        }
        let work = if *complement {
            side.complement()
        } else {
            side.clone()
        };
        if let Outcome::Witness(w) = seven_inner_find(&work, th, force)? {
            // All working sets have size below n/3, so the triple's union
            // cannot cover the ground and the outermost region is free.
            let indices = w.member_indices.iter().map(|&i| idx_map[i]).collect();
            return all_eight_witness(family, indices);
        }
    }

    match venn::find_k_venn(family, 3) {
        Some(w) => Ok(Outcome::Witness(w)),
        None if actual >= required => Err(ConstructiveError::Falsification(format!(
            "family of size {actual} >= {required} on ground {n} has no full 3-Venn"
        ))),
        None => Ok(Outcome::Shortfall {
            reason: FULL_REASON,
            required,
            actual,
        }),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::extremal::gen_powerset;

    fn set(n: usize, es: &[usize]) -> SetWord {
        SetWord::from_elements(n, es.iter().copied()).unwrap()
    }

    #[test]
    fn six_inner_shortfall_below_guard() {
        let f = Family::from_element_lists(10, &[vec![1, 2], vec![3, 4]]).unwrap();
        let th = Thresholds::default();
        match six_inner_find(&f, &th, false).unwrap() {
            Outcome::Shortfall {
                required, actual, ..
            } => {
                assert_eq!(required, 200);
                assert_eq!(actual, 2);
            }
            other => panic!("expected shortfall, got {other:?}"),
        }
    }

    #[test]
    fn six_inner_on_powerset_recurses_to_small_ground() {
        // 255 >= 2 * 64, and dropping any element keeps 127 distinct traces.
        let f = gen_powerset(8).unwrap();
        let th = Thresholds::default();
        let out = six_inner_find(&f, &th, false).unwrap();
        let w = out.witness().expect("witness above the guard");
        assert!(w.regions.count_filled(INNER7) >= 6);
        assert!(w.revalidate(&f).unwrap());
    }

    // Pairs on {2..15}, their extensions by element 1, and extensions of
    // pairs on {3..15} by element 2. Both pivot families are pair-like over
    // singletons, and {1,2,b} is reachable from both pivots, so the search
    // exercises the two-pivot assembly and the disjoint-triple selection.
    fn two_pivot_family() -> Family {
        let mut sets: Vec<Vec<usize>> = Vec::new();
        for a in 1..=15 {
            for b in a + 1..=15 {
                sets.push(vec![a, b]);
            }
        }
        for a in 2..=15 {
            for b in a + 1..=15 {
                sets.push(vec![1, a, b]);
            }
        }
        for a in 3..=15 {
            for b in a + 1..=15 {
                sets.push(vec![2, a, b]);
            }
        }
        Family::from_element_lists(15, &sets).unwrap()
    }

    #[test]
    fn two_pivot_assembly_end_to_end() {
        let f = two_pivot_family();
        let th = Thresholds::default();
        let out = six_inner_find(&f, &th, true).unwrap();
        let w = out.witness().expect("assembled witness");
        assert!(w.regions.count_filled(INNER7) >= 6);
        assert!(w.revalidate(&f).unwrap());
    }

    // Builds pivot data directly from a hand-made pair-like family: the
    // given parts plus twelve disjoint two-element filler parts, with every
    // disjoint pair union as a member.
    fn pivot_data_from_parts(n: usize, own: &[SetWord], pivot: usize) -> PivotData {
        let mut parts: Vec<SetWord> = own.to_vec();
        for i in 0..12 {
            parts.push(set(n, &[5 + 2 * i, 6 + 2 * i]));
        }
        let mut members = Vec::new();
        for i in 0..parts.len() {
            for j in i + 1..parts.len() {
                if parts[i].is_disjoint_from(&parts[j]) {
                    members.push(parts[i].union(&parts[j]));
                }
            }
        }
        assert!(parts.iter().all(|p| !p.contains(pivot)));
        let hx = Family::new(n, members).unwrap();
        let basis = Family::new(n, parts).unwrap();
        let cert = pairlike::verify(&hx, &basis, 10).unwrap();
        PivotData { hx, basis, cert }
    }

    #[test]
    fn assembly_first_claim_branch() {
        // P1 = {2, 3} properly exceeds the pivot y = 2.
        let n = 40;
        let (x, y) = (0, 1);
        let pdx = pivot_data_from_parts(n, &[set(n, &[1, 2]), set(n, &[3, 4])], x);
        let pdy = pivot_data_from_parts(n, &[set(n, &[0, 2]), set(n, &[3, 4])], y);
        let m = set(n, &[0, 1, 2, 3, 4]);
        let sets = assemble_from_pivots(&m, x, y, &pdx, &pdy).unwrap();
        let rv = venn::region_vector(&sets).unwrap();
        assert!(rv.count_filled(INNER7) >= 6);
    }

    #[test]
    fn assembly_second_claim_branch() {
        // P1 = {y} but Q1 = {0, 3} properly exceeds the pivot x = 0.
        let n = 40;
        let (x, y) = (0, 1);
        let pdx = pivot_data_from_parts(n, &[set(n, &[1]), set(n, &[3, 4])], x);
        let pdy = pivot_data_from_parts(n, &[set(n, &[0, 3]), set(n, &[4])], y);
        let m = set(n, &[0, 1, 3, 4]);
        let sets = assemble_from_pivots(&m, x, y, &pdx, &pdy).unwrap();
        let rv = venn::region_vector(&sets).unwrap();
        assert!(rv.count_filled(INNER7) >= 6);
    }

    #[test]
    fn six_middle_guard_and_forced_witness() {
        let th = Thresholds::default();
        let f = gen_powerset(8).unwrap();
        match six_middle_find(&f, &th, false).unwrap() {
            Outcome::Shortfall { required, .. } => assert_eq!(required, 8 * 512),
            other => panic!("expected shortfall, got {other:?}"),
        }
        let out = six_middle_find(&f, &th, true).unwrap();
        let w = out.witness().expect("forced witness");
        assert_eq!(w.regions.count_filled(MIDDLE6), 6);
        assert!(w.revalidate(&f).unwrap());
    }

    #[test]
    fn seven_inner_forced_on_powerset() {
        let th = Thresholds::default();
        let f = gen_powerset(8).unwrap();
        let out = seven_inner_find(&f, &th, true).unwrap();
        let w = out.witness().expect("forced witness");
        assert_eq!(w.regions.count_filled(INNER7), 7);
        assert!(w.revalidate(&f).unwrap());
    }

    fn middle_slices(n: usize, lo: usize, hi: usize) -> Family {
        let members: Vec<SetWord> = (0u32..1 << n)
            .filter(|m| (lo..=hi).contains(&(m.count_ones() as usize)))
            .map(|m| SetWord::from_bits(n, m as u128).unwrap())
            .collect();
        Family::new(n, members).unwrap()
    }

    #[test]
    fn bounded_size_finder_fills_all_eight() {
        let th = Thresholds::default();
        let f = middle_slices(8, 3, 5);
        let out = cor1_find(&f, 3, &th, true).unwrap();
        let w = out.witness().expect("forced witness");
        assert_eq!(w.regions.count_filled(ALL8), 8);
        assert!(w.revalidate(&f).unwrap());
    }

    #[test]
    fn bounded_size_finder_rejects_out_of_range_member() {
        let th = Thresholds::default();
        let f = Family::from_element_lists(8, &[vec![1], vec![1, 2, 3]]).unwrap();
        let err = cor1_find(&f, 2, &th, true).unwrap_err();
        assert!(matches!(err, ConstructiveError::Precondition(_)));
    }

    #[test]
    fn full_venn_forced_on_powerset() {
        let th = Thresholds::default();
        let f = gen_powerset(8).unwrap();
        let out = full_venn_find(&f, &th, true).unwrap();
        let w = out.witness().expect("forced witness");
        assert_eq!(w.regions.count_filled(ALL8), 8);
        assert!(w.revalidate(&f).unwrap());
    }

    #[test]
    fn full_venn_shortfall_reports_guard() {
        let th = Thresholds::default();
        let f = Family::from_element_lists(10, &[vec![1, 2], vec![2, 3]]).unwrap();
        match full_venn_find(&f, &th, false).unwrap() {
            Outcome::Shortfall { required, .. } => assert_eq!(required, 52 * 1000),
            other => panic!("expected shortfall, got {other:?}"),
        }
    }
}
