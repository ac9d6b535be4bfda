//! Region boosting: trades a factor of n in the size guard for one more
//! filled region, by splitting on a pivot element and either recursing on
//! the union family or lifting a base witness out of the intersection
//! family with the pivot placed into an empty masked region.

use crate::error::ConstructiveError;
use crate::family::Family;
use crate::set_word::SetWord;
use crate::thresholds::Thresholds;
use crate::venn::{self, RegionMask};

use super::Outcome;

/// What the base finder guarantees: `base_regions` filled regions of
/// `mask` on families of size at least `base_coeff * n^base_exponent`.
#[derive(Clone, Copy, Debug)]
pub struct BoostSpec {
    pub mask: RegionMask,
    pub base_regions: usize,
    pub base_coeff: usize,
    pub base_exponent: u32,
}

impl BoostSpec {
    /// The guard of the boosted finder at ground size `n`.
    pub fn boosted_guard(&self, n: usize, th: &Thresholds) -> usize {
        th.boost_mult * self.base_coeff * n.pow(self.base_exponent + 1)
    }
}

/// Boosts `base` by one region: on families of size at least
/// `boost_mult * base_coeff * n^(base_exponent+1)`, returns a triple with
/// at least `base_regions + 1` masked regions filled.
///
/// With `force`, the guard is advisory and a dead-ended recursion falls
/// back to the exhaustive oracle.
pub fn boost<B>(
    base: &B,
    spec: &BoostSpec,
    family: &Family,
    th: &Thresholds,
    force: bool,
) -> Result<Outcome, ConstructiveError>
where
    B: Fn(&Family, bool) -> Result<Outcome, ConstructiveError>,
{
    assert!(
        spec.mask & 1 == 0,
        "the outermost region cannot be certified by pivot placement"
    );
    assert!(
        (spec.base_regions as u32) < spec.mask.count_ones(),
        "base finder already fills the whole mask"
    );
    let n = family.ground_size();
    let required = spec.boosted_guard(n, th);
    let actual = family.len();
    if actual < required && !force {
        return Ok(Outcome::Shortfall {
            reason: "boosted guarantee needs |F| >= boost_mult * C * n^(k+1)",
            required,
            actual,
        });
    }
    if let Some(sets) = boost_rec(base, spec, family, th, force)? {
        let indices = resolve_indices(family, &sets)?;
        let w = venn::witness_for(family, indices, spec.mask);
        if w.regions.count_filled(spec.mask) < spec.base_regions + 1 {
            return Err(ConstructiveError::Falsification(format!(
                "lifted triple fills {} < {} masked regions",
                w.regions.count_filled(spec.mask),
                spec.base_regions + 1
            )));
        }
        return Ok(Outcome::Witness(w));
    }
    // Dead end. The exhaustive oracle settles whether a witness exists at
    // all; if the guard held, the counting argument promised one.
    match venn::find_triple(family, spec.mask, spec.base_regions + 1) {
        Some(w) => Ok(Outcome::Witness(w)),
        None if actual >= required => Err(ConstructiveError::Falsification(format!(
            "family of size {actual} >= {required} on ground {n} has no triple with {} masked regions",
            spec.base_regions + 1
        ))),
        None => Ok(Outcome::Shortfall {
            reason: "boosted guarantee needs |F| >= boost_mult * C * n^(k+1)",
            required,
            actual,
        }),
    }
}

fn boost_rec<B>(
    base: &B,
    spec: &BoostSpec,
    family: &Family,
    th: &Thresholds,
    force: bool,
) -> Result<Option<Vec<SetWord>>, ConstructiveError>
where
    B: Fn(&Family, bool) -> Result<Outcome, ConstructiveError>,
{
    let m = family.ground_size();
    if m < 2 {
        return Ok(None);
    }
    // Split on the least ground element. The projection away from the
    // pivot is exactly the union family of the with/without halves.
    let pivot = 0usize;
    let target = SetWord::full(m)?.remove(pivot);
    let (union_fam, index_map) = family.project(&target)?;
    let mut has_with = vec![false; union_fam.len()];
    let mut has_without = vec![false; union_fam.len()];
    for (i, member) in family.iter().enumerate() {
        if member.contains(pivot) {
            has_with[index_map[i]] = true;
        } else {
            has_without[index_map[i]] = true;
        }
    }

    let union_guard = th.boost_mult * spec.base_coeff * (m - 1).pow(spec.base_exponent + 1);
    if union_fam.len() >= union_guard {
        if let Some(sets) = boost_rec(base, spec, &union_fam, th, force)? {
            let lifted = sets
                .iter()
                .map(|s| {
                    let e = Family::embed(s, &target);
                    if family.contains(&e) {
                        e
                    } else {
                        e.insert(pivot)
                    }
                })
                .collect();
            return Ok(Some(lifted));
        }
    }

    // Intersection family: reduced sets present both with and without the
    // pivot, so each base witness set lifts in either form.
    let inter_indices: Vec<usize> = (0..union_fam.len())
        .filter(|&i| has_with[i] && has_without[i])
        .collect();
    let inter = union_fam.subfamily(&inter_indices);
    if let Outcome::Witness(w) = base(&inter, force)? {
        let mut sets: Vec<SetWord> = w
            .sets(&inter)
            .iter()
            .map(|s| Family::embed(s, &target))
            .collect();
        let rv = venn::region_vector(&sets)?;
        // The pivot sits in pattern 0 (it is in none of the lifted sets);
        // move it into the least empty masked region, if any.
        let empty = (0..rv.sizes.len()).find(|&p| spec.mask >> p & 1 == 1 && rv.sizes[p] == 0);
        if let Some(p) = empty {
            for (i, s) in sets.iter_mut().enumerate() {
                if p >> i & 1 == 1 {
                    *s = s.insert(pivot);
                }
            }
        }
        return Ok(Some(sets));
    }
    Ok(None)
}

pub(super) fn resolve_indices(
    family: &Family,
    sets: &[SetWord],
) -> Result<Vec<usize>, ConstructiveError> {
    let mut indices: Vec<usize> = sets
        .iter()
        .map(|s| {
            family.position(s).ok_or_else(|| {
                ConstructiveError::Falsification(format!(
                    "lifted set {s:?} is not a member of the input family"
                ))
            })
        })
        .collect::<Result<_, _>>()?;
    indices.sort_unstable();
    Ok(indices)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructive::gupta_find;
    use crate::extremal::gen_powerset;
    use crate::venn::MIDDLE6;

    fn gupta_spec(th: &Thresholds) -> BoostSpec {
        BoostSpec {
            mask: MIDDLE6,
            base_regions: 4,
            base_coeff: th.gupta_mult,
            base_exponent: 1,
        }
    }

    #[test]
    fn shortfall_reports_boosted_guard() {
        let th = Thresholds::default();
        let f = Family::from_element_lists(10, &[vec![1], vec![2]]).unwrap();
        let out = boost(
            &|f: &Family, force| gupta_find(f, &th, force),
            &gupta_spec(&th),
            &f,
            &th,
            false,
        )
        .unwrap();
        match out {
            Outcome::Shortfall { required, .. } => assert_eq!(required, 800),
            other => panic!("expected shortfall, got {other:?}"),
        }
    }

    #[test]
    fn every_member_contains_pivot_still_yields_witness() {
        // All members contain element 1, so the without-pivot half and the
        // intersection family are empty; force drives the search through.
        let th = Thresholds::default();
        let base = gen_powerset(7).unwrap();
        let members: Vec<SetWord> = base
            .iter()
            .map(|s| {
                let mut bits = s.bits() << 1 | 1;
                bits &= (1 << 8) - 1;
                SetWord::from_bits(8, bits).unwrap()
            })
            .collect();
        let f = Family::new(8, members).unwrap();
        let out = boost(
            &|f: &Family, force| gupta_find(f, &th, force),
            &gupta_spec(&th),
            &f,
            &th,
            true,
        )
        .unwrap();
        let w = out.witness().expect("witness on a dense family");
        assert!(w.regions.count_filled(MIDDLE6) >= 5);
        assert!(w.revalidate(&f).unwrap());
    }

    #[test]
    fn boosted_gupta_on_powerset() {
        let th = Thresholds::default();
        let f = gen_powerset(8).unwrap();
        let out = boost(
            &|f: &Family, force| gupta_find(f, &th, force),
            &gupta_spec(&th),
            &f,
            &th,
            true,
        )
        .unwrap();
        let w = out.witness().expect("witness");
        assert!(w.regions.count_filled(MIDDLE6) >= 5);
        assert!(w.revalidate(&f).unwrap());
    }
}
