//! Families of the type D group, obtained from type B by restriction.

use std::collections::BTreeSet;

use num::Zero;

use super::{classes_by_key, Family, FamilyPartition};
use crate::combinatorics::{unordered_bipartitions, UnorderedBipartition};
use crate::error::{Error, Result};
use crate::exactalg::{residue, CherednikParameter, CoxeterGroup, GroupRingElement};
use crate::reps::IrrLabel;

/// Calogero–Moser classes at `κ ≠ 0`: split labels are singletons, the other labels are
/// grouped by `Res_λ + Res_μ`.
pub fn cm_blocks(n: usize) -> Vec<Vec<IrrLabel>> {
    let labels = unordered_bipartitions(n).into_iter().map(IrrLabel::Unordered).collect();
    classes_by_key(labels, |l| {
        let IrrLabel::Unordered(u) = l else { unreachable!("type D labels") };
        if u.split().is_some() {
            (Some(l.clone()), GroupRingElement::zero())
        } else {
            let (a, b) = u.pair();
            (None, residue(a).add(&residue(b)))
        }
    })
}

/// The type D constituents of the restriction of a type B label.
pub fn restriction_labels(label: &IrrLabel) -> Result<Vec<IrrLabel>> {
    let bp = label
        .as_bipartition()
        .ok_or_else(|| Error::Precondition(format!("{label} is not a type B label")))?;
    Ok(match UnorderedBipartition::from_bipartition(bp) {
        Some(u) => vec![IrrLabel::Unordered(u)],
        None => [1, 2]
            .into_iter()
            .map(|s| {
                let u = UnorderedBipartition::new(bp.first.clone(), bp.second.clone(), Some(s)).expect("equal pair");
                IrrLabel::Unordered(u)
            })
            .collect(),
    })
}

/// Descends a type B partition at `(0, κ)` to type D. Each B family maps to the set
/// of restriction constituents of its members; a swap-fixed singleton `(λ, λ)`
/// splits into the two singletons `{λ}₁`, `{λ}₂`.
pub fn clifford_descent(fp: &FamilyPartition) -> Result<FamilyPartition> {
    let (CoxeterGroup::B(n), CherednikParameter::B { c1, kappa }) = (fp.group, &fp.parameter) else {
        return Err(Error::ParameterShape(format!("Clifford descent starts from type B, got {}", fp.group)));
    };
    if !c1.is_zero() {
        return Err(Error::Precondition(format!("Clifford descent needs c1 = 0, got {c1}")));
    }
    let group = CoxeterGroup::D(n);
    let parameter = CherednikParameter::D { kappa: kappa.clone() };
    parameter.validate_for(&group)?;
    let mut blocks: BTreeSet<Vec<IrrLabel>> = BTreeSet::new();
    for f in fp.families() {
        let mut image = Vec::new();
        for l in f.members() {
            image.extend(restriction_labels(l)?);
        }
        image.sort();
        let fixed_singleton = f.is_singleton() && image.len() == 2;
        if fixed_singleton {
            for l in image {
                blocks.insert(vec![l]);
            }
        } else {
            blocks.insert(image);
        }
    }
    let families = blocks.into_iter().map(Family::new).collect();
    Ok(FamilyPartition::new(group, parameter, fp.method, families))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinatorics::Partition;
    use crate::exactalg::rat;
    use crate::families::{cm_families, lusztig_families};

    fn u(a: &[u32], b: &[u32], s: Option<u8>) -> IrrLabel {
        IrrLabel::Unordered(
            UnorderedBipartition::new(Partition::new(a.to_vec()).unwrap(), Partition::new(b.to_vec()).unwrap(), s)
                .unwrap(),
        )
    }

    #[test]
    fn split_labels_are_singletons() {
        let fp = cm_families(&CoxeterGroup::D(4), &CherednikParameter::D { kappa: rat(1) }).unwrap();
        assert!(fp.is_partition_of_irr());
        for s in [1, 2] {
            assert!(fp.family_of(&u(&[2], &[2], Some(s))).unwrap().is_singleton());
            assert!(fp.family_of(&u(&[1, 1], &[1, 1], Some(s))).unwrap().is_singleton());
        }
        let cusp = fp.family_of(&u(&[2, 2], &[], None)).unwrap();
        let key = residue(&Partition::new(vec![2, 2]).unwrap());
        for l in cusp.members() {
            let IrrLabel::Unordered(x) = l else { panic!() };
            assert_eq!(residue(x.pair().0).add(&residue(x.pair().1)), key);
        }
    }

    #[test]
    fn descent_matches_cm() {
        for n in 2..=6 {
            let g = CoxeterGroup::D(n);
            let p = CherednikParameter::D { kappa: rat(1) };
            let lus = lusztig_families(&g, &p).unwrap();
            assert!(lus.is_partition_of_irr());
            assert!(lus.same_blocks(&cm_families(&g, &p).unwrap()), "n = {n}");
        }
    }

    #[test]
    fn descent_rejects_nonzero_c1() {
        let b = cm_families(&CoxeterGroup::B(3), &CherednikParameter::B { c1: rat(1), kappa: rat(1) }).unwrap();
        assert!(clifford_descent(&b).is_err());
    }
}
