//! Symplectic leaves, cuspidal families and rigid modules.

pub mod leaves;
pub mod rigid;

use std::collections::BTreeSet;

use num::Zero;

use crate::combinatorics::{partitions, Bipartition, Partition};
use crate::error::{Error, Result};
use crate::exactalg::{BRegime, CherednikParameter, CoxeterGroup, Rational};
use crate::families::dihedral::sign_twist;
use crate::families::type_b::degenerate_j_induction;
use crate::families::type_d::restriction_labels;
use crate::families::{cm_families, dihedral_j_induction, lusztig_families, Family, FamilyPartition, Method};
use crate::reps::characters::Subgroup;
use crate::reps::{DihedralChar, IrrLabel, ParabolicChar};
use crate::symbols::family_content;

pub use leaves::{leaves_b, leaves_d, Leaf, LeafIndex, LeafPoset, ParabolicClass};
pub use rigid::{rigid_closed_form, rigid_modules, rigid_oracle, RigidMode, RigidityData};

/// The leaf poset of a type B or D group, or `None` for the other series.
pub fn leaf_poset(group: &CoxeterGroup, param: &CherednikParameter) -> Result<Option<LeafPoset>> {
    param.validate_for(group)?;
    Ok(match (*group, param) {
        (CoxeterGroup::B(n), CherednikParameter::B { c1, kappa }) => Some(leaves_b(n, c1, kappa)?),
        (CoxeterGroup::D(n), CherednikParameter::D { kappa }) if !kappa.is_zero() => Some(leaves_d(n, kappa)?),
        _ => None,
    })
}

fn bip(first: Partition, second: Partition) -> IrrLabel {
    IrrLabel::Bipartition(Bipartition::new(first, second))
}

/// A label lying in the family supported on the zero-dimensional leaf, if that leaf
/// exists.
fn point_leaf_label(group: &CoxeterGroup, param: &CherednikParameter) -> Result<Option<IrrLabel>> {
    Ok(match (*group, param) {
        (CoxeterGroup::A(_), _) => None,
        (CoxeterGroup::B(n), CherednikParameter::B { c1, kappa }) => {
            let poset = leaves_b(n, c1, kappa)?;
            match (poset.point_leaf().map(|l| &l.index), param.b_regime()) {
                (Some(LeafIndex::K(k)), Some(BRegime::Integral { m })) => {
                    let k = *k as u32;
                    let tall = Partition::rectangle(k, (k as i64 + m.abs()) as usize);
                    Some(if m >= 0 { bip(tall, Partition::empty()) } else { bip(Partition::empty(), tall) })
                }
                _ => None,
            }
        }
        (CoxeterGroup::D(n), CherednikParameter::D { kappa }) => {
            let poset = leaves_d(n, kappa)?;
            match poset.point_leaf().map(|l| &l.index) {
                Some(LeafIndex::K(k)) => {
                    let sq = Partition::rectangle(*k as u32, *k as usize);
                    let u = crate::combinatorics::UnorderedBipartition::new(sq, Partition::empty(), None)?;
                    Some(IrrLabel::Unordered(u))
                }
                _ => None,
            }
        }
        (CoxeterGroup::I2(_), _) => Some(IrrLabel::Dihedral(DihedralChar::Phi(1))),
        _ => unreachable!("validated parameter shape"),
    })
}

fn cm_cuspidal_flags(fp: &FamilyPartition) -> Result<Vec<bool>> {
    if fp.parameter.is_zero() {
        return Ok(vec![true; fp.len()]);
    }
    let label = point_leaf_label(&fp.group, &fp.parameter)?;
    Ok(fp.families().iter().map(|f| label.as_ref().is_some_and(|l| f.contains(l))).collect())
}

/// Images of the members of `source` under `j`, when `j` sends them to pairwise
/// distinct irreducibles with multiplicity one.
fn bijective_image<S, T: Ord>(source: &[S], mut j: impl FnMut(&S) -> Option<T>) -> Option<BTreeSet<T>> {
    let mut out = BTreeSet::new();
    for x in source {
        if !out.insert(j(x)?) {
            return None;
        }
    }
    Some(out)
}

/// Cuspidality of degenerate type B families: the family `{|λ⁽¹⁾| = i}` is checked for
/// a bijection from `{μ : |μ⁽¹⁾| = i'} × Irr S_{n−i'}` of `B_{i'} × S_{n−i'}`, `i' < n`,
/// directly or after the sign twist.
fn degenerate_b_flags(fp: &FamilyPartition, n: usize, c1: &Rational) -> Result<Vec<bool>> {
    let mut induced: Vec<BTreeSet<Bipartition>> = Vec::new();
    for i in 0..n {
        let source: Vec<(Bipartition, Partition)> = partitions(i)
            .into_iter()
            .flat_map(|m1| {
                partitions(n - i).into_iter().map(move |nu| (Bipartition::new(Partition::empty(), m1.clone()), nu))
            })
            .collect();
        let mut image = BTreeSet::new();
        let mut ok = true;
        for (mu, nu) in &source {
            match degenerate_j_induction(mu, nu, c1) {
                Ok(l) if image.insert(l.clone()) => {}
                _ => ok = false,
            }
        }
        if ok {
            induced.push(image);
        }
    }
    Ok(fp
        .families()
        .iter()
        .map(|f| {
            let members: BTreeSet<Bipartition> =
                f.members().iter().map(|l| l.as_bipartition().expect("type B label").clone()).collect();
            let twisted: BTreeSet<Bipartition> = members.iter().map(|b| b.sign_twist()).collect();
            !induced.iter().any(|img| *img == members || *img == twisted)
        })
        .collect())
}

/// Cuspidality of dihedral families from the `j`-induction of the families of `P₁`
/// and `P₂`.
fn dihedral_flags(fp: &FamilyPartition, m: usize, a: &Rational, b: &Rational) -> Result<Vec<bool>> {
    let mut induced: Vec<BTreeSet<DihedralChar>> = Vec::new();
    for (sub, p) in [(Subgroup::P1, b), (Subgroup::P2, a)] {
        let families: Vec<Vec<ParabolicChar>> = if p.is_zero() {
            vec![vec![ParabolicChar::Trivial, ParabolicChar::Psi]]
        } else {
            vec![vec![ParabolicChar::Trivial], vec![ParabolicChar::Psi]]
        };
        for f in families {
            let mut err = None;
            let image = bijective_image(&f, |&chi| match dihedral_j_induction(m, a, b, &sub, chi) {
                Ok(j) => match j.into_iter().collect::<Vec<_>>().as_slice() {
                    [(d, 1)] => Some(*d),
                    _ => None,
                },
                Err(e) => {
                    err = Some(e);
                    None
                }
            });
            if let Some(e) = err {
                return Err(e);
            }
            if let Some(img) = image {
                induced.push(img);
            }
        }
    }
    Ok(fp
        .families()
        .iter()
        .map(|f| {
            let members: BTreeSet<DihedralChar> = f.members().iter().map(|l| l.as_dihedral().expect("dihedral")).collect();
            let twisted: BTreeSet<DihedralChar> = members.iter().map(|&d| sign_twist(d)).collect();
            !induced.iter().any(|img| *img == members || *img == twisted)
        })
        .collect())
}

fn lusztig_cuspidal_flags(fp: &FamilyPartition) -> Result<Vec<bool>> {
    let none = || vec![false; fp.len()];
    if fp.parameter.is_zero() {
        return Ok(vec![true; fp.len()]);
    }
    Ok(match (fp.group, &fp.parameter) {
        (CoxeterGroup::A(_), _) => none(),
        (CoxeterGroup::B(n), CherednikParameter::B { c1, .. }) => match fp.parameter.b_regime() {
            Some(BRegime::Integral { m }) => {
                let m = usize::try_from(m).map_err(|_| Error::NegativeParameter(fp.parameter.to_string()))?;
                fp.families()
                    .iter()
                    .map(|f| {
                        !f.is_singleton()
                            && family_content(f.min_label().as_bipartition().expect("type B"), m).is_weakly_decreasing()
                    })
                    .collect()
            }
            Some(BRegime::Degenerate) => degenerate_b_flags(fp, n, c1)?,
            _ => none(),
        },
        (CoxeterGroup::D(n), CherednikParameter::D { kappa }) => {
            let b = lusztig_families(&CoxeterGroup::B(n), &CherednikParameter::B { c1: Rational::zero(), kappa: kappa.clone() })?;
            let flags = lusztig_cuspidal_flags(&b)?;
            let mut cusp_labels = BTreeSet::new();
            for (f, flag) in b.families().iter().zip(flags) {
                if flag {
                    for l in f.members() {
                        cusp_labels.extend(restriction_labels(l)?);
                    }
                }
            }
            fp.families().iter().map(|f| f.members().iter().any(|l| cusp_labels.contains(l))).collect()
        }
        (CoxeterGroup::I2(m), CherednikParameter::I2 { a, b }) => dihedral_flags(fp, m, a, b)?,
        _ => unreachable!("validated parameter shape"),
    })
}

/// Sets `cuspidal` on every family of `fp`.
pub fn mark_cuspidal(fp: &mut FamilyPartition) -> Result<()> {
    let flags = match fp.method {
        Method::CalogeroMoser => cm_cuspidal_flags(fp)?,
        Method::Lusztig => lusztig_cuspidal_flags(fp)?,
    };
    for (f, flag) in fp.families_mut().iter_mut().zip(flags) {
        f.cuspidal = Some(flag);
    }
    Ok(())
}

/// The families of `fp` marked cuspidal.
pub fn cuspidal_of(fp: &FamilyPartition) -> Vec<Family> {
    fp.families().iter().filter(|f| f.cuspidal == Some(true)).cloned().collect()
}

/// Family partition with cuspidality marked.
pub fn marked_families(group: &CoxeterGroup, param: &CherednikParameter, method: Method) -> Result<FamilyPartition> {
    let mut fp = match method {
        Method::CalogeroMoser => cm_families(group, param)?,
        Method::Lusztig => lusztig_families(group, param)?,
    };
    mark_cuspidal(&mut fp)?;
    Ok(fp)
}

/// Cuspidal families for the given method.
pub fn cuspidal_families(group: &CoxeterGroup, param: &CherednikParameter, method: Method) -> Result<Vec<Family>> {
    Ok(cuspidal_of(&marked_families(group, param, method)?))
}

/// Whether every rigid label lies in a cuspidal Calogero–Moser family.
pub fn rigid_implies_cuspidal_check(group: &CoxeterGroup, param: &CherednikParameter, mode: RigidMode) -> Result<bool> {
    let rigid = rigid_modules(group, param, mode)?;
    let fp = marked_families(group, param, Method::CalogeroMoser)?;
    Ok(rigid.iter().all(|l| fp.family_of(l).is_some_and(|f| f.cuspidal == Some(true))))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinatorics::binomial;
    use crate::exactalg::{rat, ratio};
    use crate::symbols::cuspidal_family;

    fn bparam(c1: i64, kappa: i64) -> CherednikParameter {
        CherednikParameter::B { c1: rat(c1), kappa: rat(kappa) }
    }

    fn members(f: &Family) -> Vec<IrrLabel> {
        f.members().to_vec()
    }

    fn fcusp(k: u32, m: u32) -> Vec<IrrLabel> {
        cuspidal_family(k, m).into_iter().map(IrrLabel::Bipartition).collect()
    }

    #[test]
    fn type_b_examples() {
        for method in [Method::CalogeroMoser, Method::Lusztig] {
            let c = cuspidal_families(&CoxeterGroup::B(6), &bparam(1, 1), method).unwrap();
            assert_eq!(c.len(), 1);
            assert_eq!(members(&c[0]), fcusp(2, 1));
            assert_eq!(c[0].len(), 10);
            let c = cuspidal_families(&CoxeterGroup::B(3), &bparam(2, 1), method).unwrap();
            assert_eq!(members(&c[0]), fcusp(1, 2));
            assert_eq!(c[0].len(), 4);
            assert!(cuspidal_families(&CoxeterGroup::B(5), &bparam(1, 1), method).unwrap().is_empty());
        }
    }

    #[test]
    fn type_b_cm_equals_lusztig() {
        for n in 1..=7 {
            for m in 0..n as i64 {
                let g = CoxeterGroup::B(n);
                let cm = cuspidal_families(&g, &bparam(m, 1), Method::CalogeroMoser).unwrap();
                let lus = cuspidal_families(&g, &bparam(m, 1), Method::Lusztig).unwrap();
                assert_eq!(cm.iter().map(members).collect::<Vec<_>>(), lus.iter().map(members).collect::<Vec<_>>());
                match crate::symbols::cuspidal_k(n, m as usize) {
                    Some(k) => {
                        assert_eq!(cm.len(), 1);
                        assert_eq!(cm[0].len() as u64, binomial(2 * k as u64 + m as u64, k as u64));
                    }
                    None => assert!(cm.is_empty()),
                }
            }
        }
    }

    #[test]
    fn degenerate_and_generic_have_none() {
        for n in 1..=5 {
            let g = CoxeterGroup::B(n);
            for p in [bparam(1, 0), CherednikParameter::B { c1: ratio(1, 2), kappa: rat(1) }] {
                for method in [Method::CalogeroMoser, Method::Lusztig] {
                    assert!(cuspidal_families(&g, &p, method).unwrap().is_empty(), "n = {n}, {p}");
                }
            }
            let zero = cuspidal_families(&g, &bparam(0, 0), Method::Lusztig).unwrap();
            assert_eq!(zero.len(), 1);
        }
    }

    #[test]
    fn negative_m_uses_swapped_labels() {
        let c = cuspidal_families(&CoxeterGroup::B(6), &bparam(-1, 1), Method::CalogeroMoser).unwrap();
        let swapped: Vec<IrrLabel> = fcusp(2, 1)
            .into_iter()
            .map(|l| IrrLabel::Bipartition(l.as_bipartition().unwrap().swapped()))
            .collect::<BTreeSet<_>>()
            .into_iter()
            .collect();
        assert_eq!(members(&c[0]), swapped);
    }

    #[test]
    fn type_d_cm_equals_lusztig() {
        for n in 2..=9 {
            let g = CoxeterGroup::D(n);
            let p = CherednikParameter::D { kappa: rat(1) };
            let cm = cuspidal_families(&g, &p, Method::CalogeroMoser).unwrap();
            let lus = cuspidal_families(&g, &p, Method::Lusztig).unwrap();
            assert_eq!(cm, lus, "n = {n}");
            assert_eq!(cm.len(), usize::from(matches!(n, 4 | 9)));
        }
    }

    fn dihedral_expected(m: usize, a: i64, b: i64) -> BTreeSet<DihedralChar> {
        let mut out: BTreeSet<DihedralChar> = (1..=DihedralChar::num_phi(m)).map(DihedralChar::Phi).collect();
        if a == b && m % 2 == 0 {
            out.extend([DihedralChar::Eps1, DihedralChar::Eps2]);
        }
        out
    }

    #[test]
    fn dihedral_cuspidal_lemma() {
        for m in 5..=12 {
            for (a, b) in [(1, 1), (1, 2), (0, 1), (2, 1), (1, 0)] {
                if m % 2 == 1 && a != b {
                    continue;
                }
                let p = CherednikParameter::I2 { a: rat(a), b: rat(b) };
                for method in [Method::CalogeroMoser, Method::Lusztig] {
                    let c = cuspidal_families(&CoxeterGroup::I2(m), &p, method).unwrap();
                    assert_eq!(c.len(), 1);
                    let got: BTreeSet<DihedralChar> = c[0].members().iter().map(|l| l.as_dihedral().unwrap()).collect();
                    assert_eq!(got, dihedral_expected(m, a, b), "m = {m}, a = {a}, b = {b}, {method}");
                }
            }
        }
    }

    #[test]
    fn type_a() {
        let g = CoxeterGroup::A(4);
        assert!(cuspidal_families(&g, &CherednikParameter::A { c: rat(1) }, Method::Lusztig).unwrap().is_empty());
        assert_eq!(cuspidal_families(&g, &CherednikParameter::A { c: rat(0) }, Method::CalogeroMoser).unwrap().len(), 1);
    }

    #[test]
    fn rigid_implies_cuspidal() {
        for n in 1..=6 {
            for m in -(n as i64 - 1)..n as i64 {
                assert!(rigid_implies_cuspidal_check(&CoxeterGroup::B(n), &bparam(m, 1), RigidMode::Closed).unwrap());
            }
        }
        let p = CherednikParameter::I2 { a: rat(1), b: rat(-1) };
        assert!(rigid_implies_cuspidal_check(&CoxeterGroup::I2(8), &p, RigidMode::Oracle).unwrap());
    }
}
