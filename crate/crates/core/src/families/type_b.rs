//! Families of the hyperoctahedral group.

use std::collections::BTreeMap;

use num::{Signed, Zero};

use super::{classes_by_key, FamilyPartition};
use crate::combinatorics::{bipartitions, lr_coefficient, partitions, Bipartition, Partition};
use crate::error::{Error, Result};
use crate::exactalg::{charged_residue, rat, BRegime, CherednikParameter, Rational};
use crate::reps::IrrLabel;
use crate::symbols::{family_content, symbol_of};

fn labels(n: usize) -> Vec<IrrLabel> {
    bipartitions(n).into_iter().map(IrrLabel::Bipartition).collect()
}

fn bip(l: &IrrLabel) -> &Bipartition {
    l.as_bipartition().expect("type B labels are bipartitions")
}

/// Classes of equal charged residue for the charge `(0, c₁, −κ)`.
pub fn cm_blocks(n: usize, c1: &Rational, kappa: &Rational) -> Vec<Vec<IrrLabel>> {
    let zero = rat(0);
    let neg_kappa = -kappa.clone();
    classes_by_key(labels(n), |l| charged_residue(bip(l), (&zero, c1, &neg_kappa)))
}

/// Lusztig families for nonnegative `(c₁, κ)`, not both zero.
pub fn lusztig_blocks(n: usize, c1: &Rational, kappa: &Rational) -> Result<Vec<Vec<IrrLabel>>> {
    if c1.is_negative() || kappa.is_negative() {
        return Err(Error::NegativeParameter(format!("(c1, kappa) = ({c1}, {kappa})")));
    }
    let param = CherednikParameter::B { c1: c1.clone(), kappa: kappa.clone() };
    Ok(match param.b_regime().expect("type B parameter") {
        BRegime::Zero => vec![labels(n)],
        BRegime::Degenerate => classes_by_key(labels(n), |l| bip(l).second.size()),
        BRegime::Integral { m } => classes_by_key(labels(n), |l| family_content(bip(l), m as usize)),
        BRegime::Generic => labels(n).into_iter().map(|l| vec![l]).collect(),
    })
}

/// `k_F` of the family containing `bp` at the integral parameter `c₁ = mκ`, `κ ≠ 0`.
/// Negative `m` is reduced to `−m` by exchanging components.
pub fn k_invariant(bp: &Bipartition, m: i64) -> u64 {
    let (bp, m) = if m < 0 { (bp.swapped(), -m) } else { (bp.clone(), m) };
    let big_n = bp.size().max(1);
    symbol_of(&bp, big_n, &rat(m), &rat(1)).expect("N >= n suffices").family_k_invariant().0
}

/// Fills `k_invariant` and the leaf label `B_{k(k+|m|)}` for type B partitions at
/// integral non-degenerate parameters.
pub fn annotate_k_invariants(fp: &mut FamilyPartition) {
    let Some(BRegime::Integral { m }) = fp.parameter.b_regime() else {
        return;
    };
    for f in fp.families_mut() {
        let k = k_invariant(bip(f.min_label()), m);
        f.k_invariant = Some(k);
        f.leaf_label = Some(format!("B{}", k * (k + m.unsigned_abs())));
    }
}

/// The `a`-invariant `c₁ |λ⁽¹⁾|` at `κ = 0`.
pub fn degenerate_a_value(bp: &Bipartition, c1: &Rational) -> Rational {
    c1 * rat(bp.second.size() as i64)
}

/// `Ind_{B_i × S_{n−i}}^{B_n} (π_μ ⊠ π_ν)` expanded through Littlewood–Richardson
/// coefficients and truncated to the constituents with the `a`-invariant of `μ ⊠ ν`.
pub fn degenerate_j_induction_expansion(
    mu: &Bipartition,
    nu: &Partition,
    c1: &Rational,
) -> Result<BTreeMap<Bipartition, u64>> {
    if !mu.first.is_empty() {
        return Err(Error::Precondition(format!("the first component of {mu} must be empty")));
    }
    if c1.is_zero() {
        return Err(Error::Precondition("degenerate j-induction needs c1 != 0".into()));
    }
    let k = nu.size();
    let target = degenerate_a_value(mu, c1);
    let mut out = BTreeMap::new();
    for j in 0..=k {
        for a0 in partitions(k - j) {
            for a1 in partitions(j) {
                let c_nu = lr_coefficient(&a0, &a1, nu);
                if c_nu == 0 {
                    continue;
                }
                for l0 in partitions(mu.first.size() + a0.size()) {
                    let c0 = lr_coefficient(&mu.first, &a0, &l0);
                    if c0 == 0 {
                        continue;
                    }
                    for l1 in partitions(mu.second.size() + a1.size()) {
                        let c1_coef = lr_coefficient(&mu.second, &a1, &l1);
                        if c1_coef == 0 {
                            continue;
                        }
                        let lam = Bipartition::new(l0.clone(), l1);
                        if degenerate_a_value(&lam, c1) == target {
                            *out.entry(lam).or_insert(0) += c_nu * c0 * c1_coef;
                        }
                    }
                }
            }
        }
    }
    Ok(out)
}

/// The single constituent of the truncated induction, which is `(ν, μ⁽¹⁾)`.
pub fn degenerate_j_induction(mu: &Bipartition, nu: &Partition, c1: &Rational) -> Result<Bipartition> {
    let exp = degenerate_j_induction_expansion(mu, nu, c1)?;
    match exp.iter().collect::<Vec<_>>().as_slice() {
        [(lam, 1)] => Ok((*lam).clone()),
        _ => Err(Error::Precondition(format!("truncated induction of {mu} x {nu} is not irreducible: {exp:?}"))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::CoxeterGroup;
    use crate::reps::characters::{CharacterTable, Subgroup, SubgroupChar};
    use crate::reps::induced_character;

    fn bp(a: &[u32], b: &[u32]) -> Bipartition {
        Bipartition::from_parts(a, b).unwrap()
    }

    fn p(v: &[u32]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    #[test]
    fn j_induction_examples() {
        assert_eq!(degenerate_j_induction(&bp(&[], &[1]), &p(&[2]), &rat(1)).unwrap(), bp(&[2], &[1]));
        assert_eq!(degenerate_j_induction(&bp(&[], &[]), &p(&[4]), &rat(1)).unwrap(), bp(&[4], &[]));
        assert!(degenerate_j_induction(&bp(&[1], &[]), &p(&[1]), &rat(1)).is_err());
    }

    #[test]
    fn j_induction_against_class_fusion() {
        for n in 1..=4 {
            let table = CharacterTable::of(&CoxeterGroup::B(n)).unwrap();
            for i in 0..=n {
                for m1 in partitions(i) {
                    let mu = Bipartition::new(Partition::empty(), m1);
                    for nu in partitions(n - i) {
                        let sub = Subgroup::YoungTimesB { young: Partition::new(vec![(n - i) as u32]).unwrap(), b_rank: i };
                        let blocks = if nu.is_empty() { vec![] } else { vec![nu.clone()] };
                        let chi = SubgroupChar::YoungTimesB(blocks, mu.clone());
                        let ind = induced_character(&table, &sub, &chi).unwrap();
                        let target = degenerate_a_value(&mu, &rat(2));
                        let filtered: BTreeMap<Bipartition, u64> = ind
                            .decomposition
                            .iter()
                            .filter_map(|(l, &c)| {
                                let b = l.as_bipartition().unwrap();
                                (degenerate_a_value(b, &rat(2)) == target).then(|| (b.clone(), c))
                            })
                            .collect();
                        assert_eq!(filtered, degenerate_j_induction_expansion(&mu, &nu, &rat(2)).unwrap());
                        assert_eq!(
                            degenerate_j_induction(&mu, &nu, &rat(2)).unwrap(),
                            Bipartition::new(nu.clone(), mu.second.clone())
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn k_invariants() {
        assert_eq!(k_invariant(&bp(&[1], &[3, 2]), 1), 2);
        assert_eq!(k_invariant(&bp(&[3, 2], &[1]), -1), 2);
        assert_eq!(k_invariant(&bp(&[6], &[]), 1), 0);
    }
}
