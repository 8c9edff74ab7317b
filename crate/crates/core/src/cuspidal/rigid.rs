//! Rigid modules: the closed-form classification and a brute-force evaluation of the
//! rigidity sum `Σ_s c(s) (y_k, α_s)(α_s^∨, x_l) λ(s)` on explicit matrices.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use num::Zero;
use itertools::Itertools;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::combinatorics::{bipartitions, partitions, Bipartition, Partition, UnorderedBipartition};
use crate::error::{Error, Result};
use crate::exactalg::{rat, BRegime, CherednikParameter, CoxeterGroup, CyclotomicField, Matrix, Rational, Scalar};
use crate::families::type_d::restriction_labels;
use crate::reps::dihedral::reflection_matrix;
use crate::reps::{irreducible_labels, DihedralChar, DihedralElement, HyperoctahedralRep, IrrLabel, Perm, SeminormalRep, SignedPerm};

/// Largest rank (type B and D) for the equation oracle.
pub const ORACLE_MAX_RANK_B: usize = 5;
/// Largest `n` for type A in the equation oracle.
pub const ORACLE_MAX_RANK_A: usize = 6;
/// Largest `m` for `I₂(m)` in the equation oracle.
pub const ORACLE_MAX_DIHEDRAL: usize = 16;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum RigidMode {
    Closed,
    Oracle,
}

impl fmt::Display for RigidMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            RigidMode::Closed => "closed",
            RigidMode::Oracle => "oracle",
        })
    }
}

impl FromStr for RigidMode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "closed" => Ok(RigidMode::Closed),
            "oracle" => Ok(RigidMode::Oracle),
            _ => Err(Error::Parse(format!("unknown rigid mode `{s}` (expected closed or oracle)"))),
        }
    }
}

/// Rigid labels of `group` at `param`, sorted.
pub fn rigid_modules(group: &CoxeterGroup, param: &CherednikParameter, mode: RigidMode) -> Result<Vec<IrrLabel>> {
    match mode {
        RigidMode::Closed => rigid_closed_form(group, param),
        RigidMode::Oracle => rigid_oracle(group, param),
    }
}

fn bip(first: Partition, second: Partition) -> IrrLabel {
    IrrLabel::Bipartition(Bipartition::new(first, second))
}

fn sorted(mut labels: Vec<IrrLabel>) -> Vec<IrrLabel> {
    labels.sort();
    labels.dedup();
    labels
}

/// The two rigid type B labels at `c₁ = mκ`, `κ ≠ 0`, when `n = k(k+|m|)` with `k > 0`.
fn rigid_b(n: usize, m: i64) -> Vec<IrrLabel> {
    let am = m.unsigned_abs() as usize;
    let Some(k) = (1..=n).take_while(|k| k * (k + am) <= n).find(|k| k * (k + am) == n) else {
        return Vec::new();
    };
    let tall = Partition::rectangle(k as u32, k + am);
    let wide = Partition::rectangle((k + am) as u32, k);
    let e = Partition::empty;
    let out = if m >= 0 { vec![bip(tall, e()), bip(e(), wide)] } else { vec![bip(e(), tall), bip(wide, e())] };
    sorted(out)
}

/// Rigid characters of `I₂(m)` at a nonzero `(a, b)`.
fn rigid_dihedral(m: usize, a: &Rational, b: &Rational) -> Vec<IrrLabel> {
    let nphi = DihedralChar::num_phi(m);
    let mut out: BTreeSet<DihedralChar> =
        (2..=nphi).filter(|&i| m % 2 == 1 || i < nphi).map(DihedralChar::Phi).collect();
    if a == b {
        out.insert(DihedralChar::Phi(nphi));
        if m % 2 == 0 {
            out.extend([DihedralChar::Eps1, DihedralChar::Eps2]);
        }
    }
    if *a == -b.clone() {
        out.extend([DihedralChar::Trivial, DihedralChar::Sign, DihedralChar::Phi(1)]);
    }
    out.into_iter().map(IrrLabel::Dihedral).collect()
}

/// The classification of rigid labels.
pub fn rigid_closed_form(group: &CoxeterGroup, param: &CherednikParameter) -> Result<Vec<IrrLabel>> {
    param.validate_for(group)?;
    if param.is_zero() {
        return Ok(irreducible_labels(group));
    }
    Ok(match (*group, param) {
        (CoxeterGroup::A(_), _) => Vec::new(),
        (CoxeterGroup::B(n), p) => match p.b_regime().expect("type B parameter") {
            BRegime::Integral { m } => rigid_b(n, m),
            _ => Vec::new(),
        },
        (CoxeterGroup::D(n), _) => {
            let k = (1..=n).take_while(|k| k * k <= n).find(|k| k * k == n);
            match k {
                Some(k) => {
                    let sq = Partition::rectangle(k as u32, k);
                    let u = UnorderedBipartition::new(sq, Partition::empty(), None)?;
                    vec![IrrLabel::Unordered(u)]
                }
                None => Vec::new(),
            }
        }
        (CoxeterGroup::I2(m), CherednikParameter::I2 { a, b }) => rigid_dihedral(m, a, b),
        _ => unreachable!("validated parameter shape"),
    })
}

/// Per label, per basis pair `(k, l)`, per reflection class: `Σ_s (I − S)_{l,k} λ(s)`.
#[derive(Clone, Debug)]
pub struct RigidityData<F> {
    pub labels: Vec<IrrLabel>,
    sums: Vec<Vec<Vec<Matrix<F>>>>,
}

impl<F: Scalar> RigidityData<F> {
    /// `reflections` lists `(class, S)`; `rep(label, i)` is the matrix of reflection `i`.
    fn build<R>(labels: Vec<IrrLabel>, classes: usize, reflections: &[(usize, Matrix<F>)], rep: R) -> Self
    where
        R: Fn(&IrrLabel) -> Vec<Matrix<F>> + Sync,
    {
        let rank = reflections[0].1.rows();
        let sums = labels
            .par_iter()
            .map(|label| {
                let mats = rep(label);
                let dim = mats[0].rows();
                let proto = mats[0].get(0, 0).zero_like();
                let one = proto.one_like();
                let mut out = vec![vec![Matrix::zeros(dim, dim, &proto); classes]; rank * rank];
                for ((class, s), mat) in reflections.iter().zip(&mats) {
                    for k in 0..rank {
                        for l in 0..rank {
                            let delta = if k == l { one.clone() } else { proto.clone() };
                            let coeff = delta.sub_ref(s.get(l, k));
                            out[k * rank + l][*class].add_scaled(&coeff, mat);
                        }
                    }
                }
                out
            })
            .collect();
        RigidityData { labels, sums }
    }

    /// Labels whose rigidity sums vanish for the class values `values`.
    pub fn rigid(&self, values: &[Rational]) -> Vec<IrrLabel> {
        self.labels
            .iter()
            .zip(&self.sums)
            .filter(|(_, per_pair)| {
                per_pair.iter().all(|per_class| {
                    let mut acc = per_class[0].scale(&per_class[0].get(0, 0).zero_like());
                    for (v, m) in values.iter().zip(per_class) {
                        acc.add_scaled(&m.get(0, 0).rational_like(v), m);
                    }
                    acc.is_zero()
                })
            })
            .map(|(l, _)| l.clone())
            .sorted()
            .collect()
    }
}

fn int_matrix(rows: Vec<Vec<i64>>) -> Matrix<Rational> {
    Matrix::from_rows(rows.into_iter().map(|r| r.into_iter().map(rat).collect()).collect())
}

/// Data for `B_n`: class 0 holds the sign changes, class 1 the reflections `s_{ij,±}`.
pub fn rigidity_data_b(n: usize) -> Result<RigidityData<Rational>> {
    if n == 0 || n > ORACLE_MAX_RANK_B {
        return Err(Error::OutOfScale(format!("the type B rigidity oracle needs 1 <= n <= {ORACLE_MAX_RANK_B}")));
    }
    let refl = SignedPerm::reflections(n);
    let reflections: Vec<(usize, Matrix<Rational>)> =
        refl.iter().map(|s| (usize::from(!s.is_sign_change()), int_matrix(s.monomial_matrix()))).collect();
    let labels = bipartitions(n).into_iter().map(IrrLabel::Bipartition).collect();
    Ok(RigidityData::build(labels, 2, &reflections, |label| {
        let rep = HyperoctahedralRep::new(label.as_bipartition().expect("type B label"));
        refl.iter().map(|s| rep.matrix_of(s)).collect()
    }))
}

/// Data for `S_n` acting on `ℂ^n` by permutations.
pub fn rigidity_data_a(n: usize) -> Result<RigidityData<Rational>> {
    if !(2..=ORACLE_MAX_RANK_A).contains(&n) {
        return Err(Error::OutOfScale(format!("the type A rigidity oracle needs 2 <= n <= {ORACLE_MAX_RANK_A}")));
    }
    let transpositions: Vec<Perm> =
        (0..n).flat_map(|i| (i + 1..n).map(move |j| Perm::transposition(n, i, j))).collect();
    let reflections: Vec<(usize, Matrix<Rational>)> = transpositions
        .iter()
        .map(|p| {
            let rows = (0..n).map(|r| (0..n).map(|c| i64::from(p.img[c] == r)).collect()).collect();
            (0, int_matrix(rows))
        })
        .collect();
    let labels = partitions(n).into_iter().map(IrrLabel::Partition).collect();
    Ok(RigidityData::build(labels, 1, &reflections, |label| {
        let IrrLabel::Partition(lam) = label else { unreachable!("type A label") };
        let rep = SeminormalRep::new(lam);
        transpositions.iter().map(|p| rep.matrix_of(p)).collect()
    }))
}

/// Data for `I₂(m)` over `ℚ(ζ_m)`: class 0 is the class of `s`, class 1 that of `t`.
pub fn rigidity_data_dihedral(m: usize) -> Result<RigidityData<crate::exactalg::Cyclotomic>> {
    CoxeterGroup::I2(m).validate()?;
    if m > ORACLE_MAX_DIHEDRAL {
        return Err(Error::OutOfScale(format!("the dihedral rigidity oracle needs m <= {ORACLE_MAX_DIHEDRAL}")));
    }
    let field = CyclotomicField::new(m);
    let refl = DihedralElement::reflections(m);
    let reflections: Vec<_> = refl
        .iter()
        .map(|s| (usize::from(!s.in_s_class()), reflection_matrix(s.rot as i64, &field)))
        .collect();
    let labels = DihedralChar::all(m).into_iter().map(IrrLabel::Dihedral).collect();
    Ok(RigidityData::build(labels, 2, &reflections, |label| {
        let chi = label.as_dihedral().expect("dihedral label");
        refl.iter().map(|s| chi.matrix(s, &field)).collect()
    }))
}

/// Evaluates the rigidity equation on explicit matrices. Type D is evaluated on the
/// restrictions of the `B_n` representations, whose matrices on the reflections of
/// `D_n` are those of the restricted module.
pub fn rigid_oracle(group: &CoxeterGroup, param: &CherednikParameter) -> Result<Vec<IrrLabel>> {
    param.validate_for(group)?;
    Ok(match (*group, param) {
        (CoxeterGroup::A(n), CherednikParameter::A { c }) => rigidity_data_a(n)?.rigid(std::slice::from_ref(c)),
        (CoxeterGroup::B(n), CherednikParameter::B { c1, kappa }) => {
            rigidity_data_b(n)?.rigid(&[c1.clone(), kappa.clone()])
        }
        (CoxeterGroup::D(n), CherednikParameter::D { kappa }) => {
            let mut out = Vec::new();
            for label in rigidity_data_b(n)?.rigid(&[Rational::zero(), kappa.clone()]) {
                out.extend(restriction_labels(&label)?);
            }
            sorted(out)
        }
        (CoxeterGroup::I2(m), CherednikParameter::I2 { a, b }) => rigidity_data_dihedral(m)?.rigid(&[b.clone(), a.clone()]),
        _ => unreachable!("validated parameter shape"),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::ratio;

    fn b(first: &[u32], second: &[u32]) -> IrrLabel {
        IrrLabel::Bipartition(Bipartition::from_parts(first, second).unwrap())
    }

    fn bparam(c1: Rational, kappa: Rational) -> CherednikParameter {
        CherednikParameter::B { c1, kappa }
    }

    #[test]
    fn type_b_examples() {
        let g = CoxeterGroup::B(4);
        let expected = vec![b(&[], &[2, 2]), b(&[2, 2], &[])];
        assert_eq!(rigid_closed_form(&g, &bparam(rat(0), rat(1))).unwrap(), expected);
        assert_eq!(rigid_oracle(&g, &bparam(rat(0), rat(1))).unwrap(), expected);
        let g = CoxeterGroup::B(2);
        let expected = vec![b(&[], &[2]), b(&[1, 1], &[])];
        assert_eq!(rigid_closed_form(&g, &bparam(rat(1), rat(1))).unwrap(), expected);
        assert_eq!(rigid_oracle(&g, &bparam(rat(1), rat(1))).unwrap(), expected);
    }

    #[test]
    fn type_b_oracle_matches_closed_form() {
        for n in 1..=4 {
            let data = rigidity_data_b(n).unwrap();
            for m in -(n as i64 - 1)..=(n as i64 - 1) {
                for kappa in [rat(1), rat(-2)] {
                    let c1 = rat(m) * &kappa;
                    let closed = rigid_closed_form(&CoxeterGroup::B(n), &bparam(c1.clone(), kappa.clone())).unwrap();
                    assert_eq!(data.rigid(&[c1, kappa]), closed, "n = {n}, m = {m}");
                }
            }
            for (c1, kappa) in [(ratio(1, 2), rat(1)), (rat(1), rat(0)), (rat(n as i64 + 1), rat(1))] {
                assert!(data.rigid(&[c1, kappa]).is_empty());
            }
            assert_eq!(data.rigid(&[rat(0), rat(0)]).len(), bipartitions(n).len());
        }
    }

    #[test]
    fn type_a_has_no_rigids() {
        for n in 2..=5 {
            let g = CoxeterGroup::A(n);
            assert!(rigid_oracle(&g, &CherednikParameter::A { c: rat(1) }).unwrap().is_empty());
            assert_eq!(rigid_oracle(&g, &CherednikParameter::A { c: rat(0) }).unwrap().len(), partitions(n).len());
        }
    }

    #[test]
    fn type_d_oracle_matches_closed_form() {
        for n in 2..=5 {
            let g = CoxeterGroup::D(n);
            let p = CherednikParameter::D { kappa: rat(1) };
            assert_eq!(rigid_oracle(&g, &p).unwrap(), rigid_closed_form(&g, &p).unwrap(), "n = {n}");
        }
        let closed = rigid_closed_form(&CoxeterGroup::D(4), &CherednikParameter::D { kappa: rat(3) }).unwrap();
        assert_eq!(closed.len(), 1);
    }

    #[test]
    fn dihedral_oracle_matches_closed_form() {
        for m in 5..=10 {
            let data = rigidity_data_dihedral(m).unwrap();
            for (a, bv) in [(1, 1), (1, 2), (0, 1), (2, 1), (1, 0), (1, -1), (-3, 3), (-1, -1)] {
                if m % 2 == 1 && a != bv {
                    continue;
                }
                let (a, bv) = (rat(a), rat(bv));
                let p = CherednikParameter::I2 { a: a.clone(), b: bv.clone() };
                let closed = rigid_closed_form(&CoxeterGroup::I2(m), &p).unwrap();
                assert_eq!(data.rigid(&[bv.clone(), a.clone()]), closed, "m = {m}, a = {a}, b = {bv}");
            }
        }
    }

    #[test]
    fn oracle_rejects_large_groups() {
        assert!(matches!(rigid_oracle(&CoxeterGroup::B(6), &bparam(rat(1), rat(1))), Err(Error::OutOfScale(_))));
        let p = CherednikParameter::I2 { a: rat(1), b: rat(1) };
        assert!(matches!(rigid_oracle(&CoxeterGroup::I2(17), &p), Err(Error::OutOfScale(_))));
    }

    #[test]
    fn mode_parsing() {
        assert_eq!("oracle".parse::<RigidMode>().unwrap(), RigidMode::Oracle);
        assert!("fast".parse::<RigidMode>().is_err());
    }
}
