//! Families of the dihedral group `I₂(m)`. The parameter `b` sits on the class of `s`
//! and `a` on the class of `t`.

use std::collections::BTreeMap;

use num::{Signed, Zero};

use super::{classes_by_key, connected_components};
use crate::error::{Error, Result};
use crate::exactalg::{rat, CoxeterGroup, CyclotomicField, Rational, Scalar};
use crate::reps::characters::{CharacterTable, Subgroup, SubgroupChar};
use crate::reps::{build_dihedral_table, induced_character, DihedralChar, DihedralElement, IrrLabel, ParabolicChar};

/// Position of a nonnegative parameter `(a, b) ≠ (0, 0)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum DihedralRegime {
    /// `b = a > 0`.
    Equal,
    /// `b > a > 0`.
    BAbovePositiveA,
    /// `b > a = 0`.
    BAboveZeroA,
    /// `a > b > 0`.
    AAbovePositiveB,
    /// `a > b = 0`.
    AAboveZeroB,
}

impl DihedralRegime {
    pub fn of(a: &Rational, b: &Rational) -> Result<Self> {
        if a.is_negative() || b.is_negative() {
            return Err(Error::NegativeParameter(format!(
                "dihedral Lusztig data need a, b >= 0, got a={a}, b={b}; twist by a linear character first"
            )));
        }
        if a.is_zero() && b.is_zero() {
            return Err(Error::Precondition("a and b are both zero".into()));
        }
        Ok(if a == b {
            DihedralRegime::Equal
        } else if b > a {
            if a.is_zero() {
                DihedralRegime::BAboveZeroA
            } else {
                DihedralRegime::BAbovePositiveA
            }
        } else if b.is_zero() {
            DihedralRegime::AAboveZeroB
        } else {
            DihedralRegime::AAbovePositiveB
        })
    }

    pub fn all() -> [DihedralRegime; 5] {
        [
            DihedralRegime::Equal,
            DihedralRegime::BAbovePositiveA,
            DihedralRegime::BAboveZeroA,
            DihedralRegime::AAbovePositiveB,
            DihedralRegime::AAboveZeroB,
        ]
    }

    /// A representative `(a, b)`.
    pub fn sample(&self) -> (Rational, Rational) {
        let (a, b) = match self {
            DihedralRegime::Equal => (1, 1),
            DihedralRegime::BAbovePositiveA => (1, 2),
            DihedralRegime::BAboveZeroA => (0, 1),
            DihedralRegime::AAbovePositiveB => (2, 1),
            DihedralRegime::AAboveZeroB => (1, 0),
        };
        (rat(a), rat(b))
    }

    pub fn name(&self) -> &'static str {
        match self {
            DihedralRegime::Equal => "b=a>0",
            DihedralRegime::BAbovePositiveA => "b>a>0",
            DihedralRegime::BAboveZeroA => "b>a=0",
            DihedralRegime::AAbovePositiveB => "a>b>0",
            DihedralRegime::AAboveZeroB => "a>b=0",
        }
    }
}

fn check(m: usize, a: &Rational, b: &Rational) -> Result<()> {
    CoxeterGroup::I2(m).validate()?;
    if m % 2 == 1 && a != b {
        return Err(Error::ParameterShape(format!("I2({m}) with m odd needs a = b")));
    }
    Ok(())
}

/// `Σ_{x ∈ Ref(W)} c(x) χ(x)/χ(1)`, computed from the representation matrices.
pub fn euler_value(chi: DihedralChar, m: usize, a: &Rational, b: &Rational) -> Rational {
    let field = CyclotomicField::new(m);
    let dim = rat(chi.dim() as i64);
    DihedralElement::reflections(m)
        .iter()
        .map(|x| {
            let c = if x.in_s_class() { b } else { a };
            let v = chi.value(x, &field).to_rational().expect("reflection values are rational");
            c * v / &dim
        })
        .sum()
}

/// Classes of equal Euler value.
pub fn euler_families(m: usize, a: &Rational, b: &Rational) -> Vec<Vec<IrrLabel>> {
    let labels = DihedralChar::all(m).into_iter().map(IrrLabel::Dihedral).collect();
    classes_by_key(labels, |l| euler_value(l.as_dihedral().expect("dihedral label"), m, a, b))
}

/// Lusztig's `a`-function on `Irr W`.
pub fn a_value(chi: DihedralChar, m: usize, a: &Rational, b: &Rational) -> Result<Rational> {
    check(m, a, b)?;
    let regime = DihedralRegime::of(a, b)?;
    let half_m = Rational::new((m as i64).into(), 2.into());
    Ok(match (regime, chi) {
        (_, DihedralChar::Trivial) => rat(0),
        (DihedralRegime::Equal, DihedralChar::Sign) => rat(m as i64) * a,
        (DihedralRegime::Equal, _) => a.clone(),
        (_, DihedralChar::Sign) => half_m * (a + b),
        (DihedralRegime::BAbovePositiveA | DihedralRegime::BAboveZeroA, DihedralChar::Phi(_)) => b.clone(),
        (DihedralRegime::BAbovePositiveA | DihedralRegime::BAboveZeroA, DihedralChar::Eps1) => a.clone(),
        (DihedralRegime::BAbovePositiveA | DihedralRegime::BAboveZeroA, DihedralChar::Eps2) => half_m * (b - a) + a,
        (_, DihedralChar::Phi(_)) => a.clone(),
        (_, DihedralChar::Eps1) => half_m * (a - b) + b,
        (_, DihedralChar::Eps2) => b.clone(),
    })
}

/// The `a`-function of the parabolic subgroups `P₁ = ⟨s⟩` and `P₂ = ⟨t⟩`.
pub fn parabolic_a_value(sub: &Subgroup, chi: ParabolicChar, a: &Rational, b: &Rational) -> Result<Rational> {
    Ok(match (sub, chi) {
        (Subgroup::P1 | Subgroup::P2, ParabolicChar::Trivial) => rat(0),
        (Subgroup::P1, ParabolicChar::Psi) => b.clone(),
        (Subgroup::P2, ParabolicChar::Psi) => a.clone(),
        _ => return Err(Error::UnsupportedSubgroup(format!("{sub:?} is not a dihedral parabolic"))),
    })
}

fn truncate(
    table: &CharacterTable,
    m: usize,
    a: &Rational,
    b: &Rational,
    sub: &Subgroup,
    chi: ParabolicChar,
) -> Result<BTreeMap<DihedralChar, u64>> {
    let target = parabolic_a_value(sub, chi, a, b)?;
    let ind = induced_character(table, sub, &SubgroupChar::Parabolic(chi))?;
    let mut out = BTreeMap::new();
    for (label, &mult) in &ind.decomposition {
        let d = label.as_dihedral().expect("dihedral label");
        if a_value(d, m, a, b)? == target {
            out.insert(d, mult);
        }
    }
    Ok(out)
}

/// `j_{P}^{W} χ`: the constituents of `Ind_P^W χ` with the `a`-value of `χ`.
pub fn dihedral_j_induction(
    m: usize,
    a: &Rational,
    b: &Rational,
    sub: &Subgroup,
    chi: ParabolicChar,
) -> Result<BTreeMap<DihedralChar, u64>> {
    check(m, a, b)?;
    DihedralRegime::of(a, b)?;
    let table = build_dihedral_table(m)?;
    truncate(&table, m, a, b, sub, chi)
}

/// `χ ⊗ ε`.
pub fn sign_twist(chi: DihedralChar) -> DihedralChar {
    match chi {
        DihedralChar::Trivial => DihedralChar::Sign,
        DihedralChar::Sign => DihedralChar::Trivial,
        DihedralChar::Eps1 => DihedralChar::Eps2,
        DihedralChar::Eps2 => DihedralChar::Eps1,
        DihedralChar::Phi(i) => DihedralChar::Phi(i),
    }
}

/// Constructible characters: truncated inductions of the constructible characters of
/// `P₁` and `P₂` and their sign twists. A parabolic with zero parameter has the single
/// constructible `1 + ψ`.
pub fn constructibles(m: usize, a: &Rational, b: &Rational) -> Result<Vec<BTreeMap<DihedralChar, u64>>> {
    check(m, a, b)?;
    DihedralRegime::of(a, b)?;
    let table = build_dihedral_table(m)?;
    let mut out = Vec::new();
    for (sub, p) in [(Subgroup::P1, b), (Subgroup::P2, a)] {
        let pieces: Vec<Vec<ParabolicChar>> = if p.is_zero() {
            vec![vec![ParabolicChar::Trivial, ParabolicChar::Psi]]
        } else {
            vec![vec![ParabolicChar::Trivial], vec![ParabolicChar::Psi]]
        };
        for piece in pieces {
            let mut e: BTreeMap<DihedralChar, u64> = BTreeMap::new();
            for chi in piece {
                for (d, c) in truncate(&table, m, a, b, &sub, chi)? {
                    *e.entry(d).or_insert(0) += c;
                }
            }
            let twisted = e.iter().map(|(&d, &c)| (sign_twist(d), c)).collect();
            out.push(e);
            out.push(twisted);
        }
    }
    out.sort();
    out.dedup();
    Ok(out)
}

/// Lusztig families: connected components of co-occurrence in constructibles.
pub fn lusztig_blocks(m: usize, a: &Rational, b: &Rational) -> Result<Vec<Vec<IrrLabel>>> {
    let labels: Vec<IrrLabel> = DihedralChar::all(m).into_iter().map(IrrLabel::Dihedral).collect();
    let blocks: Vec<Vec<IrrLabel>> = constructibles(m, a, b)?
        .into_iter()
        .map(|e| e.into_keys().map(IrrLabel::Dihedral).collect())
        .collect();
    Ok(connected_components(&labels, &blocks))
}
