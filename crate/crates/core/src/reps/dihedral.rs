//! The dihedral group `I₂(m)` of order `2m`, its irreducible characters and explicit
//! matrices over `ℚ(ζ_m)`.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::characters::{CharacterTable, ClassKey, ClassValues};
use super::{IrrLabel, MatrixRep};
use crate::error::{Error, Result};
use crate::exactalg::{CoxeterGroup, Cyclotomic, CyclotomicField, Matrix};

/// An irreducible character of `I₂(m)`. `Eps1` and `Eps2` exist only for even `m`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum DihedralChar {
    Trivial,
    Sign,
    Eps1,
    Eps2,
    Phi(usize),
}

impl DihedralChar {
    /// All irreducible characters of `I₂(m)`.
    pub fn all(m: usize) -> Vec<DihedralChar> {
        let mut out = vec![DihedralChar::Trivial, DihedralChar::Sign];
        if m % 2 == 0 {
            out.extend([DihedralChar::Eps1, DihedralChar::Eps2]);
        }
        out.extend((1..=Self::num_phi(m)).map(DihedralChar::Phi));
        out
    }

    /// Number of two-dimensional characters.
    pub fn num_phi(m: usize) -> usize {
        if m % 2 == 0 {
            (m - 2) / 2
        } else {
            (m - 1) / 2
        }
    }

    pub fn dim(&self) -> usize {
        match self {
            DihedralChar::Phi(_) => 2,
            _ => 1,
        }
    }

    pub fn is_linear(&self) -> bool {
        self.dim() == 1
    }

    /// Whether the label denotes a character of `I₂(m)`.
    pub fn exists_for(&self, m: usize) -> bool {
        match *self {
            DihedralChar::Trivial | DihedralChar::Sign => true,
            DihedralChar::Eps1 | DihedralChar::Eps2 => m % 2 == 0,
            DihedralChar::Phi(i) => i >= 1 && i <= Self::num_phi(m),
        }
    }

    /// Value of a linear character on `r^l s^e`.
    fn linear_value(&self, g: &DihedralElement) -> i64 {
        let parity = if g.rot % 2 == 0 { 1 } else { -1 };
        match (self, g.refl) {
            (DihedralChar::Trivial, _) => 1,
            (DihedralChar::Sign, false) => 1,
            (DihedralChar::Sign, true) => -1,
            (DihedralChar::Eps1, _) => parity,
            (DihedralChar::Eps2, false) => parity,
            (DihedralChar::Eps2, true) => -parity,
            (DihedralChar::Phi(_), _) => unreachable!("two-dimensional character"),
        }
    }

    /// The matrix of `g` in this representation, with entries in `field = ℚ(ζ_m)`.
    pub fn matrix(&self, g: &DihedralElement, field: &CyclotomicField) -> Matrix<Cyclotomic> {
        match *self {
            DihedralChar::Phi(i) => {
                let l = (i * g.rot) as i64;
                let a = field.zeta_pow(l);
                let b = field.zeta_pow(-l);
                let z = field.zero();
                if g.refl {
                    Matrix::from_rows(vec![vec![z.clone(), a], vec![b, z]])
                } else {
                    Matrix::from_rows(vec![vec![a, z.clone()], vec![z, b]])
                }
            }
            _ => {
                let v = field.from_rational(&crate::exactalg::rat(self.linear_value(g)));
                Matrix::from_rows(vec![vec![v]])
            }
        }
    }

    pub fn value(&self, g: &DihedralElement, field: &CyclotomicField) -> Cyclotomic {
        self.matrix(g, field).trace()
    }
}

impl fmt::Display for DihedralChar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DihedralChar::Trivial => write!(f, "1"),
            DihedralChar::Sign => write!(f, "eps"),
            DihedralChar::Eps1 => write!(f, "eps1"),
            DihedralChar::Eps2 => write!(f, "eps2"),
            DihedralChar::Phi(i) => write!(f, "phi_{i}"),
        }
    }
}

impl FromStr for DihedralChar {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "1" => Ok(DihedralChar::Trivial),
            "eps" => Ok(DihedralChar::Sign),
            "eps1" => Ok(DihedralChar::Eps1),
            "eps2" => Ok(DihedralChar::Eps2),
            _ => s
                .strip_prefix("phi_")
                .and_then(|i| i.parse::<usize>().ok())
                .filter(|&i| i >= 1)
                .map(DihedralChar::Phi)
                .ok_or_else(|| Error::Parse(format!("unknown dihedral character {s:?}"))),
        }
    }
}

impl Serialize for DihedralChar {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for DihedralChar {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// A character of one of the two rank-one parabolic subgroups `⟨s⟩` and `⟨t⟩`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ParabolicChar {
    Trivial,
    Psi,
}

/// The element `r^rot s^refl` of `I₂(m)`, where `r = st` and `s_l = r^l s`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct DihedralElement {
    pub m: usize,
    pub rot: usize,
    pub refl: bool,
}

impl DihedralElement {
    pub fn identity(m: usize) -> Self {
        DihedralElement { m, rot: 0, refl: false }
    }

    pub fn rotation(m: usize, l: i64) -> Self {
        DihedralElement { m, rot: l.rem_euclid(m as i64) as usize, refl: false }
    }

    /// The reflection `s_l = r^l s`.
    pub fn reflection(m: usize, l: i64) -> Self {
        DihedralElement { m, rot: l.rem_euclid(m as i64) as usize, refl: true }
    }

    pub fn s(m: usize) -> Self {
        Self::reflection(m, 0)
    }

    pub fn t(m: usize) -> Self {
        Self::reflection(m, m as i64 - 1)
    }

    pub fn compose(&self, other: &DihedralElement) -> DihedralElement {
        let m = self.m as i64;
        let (a, b) = (self.rot as i64, other.rot as i64);
        let rot = if self.refl { a - b } else { a + b };
        DihedralElement { m: self.m, rot: rot.rem_euclid(m) as usize, refl: self.refl != other.refl }
    }

    pub fn inverse(&self) -> DihedralElement {
        if self.refl {
            *self
        } else {
            Self::rotation(self.m, -(self.rot as i64))
        }
    }

    pub fn elements(m: usize) -> Vec<DihedralElement> {
        let mut out: Vec<DihedralElement> = (0..m as i64).map(|l| Self::rotation(m, l)).collect();
        out.extend((0..m as i64).map(|l| Self::reflection(m, l)));
        out
    }

    /// The reflections `s_0, …, s_{m-1}`.
    pub fn reflections(m: usize) -> Vec<DihedralElement> {
        (0..m as i64).map(|l| Self::reflection(m, l)).collect()
    }

    /// Whether a reflection is conjugate to `s` (as opposed to `t`). For odd `m` all
    /// reflections are conjugate.
    pub fn in_s_class(&self) -> bool {
        self.refl && (self.m % 2 == 1 || self.rot % 2 == 0)
    }

    /// The key of the conjugacy class.
    pub fn class_key(&self) -> ClassKey {
        if self.refl {
            let parity = if self.m % 2 == 1 { 0 } else { self.rot % 2 };
            ClassKey::DihedralReflection(parity)
        } else {
            ClassKey::DihedralRotation(self.rot.min(self.m - self.rot))
        }
    }
}

fn check_m(m: usize) -> Result<()> {
    CoxeterGroup::I2(m).validate()
}

/// Matrices for `s` and `t` (and the rotation `r`) in the irreducible representation `chi`.
pub fn build_dihedral_rep(chi: DihedralChar, m: usize) -> Result<MatrixRep<Cyclotomic>> {
    check_m(m)?;
    if !chi.exists_for(m) {
        return Err(Error::Precondition(format!("{chi} is not a character of I2({m})")));
    }
    let field = CyclotomicField::new(m);
    let mut generators = BTreeMap::new();
    generators.insert("s".to_string(), chi.matrix(&DihedralElement::s(m), &field));
    generators.insert("t".to_string(), chi.matrix(&DihedralElement::t(m), &field));
    generators.insert("r".to_string(), chi.matrix(&DihedralElement::rotation(m, 1), &field));
    Ok(MatrixRep { group: CoxeterGroup::I2(m), label: IrrLabel::Dihedral(chi), generators, dim: chi.dim() })
}

/// The character table of `I₂(m)` over `ℚ(ζ_m)`.
pub fn build_dihedral_table(m: usize) -> Result<CharacterTable> {
    check_m(m)?;
    let field = CyclotomicField::new(m);
    let mut classes: Vec<(ClassKey, u64)> = vec![(ClassKey::DihedralRotation(0), 1)];
    for j in 1..=m / 2 {
        let size = if 2 * j == m { 1 } else { 2 };
        classes.push((ClassKey::DihedralRotation(j), size));
    }
    if m % 2 == 1 {
        classes.push((ClassKey::DihedralReflection(0), m as u64));
    } else {
        classes.push((ClassKey::DihedralReflection(0), (m / 2) as u64));
        classes.push((ClassKey::DihedralReflection(1), (m / 2) as u64));
    }
    let reps: Vec<DihedralElement> = classes
        .iter()
        .map(|(key, _)| match key {
            ClassKey::DihedralRotation(j) => DihedralElement::rotation(m, *j as i64),
            ClassKey::DihedralReflection(p) => DihedralElement::reflection(m, *p as i64),
            _ => unreachable!("dihedral class keys only"),
        })
        .collect();
    let chars = DihedralChar::all(m);
    let rows =
        chars.iter().map(|chi| ClassValues(reps.iter().map(|g| chi.value(g, &field)).collect())).collect();
    Ok(CharacterTable::new(
        CoxeterGroup::I2(m),
        field,
        2 * m as u64,
        classes,
        chars.into_iter().map(IrrLabel::Dihedral).collect(),
        rows,
    ))
}

/// The matrix of the reflection `s_l` on `𝔥 = ℂ²`, namely `φ₁(s_l)`.
pub fn reflection_matrix(l: i64, field: &CyclotomicField) -> Matrix<Cyclotomic> {
    DihedralChar::Phi(1).matrix(&DihedralElement::reflection(field.conductor(), l), field)
}
