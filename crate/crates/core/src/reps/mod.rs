//! Exact matrix representations and character theory for the symmetric, hyperoctahedral
//! and dihedral groups.

pub mod characters;
pub mod dihedral;
pub mod hyperoctahedral;
pub mod perm;
pub mod symmetric;

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::combinatorics::{Bipartition, Partition, UnorderedBipartition};
use crate::error::{Error, Result};
use crate::exactalg::{CoxeterGroup, Matrix, Scalar};

pub use characters::{
    branching_reducibility_check, induced_character, CharacterTable, ClassValues, InducedCharacter, Subgroup,
    SubgroupChar,
};
pub use dihedral::{build_dihedral_rep, build_dihedral_table, DihedralChar, DihedralElement, ParabolicChar};
pub use hyperoctahedral::{build_b_rep, HyperoctahedralRep};
pub use perm::{Perm, SignedPerm};
pub use symmetric::{build_symmetric_rep, jucys_murphy_eigenvalue, SeminormalRep};

/// Label of an irreducible character of any supported group.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(untagged)]
pub enum IrrLabel {
    Partition(Partition),
    Bipartition(Bipartition),
    Unordered(UnorderedBipartition),
    Dihedral(DihedralChar),
}

impl fmt::Display for IrrLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            IrrLabel::Partition(p) => write!(f, "{p}"),
            IrrLabel::Bipartition(b) => write!(f, "{b}"),
            IrrLabel::Unordered(u) => write!(f, "{u}"),
            IrrLabel::Dihedral(d) => write!(f, "{d}"),
        }
    }
}

impl IrrLabel {
    pub fn as_bipartition(&self) -> Option<&Bipartition> {
        match self {
            IrrLabel::Bipartition(b) => Some(b),
            _ => None,
        }
    }

    pub fn as_dihedral(&self) -> Option<DihedralChar> {
        match self {
            IrrLabel::Dihedral(d) => Some(*d),
            _ => None,
        }
    }
}

/// All irreducible labels of `group`, sorted.
pub fn irreducible_labels(group: &CoxeterGroup) -> Vec<IrrLabel> {
    let mut out: Vec<IrrLabel> = match *group {
        CoxeterGroup::A(n) => crate::combinatorics::partitions(n).into_iter().map(IrrLabel::Partition).collect(),
        CoxeterGroup::B(n) => crate::combinatorics::bipartitions(n).into_iter().map(IrrLabel::Bipartition).collect(),
        CoxeterGroup::D(n) => {
            crate::combinatorics::unordered_bipartitions(n).into_iter().map(IrrLabel::Unordered).collect()
        }
        CoxeterGroup::I2(m) => DihedralChar::all(m).into_iter().map(IrrLabel::Dihedral).collect(),
    };
    out.sort();
    out
}

/// Matrices for the Coxeter generators of a group, attached to an irreducible label.
#[derive(Clone, Debug)]
pub struct MatrixRep<F> {
    pub group: CoxeterGroup,
    pub label: IrrLabel,
    pub generators: BTreeMap<String, Matrix<F>>,
    pub dim: usize,
}

impl<F: Scalar> MatrixRep<F> {
    pub fn generator(&self, name: &str) -> Option<&Matrix<F>> {
        self.generators.get(name)
    }

    pub fn to_json(&self) -> Value {
        let gens: serde_json::Map<String, Value> =
            self.generators.iter().map(|(k, m)| (k.clone(), m.to_json())).collect();
        let mut obj = self.group.json_fields();
        obj.insert("label".into(), serde_json::to_value(&self.label).expect("label serializes"));
        obj.insert("dim".into(), json!(self.dim));
        obj.insert("generators".into(), Value::Object(gens));
        Value::Object(obj)
    }

    /// Generator names in Coxeter order with the Coxeter matrix `m(i, j)`.
    fn coxeter_presentation(&self) -> Result<(Vec<String>, Vec<Vec<u64>>)> {
        let chain = |names: Vec<String>, bond: &dyn Fn(usize, usize) -> u64| {
            let k = names.len();
            let m = (0..k).map(|i| (0..k).map(|j| if i == j { 1 } else { bond(i.min(j), i.max(j)) }).collect()).collect();
            (names, m)
        };
        let path = |i: usize, j: usize| if j == i + 1 { 3 } else { 2 };
        Ok(match self.group {
            CoxeterGroup::A(n) => chain((1..n).map(|i| format!("s{i}")).collect(), &path),
            CoxeterGroup::B(n) => {
                let names = std::iter::once("e1".to_string()).chain((1..n).map(|i| format!("s{i}"))).collect();
                chain(names, &|i, j| if i == 0 && j == 1 { 4 } else { path(i, j) })
            }
            CoxeterGroup::I2(m) => chain(vec!["s".into(), "t".into()], &|_, _| m as u64),
            CoxeterGroup::D(_) => {
                return Err(Error::Precondition("type D representations are obtained by restriction".into()))
            }
        })
    }

    /// Whether the generator matrices satisfy `(gᵢ gⱼ)^{m(i,j)} = 1` for the Coxeter
    /// matrix of the group.
    pub fn satisfies_coxeter_relations(&self) -> Result<bool> {
        let (names, m) = self.coxeter_presentation()?;
        let gens = names
            .iter()
            .map(|n| self.generators.get(n).ok_or_else(|| Error::Precondition(format!("missing generator {n}"))))
            .collect::<Result<Vec<_>>>()?;
        Ok((0..gens.len()).all(|i| {
            (i..gens.len()).all(|j| gens[i].mul(gens[j]).pow(m[i][j]).is_identity())
        }))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinatorics::{bipartitions, partitions};
    use crate::exactalg::rat;

    #[test]
    fn built_representations_satisfy_coxeter_relations() {
        for n in 1..=5 {
            assert!(partitions(n).iter().all(|l| build_symmetric_rep(l).satisfies_coxeter_relations().unwrap()));
        }
        for n in 1..=3 {
            assert!(bipartitions(n).iter().all(|b| build_b_rep(b).satisfies_coxeter_relations().unwrap()));
        }
        for chi in DihedralChar::all(7) {
            assert!(build_dihedral_rep(chi, 7).unwrap().satisfies_coxeter_relations().unwrap());
        }
    }

    #[test]
    fn broken_generator_is_detected() {
        let mut rep = build_symmetric_rep(&Partition::new(vec![2, 1]).unwrap());
        let s1 = rep.generators["s1"].scale(&rat(-1));
        rep.generators.insert("s1".into(), s1);
        assert!(!rep.satisfies_coxeter_relations().unwrap());
        rep.generators.remove("s2");
        assert!(rep.satisfies_coxeter_relations().is_err());
    }
}
