//! Calogero–Moser and Lusztig family partitions of `Irr W`.

pub mod dihedral;
pub mod type_b;
pub mod type_d;

use std::collections::BTreeMap;
use std::fmt;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::exactalg::{CherednikParameter, CoxeterGroup};
use crate::reps::{irreducible_labels, IrrLabel};

pub use dihedral::{
    a_value, constructibles, dihedral_j_induction, euler_families, euler_value, parabolic_a_value, DihedralRegime,
};
pub use type_b::{degenerate_j_induction, degenerate_j_induction_expansion};
pub use type_d::clifford_descent;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Method {
    #[serde(rename = "CM")]
    CalogeroMoser,
    Lusztig,
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Method::CalogeroMoser => write!(f, "CM"),
            Method::Lusztig => write!(f, "Lusztig"),
        }
    }
}

/// One block of a family partition.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Family {
    members: Vec<IrrLabel>,
    /// `k_F` for type B families at integral non-degenerate parameters.
    pub k_invariant: Option<u64>,
    /// Parabolic label of the symplectic leaf supporting the family, when known.
    pub leaf_label: Option<String>,
    /// Whether the family is cuspidal, when determined.
    pub cuspidal: Option<bool>,
}

impl Family {
    pub fn new(mut members: Vec<IrrLabel>) -> Self {
        members.sort();
        members.dedup();
        assert!(!members.is_empty(), "families are nonempty");
        Family { members, k_invariant: None, leaf_label: None, cuspidal: None }
    }

    pub fn members(&self) -> &[IrrLabel] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn is_singleton(&self) -> bool {
        self.members.len() == 1
    }

    pub fn contains(&self, label: &IrrLabel) -> bool {
        self.members.binary_search(label).is_ok()
    }

    /// The lexicographically smallest member, used for canonical ordering.
    pub fn min_label(&self) -> &IrrLabel {
        &self.members[0]
    }

    pub fn to_json(&self) -> Value {
        let mut obj = serde_json::Map::new();
        obj.insert("members".into(), serde_json::to_value(&self.members).expect("labels serialize"));
        obj.insert("size".into(), json!(self.members.len()));
        obj.insert("singleton".into(), json!(self.is_singleton()));
        if let Some(k) = self.k_invariant {
            obj.insert("k_invariant".into(), json!(k));
        }
        if let Some(l) = &self.leaf_label {
            obj.insert("leaf".into(), json!(l));
        }
        if let Some(c) = self.cuspidal {
            obj.insert("cuspidal".into(), json!(c));
        }
        Value::Object(obj)
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names: Vec<String> = self.members.iter().map(ToString::to_string).collect();
        write!(f, "{{{}}}", names.join(", "))
    }
}

/// A partition of `Irr W` into families, in canonical order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FamilyPartition {
    pub group: CoxeterGroup,
    pub parameter: CherednikParameter,
    pub method: Method,
    families: Vec<Family>,
}

impl FamilyPartition {
    /// Sorts the families by their smallest member.
    pub fn new(group: CoxeterGroup, parameter: CherednikParameter, method: Method, mut families: Vec<Family>) -> Self {
        families.sort_by(|a, b| a.min_label().cmp(b.min_label()));
        FamilyPartition { group, parameter, method, families }
    }

    fn from_blocks(
        group: CoxeterGroup,
        parameter: &CherednikParameter,
        method: Method,
        blocks: Vec<Vec<IrrLabel>>,
    ) -> Self {
        let families = blocks.into_iter().map(Family::new).collect();
        FamilyPartition::new(group, parameter.clone(), method, families)
    }

    pub fn families(&self) -> &[Family] {
        &self.families
    }

    pub fn families_mut(&mut self) -> &mut [Family] {
        &mut self.families
    }

    pub fn len(&self) -> usize {
        self.families.len()
    }

    pub fn is_empty(&self) -> bool {
        self.families.is_empty()
    }

    pub fn family_of(&self, label: &IrrLabel) -> Option<&Family> {
        self.families.iter().find(|f| f.contains(label))
    }

    /// The member sets, in canonical order.
    pub fn blocks(&self) -> Vec<Vec<IrrLabel>> {
        self.families.iter().map(|f| f.members.clone()).collect()
    }

    /// Equality of the underlying set partitions, ignoring annotations.
    pub fn same_blocks(&self, other: &FamilyPartition) -> bool {
        self.blocks() == other.blocks()
    }

    /// Whether the families are disjoint and cover `Irr W`.
    pub fn is_partition_of_irr(&self) -> bool {
        let mut all: Vec<IrrLabel> = self.families.iter().flat_map(|f| f.members.iter().cloned()).collect();
        all.sort();
        all == irreducible_labels(&self.group)
    }

    pub fn to_json(&self) -> Value {
        let mut obj = self.group.json_fields();
        obj.insert("param".into(), self.parameter.to_json());
        obj.insert("method".into(), json!(self.method.to_string()));
        obj.insert("families".into(), Value::Array(self.families.iter().map(Family::to_json).collect()));
        Value::Object(obj)
    }
}

/// Groups `labels` by the value of `key`, evaluating keys in parallel. The result is
/// independent of scheduling because grouping happens after all keys are known.
pub fn classes_by_key<K, F>(labels: Vec<IrrLabel>, key: F) -> Vec<Vec<IrrLabel>>
where
    K: Ord + Send,
    F: Fn(&IrrLabel) -> K + Sync,
{
    let keyed: Vec<(K, IrrLabel)> = labels.into_par_iter().map(|l| (key(&l), l)).collect();
    let mut classes: BTreeMap<K, Vec<IrrLabel>> = BTreeMap::new();
    for (k, l) in keyed {
        classes.entry(k).or_default().push(l);
    }
    classes.into_values().collect()
}

/// Connected components of the graph on `labels` whose edges join members of a
/// common block.
pub fn connected_components(labels: &[IrrLabel], blocks: &[Vec<IrrLabel>]) -> Vec<Vec<IrrLabel>> {
    let index: BTreeMap<&IrrLabel, usize> = labels.iter().enumerate().map(|(i, l)| (l, i)).collect();
    let mut parent: Vec<usize> = (0..labels.len()).collect();
    fn find(parent: &mut [usize], mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    for block in blocks {
        let ids: Vec<usize> = block.iter().map(|l| index[l]).collect();
        for w in ids.windows(2) {
            let (a, b) = (find(&mut parent, w[0]), find(&mut parent, w[1]));
            parent[a.max(b)] = a.min(b);
        }
    }
    let mut comps: BTreeMap<usize, Vec<IrrLabel>> = BTreeMap::new();
    for (i, l) in labels.iter().enumerate() {
        let r = find(&mut parent, i);
        comps.entry(r).or_default().push(l.clone());
    }
    comps.into_values().collect()
}

fn one_family(group: &CoxeterGroup) -> Vec<Vec<IrrLabel>> {
    vec![irreducible_labels(group)]
}

fn singletons(group: &CoxeterGroup) -> Vec<Vec<IrrLabel>> {
    irreducible_labels(group).into_iter().map(|l| vec![l]).collect()
}

/// The partition into singletons, valid at parameters off every singular hyperplane.
pub fn singleton_partition(group: &CoxeterGroup, param: &CherednikParameter, method: Method) -> Result<FamilyPartition> {
    param.validate_for(group)?;
    Ok(FamilyPartition::from_blocks(*group, param, method, singletons(group)))
}

fn reject_negative(param: &CherednikParameter) -> Result<()> {
    if param.is_nonnegative() {
        Ok(())
    } else {
        Err(Error::NegativeParameter(format!(
            "Lusztig families need nonnegative parameters, got {param}; twist by a linear character \
             (for type B use the tau twist) to reach the nonnegative chamber"
        )))
    }
}

/// Calogero–Moser families.
pub fn cm_families(group: &CoxeterGroup, param: &CherednikParameter) -> Result<FamilyPartition> {
    param.validate_for(group)?;
    let method = Method::CalogeroMoser;
    if param.is_zero() {
        return Ok(FamilyPartition::from_blocks(*group, param, method, one_family(group)));
    }
    let mut fp = match (*group, param) {
        (CoxeterGroup::A(_), _) => FamilyPartition::from_blocks(*group, param, method, singletons(group)),
        (CoxeterGroup::B(n), CherednikParameter::B { c1, kappa }) => {
            FamilyPartition::from_blocks(*group, param, method, type_b::cm_blocks(n, c1, kappa))
        }
        (CoxeterGroup::D(n), CherednikParameter::D { .. }) => {
            FamilyPartition::from_blocks(*group, param, method, type_d::cm_blocks(n))
        }
        (CoxeterGroup::I2(m), CherednikParameter::I2 { a, b }) => {
            FamilyPartition::from_blocks(*group, param, method, dihedral::euler_families(m, a, b))
        }
        _ => unreachable!("validated parameter shape"),
    };
    type_b::annotate_k_invariants(&mut fp);
    Ok(fp)
}

/// Lusztig families. Parameters must be nonnegative.
pub fn lusztig_families(group: &CoxeterGroup, param: &CherednikParameter) -> Result<FamilyPartition> {
    param.validate_for(group)?;
    reject_negative(param)?;
    let method = Method::Lusztig;
    if param.is_zero() {
        return Ok(FamilyPartition::from_blocks(*group, param, method, one_family(group)));
    }
    let mut fp = match (*group, param) {
        (CoxeterGroup::A(_), _) => FamilyPartition::from_blocks(*group, param, method, singletons(group)),
        (CoxeterGroup::B(n), CherednikParameter::B { c1, kappa }) => {
            FamilyPartition::from_blocks(*group, param, method, type_b::lusztig_blocks(n, c1, kappa)?)
        }
        (CoxeterGroup::D(n), CherednikParameter::D { kappa }) => {
            let b = lusztig_families(&CoxeterGroup::B(n), &CherednikParameter::B { c1: num::zero(), kappa: kappa.clone() })?;
            let mut d = clifford_descent(&b)?;
            d.method = method;
            d
        }
        (CoxeterGroup::I2(m), CherednikParameter::I2 { a, b }) => {
            FamilyPartition::from_blocks(*group, param, method, dihedral::lusztig_blocks(m, a, b)?)
        }
        _ => unreachable!("validated parameter shape"),
    };
    type_b::annotate_k_invariants(&mut fp);
    Ok(fp)
}

/// Families at `(−c₁, κ)` obtained by exchanging the components of every label.
pub fn tau_twist(fp: &FamilyPartition) -> Result<FamilyPartition> {
    let CherednikParameter::B { c1, kappa } = &fp.parameter else {
        return Err(Error::ParameterShape(format!("the tau twist applies to type B, got {}", fp.group)));
    };
    let families = fp
        .families
        .iter()
        .map(|f| {
            let members = f
                .members
                .iter()
                .map(|l| match l {
                    IrrLabel::Bipartition(bp) => IrrLabel::Bipartition(bp.swapped()),
                    other => other.clone(),
                })
                .collect();
            let mut g = Family::new(members);
            g.k_invariant = f.k_invariant;
            g.leaf_label = f.leaf_label.clone();
            g.cuspidal = f.cuspidal;
            g
        })
        .collect();
    let parameter = CherednikParameter::B { c1: -c1.clone(), kappa: kappa.clone() };
    Ok(FamilyPartition::new(fp.group, parameter, fp.method, families))
}
