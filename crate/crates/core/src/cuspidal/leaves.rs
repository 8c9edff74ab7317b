//! Symplectic leaves as combinatorial data: index, dimension, parabolic label and the
//! closure order.

use std::fmt;

use num::Zero;
use serde_json::{json, Value};

use crate::combinatorics::{partitions, refinement_le, Partition};
use crate::error::{Error, Result};
use crate::exactalg::{BRegime, CherednikParameter, Rational};

/// A conjugacy class of parabolic subgroups `S_λ × B_r` of `B_n` or `S_λ × D_r` of `D_n`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ParabolicClass {
    B { young: Partition, rank: usize },
    D { young: Partition, rank: usize },
}

impl ParabolicClass {
    fn parts(&self) -> (&Partition, usize, bool) {
        match self {
            ParabolicClass::B { young, rank } => (young, *rank, false),
            ParabolicClass::D { young, rank } => (young, *rank, true),
        }
    }

    /// Whether a conjugate of `self` lies inside `other`. A Young factor goes either into
    /// a Young block of `other` or into its `B`/`D` factor.
    pub fn conjugate_into(&self, other: &ParabolicClass) -> bool {
        let (y1, r1, d1) = self.parts();
        let (y2, r2, d2) = other.parts();
        if d1 != d2 || r1 > r2 {
            return false;
        }
        let parts = y1.parts();
        let spare = r2 - r1;
        (0u32..1 << parts.len()).any(|mask| {
            let (inside, rest): (Vec<u32>, Vec<u32>) = {
                let mut a = Vec::new();
                let mut b = Vec::new();
                for (i, &p) in parts.iter().enumerate() {
                    if mask & (1 << i) != 0 {
                        a.push(p);
                    } else {
                        b.push(p);
                    }
                }
                (a, b)
            };
            inside.iter().sum::<u32>() as usize == spare
                && Partition::new(rest).map(|rest| refinement_le(&rest, y2)).unwrap_or(false)
        })
    }
}

impl fmt::Display for ParabolicClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (young, rank, d) = self.parts();
        let letter = if d { "D" } else { "B" };
        let moving: Vec<String> = young.parts().iter().filter(|&&p| p > 1).map(|p| p.to_string()).collect();
        match (moving.is_empty(), rank) {
            (true, r) => write!(f, "{letter}{r}"),
            (false, 0) => write!(f, "S({})", moving.join(",")),
            (false, r) => write!(f, "S({})x{letter}{r}", moving.join(",")),
        }
    }
}

fn ones(count: usize) -> Partition {
    Partition::rectangle(1, count)
}

/// How a leaf is indexed.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum LeafIndex {
    K(u64),
    Partition(Partition),
    Parabolic(ParabolicClass),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Leaf {
    pub index: LeafIndex,
    pub dimension: u64,
    pub parabolic: ParabolicClass,
}

impl Leaf {
    pub fn is_point(&self) -> bool {
        self.dimension == 0
    }
}

/// Leaves with the strict order `≺`; `below[j]` lists the `i` with `leaves[i] ≺ leaves[j]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LeafPoset {
    leaves: Vec<Leaf>,
    below: Vec<Vec<usize>>,
}

impl LeafPoset {
    fn from_relation(leaves: Vec<Leaf>, less: impl Fn(&Leaf, &Leaf) -> bool) -> Self {
        let below = (0..leaves.len())
            .map(|j| (0..leaves.len()).filter(|&i| i != j && less(&leaves[i], &leaves[j])).collect())
            .collect();
        LeafPoset { leaves, below }
    }

    pub fn leaves(&self) -> &[Leaf] {
        &self.leaves
    }

    pub fn len(&self) -> usize {
        self.leaves.len()
    }

    pub fn is_empty(&self) -> bool {
        self.leaves.is_empty()
    }

    pub fn less(&self, i: usize, j: usize) -> bool {
        self.below[j].contains(&i)
    }

    pub fn dimensions(&self) -> Vec<u64> {
        self.leaves.iter().map(|l| l.dimension).collect()
    }

    pub fn point_leaf(&self) -> Option<&Leaf> {
        self.leaves.iter().find(|l| l.is_point())
    }

    pub fn is_antisymmetric(&self) -> bool {
        let n = self.len();
        (0..n).all(|i| (0..n).all(|j| !(self.less(i, j) && self.less(j, i))))
    }

    pub fn is_transitive(&self) -> bool {
        let n = self.len();
        (0..n).all(|i| (0..n).all(|j| (0..n).all(|k| !(self.less(i, j) && self.less(j, k)) || self.less(i, k))))
    }

    pub fn is_total(&self) -> bool {
        let n = self.len();
        (0..n).all(|i| (0..n).all(|j| i == j || self.less(i, j) || self.less(j, i)))
    }

    /// `L ≺ L'` forces the parabolic of `L'` to be conjugate into that of `L` and the
    /// dimension to grow.
    pub fn refines_parabolic_order(&self) -> bool {
        let n = self.len();
        (0..n).all(|i| {
            (0..n).all(|j| {
                !self.less(i, j)
                    || (self.leaves[j].parabolic.conjugate_into(&self.leaves[i].parabolic)
                        && self.leaves[i].dimension < self.leaves[j].dimension)
            })
        })
    }

    pub fn to_json(&self) -> Value {
        Value::Array(
            self.leaves
                .iter()
                .enumerate()
                .map(|(j, l)| {
                    let mut obj = serde_json::Map::new();
                    match &l.index {
                        LeafIndex::K(k) => obj.insert("k".into(), json!(k)),
                        LeafIndex::Partition(p) => obj.insert("partition".into(), json!(p.parts())),
                        LeafIndex::Parabolic(_) => None,
                    };
                    obj.insert("dim".into(), json!(l.dimension));
                    obj.insert("parabolic".into(), json!(l.parabolic.to_string()));
                    let below: Vec<String> =
                        self.below[j].iter().map(|&i| self.leaves[i].parabolic.to_string()).collect();
                    obj.insert("below".into(), json!(below));
                    Value::Object(obj)
                })
                .collect(),
        )
    }
}

fn b_class(young: Partition, rank: usize) -> ParabolicClass {
    ParabolicClass::B { young, rank }
}

/// All parabolic classes `S_λ × B_r` of `B_n`.
fn all_b_parabolics(n: usize) -> Vec<ParabolicClass> {
    (0..=n).rev().flat_map(|r| partitions(n - r).into_iter().map(move |lam| b_class(lam, r))).collect()
}

fn sorted_by_dimension(mut leaves: Vec<Leaf>) -> Vec<Leaf> {
    leaves.sort_by(|a, b| a.dimension.cmp(&b.dimension).then_with(|| a.index.cmp(&b.index)));
    leaves
}

/// Leaves of the type B Calogero–Moser space at `(c₁, κ)`.
pub fn leaves_b(n: usize, c1: &Rational, kappa: &Rational) -> Result<LeafPoset> {
    if n == 0 {
        return Err(Error::Precondition("type B needs n >= 1".into()));
    }
    let param = CherednikParameter::B { c1: c1.clone(), kappa: kappa.clone() };
    let n64 = n as u64;
    Ok(match param.b_regime().expect("type B parameter") {
        BRegime::Zero => {
            let leaves = all_b_parabolics(n)
                .into_iter()
                .map(|p| {
                    let ParabolicClass::B { young, .. } = &p else { unreachable!("type B classes") };
                    Leaf { index: LeafIndex::Parabolic(p.clone()), dimension: 2 * young.len() as u64, parabolic: p }
                })
                .collect();
            LeafPoset::from_relation(sorted_by_dimension(leaves), |a, b| {
                a.parabolic != b.parabolic && b.parabolic.conjugate_into(&a.parabolic)
            })
        }
        BRegime::Degenerate => {
            let leaves = partitions(n)
                .into_iter()
                .map(|lam| Leaf {
                    dimension: 2 * lam.len() as u64,
                    parabolic: b_class(lam.clone(), 0),
                    index: LeafIndex::Partition(lam),
                })
                .collect();
            LeafPoset::from_relation(sorted_by_dimension(leaves), |a, b| {
                let (LeafIndex::Partition(la), LeafIndex::Partition(lb)) = (&a.index, &b.index) else {
                    unreachable!("degenerate leaves are indexed by partitions")
                };
                la != lb && refinement_le(lb, la)
            })
        }
        BRegime::Integral { m } => {
            let m = m.unsigned_abs();
            let leaves = (0..)
                .take_while(|k| k * (k + m) <= n64)
                .map(|k| {
                    let r = k * (k + m);
                    Leaf {
                        index: LeafIndex::K(k),
                        dimension: 2 * (n64 - r),
                        parabolic: b_class(ones(n - r as usize), r as usize),
                    }
                })
                .collect();
            LeafPoset::from_relation(sorted_by_dimension(leaves), |a, b| {
                let (LeafIndex::K(ka), LeafIndex::K(kb)) = (&a.index, &b.index) else {
                    unreachable!("leaves indexed by k")
                };
                ka > kb
            })
        }
        BRegime::Generic => LeafPoset::from_relation(
            vec![Leaf { index: LeafIndex::K(0), dimension: 2 * n64, parabolic: b_class(ones(n), 0) }],
            |_, _| false,
        ),
    })
}

/// Leaves of the type D Calogero–Moser space at `κ ≠ 0`.
pub fn leaves_d(n: usize, kappa: &Rational) -> Result<LeafPoset> {
    if n < 2 {
        return Err(Error::Precondition("type D needs n >= 2".into()));
    }
    if kappa.is_zero() {
        return Err(Error::Precondition("type D leaves need kappa != 0".into()));
    }
    let n64 = n as u64;
    let leaves = (1..)
        .take_while(|k| k * k <= n64)
        .map(|k| Leaf {
            index: LeafIndex::K(k),
            dimension: 2 * (n64 - k * k),
            parabolic: ParabolicClass::D { young: ones(n - (k * k) as usize), rank: (k * k) as usize },
        })
        .collect();
    Ok(LeafPoset::from_relation(sorted_by_dimension(leaves), |a, b| {
        let (LeafIndex::K(ka), LeafIndex::K(kb)) = (&a.index, &b.index) else { unreachable!("leaves indexed by k") };
        ka > kb
    }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::rat;
    use crate::reps::SignedPerm;
    use itertools::Itertools;

    fn p(v: &[u32]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    #[test]
    fn type_b_examples() {
        let poset = leaves_b(6, &rat(1), &rat(1)).unwrap();
        assert_eq!(poset.dimensions(), vec![0, 8, 12]);
        assert_eq!(poset.point_leaf().unwrap().parabolic.to_string(), "B6");
        assert!(poset.is_total() && poset.is_antisymmetric() && poset.refines_parabolic_order());
        let poset = leaves_b(5, &rat(1), &rat(1)).unwrap();
        assert_eq!(poset.len(), 2);
        assert!(poset.point_leaf().is_none());
        let poset = leaves_b(3, &rat(-1), &rat(1)).unwrap();
        assert_eq!(poset.dimensions(), vec![2, 6]);
        assert_eq!(leaves_b(4, &rat(1), &rat(2)).unwrap().dimensions(), vec![8]);
    }

    #[test]
    fn degenerate_dimensions() {
        let poset = leaves_b(3, &rat(1), &rat(0)).unwrap();
        let dims: Vec<(Vec<u32>, u64)> = poset
            .leaves()
            .iter()
            .map(|l| match &l.index {
                LeafIndex::Partition(p) => (p.parts().to_vec(), l.dimension),
                _ => panic!(),
            })
            .collect();
        assert_eq!(dims, vec![(vec![3], 2), (vec![2, 1], 4), (vec![1, 1, 1], 6)]);
        assert!(poset.is_antisymmetric() && poset.is_transitive() && poset.refines_parabolic_order());
        let poset = leaves_b(4, &rat(1), &rat(0)).unwrap();
        assert!(!poset.is_total());
    }

    #[test]
    fn zero_parameter_has_all_parabolics() {
        let poset = leaves_b(3, &rat(0), &rat(0)).unwrap();
        assert_eq!(poset.len(), 7);
        assert_eq!(poset.point_leaf().unwrap().parabolic.to_string(), "B3");
        assert!(poset.is_antisymmetric() && poset.is_transitive() && poset.refines_parabolic_order());
    }

    #[test]
    fn type_d_examples() {
        assert_eq!(leaves_d(4, &rat(1)).unwrap().dimensions(), vec![0, 6]);
        let poset = leaves_d(3, &rat(1)).unwrap();
        assert_eq!(poset.dimensions(), vec![4]);
        assert!(poset.point_leaf().is_none());
        assert_eq!(leaves_d(9, &rat(1)).unwrap().point_leaf().unwrap().index, LeafIndex::K(3));
        assert!(leaves_d(4, &rat(0)).is_err());
    }

    fn in_parabolic(w: &SignedPerm, class: &ParabolicClass) -> bool {
        let ParabolicClass::B { young, .. } = class else { panic!() };
        let mut start = 0;
        for &part in young.parts() {
            let block = start..start + part as usize;
            for i in block.clone() {
                if !block.contains(&w.img[i]) || w.sign[i] != 1 {
                    return false;
                }
            }
            start += part as usize;
        }
        (start..w.rank()).all(|i| w.img[i] >= start)
    }

    fn generators(class: &ParabolicClass) -> Vec<SignedPerm> {
        let ParabolicClass::B { young, rank } = class else { panic!() };
        let n = young.size() + rank;
        let mut out = Vec::new();
        let mut start = 0;
        for &part in young.parts() {
            for i in start..start + part as usize - 1 {
                out.push(SignedPerm::swap_reflection(n, i, i + 1, 1));
            }
            start += part as usize;
        }
        for i in start..n {
            out.push(SignedPerm::sign_change(n, i));
            if i + 1 < n {
                out.push(SignedPerm::swap_reflection(n, i, i + 1, 1));
            }
        }
        out
    }

    fn all_signed_perms(n: usize) -> Vec<SignedPerm> {
        let mut out = vec![SignedPerm::identity(n)];
        let mut i = 0;
        let gens = SignedPerm::reflections(n);
        while i < out.len() {
            for g in &gens {
                let w = g.compose(&out[i]);
                if !out.contains(&w) {
                    out.push(w);
                }
            }
            i += 1;
        }
        out
    }

    #[test]
    fn containment_against_subgroup_search() {
        for n in 1..=4 {
            let group = all_signed_perms(n);
            let classes = all_b_parabolics(n);
            for a in &classes {
                for b in &classes {
                    let brute = group.iter().any(|g| {
                        let gi = g.inverse();
                        generators(a).iter().all(|h| in_parabolic(&g.compose(h).compose(&gi), b))
                    });
                    assert_eq!(a.conjugate_into(b), brute, "{a} into {b}");
                }
            }
        }
    }

    fn blocks(lam: &Partition) -> Vec<usize> {
        lam.parts().iter().enumerate().flat_map(|(b, &p)| std::iter::repeat(b).take(p as usize)).collect()
    }

    #[test]
    fn refinement_matches_young_subgroup_search() {
        for n in 1..=5 {
            let perms: Vec<Vec<usize>> = (0..n).permutations(n).collect();
            for lam in partitions(n) {
                for mu in partitions(n) {
                    let (bl, bm) = (blocks(&lam), blocks(&mu));
                    let brute = perms.iter().any(|g| {
                        (0..n).all(|i| (0..n).all(|j| bm[i] != bm[j] || bl[g[i]] == bl[g[j]]))
                    });
                    assert_eq!(refinement_le(&mu, &lam), brute, "{mu} into {lam}");
                }
            }
        }
        assert!(refinement_le(&p(&[1, 1, 1]), &p(&[3])));
    }
}
