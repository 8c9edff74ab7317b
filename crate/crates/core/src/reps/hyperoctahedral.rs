//! Representations of the hyperoctahedral group built by explicit induction from
//! `B_r × B_{n-r}`.

use std::collections::BTreeMap;

use itertools::Itertools;

use super::perm::{Perm, SignedPerm};
use super::symmetric::SeminormalRep;
use super::{IrrLabel, MatrixRep};
use crate::combinatorics::Bipartition;
use crate::exactalg::{rat, CoxeterGroup, Matrix, Rational};

/// The representation `π_{(λ⁰, λ¹)} = Ind (π_{λ⁰} ⊠ γ π_{λ¹})`.
///
/// Cosets of `B_r × B_{n-r}` are indexed by the `r`-subsets `A ⊆ {0, …, n-1}` in
/// lexicographic order. The representative `g_A` is the permutation sending
/// `0, …, r-1` increasingly onto `A` and the remaining letters increasingly onto
/// the complement.
#[derive(Clone, Debug)]
pub struct HyperoctahedralRep {
    label: Bipartition,
    first: SeminormalRep,
    second: SeminormalRep,
    subsets: Vec<Vec<usize>>,
    index: BTreeMap<Vec<usize>, usize>,
    reps: Vec<Perm>,
    block: usize,
}

impl HyperoctahedralRep {
    pub fn new(bp: &Bipartition) -> Self {
        let n = bp.size();
        let r = bp.first.size();
        let first = SeminormalRep::new(&bp.first);
        let second = SeminormalRep::new(&bp.second);
        let subsets: Vec<Vec<usize>> = (0..n).combinations(r).collect();
        let index = subsets.iter().enumerate().map(|(i, a)| (a.clone(), i)).collect();
        let reps = subsets
            .iter()
            .map(|a| {
                let rest = (0..n).filter(|x| !a.contains(x));
                Perm { img: a.iter().copied().chain(rest).collect() }
            })
            .collect();
        let block = first.dim() * second.dim();
        HyperoctahedralRep { label: bp.clone(), first, second, subsets, index, reps, block }
    }

    pub fn label(&self) -> &Bipartition {
        &self.label
    }

    pub fn rank(&self) -> usize {
        self.label.size()
    }

    pub fn dim(&self) -> usize {
        self.subsets.len() * self.block
    }

    /// The matrix of an arbitrary signed permutation.
    pub fn matrix_of(&self, w: &SignedPerm) -> Matrix<Rational> {
        let r = self.label.first.size();
        let mut out = Matrix::zeros(self.dim(), self.dim(), &rat(0));
        for (col, a) in self.subsets.iter().enumerate() {
            let mut image: Vec<usize> = a.iter().map(|&i| w.img[i]).collect();
            image.sort_unstable();
            let row = self.index[&image];
            let ga = SignedPerm::from_perm(&self.reps[col]);
            let gb_inv = SignedPerm::from_perm(&self.reps[row]).inverse();
            let h = gb_inv.compose(w).compose(&ga);
            let p0 = Perm { img: h.img[..r].to_vec() };
            let p1 = Perm { img: h.img[r..].iter().map(|&x| x - r).collect() };
            let gamma: i8 = h.sign[r..].iter().product();
            let m0 = self.first.matrix_of(&p0);
            let mut m1 = self.second.matrix_of(&p1);
            if gamma < 0 {
                m1 = m1.scale(&rat(-1));
            }
            let blk = m0.kron(&m1);
            for i in 0..self.block {
                for j in 0..self.block {
                    out.set(row * self.block + i, col * self.block + j, blk.get(i, j).clone());
                }
            }
        }
        out
    }

    pub fn character_value(&self, w: &SignedPerm) -> Rational {
        let r = self.label.first.size();
        let mut acc = rat(0);
        for (col, a) in self.subsets.iter().enumerate() {
            let mut image: Vec<usize> = a.iter().map(|&i| w.img[i]).collect();
            image.sort_unstable();
            if image != *a {
                continue;
            }
            let ga = SignedPerm::from_perm(&self.reps[col]);
            let h = ga.inverse().compose(w).compose(&ga);
            let p0 = Perm { img: h.img[..r].to_vec() };
            let p1 = Perm { img: h.img[r..].iter().map(|&x| x - r).collect() };
            let gamma: i64 = h.sign[r..].iter().map(|&s| s as i64).product();
            let t = self.first.character_value(&p0) * self.second.character_value(&p1) * rat(gamma);
            acc += t;
        }
        acc
    }

    /// Generators `e1` (the sign change of the first coordinate) and `s1, …, s{n-1}`.
    pub fn generators(&self) -> BTreeMap<String, Matrix<Rational>> {
        let n = self.rank();
        let mut gens = BTreeMap::new();
        if n == 0 {
            return gens;
        }
        gens.insert("e1".to_string(), self.matrix_of(&SignedPerm::sign_change(n, 0)));
        for i in 0..n - 1 {
            gens.insert(format!("s{}", i + 1), self.matrix_of(&SignedPerm::swap_reflection(n, i, i + 1, 1)));
        }
        gens
    }
}

pub fn build_b_rep(bp: &Bipartition) -> MatrixRep<Rational> {
    let rep = HyperoctahedralRep::new(bp);
    MatrixRep {
        group: CoxeterGroup::B(bp.size()),
        label: IrrLabel::Bipartition(bp.clone()),
        generators: rep.generators(),
        dim: rep.dim(),
    }
}
