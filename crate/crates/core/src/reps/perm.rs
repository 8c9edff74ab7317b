//! Permutations and signed permutations.

use crate::combinatorics::{Bipartition, Partition};

/// A permutation of `0..n` in one-line notation; `p.img[i]` is the image of `i`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Perm {
    pub img: Vec<usize>,
}

impl Perm {
    pub fn identity(n: usize) -> Self {
        Perm { img: (0..n).collect() }
    }

    pub fn transposition(n: usize, i: usize, j: usize) -> Self {
        let mut p = Perm::identity(n);
        p.img.swap(i, j);
        p
    }

    pub fn degree(&self) -> usize {
        self.img.len()
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &Perm) -> Perm {
        Perm { img: other.img.iter().map(|&i| self.img[i]).collect() }
    }

    pub fn inverse(&self) -> Perm {
        let mut img = vec![0; self.img.len()];
        for (i, &j) in self.img.iter().enumerate() {
            img[j] = i;
        }
        Perm { img }
    }

    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.img.len()];
        let mut out = Vec::new();
        for start in 0..self.img.len() {
            if seen[start] {
                continue;
            }
            let mut cyc = vec![start];
            seen[start] = true;
            let mut j = self.img[start];
            while j != start {
                seen[j] = true;
                cyc.push(j);
                j = self.img[j];
            }
            out.push(cyc);
        }
        out
    }

    pub fn cycle_type(&self) -> Partition {
        let mut lens: Vec<u32> = self.cycles().iter().map(|c| c.len() as u32).collect();
        lens.sort_unstable_by(|a, b| b.cmp(a));
        Partition::new(lens).expect("cycle lengths form a partition")
    }

    /// A word `[a_1, …, a_K]` with `self = s_{a_1} ∘ … ∘ s_{a_K}`, where `s_a` swaps `a`
    /// and `a + 1`.
    pub fn adjacent_word(&self) -> Vec<usize> {
        let mut p = self.img.clone();
        let mut found = Vec::new();
        while let Some(i) = (0..p.len().saturating_sub(1)).find(|&i| p[i] > p[i + 1]) {
            p.swap(i, i + 1);
            found.push(i);
        }
        found.reverse();
        found
    }

    /// Standard representative of the class with cycle type `lam`: consecutive cycles.
    pub fn class_representative(lam: &Partition) -> Perm {
        let n = lam.size();
        let mut img = vec![0; n];
        let mut start = 0;
        for &len in lam.parts() {
            let len = len as usize;
            for t in 0..len {
                img[start + t] = start + (t + 1) % len;
            }
            start += len;
        }
        Perm { img }
    }
}

/// A signed permutation acting by `y_i ↦ sign[i] y_{img[i]}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SignedPerm {
    pub img: Vec<usize>,
    pub sign: Vec<i8>,
}

impl SignedPerm {
    pub fn identity(n: usize) -> Self {
        SignedPerm { img: (0..n).collect(), sign: vec![1; n] }
    }

    pub fn rank(&self) -> usize {
        self.img.len()
    }

    /// The sign change of coordinate `j`.
    pub fn sign_change(n: usize, j: usize) -> Self {
        let mut w = SignedPerm::identity(n);
        w.sign[j] = -1;
        w
    }

    /// The reflection exchanging `y_i` and `u y_j`, `u = ±1`.
    pub fn swap_reflection(n: usize, i: usize, j: usize, u: i8) -> Self {
        let mut w = SignedPerm::identity(n);
        w.img.swap(i, j);
        w.sign[i] = u;
        w.sign[j] = u;
        w
    }

    pub fn from_perm(p: &Perm) -> Self {
        SignedPerm { img: p.img.clone(), sign: vec![1; p.img.len()] }
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &SignedPerm) -> SignedPerm {
        let img = other.img.iter().map(|&i| self.img[i]).collect();
        let sign = other.img.iter().zip(&other.sign).map(|(&i, &s)| s * self.sign[i]).collect();
        SignedPerm { img, sign }
    }

    pub fn inverse(&self) -> SignedPerm {
        let n = self.img.len();
        let mut img = vec![0; n];
        let mut sign = vec![1; n];
        for i in 0..n {
            img[self.img[i]] = i;
            sign[self.img[i]] = self.sign[i];
        }
        SignedPerm { img, sign }
    }

    pub fn underlying(&self) -> Perm {
        Perm { img: self.img.clone() }
    }

    /// Product of the signs, the linear character `γ`.
    pub fn gamma(&self) -> i8 {
        self.sign.iter().product()
    }

    /// Number of sign changes taken modulo two decides membership in type D.
    pub fn in_type_d(&self) -> bool {
        self.gamma() == 1
    }

    /// Conjugacy class: cycle lengths of positive and of negative cycles.
    pub fn class(&self) -> Bipartition {
        let mut pos = Vec::new();
        let mut neg = Vec::new();
        for cyc in self.underlying().cycles() {
            let s: i8 = cyc.iter().map(|&i| self.sign[i]).product();
            if s == 1 {
                pos.push(cyc.len() as u32);
            } else {
                neg.push(cyc.len() as u32);
            }
        }
        pos.sort_unstable_by(|a, b| b.cmp(a));
        neg.sort_unstable_by(|a, b| b.cmp(a));
        Bipartition::new(Partition::new(pos).expect("partition"), Partition::new(neg).expect("partition"))
    }

    /// Representative of the class `(α, β)`: consecutive positive cycles then negative ones.
    pub fn class_representative(class: &Bipartition) -> SignedPerm {
        let n = class.size();
        let mut w = SignedPerm::identity(n);
        let mut start = 0;
        for (parts, negative) in [(class.first.parts(), false), (class.second.parts(), true)] {
            for &len in parts {
                let len = len as usize;
                for t in 0..len {
                    w.img[start + t] = start + (t + 1) % len;
                }
                if negative {
                    w.sign[start + len - 1] = -1;
                }
                start += len;
            }
        }
        w
    }

    /// The monomial matrix of the action on `h = ℂ^n` in the basis `y_1, …, y_n`.
    pub fn monomial_matrix(&self) -> Vec<Vec<i64>> {
        let n = self.img.len();
        let mut m = vec![vec![0; n]; n];
        for i in 0..n {
            m[self.img[i]][i] = self.sign[i] as i64;
        }
        m
    }

    /// All reflections of the hyperoctahedral group of rank `n`: first the `n` sign
    /// changes, then the `n(n-1)` reflections `s_{ij,u}`.
    pub fn reflections(n: usize) -> Vec<SignedPerm> {
        let mut out: Vec<SignedPerm> = (0..n).map(|j| SignedPerm::sign_change(n, j)).collect();
        for i in 0..n {
            for j in i + 1..n {
                for u in [1, -1] {
                    out.push(SignedPerm::swap_reflection(n, i, j, u));
                }
            }
        }
        out
    }

    pub fn is_sign_change(&self) -> bool {
        self.img.iter().enumerate().all(|(i, &j)| i == j) && self.sign.iter().filter(|&&s| s == -1).count() == 1
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn mat_mul(a: &[Vec<i64>], b: &[Vec<i64>]) -> Vec<Vec<i64>> {
        let n = a.len();
        (0..n).map(|i| (0..n).map(|j| (0..n).map(|k| a[i][k] * b[k][j]).sum()).collect()).collect()
    }

    #[test]
    fn words_reproduce_permutations() {
        let p = Perm { img: vec![2, 0, 3, 1] };
        let w = p.adjacent_word();
        let mut acc = Perm::identity(4);
        for &a in &w {
            acc = acc.compose(&Perm::transposition(4, a, a + 1));
        }
        assert_eq!(acc, p);
    }

    #[test]
    fn signed_composition_matches_matrices() {
        let a = SignedPerm { img: vec![1, 2, 0], sign: vec![1, -1, 1] };
        let b = SignedPerm { img: vec![0, 2, 1], sign: vec![-1, 1, -1] };
        assert_eq!(a.compose(&b).monomial_matrix(), mat_mul(&a.monomial_matrix(), &b.monomial_matrix()));
        assert_eq!(a.compose(&a.inverse()), SignedPerm::identity(3));
    }

    #[test]
    fn class_representatives_have_their_class() {
        for bp in crate::combinatorics::bipartitions(4) {
            assert_eq!(SignedPerm::class_representative(&bp).class(), bp);
        }
        assert_eq!(SignedPerm::reflections(3).len(), 9);
    }
}
