//! Young's seminormal form for the symmetric group.

use std::collections::{BTreeMap, HashMap, VecDeque};

use num::{One, Zero};

use super::perm::Perm;
use super::{IrrLabel, MatrixRep};
use crate::combinatorics::{standard_tableaux, Partition};
use crate::exactalg::{rat, CoxeterGroup, Matrix, Rational};

/// The seminormal representation attached to a partition, with generator matrices
/// `s_0, …, s_{n-2}` (0-based: `s_i` swaps the letters `i` and `i + 1`).
#[derive(Clone, Debug)]
pub struct SeminormalRep {
    lam: Partition,
    generators: Vec<Matrix<Rational>>,
    dim: usize,
}

impl SeminormalRep {
    pub fn new(lam: &Partition) -> Self {
        let tableaux = standard_tableaux(lam);
        let dim = tableaux.len();
        let index: HashMap<&Vec<(usize, usize)>, usize> = tableaux.iter().enumerate().map(|(i, t)| (t, i)).collect();
        let n = lam.size();
        let content = |pos: (usize, usize)| pos.1 as i64 - pos.0 as i64;
        let mut generators = Vec::with_capacity(n.saturating_sub(1));
        for i in 0..n.saturating_sub(1) {
            let mut m = Matrix::zeros(dim, dim, &Rational::zero());
            for (col, t) in tableaux.iter().enumerate() {
                let d = content(t[i + 1]) - content(t[i]);
                let diag = Rational::new(1.into(), d.into());
                m.set(col, col, diag);
                if d.abs() == 1 {
                    continue;
                }
                let mut partner = t.clone();
                partner.swap(i, i + 1);
                let row = index[&partner];
                let coeff = if d > 0 { Rational::one() } else { Rational::one() - Rational::new(1.into(), (d * d).into()) };
                m.set(row, col, coeff);
            }
            generators.push(m);
        }
        SeminormalRep { lam: lam.clone(), generators, dim }
    }

    pub fn partition(&self) -> &Partition {
        &self.lam
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn degree(&self) -> usize {
        self.lam.size()
    }

    /// Matrix of the adjacent transposition `(i, i+1)`, 0-based.
    pub fn generator(&self, i: usize) -> &Matrix<Rational> {
        &self.generators[i]
    }

    /// Matrix of an arbitrary permutation, through a reduced word.
    pub fn matrix_of(&self, p: &Perm) -> Matrix<Rational> {
        let mut acc = Matrix::identity(self.dim, &rat(0));
        for a in p.adjacent_word() {
            acc = acc.mul(&self.generators[a]);
        }
        acc
    }

    /// Matrices of every group element, found by breadth-first search over left
    /// multiplication by generators.
    pub fn all_matrices(&self) -> HashMap<Perm, Matrix<Rational>> {
        let n = self.degree();
        let mut out = HashMap::new();
        let id = Perm::identity(n);
        out.insert(id.clone(), Matrix::identity(self.dim, &rat(0)));
        let mut queue = VecDeque::from([id]);
        while let Some(p) = queue.pop_front() {
            for i in 0..n.saturating_sub(1) {
                let q = Perm::transposition(n, i, i + 1).compose(&p);
                if !out.contains_key(&q) {
                    let m = self.generators[i].mul(&out[&p]);
                    out.insert(q.clone(), m);
                    queue.push_back(q);
                }
            }
        }
        out
    }

    pub fn character_value(&self, p: &Perm) -> Rational {
        self.matrix_of(p).trace()
    }

    /// The Jucys–Murphy element `Σ_{j<n} (j, n)` as a matrix.
    pub fn jucys_murphy_last(&self) -> Matrix<Rational> {
        let n = self.degree();
        let mut acc = Matrix::zeros(self.dim, self.dim, &rat(0));
        for j in 0..n.saturating_sub(1) {
            acc = acc.add(&self.matrix_of(&Perm::transposition(n, j, n - 1)));
        }
        acc
    }
}

/// The seminormal representation of the symmetric group labelled by `lam`, as a
/// [`MatrixRep`] with generators `s1, …, s{n-1}`.
pub fn build_symmetric_rep(lam: &Partition) -> MatrixRep<Rational> {
    let rep = SeminormalRep::new(lam);
    let generators: BTreeMap<String, Matrix<Rational>> =
        rep.generators.iter().enumerate().map(|(i, m)| (format!("s{}", i + 1), m.clone())).collect();
    MatrixRep { group: CoxeterGroup::A(lam.size()), label: IrrLabel::Partition(lam.clone()), generators, dim: rep.dim }
}

/// Eigenvalue of `z_n = Σ_{j<n} s_{jn}` on the representation `lam`, or `None` when it
/// does not act by a scalar.
pub fn jucys_murphy_eigenvalue(lam: &Partition) -> Option<i64> {
    let rep = SeminormalRep::new(lam);
    if rep.degree() <= 1 {
        return Some(0);
    }
    let z = rep.jucys_murphy_last();
    let s = z.scalar_value()?;
    Some(s.to_integer().try_into().expect("small eigenvalue"))
}
