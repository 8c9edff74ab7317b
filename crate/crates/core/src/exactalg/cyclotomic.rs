use std::fmt;
use std::sync::Arc;

use num::{One, Zero};
use serde_json::Value;

use super::matrix::{Matrix, Scalar};
use super::rational::Rational;

/// Integer coefficients of the `m`-th cyclotomic polynomial, constant term first.
pub fn cyclotomic_polynomial(m: usize) -> Vec<i64> {
    assert!(m >= 1, "conductor must be positive");
    // x^m - 1 divided by Φ_d for every proper divisor d.
    let mut num = vec![0i64; m + 1];
    num[0] = -1;
    num[m] = 1;
    for d in (1..m).filter(|d| m % d == 0) {
        num = div_exact(&num, &cyclotomic_polynomial(d));
    }
    num
}

fn div_exact(num: &[i64], den: &[i64]) -> Vec<i64> {
    let mut rem = num.to_vec();
    let dd = den.len() - 1;
    let lead = *den.last().expect("nonempty divisor");
    let mut quot = vec![0i64; rem.len() - dd];
    for i in (0..quot.len()).rev() {
        let q = rem[i + dd] / lead;
        quot[i] = q;
        for (j, &c) in den.iter().enumerate() {
            rem[i + j] -= q * c;
        }
    }
    debug_assert!(rem.iter().all(|&c| c == 0), "cyclotomic division is exact");
    quot
}

/// The field `ℚ(ζ_m)` with `ζ_m = exp(2πi/m)`, presented as `ℚ[x]/Φ_m`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CyclotomicField {
    m: usize,
    phi: Arc<Vec<i64>>,
}

impl CyclotomicField {
    pub fn new(m: usize) -> Self {
        CyclotomicField { m, phi: Arc::new(cyclotomic_polynomial(m)) }
    }

    pub fn conductor(&self) -> usize {
        self.m
    }

    pub fn degree(&self) -> usize {
        self.phi.len() - 1
    }

    pub fn zero(&self) -> Cyclotomic {
        Cyclotomic { field: self.clone(), coeffs: vec![Rational::zero(); self.degree()] }
    }

    pub fn one(&self) -> Cyclotomic {
        self.from_rational(&Rational::one())
    }

    pub fn from_rational(&self, q: &Rational) -> Cyclotomic {
        let mut z = self.zero();
        z.coeffs[0] = q.clone();
        z
    }

    /// `ζ^k` for any integer `k`.
    pub fn zeta_pow(&self, k: i64) -> Cyclotomic {
        let e = k.rem_euclid(self.m as i64) as usize;
        let mut poly = vec![Rational::zero(); e + 1];
        poly[e] = Rational::one();
        self.reduce(poly)
    }

    /// Reduces a polynomial with rational coefficients modulo `Φ_m`.
    pub fn reduce(&self, mut poly: Vec<Rational>) -> Cyclotomic {
        let d = self.degree();
        for i in (d..poly.len()).rev() {
            if Zero::is_zero(&poly[i]) {
                continue;
            }
            let c = poly[i].clone();
            for (j, &p) in self.phi.iter().enumerate() {
                poly[i - d + j] -= &c * Rational::from_integer(p.into());
            }
        }
        poly.resize(d, Rational::zero());
        Cyclotomic { field: self.clone(), coeffs: poly }
    }
}

/// An element of `ℚ(ζ_m)` as a coefficient vector in the power basis `1, ζ, …, ζ^{φ(m)-1}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cyclotomic {
    field: CyclotomicField,
    coeffs: Vec<Rational>,
}

impl Cyclotomic {
    pub fn field(&self) -> &CyclotomicField {
        &self.field
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    fn same_field(&self, other: &Cyclotomic) {
        assert_eq!(self.field.m, other.field.m, "mixing cyclotomic fields of different conductors");
    }

    fn mul_matrix(&self) -> Matrix<Rational> {
        let d = self.field.degree();
        let mut cols = Vec::with_capacity(d);
        for j in 0..d {
            let prod = self.mul_ref(&self.field.zeta_pow(j as i64));
            cols.push(prod.coeffs);
        }
        let rows = (0..d).map(|i| (0..d).map(|j| cols[j][i].clone()).collect()).collect();
        Matrix::from_rows(rows)
    }
}

impl Scalar for Cyclotomic {
    fn zero_like(&self) -> Self {
        self.field.zero()
    }

    fn one_like(&self) -> Self {
        self.field.one()
    }

    fn vanishes(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    fn add_ref(&self, other: &Self) -> Self {
        self.same_field(other);
        Cyclotomic {
            field: self.field.clone(),
            coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a + b).collect(),
        }
    }

    fn sub_ref(&self, other: &Self) -> Self {
        self.same_field(other);
        Cyclotomic {
            field: self.field.clone(),
            coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a - b).collect(),
        }
    }

    fn mul_ref(&self, other: &Self) -> Self {
        self.same_field(other);
        let d = self.field.degree();
        let mut poly = vec![Rational::zero(); 2 * d];
        for (i, a) in self.coeffs.iter().enumerate() {
            if Zero::is_zero(a) {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if !Zero::is_zero(b) {
                    poly[i + j] += a * b;
                }
            }
        }
        self.field.reduce(poly)
    }

    fn neg_ref(&self) -> Self {
        Cyclotomic { field: self.field.clone(), coeffs: self.coeffs.iter().map(|a| -a).collect() }
    }

    fn inv(&self) -> Option<Self> {
        if Scalar::vanishes(self) {
            return None;
        }
        let mut e0 = vec![Rational::zero(); self.field.degree()];
        e0[0] = Rational::one();
        let x = self.mul_matrix().solve(&e0)?;
        Some(Cyclotomic { field: self.field.clone(), coeffs: x })
    }

    fn conj(&self) -> Self {
        let m = self.field.m as i64;
        let mut acc = self.field.zero();
        for (i, c) in self.coeffs.iter().enumerate() {
            if !Zero::is_zero(c) {
                let t = self.field.zeta_pow(m - i as i64);
                acc = acc.add_ref(&t.mul_ref(&self.field.from_rational(c)));
            }
        }
        acc
    }

    fn rational_like(&self, q: &Rational) -> Self {
        self.field.from_rational(q)
    }

    fn to_rational(&self) -> Option<Rational> {
        if self.coeffs.iter().skip(1).all(Zero::is_zero) {
            Some(self.coeffs[0].clone())
        } else {
            None
        }
    }

    fn to_json(&self) -> Value {
        Value::Array(self.coeffs.iter().map(|c| Value::String(c.to_string())).collect())
    }
}

impl fmt::Display for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms: Vec<String> = self
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !Zero::is_zero(*c))
            .map(|(i, c)| match i {
                0 => c.to_string(),
                1 => format!("({c})z"),
                _ => format!("({c})z^{i}"),
            })
            .collect();
        if terms.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", terms.join(" + "))
        }
    }
}

/// Whether `Σ_{l=0}^{m-1} ζ^{il}` vanishes in `ℚ(ζ_m)`.
pub fn cyclotomic_sum_check(i: i64, m: usize) -> bool {
    let field = CyclotomicField::new(m);
    let sum = (0..m as i64).fold(field.zero(), |acc, l| acc.add_ref(&field.zeta_pow(i * l)));
    Scalar::vanishes(&sum)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::rational::rat;

    #[test]
    fn polynomials() {
        assert_eq!(cyclotomic_polynomial(1), vec![-1, 1]);
        assert_eq!(cyclotomic_polynomial(4), vec![1, 0, 1]);
        assert_eq!(cyclotomic_polynomial(5), vec![1, 1, 1, 1, 1]);
        assert_eq!(cyclotomic_polynomial(6), vec![1, -1, 1]);
        assert_eq!(cyclotomic_polynomial(12), vec![1, 0, -1, 0, 1]);
    }

    #[test]
    fn zeta_arithmetic() {
        for m in 1..=16 {
            let k = CyclotomicField::new(m);
            assert_eq!(k.zeta_pow(m as i64), k.one());
            assert_eq!(k.zeta_pow(3).mul_ref(&k.zeta_pow(-3)), k.one());
            let z = k.zeta_pow(1);
            assert_eq!(z.conj(), k.zeta_pow(-1));
            let x = k.zeta_pow(1).add_ref(&k.from_rational(&rat(2)));
            assert_eq!(x.mul_ref(&x.inv().unwrap()), k.one());
        }
    }

    #[test]
    fn sum_check_examples() {
        assert!(cyclotomic_sum_check(1, 5));
        assert!(!cyclotomic_sum_check(0, 5));
        assert!(!cyclotomic_sum_check(7, 7));
    }
}
