use std::collections::BTreeMap;
use std::fmt;

use num::{One, Signed, Zero};
use serde::{Serialize, Serializer};

use super::rational::{parse_rational, Rational};
use crate::combinatorics::{contents, Bipartition, Partition};
use crate::error::Result;

/// A finitely supported integer combination of monomials `x^q`, `q` rational.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct GroupRingElement {
    terms: BTreeMap<Rational, i64>,
}

impl GroupRingElement {
    pub fn zero() -> Self {
        GroupRingElement::default()
    }

    pub fn monomial(exponent: Rational, coeff: i64) -> Self {
        let mut g = GroupRingElement::zero();
        g.add_term(exponent, coeff);
        g
    }

    pub fn add_term(&mut self, exponent: Rational, coeff: i64) {
        if coeff == 0 {
            return;
        }
        let entry = self.terms.entry(exponent).or_insert(0);
        *entry += coeff;
        if *entry == 0 {
            self.terms.retain(|_, c| *c != 0);
        }
    }

    pub fn add(&self, other: &GroupRingElement) -> GroupRingElement {
        let mut out = self.clone();
        for (e, &c) in &other.terms {
            out.add_term(e.clone(), c);
        }
        out
    }

    /// Multiplication by the monomial `x^q`.
    pub fn shift(&self, q: &Rational) -> GroupRingElement {
        GroupRingElement { terms: self.terms.iter().map(|(e, &c)| (e + q, c)).collect() }
    }

    /// The substitution `x ↦ x^α`.
    pub fn substitute(&self, alpha: &Rational) -> GroupRingElement {
        let mut out = GroupRingElement::zero();
        for (e, &c) in &self.terms {
            out.add_term(e * alpha, c);
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, exponent: &Rational) -> i64 {
        self.terms.get(exponent).copied().unwrap_or(0)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Rational, i64)> {
        self.terms.iter().map(|(e, &c)| (e, c))
    }

    /// Parses the JSON object form `{"p/q": coeff}`.
    pub fn from_json(value: &serde_json::Value) -> Result<Self> {
        let mut g = GroupRingElement::zero();
        let obj = value
            .as_object()
            .ok_or_else(|| crate::error::Error::Parse("group ring element must be an object".into()))?;
        for (k, v) in obj {
            let c = v
                .as_i64()
                .ok_or_else(|| crate::error::Error::Parse(format!("coefficient of `{k}` is not an integer")))?;
            g.add_term(parse_rational(k)?, c);
        }
        Ok(g)
    }
}

impl Serialize for GroupRingElement {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_map(self.terms.iter().map(|(e, c)| (e.to_string(), c)))
    }
}

impl fmt::Display for GroupRingElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (e, &c)) in self.terms.iter().enumerate() {
            let sign = if c < 0 { "-" } else if i > 0 { "+" } else { "" };
            let abs = c.abs();
            let body = if e.is_zero() {
                abs.to_string()
            } else {
                let coeff = if abs == 1 { String::new() } else { abs.to_string() };
                let exp = if e.is_one() {
                    String::new()
                } else if e.is_negative() || !e.is_integer() {
                    format!("^({e})")
                } else {
                    format!("^{e}")
                };
                format!("{coeff}x{exp}")
            };
            if i > 0 {
                write!(f, " {sign} {body}")?;
            } else {
                write!(f, "{sign}{body}")?;
            }
        }
        Ok(())
    }
}

/// `Σ x^{ct(□)}` over the boxes of `p`.
pub fn residue(p: &Partition) -> GroupRingElement {
    let mut g = GroupRingElement::zero();
    for c in contents(p) {
        g.add_term(Rational::from_integer(c.into()), 1);
    }
    g
}

/// `x^{m0} Res_{λ0}(x^{m'}) + x^{m1} Res_{λ1}(x^{m'})`.
pub fn charged_residue(bp: &Bipartition, charge: (&Rational, &Rational, &Rational)) -> GroupRingElement {
    let (m0, m1, mp) = charge;
    let a = residue(&bp.first).substitute(mp).shift(m0);
    let b = residue(&bp.second).substitute(mp).shift(m1);
    a.add(&b)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::rational::rat;

    fn p(v: &[u32]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    #[test]
    fn residue_examples() {
        let r = residue(&p(&[2, 1]));
        assert_eq!(r.coeff(&rat(-1)), 1);
        assert_eq!(r.coeff(&rat(0)), 1);
        assert_eq!(r.coeff(&rat(1)), 1);
        assert!(residue(&Partition::empty()).is_zero());
        let col = residue(&p(&[1, 1, 1]));
        assert_eq!(col, [-2, -1, 0].iter().fold(GroupRingElement::zero(), |g, &e| g.add(&GroupRingElement::monomial(rat(e), 1))));
    }

    #[test]
    fn charged_residue_example() {
        let bp = Bipartition::from_parts(&[2, 1], &[1]).unwrap();
        let g = charged_residue(&bp, (&rat(0), &rat(1), &rat(-1)));
        let mut expected = GroupRingElement::monomial(rat(0), 1);
        expected.add_term(rat(-1), 1);
        expected.add_term(rat(1), 2);
        assert_eq!(g, expected);
        assert_eq!(g.to_string(), "x^(-1) + 1 + 2x");
    }

    #[test]
    fn degenerate_charge() {
        let bp = Bipartition::from_parts(&[2], &[1, 1]).unwrap();
        let g = charged_residue(&bp, (&rat(0), &rat(3), &rat(0)));
        let mut expected = GroupRingElement::monomial(rat(0), 2);
        expected.add_term(rat(3), 2);
        assert_eq!(g, expected);
    }

    #[test]
    fn json_round_trip() {
        let mut g = GroupRingElement::monomial(crate::exactalg::ratio(1, 2), 3);
        g.add_term(rat(-2), -1);
        let v = serde_json::to_value(&g).unwrap();
        assert_eq!(v, serde_json::json!({"-2": -1, "1/2": 3}));
        assert_eq!(GroupRingElement::from_json(&v).unwrap(), g);
    }
}
