use std::fmt;

use num::{Signed, Zero};
use serde_json::{json, Value};

use super::rational::Rational;
use crate::error::{Error, Result};

/// A finite Coxeter group from one of the supported infinite series.
///
/// `A(n)` is the symmetric group on `n` letters, `B(n)` and `D(n)` have rank `n`, and
/// `I2(m)` is the dihedral group of order `2m`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CoxeterGroup {
    A(usize),
    B(usize),
    D(usize),
    I2(usize),
}

impl CoxeterGroup {
    pub fn type_tag(&self) -> &'static str {
        match self {
            CoxeterGroup::A(_) => "A",
            CoxeterGroup::B(_) => "B",
            CoxeterGroup::D(_) => "D",
            CoxeterGroup::I2(_) => "I2",
        }
    }

    pub fn size(&self) -> usize {
        match *self {
            CoxeterGroup::A(n) | CoxeterGroup::B(n) | CoxeterGroup::D(n) | CoxeterGroup::I2(n) => n,
        }
    }

    /// Checks the size bounds each series needs.
    pub fn validate(&self) -> Result<()> {
        match *self {
            CoxeterGroup::A(n) if n < 2 => Err(Error::Precondition("type A needs n >= 2".into())),
            CoxeterGroup::B(n) if n < 1 => Err(Error::Precondition("type B needs n >= 1".into())),
            CoxeterGroup::D(n) if n < 2 => Err(Error::Precondition("type D needs n >= 2".into())),
            CoxeterGroup::I2(m) if m < 5 => Err(Error::Precondition("I2(m) needs m >= 5".into())),
            _ => Ok(()),
        }
    }

    /// JSON fields identifying the group, e.g. `{"type":"B","n":6}`.
    pub fn json_fields(&self) -> serde_json::Map<String, Value> {
        let mut map = serde_json::Map::new();
        map.insert("type".into(), json!(self.type_tag()));
        let key = if matches!(self, CoxeterGroup::I2(_)) { "m" } else { "n" };
        map.insert(key.into(), json!(self.size()));
        map
    }
}

impl fmt::Display for CoxeterGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CoxeterGroup::I2(m) => write!(f, "I2({m})"),
            g => write!(f, "{}{}", g.type_tag(), g.size()),
        }
    }
}

/// Exact rational Cherednik parameter.
///
/// Type B uses `c1` on the sign changes and `kappa` on the other reflections; type D
/// carries only `kappa`; for `I2(m)`, `b` is the value on the class of `s` and `a` the
/// value on the class of `t`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum CherednikParameter {
    A { c: Rational },
    B { c1: Rational, kappa: Rational },
    D { kappa: Rational },
    I2 { a: Rational, b: Rational },
}

impl CherednikParameter {
    pub fn type_tag(&self) -> &'static str {
        match self {
            CherednikParameter::A { .. } => "A",
            CherednikParameter::B { .. } => "B",
            CherednikParameter::D { .. } => "D",
            CherednikParameter::I2 { .. } => "I2",
        }
    }

    pub fn values(&self) -> Vec<&Rational> {
        match self {
            CherednikParameter::A { c } => vec![c],
            CherednikParameter::B { c1, kappa } => vec![c1, kappa],
            CherednikParameter::D { kappa } => vec![kappa],
            CherednikParameter::I2 { a, b } => vec![a, b],
        }
    }

    pub fn is_zero(&self) -> bool {
        self.values().iter().all(|v| v.is_zero())
    }

    pub fn is_nonnegative(&self) -> bool {
        self.values().iter().all(|v| !v.is_negative())
    }

    /// Multiplies every value by `alpha`.
    pub fn scaled(&self, alpha: &Rational) -> CherednikParameter {
        match self {
            CherednikParameter::A { c } => CherednikParameter::A { c: c * alpha },
            CherednikParameter::B { c1, kappa } => CherednikParameter::B { c1: c1 * alpha, kappa: kappa * alpha },
            CherednikParameter::D { kappa } => CherednikParameter::D { kappa: kappa * alpha },
            CherednikParameter::I2 { a, b } => CherednikParameter::I2 { a: a * alpha, b: b * alpha },
        }
    }

    /// Checks that the parameter has the shape the group needs.
    pub fn validate_for(&self, group: &CoxeterGroup) -> Result<()> {
        group.validate()?;
        match (group, self) {
            (CoxeterGroup::A(_), CherednikParameter::A { .. })
            | (CoxeterGroup::B(_), CherednikParameter::B { .. })
            | (CoxeterGroup::D(_), CherednikParameter::D { .. }) => Ok(()),
            (CoxeterGroup::I2(m), CherednikParameter::I2 { a, b }) => {
                if m % 2 == 1 && a != b {
                    Err(Error::ParameterShape(format!(
                        "I2({m}) with m odd has a single reflection class, so a = b is required (got a={a}, b={b})"
                    )))
                } else {
                    Ok(())
                }
            }
            _ => Err(Error::ParameterShape(format!(
                "a type {} parameter was given for the group {}",
                self.type_tag(),
                group
            ))),
        }
    }

    /// Classification of a type B parameter.
    pub fn b_regime(&self) -> Option<BRegime> {
        let CherednikParameter::B { c1, kappa } = self else {
            return None;
        };
        Some(if c1.is_zero() && kappa.is_zero() {
            BRegime::Zero
        } else if kappa.is_zero() {
            BRegime::Degenerate
        } else {
            let q = c1 / kappa;
            if q.is_integer() {
                BRegime::Integral { m: q.to_integer().try_into().expect("small integer ratio") }
            } else {
                BRegime::Generic
            }
        })
    }

    pub fn to_json(&self) -> Value {
        match self {
            CherednikParameter::A { c } => json!({"c": c.to_string()}),
            CherednikParameter::B { c1, kappa } => json!({"c1": c1.to_string(), "kappa": kappa.to_string()}),
            CherednikParameter::D { kappa } => json!({"kappa": kappa.to_string()}),
            CherednikParameter::I2 { a, b } => json!({"a": a.to_string(), "b": b.to_string()}),
        }
    }
}

impl fmt::Display for CherednikParameter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CherednikParameter::A { c } => write!(f, "c={c}"),
            CherednikParameter::B { c1, kappa } => write!(f, "c1={c1}, kappa={kappa}"),
            CherednikParameter::D { kappa } => write!(f, "kappa={kappa}"),
            CherednikParameter::I2 { a, b } => write!(f, "a={a}, b={b}"),
        }
    }
}

/// Where a type B parameter `(c1, kappa)` sits.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BRegime {
    /// `c1 = kappa = 0`.
    Zero,
    /// `kappa = 0`, `c1 ≠ 0`.
    Degenerate,
    /// `kappa ≠ 0` and `c1 = m kappa` with `m` an integer.
    Integral { m: i64 },
    /// `kappa ≠ 0` and `c1 / kappa` is not an integer.
    Generic,
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::rational::{rat, ratio};

    #[test]
    fn regimes() {
        let p = |c1, k| CherednikParameter::B { c1, kappa: k };
        assert_eq!(p(rat(0), rat(0)).b_regime(), Some(BRegime::Zero));
        assert_eq!(p(rat(1), rat(0)).b_regime(), Some(BRegime::Degenerate));
        assert_eq!(p(rat(3), rat(1)).b_regime(), Some(BRegime::Integral { m: 3 }));
        assert_eq!(p(rat(-2), rat(2)).b_regime(), Some(BRegime::Integral { m: -1 }));
        assert_eq!(p(ratio(1, 2), rat(1)).b_regime(), Some(BRegime::Generic));
    }

    #[test]
    fn shapes() {
        let odd = CherednikParameter::I2 { a: rat(1), b: rat(2) };
        assert!(odd.validate_for(&CoxeterGroup::I2(7)).is_err());
        assert!(odd.validate_for(&CoxeterGroup::I2(8)).is_ok());
        assert!(CherednikParameter::A { c: rat(1) }.validate_for(&CoxeterGroup::B(3)).is_err());
        assert!(CherednikParameter::D { kappa: rat(1) }.validate_for(&CoxeterGroup::D(1)).is_err());
    }
}
