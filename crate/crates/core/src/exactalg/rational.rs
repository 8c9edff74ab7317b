use std::str::FromStr;

use num::{BigInt, BigRational};

use crate::error::{Error, Result};

pub type Rational = BigRational;

pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn ratio(p: i64, q: i64) -> Rational {
    Rational::new(BigInt::from(p), BigInt::from(q))
}

/// Parses `p`, `p/q` or `-p/q`.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let t = s.trim();
    if let Some((p, q)) = t.split_once('/') {
        let p = BigInt::from_str(p.trim()).map_err(|e| Error::Parse(format!("`{s}`: {e}")))?;
        let q = BigInt::from_str(q.trim()).map_err(|e| Error::Parse(format!("`{s}`: {e}")))?;
        if q == BigInt::from(0) {
            return Err(Error::Parse(format!("`{s}` has zero denominator")));
        }
        Ok(Rational::new(p, q))
    } else {
        let p = BigInt::from_str(t).map_err(|e| Error::Parse(format!("`{s}`: {e}")))?;
        Ok(Rational::from_integer(p))
    }
}
