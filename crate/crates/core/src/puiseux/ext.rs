use std::fmt;
use std::ops::Add;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// Exact rational number, always kept in lowest terms with a positive denominator.
pub type Rational = BigRational;

/// A rational number or `+∞`.
///
/// `+∞` is the valuation of zero and the precision of an exact series.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ExtRational {
    Finite(Rational),
    Infinity,
}

impl ExtRational {
    pub fn integer(n: i64) -> Self {
        ExtRational::Finite(Rational::from_integer(BigInt::from(n)))
    }

    pub fn is_infinite(&self) -> bool {
        matches!(self, ExtRational::Infinity)
    }

    pub fn finite(&self) -> Option<&Rational> {
        match self {
            ExtRational::Finite(r) => Some(r),
            ExtRational::Infinity => None,
        }
    }

    /// `self - other`, with `∞ - finite = ∞` and `∞ - ∞ = ∞`.
    pub(crate) fn saturating_sub(&self, other: &ExtRational) -> ExtRational {
        match (self, other) {
            (ExtRational::Finite(a), ExtRational::Finite(b)) => ExtRational::Finite(a - b),
            _ => ExtRational::Infinity,
        }
    }
}

impl From<Rational> for ExtRational {
    fn from(r: Rational) -> Self {
        ExtRational::Finite(r)
    }
}

impl Add for &ExtRational {
    type Output = ExtRational;

    fn add(self, rhs: &ExtRational) -> ExtRational {
        match (self, rhs) {
            (ExtRational::Finite(a), ExtRational::Finite(b)) => ExtRational::Finite(a + b),
            _ => ExtRational::Infinity,
        }
    }
}

impl Add for ExtRational {
    type Output = ExtRational;

    fn add(self, rhs: ExtRational) -> ExtRational {
        &self + &rhs
    }
}

impl fmt::Display for ExtRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExtRational::Finite(r) => f.write_str(&format_rational(r)),
            ExtRational::Infinity => f.write_str("inf"),
        }
    }
}

impl FromStr for ExtRational {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        if t == "inf" || t == "+inf" || t == "∞" {
            return Ok(ExtRational::Infinity);
        }
        parse_rational(t).map(ExtRational::Finite)
    }
}

/// Formats as `n` or `n/d`.
pub fn format_rational(r: &Rational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Parses `n`, `n/d`, or a parenthesised `(n/d)`; surrounding whitespace is ignored.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let t = s.trim();
    let t = t
        .strip_prefix('(')
        .and_then(|x| x.strip_suffix(')'))
        .unwrap_or(t)
        .trim();
    let (num, den) = match t.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (t, "1"),
    };
    let num: BigInt = num
        .parse()
        .map_err(|_| Error::parse(0, format!("invalid rational `{s}`")))?;
    let den: BigInt = den
        .parse()
        .map_err(|_| Error::parse(0, format!("invalid rational `{s}`")))?;
    if den.is_zero() {
        return Err(Error::parse(0, format!("zero denominator in `{s}`")));
    }
    if den < BigInt::zero() {
        return Err(Error::parse(0, format!("negative denominator in `{s}`")));
    }
    Ok(Rational::new(num, den))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(n.into(), d.into())
    }

    #[test]
    fn infinity_is_greatest() {
        assert!(ExtRational::Infinity > ExtRational::integer(1_000_000));
        assert!(ExtRational::integer(-3) < ExtRational::integer(2));
        assert_eq!(
            &ExtRational::Infinity + &ExtRational::integer(4),
            ExtRational::Infinity
        );
    }

    #[test]
    fn rational_text_round_trip() {
        for r in [q(0, 1), q(-3, 2), q(7, 1), q(2, 4)] {
            assert_eq!(parse_rational(&format_rational(&r)).unwrap(), r);
        }
        assert_eq!(parse_rational("(1/2)").unwrap(), q(1, 2));
        assert!(parse_rational("1/0").is_err());
        assert_eq!("inf".parse::<ExtRational>().unwrap(), ExtRational::Infinity);
    }
}
