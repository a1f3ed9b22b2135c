use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};

use super::ext::{format_rational, ExtRational, Rational};
use crate::error::{Error, Result};

/// A truncated Puiseux series `Σ c_e T^e + O(T^precision)`.
///
/// Terms are kept sorted by strictly increasing exponent with nonzero
/// coefficients, and every exponent is below `precision`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PuiseuxSeries {
    terms: Vec<(Rational, Rational)>,
    precision: ExtRational,
}

impl PuiseuxSeries {
    /// Builds a canonical series. Zero coefficients and terms at or beyond
    /// `precision` are dropped; repeated exponents are summed.
    pub fn new(
        terms: impl IntoIterator<Item = (Rational, Rational)>,
        precision: ExtRational,
    ) -> Self {
        let mut terms: Vec<(Rational, Rational)> = terms.into_iter().collect();
        terms.sort_by(|a, b| a.0.cmp(&b.0));
        let mut merged: Vec<(Rational, Rational)> = Vec::with_capacity(terms.len());
        for (e, c) in terms {
            match merged.last_mut() {
                Some((le, lc)) if *le == e => *lc += c,
                _ => merged.push((e, c)),
            }
        }
        merged.retain(|(e, c)| !c.is_zero() && ExtRational::Finite(e.clone()) < precision);
        PuiseuxSeries {
            terms: merged,
            precision,
        }
    }

    pub fn zero() -> Self {
        PuiseuxSeries {
            terms: Vec::new(),
            precision: ExtRational::Infinity,
        }
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Self::monomial(c, Rational::zero())
    }

    /// `c · T^e`, exact.
    pub fn monomial(c: Rational, e: Rational) -> Self {
        Self::new([(e, c)], ExtRational::Infinity)
    }

    /// `T^e`, exact.
    pub fn t_pow(e: Rational) -> Self {
        Self::monomial(Rational::one(), e)
    }

    /// `O(T^p)`: nothing known below `p`.
    pub fn unknown_from(p: Rational) -> Self {
        PuiseuxSeries {
            terms: Vec::new(),
            precision: ExtRational::Finite(p),
        }
    }

    pub fn terms(&self) -> &[(Rational, Rational)] {
        &self.terms
    }

    pub fn precision(&self) -> &ExtRational {
        &self.precision
    }

    pub fn is_exact(&self) -> bool {
        self.precision.is_infinite()
    }

    /// True only for the exact zero element.
    pub fn is_zero(&self) -> bool {
        self.terms.is_empty() && self.is_exact()
    }

    /// Drops everything at or above `p` (precision becomes `min(precision, p)`).
    pub fn truncate(&self, p: &ExtRational) -> Self {
        let precision = self.precision.clone().min(p.clone());
        Self::new(self.terms.iter().cloned(), precision)
    }

    /// Smallest exponent that is guaranteed to be known-or-absent: the leading
    /// exponent when a term is known, else the precision.
    fn valuation_lower_bound(&self) -> ExtRational {
        match self.terms.first() {
            Some((e, _)) => ExtRational::Finite(e.clone()),
            None => self.precision.clone(),
        }
    }

    fn indeterminate(&self) -> Error {
        Error::IndeterminateAtPrecision {
            precision: self.precision.to_string(),
        }
    }

    /// Smallest exponent with a nonzero coefficient; `+∞` for zero.
    pub fn valuation(&self) -> Result<ExtRational> {
        match self.terms.first() {
            Some((e, _)) => Ok(ExtRational::Finite(e.clone())),
            None if self.is_exact() => Ok(ExtRational::Infinity),
            None => Err(self.indeterminate()),
        }
    }

    /// Sign of the series in the order where `T` is positive and infinitesimal.
    pub fn signum(&self) -> Result<Ordering> {
        match self.terms.first() {
            Some((_, c)) if c.is_positive() => Ok(Ordering::Greater),
            Some(_) => Ok(Ordering::Less),
            None if self.is_exact() => Ok(Ordering::Equal),
            None => Err(self.indeterminate()),
        }
    }

    pub fn compare(&self, other: &Self) -> Result<Ordering> {
        (self - other).signum()
    }

    pub fn abs(&self) -> Result<Self> {
        Ok(match self.signum()? {
            Ordering::Less => -self,
            _ => self.clone(),
        })
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self::new(
            self.terms.iter().map(|(e, x)| (e.clone(), x * c)),
            self.precision.clone(),
        )
    }

    /// Multiplies by `T^s`: shifts every exponent and the precision by `s`.
    pub fn shift(&self, s: &Rational) -> Self {
        let precision = &self.precision + &ExtRational::Finite(s.clone());
        Self::new(
            self.terms.iter().map(|(e, c)| (e + s, c.clone())),
            precision,
        )
    }
}

impl Add for &PuiseuxSeries {
    type Output = PuiseuxSeries;

    fn add(self, rhs: &PuiseuxSeries) -> PuiseuxSeries {
        let precision = self.precision.clone().min(rhs.precision.clone());
        PuiseuxSeries::new(
            self.terms.iter().chain(rhs.terms.iter()).cloned(),
            precision,
        )
    }
}

impl Neg for &PuiseuxSeries {
    type Output = PuiseuxSeries;

    fn neg(self) -> PuiseuxSeries {
        PuiseuxSeries {
            terms: self.terms.iter().map(|(e, c)| (e.clone(), -c)).collect(),
            precision: self.precision.clone(),
        }
    }
}

impl Sub for &PuiseuxSeries {
    type Output = PuiseuxSeries;

    fn sub(self, rhs: &PuiseuxSeries) -> PuiseuxSeries {
        self + &(-rhs)
    }
}

impl Mul for &PuiseuxSeries {
    type Output = PuiseuxSeries;

    fn mul(self, rhs: &PuiseuxSeries) -> PuiseuxSeries {
        let precision = (&self.precision + &rhs.valuation_lower_bound())
            .min(&rhs.precision + &self.valuation_lower_bound());
        let mut terms = Vec::with_capacity(self.terms.len() * rhs.terms.len());
        for (ea, ca) in &self.terms {
            for (eb, cb) in &rhs.terms {
                terms.push((ea + eb, ca * cb));
            }
        }
        PuiseuxSeries::new(terms, precision)
    }
}

macro_rules! forward_owned {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr for PuiseuxSeries {
            type Output = PuiseuxSeries;
            fn $m(self, rhs: PuiseuxSeries) -> PuiseuxSeries {
                (&self).$m(&rhs)
            }
        }
    )*};
}
forward_owned!(Add add, Sub sub, Mul mul);

impl Neg for PuiseuxSeries {
    type Output = PuiseuxSeries;

    fn neg(self) -> PuiseuxSeries {
        -&self
    }
}

fn format_exponent(e: &Rational) -> String {
    if e.denom().is_one() {
        e.numer().to_string()
    } else {
        format!("({})", format_rational(e))
    }
}

/// Canonical text form, parseable by [`parse_series`](super::parse_series).
impl fmt::Display for PuiseuxSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (e, c) in &self.terms {
            let negative = c.is_negative();
            let mag = c.abs();
            if first {
                if negative {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if negative { " - " } else { " + " })?;
            }
            first = false;
            if e.is_zero() {
                f.write_str(&format_rational(&mag))?;
                continue;
            }
            if !mag.is_one() {
                write!(f, "{}*", format_rational(&mag))?;
            }
            if e.is_one() {
                f.write_str("T")?;
            } else {
                write!(f, "T^{}", format_exponent(e))?;
            }
        }
        match &self.precision {
            ExtRational::Infinity if first => f.write_str("0"),
            ExtRational::Infinity => Ok(()),
            ExtRational::Finite(p) => {
                if !first {
                    f.write_str(" + ")?;
                }
                write!(f, "O(T^{})", format_exponent(p))
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::super::parse_series;
    use super::*;

    fn s(text: &str) -> PuiseuxSeries {
        parse_series(text).unwrap()
    }

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(n.into(), d.into())
    }

    #[test]
    fn addition_examples() {
        assert_eq!(&s("1 - 1*T^4") + &s("T^4"), PuiseuxSeries::one());
        let sum = &s("T^(1/2)") + &s("T^(1/3)");
        assert_eq!(sum.terms()[0].0, q(1, 3));
        assert_eq!(sum.terms()[1].0, q(1, 2));
        assert_eq!(&s("1 + O(T^2)") + &s("T^3"), s("1 + O(T^2)"));
    }

    #[test]
    fn multiplication_examples() {
        assert_eq!(&s("1 - T^4") * &s("1 + T^4"), s("1 - T^8"));
        assert_eq!(&s("2*T^(1/2)") * &s("3*T^(3/2)"), s("6*T^2"));
        let p = &s("1 + O(T)") * &s("T^2");
        assert_eq!(p, s("T^2 + O(T^3)"));
        assert_eq!(p.precision(), &ExtRational::integer(3));
    }

    #[test]
    fn product_with_unknown_factor() {
        // O(T^2) * T^3 = O(T^5)
        let p = &PuiseuxSeries::unknown_from(q(2, 1)) * &s("T^3");
        assert!(p.terms().is_empty());
        assert_eq!(p.precision(), &ExtRational::integer(5));
        // 0 * O(T^2) is exactly 0
        assert!((&PuiseuxSeries::zero() * &PuiseuxSeries::unknown_from(q(2, 1))).is_zero());
    }

    #[test]
    fn comparison_examples() {
        assert_eq!(s("T").compare(&s("1/1000000")).unwrap(), Ordering::Less);
        assert_eq!(s("3*T^2").compare(&s("T^2")).unwrap(), Ordering::Greater);
        assert_eq!(s("1 - T^4").compare(&s("1")).unwrap(), Ordering::Less);
        assert_eq!(s("T^2").compare(&s("T^2")).unwrap(), Ordering::Equal);
    }

    #[test]
    fn comparison_needs_a_known_leading_term() {
        let a = s("1 + T + O(T^2)");
        let b = s("1 + T");
        assert!(matches!(
            a.compare(&b),
            Err(Error::IndeterminateAtPrecision { .. })
        ));
        assert_eq!(
            s("1 + O(T^2)").compare(&s("1 + T")).unwrap(),
            Ordering::Less
        );
    }

    #[test]
    fn valuation_examples() {
        assert_eq!(
            s("3*T^2 - T^5").valuation().unwrap(),
            ExtRational::integer(2)
        );
        assert_eq!(
            PuiseuxSeries::zero().valuation().unwrap(),
            ExtRational::Infinity
        );
        assert_eq!(
            s("2*T^(1/2) + T").valuation().unwrap(),
            ExtRational::Finite(q(1, 2))
        );
        assert!(s("O(T^3)").valuation().is_err());
    }

    #[test]
    fn display_is_canonical() {
        for text in [
            "0",
            "1 - T^4",
            "3/2*T^(1/2) + O(T^5)",
            "-T + 2*T^(-1/3)",
            "O(T^(7/2))",
            "-5/3",
        ] {
            let a = s(text);
            assert_eq!(s(&a.to_string()), a, "{text}");
        }
        assert_eq!(s("1*T^(1/2)").to_string(), "T^(1/2)");
    }

    #[test]
    fn shift_and_truncate() {
        let a = s("1 + T + O(T^3)");
        assert_eq!(a.shift(&q(2, 1)), s("T^2 + T^3 + O(T^5)"));
        assert_eq!(a.truncate(&ExtRational::integer(1)), s("1 + O(T)"));
    }
}
