use std::fmt;
use std::str::FromStr;

use num_traits::One;

use super::ext::{format_rational, ExtRational, Rational};
use super::parse::parse_series;
use super::series::PuiseuxSeries;
use crate::error::{Error, Result};

/// A principal convex subgroup of the Puiseux field.
///
/// Non-strict `T^q` is `{x : |x| <= N T^q for some integer N}`, i.e. `val(x) >= q`.
/// Strict `>T^q` is `{x : |x| <= N T^q for every N}`, i.e. `val(x) > q`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Velocity {
    pub threshold: Rational,
    pub strict: bool,
}

impl Velocity {
    pub fn non_strict(threshold: Rational) -> Self {
        Velocity {
            threshold,
            strict: false,
        }
    }

    pub fn strict(threshold: Rational) -> Self {
        Velocity {
            threshold,
            strict: true,
        }
    }

    /// Membership of an element with the given valuation.
    pub fn contains_valuation(&self, valuation: &ExtRational) -> bool {
        match valuation {
            ExtRational::Infinity => true,
            ExtRational::Finite(v) if self.strict => *v > self.threshold,
            ExtRational::Finite(v) => *v >= self.threshold,
        }
    }

    pub fn contains(&self, x: &PuiseuxSeries) -> Result<bool> {
        Ok(self.contains_valuation(&x.valuation()?))
    }
}

impl fmt::Display for Velocity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.strict {
            f.write_str(">")?;
        }
        if self.threshold.denom().is_one() {
            write!(f, "T^{}", self.threshold.numer())
        } else {
            write!(f, "T^({})", format_rational(&self.threshold))
        }
    }
}

/// Parses `T^q` or `>T^q`; `T` alone means `T^1`.
impl FromStr for Velocity {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        let (strict, body) = match t.strip_prefix('>') {
            Some(rest) => (true, rest),
            None => (false, t),
        };
        let series = parse_series(body)?;
        match series.terms() {
            [(e, c)] if c.is_one() && series.is_exact() && body.trim_start().starts_with('T') => {
                Ok(Velocity {
                    threshold: e.clone(),
                    strict,
                })
            }
            _ => Err(Error::parse(
                0,
                format!("velocity must be `T^q` or `>T^q`, got `{s}`"),
            )),
        }
    }
}
