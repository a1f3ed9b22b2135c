use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::ext::{ExtRational, Rational};
use super::series::PuiseuxSeries;
use crate::error::{Error, Result};

/// Parses the series text format.
///
/// ```text
/// series ::= term (("+"|"-") term)* ["+" "O(" "T^" exp ")"]
/// term   ::= coeff | coeff "*" "T" | coeff "*" "T^" exp | "T" | "T^" exp
/// coeff  ::= int | int "/" posint
/// exp    ::= int | "(" int "/" posint ")"
/// ```
///
/// Whitespace is ignored. A leading sign and a bare `O(T^p)` are also accepted.
pub fn parse_series(text: &str) -> Result<PuiseuxSeries> {
    Parser::new(text).series()
}

impl std::str::FromStr for PuiseuxSeries {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_series(s)
    }
}

struct Parser {
    chars: Vec<(usize, char)>,
    at: usize,
    end: usize,
}

impl Parser {
    fn new(text: &str) -> Self {
        let chars: Vec<(usize, char)> = text
            .char_indices()
            .filter(|(_, c)| !c.is_whitespace())
            .collect();
        Parser {
            chars,
            at: 0,
            end: text.len(),
        }
    }

    fn pos(&self) -> usize {
        self.chars.get(self.at).map_or(self.end, |(p, _)| *p)
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.at).map(|(_, c)| *c)
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(c) {
            self.at += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: char) -> Result<()> {
        if self.eat(c) {
            Ok(())
        } else {
            Err(self.error(format!("expected `{c}`")))
        }
    }

    fn error(&self, message: impl Into<String>) -> Error {
        Error::parse(self.pos(), message)
    }

    fn series(&mut self) -> Result<PuiseuxSeries> {
        if self.peek().is_none() {
            return Err(self.error("empty series"));
        }
        let mut terms: Vec<(Rational, Rational)> = Vec::new();
        let mut precision = ExtRational::Infinity;
        let mut negative = if self.eat('-') {
            true
        } else {
            self.eat('+');
            false
        };
        loop {
            if self.peek() == Some('O') {
                if negative {
                    return Err(self.error("order term must be added, not subtracted"));
                }
                precision = ExtRational::Finite(self.order_term()?);
                if self.peek().is_some() {
                    return Err(self.error("order term must come last"));
                }
                break;
            }
            let start = self.pos();
            let (coeff, exp) = self.term()?;
            if terms.iter().any(|(e, _)| *e == exp) {
                return Err(Error::parse(start, "duplicate exponent"));
            }
            terms.push((exp, if negative { -coeff } else { coeff }));
            match self.peek() {
                None => break,
                Some('+') => {
                    self.at += 1;
                    negative = false;
                }
                Some('-') => {
                    self.at += 1;
                    negative = true;
                }
                Some(c) => return Err(self.error(format!("unexpected `{c}`"))),
            }
        }
        Ok(PuiseuxSeries::new(terms, precision))
    }

    fn order_term(&mut self) -> Result<Rational> {
        self.expect('O')?;
        self.expect('(')?;
        let p = self.power()?;
        self.expect(')')?;
        Ok(p)
    }

    /// Returns `(coefficient, exponent)`.
    fn term(&mut self) -> Result<(Rational, Rational)> {
        if self.peek() == Some('T') {
            let e = self.power()?;
            return Ok((Rational::one(), e));
        }
        let coeff = self.coefficient()?;
        if self.eat('*') {
            if self.peek() != Some('T') {
                return Err(self.error("expected `T` after `*`"));
            }
            let e = self.power()?;
            Ok((coeff, e))
        } else {
            Ok((coeff, Rational::zero()))
        }
    }

    /// `"T"` or `"T^" exp`.
    fn power(&mut self) -> Result<Rational> {
        self.expect('T')?;
        if self.eat('^') {
            self.exponent()
        } else {
            Ok(Rational::one())
        }
    }

    fn coefficient(&mut self) -> Result<Rational> {
        let num = self.integer()?;
        if self.eat('/') {
            let den = self.positive_integer()?;
            Ok(Rational::new(num, den))
        } else {
            Ok(Rational::from_integer(num))
        }
    }

    fn exponent(&mut self) -> Result<Rational> {
        if self.eat('(') {
            let num = self.integer()?;
            let r = if self.eat('/') {
                let den = self.positive_integer()?;
                Rational::new(num, den)
            } else {
                Rational::from_integer(num)
            };
            self.expect(')')?;
            Ok(r)
        } else {
            Ok(Rational::from_integer(self.integer()?))
        }
    }

    fn positive_integer(&mut self) -> Result<BigInt> {
        let start = self.pos();
        let n = self.digits()?;
        if n.is_zero() {
            return Err(Error::parse(start, "zero denominator"));
        }
        Ok(n)
    }

    fn integer(&mut self) -> Result<BigInt> {
        let negative = self.eat('-');
        let n = self.digits()?;
        Ok(if negative { -n } else { n })
    }

    fn digits(&mut self) -> Result<BigInt> {
        let begin = self.at;
        while matches!(self.peek(), Some(c) if c.is_ascii_digit()) {
            self.at += 1;
        }
        if begin == self.at {
            return Err(self.error("expected digits"));
        }
        let s: String = self.chars[begin..self.at].iter().map(|(_, c)| *c).collect();
        Ok(s.parse().expect("ascii digits"))
    }
}
