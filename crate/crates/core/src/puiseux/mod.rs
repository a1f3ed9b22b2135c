//! Truncated real Puiseux series in a positive infinitesimal `T`.
//!
//! Elements carry an explicit precision: every exponent below the precision
//! is known exactly, nothing is known at or above it. Any decision that needs
//! a term which has been truncated away fails with
//! [`Error::IndeterminateAtPrecision`](crate::Error::IndeterminateAtPrecision).

mod ext;
mod parse;
mod series;
mod velocity;

pub use ext::{format_rational, parse_rational, ExtRational, Rational};
pub use parse::parse_series;
pub use series::PuiseuxSeries;
pub use velocity::Velocity;
