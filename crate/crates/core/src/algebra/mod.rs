//! Exact rationals, sparse polynomials and truncated series.

pub mod monomial;
pub mod poly;
pub mod rational;
pub mod series;

pub use monomial::{Context, Monomial};
pub use poly::{term, ArithOp, Poly};
pub use rational::Rational;
pub use series::{LowestTerms, TruncatedSeries};
