//! Truncated power series in the two grading variables with exact
//! precision bookkeeping.
//!
//! A series either is *exact* (its body is the whole value) or is known
//! through some grading degree `N`: every coefficient of degree `<= N`
//! is correct and nothing above `N` is stored. Every operation computes
//! the worst-case order that remains valid.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use super::monomial::Context;
use super::poly::Poly;
use super::rational::Rational;
use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq)]
pub struct TruncatedSeries {
    body: Poly,
    /// `None`: the body is the exact value.
    known: Option<i64>,
    cap: u32,
}

/// Result of looking for the lowest-degree part of a series.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LowestTerms {
    Found { degree: u32, part: Poly },
    /// No nonzero coefficient through the given order.
    ZeroThrough(i64),
    /// The series is exactly zero.
    Zero,
}

impl LowestTerms {
    pub fn degree(&self) -> Option<u32> {
        match self {
            LowestTerms::Found { degree, .. } => Some(*degree),
            _ => None,
        }
    }
}

impl TruncatedSeries {
    /// Wraps an exact polynomial. If its degree exceeds `cap` the excess
    /// is dropped and the series becomes known through `cap`.
    pub fn from_poly(body: Poly, cap: u32) -> TruncatedSeries {
        match body.max_degree() {
            Some(d) if d > cap => TruncatedSeries {
                body: body.truncate(cap),
                known: Some(cap as i64),
                cap,
            },
            _ => TruncatedSeries {
                body,
                known: None,
                cap,
            },
        }
    }

    /// A series whose body is correct only through degree `known`.
    pub fn with_known(body: Poly, known: i64, cap: u32) -> TruncatedSeries {
        let known = known.min(cap as i64);
        TruncatedSeries {
            body: body.truncate_below(known),
            known: Some(known),
            cap,
        }
    }

    pub fn zero(ctx: &Arc<Context>, cap: u32) -> TruncatedSeries {
        TruncatedSeries::from_poly(Poly::zero(ctx), cap)
    }

    pub fn constant(ctx: &Arc<Context>, c: Rational, cap: u32) -> TruncatedSeries {
        TruncatedSeries::from_poly(Poly::constant(ctx, c), cap)
    }

    pub fn body(&self) -> &Poly {
        &self.body
    }

    pub fn into_body(self) -> Poly {
        self.body
    }

    pub fn ctx(&self) -> &Arc<Context> {
        self.body.ctx()
    }

    pub fn cap(&self) -> u32 {
        self.cap
    }

    pub fn is_exact(&self) -> bool {
        self.known.is_none()
    }

    /// Highest grading degree through which the coefficients are certain;
    /// `None` for an exact series.
    pub fn known_order(&self) -> Option<i64> {
        self.known
    }

    /// Known order with exact series reported at their cap.
    pub fn validated_order(&self) -> i64 {
        self.known.unwrap_or(self.cap as i64)
    }

    /// Lower bound on the valuation of the represented value; `None` if
    /// the value is exactly zero.
    pub fn valuation(&self) -> Option<i64> {
        match (self.body.min_degree(), self.known) {
            (Some(d), _) => Some(d as i64),
            (None, None) => None,
            (None, Some(k)) => Some(k + 1),
        }
    }

    fn combine_known(a: Option<i64>, b: Option<i64>) -> Option<i64> {
        match (a, b) {
            (None, x) | (x, None) => x,
            (Some(x), Some(y)) => Some(x.min(y)),
        }
    }

    fn finish(body: Poly, known: Option<i64>, cap: u32) -> TruncatedSeries {
        match known {
            None => TruncatedSeries::from_poly(body, cap),
            Some(k) => TruncatedSeries::with_known(body, k, cap),
        }
    }

    /// Product; see the module docs for the order rule
    /// `min(known(s) + val(t), known(t) + val(s))`.
    pub fn mul(&self, other: &TruncatedSeries) -> TruncatedSeries {
        let cap = self.cap.min(other.cap);
        let (vs, vt) = (self.valuation(), other.valuation());
        if vs.is_none() || vt.is_none() {
            return TruncatedSeries::zero(self.ctx(), cap);
        }
        let (vs, vt) = (vs.unwrap(), vt.unwrap());
        let known = TruncatedSeries::combine_known(
            self.known.map(|k| k + vt),
            other.known.map(|k| k + vs),
        );
        let limit = known.map_or(cap as i64, |k| k.min(cap as i64));
        if limit < 0 {
            return TruncatedSeries::with_known(Poly::zero(self.ctx()), limit, cap);
        }
        let body = self.body.mul_truncated(&other.body, Some(limit as u32));
        // exact operands: deg(st) = deg(s) + deg(t) over an integral domain
        let known = known.or_else(|| {
            let top = self.body.max_degree().unwrap_or(0) + other.body.max_degree().unwrap_or(0);
            (top > cap).then_some(cap as i64)
        });
        TruncatedSeries::finish(body, known, cap)
    }

    pub fn add(&self, other: &TruncatedSeries) -> TruncatedSeries {
        let known = TruncatedSeries::combine_known(self.known, other.known);
        TruncatedSeries::finish(&self.body + &other.body, known, self.cap.min(other.cap))
    }

    pub fn sub(&self, other: &TruncatedSeries) -> TruncatedSeries {
        let known = TruncatedSeries::combine_known(self.known, other.known);
        TruncatedSeries::finish(&self.body - &other.body, known, self.cap.min(other.cap))
    }

    pub fn neg(&self) -> TruncatedSeries {
        TruncatedSeries {
            body: -&self.body,
            known: self.known,
            cap: self.cap,
        }
    }

    pub fn scale(&self, c: &Rational) -> TruncatedSeries {
        TruncatedSeries {
            body: self.body.scale(c),
            known: self.known,
            cap: self.cap,
        }
    }

    pub fn pow(&self, k: u32) -> TruncatedSeries {
        let mut acc = TruncatedSeries::constant(self.ctx(), super::rational::one(), self.cap);
        for _ in 0..k {
            acc = acc.mul(self);
        }
        acc
    }

    /// Partial derivative. Differentiating in a grading variable costs one
    /// order of precision; parameter derivatives keep it.
    pub fn diff(&self, index: usize) -> TruncatedSeries {
        let grading = index < self.ctx().grading();
        let known = self.known.map(|k| if grading { k - 1 } else { k });
        TruncatedSeries::finish(self.body.diff(index), known, self.cap)
    }

    /// Terms free of every curve parameter.
    pub fn lambda_free_part(&self) -> Poly {
        self.body.parameter_free_part()
    }

    pub fn lambda_free(&self) -> TruncatedSeries {
        TruncatedSeries {
            body: self.body.parameter_free_part(),
            known: self.known,
            cap: self.cap,
        }
    }

    /// Substitutes numeric values for parameter slots.
    pub fn specialize(&self, values: &[(usize, Rational)]) -> TruncatedSeries {
        TruncatedSeries {
            body: self.body.substitute(values),
            known: self.known,
            cap: self.cap,
        }
    }

    pub fn with_cap(&self, cap: u32) -> TruncatedSeries {
        let known = match self.known {
            Some(k) => Some(k),
            None if self.body.max_degree().is_some_and(|d| d > cap) => Some(cap as i64),
            None => None,
        };
        TruncatedSeries::finish(self.body.clone(), known, cap)
    }

    /// Drops everything above `order`, marking the series known only that far.
    pub fn truncate(&self, order: i64) -> TruncatedSeries {
        let known = TruncatedSeries::combine_known(self.known, Some(order));
        TruncatedSeries::finish(self.body.clone(), known, self.cap)
    }

    /// True when the represented value has no nonzero coefficient through
    /// its known order (or is exactly zero).
    pub fn is_zero_through_known(&self) -> bool {
        self.body.is_zero()
    }

    /// Minimal grading degree and the exact homogeneous part there.
    pub fn lowest_terms(&self) -> LowestTerms {
        match self.body.min_degree() {
            Some(d) => LowestTerms::Found {
                degree: d,
                part: self.body.homogeneous(d),
            },
            None => match self.known {
                None => LowestTerms::Zero,
                Some(k) => LowestTerms::ZeroThrough(k),
            },
        }
    }

    /// Quotient `q` with `self = q * d` through the validated order.
    ///
    /// Division proceeds degree by degree, dividing each homogeneous
    /// remainder by the lowest homogeneous part of `d`.
    pub fn exact_divide(&self, d: &TruncatedSeries) -> Result<TruncatedSeries> {
        let cap = self.cap.min(d.cap);
        let m = match d.body.min_degree() {
            Some(m) => m as i64,
            None => {
                return Err(Error::NotDivisible {
                    degree: 0,
                    remainder: "divisor has no known nonzero term".into(),
                })
            }
        };
        let lead = d.body.homogeneous(m as u32);
        let vs = match self.valuation() {
            None => return Ok(TruncatedSeries::zero(self.ctx(), cap)),
            Some(v) => v,
        };
        if vs < m && self.body.min_degree().is_some() {
            return Err(Error::NotDivisible {
                degree: vs,
                remainder: self.body.homogeneous(vs as u32).to_text(),
            });
        }
        let vq = vs - m;
        let known = TruncatedSeries::combine_known(
            self.known.map(|k| k - m),
            d.known.map(|k| k - m + vq),
        );
        let last = known.map_or(cap as i64, |k| k.min(cap as i64));
        let both_exact = known.is_none();
        let rem_limit = if both_exact { None } else { Some((last + m).max(0) as u32) };

        let mut rem = match rem_limit {
            Some(l) => self.body.truncate(l),
            None => self.body.clone(),
        };
        let mut quotient = Poly::zero(self.ctx());
        let mut n = vq;
        while n <= last && !rem.is_zero() {
            let slice = rem.homogeneous((n + m) as u32);
            if !slice.is_zero() {
                let qn = slice.divide_exact(&lead).ok_or_else(|| Error::NotDivisible {
                    degree: n + m,
                    remainder: slice.to_text(),
                })?;
                rem = &rem - &qn.mul_truncated(&d.body, rem_limit);
                quotient = &quotient + &qn;
            }
            n += 1;
        }
        if both_exact && rem.is_zero() {
            return Ok(TruncatedSeries::from_poly(quotient, cap));
        }
        if let Some(low) = rem.min_degree() {
            if (low as i64) <= last + m {
                return Err(Error::NotDivisible {
                    degree: low as i64,
                    remainder: rem.homogeneous(low).to_text(),
                });
            }
        }
        Ok(TruncatedSeries::with_known(quotient, last, cap))
    }

    pub fn to_text(&self) -> String {
        match self.known {
            None => self.body.to_text(),
            Some(k) => format!("{} + O({})", self.body.to_text(), k + 1),
        }
    }
}

impl fmt::Debug for TruncatedSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Series({}; cap {})", self.to_text(), self.cap)
    }
}

impl Add for &TruncatedSeries {
    type Output = TruncatedSeries;
    fn add(self, rhs: &TruncatedSeries) -> TruncatedSeries {
        TruncatedSeries::add(self, rhs)
    }
}

impl Sub for &TruncatedSeries {
    type Output = TruncatedSeries;
    fn sub(self, rhs: &TruncatedSeries) -> TruncatedSeries {
        TruncatedSeries::sub(self, rhs)
    }
}

impl Mul for &TruncatedSeries {
    type Output = TruncatedSeries;
    fn mul(self, rhs: &TruncatedSeries) -> TruncatedSeries {
        TruncatedSeries::mul(self, rhs)
    }
}

impl Neg for &TruncatedSeries {
    type Output = TruncatedSeries;
    fn neg(self) -> TruncatedSeries {
        TruncatedSeries::neg(self)
    }
}
