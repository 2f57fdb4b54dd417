//! Quotients `N / (σ^a · D̂^b)` with a truncated-series numerator.
//!
//! The exponents may be negative, meaning the corresponding factor
//! multiplies the numerator; this keeps inverse metrics (`σ⁶ ĝ / D̂`)
//! in closed form without spending precision on divisions.

use std::sync::{Arc, OnceLock};

use crate::algebra::rational::{self, int, Rational};
use crate::algebra::TruncatedSeries;
use crate::error::{Error, Result};
use crate::tensor::{DiffRing, ZeroStatus};

const MAX_POW: usize = 32;

/// The shared denominators σ and (once known) D̂ with their first partials.
pub struct SigmaField {
    sigma: TruncatedSeries,
    sigma_d: [TruncatedSeries; 2],
    det: Option<(TruncatedSeries, [TruncatedSeries; 2])>,
    sigma_pows: Vec<OnceLock<TruncatedSeries>>,
    det_pows: Vec<OnceLock<TruncatedSeries>>,
}

impl SigmaField {
    pub fn new(sigma: TruncatedSeries) -> Arc<SigmaField> {
        SigmaField::build(sigma, None)
    }

    /// A field that also knows the metric determinant numerator `D̂`.
    pub fn with_det(&self, det: TruncatedSeries) -> Arc<SigmaField> {
        SigmaField::build(self.sigma.clone(), Some(det))
    }

    fn build(sigma: TruncatedSeries, det: Option<TruncatedSeries>) -> Arc<SigmaField> {
        let sigma_d = [sigma.diff(0), sigma.diff(1)];
        let det = det.map(|d| {
            let dd = [d.diff(0), d.diff(1)];
            (d, dd)
        });
        Arc::new(SigmaField {
            sigma,
            sigma_d,
            det,
            sigma_pows: (0..MAX_POW).map(|_| OnceLock::new()).collect(),
            det_pows: (0..MAX_POW).map(|_| OnceLock::new()).collect(),
        })
    }

    pub fn sigma(&self) -> &TruncatedSeries {
        &self.sigma
    }

    pub fn det(&self) -> Option<&TruncatedSeries> {
        self.det.as_ref().map(|d| &d.0)
    }

    pub fn cap(&self) -> u32 {
        self.sigma.cap()
    }

    fn det_parts(&self) -> &(TruncatedSeries, [TruncatedSeries; 2]) {
        self.det
            .as_ref()
            .expect("D̂ denominator used before the metric determinant is known")
    }

    pub fn sigma_pow(&self, k: usize) -> TruncatedSeries {
        if k == 0 {
            return TruncatedSeries::constant(self.sigma.ctx(), rational::one(), self.cap());
        }
        assert!(k < MAX_POW, "σ power {k} too large");
        self.sigma_pows[k]
            .get_or_init(|| self.sigma_pow(k - 1).mul(&self.sigma))
            .clone()
    }

    pub fn det_pow(&self, k: usize) -> TruncatedSeries {
        if k == 0 {
            return TruncatedSeries::constant(self.sigma.ctx(), rational::one(), self.cap());
        }
        assert!(k < MAX_POW, "D̂ power {k} too large");
        self.det_pows[k]
            .get_or_init(|| self.det_pow(k - 1).mul(&self.det_parts().0))
            .clone()
    }

    pub fn constant(self: &Arc<Self>, c: Rational) -> SigmaRational {
        SigmaRational::new(
            self,
            TruncatedSeries::constant(self.sigma.ctx(), c, self.cap()),
            0,
            0,
        )
    }

    pub fn series(self: &Arc<Self>, s: TruncatedSeries) -> SigmaRational {
        SigmaRational::new(self, s, 0, 0)
    }
}

/// `num / (σ^sig_pow · D̂^det_pow)`.
#[derive(Clone)]
pub struct SigmaRational {
    field: Arc<SigmaField>,
    pub num: TruncatedSeries,
    pub sig_pow: i32,
    pub det_pow: i32,
}

impl std::fmt::Debug for SigmaRational {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "({}) / (σ^{} D̂^{})",
            self.num.to_text(),
            self.sig_pow,
            self.det_pow
        )
    }
}

impl SigmaRational {
    pub fn new(field: &Arc<SigmaField>, num: TruncatedSeries, sig_pow: i32, det_pow: i32) -> SigmaRational {
        SigmaRational {
            field: field.clone(),
            num,
            sig_pow,
            det_pow,
        }
    }

    pub fn field(&self) -> &Arc<SigmaField> {
        &self.field
    }

    /// Guaranteed order of the numerator.
    pub fn validity(&self) -> i64 {
        self.num.validated_order()
    }

    /// The same value attached to another field (same σ).
    pub fn rehome(&self, field: &Arc<SigmaField>) -> SigmaRational {
        SigmaRational::new(field, self.num.clone(), self.sig_pow, self.det_pow)
    }

    fn lift(&self, a: i32, b: i32) -> TruncatedSeries {
        let mut n = self.num.clone();
        let da = (a - self.sig_pow) as usize;
        let db = (b - self.det_pow) as usize;
        if da > 0 {
            n = n.mul(&self.field.sigma_pow(da));
        }
        if db > 0 {
            n = n.mul(&self.field.det_pow(db));
        }
        n
    }

    /// Numerator `N'` with `self = N' / (σ^a D̂^b)`. Lowering an exponent
    /// requires an exact division and fails if the factor is not present.
    pub fn numerator_over(&self, a: i32, b: i32) -> Result<TruncatedSeries> {
        let mut n = self.lift(a.max(self.sig_pow), b.max(self.det_pow));
        if self.sig_pow > a {
            let k = (self.sig_pow - a) as usize;
            n = n.exact_divide(&self.field.sigma_pow(k))?;
        }
        if self.det_pow > b {
            let k = (self.det_pow - b) as usize;
            n = n.exact_divide(&self.field.det_pow(k))?;
        }
        Ok(n)
    }

    /// Rewrites with exponents `(a, b)`.
    pub fn rebased(&self, a: i32, b: i32) -> Result<SigmaRational> {
        Ok(SigmaRational::new(&self.field, self.numerator_over(a, b)?, a, b))
    }

    pub fn scale(&self, c: &Rational) -> SigmaRational {
        SigmaRational::new(&self.field, self.num.scale(c), self.sig_pow, self.det_pow)
    }

    /// Parity of the represented value under `(u, v) → (−u, −v)`:
    /// `Some(true)` odd, `Some(false)` even, `None` mixed.
    pub fn parity(&self) -> Option<bool> {
        let body = self.num.body();
        let odd_num = if body.has_parity(&[0, 1], true) {
            true
        } else if body.has_parity(&[0, 1], false) {
            false
        } else {
            return None;
        };
        // σ is odd, D̂ even
        Some(odd_num ^ (self.sig_pow.rem_euclid(2) == 1))
    }

    fn check_field(&self, other: &SigmaRational) {
        assert!(
            Arc::ptr_eq(&self.field, &other.field),
            "SigmaRational operands from different fields"
        );
    }

    fn add_impl(&self, other: &SigmaRational, subtract: bool) -> SigmaRational {
        self.check_field(other);
        let a = self.sig_pow.max(other.sig_pow);
        let b = self.det_pow.max(other.det_pow);
        let (x, y) = (self.lift(a, b), other.lift(a, b));
        let num = if subtract { x.sub(&y) } else { x.add(&y) };
        SigmaRational::new(&self.field, num, a, b)
    }

    pub fn try_sub(&self, other: &SigmaRational) -> Result<SigmaRational> {
        if !Arc::ptr_eq(&self.field, &other.field) {
            return Err(Error::Representation("operands from different fields".into()));
        }
        Ok(self.add_impl(other, true))
    }
}

impl DiffRing for SigmaRational {
    fn add(&self, other: &Self) -> Self {
        self.add_impl(other, false)
    }

    fn sub(&self, other: &Self) -> Self {
        self.add_impl(other, true)
    }

    fn mul(&self, other: &Self) -> Self {
        self.check_field(other);
        SigmaRational::new(
            &self.field,
            self.num.mul(&other.num),
            self.sig_pow + other.sig_pow,
            self.det_pow + other.det_pow,
        )
    }

    fn neg(&self) -> Self {
        SigmaRational::new(&self.field, self.num.neg(), self.sig_pow, self.det_pow)
    }

    fn half(&self) -> Self {
        self.scale(&rational::ratio(1, 2))
    }

    /// `d(N σ^−a D̂^−b) = (N′σD̂ − N(aσ′D̂ + bσD̂′)) / (σ^{a+1} D̂^{b+1})`,
    /// dropping the σ or D̂ factor when the matching exponent is zero.
    fn derivative(&self, coord: usize) -> Self {
        let f = &self.field;
        let (a, b) = (self.sig_pow, self.det_pow);
        let ea = (a != 0) as i32;
        let eb = (b != 0) as i32;
        let mut num = self.num.diff(coord);
        if ea == 1 {
            num = num.mul(&f.sigma);
        }
        if eb == 1 {
            num = num.mul(&f.det_parts().0);
        }
        if a != 0 {
            let mut t = self.num.mul(&f.sigma_d[coord]).scale(&int(a as i64));
            if eb == 1 {
                t = t.mul(&f.det_parts().0);
            }
            num = num.sub(&t);
        }
        if b != 0 {
            let mut t = self.num.mul(&f.det_parts().1[coord]).scale(&int(b as i64));
            if ea == 1 {
                t = t.mul(&f.sigma);
            }
            num = num.sub(&t);
        }
        SigmaRational::new(f, num, a + ea, b + eb)
    }

    fn zero_like(&self) -> Self {
        self.field.constant(rational::zero())
    }

    fn one_like(&self) -> Self {
        self.field.constant(rational::one())
    }

    fn zero_status(&self) -> ZeroStatus {
        if !self.num.body().is_zero() {
            ZeroStatus::NonZero
        } else {
            match self.num.known_order() {
                None => ZeroStatus::Zero,
                Some(k) => ZeroStatus::ZeroThrough(k),
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rational::ratio;
    use crate::algebra::{term, Context, Poly};

    fn field() -> (Arc<Context>, Arc<SigmaField>) {
        let ctx = Context::sigma();
        let s = &Poly::var(&ctx, 0) + &term(&ctx, ratio(-1, 3), &[0, 3]);
        (ctx, SigmaField::new(TruncatedSeries::from_poly(s, 16)))
    }

    #[test]
    fn derivative_of_inverse_square() {
        // d/du (1/σ²) = −2σ_u/σ³ with σ_u = 1
        let (ctx, f) = field();
        let z = SigmaRational::new(&f, TruncatedSeries::constant(&ctx, int(1), 16), 2, 0);
        let dz = z.derivative(0);
        assert_eq!(dz.sig_pow, 3);
        assert_eq!(dz.num.body(), &Poly::constant(&ctx, int(-2)));
    }

    #[test]
    fn negative_exponent_multiplies() {
        let (ctx, f) = field();
        let x = SigmaRational::new(&f, TruncatedSeries::constant(&ctx, int(1), 16), -1, 0);
        let n = x.numerator_over(0, 0).unwrap();
        assert_eq!(n.body(), f.sigma().body());
        let y = SigmaRational::new(&f, f.sigma().clone(), 1, 0);
        assert_eq!(y.numerator_over(0, 0).unwrap().body(), &Poly::constant(&ctx, int(1)));
    }

    #[test]
    fn sums_use_common_denominators() {
        let (ctx, f) = field();
        let one = f.constant(int(1));
        let inv = SigmaRational::new(&f, TruncatedSeries::constant(&ctx, int(1), 16), 1, 0);
        // 1 + 1/σ = (σ + 1)/σ
        let s = one.add(&inv);
        assert_eq!(s.sig_pow, 1);
        assert_eq!(s.num.body(), &(f.sigma().body() + &Poly::constant(&ctx, int(1))));
        assert!(s.sub(&s).zero_status().is_zero_or_qualified());
    }

    #[test]
    fn not_divisible_numerator() {
        let (ctx, f) = field();
        let x = SigmaRational::new(&f, TruncatedSeries::from_poly(Poly::var(&ctx, 1), 16), 2, 0);
        assert!(x.numerator_over(1, 0).is_err());
    }
}
