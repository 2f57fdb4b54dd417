//! Truncated bivariate Taylor jets about a base point.
//!
//! A jet stores the Taylor coefficients `c[i,j]` of `h1^i h2^j` for
//! `i + j <= order`. `valid` is the highest total degree whose
//! coefficients are trustworthy; differentiation lowers it by one.

use std::fmt::Debug;

use crate::tensor::{DiffRing, ZeroStatus};

/// Scalars a jet can carry: exact algebra elements or binary64.
pub trait JetScalar: Clone + Send + Sync + PartialEq + Debug {
    fn zero_like(&self) -> Self;
    fn one_like(&self) -> Self;
    fn add(&self, other: &Self) -> Self;
    fn sub(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn neg(&self) -> Self;
    fn scale_ratio(&self, num: i64, den: i64) -> Self;
    fn is_zero(&self) -> bool;
    fn try_inv(&self) -> Option<Self>;
}

impl JetScalar for f64 {
    fn zero_like(&self) -> Self {
        0.0
    }
    fn one_like(&self) -> Self {
        1.0
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn sub(&self, other: &Self) -> Self {
        self - other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn neg(&self) -> Self {
        -self
    }
    fn scale_ratio(&self, num: i64, den: i64) -> Self {
        self * num as f64 / den as f64
    }
    fn is_zero(&self) -> bool {
        *self == 0.0
    }
    fn try_inv(&self) -> Option<Self> {
        (*self != 0.0).then(|| 1.0 / self)
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct Jet<S> {
    order: u32,
    valid: i32,
    coeffs: Vec<S>,
}

/// Double-double scalars (pairs of binary64) for cancellation-prone
/// cross-checks.
impl JetScalar for twofloat::TwoFloat {
    fn zero_like(&self) -> Self {
        twofloat::TwoFloat::from(0.0)
    }
    fn one_like(&self) -> Self {
        twofloat::TwoFloat::from(1.0)
    }
    fn add(&self, other: &Self) -> Self {
        *self + *other
    }
    fn sub(&self, other: &Self) -> Self {
        *self - *other
    }
    fn mul(&self, other: &Self) -> Self {
        *self * *other
    }
    fn neg(&self) -> Self {
        -*self
    }
    fn scale_ratio(&self, num: i64, den: i64) -> Self {
        *self * twofloat::TwoFloat::from(num as f64) * dd_recip(twofloat::TwoFloat::from(den as f64))
    }
    fn is_zero(&self) -> bool {
        self.hi() == 0.0 && self.lo() == 0.0
    }
    fn try_inv(&self) -> Option<Self> {
        (!JetScalar::is_zero(self)).then(|| dd_recip(*self))
    }
}

/// `recip` is only binary64-accurate; one Newton step restores the
/// double-double precision.
fn dd_recip(x: twofloat::TwoFloat) -> twofloat::TwoFloat {
    let y = x.recip();
    y + y * (twofloat::TwoFloat::from(1.0) - x * y)
}

#[inline]
fn slot(i: u32, j: u32) -> usize {
    let d = (i + j) as usize;
    d * (d + 1) / 2 + j as usize
}

fn len_for(order: u32) -> usize {
    let n = order as usize + 1;
    n * (n + 1) / 2
}

impl<S: JetScalar> Jet<S> {
    pub fn constant(c: S, order: u32) -> Jet<S> {
        let zero = c.zero_like();
        let mut coeffs = vec![zero; len_for(order)];
        coeffs[0] = c;
        Jet {
            order,
            valid: order as i32,
            coeffs,
        }
    }

    /// The coordinate function `base + h_coord`.
    pub fn variable(base: S, coord: usize, order: u32) -> Jet<S> {
        let one = base.one_like();
        let mut j = Jet::constant(base, order);
        if order >= 1 {
            let idx = if coord == 0 { slot(1, 0) } else { slot(0, 1) };
            j.coeffs[idx] = one;
        }
        j
    }

    /// Builds a jet from a coefficient function `(i, j) -> c[i,j]`.
    pub fn from_fn<F: Fn(u32, u32) -> S>(order: u32, f: F) -> Jet<S> {
        let mut coeffs = Vec::with_capacity(len_for(order));
        for d in 0..=order {
            for j in 0..=d {
                coeffs.push(f(d - j, j));
            }
        }
        Jet {
            order,
            valid: order as i32,
            coeffs,
        }
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    /// Highest total degree with trustworthy coefficients (may be negative).
    pub fn valid(&self) -> i32 {
        self.valid
    }

    pub fn base(&self) -> &S {
        &self.coeffs[0]
    }

    /// Taylor coefficient of `h1^i h2^j`.
    pub fn coeff(&self, i: u32, j: u32) -> &S {
        assert!(
            (i + j) as i32 <= self.valid,
            "coefficient ({i},{j}) beyond valid order {}",
            self.valid
        );
        &self.coeffs[slot(i, j)]
    }

    /// `∂^{i+j} / ∂x1^i ∂x2^j` at the base point.
    pub fn partial(&self, i: u32, j: u32) -> S {
        let f = |n: u32| (1..=n as i64).product::<i64>();
        self.coeff(i, j).scale_ratio(f(i) * f(j), 1)
    }

    fn with_valid(mut self, valid: i32) -> Jet<S> {
        let zero = self.coeffs[0].zero_like();
        for d in 0..=self.order {
            if d as i32 > valid {
                for j in 0..=d {
                    self.coeffs[slot(d - j, j)] = zero.clone();
                }
            }
        }
        self.valid = valid;
        self
    }

    fn zip(&self, other: &Jet<S>, f: impl Fn(&S, &S) -> S) -> Jet<S> {
        assert_eq!(self.order, other.order, "jet order mismatch");
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| f(a, b))
            .collect();
        Jet {
            order: self.order,
            valid: self.valid.min(other.valid),
            coeffs,
        }
        .with_valid(self.valid.min(other.valid))
    }

    pub fn add(&self, other: &Jet<S>) -> Jet<S> {
        self.zip(other, |a, b| a.add(b))
    }

    pub fn sub(&self, other: &Jet<S>) -> Jet<S> {
        self.zip(other, |a, b| a.sub(b))
    }

    pub fn neg(&self) -> Jet<S> {
        self.map(|c| c.neg())
    }

    pub fn map(&self, f: impl Fn(&S) -> S) -> Jet<S> {
        Jet {
            order: self.order,
            valid: self.valid,
            coeffs: self.coeffs.iter().map(f).collect(),
        }
    }

    pub fn scale(&self, c: &S) -> Jet<S> {
        self.map(|x| x.mul(c))
    }

    pub fn mul(&self, other: &Jet<S>) -> Jet<S> {
        assert_eq!(self.order, other.order, "jet order mismatch");
        let valid = self.valid.min(other.valid);
        let zero = self.coeffs[0].zero_like();
        let mut out = vec![zero; self.coeffs.len()];
        for d in 0..=self.order {
            if d as i32 > valid {
                break;
            }
            for j in 0..=d {
                let i = d - j;
                let mut acc = out[slot(i, j)].clone();
                for p in 0..=i {
                    for q in 0..=j {
                        let a = &self.coeffs[slot(p, q)];
                        let b = &other.coeffs[slot(i - p, j - q)];
                        if a.is_zero() || b.is_zero() {
                            continue;
                        }
                        acc = acc.add(&a.mul(b));
                    }
                }
                out[slot(i, j)] = acc;
            }
        }
        Jet {
            order: self.order,
            valid,
            coeffs: out,
        }
    }

    pub fn derivative(&self, coord: usize) -> Jet<S> {
        let zero = self.coeffs[0].zero_like();
        let mut out = vec![zero; self.coeffs.len()];
        for d in 0..self.order {
            for j in 0..=d {
                let i = d - j;
                let (src, k) = if coord == 0 {
                    (slot(i + 1, j), i + 1)
                } else {
                    (slot(i, j + 1), j + 1)
                };
                out[slot(i, j)] = self.coeffs[src].scale_ratio(k as i64, 1);
            }
        }
        Jet {
            order: self.order,
            valid: self.valid - 1,
            coeffs: out,
        }
        .with_valid(self.valid - 1)
    }

    pub fn set_coeff(&mut self, i: u32, j: u32, c: S) {
        self.coeffs[slot(i, j)] = c;
    }

    /// Multiplicative inverse; `None` when the base value is not invertible.
    pub fn try_inv(&self) -> Option<Jet<S>> {
        let inv0 = self.coeffs[0].try_inv()?;
        // a = a0 (1 + e) with e(0) = 0, so 1/a = a0⁻¹ Σ (−e)^k
        let mut e = self.scale(&inv0);
        e.coeffs[0] = e.coeffs[0].zero_like();
        let minus_e = e.neg();
        let one = Jet::constant(inv0.one_like(), self.order).with_valid(self.valid);
        let mut sum = one.clone();
        let mut power = one;
        for _ in 0..self.order {
            power = power.mul(&minus_e);
            sum = sum.add(&power);
        }
        Some(sum.scale(&inv0))
    }

    /// `√(1 + e)` for a jet `e` with zero base, as a binomial series.
    pub fn sqrt_one_plus(e: &Jet<S>) -> Jet<S> {
        assert!(e.base().is_zero(), "sqrt_one_plus needs a zero base");
        let one = Jet::constant(e.base().one_like(), e.order).with_valid(e.valid);
        let mut sum = one.clone();
        let mut power = one;
        // binom(1/2, k) = binom(1/2, k-1) * (1/2 - (k-1)) / k
        let (mut num, mut den) = (1i64, 1i64);
        for k in 1..=e.order as i64 {
            num *= 1 - 2 * (k - 1);
            den *= 2 * k;
            power = power.mul(e);
            sum = sum.add(&power.map(|c| c.scale_ratio(num, den)));
        }
        sum
    }
}

impl<S: JetScalar> DiffRing for Jet<S> {
    fn add(&self, other: &Self) -> Self {
        Jet::add(self, other)
    }
    fn sub(&self, other: &Self) -> Self {
        Jet::sub(self, other)
    }
    fn mul(&self, other: &Self) -> Self {
        Jet::mul(self, other)
    }
    fn neg(&self) -> Self {
        Jet::neg(self)
    }
    fn half(&self) -> Self {
        self.map(|c| c.scale_ratio(1, 2))
    }
    fn derivative(&self, coord: usize) -> Self {
        Jet::derivative(self, coord)
    }
    fn zero_like(&self) -> Self {
        Jet::constant(self.coeffs[0].zero_like(), self.order).with_valid(self.valid)
    }
    fn one_like(&self) -> Self {
        Jet::constant(self.coeffs[0].one_like(), self.order).with_valid(self.valid)
    }
    fn zero_status(&self) -> ZeroStatus {
        let upto = self.valid.min(self.order as i32);
        if upto < 0 {
            return ZeroStatus::ZeroThrough(upto as i64);
        }
        let n = len_for(upto as u32);
        if self.coeffs[..n].iter().all(|c| c.is_zero()) {
            ZeroStatus::ZeroThrough(upto as i64)
        } else {
            ZeroStatus::NonZero
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn close(a: f64, b: f64) -> bool {
        (a - b).abs() <= 1e-12 * (1.0 + b.abs())
    }

    #[test]
    fn product_and_derivative() {
        // f = (1 + h1)(2 + h2) = 2 + 2 h1 + h2 + h1 h2
        let x = Jet::variable(1.0, 0, 3);
        let y = Jet::variable(2.0, 1, 3);
        let f = x.mul(&y);
        assert_eq!(*f.coeff(0, 0), 2.0);
        assert_eq!(*f.coeff(1, 0), 2.0);
        assert_eq!(*f.coeff(0, 1), 1.0);
        assert_eq!(*f.coeff(1, 1), 1.0);
        let fx = f.derivative(0);
        assert_eq!(fx.valid(), 2);
        assert_eq!(*fx.base(), 2.0);
        assert_eq!(*fx.coeff(0, 1), 1.0);
    }

    #[test]
    fn inverse_matches_geometric_series() {
        // 1/(2 + h1) = 1/2 - h1/4 + h1²/8 - h1³/16
        let x = Jet::variable(2.0, 0, 3);
        let inv = x.try_inv().unwrap();
        assert!(close(*inv.coeff(0, 0), 0.5));
        assert!(close(*inv.coeff(1, 0), -0.25));
        assert!(close(*inv.coeff(2, 0), 0.125));
        assert!(close(*inv.coeff(3, 0), -0.0625));
        assert!(Jet::variable(0.0, 1, 3).try_inv().is_none());
    }

    #[test]
    fn sqrt_series() {
        // √(1 + h1) = 1 + h1/2 - h1²/8 + h1³/16
        let e = Jet::variable(0.0, 0, 3);
        let r = Jet::sqrt_one_plus(&e);
        assert!(close(*r.coeff(1, 0), 0.5));
        assert!(close(*r.coeff(2, 0), -0.125));
        assert!(close(*r.coeff(3, 0), 0.0625));
        let sq = r.mul(&r);
        assert!(close(*sq.coeff(3, 0), 0.0));
    }

    #[test]
    fn partials_use_factorials() {
        // f = h1^3 → ∂³f/∂x1³ = 6
        let h = Jet::variable(0.0, 0, 3);
        let f = h.mul(&h).mul(&h);
        assert_eq!(f.partial(3, 0), 6.0);
    }

    #[test]
    #[should_panic]
    fn coefficients_beyond_valid_order_are_refused() {
        let f = Jet::variable(1.0, 0, 3).derivative(0);
        let _ = f.coeff(3, 0);
    }
}
