//! The rank-4 algebra `Q[y1, y2] / (y1² − c1, y2² − c2)`.

use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use super::jet::JetScalar;
use crate::algebra::rational::{self, Rational};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuadCtx {
    pub c1: Rational,
    pub c2: Rational,
}

/// `a + b·y1 + c·y2 + d·y1y2`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuadExt {
    pub ctx: Arc<QuadCtx>,
    pub a: Rational,
    pub b: Rational,
    pub c: Rational,
    pub d: Rational,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum QuadOp {
    Add,
    Mul,
    Inv,
}

impl QuadExt {
    pub fn new(ctx: &Arc<QuadCtx>, a: Rational, b: Rational, c: Rational, d: Rational) -> QuadExt {
        QuadExt {
            ctx: ctx.clone(),
            a,
            b,
            c,
            d,
        }
    }

    pub fn context(c1: Rational, c2: Rational) -> Arc<QuadCtx> {
        Arc::new(QuadCtx { c1, c2 })
    }

    pub fn rational(ctx: &Arc<QuadCtx>, a: Rational) -> QuadExt {
        let z = rational::zero();
        QuadExt::new(ctx, a, z.clone(), z.clone(), z)
    }

    pub fn y1(ctx: &Arc<QuadCtx>) -> QuadExt {
        let z = rational::zero();
        QuadExt::new(ctx, z.clone(), rational::one(), z.clone(), z)
    }

    pub fn y2(ctx: &Arc<QuadCtx>) -> QuadExt {
        let z = rational::zero();
        QuadExt::new(ctx, z.clone(), z.clone(), rational::one(), z)
    }

    fn same_ctx(&self, other: &QuadExt) -> bool {
        Arc::ptr_eq(&self.ctx, &other.ctx) || self.ctx == other.ctx
    }

    pub fn components(&self) -> [&Rational; 4] {
        [&self.a, &self.b, &self.c, &self.d]
    }

    pub fn is_rational(&self) -> bool {
        self.b.is_zero() && self.c.is_zero() && self.d.is_zero()
    }

    pub fn add(&self, o: &QuadExt) -> QuadExt {
        debug_assert!(self.same_ctx(o));
        QuadExt::new(&self.ctx, &self.a + &o.a, &self.b + &o.b, &self.c + &o.c, &self.d + &o.d)
    }

    pub fn sub(&self, o: &QuadExt) -> QuadExt {
        debug_assert!(self.same_ctx(o));
        QuadExt::new(&self.ctx, &self.a - &o.a, &self.b - &o.b, &self.c - &o.c, &self.d - &o.d)
    }

    pub fn neg(&self) -> QuadExt {
        QuadExt::new(&self.ctx, -&self.a, -&self.b, -&self.c, -&self.d)
    }

    pub fn scale(&self, k: &Rational) -> QuadExt {
        QuadExt::new(&self.ctx, &self.a * k, &self.b * k, &self.c * k, &self.d * k)
    }

    pub fn mul(&self, o: &QuadExt) -> QuadExt {
        debug_assert!(self.same_ctx(o));
        let (c1, c2) = (&self.ctx.c1, &self.ctx.c2);
        let (a, b, c, d) = (&self.a, &self.b, &self.c, &self.d);
        let (e, f, g, h) = (&o.a, &o.b, &o.c, &o.d);
        let c12 = c1 * c2;
        QuadExt::new(
            &self.ctx,
            a * e + b * f * c1 + c * g * c2 + d * h * &c12,
            a * f + b * e + (c * h + d * g) * c2,
            a * g + c * e + (b * h + d * f) * c1,
            a * h + d * e + b * g + c * f,
        )
    }

    /// Image under `y1 → s1·y1, y2 → s2·y2`.
    pub fn conjugate(&self, s1: bool, s2: bool) -> QuadExt {
        let sg = |x: &Rational, flip: bool| if flip { -x } else { x.clone() };
        QuadExt::new(
            &self.ctx,
            self.a.clone(),
            sg(&self.b, s1),
            sg(&self.c, s2),
            sg(&self.d, s1 != s2),
        )
    }

    /// Product of the four sign conjugates; always rational.
    pub fn norm(&self) -> Rational {
        let p = self
            .mul(&self.conjugate(true, false))
            .mul(&self.conjugate(false, true))
            .mul(&self.conjugate(true, true));
        debug_assert!(p.is_rational());
        p.a
    }

    pub fn inv(&self) -> Result<QuadExt> {
        let n = self.norm();
        if n.is_zero() {
            return Err(Error::NonInvertible(format!("{self} has zero norm")));
        }
        let co = self
            .conjugate(true, false)
            .mul(&self.conjugate(false, true))
            .mul(&self.conjugate(true, true));
        Ok(co.scale(&(rational::one() / n)))
    }

    pub fn arith(&self, other: Option<&QuadExt>, op: QuadOp) -> Result<QuadExt> {
        let need = || Error::Context("binary operation needs a second operand".into());
        match op {
            QuadOp::Add => {
                let o = other.ok_or_else(need)?;
                self.check(o)?;
                Ok(self.add(o))
            }
            QuadOp::Mul => {
                let o = other.ok_or_else(need)?;
                self.check(o)?;
                Ok(self.mul(o))
            }
            QuadOp::Inv => self.inv(),
        }
    }

    fn check(&self, o: &QuadExt) -> Result<()> {
        if self.same_ctx(o) {
            Ok(())
        } else {
            Err(Error::Context("quadratic extension contexts differ".into()))
        }
    }

    /// Value under `y1 ↦ r1`, `y2 ↦ r2`, where `r_i² = c_i` must hold.
    pub fn evaluate_at(&self, r1: &Rational, r2: &Rational) -> Result<Rational> {
        if r1 * r1 != self.ctx.c1 || r2 * r2 != self.ctx.c2 {
            return Err(Error::Context("substituted roots do not square to c1, c2".into()));
        }
        Ok(&self.a + &self.b * r1 + &self.c * r2 + &self.d * r1 * r2)
    }

    /// Binary64 value using the positive real roots; `None` if some `c_i < 0`
    /// is actually needed. The roots are approximated by rationals accurate
    /// to 40 digits so that cancellation between components stays exact.
    pub fn to_f64(&self) -> Option<f64> {
        let need1 = !self.b.is_zero() || !self.d.is_zero();
        let need2 = !self.c.is_zero() || !self.d.is_zero();
        if (need1 && self.ctx.c1.is_negative()) || (need2 && self.ctx.c2.is_negative()) {
            return None;
        }
        let s1 = approx_sqrt(&self.ctx.c1);
        let s2 = approx_sqrt(&self.ctx.c2);
        let v = &self.a + &self.b * &s1 + &self.c * &s2 + &self.d * &s1 * &s2;
        Some(rational::to_f64(&v))
    }

    pub fn to_text(&self) -> String {
        let parts = [
            (&self.a, ""),
            (&self.b, "*y1"),
            (&self.c, "*y2"),
            (&self.d, "*y1*y2"),
        ];
        let mut out = String::new();
        for (x, suffix) in parts {
            if x.is_zero() {
                continue;
            }
            if out.is_empty() {
                if x.is_negative() {
                    out.push('-');
                }
            } else {
                out.push_str(if x.is_negative() { " - " } else { " + " });
            }
            out.push_str(&rational::to_text(&x.abs()));
            out.push_str(suffix);
        }
        if out.is_empty() {
            "0".into()
        } else {
            out
        }
    }
}

/// Rational `r` with `|r − √c| < 10⁻⁴⁰·max(1, √c)`; zero for `c ≤ 0`.
fn approx_sqrt(c: &Rational) -> Rational {
    if !c.is_positive() {
        return rational::zero();
    }
    let scale = BigInt::from(10u32).pow(40);
    // √(p/q) = √(p·q)/q
    let pq = c.numer() * c.denom() * &scale * &scale;
    Rational::new(pq.sqrt(), c.denom() * scale)
}

impl fmt::Display for QuadExt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

impl JetScalar for QuadExt {
    fn zero_like(&self) -> Self {
        QuadExt::rational(&self.ctx, rational::zero())
    }
    fn one_like(&self) -> Self {
        QuadExt::rational(&self.ctx, rational::one())
    }
    fn add(&self, other: &Self) -> Self {
        QuadExt::add(self, other)
    }
    fn sub(&self, other: &Self) -> Self {
        QuadExt::sub(self, other)
    }
    fn mul(&self, other: &Self) -> Self {
        QuadExt::mul(self, other)
    }
    fn neg(&self) -> Self {
        QuadExt::neg(self)
    }
    fn scale_ratio(&self, num: i64, den: i64) -> Self {
        self.scale(&rational::ratio(num, den))
    }
    fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero() && self.c.is_zero() && self.d.is_zero()
    }
    fn try_inv(&self) -> Option<Self> {
        self.inv().ok()
    }
}
