//! Fresnel's wave surface as a quartic in `(x, y, z)`.

use std::sync::Arc;

use crate::algebra::rational::{int, Rational};
use crate::algebra::{Context, Poly};

pub fn fresnel_context() -> Arc<Context> {
    Context::new(&["x", "y", "z"], 0)
}

/// `(x²+y²+z²)(a²x²+b²y²+c²z²) − {a²(b²+c²)x² + b²(c²+a²)y² + c²(a²+b²)z²} + a²b²c²`
/// for given squares `a², b², c²`.
pub fn fresnel_reduce(a2: &Rational, b2: &Rational, c2: &Rational) -> Poly {
    let ctx = fresnel_context();
    let sq = |i: usize| Poly::var(&ctx, i).pow_truncated(2, None);
    let (x2, y2, z2) = (sq(0), sq(1), sq(2));
    let r2 = &(&x2 + &y2) + &z2;
    let weighted = &(&x2.scale(a2) + &y2.scale(b2)) + &z2.scale(c2);
    let middle = &(&x2.scale(&(a2 * (b2 + c2))) + &y2.scale(&(b2 * (c2 + a2)))) + &z2.scale(&(c2 * (a2 + b2)));
    let constant = Poly::constant(&ctx, a2 * b2 * c2);
    &(&(&r2 * &weighted) - &middle) + &constant
}

/// `(x² + y² + z² − 1)²`.
pub fn double_sphere() -> Poly {
    let ctx = fresnel_context();
    let s = (0..3).fold(Poly::constant(&ctx, int(-1)), |acc, i| {
        &acc + &Poly::var(&ctx, i).pow_truncated(2, None)
    });
    &s * &s
}
