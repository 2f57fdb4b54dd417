//! Published regression targets, as `(p, q, deg_u, deg_v)` terms.

use std::sync::Arc;

use kummer_core::algebra::rational::ratio;
use kummer_core::algebra::{term, Context, Poly};

pub type Terms = &'static [(i64, i64, u8, u8)];

pub const G11: Terms = &[(4, 1, 0, 0), (4, 1, 2, 2), (4, 1, 0, 4), (16, 3, 1, 5), (16, 9, 0, 8)];

pub const G12: Terms = &[
    (-4, 1, 0, 2),
    (-4, 1, 3, 1),
    (-4, 1, 1, 3),
    (-12, 1, 2, 4),
    (-8, 3, 0, 6),
    (-20, 3, 1, 7),
    (-8, 27, 0, 10),
];

pub const G22: Terms = &[
    (4, 1, 4, 0),
    (4, 1, 2, 2),
    (4, 1, 0, 4),
    (56, 3, 3, 3),
    (16, 3, 1, 5),
    (68, 3, 2, 6),
    (16, 9, 0, 8),
    (56, 27, 1, 9),
    (4, 81, 0, 12),
];

/// `σ¹² det g` through degree 16.
pub const DET: Terms = &[
    (16, 1, 4, 0),
    (16, 1, 2, 2),
    (128, 3, 3, 3),
    (-32, 3, 1, 5),
    (32, 3, 2, 6),
    (16, 9, 0, 8),
    (-640, 27, 1, 9),
    (16, 1, 2, 10),
    (400, 81, 0, 12),
    (-32, 3, 1, 13),
    (16, 9, 0, 16),
];

pub const DET_THROUGH: u32 = 16;

/// Lowest terms of `R̂11, R̂12, R̂22` and their degrees.
pub const RICCI: [(&str, u32, Terms); 3] = [
    ("R11", 10, &[(-1024, 1, 5, 5)]),
    ("R12", 12, &[(1024, 1, 5, 7)]),
    ("R22", 14, &[(-1024, 1, 9, 5), (-1024, 1, 7, 7), (-1024, 1, 5, 9)]),
];

pub fn poly(ctx: &Arc<Context>, terms: Terms) -> Poly {
    terms
        .iter()
        .fold(Poly::zero(ctx), |acc, &(p, q, a, b)| &acc + &term(ctx, ratio(p, q), &[a, b]))
}
