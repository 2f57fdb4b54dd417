//! Power-series expansion of the genus-2 sigma function in (u, v).

use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use crate::algebra::rational::{self, int, ratio, Rational};
use crate::algebra::{Context, Poly, TruncatedSeries};
use crate::error::Error;

/// Slot of λ0 in the sigma context; λi lives at `LAMBDA_SLOT + i`.
pub const LAMBDA_SLOT: usize = 2;

/// Highest homogeneous piece σ⁽ⁱ⁾ included in the expansion.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum SigmaLevel {
    Three,
    Five,
    Seven,
}

impl SigmaLevel {
    pub const ALL: [SigmaLevel; 3] = [SigmaLevel::Three, SigmaLevel::Five, SigmaLevel::Seven];

    pub fn degree(self) -> u32 {
        match self {
            SigmaLevel::Three => 3,
            SigmaLevel::Five => 5,
            SigmaLevel::Seven => 7,
        }
    }

    pub fn from_degree(d: u32) -> Option<SigmaLevel> {
        match d {
            3 => Some(SigmaLevel::Three),
            5 => Some(SigmaLevel::Five),
            7 => Some(SigmaLevel::Seven),
            _ => None,
        }
    }
}

impl fmt::Display for SigmaLevel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.degree())
    }
}

/// Curve coefficients of `y² = 4x⁵ + λ4x⁴ + λ3x³ + λ2x² + λ1x + λ0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LambdaMode {
    Symbolic,
    Specialized([Rational; 5]),
}

impl LambdaMode {
    pub fn zero() -> LambdaMode {
        LambdaMode::Specialized(std::array::from_fn(|_| rational::zero()))
    }

    pub fn is_all_zero(&self) -> bool {
        match self {
            LambdaMode::Symbolic => false,
            LambdaMode::Specialized(vals) => vals.iter().all(|v| *v == rational::zero()),
        }
    }

    /// λi as a polynomial in the sigma context.
    pub fn lambda(&self, ctx: &Arc<Context>, i: usize) -> Poly {
        match self {
            LambdaMode::Symbolic => Poly::var(ctx, LAMBDA_SLOT + i),
            LambdaMode::Specialized(vals) => Poly::constant(ctx, vals[i].clone()),
        }
    }

    pub fn to_text(&self) -> String {
        match self {
            LambdaMode::Symbolic => "symbolic".into(),
            LambdaMode::Specialized(vals) => vals
                .iter()
                .map(rational::to_text)
                .collect::<Vec<_>>()
                .join(","),
        }
    }
}

impl FromStr for LambdaMode {
    type Err = Error;

    /// `symbolic`, `zero`, or five comma-separated rationals `λ0,…,λ4`.
    fn from_str(s: &str) -> Result<LambdaMode, Error> {
        match s.trim() {
            "symbolic" => Ok(LambdaMode::Symbolic),
            "zero" | "0" => Ok(LambdaMode::zero()),
            text => {
                let parts: Vec<_> = text.split(',').collect();
                if parts.len() != 5 {
                    return Err(Error::Parse(format!(
                        "expected five comma-separated rationals for λ0..λ4, got `{text}`"
                    )));
                }
                let mut vals = Vec::with_capacity(5);
                for p in parts {
                    vals.push(rational::parse(p)?);
                }
                Ok(LambdaMode::Specialized(vals.try_into().unwrap()))
            }
        }
    }
}

#[derive(Clone, Debug)]
pub struct SigmaSeries {
    pub sigma: TruncatedSeries,
    pub level: SigmaLevel,
    pub lambda: LambdaMode,
}

impl SigmaSeries {
    pub fn ctx(&self) -> &Arc<Context> {
        self.sigma.ctx()
    }

    /// Degree through which the truncated expansion agrees with the true
    /// sigma function. `None` when every omitted piece vanishes (all λ zero).
    pub fn model_order(&self) -> Option<i64> {
        if self.lambda.is_all_zero() {
            None
        } else {
            Some(self.level.degree() as i64 + 1)
        }
    }

    /// The same expansion viewed as a truncation of the true sigma
    /// function, so that downstream orders certify agreement with it.
    pub fn as_model(&self) -> SigmaSeries {
        let sigma = match self.model_order() {
            None => self.sigma.clone(),
            Some(k) => self.sigma.truncate(k),
        };
        SigmaSeries {
            sigma,
            level: self.level,
            lambda: self.lambda.clone(),
        }
    }

    pub fn lambda(&self, i: usize) -> Poly {
        self.lambda.lambda(self.ctx(), i)
    }
}

fn mono(ctx: &Arc<Context>, c: Rational, a: u8, b: u8) -> Poly {
    crate::algebra::term(ctx, c, &[a, b])
}

/// σ⁽³⁾ = λ2 u³/24 − v³/3.
fn sigma3(ctx: &Arc<Context>, lam: &LambdaMode) -> Poly {
    let l2 = lam.lambda(ctx, 2);
    &(&l2 * &mono(ctx, ratio(1, 24), 3, 0)) + &mono(ctx, ratio(-1, 3), 0, 3)
}

fn sigma5(ctx: &Arc<Context>, lam: &LambdaMode) -> Poly {
    let l: Vec<Poly> = (0..5).map(|i| lam.lambda(ctx, i)).collect();
    let u5 = &(&(&l[0] * &l[4]).scale(&ratio(1, 2)) - &(&l[1] * &l[3]).scale(&ratio(1, 8)))
        - &(&l[2] * &l[2]).scale(&ratio(1, 16));
    let pieces = [
        (u5, 5u8),
        (l[0].scale(&int(10)), 4),
        (l[1].scale(&int(5)), 3),
        (l[2].scale(&int(5)), 2),
        (l[3].scale(&ratio(5, 2)), 1),
        (l[4].scale(&int(2)), 0),
    ];
    let mut acc = Poly::zero(ctx);
    for (coeff, upow) in pieces {
        acc = &acc + &(&coeff * &mono(ctx, rational::one(), upow, 5 - upow));
    }
    acc.scale(&ratio(-1, 120))
}

/// Coefficients h0..h7 of σ⁽⁷⁾ = (1/7!) Σ C(7,k) h_k u^k v^(7−k).
fn sigma7_h(ctx: &Arc<Context>, lam: &LambdaMode) -> [Poly; 8] {
    let l: Vec<Poly> = (0..5).map(|i| lam.lambda(ctx, i)).collect();
    let p = |i: usize, j: usize| &l[i] * &l[j];
    let p3 = |i: usize, j: usize, k: usize| &(&l[i] * &l[j]) * &l[k];
    let sum = |parts: Vec<(Rational, Poly)>| {
        parts
            .into_iter()
            .fold(Poly::zero(ctx), |acc, (c, t)| &acc + &t.scale(&c))
    };
    [
        sum(vec![(int(-1), l[3].clone()), (int(-2), p(4, 4))]),
        sum(vec![(int(-2), l[2].clone()), (ratio(-1, 2), p(3, 4))]),
        sum(vec![(int(-2), l[1].clone()), (ratio(-1, 2), p(2, 4))]),
        sum(vec![
            (int(-2), l[0].clone()),
            (ratio(-1, 8), p(2, 3)),
            (ratio(-1, 2), p(1, 4)),
        ]),
        sum(vec![
            (ratio(-1, 4), p(1, 3)),
            (int(-1), p(0, 4)),
            (ratio(-1, 8), p(2, 2)),
        ]),
        sum(vec![(ratio(-3, 2), p(0, 3)), (ratio(-1, 4), p(1, 2))]),
        sum(vec![(ratio(-11, 2), p(0, 2)), (int(1), p(1, 1))]),
        sum(vec![
            (ratio(1, 64), p3(2, 2, 2)),
            (ratio(3, 32), p3(1, 2, 3)),
            (ratio(-15, 8), p3(0, 2, 4)),
            (ratio(-1, 2), p(0, 1)),
            (ratio(3, 8), p3(0, 3, 3)),
            (ratio(3, 8), p3(1, 1, 4)),
        ]),
    ]
}

fn sigma7(ctx: &Arc<Context>, lam: &LambdaMode) -> Poly {
    const BINOM7: [i64; 8] = [1, 7, 21, 35, 35, 21, 7, 1];
    let h = sigma7_h(ctx, lam);
    let mut acc = Poly::zero(ctx);
    for k in 0..8 {
        acc = &acc + &(&h[k] * &mono(ctx, ratio(BINOM7[k], 5040), k as u8, 7 - k as u8));
    }
    acc
}

/// σ = u + σ⁽³⁾ [+ σ⁽⁵⁾] [+ σ⁽⁷⁾] as an exact polynomial.
pub fn sigma_polynomial(level: SigmaLevel, lambda: &LambdaMode) -> Poly {
    let ctx = Context::sigma();
    let mut s = &Poly::var(&ctx, 0) + &sigma3(&ctx, lambda);
    if level >= SigmaLevel::Five {
        s = &s + &sigma5(&ctx, lambda);
    }
    if level >= SigmaLevel::Seven {
        s = &s + &sigma7(&ctx, lambda);
    }
    s
}

/// Builds the truncated sigma expansion with working cap `cap`.
///
/// The body is the exact polynomial `u + σ⁽³⁾ + …`; use
/// [`SigmaSeries::as_model`] to account for the omitted higher pieces.
pub fn build_sigma(level: SigmaLevel, lambda: LambdaMode, cap: u32) -> SigmaSeries {
    let body = sigma_polynomial(level, &lambda);
    SigmaSeries {
        sigma: TruncatedSeries::from_poly(body, cap),
        level,
        lambda,
    }
}
