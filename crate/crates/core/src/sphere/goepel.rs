//! Constants of the Göpel tetrad quartic from squared theta constants.

use std::sync::Arc;

use num_traits::{Signed, Zero};

use crate::algebra::rational::{self, int, Rational};
use crate::algebra::{term, Context, Poly};
use crate::error::{Error, Result};

/// `(α², β², γ², δ²)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GoepelInput {
    pub squares: [Rational; 4],
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GoepelD {
    Exact(Rational),
    /// `αβγδ` is irrational or the normalizing sum vanishes; `D²` is given
    /// when it is defined.
    Unavailable { reason: String, d_squared: Option<Rational> },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GoepelConstants {
    pub a: Rational,
    pub b: Rational,
    pub c: Rational,
    pub d: GoepelD,
}

fn exact_sqrt(r: &Rational) -> Option<Rational> {
    if r.is_negative() {
        return None;
    }
    let (n, d) = (r.numer().sqrt(), r.denom().sqrt());
    (&n * &n == *r.numer() && &d * &d == *r.denom()).then(|| Rational::new(n, d))
}

pub fn goepel_constants(input: &GoepelInput) -> Result<GoepelConstants> {
    let [a, b, c, d] = &input.squares;
    let ratio = |num: Rational, den: Rational, which: &str| {
        if den.is_zero() {
            Err(Error::DegenerateTetrad(format!("denominator of {which} vanishes")))
        } else {
            Ok(num / den)
        }
    };
    let sq = |x: &Rational| x * x;
    let ca = ratio(sq(b) + sq(c) - sq(a) - sq(d), a * d - b * c, "A")?;
    let cb = ratio(sq(c) + sq(a) - sq(b) - sq(d), b * d - c * a, "B")?;
    let cc = ratio(sq(a) + sq(b) - sq(c) - sq(d), c * d - a * b, "C")?;
    let two = int(2);
    let prod = (&two - &ca) * (&two - &cb) * (&two - &cc);
    let dconst = if prod.is_zero() {
        GoepelD::Exact(rational::zero())
    } else {
        let s = a + b + c + d;
        let abcd = a * b * c * d;
        if s.is_zero() {
            GoepelD::Unavailable {
                reason: "α² + β² + γ² + δ² = 0".into(),
                d_squared: None,
            }
        } else {
            let s2 = &s * &s;
            let d_squared = &abcd * &prod * &prod / (&s2 * &s2);
            match exact_sqrt(&abcd) {
                Some(root) => GoepelD::Exact(root * &prod / s2),
                None => GoepelD::Unavailable {
                    reason: "αβγδ is not rational".into(),
                    d_squared: Some(d_squared),
                },
            }
        }
    };
    Ok(GoepelConstants {
        a: ca,
        b: cb,
        c: cc,
        d: dconst,
    })
}

pub fn tetrad_context() -> Arc<Context> {
    Context::new(&["X", "Y", "Z", "T"], 0)
}

/// `X⁴+Y⁴+Z⁴+T⁴ + A(X²T²+Y²Z²) + B(Y²T²+Z²X²) + C(Z²T²+X²Y²) + 2DXYZT`.
pub fn goepel_quartic(ctx: &Arc<Context>, a: &Rational, b: &Rational, c: &Rational, d: &Rational) -> Poly {
    let t = |k: &Rational, e: [u8; 4]| term(ctx, k.clone(), &e);
    let one = rational::one();
    [
        t(&one, [4, 0, 0, 0]),
        t(&one, [0, 4, 0, 0]),
        t(&one, [0, 0, 4, 0]),
        t(&one, [0, 0, 0, 4]),
        t(a, [2, 0, 0, 2]),
        t(a, [0, 2, 2, 0]),
        t(b, [0, 2, 0, 2]),
        t(b, [2, 0, 2, 0]),
        t(c, [0, 0, 2, 2]),
        t(c, [2, 2, 0, 0]),
        t(&(int(2) * d), [1, 1, 1, 1]),
    ]
    .iter()
    .fold(Poly::zero(ctx), |acc, p| &acc + p)
}

/// `(X² + Y² + Z² + T²)²`.
pub fn double_quadric(ctx: &Arc<Context>) -> Poly {
    let s = (0..4).fold(Poly::zero(ctx), |acc, i| &acc + &Poly::var(ctx, i).pow_truncated(2, None));
    &s * &s
}
