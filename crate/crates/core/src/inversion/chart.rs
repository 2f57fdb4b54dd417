//! The `(x1, x2)` parametrization of the Kummer surface, evaluated with
//! third-order jets at rational points.

use std::fmt;
use std::sync::Arc;

use num_traits::{One, Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use twofloat::TwoFloat;

use super::jet::{Jet, JetScalar};
use super::quadext::{QuadCtx, QuadExt};
use crate::algebra::rational::{self, int, Rational};
use crate::error::{Error, Result};
use crate::sigma::kummer::{det4, kummer_matrix, KummerVariant};
use crate::tensor::{ricci_from_metric, DiffRing, MetricTensor};

/// Jet order needed for Ricci at the base point.
pub const JET_ORDER: u32 = 3;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChartBPoint {
    pub x1: Rational,
    pub x2: Rational,
    pub lambda: [Rational; 5],
    pub sign1: i8,
    pub sign2: i8,
}

impl fmt::Display for ChartBPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = |x: i8| if x > 0 { '+' } else { '-' };
        write!(
            f,
            "(x1={}, x2={}, signs={}{})",
            rational::to_text(&self.x1),
            rational::to_text(&self.x2),
            s(self.sign1),
            s(self.sign2)
        )
    }
}

/// `4x⁵ + λ4x⁴ + λ3x³ + λ2x² + λ1x + λ0`.
pub fn f5(lambda: &[Rational; 5], x: &Rational) -> Rational {
    let mut acc = int(4);
    for l in lambda.iter().rev() {
        acc = acc * x + l;
    }
    acc
}

/// `f5′(x)`.
pub fn f5_prime(lambda: &[Rational; 5], x: &Rational) -> Rational {
    let x2 = x * x;
    int(20) * &x2 * &x2
        + int(4) * &lambda[4] * &x2 * x
        + int(3) * &lambda[3] * &x2
        + int(2) * &lambda[2] * x
        + &lambda[1]
}

/// `F(x1, x2)` and its two partials.
pub fn f_with_partials(lambda: &[Rational; 5], a: &Rational, b: &Rational) -> [Rational; 3] {
    let [l0, l1, l2, l3, l4] = lambda;
    let f = int(4) * a * a * b * b * (a + b)
        + int(2) * l4 * a * a * b * b
        + l3 * a * b * (a + b)
        + int(2) * l2 * a * b
        + l1 * (a + b)
        + int(2) * l0;
    let partial = |p: &Rational, q: &Rational| {
        int(12) * p * p * q * q + int(8) * p * q * q * q
            + int(4) * l4 * p * q * q
            + l3 * (int(2) * p * q + q * q)
            + int(2) * l2 * q
            + l1
    };
    [f, partial(a, b), partial(b, a)]
}

impl ChartBPoint {
    pub fn new(x1: Rational, x2: Rational, lambda: [Rational; 5], sign1: i8, sign2: i8) -> ChartBPoint {
        ChartBPoint {
            x1,
            x2,
            lambda,
            sign1: sign1.signum(),
            sign2: sign2.signum(),
        }
    }

    pub fn c1(&self) -> Rational {
        f5(&self.lambda, &self.x1)
    }

    pub fn c2(&self) -> Rational {
        f5(&self.lambda, &self.x2)
    }

    pub fn check_admissible(&self) -> Result<()> {
        if self.sign1 == 0 || self.sign2 == 0 {
            return Err(Error::Inadmissible("branch signs must be ±1".into()));
        }
        if self.x1 == self.x2 {
            return Err(Error::Inadmissible("x1 = x2".into()));
        }
        if self.c1().is_zero() {
            return Err(Error::Inadmissible("f5(x1) = 0".into()));
        }
        if self.c2().is_zero() {
            return Err(Error::Inadmissible("f5(x2) = 0".into()));
        }
        Ok(())
    }

    /// `(x1, y1) ↔ (x2, y2)`.
    pub fn swapped(&self) -> ChartBPoint {
        ChartBPoint::new(self.x2.clone(), self.x1.clone(), self.lambda.clone(), self.sign2, self.sign1)
    }

    pub fn with_signs(&self, sign1: i8, sign2: i8) -> ChartBPoint {
        ChartBPoint::new(self.x1.clone(), self.x2.clone(), self.lambda.clone(), sign1, sign2)
    }

    /// The four branch choices of this point.
    pub fn sheets(&self) -> [ChartBPoint; 4] {
        [(1, 1), (1, -1), (-1, 1), (-1, -1)].map(|(a, b)| self.with_signs(a, b))
    }

    pub fn quad_ctx(&self) -> Arc<QuadCtx> {
        QuadExt::context(self.c1(), self.c2())
    }
}

/// Jets of `x1, x2, y1, y2` about the point.
#[derive(Clone, Debug)]
pub struct Lifted<S: JetScalar> {
    pub x1: Jet<S>,
    pub x2: Jet<S>,
    pub y1: Jet<S>,
    pub y2: Jet<S>,
}

fn poly_jet<S: JetScalar>(coeffs_low_to_high: &[S], x: &Jet<S>) -> Jet<S> {
    let order = x.order();
    let mut acc = Jet::constant(coeffs_low_to_high.last().unwrap().clone(), order);
    for c in coeffs_low_to_high.iter().rev().skip(1) {
        acc = acc.mul(x).add(&Jet::constant(c.clone(), order));
    }
    acc
}

fn lift_with<S: JetScalar>(
    p: &ChartBPoint,
    order: u32,
    embed: &impl Fn(&Rational) -> S,
    roots: [S; 2],
) -> Result<Lifted<S>> {
    p.check_admissible()?;
    let x1 = Jet::variable(embed(&p.x1), 0, order);
    let x2 = Jet::variable(embed(&p.x2), 1, order);
    let mut coeffs: Vec<S> = p.lambda.iter().map(embed).collect();
    coeffs.push(embed(&int(4)));
    let mut ys = Vec::with_capacity(2);
    for ((x, c), (root, sign)) in [(&x1, p.c1()), (&x2, p.c2())]
        .into_iter()
        .zip(roots.into_iter().zip([p.sign1, p.sign2]))
    {
        // y = ±root·√(1 + e), e = (f5(x) − c)/c
        let fx = poly_jet(&coeffs, x);
        let mut e = fx
            .sub(&Jet::constant(embed(&c), order))
            .scale(&embed(&(rational::one() / &c)));
        e.set_coeff(0, 0, e.base().zero_like());
        let signed = if sign > 0 { root } else { root.neg() };
        ys.push(Jet::sqrt_one_plus(&e).scale(&signed));
    }
    let y2 = ys.pop().unwrap();
    let y1 = ys.pop().unwrap();
    Ok(Lifted { x1, x2, y1, y2 })
}

/// Exact jets over `Q[y1, y2]/(y1² − c1, y2² − c2)`.
pub fn lift_point(p: &ChartBPoint) -> Result<Lifted<QuadExt>> {
    let ctx = p.quad_ctx();
    let embed = |r: &Rational| QuadExt::rational(&ctx, r.clone());
    lift_with(p, JET_ORDER, &embed, [QuadExt::y1(&ctx), QuadExt::y2(&ctx)])
}

fn xyz_from<S: JetScalar>(p: &ChartBPoint, l: &Lifted<S>, embed: &impl Fn(&Rational) -> S) -> Result<[Jet<S>; 3]> {
    let order = l.x1.order();
    let k = |r: Rational| Jet::constant(embed(&r), order);
    let lam: Vec<Jet<S>> = p.lambda.iter().map(|r| k(r.clone())).collect();
    let (a, b) = (&l.x1, &l.x2);
    let s = a.add(b);
    let prod = a.mul(b);
    let prod2 = prod.mul(&prod);
    let f = k(int(4))
        .mul(&prod2)
        .mul(&s)
        .add(&k(int(2)).mul(&lam[4]).mul(&prod2))
        .add(&lam[3].mul(&prod).mul(&s))
        .add(&k(int(2)).mul(&lam[2]).mul(&prod))
        .add(&lam[1].mul(&s))
        .add(&k(int(2)).mul(&lam[0]));
    let num = f.sub(&k(int(2)).mul(&l.y1).mul(&l.y2));
    let d = a.sub(b);
    let den = k(int(4)).mul(&d).mul(&d);
    let inv = den
        .try_inv()
        .ok_or_else(|| Error::Inadmissible("x1 − x2 not invertible".into()))?;
    Ok([s, prod.neg(), num.mul(&inv)])
}

/// `X = x1 + x2`, `Y = −x1x2`, `Z = (F − 2y1y2)/(4(x1 − x2)²)`.
pub fn xyz_jets(p: &ChartBPoint) -> Result<[Jet<QuadExt>; 3]> {
    let ctx = p.quad_ctx();
    let embed = |r: &Rational| QuadExt::rational(&ctx, r.clone());
    xyz_from(p, &lift_point(p)?, &embed)
}

/// `(∂Z/∂x1, ∂Z/∂x2)` from the explicit derivative formulas.
pub fn dz_closed_form(p: &ChartBPoint) -> Result<(QuadExt, QuadExt)> {
    p.check_admissible()?;
    let ctx = p.quad_ctx();
    let q = |r: Rational| QuadExt::rational(&ctx, r);
    let (c1, c2) = (p.c1(), p.c2());
    let sgn = int((p.sign1 * p.sign2) as i64);
    // y1y2 and the ratios y2/y1 = y1y2/c1, y1/y2 = y1y2/c2
    let y1y2 = QuadExt::y1(&ctx).mul(&QuadExt::y2(&ctx)).scale(&sgn);
    let [f, fx1, fx2] = f_with_partials(&p.lambda, &p.x1, &p.x2);
    let d = &p.x1 - &p.x2;
    let top = q(f).sub(&y1y2.scale(&int(2)));
    let first = top.scale(&(rational::one() / (int(2) * &d * &d * &d)));
    let quarter = rational::one() / (int(4) * &d * &d);
    let r21 = y1y2.scale(&(rational::one() / &c1));
    let r12 = y1y2.scale(&(rational::one() / &c2));
    let dz1 = first
        .neg()
        .add(&q(fx1).sub(&r21.scale(&f5_prime(&p.lambda, &p.x1))).scale(&quarter));
    let dz2 = first.add(&q(fx2).sub(&r12.scale(&f5_prime(&p.lambda, &p.x2))).scale(&quarter));
    Ok((dz1, dz2))
}

fn lambda_jets<S: JetScalar>(p: &ChartBPoint, order: u32, embed: &impl Fn(&Rational) -> S) -> [Jet<S>; 5] {
    std::array::from_fn(|i| Jet::constant(embed(&p.lambda[i]), order))
}

/// `det K` at `(X, Y, Z)` as a jet; the base value is the quartic residual.
pub fn quartic_jet(p: &ChartBPoint, variant: KummerVariant) -> Result<Jet<QuadExt>> {
    let ctx = p.quad_ctx();
    let embed = |r: &Rational| QuadExt::rational(&ctx, r.clone());
    let [x, y, z] = xyz_jets(p)?;
    let lam = lambda_jets(p, x.order(), &embed);
    Ok(det4(&kummer_matrix(&x, &y, &z, &lam, variant)))
}

/// Base value of `det K`; zero for the kernel-consistent matrix.
pub fn quartic_check(p: &ChartBPoint, variant: KummerVariant) -> Result<QuadExt> {
    Ok(quartic_jet(p, variant)?.base().clone())
}

fn metric_from<S: JetScalar>(x1: &Jet<S>, x2: &Jet<S>, z: &Jet<S>) -> MetricTensor<Jet<S>> {
    let one = DiffRing::one_like(x1);
    let zx1 = z.derivative(0);
    let zx2 = z.derivative(1);
    MetricTensor::new(
        one.add(&x2.mul(x2)).add(&zx1.mul(&zx1)),
        one.add(&x1.mul(x2)).add(&zx1.mul(&zx2)),
        one.add(&x1.mul(x1)).add(&zx2.mul(&zx2)),
    )
}

/// Gauss metric jets (valid through order 2).
pub fn metric_point(p: &ChartBPoint) -> Result<MetricTensor<Jet<QuadExt>>> {
    let l = lift_point(p)?;
    let [_, _, z] = xyz_jets(p)?;
    Ok(metric_from(&l.x1, &l.x2, &z))
}

fn ricci_of<S: JetScalar>(g: &MetricTensor<Jet<S>>) -> Result<[[S; 2]; 2]> {
    let inv_det = g
        .det()
        .try_inv()
        .ok_or_else(|| Error::SingularPoint("metric determinant not invertible at the base point".into()))?;
    let g_inv = g.adjugate().map(|x| x.mul(&inv_det));
    let ric = ricci_from_metric(g, &g_inv);
    Ok(std::array::from_fn(|m| std::array::from_fn(|n| ric.get(m, n).base().clone())))
}

/// Exact Ricci components at the base point.
pub fn ricci_point(p: &ChartBPoint) -> Result<[[QuadExt; 2]; 2]> {
    ricci_of(&metric_point(p)?)
}

/// Floating evaluation of `(Z, ∂Z/∂x1, ∂Z/∂x2, g, Ricci)` at the base point.
#[derive(Clone, Debug)]
pub struct FloatPoint {
    pub z: f64,
    pub dz: [f64; 2],
    pub g: [f64; 3],
    pub ricci: [[f64; 2]; 2],
}

/// Floating precision for [`float_point`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FloatKind {
    Binary64,
    /// Unevaluated sums of two binary64 values.
    DoubleDouble,
}

fn float_with<S: JetScalar>(
    p: &ChartBPoint,
    embed: impl Fn(&Rational) -> S,
    sqrt: impl Fn(S) -> S,
    out: impl Fn(&S) -> f64,
) -> Result<FloatPoint> {
    let roots = [sqrt(embed(&p.c1())), sqrt(embed(&p.c2()))];
    let l = lift_with(p, JET_ORDER, &embed, roots)?;
    let [_, _, z] = xyz_from(p, &l, &embed)?;
    let g = metric_from(&l.x1, &l.x2, &z);
    let r = ricci_of(&g)?;
    Ok(FloatPoint {
        z: out(z.base()),
        dz: [out(&z.partial(1, 0)), out(&z.partial(0, 1))],
        g: [out(g.g11.base()), out(g.g12.base()), out(g.g22.base())],
        ricci: std::array::from_fn(|m| std::array::from_fn(|n| out(&r[m][n]))),
    })
}

fn to_two(r: &Rational) -> TwoFloat {
    let hi = rational::to_f64(r);
    let rest = Rational::from_float(hi).map(|h| r - h).unwrap_or_else(rational::zero);
    TwoFloat::new_add(hi, rational::to_f64(&rest))
}

/// Evaluation with the positive real roots; `None` unless `c1, c2 > 0`.
pub fn float_point(p: &ChartBPoint, kind: FloatKind) -> Result<Option<FloatPoint>> {
    p.check_admissible()?;
    if !p.c1().is_positive() || !p.c2().is_positive() {
        return Ok(None);
    }
    let fp = match kind {
        FloatKind::Binary64 => float_with(p, rational::to_f64, f64::sqrt, |x| *x)?,
        FloatKind::DoubleDouble => float_with(p, to_two, TwoFloat::sqrt, |x| x.hi() + x.lo())?,
    };
    Ok(Some(fp))
}

fn random_rational(rng: &mut ChaCha8Rng, bound: i64) -> Rational {
    let n = rng.gen_range(-bound..=bound);
    let d = rng.gen_range(1..=bound);
    Rational::new(n.into(), d.into())
}

/// Seeded admissible points with `|numerator|, denominator ≤ 50`. With
/// `lambda = None` each point draws integer `λi ∈ [−5, 5]`.
pub fn random_points(seed: u64, count: usize, lambda: Option<&[Rational; 5]>) -> Vec<ChartBPoint> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        let lam = match lambda {
            Some(l) => l.clone(),
            None => std::array::from_fn(|_| int(rng.gen_range(-5..=5))),
        };
        let x1 = random_rational(&mut rng, 50);
        let x2 = random_rational(&mut rng, 50);
        let sign1 = if rng.gen_bool(0.5) { 1 } else { -1 };
        let sign2 = if rng.gen_bool(0.5) { 1 } else { -1 };
        let p = ChartBPoint::new(x1, x2, lam, sign1, sign2);
        if p.check_admissible().is_err() {
            continue;
        }
        let invertible = metric_point(&p)
            .map(|g| !g.det().base().norm().is_zero())
            .unwrap_or(false);
        if invertible {
            out.push(p);
        }
    }
    out
}

/// The fixed witnesses: `λ = 0` at `(1, 4)` and `λ0 = 1` at `(1, 2)`.
pub fn witness_points() -> Vec<ChartBPoint> {
    let zero: [Rational; 5] = std::array::from_fn(|_| rational::zero());
    let mut l0 = zero.clone();
    l0[0] = Rational::one();
    vec![
        ChartBPoint::new(int(1), int(4), zero, 1, 1),
        ChartBPoint::new(int(1), int(2), l0, 1, 1),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rational::ratio;

    fn p14(s2: i8) -> ChartBPoint {
        let zero: [Rational; 5] = std::array::from_fn(|_| rational::zero());
        ChartBPoint::new(int(1), int(4), zero, 1, s2)
    }

    #[test]
    fn f_and_f5_values() {
        let zero: [Rational; 5] = std::array::from_fn(|_| rational::zero());
        assert_eq!(f_with_partials(&zero, &int(1), &int(4))[0], int(320));
        assert_eq!(f5(&zero, &int(4)), int(4096));
        assert_eq!(f5_prime(&zero, &int(1)), int(20));
    }

    #[test]
    fn y_jet_slope() {
        let l = lift_point(&p14(1)).unwrap();
        let ctx = p14(1).quad_ctx();
        assert_eq!(l.y1.base(), &QuadExt::y1(&ctx));
        assert_eq!(l.y1.coeff(1, 0), &QuadExt::y1(&ctx).scale(&ratio(5, 2)));
        // (y-jet)² reproduces f5 through order 3
        let sq = l.y1.mul(&l.y1);
        assert_eq!(sq.coeff(1, 0), &QuadExt::rational(&ctx, int(20)));
        assert_eq!(sq.coeff(2, 0), &QuadExt::rational(&ctx, int(40)));
        assert_eq!(sq.coeff(3, 0), &QuadExt::rational(&ctx, int(40)));
    }

    #[test]
    fn inadmissible_points() {
        let zero: [Rational; 5] = std::array::from_fn(|_| rational::zero());
        let same = ChartBPoint::new(int(2), int(2), zero.clone(), 1, 1);
        assert!(matches!(lift_point(&same), Err(Error::Inadmissible(_))));
        let root = ChartBPoint::new(int(0), int(2), zero, 1, 1);
        assert!(matches!(lift_point(&root), Err(Error::Inadmissible(m)) if m.contains("x1")));
    }

    #[test]
    fn xyz_at_witness() {
        let [x, y, z] = xyz_jets(&p14(1)).unwrap();
        assert!(x.base().is_rational() && x.base().a == int(5));
        assert_eq!(y.base().a, int(-4));
        let r = z.base().evaluate_at(&int(2), &int(64)).unwrap();
        assert_eq!(r, ratio(16, 9));
        let r = xyz_jets(&p14(-1)).unwrap()[2].base().evaluate_at(&int(2), &int(64)).unwrap();
        assert_eq!(r, int(16));
    }

    #[test]
    fn dz_at_witness() {
        let (dz1, _) = dz_closed_form(&p14(1)).unwrap();
        assert_eq!(dz1.evaluate_at(&int(2), &int(64)).unwrap(), ratio(80, 27));
        let z = &xyz_jets(&p14(1)).unwrap()[2];
        assert_eq!(z.coeff(1, 0), &dz1);
    }

    #[test]
    fn metric_at_witness() {
        let g = metric_point(&p14(1)).unwrap();
        assert_eq!(g.g11.base().evaluate_at(&int(2), &int(64)).unwrap(), ratio(18793, 729));
    }

    #[test]
    fn quartic_variants_at_witness() {
        for s2 in [1, -1] {
            let p = p14(s2);
            assert!(JetScalar::is_zero(&quartic_check(&p, KummerVariant::Kernel).unwrap()));
            assert!(!JetScalar::is_zero(&quartic_check(&p, KummerVariant::Printed).unwrap()));
        }
    }
}
