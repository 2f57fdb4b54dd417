//! Round-sphere metrics as binary64 jets with analytic derivatives.

use twofloat::TwoFloat;

use crate::inversion::jet::{Jet, JetScalar};
use crate::tensor::MetricTensor;

/// Jet of `sin²(θ0 + h)` in the first coordinate.
///
/// `sin² = ½ − ½ cos(2θ)`, and the k-th derivative of `cos` is
/// `cos(x + kπ/2)`.
pub fn sin_squared_jet(theta: f64, order: u32) -> Jet<f64> {
    Jet::from_fn(order, |i, j| {
        if j != 0 {
            return 0.0;
        }
        if i == 0 {
            return theta.sin().powi(2);
        }
        let k = i as i32;
        let fact: f64 = (1..=i).map(|n| n as f64).product();
        let phase = 2.0 * theta + k as f64 * std::f64::consts::FRAC_PI_2;
        -0.5 * 2f64.powi(k) / fact * phase.cos()
    })
}

/// `dθ² + sin²θ dφ²` about `(θ, φ)`; the metric does not depend on `φ`.
pub fn spherical_metric_jet(theta: f64, _phi: f64, order: u32) -> MetricTensor<Jet<f64>> {
    MetricTensor::new(
        Jet::constant(1.0, order),
        Jet::constant(0.0, order),
        sin_squared_jet(theta, order),
    )
}

/// Jet of `sin(θ0 + h)` from `s = sin θ0` and `c = cos θ0`.
fn sin_jet<S: JetScalar>(s: S, c: S, order: u32) -> Jet<S> {
    Jet::from_fn(order, |i, j| {
        if j != 0 {
            return s.zero_like();
        }
        let fact: i64 = (1..=i as i64).product();
        let sign = if (i / 2) % 2 == 0 { 1 } else { -1 };
        let base = if i % 2 == 0 { &s } else { &c };
        base.scale_ratio(sign, fact)
    })
}

/// The round metric in double-double. `sin²` is formed as a jet product,
/// so `sin'' = −sin` holds coefficientwise and near the poles only the
/// ring's own rounding survives the cancellations in the curvature.
pub fn spherical_metric_jet_dd(theta: f64, order: u32) -> MetricTensor<Jet<TwoFloat>> {
    let (s, c) = TwoFloat::from(theta).sin_cos();
    let sj = sin_jet(s, c, order);
    let one = TwoFloat::from(1.0);
    MetricTensor::new(
        Jet::constant(one, order),
        Jet::constant(TwoFloat::from(0.0), order),
        sj.mul(&sj),
    )
}

pub fn spherical_metric(p: [f64; 2]) -> [[f64; 2]; 2] {
    [[1.0, 0.0], [0.0, p[0].sin().powi(2)]]
}

/// `4/(1 + u² + v²)²` as a jet about `(u, v)`.
pub fn conformal_factor_jet(u: f64, v: f64, order: u32) -> Jet<f64> {
    let uj = Jet::variable(u, 0, order);
    let vj = Jet::variable(v, 1, order);
    let w = Jet::constant(1.0, order).add(&uj.mul(&uj)).add(&vj.mul(&vj));
    let w2 = w.mul(&w);
    w2.try_inv()
        .expect("1 + u² + v² never vanishes")
        .scale(&4.0)
}

pub fn conformal_factor(u: f64, v: f64) -> f64 {
    4.0 / (1.0 + u * u + v * v).powi(2)
}

/// `4(du² + dv²)/(1 + u² + v²)²` about `(u, v)`.
pub fn kahler_metric_jet(u: f64, v: f64, order: u32) -> MetricTensor<Jet<f64>> {
    let f = conformal_factor_jet(u, v, order);
    MetricTensor::new(f.clone(), Jet::constant(0.0, order), f)
}

pub fn kahler_metric(p: [f64; 2]) -> [[f64; 2]; 2] {
    let f = conformal_factor(p[0], p[1]);
    [[f, 0.0], [0.0, f]]
}

pub fn kahler_metric_jet_dd(u: f64, v: f64, order: u32) -> MetricTensor<Jet<TwoFloat>> {
    let uj = Jet::variable(TwoFloat::from(u), 0, order);
    let vj = Jet::variable(TwoFloat::from(v), 1, order);
    let w = Jet::constant(TwoFloat::from(1.0), order).add(&uj.mul(&uj)).add(&vj.mul(&vj));
    let f = w.mul(&w).try_inv().expect("1 + u² + v² never vanishes").scale(&TwoFloat::from(4.0));
    MetricTensor::new(f.clone(), Jet::constant(TwoFloat::from(0.0), order), f)
}

/// Inverse of a jet metric via the adjugate and a jet reciprocal.
pub fn invert_jet_metric<S: JetScalar>(g: &MetricTensor<Jet<S>>) -> Option<MetricTensor<Jet<S>>> {
    use crate::tensor::DiffRing;
    let inv_det = g.det().try_inv()?;
    let adj = g.adjugate();
    Some(adj.map(|x| DiffRing::mul(x, &inv_det)))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sin_squared_taylor_coefficients() {
        let t = 0.7f64;
        let j = sin_squared_jet(t, 3);
        // d/dθ sin² = sin 2θ ; d²/dθ² = 2 cos 2θ ; d³ = −4 sin 2θ
        assert!((j.partial(1, 0) - (2.0 * t).sin()).abs() < 1e-14);
        assert!((j.partial(2, 0) - 2.0 * (2.0 * t).cos()).abs() < 1e-14);
        assert!((j.partial(3, 0) + 4.0 * (2.0 * t).sin()).abs() < 1e-13);
    }

    #[test]
    fn conformal_factor_values() {
        assert_eq!(conformal_factor(1.0, 0.0), 1.0);
        let j = conformal_factor_jet(0.0, 0.0, 2);
        assert_eq!(*j.base(), 4.0);
        // ∂²/∂u² of 4(1+u²)^−2 at 0 is −16
        assert!((j.partial(2, 0) + 16.0).abs() < 1e-12);
    }
}
