//! Einstein-metric checks on the round sphere and its Kähler chart.

use rayon::prelude::*;

use twofloat::TwoFloat;

use super::metrics::{conformal_factor, invert_jet_metric, kahler_metric_jet_dd, spherical_metric_jet_dd};
use crate::error::{Error, Result};
use crate::inversion::jet::Jet;
use crate::tensor::{ricci_from_metric, scalar_curvature, MetricTensor};

pub const POLE_MARGIN: f64 = 1e-3;

/// Curvature data at one point.
#[derive(Clone, Debug, PartialEq)]
pub struct CurvatureSample {
    pub point: [f64; 2],
    pub metric: [[f64; 2]; 2],
    pub ricci: [[f64; 2]; 2],
    pub scalar: f64,
}

impl CurvatureSample {
    /// `max |R_ij − g_ij|`.
    pub fn einstein_deviation(&self) -> f64 {
        let mut worst: f64 = 0.0;
        for m in 0..2 {
            for n in 0..2 {
                worst = worst.max((self.ricci[m][n] - self.metric[m][n]).abs());
            }
        }
        worst
    }

    pub fn scalar_deviation(&self) -> f64 {
        (self.scalar - 2.0).abs()
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct EinsteinSummary {
    pub samples: usize,
    pub max_einstein_deviation: f64,
    pub max_scalar_deviation: f64,
    /// Largest `|g_ij − factor·δ_ij|` (Kähler chart only).
    pub max_metric_deviation: f64,
}

fn sample(point: [f64; 2], g: &MetricTensor<Jet<TwoFloat>>) -> Result<CurvatureSample> {
    let gi = invert_jet_metric(g).ok_or_else(|| Error::Domain(format!("metric singular at {point:?}")))?;
    let ric = ricci_from_metric(g, &gi);
    let f = |x: &Jet<TwoFloat>| f64::from(*x.base());
    Ok(CurvatureSample {
        point,
        metric: std::array::from_fn(|m| std::array::from_fn(|n| f(g.get(m, n)))),
        ricci: std::array::from_fn(|m| std::array::from_fn(|n| f(ric.get(m, n)))),
        scalar: f(&scalar_curvature(&gi, &ric)),
    })
}

pub fn sphere_sample(theta: f64, phi: f64, margin: f64) -> Result<CurvatureSample> {
    if !(theta >= margin && theta <= std::f64::consts::PI - margin) {
        return Err(Error::Domain(format!(
            "θ = {theta} is within {margin} of a pole"
        )));
    }
    sample([theta, phi], &spherical_metric_jet_dd(theta, 2))
}

pub fn kahler_sample(u: f64, v: f64) -> Result<CurvatureSample> {
    sample([u, v], &kahler_metric_jet_dd(u, v, 2))
}

/// `n × n` grid with `θ ∈ [margin, π − margin]` and `φ ∈ [0, 2π)`.
pub fn sphere_grid(n: usize, margin: f64) -> Vec<[f64; 2]> {
    let span = std::f64::consts::PI - 2.0 * margin;
    let mut out = Vec::with_capacity(n * n);
    for i in 0..n {
        let theta = margin + span * i as f64 / (n.max(2) - 1) as f64;
        for j in 0..n {
            out.push([theta, std::f64::consts::TAU * j as f64 / n as f64]);
        }
    }
    out
}

/// `n × n` grid on `[−3, 3]²`.
pub fn plane_grid(n: usize) -> Vec<[f64; 2]> {
    let step = 6.0 / (n.max(2) - 1) as f64;
    (0..n)
        .flat_map(|i| (0..n).map(move |j| [-3.0 + step * i as f64, -3.0 + step * j as f64]))
        .collect()
}

/// Stereographic image `ζ = cot(θ/2) e^{iφ}`.
pub fn sphere_to_plane(theta: f64, phi: f64) -> [f64; 2] {
    let r = 1.0 / (theta / 2.0).tan();
    [r * phi.cos(), r * phi.sin()]
}

fn summarize(samples: &[CurvatureSample], metric_dev: f64) -> EinsteinSummary {
    EinsteinSummary {
        samples: samples.len(),
        max_einstein_deviation: samples.iter().map(|s| s.einstein_deviation()).fold(0.0, f64::max),
        max_scalar_deviation: samples.iter().map(|s| s.scalar_deviation()).fold(0.0, f64::max),
        max_metric_deviation: metric_dev,
    }
}

pub fn sphere_einstein_check(points: &[[f64; 2]], margin: f64) -> Result<EinsteinSummary> {
    let samples = points
        .par_iter()
        .map(|p| sphere_sample(p[0], p[1], margin))
        .collect::<Result<Vec<_>>>()?;
    Ok(summarize(&samples, 0.0))
}

pub fn kahler_conformal_check(points: &[[f64; 2]]) -> Result<EinsteinSummary> {
    let samples = points
        .par_iter()
        .map(|p| kahler_sample(p[0], p[1]))
        .collect::<Result<Vec<_>>>()?;
    let metric_dev = samples
        .iter()
        .map(|s| {
            let f = conformal_factor(s.point[0], s.point[1]);
            let m = s.metric;
            (m[0][0] - f).abs().max((m[1][1] - f).abs()).max(m[0][1].abs())
        })
        .fold(0.0, f64::max);
    Ok(summarize(&samples, metric_dev))
}
