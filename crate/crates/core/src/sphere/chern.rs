//! First Chern number of the round sphere by compactified quadrature.

use std::num::NonZeroUsize;

use gauss_quad::legendre::GaussLegendre;

use crate::error::{Error, Result};

const NODES: usize = 8;
const MAX_PANELS: usize = 1 << 16;

#[derive(Clone, Debug, PartialEq)]
pub struct ChernResult {
    pub value: f64,
    /// Change between the last two refinements.
    pub last_change: f64,
    pub panels: usize,
    /// Estimates at each refinement, coarsest first.
    pub history: Vec<f64>,
}

/// `(2/π) / (1 + r²)²`.
pub fn chern_integrand(r: f64) -> f64 {
    2.0 / std::f64::consts::PI / (1.0 + r * r).powi(2)
}

/// `2π r · integrand` after `r = t/(1 − t)`, including `dr/dt`.
fn radial(t: f64) -> f64 {
    let s = 1.0 - t;
    let r = t / s;
    std::f64::consts::TAU * r * chern_integrand(r) / (s * s)
}

fn estimate(rule: &GaussLegendre, panels: usize) -> f64 {
    let h = 1.0 / panels as f64;
    (0..panels)
        .map(|k| rule.integrate(k as f64 * h, (k + 1) as f64 * h, radial))
        .sum()
}

/// `(2/π) ∬ du dv / (1 + u² + v²)²`, refined by panel doubling until two
/// successive estimates differ by less than `tol / 10`.
pub fn chern_number(tol: f64) -> Result<ChernResult> {
    if tol.is_nan() || tol < 1e-10 {
        return Err(Error::Domain(format!("tolerance {tol} below 1e-10")));
    }
    let rule = GaussLegendre::new(NonZeroUsize::new(NODES).unwrap());
    let mut panels = 1;
    let mut history = vec![estimate(&rule, panels)];
    while panels < MAX_PANELS {
        panels *= 2;
        let next = estimate(&rule, panels);
        let change = (next - history[history.len() - 1]).abs();
        history.push(next);
        if change < tol / 10.0 {
            return Ok(ChernResult {
                value: next,
                last_change: change,
                panels,
                history,
            });
        }
    }
    Err(Error::Quadrature(format!(
        "no convergence with {panels} panels; last estimates {:?}",
        &history[history.len().saturating_sub(3)..]
    )))
}
