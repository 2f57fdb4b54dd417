//! Pointwise binary64 helpers used to cross-check the ring pipeline.

pub type Metric2 = [[f64; 2]; 2];

/// `Γ^λ_{μν}` at `p` with metric derivatives from centered differences.
pub fn christoffel_fd<F>(metric: F, p: [f64; 2], step: f64) -> [[[f64; 2]; 2]; 2]
where
    F: Fn([f64; 2]) -> Metric2,
{
    let mut dg = [[[0.0; 2]; 2]; 2];
    for (k, slot) in dg.iter_mut().enumerate() {
        let mut plus = p;
        let mut minus = p;
        plus[k] += step;
        minus[k] -= step;
        let (gp, gm) = (metric(plus), metric(minus));
        for i in 0..2 {
            for j in 0..2 {
                slot[i][j] = (gp[i][j] - gm[i][j]) / (2.0 * step);
            }
        }
    }
    let g = metric(p);
    let det = g[0][0] * g[1][1] - g[0][1] * g[1][0];
    let inv = [
        [g[1][1] / det, -g[0][1] / det],
        [-g[1][0] / det, g[0][0] / det],
    ];
    let mut gamma = [[[0.0; 2]; 2]; 2];
    for (l, row) in gamma.iter_mut().enumerate() {
        for m in 0..2 {
            for n in 0..2 {
                row[m][n] = (0..2)
                    .map(|s| 0.5 * inv[l][s] * (dg[m][s][n] + dg[n][m][s] - dg[s][m][n]))
                    .sum();
            }
        }
    }
    gamma
}

/// Relative difference `|a − b| / max(1, |b|)`.
pub fn rel_diff(a: f64, b: f64) -> f64 {
    (a - b).abs() / b.abs().max(1.0)
}
