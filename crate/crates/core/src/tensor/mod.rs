//! Curvature of a two-dimensional metric over any commutative
//! differential ring.
//!
//! Conventions:
//!
//! ```text
//! Γ^λ_{μν}   = ½ g^{λσ} (∂_μ g_{σν} + ∂_ν g_{μσ} − ∂_σ g_{μν})
//! R^α_{βμν}  = ∂_μ Γ^α_{βν} − ∂_ν Γ^α_{βμ} + Γ^α_{τμ} Γ^τ_{βν} − Γ^α_{τν} Γ^τ_{βμ}
//! R_{μν}     = R^α_{μαν}
//! ```
//!
//! Coordinates are indexed `0` and `1`.

pub mod numeric;

use rayon::prelude::*;

/// Outcome of testing a ring element for zero.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ZeroStatus {
    Zero,
    /// No nonzero coefficient through the given order; higher orders unknown.
    ZeroThrough(i64),
    NonZero,
}

impl ZeroStatus {
    pub fn is_zero_or_qualified(self) -> bool {
        !matches!(self, ZeroStatus::NonZero)
    }
}

/// The operations the curvature pipeline needs from its scalars.
pub trait DiffRing: Clone + Send + Sync {
    fn add(&self, other: &Self) -> Self;
    fn sub(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn neg(&self) -> Self;
    fn half(&self) -> Self;
    /// Partial derivative in coordinate `0` or `1`.
    fn derivative(&self, coord: usize) -> Self;
    fn zero_like(&self) -> Self;
    fn one_like(&self) -> Self;
    fn zero_status(&self) -> ZeroStatus;
}

/// Symmetric 2×2 array `(g11, g12, g22)`.
#[derive(Clone, Debug, PartialEq)]
pub struct MetricTensor<R> {
    pub g11: R,
    pub g12: R,
    pub g22: R,
}

impl<R: Clone> MetricTensor<R> {
    pub fn new(g11: R, g12: R, g22: R) -> Self {
        MetricTensor { g11, g12, g22 }
    }

    pub fn get(&self, i: usize, j: usize) -> &R {
        match (i, j) {
            (0, 0) => &self.g11,
            (1, 1) => &self.g22,
            (0, 1) | (1, 0) => &self.g12,
            _ => panic!("metric index out of range: ({i},{j})"),
        }
    }

    pub fn map<S, F: Fn(&R) -> S>(&self, f: F) -> MetricTensor<S> {
        MetricTensor {
            g11: f(&self.g11),
            g12: f(&self.g12),
            g22: f(&self.g22),
        }
    }
}

impl<R: DiffRing> MetricTensor<R> {
    pub fn det(&self) -> R {
        self.g11.mul(&self.g22).sub(&self.g12.mul(&self.g12))
    }

    /// `(g22, −g12, g11)`: the inverse times the determinant.
    pub fn adjugate(&self) -> MetricTensor<R> {
        MetricTensor::new(self.g22.clone(), self.g12.neg(), self.g11.clone())
    }

    /// `self · other` as a full (possibly asymmetric) 2×2 array.
    pub fn product(&self, other: &MetricTensor<R>) -> [[R; 2]; 2] {
        std::array::from_fn(|i| {
            std::array::from_fn(|j| {
                self.get(i, 0)
                    .mul(other.get(0, j))
                    .add(&self.get(i, 1).mul(other.get(1, j)))
            })
        })
    }
}

/// `Γ^λ_{μν}` stored as `gamma[λ][μ][ν]`.
#[derive(Clone, Debug)]
pub struct Christoffel<R> {
    pub gamma: [[[R; 2]; 2]; 2],
}

impl<R> Christoffel<R> {
    pub fn get(&self, upper: usize, a: usize, b: usize) -> &R {
        &self.gamma[upper][a][b]
    }
}

/// `R^α_{βμν}` stored as `r[α][β][μ][ν]`.
#[derive(Clone, Debug)]
pub struct RiemannTensor<R> {
    pub r: [[[[R; 2]; 2]; 2]; 2],
}

impl<R> RiemannTensor<R> {
    pub fn get(&self, a: usize, b: usize, m: usize, n: usize) -> &R {
        &self.r[a][b][m][n]
    }
}

/// `R_{μν}` as a full 2×2 array; symmetry is a checkable property, not assumed.
#[derive(Clone, Debug)]
pub struct RicciTensor<R> {
    pub r: [[R; 2]; 2],
}

impl<R: DiffRing> RicciTensor<R> {
    pub fn get(&self, m: usize, n: usize) -> &R {
        &self.r[m][n]
    }

    pub fn asymmetry(&self) -> R {
        self.r[0][1].sub(&self.r[1][0])
    }

    pub fn as_metric(&self) -> MetricTensor<R> {
        MetricTensor::new(self.r[0][0].clone(), self.r[0][1].clone(), self.r[1][1].clone())
    }
}

/// `∂_k g_{ij}` as `dg[k][i][j]`.
fn metric_derivatives<R: DiffRing>(g: &MetricTensor<R>) -> [[[R; 2]; 2]; 2] {
    let parts: Vec<R> = [(0, 0), (0, 1), (1, 1)]
        .into_par_iter()
        .flat_map_iter(|(i, j)| {
            let gij = g.get(i, j).clone();
            [gij.derivative(0), gij.derivative(1)]
        })
        .collect();
    // parts = [∂0 g11, ∂1 g11, ∂0 g12, ∂1 g12, ∂0 g22, ∂1 g22]
    let at = |k: usize, i: usize, j: usize| -> R {
        let slot = match (i.min(j), i.max(j)) {
            (0, 0) => 0,
            (0, 1) => 1,
            _ => 2,
        };
        parts[2 * slot + k].clone()
    };
    std::array::from_fn(|k| std::array::from_fn(|i| std::array::from_fn(|j| at(k, i, j))))
}

pub fn christoffel<R: DiffRing>(g: &MetricTensor<R>, g_inv: &MetricTensor<R>) -> Christoffel<R> {
    let dg = metric_derivatives(g);
    // lowered symbols Γ_{σμν} = ½(∂_μ g_{σν} + ∂_ν g_{μσ} − ∂_σ g_{μν})
    let lowered = |s: usize, m: usize, n: usize| -> R {
        dg[m][s][n].add(&dg[n][m][s]).sub(&dg[s][m][n]).half()
    };
    let index: Vec<(usize, usize, usize)> = (0..2)
        .flat_map(|l| [(l, 0, 0), (l, 0, 1), (l, 1, 1)])
        .collect();
    let values: Vec<R> = index
        .par_iter()
        .map(|&(l, m, n)| {
            g_inv
                .get(l, 0)
                .mul(&lowered(0, m, n))
                .add(&g_inv.get(l, 1).mul(&lowered(1, m, n)))
        })
        .collect();
    let find = |l: usize, m: usize, n: usize| -> R {
        let key = (l, m.min(n), m.max(n));
        values[index.iter().position(|k| *k == key).unwrap()].clone()
    };
    Christoffel {
        gamma: std::array::from_fn(|l| std::array::from_fn(|m| std::array::from_fn(|n| find(l, m, n)))),
    }
}

pub fn riemann<R: DiffRing>(gamma: &Christoffel<R>) -> RiemannTensor<R> {
    let g = &gamma.gamma;
    // independent components: α, β free, (μ,ν) = (0,1)
    let comps: Vec<R> = (0..4usize)
        .into_par_iter()
        .map(|ab| {
            let (a, b) = (ab / 2, ab % 2);
            let (m, n) = (0usize, 1usize);
            let mut acc = g[a][b][n].derivative(m).sub(&g[a][b][m].derivative(n));
            for t in 0..2 {
                acc = acc
                    .add(&g[a][t][m].mul(&g[t][b][n]))
                    .sub(&g[a][t][n].mul(&g[t][b][m]));
            }
            acc
        })
        .collect();
    let zero = comps[0].zero_like();
    RiemannTensor {
        r: std::array::from_fn(|a| {
            std::array::from_fn(|b| {
                std::array::from_fn(|m| {
                    std::array::from_fn(|n| match (m, n) {
                        (0, 1) => comps[2 * a + b].clone(),
                        (1, 0) => comps[2 * a + b].neg(),
                        _ => zero.clone(),
                    })
                })
            })
        }),
    }
}

pub fn ricci<R: DiffRing>(riem: &RiemannTensor<R>) -> RicciTensor<R> {
    RicciTensor {
        r: std::array::from_fn(|m| {
            std::array::from_fn(|n| riem.get(0, m, 0, n).add(riem.get(1, m, 1, n)))
        }),
    }
}

pub fn scalar_curvature<R: DiffRing>(g_inv: &MetricTensor<R>, ric: &RicciTensor<R>) -> R {
    let mut acc = g_inv.g11.mul(ric.get(0, 0));
    acc = acc.add(&g_inv.g12.mul(&ric.get(0, 1).add(ric.get(1, 0))));
    acc.add(&g_inv.g22.mul(ric.get(1, 1)))
}

/// Christoffel → Riemann → Ricci in one call.
pub fn ricci_from_metric<R: DiffRing>(g: &MetricTensor<R>, g_inv: &MetricTensor<R>) -> RicciTensor<R> {
    ricci(&riemann(&christoffel(g, g_inv)))
}
