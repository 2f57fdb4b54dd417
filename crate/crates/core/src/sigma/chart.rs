//! Quantities of the σ chart: PDE and kernel residuals, the quartic
//! determinant, the Gauss metric and the cleared Ricci tensor.

use std::sync::Arc;

use rayon::prelude::*;

use super::kummer::{det4, kernel_product, kummer_matrix, KummerVariant};
use super::rational::{SigmaField, SigmaRational};
use super::series::SigmaSeries;
use super::wp::{SigmaJets, Wp2, Wp3};
use crate::algebra::rational::ratio;
use crate::algebra::{LowestTerms, Poly, TruncatedSeries};
use crate::error::{Error, Result};
use crate::tensor::{christoffel, ricci, riemann, DiffRing, MetricTensor};

/// A numerator series together with what is known about it.
#[derive(Clone, Debug)]
pub struct SeriesCheck {
    pub series: TruncatedSeries,
}

impl SeriesCheck {
    pub fn new(series: TruncatedSeries) -> SeriesCheck {
        SeriesCheck { series }
    }

    /// `None` when the series is exact.
    pub fn known_order(&self) -> Option<i64> {
        self.series.known_order()
    }

    pub fn validated_order(&self) -> i64 {
        self.series.validated_order()
    }

    /// Lowest degree carrying a nonzero coefficient.
    pub fn first_nonzero(&self) -> Option<u32> {
        self.series.body().min_degree()
    }

    pub fn is_exactly_zero(&self) -> bool {
        self.series.body().is_zero() && self.series.is_exact()
    }

    /// Degree through which every coefficient is observed to vanish.
    pub fn zero_through(&self) -> i64 {
        match self.first_nonzero() {
            Some(d) => d as i64 - 1,
            None => self.validated_order(),
        }
    }

    pub fn vanishes(&self) -> bool {
        self.series.body().is_zero()
    }
}

/// Cleared Ricci numerators `R̂ij = σ² D̂² R_ij`.
#[derive(Clone, Debug)]
pub struct RicciHat {
    pub r11: TruncatedSeries,
    pub r12: TruncatedSeries,
    pub r21: TruncatedSeries,
    pub r22: TruncatedSeries,
}

impl RicciHat {
    pub fn components(&self) -> [(&'static str, &TruncatedSeries); 3] {
        [("R11", &self.r11), ("R12", &self.r12), ("R22", &self.r22)]
    }

    /// λ-free lowest terms of `R̂11, R̂12, R̂22`.
    pub fn lambda_free_lowest(&self) -> [LowestTerms; 3] {
        [
            self.r11.lambda_free().lowest_terms(),
            self.r12.lambda_free().lowest_terms(),
            self.r22.lambda_free().lowest_terms(),
        ]
    }
}

/// Inverse metric data: `D̂ = σ¹² det g` and `g⁻¹` over the field that
/// knows `D̂`.
pub struct MetricInverse {
    pub det_hat: TruncatedSeries,
    pub field: Arc<SigmaField>,
    pub g: MetricTensor<SigmaRational>,
    pub g_inv: MetricTensor<SigmaRational>,
}

/// Cached ℘-functions for one σ-series.
pub struct SigmaChart {
    pub series: SigmaSeries,
    pub jets: SigmaJets,
    pub x: SigmaRational,
    pub y: SigmaRational,
    pub z: SigmaRational,
    pub wp3: [SigmaRational; 4],
}

impl SigmaChart {
    pub fn new(series: &SigmaSeries) -> SigmaChart {
        let jets = SigmaJets::new(series);
        let x = jets.wp2(Wp2::P22);
        let y = jets.wp2(Wp2::P21);
        let z = jets.wp2(Wp2::P11);
        let wp3 = Wp3::ALL.map(|w| jets.wp3(w));
        SigmaChart {
            series: series.clone(),
            jets,
            x,
            y,
            z,
            wp3,
        }
    }

    pub fn field(&self) -> &Arc<SigmaField> {
        &self.jets.field
    }

    pub fn cap(&self) -> u32 {
        self.series.sigma.cap()
    }

    pub fn lambdas(&self) -> [SigmaRational; 5] {
        std::array::from_fn(|i| {
            self.field()
                .series(TruncatedSeries::from_poly(self.series.lambda(i), self.cap()))
        })
    }

    /// Residuals of the five fourth-order equations, as numerators over σ⁴.
    pub fn pde_residuals(&self) -> Result<[SeriesCheck; 5]> {
        let [p2222, p2221, p2211, p2111, p1111] = self.jets.wp4();
        let (x, y, z) = (&self.x, &self.y, &self.z);
        let l = self.lambdas();
        let f = self.field();
        let c = |p: i64, q: i64| f.constant(ratio(p, q));
        let k = |r: &SigmaRational, p: i64, q: i64| r.scale(&ratio(p, q));

        let e1 = p2222
            .sub(&k(&x.mul(x), 6, 1))
            .sub(&k(y, 4, 1))
            .sub(&l[4].mul(x))
            .sub(&l[3].half());
        let e2 = p2221
            .sub(&k(&x.mul(y), 6, 1))
            .add(&k(z, 2, 1))
            .sub(&l[4].mul(y));
        let e3 = p2211
            .sub(&k(&y.mul(y), 4, 1))
            .sub(&k(&x.mul(z), 2, 1))
            .sub(&l[3].half().mul(y));
        let e4 = p2111
            .sub(&k(&y.mul(z), 6, 1))
            .sub(&l[2].mul(y))
            .add(&l[1].half().mul(x))
            .add(&l[0]);
        let e5 = p1111
            .sub(&k(&z.mul(z), 6, 1))
            .sub(&l[2].mul(z))
            .sub(&l[1].mul(y))
            .add(&k(&l[0].mul(x), 3, 1))
            .sub(&l[3].mul(&l[1]).mul(&c(1, 8)))
            .add(&l[4].mul(&l[0]).half());
        let residuals = [e1, e2, e3, e4, e5];
        let out = residuals
            .par_iter()
            .map(|r| r.numerator_over(4, 0).map(SeriesCheck::new))
            .collect::<Result<Vec<_>>>()?;
        Ok(out.try_into().expect("five residuals"))
    }

    pub fn kummer_matrix(&self, variant: KummerVariant) -> [[SigmaRational; 4]; 4] {
        kummer_matrix(&self.x, &self.y, &self.z, &self.lambdas(), variant)
    }

    /// `σ⁸ · det K` as a series.
    pub fn kummer_det(&self, variant: KummerVariant) -> Result<SeriesCheck> {
        let d = det4(&self.kummer_matrix(variant));
        Ok(SeriesCheck::new(d.numerator_over(8, 0)?))
    }

    /// `σ⁵ · K (℘222, ℘221, ℘211, ℘111)ᵀ`.
    pub fn kernel_residual(&self) -> Result<[SeriesCheck; 4]> {
        let prod = kernel_product(&self.kummer_matrix(KummerVariant::Kernel), &self.wp3);
        let out = prod
            .iter()
            .map(|p| p.numerator_over(5, 0).map(SeriesCheck::new))
            .collect::<Result<Vec<_>>>()?;
        Ok(out.try_into().expect("four rows"))
    }

    /// Induced metric of `(u, v) ↦ (℘22, ℘21, ℘11)`; entries over σ⁶.
    pub fn gauss_metric(&self) -> MetricTensor<SigmaRational> {
        let [p222, p221, p211, p111] = &self.wp3;
        let g11 = p221.mul(p221).add(&p211.mul(p211)).add(&p111.mul(p111));
        let g12 = p222.mul(p221).add(&p221.mul(p211)).add(&p211.mul(p111));
        let g22 = p222.mul(p222).add(&p221.mul(p221)).add(&p211.mul(p211));
        MetricTensor::new(g11, g12, g22)
    }

    /// `ĝij = σ⁶ gij`.
    pub fn metric_numerators(&self) -> Result<MetricTensor<TruncatedSeries>> {
        let g = self.gauss_metric();
        Ok(MetricTensor::new(
            g.g11.numerator_over(6, 0)?,
            g.g12.numerator_over(6, 0)?,
            g.g22.numerator_over(6, 0)?,
        ))
    }

    pub fn metric_det_inverse(&self) -> Result<MetricInverse> {
        metric_det_inverse(&self.gauss_metric())
    }

    pub fn ricci_hat(&self) -> Result<RicciHat> {
        ricci_hat(&self.metric_det_inverse()?)
    }
}

/// `D̂ = ĝ11 ĝ22 − ĝ12²` and `g⁻¹ = σ⁶ adj(ĝ) / D̂`.
pub fn metric_det_inverse(g: &MetricTensor<SigmaRational>) -> Result<MetricInverse> {
    let gh = MetricTensor::new(
        g.g11.numerator_over(6, 0)?,
        g.g12.numerator_over(6, 0)?,
        g.g22.numerator_over(6, 0)?,
    );
    let det_hat = gh.g11.mul(&gh.g22).sub(&gh.g12.mul(&gh.g12));
    if det_hat.body().is_zero() {
        return Err(Error::SingularMetric(format!(
            "σ¹² det g vanishes through order {}",
            det_hat.validated_order()
        )));
    }
    let field = g.g11.field().with_det(det_hat.clone());
    let g = g.map(|x| x.rehome(&field));
    let g_inv = MetricTensor::new(
        SigmaRational::new(&field, gh.g22.clone(), -6, 1),
        SigmaRational::new(&field, gh.g12.neg(), -6, 1),
        SigmaRational::new(&field, gh.g11.clone(), -6, 1),
    );
    Ok(MetricInverse {
        det_hat,
        field,
        g,
        g_inv,
    })
}

/// Ricci tensor cleared by `σ² D̂²`.
pub fn ricci_hat(inv: &MetricInverse) -> Result<RicciHat> {
    let gamma = christoffel(&inv.g, &inv.g_inv);
    let ric = ricci(&riemann(&gamma));
    Ok(RicciHat {
        r11: ric.get(0, 0).numerator_over(2, 2)?,
        r12: ric.get(0, 1).numerator_over(2, 2)?,
        r21: ric.get(1, 0).numerator_over(2, 2)?,
        r22: ric.get(1, 1).numerator_over(2, 2)?,
    })
}

/// `g · g⁻¹` entries as numerators, to be compared with the identity.
pub fn metric_times_inverse(inv: &MetricInverse) -> Result<[[TruncatedSeries; 2]; 2]> {
    let p = inv.g.product(&inv.g_inv);
    let mut out: Vec<TruncatedSeries> = Vec::with_capacity(4);
    for row in p.iter() {
        for e in row.iter() {
            out.push(e.numerator_over(0, 0)?);
        }
    }
    Ok([[out[0].clone(), out[1].clone()], [out[2].clone(), out[3].clone()]])
}

/// λ-free lowest part, as text with its degree, for reports.
pub fn describe_lowest(t: &LowestTerms) -> (Option<u32>, String) {
    match t {
        LowestTerms::Found { degree, part } => (Some(*degree), part.to_text()),
        LowestTerms::ZeroThrough(k) => (None, format!("0 + O({})", k + 1)),
        LowestTerms::Zero => (None, "0".into()),
    }
}

pub fn lowest_part(p: &TruncatedSeries) -> Option<Poly> {
    match p.lowest_terms() {
        LowestTerms::Found { part, .. } => Some(part),
        _ => None,
    }
}
