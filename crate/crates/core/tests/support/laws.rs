//! Property bodies shared by the property suite and the acceptance runner.

#![allow(dead_code)]

use std::sync::Arc;

use kummer_core::algebra::rational::{int, ratio, Rational};
use kummer_core::algebra::{Context, Monomial, Poly, TruncatedSeries};
use kummer_core::inversion::chart::{metric_point, xyz_jets, ChartBPoint};
use kummer_core::inversion::{Jet, QuadExt};
use kummer_core::sigma::wp::{SigmaJets, Wp2};
use kummer_core::sigma::{build_sigma, LambdaMode, SigmaLevel};
use kummer_core::sphere::metrics::{invert_jet_metric, kahler_metric, kahler_metric_jet};
use kummer_core::tensor::numeric::{christoffel_fd, rel_diff};
use kummer_core::tensor::{christoffel, riemann, MetricTensor};
use proptest::prelude::*;
use proptest::test_runner::TestCaseError;

pub type Outcome = Result<(), TestCaseError>;

pub fn ctx() -> Arc<Context> {
    Context::new(&["u", "v", "a"], 2)
}

pub fn rat() -> impl Strategy<Value = Rational> {
    (-9i64..=9, 1i64..=5).prop_map(|(p, q)| ratio(p, q))
}

pub fn poly() -> impl Strategy<Value = Poly> {
    prop::collection::vec((0u8..4, 0u8..4, 0u8..2, rat()), 0..6).prop_map(|terms| {
        let c = ctx();
        let terms = terms
            .into_iter()
            .map(|(a, b, l, k)| (Monomial::from_exponents(&[a, b, l]), k))
            .collect();
        Poly::from_terms(&c, terms)
    })
}

pub fn nonzero_poly() -> impl Strategy<Value = Poly> {
    poly().prop_filter("nonzero", |p| !p.is_zero())
}

#[allow(clippy::eq_op)]
pub fn ring_laws(a: Poly, b: Poly, c: Poly) -> Outcome {
    prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
    prop_assert_eq!(&a * &b, &b * &a);
    prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
    prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
    prop_assert!((&a - &a).is_zero());
    Ok(())
}

pub fn leibniz_and_mixed_partials(a: Poly, b: Poly) -> Outcome {
    for i in 0..3 {
        let lhs = (&a * &b).diff(i);
        let rhs = &(&a.diff(i) * &b) + &(&a * &b.diff(i));
        prop_assert_eq!(lhs, rhs);
    }
    prop_assert_eq!(a.diff(0).diff(1), a.diff(1).diff(0));
    Ok(())
}

pub fn evaluation_is_a_homomorphism(a: Poly, b: Poly, x: Rational, y: Rational, l: Rational) -> Outcome {
    let at = [("u", x), ("v", y), ("a", l)];
    let ea = a.eval(&at).unwrap();
    let eb = b.eval(&at).unwrap();
    prop_assert_eq!((&a * &b).eval(&at).unwrap(), &ea * &eb);
    prop_assert_eq!((&a + &b).eval(&at).unwrap(), &ea + &eb);
    Ok(())
}

/// Multiplies by `u^k` so every term sits at degree `≥ k`.
fn shift(p: &Poly, k: i64) -> Poly {
    let c = p.ctx().clone();
    p * &Poly::monomial(&c, Monomial::var(0, k.max(0) as u8), int(1))
}

/// Any completions of two truncated operands agree with their product
/// through its reported known order.
pub fn product_order_is_sound(a: Poly, b: Poly, pa: Poly, pb: Poly, k1: i64, k2: i64) -> Outcome {
    let cap = 12;
    let s = TruncatedSeries::with_known(a.clone(), k1, cap);
    let t = TruncatedSeries::with_known(b.clone(), k2, cap);
    let prod = s.mul(&t);
    let full_a = &a.truncate_below(k1) + &shift(&pa, k1 + 1);
    let full_b = &b.truncate_below(k2) + &shift(&pb, k2 + 1);
    let exact = &full_a * &full_b;
    let k = prod.validated_order();
    prop_assert_eq!(prod.body().truncate_below(k), exact.truncate_below(k));
    Ok(())
}

pub fn division_round_trip(a: Poly, d: Poly) -> Outcome {
    let cap = 16;
    let q = TruncatedSeries::from_poly(&a * &d, cap)
        .exact_divide(&TruncatedSeries::from_poly(d, cap))
        .unwrap();
    prop_assert_eq!(q.body(), &a);
    Ok(())
}

pub fn quadext_laws(c1: Rational, c2: Rational, x: [Rational; 4], y: [Rational; 4], z: [Rational; 4]) -> Outcome {
    let ctx = QuadExt::context(c1, c2);
    let mk = |v: [Rational; 4]| {
        let [a, b, c, d] = v;
        QuadExt::new(&ctx, a, b, c, d)
    };
    let (x, y, z) = (mk(x), mk(y), mk(z));
    prop_assert_eq!(x.mul(&y), y.mul(&x));
    prop_assert_eq!(x.mul(&y).mul(&z), x.mul(&y.mul(&z)));
    prop_assert_eq!(x.mul(&y).norm(), x.norm() * y.norm());
    if let Ok(inv) = x.inv() {
        prop_assert_eq!(inv.mul(&x), QuadExt::rational(&ctx, int(1)));
    }
    Ok(())
}

pub fn sigma_and_wp_parity(l: [i64; 5], level: usize) -> Outcome {
    let level = SigmaLevel::ALL[level];
    let s = build_sigma(level, LambdaMode::Specialized(l.map(int)), 12);
    prop_assert!(s.sigma.body().has_parity(&[0, 1], true));
    let j = SigmaJets::new(&s);
    for w in Wp2::ALL {
        prop_assert_eq!(j.wp2(w).parity(), Some(false));
    }
    Ok(())
}

pub fn chart_b_swap_symmetry(x1: (i64, i64), x2: (i64, i64), l: [i64; 5], s1: bool, s2: bool) -> Outcome {
    let sg = |b: bool| if b { 1 } else { -1 };
    let p = ChartBPoint::new(ratio(x1.0, x1.1), ratio(x2.0, x2.1), l.map(int), sg(s1), sg(s2));
    if p.check_admissible().is_err() {
        return Err(TestCaseError::reject("inadmissible"));
    }
    let q = p.swapped();
    let swap = |e: &QuadExt| QuadExt::new(&q.quad_ctx(), e.a.clone(), e.c.clone(), e.b.clone(), e.d.clone());
    let a = xyz_jets(&p).unwrap();
    let b = xyz_jets(&q).unwrap();
    for k in 0..3 {
        prop_assert_eq!(swap(a[k].base()), b[k].base().clone());
    }
    let g = metric_point(&p).unwrap();
    let h = metric_point(&q).unwrap();
    prop_assert_eq!(swap(g.g11.base()), h.g22.base().clone());
    prop_assert_eq!(swap(g.g12.base()), h.g12.base().clone());
    Ok(())
}

pub fn lowered_riemann_is_antisymmetric(c: Vec<f64>) -> Outcome {
    let jet = |off: usize, base: f64| {
        Jet::from_fn(2, |i, j| if i + j == 0 { base } else { c[off + (i * 3 + j) as usize % 10] })
    };
    let g = MetricTensor::new(jet(0, 2.0), jet(10, 0.3), jet(20, 1.5));
    let gi = invert_jet_metric(&g).unwrap();
    let r = riemann(&christoffel(&g, &gi));
    // R_{ab01} = g_{ac} R^c_{b01}
    let low = |a: usize, b: usize| -> f64 { (0..2).map(|k| g.get(a, k).base() * r.get(k, b, 0, 1).base()).sum() };
    prop_assert!((low(0, 1) + low(1, 0)).abs() < 1e-12);
    prop_assert!(low(0, 0).abs() < 1e-12);
    prop_assert!(low(1, 1).abs() < 1e-12);
    for a in 0..2 {
        for b in 0..2 {
            prop_assert_eq!(*r.get(a, b, 0, 1).base(), -*r.get(a, b, 1, 0).base());
        }
    }
    Ok(())
}

pub const FD_TOL: f64 = 1e-6;

pub fn christoffel_matches_finite_differences(u: f64, v: f64) -> Outcome {
    let g = kahler_metric_jet(u, v, 1);
    let gi = invert_jet_metric(&g).unwrap();
    let gamma = christoffel(&g, &gi);
    let fd = christoffel_fd(kahler_metric, [u, v], 1e-5);
    for l in 0..2 {
        for m in 0..2 {
            for n in 0..2 {
                prop_assert!(rel_diff(*gamma.get(l, m, n).base(), fd[l][m][n]) < FD_TOL);
            }
        }
    }
    Ok(())
}
