use kummer_core::algebra::rational::ratio;
use kummer_core::algebra::{term, Context, LowestTerms, Poly, TruncatedSeries};
use kummer_core::sigma::chart::metric_times_inverse;
use kummer_core::sigma::wp::Wp3;
use kummer_core::sigma::{build_sigma, KummerVariant, LambdaMode, SigmaChart, SigmaLevel, SigmaSeries};
use kummer_core::tensor::DiffRing;
use std::sync::Arc;

fn poly(ctx: &Arc<Context>, terms: &[(i64, i64, u8, u8)]) -> Poly {
    terms
        .iter()
        .fold(Poly::zero(ctx), |acc, &(p, q, a, b)| &acc + &term(ctx, ratio(p, q), &[a, b]))
}

fn through(p: &Poly, d: u32) -> Poly {
    p.truncate(d)
}

#[test]
fn metric_numerators_match_displays() {
    let s = build_sigma(SigmaLevel::Seven, LambdaMode::Symbolic, 16);
    let ctx = s.ctx().clone();
    let g = SigmaChart::new(&s).metric_numerators().unwrap();
    let g11 = poly(&ctx, &[(4, 1, 0, 0), (4, 1, 2, 2), (4, 1, 0, 4), (16, 3, 1, 5), (16, 9, 0, 8)]);
    let g12 = poly(
        &ctx,
        &[(-4, 1, 0, 2), (-4, 1, 3, 1), (-4, 1, 1, 3), (-12, 1, 2, 4), (-8, 3, 0, 6), (-20, 3, 1, 7), (-8, 27, 0, 10)],
    );
    let g22 = poly(
        &ctx,
        &[
            (4, 1, 4, 0),
            (4, 1, 2, 2),
            (4, 1, 0, 4),
            (56, 3, 3, 3),
            (16, 3, 1, 5),
            (68, 3, 2, 6),
            (16, 9, 0, 8),
            (56, 27, 1, 9),
            (4, 81, 0, 12),
        ],
    );
    assert_eq!(g.g11.lambda_free_part(), g11);
    assert_eq!(g.g12.lambda_free_part(), g12);
    assert_eq!(g.g22.lambda_free_part(), g22);
}

#[test]
fn determinant_matches_display() {
    // the λ = 0 chart is exact; cap 20 keeps the whole degree-16 display
    let s = build_sigma(SigmaLevel::Three, LambdaMode::zero(), 20);
    let ctx = s.ctx().clone();
    let inv = SigmaChart::new(&s).metric_det_inverse().unwrap();
    let expected = poly(
        &ctx,
        &[
            (1, 1, 4, 0),
            (1, 1, 2, 2),
            (8, 3, 3, 3),
            (-2, 3, 1, 5),
            (2, 3, 2, 6),
            (1, 9, 0, 8),
            (-40, 27, 1, 9),
            (1, 1, 2, 10),
            (25, 81, 0, 12),
            (-2, 3, 1, 13),
            (1, 9, 0, 16),
        ],
    )
    .scale(&ratio(16, 1));
    assert_eq!(through(inv.det_hat.body(), 16), expected);

    let sym = build_sigma(SigmaLevel::Five, LambdaMode::Symbolic, 16);
    let inv = SigmaChart::new(&sym).metric_det_inverse().unwrap();
    assert_eq!(inv.det_hat.lambda_free_part(), expected);
}

#[test]
fn metric_times_inverse_is_identity() {
    for lam in [LambdaMode::zero(), LambdaMode::Symbolic] {
        let s = build_sigma(SigmaLevel::Five, lam, 14);
        let ctx = s.ctx().clone();
        let inv = SigmaChart::new(&s).metric_det_inverse().unwrap();
        let p = metric_times_inverse(&inv).unwrap();
        for (i, row) in p.iter().enumerate() {
            for (j, e) in row.iter().enumerate() {
                let want = if i == j { Poly::constant(&ctx, ratio(1, 1)) } else { Poly::zero(&ctx) };
                assert_eq!(e.body(), &want, "entry ({i},{j})");
            }
        }
    }
}

#[test]
fn quartic_vanishing_orders_by_level() {
    let mut last = -1;
    for (level, want) in [(SigmaLevel::Three, 5), (SigmaLevel::Five, 7), (SigmaLevel::Seven, 9)] {
        let s = build_sigma(level, LambdaMode::Symbolic, 16);
        let d = SigmaChart::new(&s).kummer_det(KummerVariant::Kernel).unwrap();
        assert_eq!(d.zero_through(), want, "level {level}");
        assert!(d.zero_through() > last);
        last = d.zero_through();

        let m = SigmaChart::new(&s.as_model()).kummer_det(KummerVariant::Kernel).unwrap();
        assert!(m.vanishes());
        assert_eq!(m.known_order(), Some(want));
    }
}

#[test]
fn quartic_is_exact_at_zero_lambda() {
    for level in SigmaLevel::ALL {
        let s = build_sigma(level, LambdaMode::zero(), 16);
        let d = SigmaChart::new(&s).kummer_det(KummerVariant::Kernel).unwrap();
        assert!(d.is_exactly_zero());
    }
}

#[test]
fn printed_entry_breaks_the_quartic() {
    let s = build_sigma(SigmaLevel::Three, LambdaMode::zero(), 16);
    let d = SigmaChart::new(&s).kummer_det(KummerVariant::Printed).unwrap();
    assert!(!d.vanishes());
}

#[test]
fn residuals_vanish_through_validated_order() {
    for level in SigmaLevel::ALL {
        let s = build_sigma(level, LambdaMode::Symbolic, 14).as_model();
        let ch = SigmaChart::new(&s);
        for r in ch.pde_residuals().unwrap() {
            assert!(r.vanishes());
            assert_eq!(r.known_order(), Some(level.degree() as i64));
        }
        for r in ch.kernel_residual().unwrap() {
            assert!(r.vanishes());
        }
    }
    let s = build_sigma(SigmaLevel::Three, LambdaMode::zero(), 16);
    let ch = SigmaChart::new(&s);
    assert!(ch.pde_residuals().unwrap().iter().all(|r| r.is_exactly_zero()));
    assert!(ch.kernel_residual().unwrap().iter().all(|r| r.is_exactly_zero()));
}

#[test]
fn corrupted_sigma_is_detected() {
    let ctx = Context::sigma();
    let bad = &Poly::var(&ctx, 0) + &term(&ctx, ratio(1, 3), &[0, 3]);
    let s = SigmaSeries {
        sigma: TruncatedSeries::from_poly(bad, 16),
        level: SigmaLevel::Three,
        lambda: LambdaMode::zero(),
    };
    let r = SigmaChart::new(&s).pde_residuals().unwrap();
    assert!(r[0].first_nonzero().is_some_and(|d| d <= 4));
}

#[test]
fn corrupted_third_derivative_is_detected() {
    let s = build_sigma(SigmaLevel::Three, LambdaMode::zero(), 16);
    let mut ch = SigmaChart::new(&s);
    let w = &mut ch.wp3[0];
    let lowest = match w.num.lowest_terms() {
        LowestTerms::Found { part, .. } => part,
        _ => unreachable!(),
    };
    let first = Poly::from_terms(lowest.ctx(), vec![lowest.terms()[0].clone()]);
    w.num = TruncatedSeries::from_poly(w.num.body() - &first, 16);
    assert!(ch.kernel_residual().unwrap().iter().any(|r| !r.vanishes()));
}

#[test]
fn ricci_fingerprints_across_levels() {
    let ctx = Context::sigma();
    let k = -1024;
    let expect = [
        (10, poly(&ctx, &[(k, 1, 5, 5)])),
        (12, poly(&ctx, &[(-k, 1, 5, 7)])),
        (14, poly(&ctx, &[(k, 1, 9, 5), (k, 1, 7, 7), (k, 1, 5, 9)])),
    ];
    for level in SigmaLevel::ALL {
        let s = build_sigma(level, LambdaMode::Symbolic, 16);
        let r = SigmaChart::new(&s).ricci_hat().unwrap();
        for (got, (deg, part)) in r.lambda_free_lowest().iter().zip(expect.iter()) {
            assert_eq!(got, &LowestTerms::Found { degree: *deg, part: part.clone() }, "level {level}");
        }
        assert_eq!(r.r12.body(), r.r21.body());
    }
}

#[test]
fn third_derivatives_are_odd_in_symbolic_chart() {
    let s = build_sigma(SigmaLevel::Seven, LambdaMode::Symbolic, 14);
    let ch = SigmaChart::new(&s);
    for (w, f) in Wp3::ALL.iter().zip(ch.wp3.iter()) {
        assert_eq!(f.parity(), Some(true), "℘{}", w.label());
    }
    let g = ch.gauss_metric();
    for e in [&g.g11, &g.g12, &g.g22] {
        assert_eq!(e.parity(), Some(false));
    }
    assert!(ch.x.mul(&ch.y).parity() == Some(false));
}
