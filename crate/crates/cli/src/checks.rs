//! One function per subcommand, each returning its check records.

use kummer_core::algebra::rational::{int, ratio, to_text, Rational};
use kummer_core::algebra::{Context, LowestTerms, Poly, TruncatedSeries};
use kummer_core::inversion::chart::{
    dz_closed_form, float_point, metric_point, quartic_check, random_points, ricci_point, witness_points, xyz_jets, ChartBPoint,
};
use kummer_core::inversion::{FloatKind, JetScalar, QuadExt};
use kummer_core::sigma::chart::{describe_lowest, metric_times_inverse, SeriesCheck};
use kummer_core::sigma::{build_sigma, KummerVariant, LambdaMode, SigmaChart, SigmaLevel};
use kummer_core::sphere::checks::{
    kahler_conformal_check, kahler_sample, sphere_einstein_check, sphere_grid, sphere_sample, sphere_to_plane,
    plane_grid, POLE_MARGIN,
};
use kummer_core::sphere::chern::chern_number;
use kummer_core::sphere::fresnel::{double_sphere, fresnel_reduce};
use kummer_core::sphere::goepel::{
    double_quadric, goepel_constants, goepel_quartic, tetrad_context, GoepelD, GoepelInput,
};
use kummer_core::Result;
use rayon::prelude::*;
use serde_json::{json, Value};

use crate::config::{Command, RunConfig};
use crate::reference;
use crate::report::{Check, Status};

pub const SPHERE_TOL: f64 = 1e-12;
pub const KAHLER_TOL: f64 = 1e-10;
pub const FLOAT_TOL: f64 = 1e-9;
pub const GRID: usize = 20;
pub const MIN_NONZERO_RICCI: usize = 5;

/// Runs one subcommand at the given sigma levels.
pub fn run_command(cmd: Command, cfg: &RunConfig, levels: &[SigmaLevel]) -> Vec<Check> {
    let per_level = |f: fn(&RunConfig, SigmaLevel) -> Result<Vec<Check>>| {
        levels.par_iter().flat_map(|&l| guard(cmd, || f(cfg, l))).collect::<Vec<_>>()
    };
    match cmd {
        Command::QuarticVerify => per_level(quartic),
        Command::PdeVerify => {
            let mut out = per_level(pde);
            out.extend(guard(cmd, pde_anchor));
            out
        }
        Command::KernelVerify => {
            let mut out = per_level(kernel);
            out.extend(guard(cmd, kernel_anchor));
            out
        }
        Command::MetricReport => guard(cmd, || metric_report(cfg)),
        Command::RicciLeading => guard(cmd, || ricci_leading(cfg)),
        Command::InversionVerify => guard(cmd, || inversion(cfg)),
        Command::RicciPoint => guard(cmd, || ricci_points(cfg)),
        Command::DzCheck => guard(cmd, || dz_check(cfg)),
        Command::SphereVerify => guard(cmd, sphere),
        Command::KahlerVerify => guard(cmd, kahler),
        Command::Chern => guard(cmd, || chern(cfg)),
        Command::Goepel => guard(cmd, goepel),
        Command::Fresnel => guard(cmd, fresnel),
        Command::All => Command::SUITE
            .par_iter()
            .flat_map(|&c| run_command(c, cfg, &suite_levels(cfg)))
            .collect(),
    }
}

/// Levels the configured truncation order can certify.
pub fn suite_levels(cfg: &RunConfig) -> Vec<SigmaLevel> {
    SigmaLevel::ALL
        .into_iter()
        .filter(|l| l.degree() + 2 <= cfg.max_order)
        .collect()
}

fn guard(cmd: Command, f: impl FnOnce() -> Result<Vec<Check>>) -> Vec<Check> {
    f().unwrap_or_else(|e| vec![Check::new(format!("{}.error", cmd.id()), Status::Fail, e.to_string())])
}

fn lowest_text(s: &SeriesCheck) -> String {
    describe_lowest(&s.series.lowest_terms()).1
}

/// Verdict for a residual certified against the true sigma function.
fn residual_check(name: String, model: &SeriesCheck, truncated: &SeriesCheck, want: i64) -> Check {
    let witness = json!({
        "expected_order": want,
        "model_known_order": model.known_order(),
        "truncated_first_nonzero": truncated.first_nonzero(),
    });
    let check = if model.is_exactly_zero() {
        Check::new(name, Status::Pass, "exactly zero").order(model.validated_order())
    } else if model.vanishes() && model.validated_order() >= want {
        let k = model.validated_order();
        Check::new(name, Status::Pass, format!("zero through order {k}")).order(k)
    } else {
        Check::new(name, Status::Fail, format!("nonzero: {}", lowest_text(model))).order(model.validated_order())
    };
    check.witness(witness)
}

fn quartic(cfg: &RunConfig, level: SigmaLevel) -> Result<Vec<Check>> {
    let want = level.degree() as i64 + 2;
    let s = build_sigma(level, cfg.lambda.clone(), cfg.max_order);
    let chart = SigmaChart::new(&s);
    let det = chart.kummer_det(KummerVariant::Kernel)?;
    let model = SigmaChart::new(&s.as_model()).kummer_det(KummerVariant::Kernel)?;

    let main = if det.is_exactly_zero() {
        Check::new(format!("quartic.level{level}"), Status::Pass, "exactly zero").order(det.validated_order())
    } else {
        let z = det.zero_through();
        let ok = z >= want && model.vanishes() && model.validated_order() >= want;
        Check::pass_if(format!("quartic.level{level}"), ok, format!("zero through order {z}")).order(model.validated_order())
    }
    .witness(json!({
        "entry": KummerVariant::Kernel.label(),
        "expected_order": want,
        "first_nonzero_degree": det.first_nonzero(),
        "lowest_terms": lowest_text(&det),
        "model_known_order": model.known_order(),
        "observed_zero_through": det.zero_through(),
    }));

    // the alternative (2,2) entry must break the identity
    let printed = chart.kummer_det(KummerVariant::Printed)?;
    let broken = printed.first_nonzero().is_some_and(|d| (d as i64) <= want);
    let variant = Check::pass_if(
        format!("quartic.variant-printed.level{level}"),
        broken,
        match printed.first_nonzero() {
            Some(d) => format!("{} entry fails at degree {d}", KummerVariant::Printed.label()),
            None => format!("{} entry unexpectedly vanishes", KummerVariant::Printed.label()),
        },
    )
    .witness(json!({
        "entry": KummerVariant::Printed.label(),
        "first_nonzero_degree": printed.first_nonzero(),
        "lowest_terms": lowest_text(&printed),
    }));
    Ok(vec![main, variant])
}

fn pde(cfg: &RunConfig, level: SigmaLevel) -> Result<Vec<Check>> {
    let s = build_sigma(level, cfg.lambda.clone(), cfg.max_order);
    let model = SigmaChart::new(&s.as_model()).pde_residuals()?;
    let truncated = SigmaChart::new(&s).pde_residuals()?;
    let want = level.degree() as i64;
    Ok((0..5)
        .map(|i| residual_check(format!("pde.level{level}.eq{}", i + 1), &model[i], &truncated[i], want))
        .collect())
}

fn kernel(cfg: &RunConfig, level: SigmaLevel) -> Result<Vec<Check>> {
    let s = build_sigma(level, cfg.lambda.clone(), cfg.max_order);
    let model = SigmaChart::new(&s.as_model()).kernel_residual()?;
    let truncated = SigmaChart::new(&s).kernel_residual()?;
    let d = level.degree() as i64;
    Ok((0..4)
        .map(|i| {
            let want = if i == 3 { d + 2 } else { d };
            residual_check(format!("kernel.level{level}.row{}", i + 1), &model[i], &truncated[i], want)
        })
        .collect())
}

fn zero_lambda_chart() -> SigmaChart {
    SigmaChart::new(&build_sigma(SigmaLevel::Three, LambdaMode::zero(), 16))
}

fn pde_anchor() -> Result<Vec<Check>> {
    let r = zero_lambda_chart().pde_residuals()?;
    let ok = r.iter().all(SeriesCheck::is_exactly_zero);
    Ok(vec![Check::pass_if("pde.zero-lambda.level3", ok, if ok { "exactly zero" } else { "nonzero residual" })])
}

fn kernel_anchor() -> Result<Vec<Check>> {
    let r = zero_lambda_chart().kernel_residual()?;
    let ok = r.iter().all(SeriesCheck::is_exactly_zero);
    Ok(vec![Check::pass_if("kernel.zero-lambda.level3", ok, if ok { "exactly zero" } else { "nonzero residual" })])
}

/// The λ-free projection: the symbolic run itself, or a λ = 0 run when λ
/// is specialized.
fn projection(cfg: &RunConfig) -> (LambdaMode, &'static str) {
    match cfg.lambda {
        LambdaMode::Symbolic => (LambdaMode::Symbolic, "lambda-free part of the symbolic run"),
        LambdaMode::Specialized(_) => (LambdaMode::zero(), "lambda = 0 run"),
    }
}

fn display_check(name: &str, got: &TruncatedSeries, expected: &Poly, bound: Option<u32>) -> Check {
    let k = got.validated_order();
    let top = expected.max_degree().unwrap_or(0) as i64;
    let upto = bound.map_or(k, |b| k.min(b as i64)).max(0) as u32;
    let lf = got.lambda_free_part().truncate(upto);
    let want = expected.truncate(upto);
    let ok = lf == want;
    let status = match (ok, k >= top) {
        (false, _) => Status::Fail,
        (true, true) => Status::Pass,
        (true, false) => Status::Qualified,
    };
    let summary = if ok {
        format!("matches display through degree {upto}")
    } else {
        format!("differs from display: {}", (&lf - &want).to_text())
    };
    Check::new(name, status, summary)
        .order(k)
        .witness(json!({ "expected": want.to_text(), "lambda_free_part": lf.to_text() }))
}

fn metric_report(cfg: &RunConfig) -> Result<Vec<Check>> {
    let (mode, how) = projection(cfg);
    let s = build_sigma(cfg.level, mode, cfg.max_order);
    let chart = SigmaChart::new(&s);
    let ctx = s.ctx().clone();
    let g = chart.metric_numerators()?;
    let mut out = Vec::new();
    for (name, got, terms) in [
        ("metric.g11", &g.g11, reference::G11),
        ("metric.g12", &g.g12, reference::G12),
        ("metric.g22", &g.g22, reference::G22),
    ] {
        out.push(display_check(name, got, &reference::poly(&ctx, terms), None));
    }
    let inv = chart.metric_det_inverse()?;
    out.push(display_check(
        "metric.det",
        &inv.det_hat,
        &reference::poly(&ctx, reference::DET),
        Some(reference::DET_THROUGH),
    ));
    for c in out.iter_mut() {
        if let Value::Object(m) = &mut c.witness {
            m.insert("projection".into(), json!(how));
        }
    }

    let own = if matches!(cfg.lambda, LambdaMode::Symbolic) {
        inv
    } else {
        SigmaChart::new(&build_sigma(cfg.level, cfg.lambda.clone(), cfg.max_order)).metric_det_inverse()?
    };
    let p = metric_times_inverse(&own)?;
    let one = Poly::constant(own.det_hat.ctx(), int(1));
    let zero = Poly::zero(own.det_hat.ctx());
    let mut bad = Vec::new();
    let mut k = i64::MAX;
    for (i, row) in p.iter().enumerate() {
        for (j, e) in row.iter().enumerate() {
            k = k.min(e.validated_order());
            if e.body() != if i == j { &one } else { &zero } {
                bad.push(format!("({},{})", i + 1, j + 1));
            }
        }
    }
    out.push(
        Check::pass_if(
            "metric.inverse",
            bad.is_empty(),
            if bad.is_empty() { format!("g g^-1 = I through order {k}") } else { format!("entries {} differ", bad.join(" ")) },
        )
        .order(k),
    );
    Ok(out)
}

fn ricci_leading(cfg: &RunConfig) -> Result<Vec<Check>> {
    let (mode, how) = projection(cfg);
    let ctx = Context::sigma();
    let levels = suite_levels(cfg);
    let runs = levels
        .par_iter()
        .map(|&l| SigmaChart::new(&build_sigma(l, mode.clone(), cfg.max_order)).ricci_hat())
        .collect::<Result<Vec<_>>>()?;
    let mut out = Vec::new();
    let mut fingerprints = Vec::new();
    for (level, r) in levels.iter().zip(runs.iter()) {
        let lows = r.lambda_free_lowest();
        for ((label, deg, terms), (got, series)) in reference::RICCI.iter().zip(lows.iter().zip([&r.r11, &r.r12, &r.r22])) {
            let want = reference::poly(&ctx, terms);
            let (status, summary) = match got {
                LowestTerms::Found { degree, part } if degree == deg && *part == want => {
                    (Status::Pass, format!("{} at degree {deg}", part.to_text()))
                }
                LowestTerms::ZeroThrough(k) if *k < *deg as i64 => {
                    (Status::Qualified, format!("zero through order {k}; raise --max-order to reach degree {deg}"))
                }
                other => (Status::Fail, format!("lowest terms {}", describe_lowest(other).1)),
            };
            let (found_degree, text) = describe_lowest(got);
            out.push(Check::new(format!("ricci.level{level}.{label}"), status, summary).order(series.validated_order()).witness(json!({
                "expected": want.to_text(),
                "expected_degree": deg,
                "lowest_degree": found_degree,
                "lowest_terms": text,
                "projection": how,
            })));
        }
        let sym = r.r12.body() == r.r21.body();
        out.push(Check::pass_if(format!("ricci.level{level}.symmetric"), sym, if sym { "R12 = R21" } else { "R12 != R21" }));
        fingerprints.push(lows);
    }
    let same = fingerprints.windows(2).all(|w| w[0] == w[1]);
    let names = levels.iter().map(|l| l.to_string()).collect::<Vec<_>>().join(", ");
    out.push(Check::pass_if(
        "ricci.level-invariance",
        same && !levels.is_empty(),
        if same { format!("identical lowest terms at levels {names}") } else { format!("lowest terms differ across levels {names}") },
    ));
    Ok(out)
}

fn chart_b_points(cfg: &RunConfig) -> Vec<ChartBPoint> {
    let lambda = match &cfg.lambda {
        LambdaMode::Symbolic => None,
        LambdaMode::Specialized(v) => Some(v),
    };
    let mut pts = witness_points();
    pts.extend(random_points(cfg.seed, cfg.points, lambda));
    pts
}

fn lambda_text(p: &ChartBPoint) -> String {
    p.lambda.iter().map(to_text).collect::<Vec<_>>().join(",")
}

fn zero_witness(sign2: i8) -> ChartBPoint {
    ChartBPoint::new(int(1), int(4), std::array::from_fn(|_| int(0)), 1, sign2)
}

/// Positive roots `(√f(1), √f(4)) = (2, 64)` at the λ = 0 witness.
fn at_zero_witness(q: &QuadExt) -> Result<Rational> {
    q.evaluate_at(&int(2), &int(64))
}

fn witness_text(q: &QuadExt) -> String {
    at_zero_witness(q).map(|r| to_text(&r)).unwrap_or_else(|e| e.to_string())
}

fn nonzero_ricci(r: &[[QuadExt; 2]; 2]) -> bool {
    r.iter().flatten().all(|x| !JetScalar::is_zero(x))
}

fn inversion(cfg: &RunConfig) -> Result<Vec<Check>> {
    let pts = chart_b_points(cfg);
    let mut out = Vec::new();

    let failures = pts
        .par_iter()
        .flat_map(|p| p.sheets().to_vec())
        .map(|s| quartic_check(&s, KummerVariant::Kernel).map(|q| (!JetScalar::is_zero(&q)).then(|| s.to_string())))
        .collect::<Result<Vec<_>>>()?
        .into_iter()
        .flatten()
        .collect::<Vec<_>>();
    out.push(
        Check::pass_if(
            "inversion.quartic",
            failures.is_empty(),
            format!("{} of {} sheets vanish exactly", 4 * pts.len() - failures.len(), 4 * pts.len()),
        )
        .witness(json!({ "entry": KummerVariant::Kernel.label(), "nonzero_at": failures, "points": pts.len() })),
    );

    let mut zs = Vec::new();
    for s in zero_witness(1).sheets() {
        zs.push((s.to_string(), at_zero_witness(xyz_jets(&s)?[2].base())?));
    }
    let has = |v: Rational| zs.iter().any(|(_, z)| *z == v);
    out.push(
        Check::pass_if("inversion.witness-z", has(ratio(16, 9)) && has(int(16)), "Z takes the values 16/9 and 16 at x1=1, x2=4")
            .witness(json!(zs.iter().map(|(p, z)| json!({ "point": p, "Z": to_text(z) })).collect::<Vec<_>>())),
    );

    let mut kernel_vals = Vec::new();
    let mut printed_vals = Vec::new();
    for s2 in [1, -1] {
        let p = zero_witness(s2);
        kernel_vals.push(quartic_check(&p, KummerVariant::Kernel)?);
        printed_vals.push(quartic_check(&p, KummerVariant::Printed)?);
    }
    let kernel_ok = kernel_vals.iter().all(JetScalar::is_zero);
    let printed_fails = printed_vals.iter().all(|v| !JetScalar::is_zero(v));
    out.push(
        Check::pass_if(
            "inversion.variant-printed",
            kernel_ok && printed_fails,
            format!(
                "{} entry {}; {} entry {}",
                KummerVariant::Kernel.label(),
                if kernel_ok { "vanishes" } else { "does not vanish" },
                KummerVariant::Printed.label(),
                if printed_fails { "does not vanish" } else { "vanishes" },
            ),
        )
        .witness(json!({
            "kernel_values": kernel_vals.iter().map(witness_text).collect::<Vec<_>>(),
            "printed_values": printed_vals.iter().map(witness_text).collect::<Vec<_>>(),
        })),
    );

    out.push(dz_agreement(&pts)?);

    let ricci = pts.par_iter().map(ricci_point).collect::<Result<Vec<_>>>()?;
    let count = ricci.iter().filter(|r| nonzero_ricci(r)).count();
    let need = MIN_NONZERO_RICCI.min(pts.len());
    out.push(
        Check::pass_if("inversion.ricci-nonzero", count >= need, format!("Ricci nonzero at {count} of {} points", pts.len()))
            .witness(json!({ "nonzero_points": count, "required": need })),
    );

    out.push(float_crosscheck(&pts, &ricci)?);
    Ok(out)
}

fn rel(a: f64, b: f64) -> f64 {
    (a - b).abs() / b.abs().max(1.0)
}

fn float_crosscheck(pts: &[ChartBPoint], ricci: &[[[QuadExt; 2]; 2]]) -> Result<Check> {
    let mut worst = 0.0f64;
    let mut compared = 0;
    for (p, r) in pts.iter().zip(ricci) {
        let (Some(f), Some(dd)) = (float_point(p, FloatKind::Binary64)?, float_point(p, FloatKind::DoubleDouble)?) else {
            continue;
        };
        let exact = |q: &QuadExt| q.to_f64().unwrap_or(f64::NAN);
        let z = exact(xyz_jets(p)?[2].base());
        let (d1, d2) = dz_closed_form(p)?;
        worst = worst.max(rel(f.z, z)).max(rel(f.dz[0], exact(&d1))).max(rel(f.dz[1], exact(&d2)));
        let g = metric_point(p)?;
        for (x, e) in f.g.iter().zip([&g.g11, &g.g12, &g.g22]) {
            worst = worst.max(rel(*x, exact(e.base())));
        }
        for m in 0..2 {
            for n in 0..2 {
                let e = exact(&r[m][n]);
                worst = worst.max((dd.ricci[m][n] - e).abs() / e.abs());
            }
        }
        compared += 1;
    }
    let ok = compared > 0 && worst <= FLOAT_TOL;
    Ok(Check::pass_if(
        "inversion.float-crosscheck",
        ok,
        format!("max relative deviation {worst:.3e} over {compared} real points"),
    )
    .tolerance(FLOAT_TOL)
    .witness(json!({ "compared_points": compared, "max_relative_deviation": worst })))
}

fn dz_agreement(pts: &[ChartBPoint]) -> Result<Check> {
    let mut bad = Vec::new();
    for p in pts {
        let z = &xyz_jets(p)?[2];
        let (d1, d2) = dz_closed_form(p)?;
        if z.coeff(1, 0) != &d1 || z.coeff(0, 1) != &d2 {
            bad.push(p.to_string());
        }
    }
    Ok(Check::pass_if(
        "inversion.dz-jets",
        bad.is_empty(),
        format!("closed-form dZ equals jet coefficients at {} of {} points", pts.len() - bad.len(), pts.len()),
    )
    .witness(json!({ "mismatch_at": bad })))
}

fn ricci_points(cfg: &RunConfig) -> Result<Vec<Check>> {
    let pts = chart_b_points(cfg);
    let rows = pts
        .par_iter()
        .map(|p| {
            let r = ricci_point(p)?;
            let flipped = ricci_point(&p.with_signs(-p.sign1, -p.sign2))?;
            Ok((p, r, flipped))
        })
        .collect::<Result<Vec<_>>>()?;
    let values = rows
        .iter()
        .map(|(p, r, _)| {
            json!({
                "R11": r[0][0].to_text(),
                "R12": r[0][1].to_text(),
                "R22": r[1][1].to_text(),
                "lambda": lambda_text(p),
                "point": p.to_string(),
            })
        })
        .collect::<Vec<_>>();
    let count = rows.iter().filter(|(_, r, _)| nonzero_ricci(r)).count();
    let need = MIN_NONZERO_RICCI.min(pts.len());
    let symmetric = rows.iter().all(|(_, r, _)| r[0][1] == r[1][0]);
    let flip = rows.iter().all(|(_, r, f)| r == f);
    Ok(vec![
        Check::pass_if("ricci-point.nonzero", count >= need, format!("all components nonzero at {count} of {} points", pts.len()))
            .witness(json!({ "points": values, "required": need })),
        Check::pass_if("ricci-point.symmetric", symmetric, "R12 = R21 at every point"),
        Check::pass_if("ricci-point.sheet-flip", flip, "flipping both signs leaves Ricci unchanged"),
    ])
}

fn dz_check(cfg: &RunConfig) -> Result<Vec<Check>> {
    let pts = chart_b_points(cfg);
    let mut agreement = dz_agreement(&pts)?;
    agreement.name = "dz.jets".into();
    let (d1, d2) = dz_closed_form(&zero_witness(1))?;
    let v1 = at_zero_witness(&d1)?;
    let v2 = at_zero_witness(&d2)?;
    let values = pts
        .iter()
        .map(|p| {
            dz_closed_form(p).map(|(a, b)| json!({ "dZ_du": a.to_text(), "dZ_dv": b.to_text(), "lambda": lambda_text(p), "point": p.to_string() }))
        })
        .collect::<Result<Vec<_>>>()?;
    agreement.witness = json!({ "mismatch_at": agreement.witness["mismatch_at"].clone(), "points": values });
    Ok(vec![
        agreement,
        Check::pass_if("dz.witness", v1 == ratio(80, 27), format!("dZ/du = {} at x1=1, x2=4", to_text(&v1)))
            .witness(json!({ "dZ_du": to_text(&v1), "dZ_dv": to_text(&v2) })),
    ])
}

fn bound_check(name: &str, value: f64, tol: f64, what: &str) -> Check {
    Check::pass_if(name, value <= tol, format!("{what} {value:.3e}"))
        .tolerance(tol)
        .witness(json!({ "max_deviation": value }))
}

fn sphere() -> Result<Vec<Check>> {
    let s = sphere_einstein_check(&sphere_grid(GRID, POLE_MARGIN), POLE_MARGIN)?;
    let guarded = sphere_sample(POLE_MARGIN / 2.0, 0.0, POLE_MARGIN).is_err();
    Ok(vec![
        bound_check("sphere.einstein", s.max_einstein_deviation, SPHERE_TOL, "max |R_ij - g_ij|"),
        bound_check("sphere.scalar", s.max_scalar_deviation, SPHERE_TOL, "max |R - 2|"),
        Check::pass_if("sphere.pole-guard", guarded, "samples inside the pole margin are rejected"),
    ])
}

fn kahler() -> Result<Vec<Check>> {
    let s = kahler_conformal_check(&plane_grid(GRID))?;
    let grid = sphere_grid(GRID, POLE_MARGIN);
    let cross = grid
        .par_iter()
        .map(|&[t, f]| {
            let [u, v] = sphere_to_plane(t, f);
            Ok((kahler_sample(u, v)?.scalar - sphere_sample(t, f, POLE_MARGIN)?.scalar).abs())
        })
        .collect::<Result<Vec<f64>>>()?
        .into_iter()
        .fold(0.0, f64::max);
    Ok(vec![
        bound_check("kahler.einstein", s.max_einstein_deviation, KAHLER_TOL, "max |R_ij - g_ij|"),
        bound_check("kahler.scalar", s.max_scalar_deviation, KAHLER_TOL, "max |R - 2|"),
        bound_check("kahler.conformal", s.max_metric_deviation, KAHLER_TOL, "max |g_ij - f delta_ij|"),
        bound_check("kahler.cross-chart", cross, KAHLER_TOL, "max scalar difference to the sphere chart"),
    ])
}

fn chern(cfg: &RunConfig) -> Result<Vec<Check>> {
    let c = chern_number(cfg.tol)?;
    let err = (c.value - 2.0).abs();
    Ok(vec![Check::pass_if("chern.value", err <= cfg.tol, format!("c1 = {:.12}", c.value))
        .tolerance(cfg.tol)
        .witness(json!({
            "history": c.history,
            "last_change": c.last_change,
            "panels": c.panels,
            "value": c.value,
        }))])
}

fn goepel() -> Result<Vec<Check>> {
    let input = GoepelInput { squares: [1, 1, 1, -3].map(int) };
    let k = goepel_constants(&input)?;
    let d = match &k.d {
        GoepelD::Exact(d) => Some(d.clone()),
        GoepelD::Unavailable { .. } => None,
    };
    let consts_ok = k.a == int(2) && k.b == int(2) && k.c == int(2) && d == Some(int(0));
    let ctx = tetrad_context();
    let identity = d.as_ref().is_some_and(|d| goepel_quartic(&ctx, &k.a, &k.b, &k.c, d) == double_quadric(&ctx));
    let degenerate = goepel_constants(&GoepelInput { squares: [1, 1, 1, 1].map(int) }).is_err();
    let show = |r: &Rational| to_text(r);
    Ok(vec![
        Check::pass_if("goepel.constants", consts_ok, "(1,1,1,-3) gives A=B=C=2, D=0").witness(json!({
            "A": show(&k.a),
            "B": show(&k.b),
            "C": show(&k.c),
            "D": d.as_ref().map(show),
            "squares": input.squares.iter().map(show).collect::<Vec<_>>(),
        })),
        Check::pass_if("goepel.double-quadric", identity, "quartic equals (X^2+Y^2+Z^2+T^2)^2"),
        Check::pass_if("goepel.degenerate", degenerate, "equal squares are rejected as a degenerate tetrad"),
    ])
}

fn fresnel() -> Result<Vec<Check>> {
    let one = int(1);
    let p = fresnel_reduce(&one, &one, &one);
    let ok = p == double_sphere();
    Ok(vec![Check::pass_if("fresnel.double-sphere", ok, "a=b=c=1 gives (x^2+y^2+z^2-1)^2")
        .witness(json!({ "quartic": p.to_text() }))])
}
