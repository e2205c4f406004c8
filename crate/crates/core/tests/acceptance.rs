//! Acceptance suite. Prints one PASS/FAIL line per criterion and exits nonzero
//! if any fails.

use std::f64::consts::PI;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use hardy_core::hilbert::DEFAULT_GS_TOL;
use hardy_core::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const SEED: u64 = 0x5eed_2024;

struct Outcome {
    ok: bool,
    detail: String,
}

fn outcome(ok: bool, detail: impl Into<String>) -> Outcome {
    Outcome { ok, detail: detail.into() }
}

fn run(name: &str, limit: Option<Duration>, f: impl FnOnce() -> Result<Outcome>) -> bool {
    let start = Instant::now();
    let result = f();
    let elapsed = start.elapsed();
    let (mut ok, mut detail) = match result {
        Ok(o) => (o.ok, o.detail),
        Err(e) => (false, format!("error: {e}")),
    };
    if let Some(limit) = limit {
        detail.push_str(&format!(" limit={:.0}s", limit.as_secs_f64()));
        if elapsed > limit {
            ok = false;
            detail.push_str(" (over time)");
        }
    }
    println!("{} {name}: {detail} [{:.2}s]", if ok { "PASS" } else { "FAIL" }, elapsed.as_secs_f64());
    ok
}

fn steps(a: f64, b: f64, step: f64) -> impl Iterator<Item = f64> {
    let n = ((b - a) / step).round() as usize;
    (0..=n).map(move |k| a + k as f64 * step)
}

fn c(re: f64, im: f64) -> ComplexValue {
    ComplexValue::new(re, im)
}

fn criterion_1(cfg: &EvalConfig) -> Result<Outcome> {
    let mut max = 0.0f64;
    for t in steps(10.0, 200.0, 0.1) {
        let th = theta(t, ThetaMode::Exact)?;
        let v = zeta_em(c(0.5, t), cfg)? * ComplexValue::from_polar(1.0, th);
        max = max.max(v.im.abs());
    }
    Ok(outcome(max < 1e-8, format!("max|Im(zeta e^(i theta))|={max:.3e} tol=1e-8")))
}

fn criterion_2() -> Result<Outcome> {
    let mut max = 0.0f64;
    for t in steps(20.0, 1000.0, 1.0) {
        max = max.max((theta(t, ThetaMode::asymptotic())? - theta(t, ThetaMode::Exact)?).abs());
    }
    Ok(outcome(max < 1e-9, format!("max|theta_asym-theta_exact|={max:.3e} tol=1e-9")))
}

fn criterion_3(cfg: &EvalConfig) -> Result<Outcome> {
    let half = (chi(c(0.5, 0.0))? - 1.0).norm();
    let mut modulus = 0.0f64;
    for t in [1.0, 5.0, 10.0, 50.0, 100.0] {
        modulus = modulus.max((chi(c(0.5, t))?.norm() - 1.0).abs());
    }
    let mut fe = 0.0f64;
    for i in 0..20 {
        for j in 0..20 {
            let s = c(-1.0 + 3.0 * i as f64 / 19.0, 5.0 + 55.0 * j as f64 / 19.0);
            fe = fe.max((zeta_em(s, cfg)? - chi(s)? * zeta_em(1.0 - s, cfg)?).norm());
        }
    }
    Ok(outcome(
        half < 1e-12 && modulus < 1e-10 && fe < 1e-8,
        format!("|chi(1/2)-1|={half:.3e} max||chi|-1|={modulus:.3e} max FE residual={fe:.3e}"),
    ))
}

fn criterion_4(cfg: &EvalConfig) -> Result<Outcome> {
    let z2 = (zeta_em(c(2.0, 0.0), cfg)? - PI * PI / 6.0).norm();
    let z0 = (zeta_em(c(0.0, 0.0), cfg)? + 0.5).norm();
    let oracle = zeta_em(c(0.5, 0.0), &EvalConfig { em_terms: Some(5000), em_bernoulli_order: 15, ..*cfg })?;
    let half = zeta_em(c(0.5, 0.0), cfg)?;
    let d_oracle = (half - oracle).norm();
    let d_literal = (half.re - -1.4603545088).abs();
    Ok(outcome(
        z2 < 1e-12 && z0 < 1e-12 && d_oracle < 1e-9 && d_literal < 1e-9,
        format!("zeta(2) err={z2:.2e} zeta(0) err={z0:.2e} zeta(1/2) vs oracle={d_oracle:.2e} vs -1.4603545088={d_literal:.2e}"),
    ))
}

fn criterion_5(cfg: &EvalConfig) -> Result<Outcome> {
    let mut worst = 0.0f64;
    let mut worst_t = 0.0;
    let mut max_abs = 0.0f64;
    for t in steps(30.0, 300.0, 0.5) {
        let em = (zeta_em(c(0.5, t), cfg)? * ComplexValue::from_polar(1.0, theta(t, ThetaMode::Exact)?)).re;
        let d = (hardy_z_rs(t, cfg)? - em).abs();
        max_abs = max_abs.max(d);
        let ratio = d / (3.0 * t.powf(-0.75));
        if ratio > worst {
            worst = ratio;
            worst_t = t;
        }
    }
    Ok(outcome(
        worst <= 1.0,
        format!("max|Z_rs-Z_em|={max_abs:.3e} worst ratio to 3t^-3/4={worst:.3e} at t={worst_t}"),
    ))
}

const FIRST_ZERO: f64 = 14.134_725_141_734_694;

fn criterion_6(cfg: &EvalConfig) -> Result<Outcome> {
    let range = Interval::new(2.0 * PI, 100.0)?;
    let zeros = critical_line_zeros(range, 0.01, 1e-13, cfg)?;
    let halved = critical_line_zeros(range, 0.005, 1e-13, cfg)?;
    let em = SampledFunction::generalized_hardy(0.5, *cfg);
    let em_path = find_zeros(&em, &em, range, 0.01, 1e-13)?;
    let expected = theta(100.0, ThetaMode::Exact)? / PI + 1.0;
    let first = zeros[0].location;
    let d_step = (first - halved[0].location).abs();
    let d_path = (first - em_path[0].location).abs();
    let d_true = (first - FIRST_ZERO).abs();
    let ok = (zeros.len() as f64 - expected).abs() <= 1.0
        && d_true < 1e-9
        && d_step < 1e-9
        && d_path < 1e-9
        && em_path.len() == zeros.len();
    Ok(outcome(
        ok,
        format!(
            "count={} expected={expected:.4} first={first:.12} |err|={d_true:.2e} step-halving={d_step:.2e} path={d_path:.2e}",
            zeros.len()
        ),
    ))
}

fn criterion_7(cfg: &EvalConfig) -> Result<Outcome> {
    let interval = Interval::new(10.0, 50.0)?;
    let rule = gauss_legendre_rule(256, interval)?;
    let fs: Vec<SampledFunction> =
        [0.5, 0.3, 0.4].iter().map(|&s| SampledFunction::generalized_hardy(s, *cfg)).collect();
    let gs = gram_schmidt(&fs, &rule, DEFAULT_GS_TOL)?;
    let off = gram_matrix(&gs, &rule)?.max_normalized_off_diagonal();
    // Pointwise comparison away from the quadrature nodes too.
    let mut identical = true;
    for t in steps(10.0, 50.0, 0.01) {
        identical &= fs[0].eval(t).to_bits() == gs[0].eval(t).to_bits();
    }
    Ok(outcome(
        off < 1e-10 && identical,
        format!("max normalized off-diagonal={off:.3e} first element bit-identical={identical}"),
    ))
}

fn criterion_8(cfg: &EvalConfig) -> Result<Outcome> {
    let sin = SampledFunction::new("sin", f64::sin);
    let s = zero_convergence_study(&sin, Interval::new(1.0, 10.0)?, &[25])?;
    let d_sin = s[0].max_deviation.unwrap_or(f64::INFINITY);
    let z = SampledFunction::generalized_hardy(0.5, *cfg);
    let h = zero_convergence_study(&z, Interval::new(10.0, 30.0)?, &[20, 40])?;
    let d20 = h[0].max_deviation.unwrap_or(f64::INFINITY);
    let d40 = h[1].max_deviation.unwrap_or(f64::INFINITY);
    Ok(outcome(
        d_sin < 1e-8 && d40 < 1e-6 && d40 < d20,
        format!("sin deg25={d_sin:.2e} Z deg20={d20:.2e} deg40={d40:.2e}"),
    ))
}

fn criterion_9(cfg: &EvalConfig) -> Result<Outcome> {
    let pairs = lehmer_scan(Interval::new(7000.0, 7010.0)?, 0.2, 0.01, cfg)?;
    let Some(p) = pairs.first() else {
        return Ok(outcome(false, "no pair with normalized gap < 0.2"));
    };
    let z_lo = generalized_hardy(0.5, p.t_low, cfg)?.z.abs();
    let z_hi = generalized_hardy(0.5, p.t_high, cfg)?.z.abs();
    Ok(outcome(
        p.normalized_gap < 0.2 && z_lo < 1e-6 && z_hi < 1e-6,
        format!(
            "pair ({:.9}, {:.9}) gap={:.4} |Z_em|=({z_lo:.1e}, {z_hi:.1e})",
            p.t_low, p.t_high, p.normalized_gap
        ),
    ))
}

fn criterion_10(cfg: &EvalConfig) -> Result<Outcome> {
    let rect = RectBox::new(0.51, 1.0, 80.0, 90.0)?;
    let f = |s| davenport_heilbronn(s, cfg);
    let n1 = argument_principle_count(f, rect, 32)?;
    let n2 = argument_principle_count(f, rect, 64)?;
    Ok(outcome(n1 >= 1 && n1 == n2, format!("count={n1} doubled resolution={n2}")))
}

fn criterion_11() -> Result<Outcome> {
    let r = residue_identity_residual(c(-1.5, 0.0), 100_000)?;
    Ok(outcome(r < 1e-8, format!("residual at s=-1.5, n=1e5: {r:.3e} tol=1e-8")))
}

fn criterion_12() -> Result<Outcome> {
    let cfg = RunConfig::default();
    let a = run_report(&cfg)?.to_json();
    let b = run_report(&cfg)?.to_json();
    Ok(outcome(a == b, format!("{} bytes, identical={}", a.len(), a == b)))
}

// Property suites, all driven from one seeded generator.

fn prop_quadrature(rng: &mut ChaCha8Rng, cases: usize) -> Result<Outcome> {
    let mut worst = 0.0f64;
    for _ in 0..cases {
        let order = rng.random_range(1..=64usize);
        let a = rng.random_range(-5.0..5.0);
        let interval = Interval::new(a, a + rng.random_range(0.1..10.0))?;
        let degree = rng.random_range(0..2 * order);
        let coeffs: Vec<f64> = (0..=degree).map(|_| rng.random_range(-1.0..1.0)).collect();
        // integrate in the reference variable so the exact value is simple
        let rule = gauss_legendre_rule(order, interval)?;
        let p = |x: f64| coeffs.iter().rev().fold(0.0, |acc, c| acc * x + c);
        let got = rule.integrate(|t| p(interval.to_reference(t)));
        let exact: f64 = coeffs
            .iter()
            .enumerate()
            .filter(|(k, _)| k % 2 == 0)
            .map(|(k, c)| 2.0 * c / (k + 1) as f64)
            .sum::<f64>()
            * interval.length()
            / 2.0;
        let scale = coeffs.iter().map(|c| c.abs()).sum::<f64>() * interval.length();
        worst = worst.max((got - exact).abs() / scale);
    }
    Ok(outcome(worst < 1e-13, format!("{cases} cases, worst relative error={worst:.2e}")))
}

fn random_fn(rng: &mut ChaCha8Rng) -> SampledFunction {
    let (w, p, sigma) = (rng.random_range(0.1..3.0), rng.random_range(0.0..PI), rng.random_range(0.2..0.8));
    match rng.random_range(0..3) {
        0 => SampledFunction::new("trig", move |t| (w * t + p).sin()),
        1 => SampledFunction::new("poly", move |t| (t - p) * (t - w) / 100.0),
        _ => SampledFunction::generalized_hardy(sigma, EvalConfig::default()),
    }
}

fn prop_bilinearity(rng: &mut ChaCha8Rng, cases: usize) -> Result<Outcome> {
    let rule = gauss_legendre_rule(96, Interval::new(10.0, 20.0)?)?;
    let mut worst = 0.0f64;
    for _ in 0..cases {
        let (f, g, h) = (random_fn(rng), random_fn(rng), random_fn(rng));
        let (a, b) = (rng.random_range(-3.0..3.0), rng.random_range(-3.0..3.0));
        let combo = SampledFunction::linear_combination("af+bg", &[(a, f.clone()), (b, g.clone())]);
        let lhs = inner_product(&combo, &h, &rule)?;
        let rhs = a * inner_product(&f, &h, &rule)? + b * inner_product(&g, &h, &rule)?;
        let sym = (inner_product(&f, &g, &rule)? - inner_product(&g, &f, &rule)?).abs();
        let scale = (a.abs() * norm(&f, &rule)? + b.abs() * norm(&g, &rule)?) * norm(&h, &rule)?;
        worst = worst.max((lhs - rhs).abs() / scale.max(1e-300)).max(sym / scale.max(1e-300));
    }
    Ok(outcome(worst < 1e-12, format!("{cases} cases, worst relative defect={worst:.2e}")))
}

fn prop_cauchy_schwarz(rng: &mut ChaCha8Rng, cases: usize) -> Result<Outcome> {
    let rule = gauss_legendre_rule(96, Interval::new(10.0, 20.0)?)?;
    let mut violations = 0;
    let mut max_ratio = 0.0f64;
    for _ in 0..cases {
        let (f, g) = (random_fn(rng), random_fn(rng));
        let ip = inner_product(&f, &g, &rule)?.abs();
        let bound = norm(&f, &rule)? * norm(&g, &rule)?;
        let ratio = ip / bound;
        max_ratio = max_ratio.max(ratio);
        if ratio > 1.0 + 1e-12 {
            violations += 1;
        }
    }
    Ok(outcome(violations == 0, format!("{cases} cases, max |<f,g>|/(|f||g|)={max_ratio:.15}")))
}

fn prop_schwarz_reflection(rng: &mut ChaCha8Rng, cases: usize) -> Result<Outcome> {
    let cfg = EvalConfig::default();
    let mut worst = 0.0f64;
    for _ in 0..cases {
        let s = c(rng.random_range(-2.0..3.0), rng.random_range(1.0..100.0));
        worst = worst.max((zeta_em(s.conj(), &cfg)? - zeta_em(s, &cfg)?.conj()).norm());
    }
    Ok(outcome(worst < 1e-12, format!("{cases} cases, worst |zeta(conj s)-conj zeta(s)|={worst:.2e}")))
}

fn prop_bessel(rng: &mut ChaCha8Rng, cases: usize) -> Result<Outcome> {
    let mut worst = f64::NEG_INFINITY;
    for _ in 0..cases {
        let f = random_fn(rng);
        let a = rng.random_range(10.0..30.0);
        let interval = Interval::new(a, a + rng.random_range(1.0..10.0))?;
        let degree = rng.random_range(1..=30);
        let proj = project(&f, interval, degree)?;
        let energy: f64 = proj
            .poly
            .coeffs
            .iter()
            .enumerate()
            .map(|(n, c)| c * c * interval.length() / (2 * n + 1) as f64)
            .sum();
        let norm_sq = norm(&f, &gauss_legendre_rule(256, interval)?)?.powi(2);
        worst = worst.max((energy - norm_sq) / norm_sq);
    }
    Ok(outcome(worst <= 1e-12, format!("{cases} cases, max (sum c_n^2 |P_n|^2 - |f|^2)/|f|^2={worst:.2e}")))
}

fn prop_colleague_roots(rng: &mut ChaCha8Rng, cases: usize) -> Result<Outcome> {
    let mut worst = 0.0f64;
    let mut miscounts = 0;
    let mut done = 0;
    while done < cases {
        let k = rng.random_range(1..=12);
        let mut roots: Vec<f64> = (0..k).map(|_| rng.random_range(-0.95..0.95)).collect();
        roots.sort_by(f64::total_cmp);
        if roots.windows(2).any(|w| w[1] - w[0] < 0.05) {
            continue;
        }
        done += 1;
        let rs = roots.clone();
        let f = SampledFunction::new("prod", move |x| rs.iter().map(|r| x - r).product());
        let proj = project(&f, Interval::new(-1.0, 1.0)?, k)?;
        let found = poly_real_zeros(&proj.poly)?.zeros;
        if found.len() != roots.len() {
            miscounts += 1;
            continue;
        }
        for (r, z) in roots.iter().zip(&found) {
            worst = worst.max((r - z).abs());
        }
    }
    Ok(outcome(
        miscounts == 0 && worst < 1e-8,
        format!("{cases} cases, miscounts={miscounts} worst root error={worst:.2e}"),
    ))
}

fn main() -> ExitCode {
    let cfg = EvalConfig::default();
    let secs = Duration::from_secs;
    let mut results = vec![
        run("C1 sin-theta identity", Some(secs(30)), || criterion_1(&cfg)),
        run("C2 theta cross-validation", None, criterion_2),
        run("C3 chi factor and functional equation", None, || criterion_3(&cfg)),
        run("C4 known values", None, || criterion_4(&cfg)),
        run("C5 Riemann-Siegel vs Euler-Maclaurin", Some(secs(60)), || criterion_5(&cfg)),
        run("C6 zero census", None, || criterion_6(&cfg)),
        run("C7 Gram-Schmidt", None, || criterion_7(&cfg)),
        run("C8 zero convergence", None, || criterion_8(&cfg)),
        run("C9 Lehmer pair", None, || criterion_9(&cfg)),
        run("C10 Davenport-Heilbronn off-line zero", Some(secs(60)), || criterion_10(&cfg)),
        run("C11 residue identity", None, criterion_11),
        run("C12 report determinism", None, criterion_12),
    ];

    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    results.push(run("P1 quadrature exactness", None, || prop_quadrature(&mut rng, 250)));
    results.push(run("P2 inner-product bilinearity", None, || prop_bilinearity(&mut rng, 200)));
    results.push(run("P3 Cauchy-Schwarz", None, || prop_cauchy_schwarz(&mut rng, 200)));
    results.push(run("P4 Schwarz reflection", None, || prop_schwarz_reflection(&mut rng, 200)));
    results.push(run("P5 Bessel inequality", None, || prop_bessel(&mut rng, 150)));
    results.push(run("P6 colleague root recovery", None, || prop_colleague_roots(&mut rng, 150)));

    let failed = results.iter().filter(|ok| !**ok).count();
    println!("\n{} criteria, {failed} failed (property cases: 1150, seed {SEED:#x})", results.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
