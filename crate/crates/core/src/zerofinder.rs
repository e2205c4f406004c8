//! Real zeros of interval functions, Lehmer pairs, and argument-principle
//! zero counts for complex functions on rectangles.

use std::f64::consts::PI;

use num_complex::Complex64;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::hilbert::{Interval, SampledFunction};
use crate::specialfn::{theta_derivative_unchecked, theta_exact, ComplexValue};
use crate::zetaeval::EvalConfig;

/// Highest t accepted by the critical-line scanners.
pub const MAX_SCAN_HEIGHT: f64 = 1e4;
pub const DEFAULT_STEP: f64 = 0.01;
pub const DEFAULT_ZERO_TOL: f64 = 1e-12;

/// A refined real zero.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ZeroRecord {
    pub location: f64,
    pub bracket: (f64, f64),
    /// Central difference f'(location).
    pub derivative: f64,
    pub simple: bool,
    /// |f(location)|.
    pub residual: f64,
}

/// Grid brackets [t_i, t_{i+1}] across which f changes sign strictly. A grid
/// value that is exactly zero becomes the bracket t_i -+ step/10.
pub fn scan_sign_changes(f: &SampledFunction, interval: Interval, step: f64) -> Result<Vec<(f64, f64)>> {
    let (grid, values) = sample_grid(f, interval, step)?;
    Ok(brackets_from_samples(&grid, &values, step))
}

fn sample_grid(f: &SampledFunction, interval: Interval, step: f64) -> Result<(Vec<f64>, Vec<f64>)> {
    if !(step > 0.0 && step < interval.length()) {
        return Err(Error::Domain(format!(
            "scan step {step} must be positive and shorter than {interval}"
        )));
    }
    let n = (interval.length() / step).ceil() as usize;
    let mut grid: Vec<f64> = (0..n).map(|i| interval.a + i as f64 * step).collect();
    grid.push(interval.b);
    let values = f.sample(&grid)?;
    Ok((grid, values))
}

fn brackets_from_samples(grid: &[f64], values: &[f64], step: f64) -> Vec<(f64, f64)> {
    let mut out = Vec::new();
    for i in 0..grid.len() {
        if values[i] == 0.0 {
            out.push((grid[i] - step / 10.0, grid[i] + step / 10.0));
            continue;
        }
        if i + 1 < grid.len() && values[i + 1] != 0.0 && values[i] * values[i + 1] < 0.0 {
            out.push((grid[i], grid[i + 1]));
        }
    }
    out
}

/// Brent's method on a sign-changing bracket, refined until the bracket is
/// narrower than `tol`.
pub fn refine_zero(f: &SampledFunction, bracket: (f64, f64), tol: f64) -> Result<ZeroRecord> {
    let (lo, hi) = if bracket.0 <= bracket.1 { bracket } else { (bracket.1, bracket.0) };
    let f_lo = f.try_eval(lo)?;
    let f_hi = f.try_eval(hi)?;
    let (location, final_bracket) = if f_lo == 0.0 {
        (lo, (lo, lo))
    } else if f_hi == 0.0 {
        (hi, (hi, hi))
    } else if f_lo * f_hi > 0.0 {
        return Err(Error::LostBracket { a: lo, b: hi, fa: f_lo, fb: f_hi });
    } else {
        brent(f, lo, hi, f_lo, f_hi, tol)?
    };

    let h = tol.max(1e-6);
    let derivative = (f.try_eval(location + h)? - f.try_eval(location - h)?) / (2.0 * h);
    let local_scale = f_lo.abs().max(f_hi.abs()) / (hi - lo).max(f64::MIN_POSITIVE);
    Ok(ZeroRecord {
        location,
        bracket: final_bracket,
        derivative,
        simple: derivative.abs() > 1e-6 * local_scale,
        residual: f.try_eval(location)?.abs(),
    })
}

fn brent(f: &SampledFunction, lo: f64, hi: f64, f_lo: f64, f_hi: f64, tol: f64) -> Result<(f64, (f64, f64))> {
    let (mut a, mut b, mut c) = (lo, hi, hi);
    let (mut fa, mut fb, mut fc) = (f_lo, f_hi, f_hi);
    let (mut d, mut e) = (b - a, b - a);
    for _ in 0..200 {
        if (fb > 0.0 && fc > 0.0) || (fb < 0.0 && fc < 0.0) {
            c = a;
            fc = fa;
            d = b - a;
            e = d;
        }
        if fc.abs() < fb.abs() {
            a = b;
            b = c;
            c = a;
            fa = fb;
            fb = fc;
            fc = fa;
        }
        let tol1 = 2.0 * f64::EPSILON * b.abs() + 0.5 * tol;
        let xm = 0.5 * (c - b);
        if xm.abs() <= tol1 || fb == 0.0 {
            let br = if b < c { (b, c) } else { (c, b) };
            return Ok((b, br));
        }
        if e.abs() >= tol1 && fa.abs() > fb.abs() {
            let s = fb / fa;
            let (mut p, mut q);
            if a == c {
                p = 2.0 * xm * s;
                q = 1.0 - s;
            } else {
                let qq = fa / fc;
                let r = fb / fc;
                p = s * (2.0 * xm * qq * (qq - r) - (b - a) * (r - 1.0));
                q = (qq - 1.0) * (r - 1.0) * (s - 1.0);
            }
            if p > 0.0 {
                q = -q;
            }
            p = p.abs();
            let min1 = 3.0 * xm * q - (tol1 * q).abs();
            let min2 = (e * q).abs();
            if 2.0 * p < min1.min(min2) {
                e = d;
                d = p / q;
            } else {
                d = xm;
                e = d;
            }
        } else {
            d = xm;
            e = d;
        }
        a = b;
        fa = fb;
        b += if d.abs() > tol1 { d } else { tol1.copysign(xm) };
        fb = f.try_eval(b)?;
    }
    Err(Error::LostBracket { a, b, fa, fb })
}

/// theta(T)/pi + 1, the smooth part of the zero counting function.
pub fn zero_count_estimate(t: f64) -> Result<f64> {
    if !t.is_finite() || t <= 2.0 * PI {
        return Err(Error::Domain(format!("zero count estimate needs T > 2 pi, got {t}")));
    }
    Ok(theta_exact(t)? / PI + 1.0)
}

/// Zeros of a real function on an interval: sign scan on `scan`, Brent
/// refinement on `refine` (which may be a more accurate evaluator of the same
/// function). Local minima of |scan| without a sign change are rescanned at
/// step/10 so close pairs are not missed.
pub fn find_zeros(
    scan: &SampledFunction,
    refine: &SampledFunction,
    interval: Interval,
    step: f64,
    tol: f64,
) -> Result<Vec<ZeroRecord>> {
    let (grid, values) = sample_grid(scan, interval, step)?;
    let mut brackets = brackets_from_samples(&grid, &values, step);
    for i in 1..grid.len().saturating_sub(1) {
        let (l, m, r) = (values[i - 1], values[i], values[i + 1]);
        let same_sign = l * m > 0.0 && m * r > 0.0;
        if same_sign && m.abs() < l.abs() && m.abs() < r.abs() {
            let sub = Interval::new(grid[i - 1], grid[i + 1])?;
            brackets.extend(scan_sign_changes(scan, sub, step / 10.0)?);
        }
    }
    brackets.sort_by(|x, y| x.0.total_cmp(&y.0));
    brackets.dedup_by(|x, y| x.0 == y.0 && x.1 == y.1);

    let mut zeros: Vec<ZeroRecord> = brackets
        .par_iter()
        .map(|&br| refine_with_fallback(scan, refine, br, tol))
        .collect::<Result<Vec<_>>>()?;
    zeros.sort_by(|x, y| x.location.total_cmp(&y.location));
    zeros.dedup_by(|x, y| (x.location - y.location).abs() <= tol.max(1e-12) * 4.0);
    Ok(zeros)
}

fn refine_with_fallback(
    scan: &SampledFunction,
    refine: &SampledFunction,
    bracket: (f64, f64),
    tol: f64,
) -> Result<ZeroRecord> {
    match refine_zero(refine, bracket, tol) {
        Err(Error::LostBracket { .. }) => {
            // the accurate evaluator disagrees at an endpoint; widen by half a step
            let w = 0.5 * (bracket.1 - bracket.0);
            refine_zero(refine, (bracket.0 - w, bracket.1 + w), tol).or_else(|_| refine_zero(scan, bracket, tol))
        }
        other => other,
    }
}

/// Zeros of Hardy Z on the critical line: Riemann-Siegel scan, Euler-Maclaurin refinement.
pub fn critical_line_zeros(interval: Interval, step: f64, tol: f64, cfg: &EvalConfig) -> Result<Vec<ZeroRecord>> {
    check_scan_range(&interval)?;
    let scan = SampledFunction::hardy_rs(*cfg);
    let refine = SampledFunction::generalized_hardy(0.5, *cfg);
    find_zeros(&scan, &refine, interval, step, tol)
}

fn check_scan_range(interval: &Interval) -> Result<()> {
    if interval.a < 2.0 * PI || interval.b > MAX_SCAN_HEIGHT {
        return Err(Error::Domain(format!(
            "critical-line scans are validated on [2 pi, {MAX_SCAN_HEIGHT}], got {interval}"
        )));
    }
    Ok(())
}

/// theta'(t), with a finite difference of the exact theta below t = 10.
pub fn theta_slope(t: f64) -> f64 {
    if t > 10.0 {
        theta_derivative_unchecked(t)
    } else {
        let h = 1e-5;
        match (theta_exact(t + h), theta_exact(t - h)) {
            (Ok(a), Ok(b)) => (a - b) / (2.0 * h),
            _ => f64::NAN,
        }
    }
}

/// Consecutive zeros t_low < t_high whose normalized gap is small.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct LehmerPair {
    pub t_low: f64,
    pub t_high: f64,
    /// (t_high - t_low) theta'(midpoint) / pi; the mean spacing is 1.
    pub normalized_gap: f64,
    /// Extremal |Z| between the two zeros: how far Z gets from the axis.
    pub min_between: f64,
}

/// (t_{k+1} - t_k) theta'(midpoint) / pi for consecutive zeros.
pub fn normalized_gaps(zeros: &[f64]) -> Vec<f64> {
    zeros
        .windows(2)
        .map(|w| (w[1] - w[0]) * theta_slope(0.5 * (w[0] + w[1])) / PI)
        .collect()
}

/// Refines every zero of Z on the interval and reports consecutive pairs
/// whose normalized gap is below `threshold`.
pub fn lehmer_scan(interval: Interval, threshold: f64, step: f64, cfg: &EvalConfig) -> Result<Vec<LehmerPair>> {
    let zeros = critical_line_zeros(interval, step, DEFAULT_ZERO_TOL, cfg)?;
    let locations: Vec<f64> = zeros.iter().map(|z| z.location).collect();
    let gaps = normalized_gaps(&locations);
    let z = SampledFunction::generalized_hardy(0.5, *cfg);
    let mut out = Vec::new();
    for (w, &gap) in locations.windows(2).zip(&gaps) {
        if gap < threshold {
            out.push(LehmerPair {
                t_low: w[0],
                t_high: w[1],
                normalized_gap: gap,
                min_between: peak_abs_between(&z, w[0], w[1])?,
            });
        }
    }
    Ok(out)
}

/// max |f| on (lo, hi) by golden-section search, assuming one extremum.
fn peak_abs_between(f: &SampledFunction, lo: f64, hi: f64) -> Result<f64> {
    let inv_phi = (5f64.sqrt() - 1.0) / 2.0;
    let (mut a, mut b) = (lo, hi);
    let mut c = b - inv_phi * (b - a);
    let mut d = a + inv_phi * (b - a);
    let mut fc = f.try_eval(c)?.abs();
    let mut fd = f.try_eval(d)?.abs();
    for _ in 0..60 {
        if fc > fd {
            b = d;
            d = c;
            fd = fc;
            c = b - inv_phi * (b - a);
            fc = f.try_eval(c)?.abs();
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + inv_phi * (b - a);
            fd = f.try_eval(d)?.abs();
        }
        if (b - a) < 1e-10 * (hi - lo) {
            break;
        }
    }
    Ok(fc.max(fd))
}

/// Rectangle sigma_lo < Re s < sigma_hi, t_lo < Im s < t_hi.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct RectBox {
    pub sigma_lo: f64,
    pub sigma_hi: f64,
    pub t_lo: f64,
    pub t_hi: f64,
}

impl RectBox {
    pub fn new(sigma_lo: f64, sigma_hi: f64, t_lo: f64, t_hi: f64) -> Result<Self> {
        let ok = [sigma_lo, sigma_hi, t_lo, t_hi].iter().all(|v| v.is_finite())
            && sigma_lo < sigma_hi
            && t_lo < t_hi;
        if !ok {
            return Err(Error::Domain(format!(
                "invalid box ({sigma_lo}, {sigma_hi}) x ({t_lo}, {t_hi})"
            )));
        }
        Ok(RectBox { sigma_lo, sigma_hi, t_lo, t_hi })
    }

    /// Counter-clockwise corners starting at the lower left.
    fn corners(&self) -> [ComplexValue; 4] {
        [
            Complex64::new(self.sigma_lo, self.t_lo),
            Complex64::new(self.sigma_hi, self.t_lo),
            Complex64::new(self.sigma_hi, self.t_hi),
            Complex64::new(self.sigma_lo, self.t_hi),
        ]
    }
}

pub const CONTOUR_MIN_MODULUS: f64 = 1e-8;
const MAX_ARG_STEP: f64 = PI / 4.0;
const MAX_BISECTION_DEPTH: u32 = 20;

/// Winding number of f around the rectangle, i.e. the number of zeros inside
/// (f holomorphic, no poles). Segments whose argument increment exceeds pi/4
/// are bisected until it does not.
pub fn argument_principle_count<F>(f: F, rect: RectBox, n_per_side: usize) -> Result<i64>
where
    F: Fn(ComplexValue) -> Result<ComplexValue> + Sync,
{
    let n_per_side = n_per_side.max(1);
    let corners = rect.corners();
    let mut points = Vec::with_capacity(4 * n_per_side + 1);
    for side in 0..4 {
        let (z0, z1) = (corners[side], corners[(side + 1) % 4]);
        for k in 0..n_per_side {
            points.push(z0 + (z1 - z0) * (k as f64 / n_per_side as f64));
        }
    }
    points.push(corners[0]);

    let values = points.par_iter().map(|&z| f(z)).collect::<Result<Vec<_>>>()?;
    let mut total = 0.0;
    for i in 0..points.len() - 1 {
        total += arg_increment(&f, points[i], points[i + 1], values[i], values[i + 1], 0)?;
    }
    let turns = total / (2.0 * PI);
    let rounded = turns.round();
    if (turns - rounded).abs() > 0.05 {
        return Err(Error::WindingNotInteger { turns });
    }
    Ok(rounded as i64)
}

fn arg_increment<F>(f: &F, z0: ComplexValue, z1: ComplexValue, f0: ComplexValue, f1: ComplexValue, depth: u32) -> Result<f64>
where
    F: Fn(ComplexValue) -> Result<ComplexValue>,
{
    for (z, v) in [(z0, f0), (z1, f1)] {
        if v.norm() < CONTOUR_MIN_MODULUS {
            return Err(Error::ContourTooClose { min_modulus: v.norm(), re: z.re, im: z.im });
        }
    }
    let delta = (f1 / f0).arg();
    if delta.abs() <= MAX_ARG_STEP || depth >= MAX_BISECTION_DEPTH {
        return Ok(delta);
    }
    let zm = 0.5 * (z0 + z1);
    let fm = f(zm)?;
    Ok(arg_increment(f, z0, zm, f0, fm, depth + 1)? + arg_increment(f, zm, z1, fm, f1, depth + 1)?)
}
