//! Zeta-type functions: Euler-Maclaurin zeta and Hurwitz zeta, the
//! Riemann-Siegel formula, the generalized Hardy function, Dirichlet spirals,
//! Riemann's residue identity and the Davenport-Heilbronn function.

use std::f64::consts::PI;

use log::warn;
use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::specialfn::{
    ensure_finite, log_gamma, theta_asymptotic, theta_exact, ComplexValue, DEFAULT_THETA_T_MIN,
};

/// B_{2k} for k = 1..=15.
const BERNOULLI_EVEN: [f64; 15] = [
    1.0 / 6.0,
    -1.0 / 30.0,
    1.0 / 42.0,
    -1.0 / 30.0,
    5.0 / 66.0,
    -691.0 / 2730.0,
    7.0 / 6.0,
    -3617.0 / 510.0,
    43867.0 / 798.0,
    -174611.0 / 330.0,
    854513.0 / 138.0,
    -236364091.0 / 2730.0,
    8553103.0 / 6.0,
    -23749461029.0 / 870.0,
    8615841276005.0 / 14322.0,
];

pub const MAX_BERNOULLI_ORDER: usize = BERNOULLI_EVEN.len();
const MIN_AUTO_TERMS: usize = 20;

/// Truncation levels for the zeta evaluators.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct EvalConfig {
    /// Euler-Maclaurin cutoff N. `None` picks max(20, ceil|t|) per call.
    pub em_terms: Option<usize>,
    /// Number of Bernoulli correction terms (at most 15).
    pub em_bernoulli_order: usize,
    /// Riemann-Siegel remainder: -1 for none, 0 for the C0 term.
    pub rs_remainder_order: i32,
}

impl Default for EvalConfig {
    fn default() -> Self {
        EvalConfig { em_terms: None, em_bernoulli_order: 8, rs_remainder_order: 0 }
    }
}

impl EvalConfig {
    pub fn with_em_terms(mut self, n: usize) -> Self {
        self.em_terms = Some(n);
        self
    }

    pub fn validate(&self) -> Result<()> {
        if self.em_terms == Some(0) {
            return Err(Error::Domain("em_terms must be at least 1".into()));
        }
        if self.em_bernoulli_order == 0 || self.em_bernoulli_order > MAX_BERNOULLI_ORDER {
            return Err(Error::Domain(format!(
                "em_bernoulli_order must lie in 1..={MAX_BERNOULLI_ORDER}, got {}",
                self.em_bernoulli_order
            )));
        }
        if !(-1..=0).contains(&self.rs_remainder_order) {
            return Err(Error::Domain(format!(
                "rs_remainder_order must be -1 or 0, got {}",
                self.rs_remainder_order
            )));
        }
        Ok(())
    }

    /// The cutoff used at height t.
    pub fn terms_for(&self, t: f64) -> usize {
        self.em_terms
            .unwrap_or_else(|| MIN_AUTO_TERMS.max(t.abs().ceil() as usize))
    }
}

/// x^(-s) for real x > 0.
#[inline]
fn real_pow_neg(x: f64, s: ComplexValue) -> ComplexValue {
    let lx = x.ln();
    let modulus = (-s.re * lx).exp();
    let (sin, cos) = (s.im * lx).sin_cos();
    Complex64::new(modulus * cos, -modulus * sin)
}

/// Sum_{n=0}^{m-1} (n + a)^(-s) plus the Euler-Maclaurin tail at x = m + a.
fn euler_maclaurin(s: ComplexValue, a: f64, m: usize, order: usize) -> ComplexValue {
    let mut head = Complex64::new(0.0, 0.0);
    for n in (0..m).rev() {
        head += real_pow_neg(n as f64 + a, s);
    }
    let x = m as f64 + a;
    let x_neg_s = real_pow_neg(x, s);
    let mut tail = x_neg_s * x / (s - 1.0) + 0.5 * x_neg_s;

    // term_k = B_{2k}/(2k)! * s(s+1)...(s+2k-2) * x^(-s-2k+1)
    let inv_x = 1.0 / x;
    let mut rising = s; // s (s+1) ... (s+2k-2)
    let mut power = x_neg_s * inv_x;
    let mut factorial = 2.0;
    for (k, &b) in BERNOULLI_EVEN.iter().enumerate().take(order) {
        let k = k + 1;
        tail += b / factorial * rising * power;
        let j = 2 * k as u32;
        rising *= (s + (j - 1) as f64) * (s + j as f64);
        power *= inv_x * inv_x;
        factorial *= ((j + 1) * (j + 2)) as f64;
    }
    head + tail
}

fn warn_if_out_of_range(s: ComplexValue, n: usize) {
    if s.im.abs() > 2.0 * PI * n as f64 {
        warn!(
            "Euler-Maclaurin cutoff N = {n} is small for |t| = {}: expect reduced accuracy",
            s.im.abs()
        );
    }
}

/// Riemann zeta via Euler-Maclaurin summation:
/// sum_{n<N} n^-s + N^(1-s)/(s-1) + N^-s/2 + Bernoulli corrections.
pub fn zeta_em(s: ComplexValue, cfg: &EvalConfig) -> Result<ComplexValue> {
    ensure_finite("s", s)?;
    cfg.validate()?;
    if s == Complex64::new(1.0, 0.0) {
        return Err(Error::ZetaPole);
    }
    let n = cfg.terms_for(s.im);
    warn_if_out_of_range(s, n);
    Ok(euler_maclaurin(s, 1.0, n - 1, cfg.em_bernoulli_order))
}

/// Hurwitz zeta sum_{n>=0} (n + a)^-s for a in (0, 1], continued by Euler-Maclaurin.
/// With a = 1 this is bit-identical to [`zeta_em`].
pub fn hurwitz_zeta(s: ComplexValue, a: f64, cfg: &EvalConfig) -> Result<ComplexValue> {
    ensure_finite("s", s)?;
    cfg.validate()?;
    if !(a > 0.0 && a <= 1.0) {
        return Err(Error::Domain(format!("Hurwitz parameter a = {a} outside (0, 1]")));
    }
    if s == Complex64::new(1.0, 0.0) {
        return Err(Error::ZetaPole);
    }
    let n = cfg.terms_for(s.im);
    warn_if_out_of_range(s, n);
    Ok(euler_maclaurin(s, a, n - 1, cfg.em_bernoulli_order))
}

/// C0(p) = cos(2 pi (p^2 - p - 1/16)) / cos(2 pi p), with the removable
/// singularities at p = 1/4 and 3/4 bridged by a symmetric average.
fn rs_c0(p: f64) -> f64 {
    let raw = |p: f64| (2.0 * PI * (p * p - p - 1.0 / 16.0)).cos() / (2.0 * PI * p).cos();
    const H: f64 = 1e-4;
    if (p - 0.25).abs() < H || (p - 0.75).abs() < H {
        let centre = if (p - 0.25).abs() < H { 0.25 } else { 0.75 };
        let off = p - centre;
        // linear interpolation between centre +- H
        let lo = raw(centre - H);
        let hi = raw(centre + H);
        0.5 * (lo + hi) + off * (hi - lo) / (2.0 * H)
    } else {
        raw(p)
    }
}

/// Hardy Z(t) by the Riemann-Siegel formula,
/// 2 sum_{n<=N} n^-1/2 cos(theta(t) - t log n) + R(t), N = floor(sqrt(t/2 pi)).
pub fn hardy_z_rs(t: f64, cfg: &EvalConfig) -> Result<f64> {
    cfg.validate()?;
    if !t.is_finite() || t < 2.0 * PI {
        return Err(Error::Domain(format!("Riemann-Siegel formula needs t >= 2 pi, got {t}")));
    }
    let theta = if t >= DEFAULT_THETA_T_MIN { theta_asymptotic(t) } else { theta_exact(t)? };
    let root = (t / (2.0 * PI)).sqrt();
    let n_max = root.floor() as usize;
    let mut sum = 0.0;
    for n in (1..=n_max).rev() {
        let nf = n as f64;
        sum += (theta - t * nf.ln()).cos() / nf.sqrt();
    }
    let mut z = 2.0 * sum;
    if cfg.rs_remainder_order >= 0 {
        let p = root - n_max as f64;
        let sign = if n_max % 2 == 1 { 1.0 } else { -1.0 };
        z += sign * (t / (2.0 * PI)).powf(-0.25) * rs_c0(p);
    }
    Ok(z)
}

/// Projections of zeta(sigma + i t) onto e^{i theta(t)} and i e^{i theta(t)}.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct GeneralizedHardyValue {
    pub z: f64,
    pub y: f64,
}

/// Z(sigma, t) = Re(zeta(sigma + i t) e^{i theta(t)}) together with the
/// perpendicular component, using Euler-Maclaurin zeta and the exact theta.
pub fn generalized_hardy(sigma: f64, t: f64, cfg: &EvalConfig) -> Result<GeneralizedHardyValue> {
    let s = Complex64::new(sigma, t);
    let zeta = zeta_em(s, cfg)?;
    let rotated = zeta * Complex64::from_polar(1.0, theta_exact(t)?);
    Ok(GeneralizedHardyValue { z: rotated.re, y: rotated.im })
}

/// Hardy Z(t) through the Euler-Maclaurin path.
pub fn hardy_z_em(t: f64, cfg: &EvalConfig) -> Result<f64> {
    Ok(generalized_hardy(0.5, t, cfg)?.z)
}

/// Partial sums of the Dirichlet series and the midpoints of consecutive
/// segments (the inverse spiral).
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SpiralPath {
    pub points: Vec<ComplexValue>,
    pub midpoints: Vec<ComplexValue>,
}

pub fn dirichlet_partial_sums(s: ComplexValue, n_max: usize) -> Result<SpiralPath> {
    ensure_finite("s", s)?;
    if n_max == 0 {
        return Err(Error::Domain("n_max must be at least 1".into()));
    }
    let mut points = Vec::with_capacity(n_max);
    let mut acc = Complex64::new(0.0, 0.0);
    for n in 1..=n_max {
        acc += real_pow_neg(n as f64, s);
        points.push(acc);
    }
    let midpoints = points.windows(2).map(|w| (w[0] + w[1]) * 0.5).collect();
    Ok(SpiralPath { points, midpoints })
}

/// |2 sin(pi s) Gamma(s) zeta(s) - (2 pi)^s sum_{n<=n_max} n^(s-1) ((-i)^(s-1) + i^(s-1))|
/// for Re s < 0, where the right-hand series converges.
pub fn residue_identity_residual(s: ComplexValue, n_max: usize) -> Result<f64> {
    ensure_finite("s", s)?;
    if s.re >= 0.0 {
        return Err(Error::Domain(format!("residue identity needs Re s < 0, got {s}")));
    }
    if n_max == 0 {
        return Err(Error::Domain("n_max must be at least 1".into()));
    }
    // sin(pi s) Gamma(s) = pi / Gamma(1 - s), regular for Re s < 0
    let lhs = 2.0 * PI * zeta_em(s, &EvalConfig::default())? * (-log_gamma(1.0 - s)?).exp();

    let i = Complex64::i();
    let phase = ((s - 1.0) * (-i * PI / 2.0)).exp() + ((s - 1.0) * (i * PI / 2.0)).exp();
    let exponent = 1.0 - s; // n^(s-1) = n^-(1-s)
    let mut series = Complex64::new(0.0, 0.0);
    for n in (1..=n_max).rev() {
        series += real_pow_neg(n as f64, exponent);
    }
    let rhs = ((2.0 * PI).ln() * s).exp() * series * phase;
    Ok((lhs - rhs).norm())
}

/// kappa = (sqrt(10 - 2 sqrt 5) - 2) / (sqrt 5 - 1).
pub fn davenport_heilbronn_kappa() -> f64 {
    let r5 = 5f64.sqrt();
    ((10.0 - 2.0 * r5).sqrt() - 2.0) / (r5 - 1.0)
}

/// The mod-5 character with chi(2) = i, indexed by residue 0..5.
pub fn mod5_character(n: u64) -> ComplexValue {
    match n % 5 {
        1 => Complex64::new(1.0, 0.0),
        2 => Complex64::new(0.0, 1.0),
        3 => Complex64::new(0.0, -1.0),
        4 => Complex64::new(-1.0, 0.0),
        _ => Complex64::new(0.0, 0.0),
    }
}

/// Dirichlet L(s, chi) for the mod-5 character above (or its conjugate),
/// as 5^-s sum_a chi(a) zeta(s, a/5).
pub fn dirichlet_l_mod5(s: ComplexValue, conjugate: bool, cfg: &EvalConfig) -> Result<ComplexValue> {
    let hurwitz = mod5_hurwitz(s, cfg)?;
    let mut acc = Complex64::new(0.0, 0.0);
    for (a, h) in (1..=4u64).zip(hurwitz) {
        let c = mod5_character(a);
        acc += if conjugate { c.conj() } else { c } * h;
    }
    Ok(acc * real_pow_neg(5.0, s))
}

fn mod5_hurwitz(s: ComplexValue, cfg: &EvalConfig) -> Result<[ComplexValue; 4]> {
    let mut out = [Complex64::new(0.0, 0.0); 4];
    for (a, slot) in (1..=4).zip(out.iter_mut()) {
        *slot = hurwitz_zeta(s, a as f64 / 5.0, cfg)?;
    }
    Ok(out)
}

/// Coefficients a_1..a_4 of the periodic Dirichlet series of the
/// Davenport-Heilbronn function: (1, kappa, -kappa, -1).
pub fn davenport_heilbronn_coefficients() -> [f64; 4] {
    let k = davenport_heilbronn_kappa();
    [1.0, k, -k, -1.0]
}

/// Davenport-Heilbronn function
/// f(s) = (1 - i kappa)/2 L(s, chi) + (1 + i kappa)/2 L(s, conj chi).
pub fn davenport_heilbronn(s: ComplexValue, cfg: &EvalConfig) -> Result<ComplexValue> {
    let hurwitz = mod5_hurwitz(s, cfg)?;
    let mut acc = Complex64::new(0.0, 0.0);
    for (c, h) in davenport_heilbronn_coefficients().iter().zip(hurwitz) {
        acc += *c * h;
    }
    Ok(acc * real_pow_neg(5.0, s))
}
