//! Complex log-gamma, the functional-equation factor chi(s), and the
//! Riemann-Siegel theta function.

use std::f64::consts::{FRAC_PI_8, LN_2, PI};

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Complex carrier for s = sigma + i t and for values of zeta, chi and log-gamma.
pub type ComplexValue = Complex64;

/// Default lower bound for the asymptotic theta expansion.
pub const DEFAULT_THETA_T_MIN: f64 = 10.0;

const LANCZOS_G: f64 = 7.0;
const LANCZOS_COEFFS: [f64; 9] = [
    0.999_999_999_999_809_9,
    676.520_368_121_885_1,
    -1_259.139_216_722_402_8,
    771.323_428_777_653_1,
    -176.615_029_162_140_6,
    12.507_343_278_686_905,
    -0.138_571_095_265_720_12,
    9.984_369_578_019_572e-6,
    1.505_632_735_149_311_6e-7,
];
const HALF_LN_2PI: f64 = 0.918_938_533_204_672_8;

/// Beyond this many unit shifts the reflection formula is cheaper than upward recurrence.
const MAX_UPWARD_SHIFT: f64 = 40.0;

pub(crate) fn ensure_finite(what: &'static str, z: ComplexValue) -> Result<()> {
    if z.re.is_finite() && z.im.is_finite() {
        Ok(())
    } else {
        Err(Error::NonFinite { what, re: z.re, im: z.im })
    }
}

fn is_gamma_pole(z: ComplexValue) -> bool {
    z.im == 0.0 && z.re <= 0.0 && z.re == z.re.round()
}

/// Principal-branch log Gamma(z), with the branch cut on the negative real axis.
///
/// Uses the g = 7, 9-term Lanczos approximation for Re z >= 1/2 and upward
/// recurrence below that, which keeps Im log Gamma continuous in the open right
/// half plane (needed by the exact theta function).
pub fn log_gamma(z: ComplexValue) -> Result<ComplexValue> {
    ensure_finite("z", z)?;
    if is_gamma_pole(z) {
        return Err(Error::GammaPole(z.re));
    }
    if z.re >= 0.5 {
        return Ok(lanczos_log_gamma(z));
    }
    let shift = (0.5 - z.re).ceil();
    if shift <= MAX_UPWARD_SHIFT {
        let m = shift as usize;
        let mut acc = Complex64::new(0.0, 0.0);
        for k in 0..m {
            acc += (z + k as f64).ln();
        }
        Ok(lanczos_log_gamma(z + shift) - acc)
    } else {
        // Gamma(z) Gamma(1 - z) = pi / sin(pi z)
        let reflected = lanczos_log_gamma(1.0 - z);
        Ok(Complex64::new(PI.ln(), 0.0) - log_sin(PI * z) - reflected)
    }
}

fn lanczos_log_gamma(z: ComplexValue) -> ComplexValue {
    let w = z - 1.0;
    let mut series = Complex64::new(LANCZOS_COEFFS[0], 0.0);
    for (k, &c) in LANCZOS_COEFFS.iter().enumerate().skip(1) {
        series += c / (w + k as f64);
    }
    let t = w + LANCZOS_G + 0.5;
    HALF_LN_2PI + (w + 0.5) * t.ln() - t + series.ln()
}

/// log sin(w), stable for large |Im w| where sin itself overflows.
pub(crate) fn log_sin(w: ComplexValue) -> ComplexValue {
    let i = Complex64::i();
    if w.im.abs() < 20.0 {
        w.sin().ln()
    } else if w.im > 0.0 {
        -i * w + (i * (1.0 - (2.0 * i * w).exp()) / 2.0).ln()
    } else {
        i * w + ((1.0 - (-2.0 * i * w).exp()) / (2.0 * i)).ln()
    }
}

/// log cos(w), stable for large |Im w|.
pub(crate) fn log_cos(w: ComplexValue) -> ComplexValue {
    let i = Complex64::i();
    if w.im.abs() < 20.0 {
        w.cos().ln()
    } else if w.im > 0.0 {
        -i * w + ((1.0 + (2.0 * i * w).exp()) / 2.0).ln()
    } else {
        i * w + ((1.0 + (-2.0 * i * w).exp()) / 2.0).ln()
    }
}

/// The factor chi(s) in zeta(s) = chi(s) zeta(1 - s):
/// chi(s) = 2^(s-1) pi^s / (cos(pi s / 2) Gamma(s)), assembled in log space.
///
/// At non-positive integers Gamma(s) is infinite and chi vanishes; at odd
/// positive integers cos(pi s/2) vanishes and an error is returned.
pub fn chi(s: ComplexValue) -> Result<ComplexValue> {
    ensure_finite("s", s)?;
    if is_gamma_pole(s) {
        return Ok(Complex64::new(0.0, 0.0));
    }
    if s.im == 0.0 && s.re > 0.0 && s.re == s.re.round() && (s.re as i64) % 2 == 1 {
        return Err(Error::DenominatorZero { re: s.re, im: s.im });
    }
    let log_cos_term = log_cos(PI * s / 2.0);
    if !log_cos_term.re.is_finite() {
        return Err(Error::DenominatorZero { re: s.re, im: s.im });
    }
    let log_chi = (s - 1.0) * LN_2 + s * PI.ln() - log_cos_term - log_gamma(s)?;
    if log_chi.re > 700.0 {
        return Err(Error::Overflow { re: s.re, im: s.im });
    }
    Ok(log_chi.exp())
}

/// Which representation of theta(t) to evaluate.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub enum ThetaMode {
    /// Im log Gamma(1/4 + i t/2) - (t/2) log pi, valid for every real t.
    Exact,
    /// The six-term large-t expansion, rejected below `t_min`.
    Asymptotic { t_min: f64 },
}

impl ThetaMode {
    pub fn asymptotic() -> Self {
        ThetaMode::Asymptotic { t_min: DEFAULT_THETA_T_MIN }
    }
}

/// Riemann-Siegel theta function.
pub fn theta(t: f64, mode: ThetaMode) -> Result<f64> {
    if !t.is_finite() {
        return Err(Error::NonFinite { what: "t", re: t, im: 0.0 });
    }
    match mode {
        ThetaMode::Exact => theta_exact(t),
        ThetaMode::Asymptotic { t_min } => {
            if t < t_min || t <= 0.0 {
                return Err(Error::Domain(format!(
                    "asymptotic theta requested at t = {t}, below t_min = {t_min}"
                )));
            }
            Ok(theta_asymptotic(t))
        }
    }
}

pub(crate) fn theta_exact(t: f64) -> Result<f64> {
    let lg = log_gamma(Complex64::new(0.25, 0.5 * t))?;
    Ok(lg.im - 0.5 * t * PI.ln())
}

pub(crate) fn theta_asymptotic(t: f64) -> f64 {
    let t2 = t * t;
    let t3 = t2 * t;
    let t5 = t3 * t2;
    0.5 * t * (t / (2.0 * PI)).ln() - 0.5 * t - FRAC_PI_8
        + 1.0 / (48.0 * t)
        + 7.0 / (5760.0 * t3)
        + 31.0 / (80640.0 * t5)
}

/// Derivative of the asymptotic theta expansion, for t > 10.
pub fn theta_derivative(t: f64) -> Result<f64> {
    theta_derivative_above(t, DEFAULT_THETA_T_MIN)
}

/// Derivative of the asymptotic theta expansion with an explicit lower bound.
pub fn theta_derivative_above(t: f64, t_min: f64) -> Result<f64> {
    if !t.is_finite() || t <= t_min || t <= 0.0 {
        return Err(Error::Domain(format!(
            "theta derivative requested at t = {t}, need t > {t_min}"
        )));
    }
    Ok(theta_derivative_unchecked(t))
}

pub(crate) fn theta_derivative_unchecked(t: f64) -> f64 {
    let t2 = t * t;
    let t4 = t2 * t2;
    let t6 = t4 * t2;
    0.5 * (t / (2.0 * PI)).ln() - 1.0 / (48.0 * t2) - 21.0 / (5760.0 * t4) - 155.0 / (80640.0 * t6)
}
