//! Polynomial projection of interval functions and extraction of their real
//! zeros, plus the study of how polynomial zeros approach function zeros as
//! the degree grows.

use nalgebra::{DMatrix, DVector, Schur};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::hilbert::{gauss_legendre_rule, Interval, SampledFunction, MAX_QUADRATURE_ORDER};
use crate::zerofinder::find_zeros;

pub const MAX_DEGREE: usize = 512;
const TRIM_RELATIVE: f64 = 1e-14;
const SNAP_IMAG: f64 = 1e-8;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Basis {
    /// Legendre polynomials of the affine variable x = (2t - a - b)/(b - a).
    LegendreOnInterval,
    /// Powers of t itself.
    Monomial,
}

/// A real polynomial on an interval, in one of two bases.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PolynomialRealCoeffs {
    pub coeffs: Vec<f64>,
    pub basis: Basis,
    pub interval: Interval,
}

impl PolynomialRealCoeffs {
    /// Builds the polynomial, trimming trailing coefficients below 1e-14 max|c|.
    pub fn new(mut coeffs: Vec<f64>, basis: Basis, interval: Interval) -> Self {
        let scale = coeffs.iter().fold(0.0f64, |m, c| m.max(c.abs()));
        while coeffs.len() > 1 && coeffs.last().is_some_and(|c| c.abs() <= TRIM_RELATIVE * scale) {
            coeffs.pop();
        }
        if coeffs.is_empty() {
            coeffs.push(0.0);
        }
        PolynomialRealCoeffs { coeffs, basis, interval }
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn eval(&self, t: f64) -> f64 {
        self.eval_with_derivative(t).0
    }

    /// p(t) and dp/dt.
    pub fn eval_with_derivative(&self, t: f64) -> (f64, f64) {
        match self.basis {
            Basis::Monomial => {
                let mut p = 0.0;
                let mut dp = 0.0;
                for &c in self.coeffs.iter().rev() {
                    dp = dp * t + p;
                    p = p * t + c;
                }
                (p, dp)
            }
            Basis::LegendreOnInterval => {
                let x = self.interval.to_reference(t);
                let (p, dpdx) = legendre_series(&self.coeffs, x);
                (p, dpdx * 2.0 / self.interval.length())
            }
        }
    }
}

/// sum c_k P_k(x) and its x-derivative by forward recurrence.
fn legendre_series(coeffs: &[f64], x: f64) -> (f64, f64) {
    let mut p_prev = 1.0;
    let mut p = x;
    let mut d_prev = 0.0;
    let mut d = 1.0;
    let mut sum = coeffs[0];
    let mut dsum = 0.0;
    if coeffs.len() > 1 {
        sum += coeffs[1] * x;
        dsum += coeffs[1];
    }
    for (k, &c) in coeffs.iter().enumerate().skip(2) {
        let kf = k as f64;
        let p_next = ((2.0 * kf - 1.0) * x * p - (kf - 1.0) * p_prev) / kf;
        // P_k' = P_{k-2}' + (2k - 1) P_{k-1}
        let d_next = d_prev + (2.0 * kf - 1.0) * p;
        p_prev = p;
        p = p_next;
        d_prev = d;
        d = d_next;
        sum += c * p;
        dsum += c * d;
    }
    (sum, dsum)
}

/// A projection together with its measured L2 truncation error.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Projection {
    pub poly: PolynomialRealCoeffs,
    /// ||f - p|| on the interval.
    pub l2_error: f64,
    pub quad_order: usize,
    /// Condition number of the normal equations (monomial basis only).
    pub gram_condition: Option<f64>,
}

fn default_quad_order(degree: usize) -> usize {
    (2 * degree + 32).min(MAX_QUADRATURE_ORDER)
}

/// Least-squares projection onto shifted Legendre polynomials:
/// c_n = (2n+1)/(b-a) * integral of f P_n over the interval.
pub fn project(f: &SampledFunction, interval: Interval, degree: usize) -> Result<Projection> {
    project_with_order(f, interval, degree, default_quad_order(degree))
}

pub fn project_with_order(f: &SampledFunction, interval: Interval, degree: usize, quad_order: usize) -> Result<Projection> {
    if degree == 0 || degree > MAX_DEGREE {
        return Err(Error::Degree(degree));
    }
    if quad_order < 2 * degree {
        return Err(Error::Domain(format!(
            "quadrature order {quad_order} below twice the degree {degree}"
        )));
    }
    let rule = gauss_legendre_rule(quad_order, interval)?;
    let values = f.sample(&rule.nodes)?;
    let mut coeffs = vec![0.0; degree + 1];
    for ((&t, &w), &v) in rule.nodes.iter().zip(&rule.weights).zip(&values) {
        let x = interval.to_reference(t);
        let (mut p_prev, mut p) = (1.0, x);
        coeffs[0] += w * v;
        if degree >= 1 {
            coeffs[1] += w * v * x;
        }
        for (k, c) in coeffs.iter_mut().enumerate().skip(2) {
            let kf = k as f64;
            let next = ((2.0 * kf - 1.0) * x * p - (kf - 1.0) * p_prev) / kf;
            p_prev = p;
            p = next;
            *c += w * v * p;
        }
    }
    for (n, c) in coeffs.iter_mut().enumerate() {
        *c *= (2 * n + 1) as f64 / interval.length();
    }
    let poly = PolynomialRealCoeffs::new(coeffs, Basis::LegendreOnInterval, interval);
    let l2_error = l2_distance(f, &poly, interval, quad_order)?;
    Ok(Projection { poly, l2_error, quad_order, gram_condition: None })
}

/// Projection onto 1, t, t^2, ... by solving the normal equations. Kept to
/// show how quickly the monomial Gram (Hilbert-type) matrix degrades.
pub fn project_monomial(f: &SampledFunction, interval: Interval, degree: usize) -> Result<Projection> {
    if degree == 0 || degree > MAX_DEGREE {
        return Err(Error::Degree(degree));
    }
    let quad_order = default_quad_order(degree);
    let rule = gauss_legendre_rule(quad_order, interval)?;
    let values = f.sample(&rule.nodes)?;
    let n = degree + 1;
    let mut gram = DMatrix::<f64>::zeros(n, n);
    let mut rhs = DVector::<f64>::zeros(n);
    for ((&t, &w), &v) in rule.nodes.iter().zip(&rule.weights).zip(&values) {
        let powers: Vec<f64> = (0..2 * n).scan(1.0, |acc, _| {
            let cur = *acc;
            *acc *= t;
            Some(cur)
        }).collect();
        for i in 0..n {
            rhs[i] += w * v * powers[i];
            for j in 0..n {
                gram[(i, j)] += w * powers[i + j];
            }
        }
    }
    let sv = gram.clone().singular_values();
    let condition = sv.max() / sv.min();
    let coeffs = gram
        .lu()
        .solve(&rhs)
        .ok_or_else(|| Error::EigenSolver("monomial normal equations are singular".into()))?;
    let poly = PolynomialRealCoeffs::new(coeffs.iter().copied().collect(), Basis::Monomial, interval);
    let l2_error = l2_distance(f, &poly, interval, quad_order)?;
    Ok(Projection { poly, l2_error, quad_order, gram_condition: Some(condition) })
}

fn l2_distance(f: &SampledFunction, p: &PolynomialRealCoeffs, interval: Interval, quad_order: usize) -> Result<f64> {
    let rule = gauss_legendre_rule((2 * quad_order).min(MAX_QUADRATURE_ORDER), interval)?;
    let values = f.sample(&rule.nodes)?;
    let sq: f64 = rule
        .nodes
        .iter()
        .zip(&rule.weights)
        .zip(&values)
        .map(|((&t, &w), &v)| {
            let d = v - p.eval(t);
            w * d * d
        })
        .sum();
    Ok(sq.sqrt())
}

/// Real zeros of a polynomial inside its interval.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RealZeros {
    /// Ascending, strictly inside the interval.
    pub zeros: Vec<f64>,
    /// Eigenvalues dropped for having a genuine imaginary part.
    pub complex_discarded: usize,
}

/// Zeros from the eigenvalues of the colleague matrix (Legendre basis) or the
/// companion matrix (monomial basis). Eigenvalues with |Im| < 1e-8 scale are
/// snapped to the real axis and polished by Newton steps.
pub fn poly_real_zeros(p: &PolynomialRealCoeffs) -> Result<RealZeros> {
    let n = p.degree();
    if n == 0 {
        return Err(Error::Degree(0));
    }
    let mut m = match p.basis {
        Basis::LegendreOnInterval => colleague_matrix(&p.coeffs),
        Basis::Monomial => companion_matrix(&p.coeffs),
    };
    balance(&mut m);
    let schur = Schur::try_new(m, f64::EPSILON, 100 * n.max(10))
        .ok_or_else(|| Error::EigenSolver(format!("Schur iteration did not converge at degree {n}")))?;
    let eig = schur.complex_eigenvalues();

    let mut zeros = Vec::new();
    let mut complex_discarded = 0;
    for lambda in eig.iter() {
        let scale = match p.basis {
            Basis::LegendreOnInterval => 1.0,
            Basis::Monomial => lambda.norm().max(1.0),
        };
        if lambda.im.abs() >= SNAP_IMAG * scale {
            complex_discarded += 1;
            continue;
        }
        let t = match p.basis {
            Basis::LegendreOnInterval => p.interval.from_reference(lambda.re),
            Basis::Monomial => lambda.re,
        };
        let t = newton_polish(p, t);
        if t > p.interval.a && t < p.interval.b {
            zeros.push(t);
        }
    }
    zeros.sort_by(f64::total_cmp);
    Ok(RealZeros { zeros, complex_discarded })
}

fn newton_polish(p: &PolynomialRealCoeffs, mut t: f64) -> f64 {
    let mut best = p.eval(t).abs();
    for _ in 0..4 {
        let (v, dv) = p.eval_with_derivative(t);
        if dv == 0.0 || v == 0.0 {
            break;
        }
        let next = t - v / dv;
        let nv = p.eval(next).abs();
        if nv.is_nan() || nv >= best || (next - t).abs() > 1e-3 * p.interval.length() {
            break;
        }
        best = nv;
        t = next;
    }
    t
}

/// Colleague matrix for sum c_k P_k(x), from
/// x P_k = (k P_{k-1} + (k+1) P_{k+1}) / (2k+1).
fn colleague_matrix(c: &[f64]) -> DMatrix<f64> {
    let n = c.len() - 1;
    let mut m = DMatrix::<f64>::zeros(n, n);
    if n == 1 {
        m[(0, 0)] = -c[0] / c[1];
        return m;
    }
    m[(0, 1)] = 1.0;
    for k in 1..n {
        let kf = k as f64;
        m[(k, k - 1)] = kf / (2.0 * kf + 1.0);
        if k + 1 < n {
            m[(k, k + 1)] = (kf + 1.0) / (2.0 * kf + 1.0);
        }
    }
    let last = n - 1;
    let lead = n as f64 / (2.0 * last as f64 + 1.0);
    for j in 0..n {
        m[(last, j)] -= lead * c[j] / c[n];
    }
    m
}

fn companion_matrix(c: &[f64]) -> DMatrix<f64> {
    let n = c.len() - 1;
    let mut m = DMatrix::<f64>::zeros(n, n);
    for k in 1..n {
        m[(k, k - 1)] = 1.0;
    }
    for k in 0..n {
        m[(k, n - 1)] = -c[k] / c[n];
    }
    m
}

/// Parlett-Reinsch diagonal similarity scaling by powers of two.
fn balance(m: &mut DMatrix<f64>) {
    let n = m.nrows();
    loop {
        let mut done = true;
        for i in 0..n {
            let mut col = 0.0;
            let mut row = 0.0;
            for j in 0..n {
                if j != i {
                    col += m[(j, i)].abs();
                    row += m[(i, j)].abs();
                }
            }
            if col == 0.0 || row == 0.0 {
                continue;
            }
            let total = col + row;
            let mut f = 1.0;
            let mut c = col;
            while c < row / 2.0 {
                f *= 2.0;
                c *= 4.0;
            }
            while c > row * 2.0 {
                f /= 2.0;
                c /= 4.0;
            }
            if (c + row / (f * f) * f) / f < 0.95 * total {
                done = false;
                for j in 0..n {
                    m[(i, j)] /= f;
                    m[(j, i)] *= f;
                }
            }
        }
        if done {
            break;
        }
    }
}

/// Function zeros against polynomial zeros at one degree.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ZeroComparison {
    pub degree: usize,
    pub function_zeros: Vec<f64>,
    pub polynomial_zeros: Vec<f64>,
    /// (alpha, beta, |alpha - beta|)
    pub matched_pairs: Vec<(f64, f64, f64)>,
    pub max_deviation: Option<f64>,
    pub l2_error: f64,
}

/// Order-preserving one-to-one matching of two ascending lists that pairs
/// min(len) elements with the smallest total distance.
pub fn match_sorted(alpha: &[f64], beta: &[f64]) -> Vec<(f64, f64, f64)> {
    if alpha.len() == beta.len() {
        return alpha.iter().zip(beta).map(|(&a, &b)| (a, b, (a - b).abs())).collect();
    }
    let (short, long, swapped) = if alpha.len() < beta.len() { (alpha, beta, false) } else { (beta, alpha, true) };
    let (m, n) = (short.len(), long.len());
    // cost[i][j]: best cost matching short[..i] into long[..j]
    let mut cost = vec![vec![f64::INFINITY; n + 1]; m + 1];
    cost[0].fill(0.0);
    for i in 1..=m {
        for j in i..=n {
            let take = cost[i - 1][j - 1] + (short[i - 1] - long[j - 1]).abs();
            let skip = cost[i][j - 1];
            cost[i][j] = take.min(skip);
        }
    }
    let mut pairs = Vec::with_capacity(m);
    let (mut i, mut j) = (m, n);
    while i > 0 {
        if cost[i][j] == cost[i][j - 1] && j > i {
            j -= 1;
        } else {
            let (s, l) = (short[i - 1], long[j - 1]);
            let (a, b) = if swapped { (l, s) } else { (s, l) };
            pairs.push((a, b, (a - b).abs()));
            i -= 1;
            j -= 1;
        }
    }
    pairs.reverse();
    pairs
}

/// For each degree, projects f and compares polynomial zeros with the zeros
/// of f itself (found by scan and Brent refinement).
pub fn zero_convergence_study(f: &SampledFunction, interval: Interval, degrees: &[usize]) -> Result<Vec<ZeroComparison>> {
    let step = interval.length() / 2000.0;
    let function_zeros: Vec<f64> = find_zeros(f, f, interval, step, 1e-14)?
        .into_iter()
        .map(|z| z.location)
        .collect();

    let mut sorted = degrees.to_vec();
    sorted.sort_unstable();
    sorted.dedup();
    let comparisons = sorted
        .par_iter()
        .map(|&degree| {
            let proj = project(f, interval, degree)?;
            let polynomial_zeros = if proj.poly.degree() == 0 {
                Vec::new()
            } else {
                poly_real_zeros(&proj.poly)?.zeros
            };
            let matched_pairs = match_sorted(&function_zeros, &polynomial_zeros);
            let max_deviation = matched_pairs.iter().map(|p| p.2).reduce(f64::max);
            Ok(ZeroComparison {
                degree,
                function_zeros: function_zeros.clone(),
                polynomial_zeros,
                matched_pairs,
                max_deviation,
                l2_error: proj.l2_error,
            })
        })
        .collect::<Result<Vec<_>>>()?;

    if let Some(last) = comparisons.last() {
        if last.polynomial_zeros.len() != last.function_zeros.len() {
            return Err(Error::ZeroCountMismatch {
                degree: last.degree,
                function: last.function_zeros.len(),
                polynomial: last.polynomial_zeros.len(),
            });
        }
    }
    Ok(comparisons)
}
