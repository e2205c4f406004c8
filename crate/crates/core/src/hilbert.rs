//! Finite-interval L2 numerics: Gauss-Legendre rules, inner products, Gram
//! matrices, modified Gram-Schmidt and independence evidence for families of
//! generalized Hardy functions.

use std::fmt;
use std::sync::Arc;

use nalgebra::{DMatrix, SymmetricEigen};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::specialfn::theta_derivative_unchecked;
use crate::zetaeval::{generalized_hardy, hardy_z_rs, EvalConfig};

pub const MAX_QUADRATURE_ORDER: usize = 4096;
pub const DEFAULT_GS_TOL: f64 = 1e-10;

/// A finite real interval (a, b) with a < b.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Interval {
    pub a: f64,
    pub b: f64,
}

impl Interval {
    pub fn new(a: f64, b: f64) -> Result<Self> {
        if a.is_finite() && b.is_finite() && a < b {
            Ok(Interval { a, b })
        } else {
            Err(Error::InvalidInterval { a, b })
        }
    }

    pub fn length(&self) -> f64 {
        self.b - self.a
    }

    pub fn midpoint(&self) -> f64 {
        0.5 * (self.a + self.b)
    }

    /// Affine image of x in [-1, 1].
    pub fn from_reference(&self, x: f64) -> f64 {
        self.midpoint() + 0.5 * self.length() * x
    }

    pub fn to_reference(&self, t: f64) -> f64 {
        (2.0 * t - self.a - self.b) / self.length()
    }

    pub fn contains(&self, t: f64) -> bool {
        t >= self.a && t <= self.b
    }
}

impl fmt::Display for Interval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}, {}]", self.a, self.b)
    }
}

/// Gauss-Legendre nodes and weights mapped to an interval.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct QuadratureRule {
    pub nodes: Vec<f64>,
    pub weights: Vec<f64>,
    pub interval: Interval,
    pub order: usize,
}

impl QuadratureRule {
    pub fn integrate<F: Fn(f64) -> f64>(&self, f: F) -> f64 {
        self.nodes.iter().zip(&self.weights).map(|(&x, &w)| w * f(x)).sum()
    }

    /// Weighted sum against values already sampled at the nodes.
    pub fn dot(&self, u: &[f64], v: &[f64]) -> f64 {
        self.weights
            .iter()
            .zip(u.iter().zip(v))
            .map(|(w, (a, b))| w * a * b)
            .sum()
    }
}

/// P_n(x) and P_n'(x) by the three-term recurrence.
pub(crate) fn legendre_with_derivative(n: usize, x: f64) -> (f64, f64) {
    let mut p0 = 1.0;
    let mut p1 = x;
    if n == 0 {
        return (1.0, 0.0);
    }
    for k in 2..=n {
        let kf = k as f64;
        let p2 = ((2.0 * kf - 1.0) * x * p1 - (kf - 1.0) * p0) / kf;
        p0 = p1;
        p1 = p2;
    }
    let nf = n as f64;
    let dp = nf * (x * p1 - p0) / (x * x - 1.0);
    (p1, dp)
}

/// Eigenvalues of the symmetric tridiagonal matrix (diag, off) by implicit QL,
/// together with the first component of each normalized eigenvector.
fn tridiagonal_ql(mut d: Vec<f64>, off: &[f64]) -> Result<(Vec<f64>, Vec<f64>)> {
    let n = d.len();
    let mut e = vec![0.0; n];
    e[..n - 1].copy_from_slice(off);
    let mut z = vec![0.0; n];
    z[0] = 1.0;

    for l in 0..n {
        let mut iterations = 0;
        loop {
            let mut m = l;
            while m + 1 < n {
                let dd = d[m].abs() + d[m + 1].abs();
                if e[m].abs() <= f64::EPSILON * dd {
                    break;
                }
                m += 1;
            }
            if m == l {
                break;
            }
            iterations += 1;
            if iterations > 60 {
                return Err(Error::EigenSolver(format!(
                    "tridiagonal QL did not converge for eigenvalue {l}"
                )));
            }
            let mut g = (d[l + 1] - d[l]) / (2.0 * e[l]);
            let mut r = g.hypot(1.0);
            g = d[m] - d[l] + e[l] / (g + r.copysign(g));
            let (mut s, mut c, mut p) = (1.0, 1.0, 0.0);
            let mut deflated = false;
            for i in (l..m).rev() {
                let f = s * e[i];
                let b = c * e[i];
                r = f.hypot(g);
                e[i + 1] = r;
                if r == 0.0 {
                    d[i + 1] -= p;
                    e[m] = 0.0;
                    deflated = true;
                    break;
                }
                s = f / r;
                c = g / r;
                g = d[i + 1] - p;
                r = (d[i] - g) * s + 2.0 * c * b;
                p = s * r;
                d[i + 1] = g + p;
                g = c * r - b;
                let zf = z[i + 1];
                z[i + 1] = s * z[i] + c * zf;
                z[i] = c * z[i] - s * zf;
            }
            if deflated {
                continue;
            }
            d[l] -= p;
            e[l] = g;
            e[m] = 0.0;
        }
    }
    Ok((d, z))
}

/// Reference Gauss-Legendre rule on [-1, 1]: Golub-Welsch eigenvalues of the
/// Jacobi matrix, polished by Newton steps on P_n, with weights
/// 2 / ((1 - x^2) P_n'(x)^2). Also returns the raw Golub-Welsch weights.
pub(crate) fn reference_rule(order: usize) -> Result<(Vec<f64>, Vec<f64>, Vec<f64>)> {
    if order == 1 {
        return Ok((vec![0.0], vec![2.0], vec![2.0]));
    }
    let off: Vec<f64> = (1..order)
        .map(|k| {
            let k = k as f64;
            k / (4.0 * k * k - 1.0).sqrt()
        })
        .collect();
    let (eig, first) = tridiagonal_ql(vec![0.0; order], &off)?;
    let mut pairs: Vec<(f64, f64)> = eig.into_iter().zip(first.into_iter().map(|v| 2.0 * v * v)).collect();
    pairs.sort_by(|x, y| x.0.total_cmp(&y.0));

    let mut nodes = Vec::with_capacity(order);
    let mut weights = Vec::with_capacity(order);
    let mut gw = Vec::with_capacity(order);
    for &(x0, w_gw) in &pairs {
        let mut x = x0;
        for _ in 0..3 {
            let (p, dp) = legendre_with_derivative(order, x);
            let step = p / dp;
            x -= step;
            if step.abs() < 1e-16 {
                break;
            }
        }
        let (_, dp) = legendre_with_derivative(order, x);
        nodes.push(x);
        weights.push(2.0 / ((1.0 - x * x) * dp * dp));
        gw.push(w_gw);
    }
    // exact symmetry about the origin
    for i in 0..order / 2 {
        let j = order - 1 - i;
        let x = 0.5 * (nodes[j] - nodes[i]);
        let w = 0.5 * (weights[i] + weights[j]);
        nodes[i] = -x;
        nodes[j] = x;
        weights[i] = w;
        weights[j] = w;
    }
    if order % 2 == 1 {
        nodes[order / 2] = 0.0;
    }
    Ok((nodes, weights, gw))
}

/// Gauss-Legendre rule with `order` nodes on the interval.
pub fn gauss_legendre_rule(order: usize, interval: Interval) -> Result<QuadratureRule> {
    if order == 0 || order > MAX_QUADRATURE_ORDER {
        return Err(Error::QuadratureOrder(order));
    }
    let interval = Interval::new(interval.a, interval.b)?;
    let (x, w, _) = reference_rule(order)?;
    let half = 0.5 * interval.length();
    Ok(QuadratureRule {
        nodes: x.iter().map(|&x| interval.from_reference(x)).collect(),
        weights: w.iter().map(|&w| w * half).collect(),
        interval,
        order,
    })
}

/// Quadrature order that resolves the fastest oscillation of Z(sigma, .) on
/// the interval: at least 4 (b - a) max|theta'|.
pub fn oscillation_aware_order(interval: &Interval) -> usize {
    let top = interval.a.abs().max(interval.b.abs());
    let slope = if top > 10.0 { theta_derivative_unchecked(top).abs() } else { 1.0 };
    let order = (4.0 * interval.length() * slope.max(1.0)).ceil() as usize;
    order.clamp(32, MAX_QUADRATURE_ORDER)
}

type Callback = dyn Fn(f64) -> f64 + Send + Sync;

/// A real function of one variable together with a label and, for
/// generalized Hardy functions, its sigma.
#[derive(Clone)]
pub struct SampledFunction {
    eval: Arc<Callback>,
    label: String,
    sigma: Option<f64>,
}

impl fmt::Debug for SampledFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("SampledFunction")
            .field("label", &self.label)
            .field("sigma", &self.sigma)
            .finish()
    }
}

impl SampledFunction {
    pub fn new<F>(label: impl Into<String>, f: F) -> Self
    where
        F: Fn(f64) -> f64 + Send + Sync + 'static,
    {
        SampledFunction { eval: Arc::new(f), label: label.into(), sigma: None }
    }

    /// Z(sigma, t) through the Euler-Maclaurin path. Evaluation errors surface as NaN.
    pub fn generalized_hardy(sigma: f64, cfg: EvalConfig) -> Self {
        SampledFunction {
            eval: Arc::new(move |t| generalized_hardy(sigma, t, &cfg).map(|v| v.z).unwrap_or(f64::NAN)),
            label: format!("Z({sigma},t)"),
            sigma: Some(sigma),
        }
    }

    /// Hardy Z(t) through the Riemann-Siegel formula.
    pub fn hardy_rs(cfg: EvalConfig) -> Self {
        SampledFunction {
            eval: Arc::new(move |t| hardy_z_rs(t, &cfg).unwrap_or(f64::NAN)),
            label: "Z_rs(t)".into(),
            sigma: Some(0.5),
        }
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn sigma(&self) -> Option<f64> {
        self.sigma
    }

    pub fn with_label(mut self, label: impl Into<String>) -> Self {
        self.label = label.into();
        self
    }

    pub fn eval(&self, t: f64) -> f64 {
        (self.eval)(t)
    }

    /// Evaluate, turning a non-finite value into an error naming the point.
    pub fn try_eval(&self, t: f64) -> Result<f64> {
        let v = (self.eval)(t);
        if v.is_finite() {
            Ok(v)
        } else {
            Err(Error::Evaluation { label: self.label.clone(), at: t })
        }
    }

    /// Values at every point, computed in parallel and returned in input order.
    pub fn sample(&self, points: &[f64]) -> Result<Vec<f64>> {
        points.par_iter().map(|&t| self.try_eval(t)).collect()
    }

    pub fn scaled(&self, c: f64) -> SampledFunction {
        let inner = Arc::clone(&self.eval);
        SampledFunction {
            eval: Arc::new(move |t| c * inner(t)),
            label: format!("{c}*{}", self.label),
            sigma: self.sigma,
        }
    }

    /// sum_j c_j f_j as a new function.
    pub fn linear_combination(label: impl Into<String>, terms: &[(f64, SampledFunction)]) -> Self {
        let terms: Vec<(f64, Arc<Callback>)> =
            terms.iter().map(|(c, f)| (*c, Arc::clone(&f.eval))).collect();
        SampledFunction {
            eval: Arc::new(move |t| terms.iter().map(|(c, f)| c * f(t)).sum()),
            label: label.into(),
            sigma: None,
        }
    }
}

/// sum_i w_i f(x_i) g(x_i).
pub fn inner_product(f: &SampledFunction, g: &SampledFunction, rule: &QuadratureRule) -> Result<f64> {
    let fv = f.sample(&rule.nodes)?;
    let gv = g.sample(&rule.nodes)?;
    Ok(rule.dot(&fv, &gv))
}

pub fn norm(f: &SampledFunction, rule: &QuadratureRule) -> Result<f64> {
    let fv = f.sample(&rule.nodes)?;
    Ok(rule.dot(&fv, &fv).max(0.0).sqrt())
}

/// Matrix of pairwise inner products.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GramMatrix {
    pub entries: Vec<Vec<f64>>,
    pub labels: Vec<String>,
}

impl GramMatrix {
    fn from_samples(samples: &[Vec<f64>], labels: Vec<String>, rule: &QuadratureRule) -> Self {
        let k = samples.len();
        let rows: Vec<Vec<f64>> = (0..k)
            .into_par_iter()
            .map(|i| (0..k).map(|j| rule.dot(&samples[i], &samples[j])).collect())
            .collect();
        GramMatrix { entries: rows, labels }
    }

    pub fn dim(&self) -> usize {
        self.entries.len()
    }

    fn to_matrix(&self) -> DMatrix<f64> {
        let n = self.dim();
        DMatrix::from_fn(n, n, |i, j| self.entries[i][j])
    }

    pub fn trace(&self) -> f64 {
        (0..self.dim()).map(|i| self.entries[i][i]).sum()
    }

    pub fn determinant(&self) -> f64 {
        self.to_matrix().determinant()
    }

    /// Eigenvalues in ascending order.
    pub fn eigenvalues(&self) -> Vec<f64> {
        let mut ev: Vec<f64> = SymmetricEigen::new(self.to_matrix()).eigenvalues.iter().copied().collect();
        ev.sort_by(f64::total_cmp);
        ev
    }

    /// Scale-free version: entries / sqrt(G_ii G_jj).
    pub fn correlation(&self) -> GramMatrix {
        let n = self.dim();
        let diag: Vec<f64> = (0..n).map(|i| self.entries[i][i].sqrt()).collect();
        let entries = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| if i == j { 1.0 } else { self.entries[i][j] / (diag[i] * diag[j]) })
                    .collect()
            })
            .collect();
        GramMatrix { entries, labels: self.labels.clone() }
    }

    /// Largest |entry| off the diagonal of the correlation matrix.
    pub fn max_normalized_off_diagonal(&self) -> f64 {
        let c = self.correlation();
        let mut worst = 0.0f64;
        for i in 0..self.dim() {
            for j in 0..self.dim() {
                if i != j {
                    worst = worst.max(c.entries[i][j].abs());
                }
            }
        }
        worst
    }
}

pub fn gram_matrix(fs: &[SampledFunction], rule: &QuadratureRule) -> Result<GramMatrix> {
    if fs.is_empty() {
        return Err(Error::Domain("Gram matrix needs at least one function".into()));
    }
    let samples = fs.iter().map(|f| f.sample(&rule.nodes)).collect::<Result<Vec<_>>>()?;
    Ok(GramMatrix::from_samples(&samples, fs.iter().map(|f| f.label.clone()).collect(), rule))
}

/// Coefficients of a Gram-Schmidt run: row i holds g_i in terms of f_0..f_i.
#[derive(Debug, Clone)]
pub struct GramSchmidtBasis {
    pub functions: Vec<SampledFunction>,
    pub coefficients: Vec<Vec<f64>>,
}

/// Modified Gram-Schmidt with one re-orthogonalization pass.
///
/// g_0 is a clone of f_0, so it evaluates bit-identically. Later g_i are the
/// combinations sum_j C_ij f_j with C lower triangular and C_ii = 1 (outputs
/// are orthogonal, not normalized).
pub fn gram_schmidt(fs: &[SampledFunction], rule: &QuadratureRule, tol: f64) -> Result<Vec<SampledFunction>> {
    Ok(gram_schmidt_basis(fs, rule, tol)?.functions)
}

pub fn gram_schmidt_basis(fs: &[SampledFunction], rule: &QuadratureRule, tol: f64) -> Result<GramSchmidtBasis> {
    if fs.is_empty() {
        return Err(Error::Domain("Gram-Schmidt needs at least one function".into()));
    }
    let k = fs.len();
    let samples = fs.iter().map(|f| f.sample(&rule.nodes)).collect::<Result<Vec<_>>>()?;

    let mut ortho: Vec<Vec<f64>> = Vec::with_capacity(k);
    let mut ortho_sq: Vec<f64> = Vec::with_capacity(k);
    let mut coeffs: Vec<Vec<f64>> = Vec::with_capacity(k);
    for (i, f_vals) in samples.iter().enumerate() {
        let mut v = f_vals.clone();
        let mut c = vec![0.0; k];
        c[i] = 1.0;
        let f_norm_sq = rule.dot(f_vals, f_vals);
        for _pass in 0..2 {
            for j in 0..i {
                let r = rule.dot(&v, &ortho[j]) / ortho_sq[j];
                for (vx, ox) in v.iter_mut().zip(&ortho[j]) {
                    *vx -= r * ox;
                }
                for (cx, cj) in c.iter_mut().zip(&coeffs[j]) {
                    *cx -= r * cj;
                }
            }
        }
        let v_sq = rule.dot(&v, &v);
        let residual = if f_norm_sq > 0.0 { (v_sq / f_norm_sq).sqrt() } else { 0.0 };
        if residual.is_nan() || residual <= tol {
            return Err(Error::LinearDependence { index: i, label: fs[i].label.clone(), residual });
        }
        ortho.push(v);
        ortho_sq.push(v_sq);
        coeffs.push(c);
    }

    let functions = coeffs
        .iter()
        .enumerate()
        .map(|(i, c)| {
            if i == 0 {
                return fs[0].clone();
            }
            let terms: Vec<(f64, SampledFunction)> =
                (0..=i).map(|j| (c[j], fs[j].clone())).collect();
            SampledFunction::linear_combination(format!("g{}", i + 1), &terms)
        })
        .collect();
    Ok(GramSchmidtBasis { functions, coefficients: coeffs })
}

/// Correlation between two members of the family.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct PairCorrelation {
    pub sigma_i: f64,
    pub sigma_j: f64,
    pub correlation: f64,
}

/// Raw numbers describing how close {Z(sigma_k, .)} is to linear dependence.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct IndependenceReport {
    pub sigmas: Vec<f64>,
    pub interval: Interval,
    pub order: usize,
    pub gram: GramMatrix,
    pub correlation: GramMatrix,
    pub correlation_determinant: f64,
    /// Eigenvalues of the correlation matrix, ascending.
    pub eigenvalues: Vec<f64>,
    pub min_eigenvalue: f64,
    pub pairs: Vec<PairCorrelation>,
}

pub fn independence_report(
    sigmas: &[f64],
    interval: Interval,
    order: usize,
    cfg: &EvalConfig,
) -> Result<IndependenceReport> {
    if sigmas.len() < 2 {
        return Err(Error::Domain("independence report needs at least two sigmas".into()));
    }
    let rule = gauss_legendre_rule(order, interval)?;
    let fs: Vec<SampledFunction> =
        sigmas.iter().map(|&s| SampledFunction::generalized_hardy(s, *cfg)).collect();
    let gram = gram_matrix(&fs, &rule)?;
    let correlation = gram.correlation();
    let eigenvalues = correlation.eigenvalues();
    let mut pairs = Vec::new();
    for i in 0..sigmas.len() {
        for j in i + 1..sigmas.len() {
            pairs.push(PairCorrelation {
                sigma_i: sigmas[i],
                sigma_j: sigmas[j],
                correlation: correlation.entries[i][j],
            });
        }
    }
    Ok(IndependenceReport {
        sigmas: sigmas.to_vec(),
        interval,
        order,
        correlation_determinant: correlation.determinant(),
        min_eigenvalue: eigenvalues[0],
        eigenvalues,
        gram,
        correlation,
        pairs,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;
    use proptest::prelude::*;
    use std::f64::consts::PI;

    fn iv(a: f64, b: f64) -> Interval {
        Interval::new(a, b).unwrap()
    }

    #[test]
    fn interval_validation() {
        assert!(Interval::new(1.0, 1.0).is_err());
        assert!(Interval::new(2.0, 1.0).is_err());
        assert!(Interval::new(0.0, f64::INFINITY).is_err());
    }

    #[test]
    fn midpoint_rule() {
        let r = gauss_legendre_rule(1, iv(0.0, 2.0)).unwrap();
        assert_eq!(r.nodes, vec![1.0]);
        assert_eq!(r.weights, vec![2.0]);
    }

    #[test]
    fn two_point_rule_is_cubic_exact() {
        let r = gauss_legendre_rule(2, iv(0.0, 1.0)).unwrap();
        assert_abs_diff_eq!(r.integrate(|x| x * x * x), 0.25, epsilon = 1e-15);
    }

    #[test]
    fn weight_sum() {
        let r = gauss_legendre_rule(64, iv(-1.0, 1.0)).unwrap();
        assert_abs_diff_eq!(r.weights.iter().sum::<f64>(), 2.0, epsilon = 1e-14);
        let r = gauss_legendre_rule(4096, iv(10.0, 50.0)).unwrap();
        assert_abs_diff_eq!(r.weights.iter().sum::<f64>(), 40.0, epsilon = 1e-11);
        assert!(r.weights.iter().all(|&w| w > 0.0));
    }

    #[test]
    fn order_bounds() {
        assert!(matches!(gauss_legendre_rule(0, iv(0.0, 1.0)), Err(Error::QuadratureOrder(0))));
        assert!(gauss_legendre_rule(4097, iv(0.0, 1.0)).is_err());
    }

    #[test]
    fn golub_welsch_weights_agree_with_derivative_formula() {
        let (x, w, gw) = reference_rule(40).unwrap();
        for i in 0..40 {
            assert!((w[i] - gw[i]).abs() < 1e-13, "i={i} {} {}", w[i], gw[i]);
            let (p, dp) = legendre_with_derivative(40, x[i]);
            assert!(p.abs() < 1e-14 * dp.abs());
        }
    }

    #[test]
    fn known_five_point_nodes() {
        let (x, w, _) = reference_rule(5).unwrap();
        let outer = (5.0 + 2.0 * (10.0f64 / 7.0).sqrt()).sqrt() / 3.0;
        assert_abs_diff_eq!(x[4], outer, epsilon = 1e-15);
        assert_abs_diff_eq!(w[2], 128.0 / 225.0, epsilon = 1e-15);
    }

    #[test]
    fn sin_cos_orthogonal() {
        let r = gauss_legendre_rule(64, iv(-PI, PI)).unwrap();
        let ip = inner_product(&SampledFunction::new("sin", f64::sin), &SampledFunction::new("cos", f64::cos), &r).unwrap();
        assert!(ip.abs() < 1e-12);
        let one = SampledFunction::new("1", |_| 1.0);
        assert_abs_diff_eq!(inner_product(&one, &one, &gauss_legendre_rule(3, iv(0.0, 2.0)).unwrap()).unwrap(), 2.0, epsilon = 1e-15);
    }

    #[test]
    fn norms() {
        let one = SampledFunction::new("1", |_| 1.0);
        assert_abs_diff_eq!(norm(&one, &gauss_legendre_rule(4, iv(0.0, 4.0)).unwrap()).unwrap(), 2.0, epsilon = 1e-14);
        let x = SampledFunction::new("x", |x| x);
        assert_abs_diff_eq!(norm(&x, &gauss_legendre_rule(4, iv(0.0, 1.0)).unwrap()).unwrap(), 1.0 / 3f64.sqrt(), epsilon = 1e-15);
    }

    #[test]
    fn norm_homogeneity_on_hardy() {
        let r = gauss_legendre_rule(128, iv(10.0, 20.0)).unwrap();
        let z = SampledFunction::generalized_hardy(0.5, EvalConfig::default());
        let n1 = norm(&z, &r).unwrap();
        let n3 = norm(&z.scaled(-3.0), &r).unwrap();
        assert!((n3 - 3.0 * n1).abs() < 1e-12 * n3);
    }

    #[test]
    fn evaluation_failure_names_node() {
        let r = gauss_legendre_rule(4, iv(0.0, 1.0)).unwrap();
        let bad = SampledFunction::new("bad", |x| if x > 0.5 { f64::NAN } else { x });
        match inner_product(&bad, &bad, &r) {
            Err(Error::Evaluation { label, at }) => {
                assert_eq!(label, "bad");
                assert!(at > 0.5);
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn off_critical_inner_product_converges() {
        let cfg = EvalConfig::default();
        let f = SampledFunction::generalized_hardy(0.3, cfg);
        let g = SampledFunction::generalized_hardy(0.7, cfg);
        let a = inner_product(&f, &g, &gauss_legendre_rule(256, iv(10.0, 20.0)).unwrap()).unwrap();
        let b = inner_product(&f, &g, &gauss_legendre_rule(512, iv(10.0, 20.0)).unwrap()).unwrap();
        assert!(a.is_finite());
        assert!((a - b).abs() < 1e-8, "{a} {b}");
    }

    #[test]
    fn gram_examples() {
        let r = gauss_legendre_rule(64, iv(0.0, 2.0 * PI)).unwrap();
        let sin = SampledFunction::new("sin", f64::sin);
        let cos = SampledFunction::new("cos", f64::cos);
        let g = gram_matrix(std::slice::from_ref(&sin), &r).unwrap();
        assert_eq!(g.dim(), 1);
        assert_abs_diff_eq!(g.entries[0][0], norm(&sin, &r).unwrap().powi(2), epsilon = 1e-14);

        let g = gram_matrix(&[sin.clone(), cos], &r).unwrap();
        assert_abs_diff_eq!(g.entries[0][0], PI, epsilon = 1e-10);
        assert_abs_diff_eq!(g.entries[1][1], PI, epsilon = 1e-10);
        assert!(g.entries[0][1].abs() < 1e-10);

        let f = SampledFunction::new("x^2+1", |x| x * x + 1.0);
        let g = gram_matrix(&[f.clone(), f.scaled(2.0)], &r).unwrap();
        let scale = g.entries[0][0] * g.entries[1][1];
        assert!(g.determinant().abs() < 1e-10 * scale);
        assert!(gram_matrix(&[], &r).is_err());
    }

    #[test]
    fn gram_schmidt_monomials_give_legendre() {
        let r = gauss_legendre_rule(8, iv(-1.0, 1.0)).unwrap();
        let fs = [
            SampledFunction::new("1", |_| 1.0),
            SampledFunction::new("x", |x| x),
            SampledFunction::new("x2", |x| x * x),
        ];
        let basis = gram_schmidt_basis(&fs, &r, DEFAULT_GS_TOL).unwrap();
        // g3 = x^2 - 1/3 exactly (monic P2 direction)
        let c = &basis.coefficients[2];
        assert_abs_diff_eq!(c[0], -1.0 / 3.0, epsilon = 1e-14);
        assert_abs_diff_eq!(c[1], 0.0, epsilon = 1e-14);
        assert_abs_diff_eq!(c[2], 1.0, epsilon = 1e-14);
        for x in [-0.9, -0.2, 0.4, 1.0] {
            assert_abs_diff_eq!(basis.functions[2].eval(x), x * x - 1.0 / 3.0, epsilon = 1e-14);
        }
    }

    #[test]
    fn gram_schmidt_keeps_orthogonal_input() {
        let r = gauss_legendre_rule(64, iv(0.0, 2.0 * PI)).unwrap();
        let fs = [SampledFunction::new("sin", f64::sin), SampledFunction::new("cos", f64::cos)];
        let out = gram_schmidt(&fs, &r, DEFAULT_GS_TOL).unwrap();
        for x in [0.1, 1.0, 4.0] {
            assert_eq!(out[0].eval(x), x.sin());
            assert!((out[1].eval(x) - x.cos()).abs() < 1e-10);
        }
    }

    #[test]
    fn gram_schmidt_dependence_error() {
        let r = gauss_legendre_rule(16, iv(0.0, 1.0)).unwrap();
        let f = SampledFunction::new("f", |x| x.exp());
        let h = SampledFunction::new("h", |x| x);
        match gram_schmidt(&[h, f.clone(), f.scaled(2.0)], &r, DEFAULT_GS_TOL) {
            Err(Error::LinearDependence { index, .. }) => assert_eq!(index, 2),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn gram_schmidt_on_hardy_family() {
        let cfg = EvalConfig::default();
        let r = gauss_legendre_rule(256, iv(10.0, 50.0)).unwrap();
        let fs: Vec<_> = [0.5, 0.3, 0.4].iter().map(|&s| SampledFunction::generalized_hardy(s, cfg)).collect();
        let out = gram_schmidt(&fs, &r, DEFAULT_GS_TOL).unwrap();
        for &t in &r.nodes {
            assert_eq!(out[0].eval(t).to_bits(), fs[0].eval(t).to_bits());
        }
        let g = gram_matrix(&out, &r).unwrap();
        assert!(g.max_normalized_off_diagonal() < 1e-10, "{}", g.max_normalized_off_diagonal());
    }

    #[test]
    fn independence_identical_sigmas() {
        let rep = independence_report(&[0.5, 0.5], iv(10.0, 20.0), 64, &EvalConfig::default()).unwrap();
        assert_abs_diff_eq!(rep.pairs[0].correlation, 1.0, epsilon = 1e-14);
        assert!(rep.correlation_determinant.abs() < 1e-14);
    }

    #[test]
    fn independence_off_line_pairs() {
        let cfg = EvalConfig::default();
        let rep = independence_report(&[0.3, 0.7], iv(10.0, 50.0), 256, &cfg).unwrap();
        let c = rep.pairs[0].correlation;
        assert!(c > -1.0 && c < 1.0);
        let rep = independence_report(&[0.3, 0.6], iv(10.0, 50.0), 256, &cfg).unwrap();
        assert!(rep.correlation_determinant > 0.0);
        assert!(rep.min_eigenvalue > 0.0);
        assert!(independence_report(&[0.3], iv(10.0, 50.0), 64, &cfg).is_err());
    }

    #[test]
    fn oscillation_order_heuristic() {
        let o = oscillation_aware_order(&iv(10.0, 50.0));
        assert!(o as f64 >= 4.0 * 40.0 * theta_derivative_unchecked(50.0));
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        #[test]
        fn quadrature_exact_for_polynomials(order in 1usize..40, coeffs in prop::collection::vec(-1.0f64..1.0, 1..80), a in -5.0f64..5.0, len in 0.1f64..4.0) {
            let deg = (coeffs.len() - 1).min(2 * order - 1);
            let c = &coeffs[..=deg];
            let rule = gauss_legendre_rule(order, iv(a, a + len)).unwrap();
            let q = rule.integrate(|x| c.iter().rev().fold(0.0, |acc, &ck| acc * x + ck));
            let antider = |x: f64| c.iter().enumerate().rev().fold(0.0, |acc, (k, &ck)| acc * x + ck / (k as f64 + 1.0)) * x;
            let exact = antider(a + len) - antider(a);
            let scale = c.iter().enumerate().map(|(k, ck)| ck.abs() * (a.abs() + len).powi(k as i32 + 1)).sum::<f64>();
            prop_assert!((q - exact).abs() <= 1e-10 * scale.max(1e-300) + 1e-14);
        }

        #[test]
        fn inner_product_symmetric_bilinear(p in -3.0f64..3.0, q in -3.0f64..3.0, w1 in 0.1f64..5.0, w2 in 0.1f64..5.0) {
            let rule = gauss_legendre_rule(48, iv(0.0, 3.0)).unwrap();
            let f = SampledFunction::new("f", move |x| (w1 * x).sin() + 0.3);
            let g = SampledFunction::new("g", move |x| (w2 * x).cos() * x);
            let h = SampledFunction::new("h", |x| (-x).exp());
            let fg = inner_product(&f, &g, &rule).unwrap();
            let gf = inner_product(&g, &f, &rule).unwrap();
            prop_assert!((fg - gf).abs() <= 1e-12 * fg.abs().max(1.0));
            let combo = SampledFunction::linear_combination("pf+qh", &[(p, f.clone()), (q, h.clone())]);
            let lhs = inner_product(&combo, &g, &rule).unwrap();
            let rhs = p * fg + q * inner_product(&h, &g, &rule).unwrap();
            prop_assert!((lhs - rhs).abs() <= 1e-12 * (p.abs() + q.abs()).max(1.0) * 10.0);
            let nf = norm(&f, &rule).unwrap();
            let ng = norm(&g, &rule).unwrap();
            prop_assert!(fg * fg <= (1.0 + 1e-10) * nf * nf * ng * ng);
        }
    }
}
