use std::path::PathBuf;

use thiserror::Error;

/// Errors raised by the numerical routines in this crate.
#[derive(Debug, Error)]
pub enum Error {
    #[error("non-finite argument {what}: ({re}, {im})")]
    NonFinite { what: &'static str, re: f64, im: f64 },

    #[error("gamma function has a pole at z = {0}")]
    GammaPole(f64),

    #[error("chi factor denominator cos(pi s/2) vanishes at s = {re}{im:+}i")]
    DenominatorZero { re: f64, im: f64 },

    #[error("chi factor overflows double range at s = {re}{im:+}i")]
    Overflow { re: f64, im: f64 },

    #[error("zeta function pole at s = 1")]
    ZetaPole,

    #[error("domain error: {0}")]
    Domain(String),

    #[error("invalid interval ({a}, {b}): need finite a < b")]
    InvalidInterval { a: f64, b: f64 },

    #[error("quadrature order {0} outside 1..=4096")]
    QuadratureOrder(usize),

    #[error("polynomial degree {0} outside the supported range")]
    Degree(usize),

    #[error("evaluation of `{label}` failed at t = {at}")]
    Evaluation { label: String, at: f64 },

    #[error("function {index} (`{label}`) is numerically dependent on its predecessors (relative residual {residual:.3e})")]
    LinearDependence { index: usize, label: String, residual: f64 },

    #[error("eigenvalue solver failed: {0}")]
    EigenSolver(String),

    #[error("zero count mismatch at degree {degree}: function has {function}, polynomial has {polynomial}")]
    ZeroCountMismatch { degree: usize, function: usize, polynomial: usize },

    #[error("bracket ({a}, {b}) lost its sign change (f(a) = {fa:e}, f(b) = {fb:e})")]
    LostBracket { a: f64, b: f64, fa: f64, fb: f64 },

    #[error("contour passes within {min_modulus:e} of a zero near {re}{im:+}i")]
    ContourTooClose { min_modulus: f64, re: f64, im: f64 },

    #[error("winding number did not converge (accumulated {turns} turns)")]
    WindingNotInteger { turns: f64 },

    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
}

pub type Result<T> = std::result::Result<T, Error>;
