//! Numerics for the Hardy Z function and its generalization Z(sigma, t) off the
//! critical line.
//!
//! The crate is organised bottom-up:
//!
//! * [`specialfn`]: complex log-gamma, the factor chi(s), Riemann-Siegel theta.
//! * [`zetaeval`]: Euler-Maclaurin zeta and Hurwitz zeta, the Riemann-Siegel
//!   formula, generalized Hardy values, Dirichlet spirals, the
//!   Davenport-Heilbronn function.
//! * [`hilbert`]: Gauss-Legendre rules, inner products, Gram matrices and
//!   Gram-Schmidt over families of sampled functions.
//! * [`zerofinder`]: sign scans, Brent refinement, Lehmer pairs and
//!   argument-principle zero counts.
//! * [`polyzero`]: Legendre projection and colleague-matrix zeros.
//! * [`report`] and [`plot`]: the verification report and SVG/CSV emitters.

pub mod error;
pub mod format;
pub mod hilbert;
pub mod plot;
pub mod polyzero;
pub mod report;
pub mod specialfn;
pub mod zerofinder;
pub mod zetaeval;

pub use error::{Error, Result};
pub use hilbert::{
    gauss_legendre_rule, gram_matrix, gram_schmidt, independence_report, inner_product, norm,
    GramMatrix, IndependenceReport, Interval, QuadratureRule, SampledFunction,
};
pub use polyzero::{
    poly_real_zeros, project, project_monomial, zero_convergence_study, Basis, PolynomialRealCoeffs,
    Projection, RealZeros, ZeroComparison,
};
pub use plot::{emit_spiral_svg, write_spiral_csv, SvgStyle};
pub use report::{run_report, ClaimStatus, Report, ReportEntry, RunConfig};
pub use specialfn::{chi, log_gamma, theta, theta_derivative, ComplexValue, ThetaMode};
pub use zerofinder::{
    argument_principle_count, critical_line_zeros, find_zeros, lehmer_scan, refine_zero, scan_sign_changes, zero_count_estimate,
    LehmerPair, RectBox, ZeroRecord,
};
pub use zetaeval::{
    davenport_heilbronn, dirichlet_partial_sums, generalized_hardy, hardy_z_rs, hurwitz_zeta,
    residue_identity_residual, zeta_em, EvalConfig, GeneralizedHardyValue, SpiralPath,
};
