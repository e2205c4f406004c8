//! Shared inputs for the benchmarks.

use hardy_core::ComplexValue;

/// Heights on the critical line spanning the ranges the tools are used at.
pub const HEIGHTS: [f64; 4] = [30.0, 300.0, 3000.0, 7005.0];

pub fn critical_point(t: f64) -> ComplexValue {
    ComplexValue::new(0.5, t)
}
