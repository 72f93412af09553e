//! The Riemann-Siegel theta function, its large-t approximation, and the
//! inverse of that approximation.
//!
//! theta(t) = Im log gamma(1/4 + it/2) - t ln(pi) / 2, with the
//! continuous log-gamma branch from [`crate::special`]. theta is the
//! phase that makes e^{i theta} zeta(1/2 + it) real, and theta(g_n)
//! hits (n - 1) pi exactly at the Gram points.
//!
//! The approximation theta_approx(t) = (t/2) ln(t / (2 pi e)) - pi/8
//! drops the O(1/t) tail of the Stirling expansion; its error is about
//! 1/(48 t). It decreases to its minimum -9 pi/8 at t = 2 pi, then
//! increases through -pi/8 at t = 2 pi e. The increasing branch inverts
//! in closed form through Lambert W:
//! t = (pi + 8x) / (4 W((pi + 8x) / (8 pi e))),
//! whose W argument sweeps exactly [-1/e, infinity) as x sweeps
//! [-9 pi/8, infinity).

use crate::special::{self, SpecialError};
use num_complex::Complex64;
use std::f64::consts::PI;
use thiserror::Error;

/// 2 pi e, where `theta_approx` crosses -pi/8 on its increasing branch.
pub const TWO_PI_E: f64 = 17.079_468_445_347_134;

/// ln(pi).
const LN_PI: f64 = 1.144_729_885_849_400_2;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum ThetaError {
    /// theta(t) vanished exactly, so its sign is undefined.
    #[error("theta sign undefined: theta({t}) = 0")]
    SignUndefined { t: f64 },
    /// Argument below -9 pi/8, under the minimum of theta_approx.
    #[error("theta_approx_inv argument {0} below the branch minimum -9 pi/8")]
    BelowBranchMinimum(f64),
    #[error(transparent)]
    Special(#[from] SpecialError),
}

/// Riemann-Siegel theta. Requires finite t >= 0.
pub fn theta(t: f64) -> f64 {
    assert!(t.is_finite() && t >= 0.0, "theta requires finite t >= 0, got {t}");
    let lg = special::log_gamma(Complex64::new(0.25, 0.5 * t))
        .expect("log_gamma has no pole on Re z = 1/4");
    lg.im - 0.5 * t * LN_PI
}

/// Stirling-scale approximation (t/2) ln(t / (2 pi e)) - pi/8.
/// Requires finite t > 0.
pub fn theta_approx(t: f64) -> f64 {
    assert!(t.is_finite() && t > 0.0, "theta_approx requires finite t > 0, got {t}");
    0.5 * t * (t / TWO_PI_E).ln() - PI / 8.0
}

/// Inverse of [`theta_approx`] on its increasing branch t >= 2 pi.
///
/// Defined for x >= -9 pi/8 (the minimum value of theta_approx, taken
/// at t = 2 pi, where the Lambert argument hits its own branch point
/// -1/e). The formula degenerates to 0/0 at x = -pi/8; that removable
/// singularity is resolved exactly to 2 pi e. Arguments below -9 pi/8
/// are rejected.
pub fn theta_approx_inv(x: f64) -> Result<f64, ThetaError> {
    if !x.is_finite() {
        return Err(ThetaError::BelowBranchMinimum(x));
    }
    let u = PI + 8.0 * x;
    if u == 0.0 {
        return Ok(TWO_PI_E);
    }
    let w_arg = u / (8.0 * PI * std::f64::consts::E);
    // allow a sliver of rounding slack at the branch point before
    // declaring the argument out of range
    if w_arg < special::NEG_INV_E * (1.0 + 1e-9) {
        return Err(ThetaError::BelowBranchMinimum(x));
    }
    let w = special::lambert_w0(w_arg.max(special::NEG_INV_E))?;
    Ok(u / (4.0 * w))
}

/// Sign of theta(t): -1 or +1, or an error if theta(t) is exactly zero
/// (which happens only at the first Gram point, up to rounding).
pub fn theta_sign(t: f64) -> Result<f64, ThetaError> {
    let v = theta(t);
    if v == 0.0 {
        return Err(ThetaError::SignUndefined { t });
    }
    Ok(if v < 0.0 { -1.0 } else { 1.0 })
}
