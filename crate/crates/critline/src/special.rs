//! Scalar special functions used by every higher layer: a continuous
//! complex log-gamma, the principal branch of the Lambert W function,
//! and a sign-preserving fractional part.

use num_complex::Complex64;
use thiserror::Error;

/// ln(2 pi).
pub const LN_2PI: f64 = 1.837_877_066_409_345_5;

/// -1/e, the left edge of the domain of the principal Lambert W branch.
pub const NEG_INV_E: f64 = -0.367_879_441_171_442_33;

/// Stirling series coefficients B_{2k} / ((2k)(2k-1)) for k = 1..=10.
/// Ten terms keep the truncation error below f64 resolution once
/// |z| >= 10, which the argument shift in `log_gamma` guarantees.
const STIRLING: [f64; 10] = [
    1.0 / 12.0,
    -1.0 / 360.0,
    1.0 / 1260.0,
    -1.0 / 1680.0,
    1.0 / 1188.0,
    -691.0 / 360_360.0,
    1.0 / 156.0,
    -3617.0 / 122_400.0,
    43_867.0 / 244_188.0,
    -174_611.0 / 125_400.0,
];

/// Failures from this module's iterative or pole-sensitive routines.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum SpecialError {
    /// log-gamma was asked for a value at a pole (z = 0, -1, -2, ...).
    #[error("log_gamma pole at z = {0}")]
    LogGammaPole(f64),
    /// Lambert W argument below -1/e, where the principal branch ends.
    #[error("lambert_w0 argument {0} lies below -1/e")]
    LambertDomain(f64),
    /// Halley iteration failed to meet the residual tolerance.
    #[error("lambert_w0 residual {residual:e} above tolerance after {iters} iterations")]
    LambertNoConvergence { iters: u32, residual: f64 },
    /// Rejected configuration.
    #[error("invalid EvalConfig: {0}")]
    InvalidConfig(&'static str),
}

/// Tolerance and iteration budget for the iterative solvers.
///
/// `target_abs_tol` is an absolute tolerance on the defining residual,
/// scaled by max(1, |x|) so that large arguments are not held to an
/// impossible absolute standard.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EvalConfig {
    pub target_abs_tol: f64,
    pub max_iter: u32,
}

impl Default for EvalConfig {
    fn default() -> Self {
        Self { target_abs_tol: 1e-14, max_iter: 64 }
    }
}

impl EvalConfig {
    pub fn new(target_abs_tol: f64, max_iter: u32) -> Result<Self, SpecialError> {
        if !(target_abs_tol > 0.0) || !target_abs_tol.is_finite() {
            return Err(SpecialError::InvalidConfig("target_abs_tol must be finite and > 0"));
        }
        if max_iter == 0 {
            return Err(SpecialError::InvalidConfig("max_iter must be >= 1"));
        }
        Ok(Self { target_abs_tol, max_iter })
    }
}

/// Continuous logarithm of the gamma function.
///
/// For Re z > 0 this is the analytic branch that is real on the positive
/// real axis; it is NOT the principal logarithm of gamma(z), whose
/// imaginary part would wrap into (-pi, pi]. The distinction matters for
/// the theta function, which needs Im log gamma to grow without jumps.
///
/// Strategy: shift the argument up by the recurrence
/// log gamma(z) = log gamma(z + m) - sum_{j=0}^{m-1} ln(z + j)
/// until |z + m| >= 10, then apply the Stirling asymptotic series. The
/// shift terms use principal ln, which is continuous on Re z > 0, so
/// the assembled branch is continuous there.
pub fn log_gamma(z: Complex64) -> Result<Complex64, SpecialError> {
    if z.im == 0.0 && z.re <= 0.0 && z.re == z.re.floor() {
        return Err(SpecialError::LogGammaPole(z.re));
    }
    let mut w = z;
    let mut shift = Complex64::new(0.0, 0.0);
    while w.norm_sqr() < 100.0 {
        shift += w.ln();
        w += 1.0;
    }
    Ok(stirling_log_gamma(w) - shift)
}

/// Stirling asymptotic series, valid for |z| >= 10 away from the
/// negative real axis.
fn stirling_log_gamma(z: Complex64) -> Complex64 {
    let mut acc = (z - 0.5) * z.ln() - z + 0.5 * LN_2PI;
    let inv = z.inv();
    let inv2 = inv * inv;
    let mut pow = inv;
    for c in STIRLING {
        acc += c * pow;
        pow *= inv2;
    }
    acc
}

/// Principal branch W_0 of the Lambert W function with default settings.
///
/// Solves w e^w = x for x >= -1/e. See [`lambert_w0_with`].
pub fn lambert_w0(x: f64) -> Result<f64, SpecialError> {
    lambert_w0_with(x, &EvalConfig::default())
}

/// Principal Lambert W branch with an explicit tolerance/budget.
///
/// Halley iteration on f(w) = w e^w - x. The seed is ln(1 + x) for
/// x >= 0 and the branch-point series in p = sqrt(2 (1 + e x)) for
/// -1/e < x < 0; both start inside the Halley basin, so convergence is
/// cubic and four or five steps normally suffice. The iteration stops
/// on the residual |w e^w - x| <= tol * max(1, |x|), not on step size,
/// so a returned value always certifies itself.
pub fn lambert_w0_with(x: f64, cfg: &EvalConfig) -> Result<f64, SpecialError> {
    if !x.is_finite() || x < NEG_INV_E {
        return Err(SpecialError::LambertDomain(x));
    }
    if x == NEG_INV_E {
        return Ok(-1.0);
    }
    let tol = cfg.target_abs_tol * x.abs().max(1.0);
    let mut w = if x >= 0.0 {
        x.ln_1p()
    } else {
        let p = (2.0 * (1.0 + std::f64::consts::E * x)).sqrt();
        -1.0 + p - p * p / 3.0 + 11.0 * p * p * p / 72.0
    };
    let mut residual = f64::INFINITY;
    for _ in 0..cfg.max_iter {
        let ew = w.exp();
        let f = w * ew - x;
        residual = f.abs();
        if residual <= tol {
            return Ok(w);
        }
        let wp1 = w + 1.0;
        let denom = ew * wp1 - (w + 2.0) * f / (2.0 * wp1);
        let step = f / denom;
        if !step.is_finite() {
            break;
        }
        w -= step;
    }
    // The loop exhausted its budget; accept only if the last point
    // still certifies.
    let f = w * w.exp() - x;
    if f.abs() <= tol {
        return Ok(w);
    }
    Err(SpecialError::LambertNoConvergence { iters: cfg.max_iter, residual: residual.min(f.abs()) })
}

/// Fractional part that keeps the sign of its argument:
/// x - floor(x) for x >= 0 and x - ceil(x) for x < 0.
///
/// Odd up to the edge case of exact integers (where it returns 0), and
/// equal to `f64::fract`, which truncates toward zero.
pub fn frac_signed(x: f64) -> f64 {
    x.fract()
}

#[cfg(test)]
mod tests {
    use super::*;

    const T1_HALF: f64 = 7.067_362_570_867_347; // t_1 / 2

    #[test]
    fn log_gamma_real_quarter() {
        let v = log_gamma(Complex64::new(0.25, 0.0)).unwrap();
        assert!((v.re - 1.288_022_524_698_077_5).abs() < 1e-13, "re = {}", v.re);
        assert!(v.im.abs() < 1e-15);
    }

    #[test]
    fn log_gamma_at_one_and_two_is_zero() {
        for x in [1.0, 2.0] {
            let v = log_gamma(Complex64::new(x, 0.0)).unwrap();
            assert!(v.norm() < 1e-13, "log_gamma({x}) = {v}");
        }
    }

    #[test]
    fn log_gamma_on_critical_parameter_line() {
        // Reference value computed with 30-digit arithmetic.
        let v = log_gamma(Complex64::new(0.25, T1_HALF)).unwrap();
        assert!((v.re - (-10.671_163_566_259_262)).abs() < 1e-12, "re = {}", v.re);
        assert!((v.im - 6.361_550_902_329_463_5).abs() < 1e-12, "im = {}", v.im);
    }

    #[test]
    fn log_gamma_recurrence() {
        // log gamma(z + 1) = log gamma(z) + ln z on the continuous branch.
        for im in [0.3, 5.0, 40.0, 120.0] {
            let z = Complex64::new(0.25, im);
            let a = log_gamma(z + 1.0).unwrap();
            let b = log_gamma(z).unwrap() + z.ln();
            assert!((a - b).norm() < 1e-11 * a.norm().max(1.0), "z = {z}");
        }
    }

    #[test]
    fn log_gamma_conjugation() {
        for im in [0.5, 7.7, 63.0] {
            let z = Complex64::new(0.25, im);
            let a = log_gamma(z).unwrap();
            let b = log_gamma(z.conj()).unwrap();
            assert!((a - b.conj()).norm() < 1e-12 * a.norm().max(1.0));
        }
    }

    #[test]
    fn log_gamma_pole_rejected() {
        assert!(matches!(
            log_gamma(Complex64::new(0.0, 0.0)),
            Err(SpecialError::LogGammaPole(_))
        ));
        assert!(matches!(
            log_gamma(Complex64::new(-3.0, 0.0)),
            Err(SpecialError::LogGammaPole(_))
        ));
    }

    #[test]
    fn lambert_reference_values() {
        // omega constant and two extreme magnitudes
        assert!((lambert_w0(1.0).unwrap() - 0.567_143_290_409_783_9).abs() < 1e-15);
        assert!((lambert_w0(1e-6).unwrap() - 9.999_990_000_015e-7).abs() < 1e-18);
        assert!((lambert_w0(1e12).unwrap() - 24.435_004_404_934_913).abs() < 1e-12);
    }

    #[test]
    fn lambert_near_branch_point() {
        assert_eq!(lambert_w0(NEG_INV_E).unwrap(), -1.0);
        let x = NEG_INV_E + 1e-9;
        let w = lambert_w0(x).unwrap();
        assert!((w * w.exp() - x).abs() <= 1e-14);
        assert!(w > -1.0 && w < -0.99);
    }

    #[test]
    fn lambert_domain_error() {
        assert!(matches!(lambert_w0(-0.4), Err(SpecialError::LambertDomain(_))));
        assert!(matches!(lambert_w0(f64::NAN), Err(SpecialError::LambertDomain(_))));
    }

    #[test]
    fn lambert_residual_certificate() {
        for &x in &[-0.3, -1e-4, 0.0, 0.5, 3.0, 1e3, 1e9] {
            let w = lambert_w0(x).unwrap();
            assert!((w * w.exp() - x).abs() <= 1e-14 * x.abs().max(1.0), "x = {x}");
        }
    }

    #[test]
    fn eval_config_validation() {
        assert!(EvalConfig::new(1e-12, 10).is_ok());
        assert!(EvalConfig::new(0.0, 10).is_err());
        assert!(EvalConfig::new(1e-12, 0).is_err());
        assert!(EvalConfig::new(f64::NAN, 10).is_err());
    }

    #[test]
    fn frac_signed_examples() {
        assert_eq!(frac_signed(2.75), 0.75);
        assert_eq!(frac_signed(-2.75), -0.75);
        assert_eq!(frac_signed(3.0), 0.0);
        assert_eq!(frac_signed(-3.0), 0.0);
        assert_eq!(frac_signed(0.0), 0.0);
    }

    #[test]
    fn frac_signed_is_odd() {
        for &x in &[0.1, 1.9, 2.5, 1234.567, 1e-9] {
            assert_eq!(frac_signed(-x), -frac_signed(x));
        }
    }
}
