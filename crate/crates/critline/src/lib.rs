//! Numerics for the Riemann zeta function on the critical line.
//!
//! The crate locates nontrivial zeros 1/2 + i t_n, evaluates the
//! Riemann-Siegel theta function and the argument S(t) = arg zeta(1/2 + it),
//! and checks three empirical statements connecting them:
//!
//! * at every zero, theta(t_n) + S(t_n) = (n - 3/2) pi exactly;
//! * S(t_n) is reproduced (up to the sign of theta) by a closed-form
//!   expression built from the fractional part of theta/pi and the
//!   approximate inverse Gram count;
//! * frac(theta/pi) + S/pi takes values in {-1, 0, 1} at every
//!   non-zero abscissa.
//!
//! Everything is plain f64. Accuracy claims are enforced by error
//! estimates carried along with each evaluation; operations that cannot
//! meet their budget return errors instead of degraded values.
//!
//! The modules layer strictly bottom-up: [`special`] (log-gamma,
//! Lambert W, signed fractional part), [`theta`] (theta and its
//! Stirling-scale approximation), [`zline`] (zeta on the line, Hardy Z,
//! S(t) and its two-sided limit at zeros), [`gram`] (Gram points),
//! [`zeros`] (zero location, verification, counting).

pub mod gram;
pub mod special;
pub mod theta;
pub mod zeros;
pub mod zline;

pub use num_complex::Complex64;

pub use gram::{classify_gram, gram_approx, gram_exact, gram_inverse_approx, GramError, GramRecord};
pub use special::{frac_signed, lambert_w0, log_gamma, EvalConfig, SpecialError};
pub use theta::{theta, theta_approx, theta_approx_inv, theta_sign, ThetaError, TWO_PI_E};
pub use zeros::{
    count_n0, count_riemann_von_mangoldt, find_zero, s_n_formula, solve_asymptotic, t_cap,
    verify_arg_conjecture, verify_arg_conjecture_with, verify_exact_equation,
    verify_exact_equation_with, verify_membership, ConjectureKind, ConjectureReport, Failure,
    Histogram, ScanConfig, Variant, ZeroRecord, ZeroScanner, ZerosError, ARG_CONJECTURE_TOL,
    DEFAULT_MAX_T, EXACT_EQUATION_TOL, MEMBERSHIP_TOL,
};
pub use zline::{
    hardy_z, s_arg, s_arg_at_zero, zeta_euler_maclaurin, zeta_half_line, ArgAtZero, ArgValue,
    LadderRung, ZetaPoint, ZlineError, DEFAULT_EPS_LADDER,
};
