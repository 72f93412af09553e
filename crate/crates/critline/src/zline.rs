//! zeta on the critical line, the Hardy Z function, and the argument
//! S(t) = arg zeta(1/2 + it), including its two-sided limit at zeros.
//!
//! zeta is evaluated by Euler-Maclaurin summation with N ~ 2t initial
//! terms and eight Bernoulli corrections, which keeps the truncation
//! error far below the 1e-10 accuracy budget for t up to 1e4. Every
//! evaluation carries an error estimate; a point that cannot meet the
//! budget is an error, never a silently degraded value.
//!
//! S(t) is the principal argument in (-pi, pi]. At a zero the argument
//! itself is undefined, but the one-sided limits exist and differ by
//! exactly pi (the continuous argument jumps up by pi across a simple
//! zero). [`s_arg_at_zero`] evaluates both sides over a ladder of
//! shrinking offsets and returns the half-sum of the limits, the value
//! the exact-equation and argument-formula verifiers consume. When the
//! principal window cuts between the two one-sided values (which
//! happens at zeros violating Gram's law, where |S| > pi/2), the pair
//! is first rejoined onto a single branch; see the design note on
//! `rejoin_branch_pair`.

use crate::theta::theta;
use num_complex::Complex64;
use std::f64::consts::PI;
use thiserror::Error;

/// Default offset ladder for the two-sided limit at a zero.
pub const DEFAULT_EPS_LADDER: [f64; 3] = [1e-3, 1e-4, 1e-5];

/// Absolute accuracy budget for a single zeta evaluation.
pub const ACCURACY_BUDGET: f64 = 1e-10;

/// |zeta| below this is treated as "at a zero": the argument is refused.
pub const ZERO_MODULUS_GUARD: f64 = 1e-10;

/// Half-sums of consecutive ladder rungs must agree to this before the
/// extrapolated value is trusted.
const LADDER_SPREAD_TOL: f64 = 1e-4;

/// B_{2k} / (2k)! for k = 1..=8, the Euler-Maclaurin correction weights.
const EM_WEIGHTS: [f64; 8] = [
    8.333_333_333_333_333e-2,
    -1.388_888_888_888_889e-3,
    3.306_878_306_878_307e-5,
    -8.267_195_767_195_768e-7,
    2.087_675_698_786_81e-8,
    -5.284_190_138_687_493e-10,
    1.338_253_653_068_468e-11,
    -3.389_680_296_322_583e-13,
];

/// B_18 / 18!, the first omitted weight, used for the error estimate.
const EM_NEXT_WEIGHT: f64 = 8.586_062_056_277_845e-15;

/// One evaluation of zeta(1/2 + it) with the derived quantities that
/// ride along: the Hardy Z value and the accuracy estimate.
///
/// Invariant: `z` is Re(e^{i theta(t)} zeta) and the discarded
/// imaginary part is below 1e-8 in magnitude.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ZetaPoint {
    pub t: f64,
    pub zeta: Complex64,
    pub z: f64,
    pub abs_err_est: f64,
}

/// A value of S(t), tagged with whether it came from the two-sided
/// limit at a zero or from a plain pointwise argument.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ArgValue {
    pub value: f64,
    pub at_zero: bool,
}

/// One rung of the offset ladder: the principal one-sided arguments at
/// t +- eps and their half-sum and half-difference.
///
/// `half_sum` is branch-rejoined (see module docs) and is the quantity
/// that converges to the limit mean; `half_diff` is left raw as a
/// diagnostic, close to +pi/2 at an ordinary zero and -pi/2 when the
/// principal window wrapped one side.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LadderRung {
    pub eps: f64,
    pub s_plus: f64,
    pub s_minus: f64,
    pub half_sum: f64,
    pub half_diff: f64,
}

/// Result of the two-sided limit: the extrapolated S value at the zero,
/// an error estimate (the spread of the last two rungs, a deliberate
/// overestimate), and the rungs themselves for diagnostics.
#[derive(Debug, Clone, PartialEq)]
pub struct ArgAtZero {
    pub value: ArgValue,
    pub err_est: f64,
    pub rungs: Vec<LadderRung>,
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum ZlineError {
    /// The evaluation could not certify the accuracy budget.
    #[error("zeta({t}) error estimate {est:e} exceeds the accuracy budget")]
    AccuracyBudget { t: f64, est: f64 },
    /// arg zeta was requested where |zeta| is numerically zero.
    #[error("argument undefined at t = {t}: |zeta| = {modulus:e}")]
    ArgUndefined { t: f64, modulus: f64 },
    /// The offset ladder is malformed.
    #[error("bad epsilon ladder: {0}")]
    BadLadder(&'static str),
    /// The abscissa does not look like a simple zero: the one-sided
    /// arguments do not jump by pi.
    #[error("no pi jump across t = {t}: half-difference {half_diff}")]
    NotBracketingZero { t: f64, half_diff: f64 },
    /// Successive ladder rungs disagree too much.
    #[error("ladder not converging at t = {t}: spread {spread:e}")]
    LadderNotConverging { t: f64, spread: f64 },
}

/// Euler-Maclaurin evaluation of zeta(s) for s off the pole with
/// 0 < Re s <= 2. Returns the value and an absolute error estimate
/// (truncation plus accumulated rounding).
pub fn zeta_euler_maclaurin(s: Complex64) -> (Complex64, f64) {
    assert!(
        s.re > 0.0 && s.re <= 2.0 && (s - Complex64::new(1.0, 0.0)).norm() > 1e-6,
        "zeta_euler_maclaurin requires 0 < Re s <= 2 away from s = 1, got {s}"
    );
    let n = (2.0 * s.im.abs()).ceil().max(20.0);
    let n_usize = n as usize;

    let mut sum = Complex64::new(0.0, 0.0);
    for k in 1..n_usize {
        sum += (-s * (k as f64).ln()).exp();
    }
    let n_pow_ms = (-s * n.ln()).exp(); // N^{-s}
    sum += 0.5 * n_pow_ms;
    sum += n_pow_ms * n / (s - 1.0); // N^{1-s} / (s - 1)

    // Bernoulli tail: sum_k B_{2k}/(2k)! * s(s+1)...(s+2k-2) * N^{1-s-2k}
    let mut poch = s;
    let mut n_pow = n_pow_ms / n; // N^{-s-1}
    let inv_n2 = 1.0 / (n * n);
    for (i, w) in EM_WEIGHTS.iter().enumerate() {
        sum += *w * poch * n_pow;
        let k2 = 2.0 * (i as f64 + 1.0);
        poch *= (s + (k2 - 1.0)) * (s + k2);
        n_pow *= inv_n2;
    }

    // First omitted term, inflated by the standard |s + 2J + 1| / (sigma
    // + 2J + 1) factor, plus a rounding allowance for the partial sum.
    let inflation = (s + 17.0).norm() / (s.re + 17.0);
    let trunc = EM_NEXT_WEIGHT * poch.norm() * n_pow.norm() * inflation;
    let rounding = 4.0 * n.sqrt() * f64::EPSILON;
    (sum, trunc + rounding)
}

/// zeta at 1/2 + it together with Hardy Z and the error estimate.
/// Fails if the estimate exceeds [`ACCURACY_BUDGET`].
pub fn zeta_half_line(t: f64) -> Result<ZetaPoint, ZlineError> {
    assert!(t.is_finite() && t >= 0.0, "zeta_half_line requires finite t >= 0, got {t}");
    let (zeta, est) = zeta_euler_maclaurin(Complex64::new(0.5, t));
    if !(est <= ACCURACY_BUDGET) {
        return Err(ZlineError::AccuracyBudget { t, est });
    }
    let rotated = (Complex64::new(0.0, theta(t))).exp() * zeta;
    assert!(
        rotated.im.abs() <= 1e-8,
        "rotation identity violated at t = {t}: Im = {:e}",
        rotated.im
    );
    Ok(ZetaPoint { t, zeta, z: rotated.re, abs_err_est: est })
}

/// Hardy's Z function, real with |Z| = |zeta| on the critical line.
pub fn hardy_z(t: f64) -> Result<f64, ZlineError> {
    Ok(zeta_half_line(t)?.z)
}

/// S(t) = principal argument of zeta(1/2 + it), in (-pi, pi].
/// Refuses abscissas where |zeta| < [`ZERO_MODULUS_GUARD`]; use
/// [`s_arg_at_zero`] there.
pub fn s_arg(t: f64) -> Result<ArgValue, ZlineError> {
    let p = zeta_half_line(t)?;
    let modulus = p.zeta.norm();
    if modulus < ZERO_MODULUS_GUARD {
        return Err(ZlineError::ArgUndefined { t, modulus });
    }
    Ok(ArgValue { value: p.zeta.im.atan2(p.zeta.re), at_zero: false })
}

/// Rejoin a pair of one-sided principal arguments onto one branch.
///
/// At a simple zero the continuous argument jumps by exactly +pi, so
/// the minus-side limit must sit pi below the plus side. When |S| at
/// the zero exceeds pi/2 one of the principal values has wrapped by
/// 2 pi (the pair straddles the branch cut); shifting the minus side by
/// the unique 2 pi multiple restoring the +pi gap undoes the wrap. The
/// half-sum of the rejoined pair is then reduced into (-pi, pi].
fn rejoin_branch_pair(s_plus: f64, s_minus: f64) -> f64 {
    let k = ((s_plus - PI - s_minus) / (2.0 * PI)).round();
    let mut half_sum = 0.5 * (s_plus + s_minus + 2.0 * PI * k);
    while half_sum <= -PI {
        half_sum += 2.0 * PI;
    }
    while half_sum > PI {
        half_sum -= 2.0 * PI;
    }
    half_sum
}

/// Two-sided limit of S at a zero abscissa, by an offset ladder.
///
/// For each eps in `ladder` (strictly decreasing, at least two rungs)
/// the principal arguments at t +- eps are combined into a rejoined
/// half-sum; the half-sum converges quadratically in eps to the mean of
/// the one-sided limits. The last two rungs are Richardson-extrapolated
/// in eps^2. `err_est` is the raw spread of those rungs, which bounds
/// the extrapolation error with two orders of magnitude to spare.
pub fn s_arg_at_zero(t_zero: f64, ladder: &[f64]) -> Result<ArgAtZero, ZlineError> {
    if ladder.len() < 2 {
        return Err(ZlineError::BadLadder("need at least two rungs"));
    }
    if !ladder.iter().all(|e| e.is_finite() && *e > 0.0) {
        return Err(ZlineError::BadLadder("offsets must be finite and positive"));
    }
    if !ladder.windows(2).all(|w| w[0] > w[1]) {
        return Err(ZlineError::BadLadder("offsets must be strictly decreasing"));
    }
    if !(t_zero.is_finite() && t_zero > ladder[0]) {
        return Err(ZlineError::BadLadder("largest offset must stay below the abscissa"));
    }

    let mut rungs = Vec::with_capacity(ladder.len());
    for &eps in ladder {
        let s_plus = s_arg(t_zero + eps)?.value;
        let s_minus = s_arg(t_zero - eps)?.value;
        rungs.push(LadderRung {
            eps,
            s_plus,
            s_minus,
            half_sum: rejoin_branch_pair(s_plus, s_minus),
            half_diff: 0.5 * (s_plus - s_minus),
        });
    }

    let last = rungs[rungs.len() - 1];
    if (last.half_diff.abs() - 0.5 * PI).abs() > 0.3 {
        return Err(ZlineError::NotBracketingZero { t: t_zero, half_diff: last.half_diff });
    }
    let prev = rungs[rungs.len() - 2];
    let spread = (last.half_sum - prev.half_sum).abs();
    if spread > LADDER_SPREAD_TOL {
        return Err(ZlineError::LadderNotConverging { t: t_zero, spread });
    }
    // Richardson in eps^2: the rejoined half-sum is limit + c eps^2 + ...
    let (ea2, eb2) = (prev.eps * prev.eps, last.eps * last.eps);
    let value = (ea2 * last.half_sum - eb2 * prev.half_sum) / (ea2 - eb2);
    Ok(ArgAtZero { value: ArgValue { value, at_zero: true }, err_est: spread, rungs })
}
