//! Gram points: the abscissas where theta(t) crosses multiples of pi.
//!
//! g(n) is the unique t >= 10 with theta(g(n)) = (n - 1) pi, so g(1) is
//! the classical first Gram point near 17.8456 where theta vanishes.
//! The closed-form proxy gram_approx inverts theta_approx instead of
//! theta; the gap between the two shrinks like 1/(48 t ln t).
//!
//! A Gram point is "bad" when zeta(1/2 + i g(n)) is negative, i.e. the
//! rotation (-1)^{n-1} Z(g(n)) has the wrong sign; bad points mark the
//! places where Gram's law fails locally.

use crate::theta::{theta, theta_approx_inv};
use crate::zline::{zeta_half_line, ZlineError};
use serde::{Deserialize, Serialize};
use std::f64::consts::PI;
use thiserror::Error;

/// Half-width of the initial bisection bracket around the proxy value.
/// The proxy error is below 0.0023 for every n >= 1, so this bracket
/// always straddles unless something is badly wrong upstream.
const BRACKET: f64 = 0.01;

/// One Gram point: index, refined and proxy abscissas, their distance,
/// and the local Gram's-law status.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct GramRecord {
    pub n: u32,
    pub exact: f64,
    pub approx: f64,
    pub delta: f64,
    pub is_bad: bool,
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum GramError {
    /// The root bracket failed to straddle even after widening.
    #[error("could not bracket gram point {n}")]
    Bracket { n: u32 },
    #[error(transparent)]
    Zline(#[from] ZlineError),
}

/// Closed-form Gram point proxy: theta_approx_inv((n - 1) pi), i.e.
/// (8n - 7) pi / (4 W((8n - 7) / (8 e))). Requires n >= 1.
pub fn gram_approx(n: u32) -> f64 {
    assert!(n >= 1, "gram_approx requires n >= 1");
    theta_approx_inv((n as f64 - 1.0) * PI)
        .expect("(n - 1) pi is above the branch minimum for n >= 1")
}

/// Approximate inverse Gram count: t ln(t / (2 pi e)) / (2 pi) + 7/8,
/// which equals theta_approx(t)/pi + 1. Requires finite t > 0.
pub fn gram_inverse_approx(t: f64) -> f64 {
    assert!(t.is_finite() && t > 0.0, "gram_inverse_approx requires finite t > 0, got {t}");
    t * (t / crate::theta::TWO_PI_E).ln() / (2.0 * PI) + 0.875
}

/// Gram point g(n), refined so that |theta(g(n)) - (n - 1) pi| stays
/// within a few units in the last place of theta.
///
/// Bisection from the proxy bracket down to an interval of 1e-12,
/// followed by one Newton step with the asymptotic derivative
/// theta'(t) ~ ln(t / (2 pi)) / 2.
pub fn gram_exact(n: u32) -> Result<f64, GramError> {
    assert!(n >= 1, "gram_exact requires n >= 1");
    let target = (n as f64 - 1.0) * PI;
    let guess = gram_approx(n);
    let mut lo = guess - BRACKET;
    let mut hi = guess + BRACKET;
    let mut f_lo = theta(lo) - target;
    if f_lo == 0.0 {
        return Ok(lo);
    }
    if (f_lo > 0.0) == (theta(hi) - target > 0.0) {
        // widen once; theta is monotone here, so failure is structural
        lo = guess - 5.0 * BRACKET;
        hi = guess + 5.0 * BRACKET;
        f_lo = theta(lo) - target;
        if (f_lo > 0.0) == (theta(hi) - target > 0.0) {
            return Err(GramError::Bracket { n });
        }
    }
    while hi - lo > 1e-12 {
        let mid = 0.5 * (lo + hi);
        let f_mid = theta(mid) - target;
        if f_mid == 0.0 {
            return Ok(mid);
        }
        if (f_mid > 0.0) == (f_lo > 0.0) {
            lo = mid;
            f_lo = f_mid;
        } else {
            hi = mid;
        }
    }
    let mut root = 0.5 * (lo + hi);
    let slope = 0.5 * (root / (2.0 * PI)).ln();
    if slope > 0.0 {
        root -= (theta(root) - target) / slope;
    }
    Ok(root)
}

/// Locate g(n), measure its distance to the proxy, and classify it.
pub fn classify_gram(n: u32) -> Result<GramRecord, GramError> {
    let exact = gram_exact(n)?;
    let approx = gram_approx(n);
    let point = zeta_half_line(exact)?;
    Ok(GramRecord {
        n,
        exact,
        approx,
        delta: (exact - approx).abs(),
        is_bad: point.zeta.re < 0.0,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn approx_reference_values() {
        assert!((gram_approx(1) - 17.847_836_512_849_62).abs() < 1e-12);
        let g2 = gram_approx(2);
        assert!((g2 - 23.171_660_819_240_723).abs() < 1e-11, "got {g2}");
    }

    #[test]
    fn inverse_approx_reference_values() {
        // 30-digit reference evaluations.
        assert!((gram_inverse_approx(20.0) - 1.377_468_730_197_308_1).abs() < 1e-13);
        assert!((gram_inverse_approx(100.0) - 29.002_343_587_325_348).abs() < 1e-11);
        let at_t1 = gram_inverse_approx(14.134_725_141_734_694);
        assert!((at_t1 - 0.449_277_872_743_318).abs() < 1e-13, "got {at_t1}");
    }

    #[test]
    fn inverse_approx_inverts_approx() {
        for n in [1u32, 10, 100, 515] {
            let back = gram_inverse_approx(gram_approx(n));
            assert!((back - n as f64).abs() < 1e-9, "n = {n}, back = {back}");
        }
    }

    #[test]
    fn exact_reference_values() {
        let g1 = gram_exact(1).unwrap();
        assert!((g1 - 17.845_599_540_410_86).abs() < 1e-10, "g(1) = {g1}");
        let g2 = gram_exact(2).unwrap();
        assert!((g2 - 23.170_282_701_246_31).abs() < 1e-10, "g(2) = {g2}");
        let g500 = gram_exact(500).unwrap();
        assert!((g500 - 812.093_942_165_346_6).abs() < 1e-9, "g(500) = {g500}");
    }

    #[test]
    fn defining_equation_residual() {
        for n in [1u32, 7, 100, 350] {
            let g = gram_exact(n).unwrap();
            let residual = (theta(g) - (n as f64 - 1.0) * PI).abs();
            assert!(residual <= 1e-10, "n = {n}: residual {residual:e}");
        }
    }

    #[test]
    fn delta_reference_and_decay() {
        let d1 = classify_gram(1).unwrap().delta;
        let d2 = classify_gram(2).unwrap().delta;
        assert!((d1 - 2.236_972_438_759_497e-3).abs() < 1e-11, "d1 = {d1}");
        assert!((d2 - 1.378_117_994_413_439e-3).abs() < 1e-11, "d2 = {d2}");
        let d10 = classify_gram(10).unwrap().delta;
        let d100 = classify_gram(100).unwrap().delta;
        assert!(d1 > d2 && d2 > d10 && d10 > d100);
    }

    #[test]
    fn gram_law_classification() {
        // the first violation sits at index 127
        assert!(!classify_gram(1).unwrap().is_bad);
        assert!(!classify_gram(126).unwrap().is_bad);
        assert!(classify_gram(127).unwrap().is_bad);
    }
}
