//! Voigt function K(x, y) and imaginary Voigt function L(x, y).
//!
//! K and L are the real and imaginary parts of w(x + iy). Axis values use
//! exact closed forms — K(x, 0) = e^{-x²}, L(x, 0) = 0, L(0, y) = 0 — so
//! the transform half-sum derivations built on them hold exactly. Negative
//! y is reached either through w's lower half-plane extension or through
//! the reflection identities
//!
//!   K(x, -y) = 2 e^{y² - x²} cos(2xy) - K(x, y)
//!   L(x, -y) = 2 e^{y² - x²} sin(2xy) + L(x, y)
//!
//! which grow like e^{y²} and are guarded against overflow.

use num_complex::Complex64;

use crate::cerf;
use crate::error::{Error, Result};

/// Largest exponent the reflection identities may feed to exp():
/// ln(f64::MAX / 4), about 708.4.
pub fn reflect_exp_limit() -> f64 {
    (f64::MAX / 4.0).ln()
}

/// K(x, y) = Re w(x + iy); exact e^{-x²} on the y = 0 axis.
pub fn k(x: f64, y: f64) -> Result<f64> {
    Ok(kl(x, y)?.0)
}

/// L(x, y) = Im w(x + iy); exactly 0 on both axes.
pub fn l(x: f64, y: f64) -> Result<f64> {
    Ok(kl(x, y)?.1)
}

/// Both Voigt channels from a single w evaluation.
pub fn kl(x: f64, y: f64) -> Result<(f64, f64)> {
    if !x.is_finite() || !y.is_finite() {
        return Err(Error::NonFiniteInput("voigt"));
    }
    if y == 0.0 {
        return Ok(((-x * x).exp(), 0.0));
    }
    let w = cerf::default_faddeeva().eval(Complex64::new(x, y));
    let l_val = if x == 0.0 { 0.0 } else { w.im };
    Ok((w.re, l_val))
}

/// K(x, -y) computed from K(x, y) via the reflection identity.
pub fn k_reflect(x: f64, y: f64) -> Result<f64> {
    if !x.is_finite() || !y.is_finite() {
        return Err(Error::NonFiniteInput("voigt::k_reflect"));
    }
    let exponent = y * y - x * x;
    if exponent > reflect_exp_limit() {
        return Err(Error::OverflowGuard { exponent });
    }
    Ok(2.0 * exponent.exp() * (2.0 * x * y).cos() - k(x, y)?)
}

/// L(x, -y) computed from L(x, y) via the reflection identity.
pub fn l_reflect(x: f64, y: f64) -> Result<f64> {
    if !x.is_finite() || !y.is_finite() {
        return Err(Error::NonFiniteInput("voigt::l_reflect"));
    }
    let exponent = y * y - x * x;
    if exponent > reflect_exp_limit() {
        return Err(Error::OverflowGuard { exponent });
    }
    Ok(2.0 * exponent.exp() * (2.0 * x * y).sin() + l(x, y)?)
}

/// K and L at (x, y) together with their reflections at (x, -y),
/// all from one w evaluation.
#[derive(Debug, Clone, Copy)]
pub struct VoigtPair {
    pub k_pos: f64,
    pub l_pos: f64,
    pub k_neg: f64,
    pub l_neg: f64,
}

pub fn kl_with_reflection(x: f64, y: f64) -> Result<VoigtPair> {
    let (k_pos, l_pos) = kl(x, y)?;
    let exponent = y * y - x * x;
    if exponent > reflect_exp_limit() {
        return Err(Error::OverflowGuard { exponent });
    }
    let grow = 2.0 * exponent.exp();
    let angle = 2.0 * x * y;
    Ok(VoigtPair {
        k_pos,
        l_pos,
        k_neg: grow * angle.cos() - k_pos,
        l_neg: grow * angle.sin() + l_pos,
    })
}
