//! Complex error function w(z) over the entire complex plane.
//!
//! w(z) = e^{-z²}(1 - erf(-iz)) is evaluated through three approximations,
//! each covering its own region of the plane:
//!
//! * a pole sum Ω(z + iς/2) for points well above the real axis,
//! * a narrow-band form e^{-z²} + z·Σ(a₁ - b₁z²)/(c₁ - d₁z² + z⁴) for
//!   points hugging the real axis,
//! * an eleven-level continued fraction outside a fixed radius.
//!
//! The lower half-plane is reached through w(-z) = 2e^{-z²} - w(z).
//! All expansion coefficients depend only on the fitting parameters and are
//! computed once at construction, so evaluation is a short rational sum.

use std::f64::consts::PI;
use std::sync::LazyLock;

use num_complex::Complex64;

use crate::error::{Error, Result};

/// Fitting parameters of the three-region approximation.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CerfParams {
    /// Step of the inner coefficient sums.
    pub step: f64,
    /// Imaginary shift that keeps the pole sum off the real axis.
    pub shift: f64,
    /// Term count of the expansions; the rational sums run over m = 1..terms-2.
    pub terms: usize,
    /// Truncation bound of the inner coefficient sums, n = -coeff_bound..coeff_bound.
    pub coeff_bound: usize,
    /// |z| beyond which the continued fraction takes over.
    pub radius_threshold: f64,
    /// Points with Im z <= band_slope * |Re z| use the narrow-band form.
    pub band_slope: f64,
}

impl Default for CerfParams {
    fn default() -> Self {
        Self {
            step: 0.25,
            shift: 2.75,
            terms: 25,
            coeff_bound: 23,
            radius_threshold: 8.0,
            band_slope: 0.05,
        }
    }
}

impl CerfParams {
    pub fn validate(&self) -> Result<()> {
        let positives = [
            ("step", self.step),
            ("shift", self.shift),
            ("radius_threshold", self.radius_threshold),
            ("band_slope", self.band_slope),
        ];
        for (name, value) in positives {
            if !value.is_finite() {
                return Err(Error::NonFiniteInput("CerfParams"));
            }
            if value <= 0.0 {
                return Err(Error::InvalidParams(format!(
                    "{name} must be positive, got {value}"
                )));
            }
        }
        if self.terms < 3 {
            return Err(Error::InvalidParams(format!(
                "terms must be at least 3, got {}",
                self.terms
            )));
        }
        if self.coeff_bound < 1 {
            return Err(Error::InvalidParams(format!(
                "coeff_bound must be at least 1, got {}",
                self.coeff_bound
            )));
        }
        Ok(())
    }
}

/// Expansion coefficients for the pole-sum and narrow-band forms,
/// m = 1..terms-2 stored zero-based.
///
/// a0 is real and b0 purely imaginary, so a1 and b1 come out purely
/// imaginary as well; the real parts are exact zeros by construction, which
/// keeps Re w(x) = e^{-x²} exact on the real axis.
#[derive(Debug, Clone)]
pub struct Coefficients {
    pub a0: Vec<f64>,
    pub b0: Vec<Complex64>,
    pub c0: Vec<f64>,
    pub a1: Vec<Complex64>,
    pub b1: Vec<Complex64>,
    pub c1: Vec<f64>,
    pub d1: Vec<f64>,
}

impl Coefficients {
    /// Evaluate both coefficient sets for a validated parameter set.
    pub fn compute(params: &CerfParams) -> Self {
        let count = params.terms - 2;
        let m_total = params.terms as f64;
        let h = params.step;
        let shift = params.shift;
        let bound = params.coeff_bound as i64;

        let mut a0 = Vec::with_capacity(count);
        let mut b0 = Vec::with_capacity(count);
        let mut c0 = Vec::with_capacity(count);
        for m in 1..=count {
            // mu = pi (m - 1/2) / (M H); the pole center c0 is mu / 2.
            let mu = PI * (m as f64 - 0.5) / (m_total * h);
            let mut sum_sin = 0.0;
            let mut sum_cos = 0.0;
            for n in -bound..=bound {
                let nf = n as f64;
                let weight = (shift * shift / 4.0 - nf * nf * h * h).exp();
                let phase = mu * (nf * h + shift / 2.0);
                sum_sin += weight * phase.sin();
                sum_cos += weight * phase.cos();
            }
            a0.push(PI.sqrt() * (m as f64 - 0.5) / (2.0 * m_total * m_total * h) * sum_sin);
            b0.push(Complex64::new(0.0, -sum_cos / (m_total * PI.sqrt())));
            c0.push(0.5 * mu);
        }

        let mut a1 = Vec::with_capacity(count);
        let mut b1 = Vec::with_capacity(count);
        let mut c1 = Vec::with_capacity(count);
        let mut d1 = Vec::with_capacity(count);
        let half_shift = 0.5 * shift;
        for m in 0..count {
            let center_sq = c0[m] * c0[m];
            a1.push(b0[m] * (center_sq - half_shift * half_shift)
                + Complex64::new(0.0, a0[m] * shift));
            b1.push(b0[m]);
            c1.push((center_sq + half_shift * half_shift).powi(2));
            d1.push(2.0 * center_sq - shift * shift / 2.0);
        }

        Self { a0, b0, c0, a1, b1, c1, d1 }
    }
}

/// Complex error function evaluator with cached coefficients.
#[derive(Debug, Clone)]
pub struct Faddeeva {
    params: CerfParams,
    coeffs: Coefficients,
}

impl Faddeeva {
    pub fn new(params: CerfParams) -> Result<Self> {
        params.validate()?;
        let coeffs = Coefficients::compute(&params);
        Ok(Self { params, coeffs })
    }

    pub fn params(&self) -> &CerfParams {
        &self.params
    }

    pub fn coefficients(&self) -> &Coefficients {
        &self.coeffs
    }

    /// w(z) anywhere on the complex plane.
    pub fn w(&self, z: Complex64) -> Result<Complex64> {
        if !z.re.is_finite() || !z.im.is_finite() {
            return Err(Error::NonFiniteInput("cerf::w"));
        }
        Ok(self.eval(z))
    }

    /// Dispatch without input validation; callers guarantee finite z.
    pub(crate) fn eval(&self, z: Complex64) -> Complex64 {
        if z.im >= 0.0 {
            self.eval_upper(z)
        } else {
            // w(z) = conj(2 e^{-conj(z)²} - w(conj z)) below the real axis
            let zc = z.conj();
            (2.0 * (-zc * zc).exp() - self.eval_upper(zc)).conj()
        }
    }

    fn eval_upper(&self, z: Complex64) -> Complex64 {
        if z.norm() > self.params.radius_threshold {
            Self::w_continued_fraction(z)
        } else if z.im > self.params.band_slope * z.re.abs() {
            self.w_interior(z)
        } else {
            self.w_narrow_band(z)
        }
    }

    /// Pole-sum form Ω(z + iς/2); intended for Im z > band_slope·|Re z|
    /// inside the radius threshold.
    pub fn w_interior(&self, z: Complex64) -> Complex64 {
        let zp = z + Complex64::new(0.0, 0.5 * self.params.shift);
        let zp_sq = zp * zp;
        let mut acc = Complex64::new(0.0, 0.0);
        for ((&a, &b), &c) in self.coeffs.a0.iter().zip(&self.coeffs.b0).zip(&self.coeffs.c0) {
            acc += (a + b * zp) / (c * c - zp_sq);
        }
        acc
    }

    /// Narrow-band form; intended for 0 <= Im z <= band_slope·|Re z|
    /// inside the radius threshold.
    pub fn w_narrow_band(&self, z: Complex64) -> Complex64 {
        let z_sq = z * z;
        let z_quad = z_sq * z_sq;
        let mut acc = Complex64::new(0.0, 0.0);
        for (((&a, &b), &c), &d) in self
            .coeffs
            .a1
            .iter()
            .zip(&self.coeffs.b1)
            .zip(&self.coeffs.c1)
            .zip(&self.coeffs.d1)
        {
            acc += (a - b * z_sq) / (c - d * z_sq + z_quad);
        }
        (-z_sq).exp() + z * acc
    }

    /// Eleven-level continued fraction for |z| beyond the radius threshold
    /// (upper half-plane).
    pub fn w_continued_fraction(z: Complex64) -> Complex64 {
        let mut denom = z;
        for k in (1..=11).rev() {
            denom = z - (k as f64 * 0.5) / denom;
        }
        Complex64::new(0.0, 1.0) / (PI.sqrt() * denom)
    }
}

impl Default for Faddeeva {
    fn default() -> Self {
        Self::new(CerfParams::default()).expect("default parameters are valid")
    }
}

static DEFAULT_FADDEEVA: LazyLock<Faddeeva> = LazyLock::new(Faddeeva::default);

/// Shared evaluator at the default fitting parameters.
pub fn default_faddeeva() -> &'static Faddeeva {
    &DEFAULT_FADDEEVA
}
