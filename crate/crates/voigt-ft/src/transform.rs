//! Fourier-transform approximations of sampled functions.
//!
//! Four equivalent formulations are provided. With x = πνc and y = nh/c:
//!
//! * full:  ĥ_even(ν) ≈ h Σ_{n=-N}^{N} e^{-y²} f_even(nh) K(x, y)
//! * half:  ĥ_even(ν) ≈ h (f_even(0) e^{-x²} + Σ_{n=1}^{N} e^{-y²} f_even(nh) V_k(x, y))
//!   with V_k = K(x, y) + K(x, -y); the odd channel uses
//!   V_ℓ = L(x, y) - L(x, -y) and carries a factor i
//! * trig:  ĥ_even(ν) ≈ h e^{-x²} (f_even(0) + 2 Σ f_even(nh) cos(2πνnh)),
//!   ĥ_odd(ν) ≈ -2ih e^{-x²} Σ f_odd(nh) sin(2πνnh)
//! * combined: ĥ(ν) ≈ h e^{-x²} (f(0) + Σ (f(nh) e^{-2πiνnh} + f(-nh) e^{2πiνnh}))
//!
//! V_k and V_ℓ never depend on the sampled values, which is what makes the
//! look-up tables of [`crate::lut`] possible. The reflected halves of V_k
//! and V_ℓ grow like e^{y²}; the products e^{-y²}·V here fold the exponents
//! together before exponentiation, so the sums stay finite where a naive
//! evaluation would overflow (nh/c beyond about 27).
//!
//! The module also hosts the series expansion that rebuilds a function from
//! samples of its inverse transform, the windowed analog of a Fourier
//! series.

use std::f64::consts::PI;
use std::str::FromStr;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::lut::VoigtLut;
use crate::sampling::{FitParams, SampledFunction};
use crate::voigt;

/// Exponent below which the reflected Voigt values are formed directly;
/// above it the damped products switch to the folded-exponent form.
const DIRECT_REFLECT_LIMIT: f64 = 700.0;

/// The four formulations, mostly for CLI and report plumbing.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Formulation {
    Full,
    Half,
    Trig,
    Combined,
}

impl Formulation {
    pub fn name(self) -> &'static str {
        match self {
            Formulation::Full => "full",
            Formulation::Half => "half",
            Formulation::Trig => "trig",
            Formulation::Combined => "combined",
        }
    }
}

impl FromStr for Formulation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().as_str() {
            "full" => Ok(Formulation::Full),
            "half" => Ok(Formulation::Half),
            "trig" => Ok(Formulation::Trig),
            "combined" => Ok(Formulation::Combined),
            _ => Err(Error::Parse(format!("unknown formulation {s:?}"))),
        }
    }
}

/// e^{-y²}·V_k and e^{-y²}·V_ℓ from a single w evaluation, overflow-free.
fn damped_pair(x: f64, y: f64) -> Result<(f64, f64)> {
    let (k_pos, l_pos) = voigt::kl(x, y)?;
    let exponent = y * y - x * x;
    let angle = 2.0 * x * y;
    let damp = (-y * y).exp();
    if exponent < DIRECT_REFLECT_LIMIT {
        let grow = 2.0 * exponent.exp();
        let k_neg = grow * angle.cos() - k_pos;
        let l_neg = grow * angle.sin() + l_pos;
        Ok((damp * (k_pos + k_neg), damp * (l_pos - l_neg)))
    } else {
        let dk = damp * k_pos;
        let dl = damp * l_pos;
        let vk = dk + (2.0 * (-x * x).exp() * angle.cos() - dk);
        let vl = dl - (2.0 * (-x * x).exp() * angle.sin() + dl);
        Ok((vk, vl))
    }
}

fn check_nu(nu: f64) -> Result<()> {
    if nu.is_finite() {
        Ok(())
    } else {
        Err(Error::NonFiniteInput("transform"))
    }
}

/// Full-range Voigt sum for the even channel, n = -N..=N.
pub fn ft_even_full(sf: &SampledFunction, nu: f64) -> Result<f64> {
    check_nu(nu)?;
    let p = sf.params();
    p.require_width()?;
    let x = PI * nu * p.width;
    let mut acc = 0.0;
    for n in -(p.half_count as i64)..=(p.half_count as i64) {
        let y = n as f64 * p.step / p.width;
        let kv = voigt::k(x, y)?;
        if !kv.is_finite() {
            return Err(Error::OverflowGuard { exponent: y * y - x * x });
        }
        acc += (-y * y).exp() * sf.even_at(n.unsigned_abs() as usize) * kv;
    }
    Ok(p.step * acc)
}

/// Full-range Voigt sum for the odd channel (purely imaginary result).
pub fn ft_odd_full(sf: &SampledFunction, nu: f64) -> Result<Complex64> {
    check_nu(nu)?;
    let p = sf.params();
    p.require_width()?;
    let x = PI * nu * p.width;
    let mut acc = 0.0;
    for n in -(p.half_count as i64)..=(p.half_count as i64) {
        if n == 0 {
            continue; // f_odd(0) = 0
        }
        let y = n as f64 * p.step / p.width;
        let lv = voigt::l(x, y)?;
        if !lv.is_finite() {
            return Err(Error::OverflowGuard { exponent: y * y - x * x });
        }
        let idx = n.unsigned_abs() as usize;
        let sample = if n > 0 { sf.odd_at(idx) } else { -sf.odd_at(idx) };
        acc += (-y * y).exp() * sample * lv;
    }
    Ok(Complex64::new(0.0, p.step * acc))
}

/// Half-range form of the even channel; V_k comes from the table when one
/// is supplied, otherwise it is computed on the fly.
pub fn ft_even_half(sf: &SampledFunction, nu: f64, lut: Option<&VoigtLut>) -> Result<f64> {
    check_nu(nu)?;
    let p = sf.params();
    p.require_width()?;
    let x = PI * nu * p.width;
    let mut acc = sf.even_at(0) * (-x * x).exp();
    match lut {
        Some(table) => {
            check_lut(table, &p)?;
            for n in 1..=p.half_count {
                let y = n as f64 * p.step / p.width;
                let (vk, _) = lut_lookup(table, n, nu)?;
                acc += (-y * y).exp() * vk * sf.even_at(n);
            }
        }
        None => {
            for n in 1..=p.half_count {
                let y = n as f64 * p.step / p.width;
                let (dvk, _) = damped_pair(x, y)?;
                acc += dvk * sf.even_at(n);
            }
        }
    }
    Ok(p.step * acc)
}

/// Half-range form of the odd channel (purely imaginary result).
pub fn ft_odd_half(sf: &SampledFunction, nu: f64, lut: Option<&VoigtLut>) -> Result<Complex64> {
    check_nu(nu)?;
    let p = sf.params();
    p.require_width()?;
    let x = PI * nu * p.width;
    let mut acc = 0.0;
    match lut {
        Some(table) => {
            check_lut(table, &p)?;
            for n in 1..=p.half_count {
                let y = n as f64 * p.step / p.width;
                let (_, vl) = lut_lookup(table, n, nu)?;
                acc += (-y * y).exp() * vl * sf.odd_at(n);
            }
        }
        None => {
            for n in 1..=p.half_count {
                let y = n as f64 * p.step / p.width;
                let (_, dvl) = damped_pair(x, y)?;
                acc += dvl * sf.odd_at(n);
            }
        }
    }
    Ok(Complex64::new(0.0, p.step * acc))
}

fn check_lut(table: &VoigtLut, params: &FitParams) -> Result<()> {
    if table.params() != *params {
        return Err(Error::LutMismatch(format!(
            "table built for (h, c, N) = ({}, {}, {}), request uses ({}, {}, {})",
            table.params().step,
            table.params().width,
            table.params().half_count,
            params.step,
            params.width,
            params.half_count
        )));
    }
    Ok(())
}

fn lut_lookup(table: &VoigtLut, n: usize, nu: f64) -> Result<(f64, f64)> {
    table.lookup(n, nu).map_err(|e| match e {
        Error::OutOfRange(msg) => Error::LutMismatch(msg),
        other => other,
    })
}

/// Trigonometric form of the even channel.
pub fn ft_even_trig(sf: &SampledFunction, nu: f64) -> Result<f64> {
    check_nu(nu)?;
    let p = sf.params();
    let x = PI * nu * p.width;
    let mut acc = sf.even_at(0);
    for n in 1..=p.half_count {
        acc += 2.0 * sf.even_at(n) * (2.0 * PI * nu * n as f64 * p.step).cos();
    }
    Ok(p.step * (-x * x).exp() * acc)
}

/// Trigonometric form of the odd channel (purely imaginary result).
pub fn ft_odd_trig(sf: &SampledFunction, nu: f64) -> Result<Complex64> {
    check_nu(nu)?;
    let p = sf.params();
    let x = PI * nu * p.width;
    let mut acc = 0.0;
    for n in 1..=p.half_count {
        acc += sf.odd_at(n) * (2.0 * PI * nu * n as f64 * p.step).sin();
    }
    Ok(Complex64::new(0.0, -2.0 * p.step * (-x * x).exp() * acc))
}

/// Raw samples f(0), f(nh), f(-nh) for the combined form, captured once so
/// that frequency sweeps do not re-evaluate the function.
#[derive(Debug, Clone)]
pub struct CombinedSamples {
    params: FitParams,
    center: f64,
    forward: Vec<f64>,
    backward: Vec<f64>,
}

impl CombinedSamples {
    pub fn sample<F: Fn(f64) -> f64>(f: F, params: FitParams) -> Result<Self> {
        let n = params.half_count;
        let center = f(0.0);
        if !center.is_finite() {
            return Err(Error::NonFiniteSample { index: 0, t: 0.0, value: center });
        }
        let mut forward = Vec::with_capacity(n);
        let mut backward = Vec::with_capacity(n);
        for i in 1..=n {
            let t = i as f64 * params.step;
            let fp = f(t);
            if !fp.is_finite() {
                return Err(Error::NonFiniteSample { index: i as i64, t, value: fp });
            }
            let fm = f(-t);
            if !fm.is_finite() {
                return Err(Error::NonFiniteSample { index: -(i as i64), t: -t, value: fm });
            }
            forward.push(fp);
            backward.push(fm);
        }
        Ok(Self { params, center, forward, backward })
    }

    /// ĥ(ν) = h e^{-(πνc)²} (f(0) + Σ (f(nh) e^{-2πiνnh} + f(-nh) e^{2πiνnh})).
    pub fn ft(&self, nu: f64) -> Result<Complex64> {
        check_nu(nu)?;
        let p = &self.params;
        let x = PI * nu * p.width;
        let mut acc = Complex64::new(self.center, 0.0);
        for n in 1..=p.half_count {
            let theta = 2.0 * PI * nu * n as f64 * p.step;
            let phase = Complex64::new(theta.cos(), -theta.sin());
            acc += self.forward[n - 1] * phase + self.backward[n - 1] * phase.conj();
        }
        Ok(p.step * (-x * x).exp() * acc)
    }
}

/// Combined complex form evaluated straight from a callable.
pub fn ft_combined<F: Fn(f64) -> f64>(f: F, params: &FitParams, nu: f64) -> Result<Complex64> {
    CombinedSamples::sample(f, *params)?.ft(nu)
}

/// Series expansion rebuilding f(t) from samples of its inverse transform:
///
///   f(t) ≈ h e^{-(πct)²} [Re F(0) + 2 Σ (Re F(nh) cos(2πtnh) + Im F(nh) sin(2πtnh))]
///
/// With c = 0 the Gaussian attenuation drops out and this is the classical
/// trigonometric expansion of a solitary pulse.
pub fn inverse_series<F: Fn(f64) -> Complex64>(
    spectrum_fn: F,
    params: &FitParams,
    t: f64,
) -> Result<f64> {
    let (even, odd) = inverse_series_parts(spectrum_fn, params, t)?;
    Ok(even + odd)
}

/// The cosine (even) and sine (odd) channels of [`inverse_series`],
/// separately windowed.
pub fn inverse_series_parts<F: Fn(f64) -> Complex64>(
    spectrum_fn: F,
    params: &FitParams,
    t: f64,
) -> Result<(f64, f64)> {
    if !t.is_finite() {
        return Err(Error::NonFiniteInput("inverse_series"));
    }
    let center = spectrum_fn(0.0);
    if !center.re.is_finite() || !center.im.is_finite() {
        return Err(Error::NonFiniteSample { index: 0, t: 0.0, value: center.re });
    }
    let mut even = center.re;
    let mut odd = 0.0;
    for n in 1..=params.half_count {
        let nu = n as f64 * params.step;
        let sample = spectrum_fn(nu);
        if !sample.re.is_finite() || !sample.im.is_finite() {
            return Err(Error::NonFiniteSample {
                index: n as i64,
                t: nu,
                value: if sample.re.is_finite() { sample.im } else { sample.re },
            });
        }
        let theta = 2.0 * PI * t * nu;
        even += 2.0 * sample.re * theta.cos();
        odd += 2.0 * sample.im * theta.sin();
    }
    let damp = {
        let a = PI * params.width * t;
        (-a * a).exp()
    };
    Ok((params.step * damp * even, params.step * damp * odd))
}

/// (approx - reference) / reference, or None when |reference| sits below
/// the floor and the quotient would be meaningless.
pub fn relative_error(approx: f64, reference: f64, floor: f64) -> Option<f64> {
    if reference.abs() < floor || reference == 0.0 {
        None
    } else {
        Some((approx - reference) / reference)
    }
}

/// Complex transform values over a frequency grid, split into the real
/// (even) channel and the imaginary (odd) channel.
#[derive(Debug, Clone, PartialEq)]
pub struct Spectrum {
    pub nu_grid: Vec<f64>,
    pub even_part: Vec<f64>,
    pub odd_part: Vec<f64>,
    pub params: FitParams,
}

impl Spectrum {
    pub fn new(
        params: FitParams,
        nu_grid: Vec<f64>,
        even_part: Vec<f64>,
        odd_part: Vec<f64>,
    ) -> Result<Self> {
        if nu_grid.len() != even_part.len() || nu_grid.len() != odd_part.len() {
            return Err(Error::InvalidParams(format!(
                "spectrum arrays disagree: {} grid, {} even, {} odd",
                nu_grid.len(),
                even_part.len(),
                odd_part.len()
            )));
        }
        if nu_grid.windows(2).any(|w| !(w[0] < w[1])) {
            return Err(Error::InvalidParams(
                "nu grid must be strictly increasing".to_string(),
            ));
        }
        Ok(Self { nu_grid, even_part, odd_part, params })
    }

    pub fn value_at(&self, idx: usize) -> Complex64 {
        Complex64::new(self.even_part[idx], self.odd_part[idx])
    }
}

/// Sweep a sampled function over a grid with the chosen formulation.
/// `Combined` recombines the trig channels, which is its algebraic content
/// for a decomposed input.
pub fn spectrum_of_samples(
    sf: &SampledFunction,
    nu_grid: &[f64],
    formulation: Formulation,
    lut: Option<&VoigtLut>,
) -> Result<Spectrum> {
    let mut even = Vec::with_capacity(nu_grid.len());
    let mut odd = Vec::with_capacity(nu_grid.len());
    for &nu in nu_grid {
        match formulation {
            Formulation::Full => {
                even.push(ft_even_full(sf, nu)?);
                odd.push(ft_odd_full(sf, nu)?.im);
            }
            Formulation::Half => {
                even.push(ft_even_half(sf, nu, lut)?);
                odd.push(ft_odd_half(sf, nu, lut)?.im);
            }
            Formulation::Trig | Formulation::Combined => {
                even.push(ft_even_trig(sf, nu)?);
                odd.push(ft_odd_trig(sf, nu)?.im);
            }
        }
    }
    Spectrum::new(sf.params(), nu_grid.to_vec(), even, odd)
}

/// Sweep a callable over a grid. `Combined` samples the raw function; the
/// split formulations go through the even/odd decomposition.
pub fn spectrum_of_fn<F: Fn(f64) -> f64>(
    f: F,
    params: FitParams,
    nu_grid: &[f64],
    formulation: Formulation,
    lut: Option<&VoigtLut>,
) -> Result<Spectrum> {
    match formulation {
        Formulation::Combined => {
            let samples = CombinedSamples::sample(f, params)?;
            let mut even = Vec::with_capacity(nu_grid.len());
            let mut odd = Vec::with_capacity(nu_grid.len());
            for &nu in nu_grid {
                let v = samples.ft(nu)?;
                even.push(v.re);
                odd.push(v.im);
            }
            Spectrum::new(params, nu_grid.to_vec(), even, odd)
        }
        other => {
            let sf = SampledFunction::decompose(f, params)?;
            spectrum_of_samples(&sf, nu_grid, other, lut)
        }
    }
}

/// Uniform grid min, min+step, ... capped at max (inclusive within one
/// part in 1e9 of a step).
pub fn nu_grid(min: f64, max: f64, step: f64) -> Result<Vec<f64>> {
    if !min.is_finite() || !max.is_finite() || !step.is_finite() {
        return Err(Error::NonFiniteInput("nu_grid"));
    }
    if step <= 0.0 {
        return Err(Error::InvalidParams(format!("step must be positive, got {step}")));
    }
    if min >= max {
        return Err(Error::InvalidParams(format!(
            "grid needs min < max, got [{min}, {max}]"
        )));
    }
    let count = ((max - min) / step + 1e-9).floor() as usize + 1;
    Ok((0..count).map(|k| min + k as f64 * step).collect())
}

/// The ν grid used throughout the worked examples: [-2π, 2π] in steps of 0.1.
pub fn default_nu_grid() -> Vec<f64> {
    nu_grid(-2.0 * PI, 2.0 * PI, 0.1).expect("default grid is valid")
}
