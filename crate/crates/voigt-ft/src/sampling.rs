//! Even/odd decomposition, uniform-grid sampling, and Gaussian-kernel
//! reconstruction.
//!
//! A function is split into f_even(t) = (f(t) + f(-t))/2 and
//! f_odd(t) = (f(t) - f(-t))/2, sampled at t = nh for n = 0..N, and
//! reconstructed with the kernel s(t) = h/(c√π) · e^{-(t/c)²}. Only the
//! non-negative half of each part is stored; the symmetry relations supply
//! the rest.

use crate::error::{Error, Result};

/// Sampling parameters (h, c, N): grid step, kernel width, half-count.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FitParams {
    /// Grid step h between samples.
    pub step: f64,
    /// Gaussian kernel width c.
    pub width: f64,
    /// Samples run over n = -half_count..=half_count.
    pub half_count: usize,
}

impl FitParams {
    /// Standard constructor: step > 0, width > 0, half_count >= 1.
    pub fn new(step: f64, width: f64, half_count: usize) -> Result<Self> {
        let p = Self { step, width, half_count };
        p.validate(false)?;
        Ok(p)
    }

    /// Like [`FitParams::new`] but with width = 0: the pure trigonometric
    /// limit with no Gaussian attenuation, meaningful for the trig-form
    /// transforms and the series expansion only. Kernel-based operations
    /// reject zero width.
    pub fn unwindowed(step: f64, half_count: usize) -> Result<Self> {
        let p = Self { step, width: 0.0, half_count };
        p.validate(true)?;
        Ok(p)
    }

    fn validate(&self, allow_zero_width: bool) -> Result<()> {
        if !self.step.is_finite() || !self.width.is_finite() {
            return Err(Error::NonFiniteInput("FitParams"));
        }
        if self.step <= 0.0 {
            return Err(Error::InvalidParams(format!(
                "step must be positive, got {}",
                self.step
            )));
        }
        let width_ok = self.width > 0.0 || (allow_zero_width && self.width == 0.0);
        if !width_ok {
            return Err(Error::InvalidParams(format!(
                "width must be positive, got {}",
                self.width
            )));
        }
        if self.half_count < 1 {
            return Err(Error::InvalidParams(
                "half_count must be at least 1".to_string(),
            ));
        }
        Ok(())
    }

    /// Kernel and Voigt-sum paths need a genuine Gaussian width.
    pub(crate) fn require_width(&self) -> Result<()> {
        if self.width > 0.0 {
            Ok(())
        } else {
            Err(Error::InvalidParams(
                "this operation requires width > 0".to_string(),
            ))
        }
    }
}

/// Sampling kernel s(t) = h/(c√π) · e^{-(t/c)²}.
///
/// Requires width > 0 (see [`FitParams::new`]).
pub fn kernel(t: f64, params: &FitParams) -> f64 {
    debug_assert!(params.width > 0.0);
    let scaled = t / params.width;
    params.step / (params.width * std::f64::consts::PI.sqrt()) * (-scaled * scaled).exp()
}

/// A function sampled on the (h, N) grid, stored as its even and odd halves.
#[derive(Debug, Clone, PartialEq)]
pub struct SampledFunction {
    params: FitParams,
    /// f_even(nh) for n = 0..=N.
    even: Vec<f64>,
    /// f_odd(nh) for n = 1..=N.
    odd: Vec<f64>,
}

impl SampledFunction {
    /// Sample f over the grid and split it into even and odd parts.
    pub fn decompose<F: Fn(f64) -> f64>(f: F, params: FitParams) -> Result<Self> {
        let n = params.half_count;
        let mut even = Vec::with_capacity(n + 1);
        let mut odd = Vec::with_capacity(n);
        for i in 0..=n {
            let t = i as f64 * params.step;
            let fwd = f(t);
            if !fwd.is_finite() {
                return Err(Error::NonFiniteSample { index: i as i64, t, value: fwd });
            }
            let bwd = f(-t);
            if !bwd.is_finite() {
                return Err(Error::NonFiniteSample { index: -(i as i64), t: -t, value: bwd });
            }
            even.push(0.5 * (fwd + bwd));
            if i > 0 {
                odd.push(0.5 * (fwd - bwd));
            }
        }
        Ok(Self { params, even, odd })
    }

    /// Build directly from stored halves; lengths must be N+1 and N.
    pub fn from_parts(params: FitParams, even: Vec<f64>, odd: Vec<f64>) -> Result<Self> {
        let n = params.half_count;
        if even.len() != n + 1 || odd.len() != n {
            return Err(Error::InvalidParams(format!(
                "expected {} even and {} odd values, got {} and {}",
                n + 1,
                n,
                even.len(),
                odd.len()
            )));
        }
        for (i, &v) in even.iter().enumerate() {
            if !v.is_finite() {
                return Err(Error::NonFiniteSample {
                    index: i as i64,
                    t: i as f64 * params.step,
                    value: v,
                });
            }
        }
        for (i, &v) in odd.iter().enumerate() {
            if !v.is_finite() {
                return Err(Error::NonFiniteSample {
                    index: (i + 1) as i64,
                    t: (i + 1) as f64 * params.step,
                    value: v,
                });
            }
        }
        Ok(Self { params, even, odd })
    }

    pub fn params(&self) -> FitParams {
        self.params
    }

    /// f_even(nh), n = 0..=N.
    pub fn even(&self) -> &[f64] {
        &self.even
    }

    /// f_odd(nh), n = 1..=N.
    pub fn odd(&self) -> &[f64] {
        &self.odd
    }

    pub fn even_at(&self, n: usize) -> f64 {
        self.even[n]
    }

    pub fn odd_at(&self, n: usize) -> f64 {
        self.odd[n - 1]
    }

    /// f(nh) for signed n, rebuilt from the stored halves.
    pub fn value_at(&self, n: i64) -> f64 {
        let idx = n.unsigned_abs() as usize;
        if n == 0 {
            self.even[0]
        } else if n > 0 {
            self.even[idx] + self.odd[idx - 1]
        } else {
            self.even[idx] - self.odd[idx - 1]
        }
    }

    /// Continuous reconstruction Σ s(t - nh) f(nh).
    pub fn reconstruct(&self, t: f64) -> f64 {
        let n = self.params.half_count as i64;
        let mut acc = 0.0;
        for i in -n..=n {
            acc += kernel(t - i as f64 * self.params.step, &self.params) * self.value_at(i);
        }
        acc
    }
}

/// A function given as (t, f(t)) rows; evaluation linearly interpolates
/// between rows and is zero outside the tabulated range.
#[derive(Debug, Clone)]
pub struct TabulatedFunction {
    ts: Vec<f64>,
    values: Vec<f64>,
}

impl TabulatedFunction {
    /// Parse two-column numeric text: whitespace- or comma-separated,
    /// '#' starts a comment, t strictly increasing.
    pub fn parse(text: &str) -> Result<Self> {
        let mut ts = Vec::new();
        let mut values = Vec::new();
        for (idx, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let fields: Vec<&str> = line
                .split(|ch: char| ch == ',' || ch.is_whitespace())
                .filter(|s| !s.is_empty())
                .collect();
            if fields.len() != 2 {
                return Err(Error::Parse(format!(
                    "line {}: expected two columns, found {}",
                    idx + 1,
                    fields.len()
                )));
            }
            let t: f64 = fields[0].parse().map_err(|_| {
                Error::Parse(format!("line {}: cannot parse {:?}", idx + 1, fields[0]))
            })?;
            let v: f64 = fields[1].parse().map_err(|_| {
                Error::Parse(format!("line {}: cannot parse {:?}", idx + 1, fields[1]))
            })?;
            if !t.is_finite() || !v.is_finite() {
                return Err(Error::Parse(format!("line {}: non-finite value", idx + 1)));
            }
            if let Some(&last) = ts.last() {
                if t <= last {
                    return Err(Error::Parse(format!(
                        "line {}: t values must be strictly increasing ({t} after {last})",
                        idx + 1
                    )));
                }
            }
            ts.push(t);
            values.push(v);
        }
        if ts.is_empty() {
            return Err(Error::Parse("no data rows".to_string()));
        }
        Ok(Self { ts, values })
    }

    pub fn len(&self) -> usize {
        self.ts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ts.is_empty()
    }

    pub fn eval(&self, t: f64) -> f64 {
        let n = self.ts.len();
        if t < self.ts[0] || t > self.ts[n - 1] {
            return 0.0;
        }
        match self.ts.binary_search_by(|probe| probe.partial_cmp(&t).unwrap()) {
            Ok(i) => self.values[i],
            Err(i) => {
                // ts[i-1] < t < ts[i]
                let frac = (t - self.ts[i - 1]) / (self.ts[i] - self.ts[i - 1]);
                self.values[i - 1] * (1.0 - frac) + self.values[i] * frac
            }
        }
    }

    /// Resample onto the (h, N) grid.
    pub fn decompose(&self, params: FitParams) -> Result<SampledFunction> {
        SampledFunction::decompose(|t| self.eval(t), params)
    }
}
