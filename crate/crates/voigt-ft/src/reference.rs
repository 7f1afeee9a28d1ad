//! Analytic test functions and their exact Fourier transforms, used as
//! references by the accuracy tests and the report command.

use std::f64::consts::PI;
use std::fmt;
use std::str::FromStr;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::sampling::{FitParams, SampledFunction};
use crate::transform::{self, Formulation};

/// sinc(x) = sin(x)/x with a Taylor branch at the removable singularity.
pub fn sinc(x: f64) -> f64 {
    if x.abs() < 1e-4 {
        let x2 = x * x;
        1.0 - x2 / 6.0 + x2 * x2 / 120.0
    } else {
        x.sin() / x
    }
}

/// Built-in test functions.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum TestFunction {
    /// Solitary rectangle: 1 on (-1/2, 1/2), 1/2 at the edges, 0 outside.
    Rect,
    /// 1/((2t)^70 + 1), the smooth stand-in for the rectangle.
    RectApprox,
    /// Solitary sawtooth t·rect(t), ±1/4 at the edges.
    Sawtooth,
    /// t/((2t)^70 + 1).
    SawtoothApprox,
    /// g(t) = e^{-(6πt)²} - sin(32t) e^{-(7πt)²}.
    GFull,
    /// Even part of g.
    GEven,
    /// Odd part of g.
    GOdd,
    /// u(t), the §-five style composite built from the transforms of g.
    U,
}

impl TestFunction {
    pub const ALL: [TestFunction; 8] = [
        TestFunction::Rect,
        TestFunction::RectApprox,
        TestFunction::Sawtooth,
        TestFunction::SawtoothApprox,
        TestFunction::GFull,
        TestFunction::GEven,
        TestFunction::GOdd,
        TestFunction::U,
    ];

    pub fn name(self) -> &'static str {
        match self {
            TestFunction::Rect => "rect",
            TestFunction::RectApprox => "rect-approx",
            TestFunction::Sawtooth => "sawtooth",
            TestFunction::SawtoothApprox => "sawtooth-approx",
            TestFunction::GFull => "g",
            TestFunction::GEven => "g-even",
            TestFunction::GOdd => "g-odd",
            TestFunction::U => "u",
        }
    }

    pub fn eval(self, t: f64) -> f64 {
        match self {
            TestFunction::Rect => {
                let a = t.abs();
                if a < 0.5 {
                    1.0
                } else if a == 0.5 {
                    0.5
                } else {
                    0.0
                }
            }
            TestFunction::RectApprox => {
                // (2t)^70 through exp/ln; underflows to 0 at t = 0 and
                // overflows to inf far out, both of which are benign here.
                let power = (70.0 * (2.0 * t).abs().ln()).exp();
                1.0 / (power + 1.0)
            }
            TestFunction::Sawtooth => t * TestFunction::Rect.eval(t),
            TestFunction::SawtoothApprox => t * TestFunction::RectApprox.eval(t),
            TestFunction::GFull => {
                TestFunction::GEven.eval(t) + TestFunction::GOdd.eval(t)
            }
            TestFunction::GEven => (-(6.0 * PI * t).powi(2)).exp(),
            TestFunction::GOdd => -(32.0 * t).sin() * (-(7.0 * PI * t).powi(2)).exp(),
            TestFunction::U => {
                let even = (-(t / 6.0).powi(2)).exp() / (6.0 * PI.sqrt());
                let odd = ((16.0 + PI * t) / (7.0 * PI)).powi(2);
                even - (-odd).exp() * (64.0 * t / (49.0 * PI)).exp_m1() / (14.0 * PI.sqrt())
            }
        }
    }

    /// Closed-form transform where one exists. For `U` this is the
    /// inverse-direction transform that feeds the series expansion.
    pub fn exact_ft(self, nu: f64) -> Result<Complex64> {
        if !nu.is_finite() {
            return Err(Error::NonFiniteInput("exact_ft"));
        }
        match self {
            TestFunction::Rect => Ok(Complex64::new(sinc(PI * nu), 0.0)),
            TestFunction::Sawtooth => Ok(Complex64::new(0.0, sawtooth_ft_im(nu))),
            TestFunction::GEven => Ok(Complex64::new(
                (-(nu / 6.0).powi(2)).exp() / (6.0 * PI.sqrt()),
                0.0,
            )),
            TestFunction::GOdd => Ok(Complex64::new(0.0, g_odd_ft_im(nu))),
            TestFunction::U => Ok(Complex64::new(
                (-(6.0 * PI * nu).powi(2)).exp(),
                -(-(7.0 * PI * nu).powi(2)).exp() * (32.0 * nu).sin(),
            )),
            other => Err(Error::UnsupportedId(other.name().to_string())),
        }
    }

    /// Which transform channel carries this function.
    pub fn parity(self) -> Option<Parity> {
        match self {
            TestFunction::Rect | TestFunction::RectApprox | TestFunction::GEven => {
                Some(Parity::Even)
            }
            TestFunction::Sawtooth | TestFunction::SawtoothApprox | TestFunction::GOdd => {
                Some(Parity::Odd)
            }
            TestFunction::GFull | TestFunction::U => None,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Parity {
    Even,
    Odd,
}

/// Imaginary channel of the sawtooth transform,
/// (πν cos(πν) - sin(πν)) / (2π²ν²), with a series branch at ν = 0.
fn sawtooth_ft_im(nu: f64) -> f64 {
    let x = PI * nu;
    if x.abs() < 1e-4 {
        -x / 6.0 + x * x * x / 60.0
    } else {
        (x * x.cos() - x.sin()) / (2.0 * x * x)
    }
}

/// Imaginary channel of the g_odd transform,
/// e^{-((16+πν)/(7π))²} (e^{64ν/(49π)} - 1) / (14√π).
fn g_odd_ft_im(nu: f64) -> f64 {
    let lead = 64.0 * nu / (49.0 * PI);
    if lead > 250.0 {
        // difference form; no cancellation out here
        let a = ((16.0 - PI * nu) / (7.0 * PI)).powi(2);
        let b = ((16.0 + PI * nu) / (7.0 * PI)).powi(2);
        ((-a).exp() - (-b).exp()) / (14.0 * PI.sqrt())
    } else {
        let b = ((16.0 + PI * nu) / (7.0 * PI)).powi(2);
        (-b).exp() * lead.exp_m1() / (14.0 * PI.sqrt())
    }
}

impl fmt::Display for TestFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for TestFunction {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let canon = s.trim().to_ascii_lowercase().replace('_', "-");
        match canon.as_str() {
            "rect" => Ok(TestFunction::Rect),
            "rect-approx" | "rectapprox" => Ok(TestFunction::RectApprox),
            "sawtooth" => Ok(TestFunction::Sawtooth),
            "sawtooth-approx" | "sawtoothapprox" => Ok(TestFunction::SawtoothApprox),
            "g" | "g-full" | "gfull" => Ok(TestFunction::GFull),
            "g-even" | "geven" => Ok(TestFunction::GEven),
            "g-odd" | "godd" => Ok(TestFunction::GOdd),
            "u" | "u-fn" | "ufn" => Ok(TestFunction::U),
            _ => Err(Error::Parse(format!("unknown test function {s:?}"))),
        }
    }
}

/// Pointwise |approximation - exact| of the matching channel over the grid.
pub fn abs_diff_curve(
    id: TestFunction,
    formulation: Formulation,
    params: FitParams,
    nu_grid: &[f64],
) -> Result<Vec<f64>> {
    let parity = id.parity().ok_or_else(|| Error::UnsupportedId(id.name().to_string()))?;
    // ensure a closed form exists before doing any work
    id.exact_ft(0.0)?;
    let sf = SampledFunction::decompose(|t| id.eval(t), params)?;
    let mut curve = Vec::with_capacity(nu_grid.len());
    for &nu in nu_grid {
        let exact = id.exact_ft(nu)?;
        let diff = match parity {
            Parity::Even => {
                let approx = match formulation {
                    Formulation::Full => transform::ft_even_full(&sf, nu)?,
                    Formulation::Half => transform::ft_even_half(&sf, nu, None)?,
                    Formulation::Trig => transform::ft_even_trig(&sf, nu)?,
                    Formulation::Combined => {
                        transform::ft_combined(|t| id.eval(t), &params, nu)?.re
                    }
                };
                (approx - exact.re).abs()
            }
            Parity::Odd => {
                let approx = match formulation {
                    Formulation::Full => transform::ft_odd_full(&sf, nu)?.im,
                    Formulation::Half => transform::ft_odd_half(&sf, nu, None)?.im,
                    Formulation::Trig => transform::ft_odd_trig(&sf, nu)?.im,
                    Formulation::Combined => {
                        transform::ft_combined(|t| id.eval(t), &params, nu)?.im
                    }
                };
                (approx - exact.im).abs()
            }
        };
        curve.push(diff);
    }
    Ok(curve)
}
