//! Fourier transforms of sampled functions through the Voigt functions
//! K(x, y) and L(x, y), the real and imaginary parts of the complex error
//! function w(z).
//!
//! A function is split into even and odd parts, sampled on a uniform grid,
//! and reconstructed with a Gaussian kernel; the Fourier transform of that
//! reconstruction collapses into short sums of Voigt-function values. The
//! expansion coefficients V_k and V_ℓ depend only on the grid parameters,
//! never on the sampled values, so they can be precomputed once into
//! look-up tables and reused for any input. Equivalent trigonometric forms
//! and a windowed series expansion (rebuilding a function from samples of
//! its inverse transform) complete the toolkit.
//!
//! Modules:
//!
//! * [`cerf`] — w(z) over the whole complex plane,
//! * [`voigt`] — K, L, and their reflection identities,
//! * [`sampling`] — even/odd decomposition, grids, kernels, tabulated input,
//! * [`transform`] — the four transform formulations and the series expansion,
//! * [`lut`] — building, persisting, and serving the coefficient tables,
//! * [`reference`] — analytic test functions with exact transforms.

pub mod cerf;
pub mod error;
pub mod lut;
pub mod reference;
pub mod sampling;
pub mod transform;
pub mod voigt;

pub use error::{Error, Result};
pub use lut::VoigtLut;
pub use sampling::{FitParams, SampledFunction, TabulatedFunction};
pub use transform::{Formulation, Spectrum};
