//! Shared oracles for the integration and acceptance tests: adaptive
//! quadrature of the defining integrals, independent of every code path
//! they are used to check.

#![allow(dead_code)]

use num_complex::Complex64;

const MAX_DEPTH: u32 = 48;

fn simpson_slice<F: Fn(f64) -> f64>(
    f: &F,
    a: f64,
    fa: f64,
    fm: f64,
    fb: f64,
    b: f64,
    whole: f64,
    tol: f64,
    depth: u32,
) -> f64 {
    let m = 0.5 * (a + b);
    let lm = 0.5 * (a + m);
    let rm = 0.5 * (m + b);
    let flm = f(lm);
    let frm = f(rm);
    let left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
    let right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
    let delta = left + right - whole;
    if depth == 0 || delta.abs() <= 15.0 * tol {
        left + right + delta / 15.0
    } else {
        simpson_slice(f, a, fa, flm, fm, m, left, 0.5 * tol, depth - 1)
            + simpson_slice(f, m, fm, frm, fb, b, right, 0.5 * tol, depth - 1)
    }
}

/// Adaptive Simpson quadrature to absolute tolerance `tol`.
pub fn integrate<F: Fn(f64) -> f64>(f: F, a: f64, b: f64, tol: f64) -> f64 {
    if a == b {
        return 0.0;
    }
    let m = 0.5 * (a + b);
    let fa = f(a);
    let fm = f(m);
    let fb = f(b);
    let whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
    simpson_slice(&f, a, fa, fm, fb, b, whole, tol, MAX_DEPTH)
}

/// Same, split at interior break points (singularity-aware splitting).
pub fn integrate_split<F: Fn(f64) -> f64>(
    f: F,
    a: f64,
    b: f64,
    breaks: &[f64],
    tol: f64,
) -> f64 {
    let mut points: Vec<f64> = std::iter::once(a)
        .chain(breaks.iter().copied().filter(|&p| p > a && p < b))
        .chain(std::iter::once(b))
        .collect();
    points.sort_by(|p, q| p.partial_cmp(q).unwrap());
    let slices = points.len() - 1;
    let mut acc = 0.0;
    for w in points.windows(2) {
        acc += integrate(&f, w[0], w[1], tol / slices as f64);
    }
    acc
}

/// Complex probability function W(z) = (i/π) ∫ e^{-t²}/(z - t) dt by
/// quadrature; equals w(z) for Im z > 0. Absolute target ~1e-9.
pub fn w_oracle(z: Complex64) -> Complex64 {
    let (x, y) = (z.re, z.im);
    assert!(y > 0.0, "oracle integral is defined for Im z > 0");
    let breaks = [x - 8.0 * y, x - y, x, x + y, x + 8.0 * y];
    let k = integrate_split(
        |t| {
            let dx = x - t;
            y / std::f64::consts::PI * (-t * t).exp() / (y * y + dx * dx)
        },
        -8.5,
        8.5,
        &breaks,
        1e-10,
    );
    let l = integrate_split(
        |t| {
            let dx = x - t;
            (-t * t).exp() * dx / (std::f64::consts::PI * (y * y + dx * dx))
        },
        -8.5,
        8.5,
        &breaks,
        1e-10,
    );
    Complex64::new(k, l)
}

/// K(x, y) via the Laplace-type cosine integral (valid for y > 0).
pub fn k_oracle(x: f64, y: f64) -> f64 {
    integrate(
        |t| (-t * t / 4.0 - y * t).exp() * (x * t).cos(),
        0.0,
        40.0,
        1e-10,
    ) / std::f64::consts::PI.sqrt()
}

/// L(x, y) via the matching sine integral (valid for y > 0).
pub fn l_oracle(x: f64, y: f64) -> f64 {
    integrate(
        |t| (-t * t / 4.0 - y * t).exp() * (x * t).sin(),
        0.0,
        40.0,
        1e-10,
    ) / std::f64::consts::PI.sqrt()
}

/// Even-channel transform 2 ∫₀^∞ f(t) cos(2πνt) dt of a function supported
/// (to rounding) on [0, upper].
pub fn ft_even_oracle<F: Fn(f64) -> f64>(f: F, upper: f64, nu: f64, tol: f64) -> f64 {
    2.0 * integrate(|t| f(t) * (2.0 * std::f64::consts::PI * nu * t).cos(), 0.0, upper, tol / 2.0)
}

/// Odd-channel transform: the imaginary coefficient of
/// -2i ∫₀^∞ f(t) sin(2πνt) dt.
pub fn ft_odd_oracle<F: Fn(f64) -> f64>(f: F, upper: f64, nu: f64, tol: f64) -> f64 {
    -2.0 * integrate(|t| f(t) * (2.0 * std::f64::consts::PI * nu * t).sin(), 0.0, upper, tol / 2.0)
}

#[cfg(test)]
mod self_checks {
    use super::*;

    #[test]
    fn simpson_hits_known_integrals() {
        // ∫₀^1 x² = 1/3
        assert!((integrate(|x| x * x, 0.0, 1.0, 1e-12) - 1.0 / 3.0).abs() < 1e-12);
        // ∫ e^{-t²} over the real line = sqrt(pi)
        let g = integrate(|t| (-t * t).exp(), -8.0, 8.0, 1e-12);
        assert!((g - std::f64::consts::PI.sqrt()).abs() < 1e-11);
    }

    #[test]
    fn oracle_reproduces_known_faddeeva_values() {
        // against e^{z²}-type closed forms evaluated at 40 digits
        let w = w_oracle(Complex64::new(0.0, 2.0));
        assert!((w.re - 0.2553956763105057).abs() < 1e-9);
        assert!(w.im.abs() < 1e-9);
        let w = w_oracle(Complex64::new(1.0, 1.0));
        assert!((w.re - 0.3047442052569126).abs() < 1e-9);
        assert!((w.im - 0.2082189382028316).abs() < 1e-9);
    }

    #[test]
    fn laplace_integrals_agree_with_hilbert_form() {
        for (x, y) in [(0.5, 0.4), (2.0, 1.0), (4.0, 0.3)] {
            let w = w_oracle(Complex64::new(x, y));
            assert!((k_oracle(x, y) - w.re).abs() < 1e-8, "K at ({x}, {y})");
            assert!((l_oracle(x, y) - w.im).abs() < 1e-8, "L at ({x}, {y})");
        }
    }
}
