//! Property checks for the complex error function: differential equation
//! residual, reflection identity, and continuity across the dispatch
//! boundaries.

mod common;

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use voigt_ft::cerf::{default_faddeeva, Faddeeva};

fn w(z: Complex64) -> Complex64 {
    default_faddeeva().w(z).unwrap()
}

#[test]
fn ode_residual_stays_small() {
    // w'(z) + 2 z w(z) = 2i/sqrt(pi), derivative by central differences
    let two_i_over_sqrt_pi = Complex64::new(0.0, 2.0 / std::f64::consts::PI.sqrt());
    let step = 1e-5;
    let mut rng = ChaCha8Rng::seed_from_u64(0xfadd);
    for _ in 0..100 {
        let r = rng.gen_range(0.0..6.0f64);
        let theta = rng.gen_range(0.0..std::f64::consts::PI);
        let z = Complex64::from_polar(r, theta);
        let derivative = (w(z + step) - w(z - step)) / (2.0 * step);
        let residual = (derivative + 2.0 * z * w(z) - two_i_over_sqrt_pi).norm();
        assert!(residual <= 1e-4, "z = {z}, residual = {residual}");
    }
}

#[test]
fn reflection_identity_on_random_points() {
    let mut rng = ChaCha8Rng::seed_from_u64(0xf1ec);
    for _ in 0..100 {
        let z = Complex64::new(rng.gen_range(-4.0..4.0), rng.gen_range(-4.0..4.0));
        let lhs = w(-z);
        let rhs = 2.0 * (-z * z).exp() - w(z);
        assert!((lhs - rhs).norm() <= 1e-6, "z = {z}");
    }
}

#[test]
fn dispatch_is_continuous_across_the_radius_boundary() {
    let eval = default_faddeeva();
    for i in 0..25 {
        let theta = (i as f64 + 0.5) / 25.0 * std::f64::consts::PI;
        let inner = Complex64::from_polar(8.0 - 1e-9, theta);
        let outer = Complex64::from_polar(8.0 + 1e-9, theta);
        let diff = (eval.w(inner).unwrap() - eval.w(outer).unwrap()).norm();
        assert!(diff <= 1e-5, "theta = {theta}, diff = {diff}");
    }
}

#[test]
fn dispatch_is_continuous_across_the_band_boundary() {
    let eval = default_faddeeva();
    for i in 0..25 {
        let x = 0.5 + 7.0 * (i as f64) / 24.0;
        let y = 0.05 * x;
        let below = Complex64::new(x, y * (1.0 - 1e-9));
        let above = Complex64::new(x, y * (1.0 + 1e-9));
        let diff = (eval.w(below).unwrap() - eval.w(above).unwrap()).norm();
        assert!(diff <= 1e-5, "x = {x}, diff = {diff}");
    }
}

#[test]
fn quadrature_oracle_agreement_on_coarse_grid() {
    // a light version of the acceptance grid; spot rather than sweep
    let mut max_err = 0.0f64;
    for i in 0..8 {
        let x = -7.0 + 14.0 * (i as f64) / 7.0;
        for y in [1e-3, 0.1, 1.0, 4.0, 7.0] {
            let z = Complex64::new(x, y);
            let err = (w(z) - common::w_oracle(z)).norm();
            max_err = max_err.max(err);
        }
    }
    assert!(max_err <= 1e-6, "max error {max_err}");
}

#[test]
fn region_evaluators_cover_their_own_patches() {
    let eval = default_faddeeva();
    // interior
    let z = Complex64::new(2.0, 3.0);
    assert!((eval.w_interior(z) - common::w_oracle(z)).norm() < 1e-6);
    // narrow band
    let z = Complex64::new(5.0, 0.1);
    assert!((eval.w_narrow_band(z) - common::w_oracle(z)).norm() < 1e-6);
    // far field
    let z = Complex64::new(9.0, 2.0);
    assert!((Faddeeva::w_continued_fraction(z) - common::w_oracle(z)).norm() < 1e-8);
}

#[test]
fn custom_parameters_still_evaluate() {
    // a deliberately coarser parameter set loses accuracy but stays sane
    let coarse = Faddeeva::new(voigt_ft::cerf::CerfParams {
        terms: 18,
        coeff_bound: 17,
        ..Default::default()
    })
    .unwrap();
    let z = Complex64::new(1.0, 1.0);
    let fine = w(z);
    let rough = coarse.w(z).unwrap();
    assert!((fine - rough).norm() < 1e-3);
}
