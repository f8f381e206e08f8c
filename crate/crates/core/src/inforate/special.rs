use libm::erfc;
use std::f64::consts::{FRAC_1_SQRT_2, PI};

const INV_SQRT_2PI: f64 = 0.398_942_280_401_432_7;

/// Standard normal density.
#[inline]
pub fn phi(a: f64) -> f64 {
    INV_SQRT_2PI * (-0.5 * a * a).exp()
}

/// Standard normal CDF, accurate in the lower tail.
#[inline]
pub fn big_phi(a: f64) -> f64 {
    0.5 * erfc(-a * FRAC_1_SQRT_2)
}

/// Density of `N(mean, sd^2)`.
#[inline]
pub fn normal_pdf(x: f64, mean: f64, sd: f64) -> f64 {
    phi((x - mean) / sd) / sd
}

/// `ln` of the `N(mean, sd^2)` density.
#[inline]
pub fn normal_ln_pdf(x: f64, mean: f64, sd: f64) -> f64 {
    let z = (x - mean) / sd;
    -0.5 * z * z - sd.ln() - 0.5 * (2.0 * PI).ln()
}
