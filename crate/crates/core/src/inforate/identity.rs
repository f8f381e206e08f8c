//! Entropy of a half-Gaussian relative to the full Gaussian: folding away the
//! sign removes exactly one bit, `h(X) - h(|X|) = I(X; sgn X) = 1`.

use super::quad::GaussLegendre;
use crate::error::{invalid, Result};
use std::f64::consts::{E, LN_2, PI};

/// `h(X)` of `N(0, sigma_x^2)` in bits.
pub fn gaussian_entropy(sigma_x: f64) -> f64 {
    0.5 * (2.0 * PI * E * sigma_x * sigma_x).log2()
}

/// `h(|X|)` in bits, integrated numerically from the half-Gaussian density.
pub fn half_gaussian_entropy(sigma_x: f64) -> f64 {
    let rule = GaussLegendre::new(20);
    let ln_norm = (2.0 / (PI * sigma_x * sigma_x)).sqrt().ln();
    // -int p ln p with p(x) = sqrt(2/pi)/sigma_x exp(-x^2/2 sigma_x^2) on x > 0
    let nats = rule.composite(0.0, 40.0 * sigma_x, 80, |x| {
        let ln_p = ln_norm - 0.5 * (x / sigma_x).powi(2);
        -ln_p.exp() * ln_p
    });
    nats / LN_2
}

/// `|h(X) - h(|X|) - 1|` in bits.
pub fn entropy_identity_check(sigma_x: f64) -> Result<f64> {
    if !(sigma_x > 0.0 && sigma_x.is_finite()) {
        return Err(invalid(format!("sigma_x must be positive, got {sigma_x}")));
    }
    Ok((gaussian_entropy(sigma_x) - half_gaussian_entropy(sigma_x) - 1.0).abs())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn half_gaussian_closed_form() {
        // h(|X|) = 1/2 log2(pi e sigma^2 / 2)
        let h = half_gaussian_entropy(1.0);
        assert!((h - 0.5 * (PI * E / 2.0).log2()).abs() < 1e-13);
    }

    #[test]
    fn rejects_nonpositive() {
        assert!(entropy_identity_check(0.0).is_err());
    }
}
