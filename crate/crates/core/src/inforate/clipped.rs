//! Clipped-Gaussian PAM: the rate of sending `S = max(X, 0)` directly
//! through `Y = S + W`, `X ~ N(0, sigma_x^2)`, `W ~ N(0, sigma^2)`.
//!
//! The input law is `1/2 delta(s)` plus a half-Gaussian. Convolving each
//! part with the noise density gives
//!
//! ```text
//! p_Y(y) = 1/2 phi(y/sigma)/sigma
//!        + int_0^inf phi(x/sigma_x)/sigma_x * phi((y-x)/sigma)/sigma dx
//! ```
//!
//! The product of the two Gaussians in `x` is `phi(y/sigma_t)/sigma_t` times
//! a Gaussian in `x` with mean `sigma_x^2 y / sigma_t^2` and standard
//! deviation `sigma_x sigma / sigma_t` (`sigma_t^2 = sigma_x^2 + sigma^2`),
//! whose mass on `x > 0` is `Phi(sigma_x y / (sigma sigma_t))`. Hence
//!
//! ```text
//! p_Y(y) = 1/2 phi(y/sigma)/sigma + phi(y/sigma_t)/sigma_t * Phi(sigma_x y / (sigma sigma_t))
//! ```

use super::quad::{graded_breaks, Estimate, GaussLegendre};
use super::special::{big_phi, normal_ln_pdf, normal_pdf, phi};
use super::QuadratureSpec;
use crate::error::{invalid, Result};
use std::f64::consts::{LN_2, PI};

/// Output law of the clipped-Gaussian PAM channel.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ClippedPam {
    sigma_x: f64,
    sigma: f64,
}

impl ClippedPam {
    pub fn new(sigma_x: f64, sigma: f64) -> Result<Self> {
        if !(sigma_x > 0.0 && sigma_x.is_finite()) || !(sigma > 0.0 && sigma.is_finite()) {
            return Err(invalid(format!(
                "clipped PAM needs sigma_x > 0 and sigma > 0, got {sigma_x}, {sigma}"
            )));
        }
        Ok(ClippedPam { sigma_x, sigma })
    }

    fn sigma_t(&self) -> f64 {
        self.sigma_x.hypot(self.sigma)
    }

    pub fn output_pdf(&self, y: f64) -> f64 {
        let st = self.sigma_t();
        0.5 * phi(y / self.sigma) / self.sigma
            + phi(y / st) / st * big_phi(self.sigma_x * y / (self.sigma * st))
    }

    /// `(E[S], Var[S])`.
    pub fn input_moments(&self) -> (f64, f64) {
        let mean = self.sigma_x / (2.0 * PI).sqrt();
        let var = self.sigma_x * self.sigma_x * (0.5 - 0.5 / PI);
        (mean, var)
    }

    /// `I(S; S + W)` in bits per real channel use, written as the Gaussian
    /// rate at the output variance minus the divergence of `p_Y` from its
    /// moment-matched Gaussian.
    pub fn information(&self, quad: &QuadratureSpec) -> Estimate {
        let (mean, var) = self.input_moments();
        let v = var + self.sigma * self.sigma;
        let sd = v.sqrt();
        let reach = quad.outer_range.max(quad.inner_halfwidth);
        let lo = (-reach * self.sigma).min(mean - reach * sd);
        let hi = (reach * self.sigma_t()).max(mean + reach * sd);
        let breaks = graded_breaks(lo, hi, 0.0, 0.25 * self.sigma);
        let rule = GaussLegendre::new(quad.outer_order.max(quad.inner_order));
        let d = rule.adaptive(&breaks, quad.abs_tol * LN_2, quad.rel_tol, |y| {
            let q = normal_pdf(y, mean, sd);
            let p = self.output_pdf(y);
            if q == 0.0 {
                return if p > 0.0 { p * (p.ln() - normal_ln_pdf(y, mean, sd)) - p } else { 0.0 };
            }
            q * super::gaussian::bregman_log((p - q) / q)
        });
        let gaussian = 0.5 * (var / (self.sigma * self.sigma)).ln_1p() / LN_2;
        Estimate::new((gaussian - d.value.max(0.0) / LN_2).max(0.0), d.error / LN_2)
    }
}

/// Rate of clipped-Gaussian PAM with mean intensity `e`, bits per channel use.
pub fn rate_clipped_pam(e: f64, sigma: f64, quad: &QuadratureSpec) -> Result<Estimate> {
    quad.validate()?;
    if !(e >= 0.0 && e.is_finite()) || !(sigma > 0.0 && sigma.is_finite()) {
        return Err(invalid(format!("need E >= 0 and sigma > 0, got {e}, {sigma}")));
    }
    if e == 0.0 {
        return Ok(Estimate::new(0.0, 0.0));
    }
    Ok(ClippedPam::new((2.0 * PI).sqrt() * e, sigma)?.information(quad))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn closed_form_matches_brute_force_convolution() {
        let pam = ClippedPam::new(1.3, 0.7).unwrap();
        let rule = GaussLegendre::new(20);
        for y in [-2.5, -0.4, 0.0, 0.3, 1.1, 4.0] {
            let conv = rule.composite(0.0, 20.0, 200, |x| {
                normal_pdf(x, 0.0, 1.3) * normal_pdf(y, x, 0.7)
            });
            let brute = 0.5 * normal_pdf(y, 0.0, 0.7) + conv;
            assert!((brute - pam.output_pdf(y)).abs() < 1e-13, "y={y}");
        }
    }

    #[test]
    fn output_density_integrates_to_one_with_right_mean() {
        let pam = ClippedPam::new(2.0, 0.5).unwrap();
        let rule = GaussLegendre::new(20);
        let mass = rule.composite(-20.0, 40.0, 300, |y| pam.output_pdf(y));
        let mean = rule.composite(-20.0, 40.0, 300, |y| y * pam.output_pdf(y));
        assert!((mass - 1.0).abs() < 1e-12);
        assert!((mean - pam.input_moments().0).abs() < 1e-12);
    }

    #[test]
    fn zero_intensity_is_zero_rate() {
        let q = QuadratureSpec::default();
        assert_eq!(rate_clipped_pam(0.0, 1.0, &q).unwrap().value, 0.0);
        assert!(rate_clipped_pam(1.0, 0.0, &q).is_err());
    }
}
