//! Information rates of ACO-OFDM under IID complex Gaussian inputs.
//!
//! With `X ~ N(0, sigma_x^2)`, `Y1 = X + Z1` and `Y2 = |X| + Z2`
//! (`Z1, Z2 ~ N(0, 2 sigma^2)` independent), the conventional receiver
//! achieves `I(X;Y1)/2` per channel use and an optimal receiver adds
//! `Delta = I(X;Y2|Y1)/2`.
//!
//! `I(X;Y2|Y1) = h(Y2|Y1) - h(Z2)` is evaluated as
//!
//! ```text
//! E_{Y1}[ 1/2 log2(v(y1) / 2 sigma^2) ] - E_{Y1}[ D(p(.|y1) || q_{y1}) ]
//! ```
//!
//! where `v(y1) = Var(|X| | y1) + 2 sigma^2` is the exact conditional
//! variance of `Y2` and `q_{y1}` the Gaussian with the conditional mean and
//! variance. The first term is closed-form given `y1` and carries almost all
//! of the information at low SNR, so tiny rates keep full relative precision;
//! the divergence is integrated numerically over windows that cover the two
//! Gaussian lobes of `p(.|y1)`.

use super::quad::{graded_breaks, Estimate, GaussLegendre};
use super::special::{big_phi, normal_pdf, phi};
use crate::error::{invalid, Error, Result};
use std::f64::consts::{LN_2, PI};

/// Bipolar Gaussian signal of standard deviation `sigma_x` observed through
/// the pairwise decomposition with channel noise `sigma`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GaussianClipModel {
    sigma_x: f64,
    sigma: f64,
}

impl GaussianClipModel {
    pub fn new(sigma_x: f64, sigma: f64) -> Result<Self> {
        if !(sigma_x > 0.0 && sigma_x.is_finite()) || !(sigma > 0.0 && sigma.is_finite()) {
            return Err(invalid(format!(
                "model needs sigma_x > 0 and sigma > 0, got {sigma_x}, {sigma}"
            )));
        }
        Ok(GaussianClipModel { sigma_x, sigma })
    }

    /// Model whose clipped signal has mean intensity `e` (`sigma_x = sqrt(2 pi) e`).
    pub fn from_mean_intensity(e: f64, sigma: f64) -> Result<Self> {
        Self::new((2.0 * PI).sqrt() * e, sigma)
    }

    pub fn sigma_x(&self) -> f64 {
        self.sigma_x
    }

    pub fn sigma(&self) -> f64 {
        self.sigma
    }

    pub fn sigma_z(&self) -> f64 {
        2f64.sqrt() * self.sigma
    }

    /// `sigma_f = 2 sqrt(sigma^2 (sigma_x^2 + sigma^2) / (sigma_x^2 + 2 sigma^2))`.
    pub fn sigma_f(&self) -> f64 {
        let (sx2, s2) = (self.sigma_x * self.sigma_x, self.sigma * self.sigma);
        2.0 * (s2 * (sx2 + s2) / (sx2 + 2.0 * s2)).sqrt()
    }

    /// Standard deviation of `Y1`.
    pub fn sigma_y1(&self) -> f64 {
        (self.sigma_x * self.sigma_x + 2.0 * self.sigma * self.sigma).sqrt()
    }

    fn shrink(&self) -> f64 {
        let sx2 = self.sigma_x * self.sigma_x;
        sx2 / (sx2 + 2.0 * self.sigma * self.sigma)
    }

    pub fn y1_pdf(&self, y1: f64) -> f64 {
        normal_pdf(y1, 0.0, self.sigma_y1())
    }

    fn f(&self, y1: f64, y2: f64) -> f64 {
        let sf = self.sigma_f();
        phi((y2 + self.shrink() * y1) / sf) / sf
    }

    fn g(&self, y1: f64, y2: f64) -> f64 {
        let (sx, s) = (self.sigma_x, self.sigma);
        big_phi(sx * (y2 + y1) / (2.0 * s * (sx * sx + s * s).sqrt()))
    }

    /// Conditional density `p(y2 | y1) = f(y1,y2) g(-y1,y2) + f(-y1,y2) g(y1,y2)`.
    pub fn cond_pdf(&self, y1: f64, y2: f64) -> f64 {
        self.f(y1, y2) * self.g(-y1, y2) + self.f(-y1, y2) * self.g(y1, y2)
    }

    /// `(Var(|X| | y1), E[|X| | y1])`, from `X | y1 ~ N(c y1, 2 c sigma^2)`.
    fn folded_moments(&self, y1: f64) -> (f64, f64) {
        let c = self.shrink();
        let mu = c * y1.abs();
        let tau = (2.0 * c).sqrt() * self.sigma;
        let a = mu / tau;
        let mean = 2.0 * tau * phi(a) + mu * (1.0 - 2.0 * big_phi(-a));
        let var = (mu * mu + tau * tau - mean * mean).max(0.0);
        (var, mean)
    }

    /// Mean and variance of `Y2` given `Y1 = y1`.
    pub fn cond_moments(&self, y1: f64) -> (f64, f64) {
        let (var, mean) = self.folded_moments(y1);
        (mean, var + 2.0 * self.sigma * self.sigma)
    }

    /// Disjoint `y2` intervals holding all but ~1e-30 of the mass of
    /// `p(.|y1)` and of its moment-matched Gaussian.
    fn inner_windows(&self, y1: f64, quad: &QuadratureSpec) -> Vec<(f64, f64)> {
        let sf = self.sigma_f();
        let half = quad.inner_halfwidth * sf;
        let centre = self.shrink() * y1.abs();
        let (m, v) = self.cond_moments(y1);
        let sd = v.sqrt();
        let mut w = vec![
            (-centre - half, -centre + half),
            (centre - half, centre + half),
            (m - quad.inner_halfwidth * sd, m + quad.inner_halfwidth * sd),
        ];
        w.sort_by(|a, b| a.0.total_cmp(&b.0));
        let mut merged: Vec<(f64, f64)> = Vec::with_capacity(3);
        for (lo, hi) in w {
            match merged.last_mut() {
                Some(last) if lo <= last.1 => last.1 = last.1.max(hi),
                _ => merged.push((lo, hi)),
            }
        }
        merged
    }

    fn inner_integral<F: FnMut(f64) -> f64>(&self, y1: f64, quad: &QuadratureSpec, rule: &GaussLegendre, mut f: F) -> f64 {
        let panel = quad.inner_panel * self.sigma_f();
        self.inner_windows(y1, quad)
            .into_iter()
            .map(|(lo, hi)| {
                let panels = ((hi - lo) / panel).ceil().max(1.0) as usize;
                rule.composite(lo, hi, panels, &mut f)
            })
            .sum()
    }

    /// `int p(y2 | y1) dy2`, which should be one.
    pub fn cond_pdf_mass(&self, y1: f64, quad: &QuadratureSpec) -> f64 {
        let rule = GaussLegendre::new(quad.inner_order);
        self.inner_integral(y1, quad, &rule, |y2| self.cond_pdf(y1, y2))
    }

    /// `D(p(.|y1) || N(mean, var))` in nats.
    fn divergence_from_gaussian(&self, y1: f64, quad: &QuadratureSpec, rule: &GaussLegendre) -> f64 {
        let (m, v) = self.cond_moments(y1);
        let sd = v.sqrt();
        self.inner_integral(y1, quad, rule, |y2| {
            let q = normal_pdf(y2, m, sd);
            let p = self.cond_pdf(y1, y2);
            if q == 0.0 {
                return if p > 0.0 { p * (p.ln() - super::special::normal_ln_pdf(y2, m, sd)) - p } else { 0.0 };
            }
            q * bregman_log((p - q) / q)
        })
        .max(0.0)
    }

    /// `I(X; Y2 | Y1)` in bits.
    pub fn conditional_information(&self, quad: &QuadratureSpec) -> Estimate {
        let inner = GaussLegendre::new(quad.inner_order);
        let outer = GaussLegendre::new(quad.outer_order);
        let two_s2 = 2.0 * self.sigma * self.sigma;
        let top = quad.outer_range * self.sigma_y1();
        let breaks = graded_breaks(0.0, top, 0.0, 0.25 * self.sigma_f());
        let est = outer.adaptive(&breaks, 0.5 * quad.abs_tol, quad.rel_tol, |y1| {
            let (var_abs, _) = self.folded_moments(y1);
            let gaussian_part = 0.5 * (var_abs / two_s2).ln_1p() / LN_2;
            let d = self.divergence_from_gaussian(y1, quad, &inner) / LN_2;
            self.y1_pdf(y1) * (gaussian_part - d)
        });
        Estimate::new((2.0 * est.value).max(0.0), 2.0 * est.error)
    }
}

/// `(1 + d) ln(1 + d) - d`, accurate for small `d`.
pub(crate) fn bregman_log(d: f64) -> f64 {
    if d.abs() < 1e-3 {
        let d2 = d * d;
        d2 * (0.5 - d / 6.0 + d2 / 12.0 - d2 * d / 20.0 + d2 * d2 / 30.0)
    } else if d <= -1.0 {
        1.0
    } else {
        (1.0 + d) * d.ln_1p() - d
    }
}

/// Integration settings for the entropy integrals.
#[derive(Debug, Clone, PartialEq)]
pub struct QuadratureSpec {
    /// Outer `y1` range in standard deviations of `Y1`.
    pub outer_range: f64,
    /// Half-width of each inner window in units of `sigma_f`.
    pub inner_halfwidth: f64,
    /// Inner panel width in units of `sigma_f`.
    pub inner_panel: f64,
    pub inner_order: usize,
    pub outer_order: usize,
    /// Absolute tolerance in bits.
    pub abs_tol: f64,
    pub rel_tol: f64,
}

impl Default for QuadratureSpec {
    fn default() -> Self {
        QuadratureSpec {
            outer_range: 8.0,
            inner_halfwidth: 12.0,
            inner_panel: 1.0,
            inner_order: 16,
            outer_order: 10,
            abs_tol: 1e-10,
            rel_tol: 1e-10,
        }
    }
}

impl QuadratureSpec {
    pub fn validate(&self) -> Result<()> {
        if !(self.abs_tol > 0.0 && self.abs_tol <= 1e-4) {
            return Err(invalid("absolute tolerance must lie in (0, 1e-4] bits"));
        }
        if self.outer_range < 6.0 || self.inner_halfwidth < 6.0 || !(self.inner_panel > 0.0) {
            return Err(invalid("integration ranges too narrow"));
        }
        if self.inner_order < 4 || self.outer_order < 4 {
            return Err(invalid("quadrature order too low"));
        }
        Ok(())
    }
}

pub fn cond_pdf_y2_given_y1(y1: f64, y2: f64, model: &GaussianClipModel) -> f64 {
    model.cond_pdf(y1, y2)
}

/// `h(Y2 | Y1)` in bits.
pub fn cond_entropy_y2_given_y1(model: &GaussianClipModel, quad: &QuadratureSpec) -> Result<Estimate> {
    quad.validate()?;
    let i = model.conditional_information(quad);
    let h_z2 = 0.5 * (4.0 * PI * std::f64::consts::E * model.sigma * model.sigma).log2();
    Ok(Estimate::new(h_z2 + i.value, i.error))
}

/// Maximum rate gain of improved receivers, `I(X;Y2|Y1)/2` bits per channel use.
pub fn delta_gain(model: &GaussianClipModel, quad: &QuadratureSpec) -> Result<Estimate> {
    quad.validate()?;
    let i = model.conditional_information(quad);
    Ok(Estimate::new(0.5 * i.value, 0.5 * i.error))
}

fn check_intensity(e: f64, sigma: f64) -> Result<()> {
    if !(e >= 0.0 && e.is_finite()) || !(sigma > 0.0 && sigma.is_finite()) {
        return Err(invalid(format!("need E >= 0 and sigma > 0, got {e}, {sigma}")));
    }
    Ok(())
}

/// Conventional-receiver rate `1/4 log2(1 + pi E^2 / sigma^2)`.
pub fn rate_conventional_gaussian(e: f64, sigma: f64) -> f64 {
    0.25 * (PI * e * e / (sigma * sigma)).ln_1p() / LN_2
}

/// Optimal-receiver rate `I_G = conventional + Delta`.
pub fn rate_improved_gaussian(e: f64, sigma: f64, quad: &QuadratureSpec) -> Result<Estimate> {
    check_intensity(e, sigma)?;
    if e == 0.0 {
        return Ok(Estimate::new(0.0, 0.0));
    }
    let model = GaussianClipModel::from_mean_intensity(e, sigma)?;
    let d = delta_gain(&model, quad)?;
    Ok(Estimate::new(rate_conventional_gaussian(e, sigma) + d.value, d.error))
}

/// Lower bound on the genie-receiver rate: the conventional rate at
/// `sqrt(2)` times the optical SNR.
pub fn rate_genie_bound_gaussian(e: f64, sigma: f64) -> f64 {
    rate_conventional_gaussian(2f64.sqrt() * e, sigma)
}

/// High-SNR capacity asymptote `1/2 log2(e E^2 / (2 pi sigma^2))`. Not a
/// bound; negative at low SNR.
pub fn capacity_high_snr_asymptote(e: f64, sigma: f64) -> f64 {
    0.5 * (std::f64::consts::E * e * e / (2.0 * PI * sigma * sigma)).log2()
}

/// SNR gain of improved receivers at one operating point.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SnrGain {
    pub optical_db: f64,
    pub electrical_db: f64,
    pub delta: Estimate,
}

/// Optical-SNR factor `gamma` (in dB) solving
/// `I_conv(gamma * SNR_o) = I_conv(SNR_o) + delta`, by bisection to `tol_db`.
pub fn equivalent_gain_db(e: f64, sigma: f64, delta: f64, tol_db: f64) -> f64 {
    let target = rate_conventional_gaussian(e, sigma) + delta;
    let (mut lo, mut hi) = (0.0f64, 3.1f64);
    while rate_conventional_gaussian(e * 10f64.powf(hi / 10.0), sigma) < target {
        hi *= 2.0;
    }
    while hi - lo > tol_db {
        let mid = 0.5 * (lo + hi);
        if rate_conventional_gaussian(e * 10f64.powf(mid / 10.0), sigma) < target {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    0.5 * (lo + hi)
}

/// Maximum SNR gain of improved receivers over the conventional receiver.
pub fn optical_gain_db(e: f64, sigma: f64, quad: &QuadratureSpec) -> Result<SnrGain> {
    check_intensity(e, sigma)?;
    if e == 0.0 {
        return Err(Error::Degenerate("gain is undefined at zero SNR".into()));
    }
    let model = GaussianClipModel::from_mean_intensity(e, sigma)?;
    let delta = delta_gain(&model, quad)?;
    let optical_db = equivalent_gain_db(e, sigma, delta.value, 1e-10);
    Ok(SnrGain {
        optical_db,
        electrical_db: 2.0 * optical_db,
        delta,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bregman_branches_agree() {
        for d in [9.9e-4, -9.9e-4, 2e-4] {
            let series = bregman_log(d);
            let direct = (1.0 + d) * d.ln_1p() - d;
            assert!((series - direct).abs() < 1e-17, "{d}");
        }
        assert_eq!(bregman_log(-1.0), 1.0);
    }

    #[test]
    fn sigma_f_matches_conditional_spread() {
        let m = GaussianClipModel::new(1.7, 0.6).unwrap();
        let c = m.shrink();
        let tau2 = 2.0 * c * m.sigma * m.sigma;
        assert!((m.sigma_f().powi(2) - (tau2 + 2.0 * m.sigma * m.sigma)).abs() < 1e-14);
    }

    #[test]
    fn rejects_bad_models() {
        assert!(GaussianClipModel::new(0.0, 1.0).is_err());
        assert!(GaussianClipModel::new(1.0, -1.0).is_err());
        assert!(rate_improved_gaussian(-1.0, 1.0, &QuadratureSpec::default()).is_err());
        let loose = QuadratureSpec {
            abs_tol: 1e-3,
            ..QuadratureSpec::default()
        };
        assert!(loose.validate().is_err());
    }
}
