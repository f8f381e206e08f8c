//! Rates of ACO-OFDM with equiprobable discrete constellations.
//!
//! A data subcarrier sees `Y = X/2 + W` with `E|X/2|^2 / E|W|^2` equal to the
//! electrical SNR, so the conventional rate is a quarter of the
//! constellation-constrained AWGN mutual information
//!
//! ```text
//! I = log2 M - 1/M sum_i E_N[ log2 sum_j exp(-|sqrt(snr)(s_i - s_j) + N|^2 + |N|^2) ]
//! ```
//!
//! with `N ~ CN(0, 1)`.

use super::gaussian::{delta_gain, GaussianClipModel, QuadratureSpec};
use super::quad::{Estimate, GaussHermite};
use super::snr::{db_to_linear, SnrOperatingPoint};
use crate::dsp::{Complex64, Constellation};
use crate::error::{invalid, Result};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;
use rayon::prelude::*;
use std::f64::consts::{FRAC_1_SQRT_2, PI};

/// How to evaluate the expectation over the noise.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum MiMethod {
    /// Tensor Gauss–Hermite rule with this many nodes per real dimension.
    GaussHermite(usize),
    MonteCarlo { samples: usize, seed: u64 },
}

impl Default for MiMethod {
    fn default() -> Self {
        MiMethod::GaussHermite(64)
    }
}

/// `log2 sum_j exp(-|d_ij + n|^2 + |n|^2)` for one transmitted point.
fn log_sum(diffs: &[Complex64], n: Complex64) -> f64 {
    let n2 = n.norm_sqr();
    let exps: Vec<f64> = diffs.iter().map(|d| n2 - (d + n).norm_sqr()).collect();
    let top = exps.iter().copied().fold(f64::NEG_INFINITY, f64::max);
    (top + exps.iter().map(|e| (e - top).exp()).sum::<f64>().ln()) / std::f64::consts::LN_2
}

fn scaled_differences(c: &Constellation, snr: f64) -> Vec<Vec<Complex64>> {
    let root = snr.sqrt();
    c.points()
        .iter()
        .map(|si| c.points().iter().map(|sj| (si - sj) * root).collect())
        .collect()
}

/// Constellation-constrained mutual information of `Y = sqrt(snr) S + N`,
/// bits per complex symbol.
pub fn constellation_mi(c: &Constellation, snr: f64, method: MiMethod) -> Result<Estimate> {
    if !(snr >= 0.0 && snr.is_finite()) {
        return Err(invalid(format!("SNR must be finite and nonnegative, got {snr}")));
    }
    let m = c.size() as f64;
    if snr == 0.0 {
        return Ok(Estimate::new(0.0, 0.0));
    }
    let diffs = scaled_differences(c, snr);
    match method {
        MiMethod::GaussHermite(order) => {
            if order < 2 {
                return Err(invalid("Gauss-Hermite order must be at least 2"));
            }
            let gh = GaussHermite::new(order);
            let penalty: f64 = diffs
                .par_iter()
                .map(|d| {
                    let mut acc = 0.0;
                    for (tk, wk) in gh.nodes.iter().zip(&gh.weights) {
                        for (tl, wl) in gh.nodes.iter().zip(&gh.weights) {
                            acc += wk * wl * log_sum(d, Complex64::new(*tk, *tl));
                        }
                    }
                    acc / PI
                })
                .sum();
            let value = (m.log2() - penalty / m).clamp(0.0, m.log2());
            Ok(Estimate::new(value, 0.0))
        }
        MiMethod::MonteCarlo { samples, seed } => {
            if samples < 2 {
                return Err(invalid("Monte-Carlo estimate needs at least 2 samples"));
            }
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let (mut sum, mut sum2) = (0.0, 0.0);
            for k in 0..samples {
                let re: f64 = rng.sample(StandardNormal);
                let im: f64 = rng.sample(StandardNormal);
                let n = Complex64::new(re, im) * FRAC_1_SQRT_2;
                let v = m.log2() - log_sum(&diffs[k % diffs.len()], n);
                sum += v;
                sum2 += v * v;
            }
            let ns = samples as f64;
            let mean = sum / ns;
            let var = (sum2 / ns - mean * mean).max(0.0) * ns / (ns - 1.0);
            Ok(Estimate::new(mean, (var / ns).sqrt()))
        }
    }
}

/// Conventional-receiver rate with a discrete constellation, bits per channel use.
pub fn rate_discrete_conventional(c: &Constellation, point: &SnrOperatingPoint, method: MiMethod) -> Result<Estimate> {
    let mi = constellation_mi(c, point.electrical_linear(), method)?;
    Ok(Estimate::new(0.25 * mi.value, 0.25 * mi.error))
}

/// Conventional discrete rate plus the Gaussian-input gain `Delta` at the
/// matching time-domain standard deviation.
pub fn rate_upper_bound_discrete(c: &Constellation, point: &SnrOperatingPoint, quad: &QuadratureSpec) -> Result<Estimate> {
    let base = rate_discrete_conventional(c, point, MiMethod::default())?;
    if point.sigma_x == 0.0 {
        return Ok(base);
    }
    let d = delta_gain(&GaussianClipModel::new(point.sigma_x, point.sigma)?, quad)?;
    Ok(Estimate::new(base.value + d.value, base.error + d.error))
}

/// Lower bound on the genie-receiver rate: the conventional rate at
/// `sqrt(2)` times the optical SNR. `None` selects Gaussian inputs.
pub fn rate_genie_bound(point: &SnrOperatingPoint, input: Option<&Constellation>) -> Result<f64> {
    let boosted = SnrOperatingPoint::from_optical_linear(2f64.sqrt() * point.optical_linear(), point.sigma)?;
    match input {
        None => Ok(super::gaussian::rate_conventional_gaussian(boosted.mean_intensity(), boosted.sigma)),
        Some(c) => Ok(rate_discrete_conventional(c, &boosted, MiMethod::default())?.value),
    }
}

/// Optical SNR (dB) at which a nondecreasing rate curve reaches `target`,
/// by bisection on `[lo_db, hi_db]`.
pub fn threshold_snr_db<F>(mut rate: F, target: f64, lo_db: f64, hi_db: f64, tol_db: f64) -> Result<f64>
where
    F: FnMut(f64) -> Result<f64>,
{
    let (mut lo, mut hi) = (lo_db, hi_db);
    if rate(lo)? >= target || rate(hi)? < target {
        return Err(invalid(format!(
            "rate target {target} is not bracketed by [{lo_db}, {hi_db}] dB"
        )));
    }
    while hi - lo > tol_db {
        let mid = 0.5 * (lo + hi);
        if rate(mid)? < target {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    Ok(0.5 * (lo + hi))
}

/// Threshold optical SNRs for code rate `code_rate`: where the conventional
/// rate and the improved-receiver bound reach `code_rate * log2(M) / 4`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RateThreshold {
    pub target: f64,
    pub conventional_db: f64,
    pub bound_db: f64,
}

pub fn rate_thresholds(c: &Constellation, code_rate: f64, quad: &QuadratureSpec) -> Result<RateThreshold> {
    if !(code_rate > 0.0 && code_rate < 1.0) {
        return Err(invalid(format!("code rate must lie in (0, 1), got {code_rate}")));
    }
    let target = code_rate * (c.size() as f64).log2() / 4.0;
    let at = |db: f64| SnrOperatingPoint::from_optical_linear(db_to_linear(db), 1.0);
    let conventional_db = threshold_snr_db(
        |db| Ok(rate_discrete_conventional(c, &at(db)?, MiMethod::default())?.value),
        target,
        -30.0,
        40.0,
        1e-3,
    )?;
    let bound_db = threshold_snr_db(
        |db| Ok(rate_upper_bound_discrete(c, &at(db)?, quad)?.value),
        target,
        -30.0,
        40.0,
        1e-3,
    )?;
    Ok(RateThreshold {
        target,
        conventional_db,
        bound_db,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dsp::ConstellationKind;

    #[test]
    fn bpsk_like_pam2_known_value() {
        // Binary antipodal input at snr 1 on a complex channel only uses the
        // real part with noise variance 1/2: I = 1 - E[log2(1 + e^{-4 - 4 n})],
        // n ~ N(0, 1/2), integrated in one dimension.
        let c = Constellation::new(ConstellationKind::Pam(2)).unwrap();
        let mi = constellation_mi(&c, 1.0, MiMethod::GaussHermite(64)).unwrap();
        let rule = super::super::quad::GaussLegendre::new(20);
        let sd = FRAC_1_SQRT_2;
        let reference = 1.0
            - rule.composite(-12.0 * sd, 12.0 * sd, 200, |n| {
                super::super::special::normal_pdf(n, 0.0, sd) * (-4.0 - 4.0 * n).exp().ln_1p() / std::f64::consts::LN_2
            });
        // The softplus-shaped integrand limits a 64-node Hermite rule to ~4e-9.
        assert!((mi.value - reference).abs() < 1e-8, "{} vs {}", mi.value, reference);
    }

    #[test]
    fn zero_snr_and_bad_inputs() {
        let c = Constellation::new(ConstellationKind::Qam(4)).unwrap();
        assert_eq!(constellation_mi(&c, 0.0, MiMethod::default()).unwrap().value, 0.0);
        assert!(constellation_mi(&c, -1.0, MiMethod::default()).is_err());
        assert!(constellation_mi(&c, 1.0, MiMethod::MonteCarlo { samples: 0, seed: 1 }).is_err());
    }

    #[test]
    fn threshold_bisection_finds_root() {
        let db = threshold_snr_db(Ok, 1.25, 0.0, 4.0, 1e-9).unwrap();
        assert!((db - 1.25).abs() < 1e-8);
        assert!(threshold_snr_db(Ok, 5.0, 0.0, 4.0, 1e-9).is_err());
    }
}
