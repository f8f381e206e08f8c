use crate::dsp::{dft, idft, Complex64, Constellation, ConstellationKind, FrequencyBlock, TimeBlock};
use crate::error::Result;
use crate::inforate::{
    delta_gain, entropy_identity_check, rate_conventional_gaussian, GaussianClipModel, QuadratureSpec,
};
use crate::txrx::{pass_frame, split_pairs, ChannelSpec, Modem, Receiver, Scheme};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Outcome of one self-test check.
#[derive(Debug, Clone)]
pub struct CheckResult {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

fn check(name: &'static str, outcome: Result<(bool, String)>) -> CheckResult {
    match outcome {
        Ok((passed, detail)) => CheckResult { name, passed, detail },
        Err(e) => CheckResult {
            name,
            passed: false,
            detail: e.to_string(),
        },
    }
}

fn transform_round_trip(rng: &mut ChaCha8Rng) -> Result<(bool, String)> {
    let mut worst = 0.0f64;
    for log_n in 2..=10 {
        let x: Vec<f64> = (0..1usize << log_n).map(|_| rng.random_range(-1.0..1.0)).collect();
        let back = idft(&dft(&TimeBlock::new(x.clone())?)?)?;
        for (a, b) in x.iter().zip(back.samples()) {
            worst = worst.max((a - b).abs());
        }
    }
    Ok((worst < 1e-10, format!("max round-trip error {worst:.2e}")))
}

fn gray_round_trip() -> Result<(bool, String)> {
    let kinds = [
        ConstellationKind::Qam(4),
        ConstellationKind::Qam(16),
        ConstellationKind::Qam(64),
        ConstellationKind::Psk(8),
        ConstellationKind::Pam(4),
    ];
    for kind in kinds {
        let c = Constellation::new(kind)?;
        for (label, &p) in c.points().iter().enumerate() {
            if c.nearest(p) != label {
                return Ok((false, format!("{kind} label {label} does not round-trip")));
            }
        }
    }
    Ok((true, format!("{} constellations", kinds.len())))
}

fn aco_frame_invariants(rng: &mut ChaCha8Rng) -> Result<(bool, String)> {
    let n = 64;
    let modem = Modem::new(Scheme::Aco, Constellation::new(ConstellationKind::Qam(16))?, n, 1.0)?;
    let mut worst_halving = 0.0f64;
    let mut worst_antisym = 0.0f64;
    for _ in 0..200 {
        let bits: Vec<bool> = (0..modem.bits_per_frame()).map(|_| rng.random()).collect();
        let frame = modem.transmit(&bits)?;
        let s = &frame.intensity[0];
        if s.zero_count() < n / 2 {
            return Ok((false, "fewer than N/2 zeros".into()));
        }
        worst_antisym = worst_antisym.max(frame.bipolar.half_period_antisymmetry_residue());
        let s_freq = dft(&TimeBlock::new(s.samples().to_vec())?)?;
        for k in (1..n).step_by(2) {
            let expect: Complex64 = frame.freq.bins()[k] / 2.0;
            worst_halving = worst_halving.max((s_freq.bins()[k] - expect).norm());
        }
    }
    Ok((
        worst_halving < 1e-10 && worst_antisym < 1e-12,
        format!("halving {worst_halving:.2e}, antisymmetry {worst_antisym:.2e}"),
    ))
}

fn noiseless_detection(rng: &mut ChaCha8Rng) -> Result<(bool, String)> {
    let channel = ChannelSpec::new(1e-9)?;
    let mut runs = 0;
    for (scheme, kind) in [
        (Scheme::Aco, ConstellationKind::Qam(16)),
        (Scheme::Flip, ConstellationKind::Qam(16)),
        (Scheme::PamDmt, ConstellationKind::Pam(4)),
    ] {
        let modem = Modem::new(scheme, Constellation::new(kind)?, 64, 1.0)?;
        for rx in Receiver::ALL {
            let bits: Vec<bool> = (0..modem.bits_per_frame()).map(|_| rng.random()).collect();
            let frame = modem.transmit(&bits)?;
            let obs = split_pairs(&pass_frame(&frame, &channel, rng), scheme, 64)?;
            let det = rx.detect(&modem, &obs, Some(&frame.lit_pattern()))?;
            if det.bits != bits {
                return Ok((false, format!("{scheme} / {rx} made errors without noise")));
            }
            runs += 1;
        }
    }
    Ok((true, format!("{runs} scheme/receiver pairs")))
}

fn density_normalization() -> Result<(bool, String)> {
    let quad = QuadratureSpec::default();
    let mut worst = 0.0f64;
    for (sx, s) in [(0.1, 1.0), (1.0, 1.0), (100.0, 1.0)] {
        let m = GaussianClipModel::new(sx, s)?;
        for y1 in [-3.0, 0.0, 3.0] {
            worst = worst.max((m.cond_pdf_mass(y1 * m.sigma_y1(), &quad) - 1.0).abs());
        }
    }
    Ok((worst < 1e-8, format!("max |mass - 1| = {worst:.2e}")))
}

fn delta_reference() -> Result<(bool, String)> {
    // I(X;Y2|Y1)/2 at sigma_x = sigma = 1 from an independent two-dimensional
    // arbitrary-precision integration.
    const REFERENCE: f64 = 0.054_340_024_133_248_7;
    let d = delta_gain(&GaussianClipModel::new(1.0, 1.0)?, &QuadratureSpec::default())?;
    let err = (d.value - REFERENCE).abs();
    Ok((err < 1e-8, format!("delta = {:.12}, error {err:.1e}", d.value)))
}

fn closed_forms() -> Result<(bool, String)> {
    let conv = rate_conventional_gaussian(1.0, 1.0);
    let conv_err = (conv - 0.512_546_416_060_691_8).abs();
    let ident = [0.1, 1.0, 10.0]
        .iter()
        .map(|&s| entropy_identity_check(s))
        .collect::<Result<Vec<_>>>()?
        .into_iter()
        .fold(0.0f64, f64::max);
    Ok((
        conv_err < 1e-14 && ident < 1e-12,
        format!("conventional rate error {conv_err:.1e}, entropy identity residual {ident:.1e}"),
    ))
}

fn hermitian_rejection() -> Result<(bool, String)> {
    let mut bins = vec![Complex64::new(0.0, 0.0); 8];
    bins[1] = Complex64::new(1.0, 0.0);
    Ok((FrequencyBlock::new(bins).is_err(), "non-Hermitian block rejected".into()))
}

/// Quick invariant checks over every module; a few seconds in release builds.
pub fn run_selftest(seed: u64) -> Vec<CheckResult> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    vec![
        check("transform round trip", transform_round_trip(&mut rng)),
        check("hermitian validation", hermitian_rejection()),
        check("gray labelling", gray_round_trip()),
        check("aco frame invariants", aco_frame_invariants(&mut rng)),
        check("noiseless detection", noiseless_detection(&mut rng)),
        check("conditional density mass", density_normalization()),
        check("improved-receiver gain", delta_reference()),
        check("closed forms", closed_forms()),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn selftest_passes() {
        for c in run_selftest(5) {
            assert!(c.passed, "{}: {}", c.name, c.detail);
        }
    }
}
