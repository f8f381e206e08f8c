use super::config::SimConfig;
use crate::dsp::Constellation;
use crate::error::Result;
use crate::inforate::special::big_phi;
use crate::inforate::SnrOperatingPoint;
use crate::txrx::{pass_frame, split_pairs, ChannelSpec, Modem, Receiver};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

/// Two-sided 95% normal quantile.
pub const WILSON_Z: f64 = 1.959_963_984_540_054;

/// Wilson score interval for `errors` successes in `trials`.
pub fn wilson_interval(errors: u64, trials: u64) -> (f64, f64) {
    if trials == 0 {
        return (0.0, 1.0);
    }
    let n = trials as f64;
    let p = errors as f64 / n;
    let z2 = WILSON_Z * WILSON_Z;
    let denom = 1.0 + z2 / n;
    let centre = (p + z2 / (2.0 * n)) / denom;
    let half = WILSON_Z / denom * (p * (1.0 - p) / n + z2 / (4.0 * n * n)).sqrt();
    ((centre - half).max(0.0), (centre + half).min(1.0))
}

/// BER of Gray-labelled 4-QAM on ACO-OFDM with the conventional receiver:
/// `Q(sqrt(pi) SNR_o)`.
pub fn qam4_aco_ber(snr_optical: f64) -> f64 {
    big_phi(-std::f64::consts::PI.sqrt() * snr_optical)
}

fn mix(mut z: u64) -> u64 {
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^ (z >> 31)
}

/// Seed of one frame. The SNR enters by value rather than grid position so
/// a point's result does not depend on the rest of the grid.
pub fn frame_seed(master: u64, snr_db: f64, receiver_id: u64, frame: u64) -> u64 {
    let mut h = mix(master ^ 0x9e37_79b9_7f4a_7c15);
    for word in [snr_db.to_bits(), receiver_id, frame] {
        h = mix(h.wrapping_add(0x9e37_79b9_7f4a_7c15) ^ word);
    }
    h
}

/// Bit-error statistics at one (SNR, receiver) point.
#[derive(Debug, Clone, PartialEq)]
pub struct BerPoint {
    pub snr_optical_db: f64,
    pub snr_electrical_db: f64,
    pub receiver: Receiver,
    pub bit_errors: u64,
    pub bits: u64,
    pub frames: u64,
    pub ber: f64,
    pub ci_lo: f64,
    pub ci_hi: f64,
}

impl BerPoint {
    fn new(point: &SnrOperatingPoint, receiver: Receiver, bit_errors: u64, bits: u64, frames: u64) -> Self {
        let (ci_lo, ci_hi) = wilson_interval(bit_errors, bits);
        BerPoint {
            snr_optical_db: point.snr_optical_db,
            snr_electrical_db: point.snr_electrical_db,
            receiver,
            bit_errors,
            bits,
            frames,
            ber: if bits == 0 { 0.0 } else { bit_errors as f64 / bits as f64 },
            ci_lo,
            ci_hi,
        }
    }
}

fn simulate_frame(modem: &Modem, receiver: Receiver, channel: &ChannelSpec, seed: u64) -> Result<u64> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let bits: Vec<bool> = (0..modem.bits_per_frame()).map(|_| rng.random()).collect();
    let frame = modem.transmit(&bits)?;
    let received = pass_frame(&frame, channel, &mut rng);
    let obs = split_pairs(&received, modem.scheme(), modem.n())?;
    let lit = frame.lit_pattern();
    let det = receiver.detect(modem, &obs, Some(&lit))?;
    Ok(det.bits.iter().zip(&bits).filter(|(a, b)| a != b).count() as u64)
}

/// Simulates one grid value for one receiver. `None` when the frame cap is zero.
pub fn run_ber_point(config: &SimConfig, snr_db: f64, receiver: Receiver) -> Result<Option<BerPoint>> {
    config.validate()?;
    if config.max_frames == 0 {
        return Ok(None);
    }
    let point = config.axis.point(snr_db, config.sigma)?;
    let constellation = Constellation::new(config.constellation)?;
    let modem = Modem::new(config.scheme, constellation, config.n, point.sigma_x)?;
    let channel = ChannelSpec::new(config.sigma)?;
    let bits_per_frame = modem.bits_per_frame() as u64;
    let (mut errors, mut frames) = (0u64, 0u64);
    while errors < config.target_errors && frames < config.max_frames {
        let end = (frames + config.batch_frames).min(config.max_frames);
        let batch: u64 = (frames..end)
            .into_par_iter()
            .map(|f| simulate_frame(&modem, receiver, &channel, frame_seed(config.seed, snr_db, receiver.id(), f)))
            .try_reduce(|| 0, |a, b| Ok(a + b))?;
        errors += batch;
        frames = end;
    }
    Ok(Some(BerPoint::new(&point, receiver, errors, frames * bits_per_frame, frames)))
}

/// Runs every (SNR, receiver) combination of the configuration, SNR-major.
pub fn run_ber_sweep(config: &SimConfig) -> Result<Vec<BerPoint>> {
    config.validate()?;
    let mut out = Vec::new();
    for &db in &config.grid_db {
        for &rx in &config.receivers {
            if let Some(p) = run_ber_point(config, db, rx)? {
                out.push(p);
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn wilson_brackets_and_known_value() {
        let (lo, hi) = wilson_interval(10, 100);
        assert!(lo < 0.1 && 0.1 < hi);
        // statsmodels proportion_confint(10, 100, method="wilson")
        assert!((lo - 0.055_229_137_061).abs() < 1e-9, "{lo}");
        assert!((hi - 0.174_365_661_505).abs() < 1e-9, "{hi}");
        assert_eq!(wilson_interval(0, 0), (0.0, 1.0));
        assert_eq!(wilson_interval(0, 50).0, 0.0);
    }

    #[test]
    fn seeds_separate_every_coordinate() {
        let base = frame_seed(1, 3.0, 1, 0);
        assert_eq!(base, frame_seed(1, 3.0, 1, 0));
        for other in [
            frame_seed(2, 3.0, 1, 0),
            frame_seed(1, 4.0, 1, 0),
            frame_seed(1, 3.0, 2, 0),
            frame_seed(1, 3.0, 1, 1),
        ] {
            assert_ne!(base, other);
        }
    }

    #[test]
    fn zero_frame_cap_gives_nothing() {
        let cfg = SimConfig {
            grid_db: vec![5.0],
            max_frames: 0,
            ..SimConfig::default()
        };
        assert!(run_ber_sweep(&cfg).unwrap().is_empty());
    }
}
