use super::modem::TxFrame;
use crate::dsp::IntensityBlock;
use crate::error::{invalid, Result};
use rand::Rng;
use rand_distr::StandardNormal;

/// Additive white Gaussian noise on the intensity, unit gain.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ChannelSpec {
    sigma: f64,
}

impl ChannelSpec {
    pub fn new(sigma: f64) -> Result<Self> {
        if !(sigma > 0.0 && sigma.is_finite()) {
            return Err(invalid(format!("noise sigma must be positive, got {sigma}")));
        }
        Ok(ChannelSpec { sigma })
    }

    pub fn sigma(&self) -> f64 {
        self.sigma
    }

    pub fn gain(&self) -> f64 {
        1.0
    }
}

/// `r[i] = s[i] + w[i]` with IID `w ~ N(0, sigma^2)`.
pub fn channel<R: Rng + ?Sized>(intensity: &IntensityBlock, spec: &ChannelSpec, rng: &mut R) -> Vec<f64> {
    intensity
        .samples()
        .iter()
        .map(|&s| {
            let w: f64 = rng.sample(StandardNormal);
            spec.gain() * s + spec.sigma * w
        })
        .collect()
}

/// Sends every block of a frame through the channel, in order.
pub fn pass_frame<R: Rng + ?Sized>(frame: &TxFrame, spec: &ChannelSpec, rng: &mut R) -> Vec<f64> {
    frame
        .intensity
        .iter()
        .flat_map(|block| channel(block, spec, rng))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn sigma_must_be_positive() {
        assert!(ChannelSpec::new(0.0).is_err());
        assert!(ChannelSpec::new(-1.0).is_err());
        assert!(ChannelSpec::new(f64::NAN).is_err());
    }

    #[test]
    fn tiny_noise_passes_signal() {
        let s = IntensityBlock::new(vec![0.0, 1.0, 2.5, 0.0]).unwrap();
        let spec = ChannelSpec::new(1e-12).unwrap();
        let r = channel(&s, &spec, &mut ChaCha8Rng::seed_from_u64(1));
        for (a, b) in r.iter().zip(s.samples()) {
            assert!((a - b).abs() < 1e-10);
        }
    }

    #[test]
    fn fixed_seed_is_bit_identical() {
        let s = IntensityBlock::new(vec![0.5; 32]).unwrap();
        let spec = ChannelSpec::new(0.3).unwrap();
        let a = channel(&s, &spec, &mut ChaCha8Rng::seed_from_u64(99));
        let b = channel(&s, &spec, &mut ChaCha8Rng::seed_from_u64(99));
        assert_eq!(a, b);
    }
}
