use super::scheme::Scheme;
use crate::dsp::{Constellation, FftPlan, FrequencyBlock, IntensityBlock, TimeBlock};
use crate::error::{invalid, Error, Result};
use num_complex::Complex64;

/// Frame geometry, symbol scaling and a cached transform plan for one
/// `(scheme, constellation, N, sigma_x)` combination.
///
/// Symbols are scaled by `sigma_x * sqrt(N / active_bins)` so that the
/// bipolar time signal has per-sample variance `sigma_x^2` on average.
#[derive(Debug, Clone)]
pub struct Modem {
    scheme: Scheme,
    n: usize,
    constellation: Constellation,
    sigma_x: f64,
    scale: f64,
    plan: FftPlan,
}

/// One transmitted frame.
#[derive(Debug, Clone)]
pub struct TxFrame {
    pub scheme: Scheme,
    pub payload_bits: Vec<bool>,
    /// Constellation label of every data symbol.
    pub labels: Vec<usize>,
    pub freq: FrequencyBlock,
    /// Unclipped bipolar signal `x = idft(freq)`.
    pub bipolar: TimeBlock,
    /// One block for ACO and PAM-DMT, two consecutive blocks for Flip.
    pub intensity: Vec<IntensityBlock>,
}

impl TxFrame {
    /// All channel inputs of the frame in transmission order.
    pub fn channel_input(&self) -> Vec<f64> {
        self.intensity.iter().flat_map(|b| b.samples().iter().copied()).collect()
    }

    /// Bipolar value carried by each receiver pair.
    pub fn pair_values(&self) -> Vec<f64> {
        self.scheme.pair_values(self.bipolar.len(), self.bipolar.samples())
    }

    /// Genie side information: whether the first sample of each pair is lit.
    pub fn lit_pattern(&self) -> Vec<bool> {
        self.pair_values().iter().map(|&x| x > 0.0).collect()
    }
}

impl Modem {
    pub fn new(scheme: Scheme, constellation: Constellation, n: usize, sigma_x: f64) -> Result<Self> {
        scheme.validate_len(n)?;
        if !(sigma_x > 0.0 && sigma_x.is_finite()) {
            return Err(invalid(format!("sigma_x must be positive, got {sigma_x}")));
        }
        if scheme == Scheme::PamDmt && !constellation.is_real() {
            return Err(invalid(format!(
                "PAM-DMT needs a PAM constellation, got {}",
                constellation.name()
            )));
        }
        let scale = sigma_x * (n as f64 / scheme.active_bins(n) as f64).sqrt();
        Ok(Modem {
            scheme,
            n,
            constellation,
            sigma_x,
            scale,
            plan: FftPlan::new(n)?,
        })
    }

    pub fn scheme(&self) -> Scheme {
        self.scheme
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn constellation(&self) -> &Constellation {
        &self.constellation
    }

    pub fn sigma_x(&self) -> f64 {
        self.sigma_x
    }

    /// Amplitude of a unit constellation point in the frequency domain.
    pub fn symbol_scale(&self) -> f64 {
        self.scale
    }

    pub fn symbols_per_frame(&self) -> usize {
        self.scheme.symbols_per_frame(self.n)
    }

    pub fn bits_per_frame(&self) -> usize {
        self.symbols_per_frame() * self.constellation.bits_per_symbol()
    }

    pub fn channel_uses(&self) -> usize {
        self.scheme.channel_uses(self.n)
    }

    /// Builds the Hermitian frequency block for a list of labels.
    fn spectrum(&self, labels: &[usize]) -> Vec<Complex64> {
        let n = self.n;
        let mut bins = vec![Complex64::new(0.0, 0.0); n];
        let pts = self.constellation.points();
        for (k, &label) in labels.iter().enumerate() {
            let bin = self.scheme.data_bin(k);
            let v = match self.scheme {
                Scheme::PamDmt => Complex64::new(0.0, pts[label].re * self.scale),
                _ => pts[label] * self.scale,
            };
            bins[bin] = v;
            bins[n - bin] = v.conj();
        }
        bins
    }

    fn bipolar_of(&self, bins: &[Complex64]) -> Vec<f64> {
        let mut buf = bins.to_vec();
        self.plan.inverse(&mut buf);
        buf.into_iter().map(|c| c.re).collect()
    }

    pub fn transmit(&self, bits: &[bool]) -> Result<TxFrame> {
        let expected = self.bits_per_frame();
        if bits.len() != expected {
            return Err(Error::BitLength {
                expected,
                got: bits.len(),
            });
        }
        let labels = bits
            .chunks(self.constellation.bits_per_symbol())
            .map(|group| self.constellation.label_of(group))
            .collect::<Result<Vec<_>>>()?;
        let bins = self.spectrum(&labels);
        let bipolar = TimeBlock::new(self.bipolar_of(&bins))?;
        let intensity = match self.scheme {
            Scheme::Aco | Scheme::PamDmt => vec![IntensityBlock::positive_part(&bipolar)],
            Scheme::Flip => vec![
                IntensityBlock::positive_part(&bipolar),
                IntensityBlock::negative_part(&bipolar),
            ],
        };
        Ok(TxFrame {
            scheme: self.scheme,
            payload_bits: bits.to_vec(),
            labels,
            freq: FrequencyBlock::from_transform(bins),
            bipolar,
            intensity,
        })
    }

    /// Per-pair bipolar values of the frame that carries `labels`.
    pub fn remodulate(&self, labels: &[usize]) -> Vec<f64> {
        let bipolar = self.bipolar_of(&self.spectrum(labels));
        self.scheme.pair_values(self.n, &bipolar)
    }

    /// Transforms a per-pair bipolar estimate of `x` and reads the data bins
    /// in constellation units. For PAM-DMT the sine (imaginary) component is
    /// returned on the real axis.
    pub fn equalize(&self, pair_estimate: &[f64]) -> Vec<Complex64> {
        let full = self.scheme.expand_pairs(self.n, pair_estimate);
        let mut buf: Vec<Complex64> = full.into_iter().map(|x| Complex64::new(x, 0.0)).collect();
        self.plan.forward(&mut buf);
        (0..self.symbols_per_frame())
            .map(|k| {
                let z = buf[self.scheme.data_bin(k)] / self.scale;
                match self.scheme {
                    Scheme::PamDmt => Complex64::new(z.im, 0.0),
                    _ => z,
                }
            })
            .collect()
    }
}

pub fn tx_aco(bits: &[bool], constellation: &Constellation, n: usize, sigma_x: f64) -> Result<TxFrame> {
    Modem::new(Scheme::Aco, constellation.clone(), n, sigma_x)?.transmit(bits)
}

pub fn tx_flip(bits: &[bool], constellation: &Constellation, n: usize, sigma_x: f64) -> Result<TxFrame> {
    Modem::new(Scheme::Flip, constellation.clone(), n, sigma_x)?.transmit(bits)
}

pub fn tx_pamdmt(bits: &[bool], constellation: &Constellation, n: usize, sigma_x: f64) -> Result<TxFrame> {
    Modem::new(Scheme::PamDmt, constellation.clone(), n, sigma_x)?.transmit(bits)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dsp::ConstellationKind;

    fn qam(m: usize) -> Constellation {
        Constellation::new(ConstellationKind::Qam(m)).unwrap()
    }

    #[test]
    fn identical_symbols_give_two_zeros_at_n4() {
        let f = tx_aco(&[false, false], &qam(4), 4, 1.0).unwrap();
        assert_eq!(f.intensity[0].zero_count(), 2);
    }

    #[test]
    fn bit_length_mismatch() {
        let err = tx_aco(&[false; 5], &qam(4), 16, 1.0).unwrap_err();
        assert_eq!(err, Error::BitLength { expected: 8, got: 5 });
        assert!(tx_flip(&[false; 3], &qam(4), 8, 1.0).is_err());
    }

    #[test]
    fn pamdmt_needs_pam() {
        assert!(tx_pamdmt(&[false; 6], &qam(4), 8, 1.0).is_err());
    }

    #[test]
    fn flip_blocks_are_disjoint() {
        let bits: Vec<bool> = (0..(64 / 2 - 1) * 4).map(|i| (i * 7 + 3) % 5 < 2).collect();
        let f = tx_flip(&bits, &qam(16), 64, 1.0).unwrap();
        let (s1, s2) = (f.intensity[0].samples(), f.intensity[1].samples());
        for i in 0..64 {
            assert_eq!(s1[i] * s2[i], 0.0);
            assert!((s1[i] - s2[i] - f.bipolar.samples()[i]).abs() < 1e-15);
        }
    }

    #[test]
    fn equalize_inverts_transmit_without_noise() {
        for (scheme, kind) in [
            (Scheme::Aco, ConstellationKind::Qam(16)),
            (Scheme::Flip, ConstellationKind::Qam(4)),
            (Scheme::PamDmt, ConstellationKind::Pam(4)),
        ] {
            let modem = Modem::new(scheme, Constellation::new(kind).unwrap(), 32, 2.5).unwrap();
            let bits: Vec<bool> = (0..modem.bits_per_frame()).map(|i| (i * 5) % 3 == 0).collect();
            let f = modem.transmit(&bits).unwrap();
            let soft = modem.equalize(&f.pair_values());
            for (z, &label) in soft.iter().zip(&f.labels) {
                assert!((z - modem.constellation().points()[label]).norm() < 1e-12, "{scheme}");
            }
        }
    }
}
