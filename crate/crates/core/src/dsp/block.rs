use crate::error::{invalid, Result};
use num_complex::Complex64;

const HERMITIAN_TOL: f64 = 1e-10;

fn check_len(n: usize) -> Result<()> {
    if n == 0 || !n.is_power_of_two() {
        Err(invalid(format!("block length {n} is not a power of two")))
    } else {
        Ok(())
    }
}

/// Frequency-domain block with Hermitian symmetry `X[k] = conj(X[N-k])`.
#[derive(Debug, Clone, PartialEq)]
pub struct FrequencyBlock {
    bins: Vec<Complex64>,
}

impl FrequencyBlock {
    /// Validates length and Hermitian symmetry (relative tolerance 1e-10).
    pub fn new(bins: Vec<Complex64>) -> Result<Self> {
        check_len(bins.len())?;
        let n = bins.len();
        let norm = bins.iter().map(|b| b.norm_sqr()).sum::<f64>().sqrt();
        let tol = HERMITIAN_TOL * norm.max(1.0);
        for k in 0..n {
            let mirror = (n - k) % n;
            if (bins[k] - bins[mirror].conj()).norm() > tol {
                return Err(invalid(format!("bin {k} breaks Hermitian symmetry")));
            }
        }
        Ok(FrequencyBlock { bins })
    }

    /// Wraps the spectrum of a real signal; symmetry holds up to rounding.
    pub(crate) fn from_transform(bins: Vec<Complex64>) -> Self {
        FrequencyBlock { bins }
    }

    pub fn len(&self) -> usize {
        self.bins.len()
    }

    pub fn is_empty(&self) -> bool {
        self.bins.is_empty()
    }

    pub fn bins(&self) -> &[Complex64] {
        &self.bins
    }

    pub fn energy(&self) -> f64 {
        self.bins.iter().map(|b| b.norm_sqr()).sum()
    }

    /// True when every even bin (including DC and Nyquist) is exactly zero.
    pub fn is_aco_layout(&self) -> bool {
        self.bins.iter().step_by(2).all(|b| b.re == 0.0 && b.im == 0.0)
    }
}

/// Real bipolar time-domain block.
#[derive(Debug, Clone, PartialEq)]
pub struct TimeBlock {
    samples: Vec<f64>,
}

impl TimeBlock {
    pub fn new(samples: Vec<f64>) -> Result<Self> {
        check_len(samples.len())?;
        Ok(TimeBlock { samples })
    }

    pub fn len(&self) -> usize {
        self.samples.len()
    }

    pub fn is_empty(&self) -> bool {
        self.samples.is_empty()
    }

    pub fn samples(&self) -> &[f64] {
        &self.samples
    }

    pub fn into_samples(self) -> Vec<f64> {
        self.samples
    }

    pub fn energy(&self) -> f64 {
        self.samples.iter().map(|x| x * x).sum()
    }

    /// Largest `|x[i] + x[i + N/2]|`; zero for an ACO frame.
    pub fn half_period_antisymmetry_residue(&self) -> f64 {
        let h = self.samples.len() / 2;
        (0..h)
            .map(|i| (self.samples[i] + self.samples[i + h]).abs())
            .fold(0.0, f64::max)
    }
}

/// Nonnegative optical-intensity block.
#[derive(Debug, Clone, PartialEq)]
pub struct IntensityBlock {
    samples: Vec<f64>,
}

impl IntensityBlock {
    pub fn new(samples: Vec<f64>) -> Result<Self> {
        if let Some(i) = samples.iter().position(|&s| !(s >= 0.0)) {
            return Err(invalid(format!("intensity sample {i} is negative or NaN")));
        }
        Ok(IntensityBlock { samples })
    }

    /// Positive part `max(x, 0)` of a bipolar block.
    pub fn positive_part(block: &TimeBlock) -> Self {
        IntensityBlock {
            samples: block.samples().iter().map(|&x| x.max(0.0)).collect(),
        }
    }

    /// Negated negative part `-min(x, 0)` of a bipolar block.
    pub fn negative_part(block: &TimeBlock) -> Self {
        IntensityBlock {
            samples: block.samples().iter().map(|&x| (-x).max(0.0)).collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.samples.len()
    }

    pub fn is_empty(&self) -> bool {
        self.samples.is_empty()
    }

    pub fn samples(&self) -> &[f64] {
        &self.samples
    }

    pub fn zero_count(&self) -> usize {
        self.samples.iter().filter(|&&s| s == 0.0).count()
    }
}

/// Places `N/4` symbols on the odd bins `1, 3, ..., N/2 - 1` and their
/// conjugates on `N - 1, N - 3, ..., N/2 + 1`. Every even bin, including the
/// Nyquist bin, is zero.
pub fn load_aco_frame(symbols: &[Complex64], n: usize) -> Result<FrequencyBlock> {
    check_len(n)?;
    if n < 4 {
        return Err(invalid(format!("ACO frame length {n} must be at least 4")));
    }
    if symbols.len() != n / 4 {
        return Err(invalid(format!(
            "ACO frame of length {n} takes {} symbols, got {}",
            n / 4,
            symbols.len()
        )));
    }
    let mut bins = vec![Complex64::new(0.0, 0.0); n];
    for (k, &s) in symbols.iter().enumerate() {
        let bin = 2 * k + 1;
        bins[bin] = s;
        bins[n - bin] = s.conj();
    }
    Ok(FrequencyBlock { bins })
}
