use crate::dsp::ConstellationKind;
use crate::error::{invalid, Error, Result};
use crate::inforate::{snr_convert, SnrOperatingPoint};
use crate::txrx::{Receiver, Scheme};
use std::path::PathBuf;
use std::str::FromStr;

/// Which SNR convention a grid is expressed in.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum SnrAxis {
    #[default]
    Optical,
    Electrical,
}

impl SnrAxis {
    /// Operating point at noise level `sigma` for a grid value in dB.
    pub fn point(self, db: f64, sigma: f64) -> Result<SnrOperatingPoint> {
        snr_convert(db, self == SnrAxis::Electrical, sigma)
    }
}

/// Parses an SNR grid: `start:stop:step` (inclusive), `start:stop` (unit
/// step), a comma list, or the empty string.
pub fn parse_grid(spec: &str) -> Result<Vec<f64>> {
    let spec = spec.trim();
    if spec.is_empty() {
        return Ok(Vec::new());
    }
    let bad = || Error::InvalidGrid(spec.to_string());
    let num = |s: &str| -> Result<f64> {
        let v = f64::from_str(s.trim()).map_err(|_| bad())?;
        if v.is_finite() {
            Ok(v)
        } else {
            Err(bad())
        }
    };
    if spec.contains(':') {
        let parts: Vec<&str> = spec.split(':').collect();
        let (start, stop, step) = match parts.as_slice() {
            [a, b] => (num(a)?, num(b)?, 1.0),
            [a, b, s] => (num(a)?, num(b)?, num(s)?),
            _ => return Err(bad()),
        };
        if !(step > 0.0) || stop < start {
            return Err(bad());
        }
        let count = ((stop - start) / step + 1e-9).floor() as usize + 1;
        if count > 1_000_000 {
            return Err(bad());
        }
        // Round away representation noise such as 0.30000000000000004.
        return Ok((0..count)
            .map(|k| ((start + k as f64 * step) * 1e9).round() / 1e9)
            .collect());
    }
    spec.split(',').map(num).collect()
}

/// Configuration of a BER sweep.
#[derive(Debug, Clone)]
pub struct SimConfig {
    pub scheme: Scheme,
    pub constellation: ConstellationKind,
    pub receivers: Vec<Receiver>,
    pub n: usize,
    pub grid_db: Vec<f64>,
    pub axis: SnrAxis,
    /// Frame cap per (SNR, receiver) point.
    pub max_frames: u64,
    /// Stop a point once this many bit errors have been seen.
    pub target_errors: u64,
    pub seed: u64,
    /// Frames simulated between checks of the stopping rule.
    pub batch_frames: u64,
    pub sigma: f64,
    pub output: Option<PathBuf>,
}

impl Default for SimConfig {
    fn default() -> Self {
        SimConfig {
            scheme: Scheme::Aco,
            constellation: ConstellationKind::Qam(4),
            receivers: vec![Receiver::Conventional],
            n: 64,
            grid_db: Vec::new(),
            axis: SnrAxis::Optical,
            max_frames: 100_000,
            target_errors: 200,
            seed: 1,
            batch_frames: 64,
            sigma: 1.0,
            output: None,
        }
    }
}

impl SimConfig {
    pub fn validate(&self) -> Result<()> {
        self.scheme.validate_len(self.n)?;
        if self.receivers.is_empty() {
            return Err(invalid("no receivers selected"));
        }
        if self.batch_frames == 0 {
            return Err(invalid("batch size must be positive"));
        }
        if self.target_errors == 0 {
            return Err(invalid("target error count must be positive"));
        }
        if !(self.sigma > 0.0 && self.sigma.is_finite()) {
            return Err(invalid("noise sigma must be positive"));
        }
        if let Some(bad) = self.grid_db.iter().find(|v| !v.is_finite()) {
            return Err(Error::InvalidGrid(bad.to_string()));
        }
        if self.scheme == Scheme::PamDmt && !matches!(self.constellation, ConstellationKind::Pam(_)) {
            return Err(invalid("PAM-DMT carries real PAM symbols"));
        }
        Ok(())
    }
}
