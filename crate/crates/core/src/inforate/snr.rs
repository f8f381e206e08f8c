//! Optical (`E[S]/sigma`) and electrical (`E[S^2]/sigma^2`) SNR.
//!
//! For clipped-Gaussian channel inputs `E[S] = sigma_x / sqrt(2 pi)` and
//! `E[S^2] = sigma_x^2 / 2`, hence `SNR_e = pi * SNR_o^2`. Both dB scales use
//! `10 log10`, so 1.5 dB optical equals 3 dB electrical.

use crate::error::{invalid, Result};
use std::f64::consts::PI;

pub fn db_to_linear(db: f64) -> f64 {
    10f64.powf(db / 10.0)
}

pub fn linear_to_db(x: f64) -> f64 {
    10.0 * x.log10()
}

pub fn electrical_from_optical(snr_o: f64) -> f64 {
    PI * snr_o * snr_o
}

pub fn optical_from_electrical(snr_e: f64) -> f64 {
    (snr_e / PI).sqrt()
}

pub fn electrical_db_from_optical_db(db_o: f64) -> f64 {
    2.0 * db_o + linear_to_db(PI)
}

pub fn optical_db_from_electrical_db(db_e: f64) -> f64 {
    0.5 * (db_e - linear_to_db(PI))
}

/// A fully specified operating point at noise level `sigma`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SnrOperatingPoint {
    pub snr_optical_db: f64,
    pub snr_electrical_db: f64,
    /// Standard deviation of the bipolar time-domain signal.
    pub sigma_x: f64,
    pub sigma: f64,
}

impl SnrOperatingPoint {
    pub fn from_optical_linear(snr_o: f64, sigma: f64) -> Result<Self> {
        if !(snr_o >= 0.0) || !(sigma > 0.0) {
            return Err(invalid(format!("invalid operating point SNR_o={snr_o}, sigma={sigma}")));
        }
        Ok(SnrOperatingPoint {
            snr_optical_db: linear_to_db(snr_o),
            snr_electrical_db: linear_to_db(electrical_from_optical(snr_o)),
            sigma_x: (2.0 * PI).sqrt() * snr_o * sigma,
            sigma,
        })
    }

    /// Keeps `db` exactly rather than round-tripping it through linear scale.
    pub fn from_optical_db(db: f64, sigma: f64) -> Result<Self> {
        let mut p = Self::from_optical_linear(db_to_linear(db), sigma)?;
        p.snr_optical_db = db;
        p.snr_electrical_db = electrical_db_from_optical_db(db);
        Ok(p)
    }

    pub fn from_electrical_db(db: f64, sigma: f64) -> Result<Self> {
        let mut p = Self::from_optical_linear(optical_from_electrical(db_to_linear(db)), sigma)?;
        p.snr_electrical_db = db;
        p.snr_optical_db = optical_db_from_electrical_db(db);
        Ok(p)
    }

    pub fn optical_linear(&self) -> f64 {
        self.sigma_x / ((2.0 * PI).sqrt() * self.sigma)
    }

    pub fn electrical_linear(&self) -> f64 {
        self.sigma_x * self.sigma_x / (2.0 * self.sigma * self.sigma)
    }

    /// Average optical intensity `E[S]`.
    pub fn mean_intensity(&self) -> f64 {
        self.sigma_x / (2.0 * PI).sqrt()
    }
}

/// Converts an operating point given in either convention.
pub fn snr_convert(db: f64, electrical: bool, sigma: f64) -> Result<SnrOperatingPoint> {
    if electrical {
        SnrOperatingPoint::from_electrical_db(db, sigma)
    } else {
        SnrOperatingPoint::from_optical_db(db, sigma)
    }
}
