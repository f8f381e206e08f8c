//! Information rates of ACO-OFDM: exact densities, conditional-entropy
//! quadrature, Monte-Carlo cross-checks, discrete-constellation rates and
//! the asymptotic limits they approach.
//!
//! Rates are in bits per real channel use. SNR is parameterized by the
//! optical SNR `E[S]/sigma`; the electrical SNR is `E[S^2]/sigma^2 = pi SNR_o^2`.

mod clipped;
mod discrete;
mod gaussian;
mod identity;
mod mc;
pub mod quad;
pub mod special;
mod snr;

pub use clipped::{rate_clipped_pam, ClippedPam};
pub use discrete::{
    constellation_mi, rate_discrete_conventional, rate_genie_bound, rate_thresholds, rate_upper_bound_discrete,
    threshold_snr_db, MiMethod, RateThreshold,
};
pub use gaussian::{
    capacity_high_snr_asymptote, cond_entropy_y2_given_y1, cond_pdf_y2_given_y1, delta_gain, equivalent_gain_db,
    optical_gain_db, rate_conventional_gaussian, rate_genie_bound_gaussian, rate_improved_gaussian,
    GaussianClipModel, QuadratureSpec, SnrGain,
};
pub use identity::{entropy_identity_check, gaussian_entropy, half_gaussian_entropy};
pub use mc::mc_mutual_information;
pub use quad::Estimate;
pub use snr::{
    db_to_linear, electrical_db_from_optical_db, electrical_from_optical, linear_to_db,
    optical_db_from_electrical_db, optical_from_electrical, snr_convert, SnrOperatingPoint,
};

use std::fmt;

/// How a rate value was obtained.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EstimatorKind {
    ClosedForm,
    Quadrature,
    MonteCarlo,
}

impl fmt::Display for EstimatorKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            EstimatorKind::ClosedForm => "closed-form",
            EstimatorKind::Quadrature => "quadrature",
            EstimatorKind::MonteCarlo => "monte-carlo",
        })
    }
}

/// One labelled value of a rate sweep.
#[derive(Debug, Clone, PartialEq)]
pub struct RatePoint {
    pub snr_optical_db: f64,
    pub snr_electrical_db: f64,
    /// e.g. `conventional`, `improved`, `delta`, `gain-optical-db`.
    pub quantity: String,
    /// Input distribution: `gaussian` or a constellation name.
    pub input: String,
    pub method: EstimatorKind,
    pub value: f64,
    pub error: f64,
}

impl RatePoint {
    pub fn new(point: &SnrOperatingPoint, quantity: impl Into<String>, method: EstimatorKind, est: Estimate) -> Self {
        RatePoint {
            snr_optical_db: point.snr_optical_db,
            snr_electrical_db: point.snr_electrical_db,
            quantity: quantity.into(),
            input: "gaussian".into(),
            method,
            value: est.value,
            error: est.error,
        }
    }

    pub fn with_input(mut self, input: impl Into<String>) -> Self {
        self.input = input.into();
        self
    }
}
