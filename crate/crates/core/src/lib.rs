//! Simulation and information-rate analysis of ACO-OFDM and the related
//! Flip-OFDM and PAM-DMT schemes over the discrete-time optical intensity
//! channel `R = S + W`, `S >= 0`, `W ~ N(0, sigma^2)`.
//!
//! The crate is split into four layers:
//!
//! - [`dsp`]: unitary radix-2 transforms, frequency/time blocks and Gray
//!   labelled constellations.
//! - [`txrx`]: transmitters, the intensity channel, the pairwise
//!   `(Y1, Y2)` decomposition and the receiver suite (conventional,
//!   improved and genie-aided).
//! - [`inforate`]: information rates under Gaussian and discrete inputs,
//!   the conditional-entropy quadrature behind the improved-receiver gain,
//!   Monte-Carlo cross-checks and asymptotic limits.
//! - [`harness`]: seeded Monte-Carlo BER sweeps, rate sweeps and CSV output.

// `!(x > 0.0)` is used on purpose so that NaN parameters are rejected.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod dsp;
pub mod error;
pub mod harness;
pub mod inforate;
pub mod txrx;

pub use error::{Error, Result};
