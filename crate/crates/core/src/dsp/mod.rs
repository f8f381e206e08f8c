//! Deterministic block transforms, constellations and the structural
//! algebra of ACO-OFDM frames.

mod block;
mod constellation;
mod fft;

pub use block::{load_aco_frame, FrequencyBlock, IntensityBlock, TimeBlock};
pub use constellation::{Constellation, ConstellationKind};
pub use fft::{dft, idft, FftPlan};

pub use num_complex::Complex64;
