//! Seeded Monte-Carlo BER sweeps, information-rate sweeps and CSV output.
//!
//! Every BER frame draws from its own ChaCha8 stream whose seed hashes the
//! master seed, the SNR value, the receiver and the frame index. Frames run
//! in parallel in fixed-size batches and the stopping rule is checked only
//! between batches, so results depend on neither the thread count nor which
//! other points share the grid.

mod ber;
mod config;
mod output;
mod rate;
mod selftest;

pub use ber::{frame_seed, qam4_aco_ber, run_ber_point, run_ber_sweep, wilson_interval, BerPoint, WILSON_Z};
pub use config::{parse_grid, SimConfig, SnrAxis};
pub use output::{write_ber_csv, write_rate_csv, CSV_HEADER};
pub use rate::{run_rate_sweep, RateConfig, RateInput, RateQuantity};
pub use selftest::{run_selftest, CheckResult};
