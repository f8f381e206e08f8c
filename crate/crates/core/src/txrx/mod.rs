//! Transmitters, the optical intensity channel and the receiver suite.
//!
//! Every scheme is described by a pairing of channel uses `(a, b)` such that
//! the transmitted intensities are `s[a] = max(x, 0)` and
//! `s[b] = max(-x, 0)` for one bipolar value `x` per pair. The receiver
//! works on `y1 = r[a] - r[b] = x + z1` and `y2 = r[a] + r[b] = |x| + z2`.

mod channel;
mod modem;
mod observation;
mod rx;
mod scheme;

pub use channel::{channel, pass_frame, ChannelSpec};
pub use modem::{tx_aco, tx_flip, tx_pamdmt, Modem, TxFrame};
pub use observation::{split_pairs, EquivalentObservation};
pub use rx::{
    rx_conventional, rx_decision_directed, rx_genie, rx_negative_clipping, rx_noise_filtering,
    rx_pairwise_clip, Detection, Receiver, DEFAULT_DD_ITERATIONS,
};
pub use scheme::Scheme;

pub use crate::inforate::SnrOperatingPoint;
