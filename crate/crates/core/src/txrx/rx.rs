//! Receiver suite.
//!
//! Every receiver forms a per-pair estimate of the bipolar value `x`, then
//! transforms it and slices the data bins against the full-amplitude
//! constellation (see [`Modem::equalize`]). They differ only in how the
//! estimate is built from `(r[a], r[b])`:
//!
//! | receiver          | estimate of `x`                                        |
//! |-------------------|--------------------------------------------------------|
//! | conventional      | `r[a] - r[b]`                                          |
//! | negative clipping | `max(r[a],0) - max(r[b],0)`                            |
//! | noise filtering   | `y1 >= 0 ? r[a] : -r[b]`                               |
//! | pairwise clip     | `y1 >= 0 ? max(r[a],0) : -max(r[b],0)`                 |
//! | decision directed | noise-filtering rule with the sign of the regenerated signal |
//! | genie             | true sign, `r[a]` or `-r[b]`                           |
//! | genie clip        | true sign, `max(r[a],0)` or `-max(r[b],0)`             |

use super::modem::Modem;
use super::observation::EquivalentObservation;
use crate::error::{invalid, Error, Result};
use num_complex::Complex64;
use std::fmt;
use std::str::FromStr;

pub const DEFAULT_DD_ITERATIONS: usize = 2;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Receiver {
    Conventional,
    NegativeClipping,
    PairwiseClip,
    NoiseFiltering,
    DecisionDirected { iterations: usize },
    Genie { negative_clip: bool },
}

impl Receiver {
    pub const ALL: [Receiver; 7] = [
        Receiver::Conventional,
        Receiver::NegativeClipping,
        Receiver::PairwiseClip,
        Receiver::NoiseFiltering,
        Receiver::DecisionDirected {
            iterations: DEFAULT_DD_ITERATIONS,
        },
        Receiver::Genie { negative_clip: false },
        Receiver::Genie { negative_clip: true },
    ];

    /// Stable numeric id used in seed derivation.
    pub fn id(&self) -> u64 {
        match self {
            Receiver::Conventional => 1,
            Receiver::NegativeClipping => 2,
            Receiver::PairwiseClip => 3,
            Receiver::NoiseFiltering => 4,
            Receiver::DecisionDirected { iterations } => 0x100 + *iterations as u64,
            Receiver::Genie { negative_clip: false } => 6,
            Receiver::Genie { negative_clip: true } => 7,
        }
    }

    pub fn needs_genie(&self) -> bool {
        matches!(self, Receiver::Genie { .. })
    }

    /// Runs the receiver. `lit` is the true sign pattern (`x > 0` per pair),
    /// required by the genie receivers and ignored by the others.
    pub fn detect(&self, modem: &Modem, obs: &EquivalentObservation, lit: Option<&[bool]>) -> Result<Detection> {
        match *self {
            Receiver::Conventional => Ok(rx_conventional(modem, obs)),
            Receiver::NegativeClipping => Ok(rx_negative_clipping(modem, obs)),
            Receiver::PairwiseClip => Ok(rx_pairwise_clip(modem, obs)),
            Receiver::NoiseFiltering => Ok(rx_noise_filtering(modem, obs)),
            Receiver::DecisionDirected { iterations } => Ok(rx_decision_directed(modem, obs, iterations)),
            Receiver::Genie { negative_clip } => {
                let lit = lit.ok_or_else(|| invalid("genie receiver needs the true sign pattern"))?;
                rx_genie(modem, obs, lit, negative_clip)
            }
        }
    }
}

impl fmt::Display for Receiver {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Receiver::Conventional => f.write_str("conventional"),
            Receiver::NegativeClipping => f.write_str("negative-clipping"),
            Receiver::PairwiseClip => f.write_str("pairwise-clip"),
            Receiver::NoiseFiltering => f.write_str("noise-filtering"),
            Receiver::DecisionDirected { iterations } if *iterations == DEFAULT_DD_ITERATIONS => {
                f.write_str("decision-directed")
            }
            Receiver::DecisionDirected { iterations } => write!(f, "decision-directed:{iterations}"),
            Receiver::Genie { negative_clip: false } => f.write_str("genie"),
            Receiver::Genie { negative_clip: true } => f.write_str("genie-clip"),
        }
    }
}

impl FromStr for Receiver {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim().to_ascii_lowercase().replace('_', "-");
        let (name, arg) = match s.split_once(':') {
            Some((n, a)) => (n.to_string(), Some(a.to_string())),
            None => (s.clone(), None),
        };
        let r = match name.as_str() {
            "conventional" => Receiver::Conventional,
            "negative-clipping" | "negclip" => Receiver::NegativeClipping,
            "pairwise-clip" | "pairwise" => Receiver::PairwiseClip,
            "noise-filtering" | "nf" => Receiver::NoiseFiltering,
            "decision-directed" | "dd" => {
                let iterations = match &arg {
                    Some(a) => a.parse().map_err(|_| Error::UnknownReceiver(s.clone()))?,
                    None => DEFAULT_DD_ITERATIONS,
                };
                return Ok(Receiver::DecisionDirected { iterations });
            }
            "genie" => Receiver::Genie { negative_clip: false },
            "genie-clip" => Receiver::Genie { negative_clip: true },
            _ => return Err(Error::UnknownReceiver(s)),
        };
        if arg.is_some() {
            return Err(Error::UnknownReceiver(s));
        }
        Ok(r)
    }
}

/// Detector output: equalized data-bin statistics (constellation units),
/// hard decisions and the demapped bits.
#[derive(Debug, Clone, PartialEq)]
pub struct Detection {
    pub soft: Vec<Complex64>,
    pub labels: Vec<usize>,
    pub bits: Vec<bool>,
}

fn slice(modem: &Modem, soft: Vec<Complex64>) -> Detection {
    let c = modem.constellation();
    let labels: Vec<usize> = soft.iter().map(|&z| c.nearest(z)).collect();
    let mut bits = Vec::with_capacity(labels.len() * c.bits_per_symbol());
    for &l in &labels {
        c.push_label_bits(l, &mut bits);
    }
    Detection { soft, labels, bits }
}

fn detect_with<F: Fn(usize) -> f64>(modem: &Modem, obs: &EquivalentObservation, estimate: F) -> Detection {
    let x_hat: Vec<f64> = (0..obs.len()).map(estimate).collect();
    slice(modem, modem.equalize(&x_hat))
}

/// Select `r[a]` when the pair is judged lit, `-r[b]` otherwise.
fn select(obs: &EquivalentObservation, p: usize, lit: bool, clip: bool) -> f64 {
    let (ra, rb) = (obs.first(p), obs.second(p));
    match (lit, clip) {
        (true, false) => ra,
        (false, false) => -rb,
        (true, true) => ra.max(0.0),
        (false, true) => -rb.max(0.0),
    }
}

/// Uses `Y1` only, which is equivalent to keeping the data bins of `R`.
pub fn rx_conventional(modem: &Modem, obs: &EquivalentObservation) -> Detection {
    detect_with(modem, obs, |p| obs.y1[p])
}

/// Clips negative received samples to zero before conventional detection.
pub fn rx_negative_clipping(modem: &Modem, obs: &EquivalentObservation) -> Detection {
    detect_with(modem, obs, |p| obs.first(p).max(0.0) - obs.second(p).max(0.0))
}

/// Keeps the larger sample of each pair, clipped at zero.
pub fn rx_pairwise_clip(modem: &Modem, obs: &EquivalentObservation) -> Detection {
    detect_with(modem, obs, |p| select(obs, p, obs.y1[p] >= 0.0, true))
}

/// Genie selection with the sign estimated from `y1`.
pub fn rx_noise_filtering(modem: &Modem, obs: &EquivalentObservation) -> Detection {
    detect_with(modem, obs, |p| select(obs, p, obs.y1[p] >= 0.0, false))
}

/// Starts from conventional decisions, regenerates the bipolar signal from
/// them and reuses its sign pattern in the genie selection rule.
pub fn rx_decision_directed(modem: &Modem, obs: &EquivalentObservation, iterations: usize) -> Detection {
    let mut det = rx_conventional(modem, obs);
    for _ in 0..iterations {
        let regenerated = modem.remodulate(&det.labels);
        let next = detect_with(modem, obs, |p| select(obs, p, regenerated[p] >= 0.0, false));
        let converged = next.labels == det.labels;
        det = next;
        if converged {
            break;
        }
    }
    det
}

/// Genie-aided receiver with the true sign pattern, optionally clipping
/// negative samples first.
pub fn rx_genie(modem: &Modem, obs: &EquivalentObservation, lit: &[bool], negative_clip: bool) -> Result<Detection> {
    if lit.len() != obs.len() {
        return Err(invalid(format!(
            "sign pattern has {} entries, observation has {} pairs",
            lit.len(),
            obs.len()
        )));
    }
    Ok(detect_with(modem, obs, |p| select(obs, p, lit[p], negative_clip)))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn names_round_trip() {
        for r in Receiver::ALL {
            assert_eq!(r.to_string().parse::<Receiver>().unwrap(), r);
        }
        assert_eq!(
            "dd:5".parse::<Receiver>().unwrap(),
            Receiver::DecisionDirected { iterations: 5 }
        );
        assert!(matches!("mmse".parse::<Receiver>(), Err(Error::UnknownReceiver(_))));
        assert!("genie:2".parse::<Receiver>().is_err());
    }

    #[test]
    fn ids_are_distinct() {
        let mut ids: Vec<u64> = Receiver::ALL.iter().map(|r| r.id()).collect();
        ids.sort();
        ids.dedup();
        assert_eq!(ids.len(), Receiver::ALL.len());
    }
}
