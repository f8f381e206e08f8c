//! Gray-labelled unit-energy constellations.
//!
//! Point `i` of every constellation carries label `i`, read MSB first. The
//! tables are generated from the binary-reflected Gray code:
//!
//! - square `M`-QAM (`M = 4^k`): the top `k` bits Gray-code the in-phase
//!   level and the bottom `k` bits the quadrature level. Level code `g`
//!   sits at amplitude `(L - 1) - 2 * gray_inv(g)` with `L = sqrt(M)`, so the
//!   all-zero label is the upper-right corner. For 4-QAM this gives
//!   `00 -> (1+j)/sqrt2, 01 -> (1-j)/sqrt2, 10 -> (-1+j)/sqrt2, 11 -> (-1-j)/sqrt2`.
//! - `M`-PSK: label `g` sits at phase `2 pi gray_inv(g) / M`.
//! - `M`-PAM: label `g` sits at amplitude `(M - 1) - 2 gray_inv(g)` on the
//!   real axis.
//!
//! Every table is scaled to unit mean energy.

use crate::error::{invalid, Error, Result};
use num_complex::Complex64;
use std::f64::consts::PI;
use std::fmt;
use std::str::FromStr;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ConstellationKind {
    Qam(usize),
    Psk(usize),
    Pam(usize),
}

impl fmt::Display for ConstellationKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ConstellationKind::Qam(m) => write!(f, "QAM-{m}"),
            ConstellationKind::Psk(m) => write!(f, "PSK-{m}"),
            ConstellationKind::Pam(m) => write!(f, "PAM-{m}"),
        }
    }
}

impl FromStr for ConstellationKind {
    type Err = Error;

    /// Accepts `qam16`, `QAM-16`, `psk8`, `pam-4`, ... and rejects orders
    /// that do not form a constellation.
    fn from_str(s: &str) -> Result<Self> {
        let lower = s.trim().to_ascii_lowercase().replace(['-', '_'], "");
        let (family, order) = lower.split_at(lower.len().min(3));
        let m: usize = order
            .parse()
            .map_err(|_| invalid(format!("unrecognised constellation `{s}`")))?;
        let kind = match family {
            "qam" => ConstellationKind::Qam(m),
            "psk" => ConstellationKind::Psk(m),
            "pam" => ConstellationKind::Pam(m),
            _ => return Err(invalid(format!("unrecognised constellation `{s}`"))),
        };
        Constellation::new(kind).map(|_| kind)
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Constellation {
    kind: ConstellationKind,
    bits: usize,
    points: Vec<Complex64>,
}

fn gray_inv(mut g: usize) -> usize {
    let mut l = g;
    while g > 0 {
        g >>= 1;
        l ^= g;
    }
    l
}

impl Constellation {
    pub fn new(kind: ConstellationKind) -> Result<Self> {
        let points = match kind {
            ConstellationKind::Qam(m) => {
                let bits = m.trailing_zeros() as usize;
                if m < 4 || !m.is_power_of_two() || !bits.is_multiple_of(2) {
                    return Err(invalid(format!("QAM order {m} is not a power of 4")));
                }
                let half = bits / 2;
                let levels = 1usize << half;
                let amp = |g: usize| ((levels - 1) as f64) - 2.0 * gray_inv(g) as f64;
                let norm = (3.0 / (2.0 * ((levels * levels) as f64 - 1.0))).sqrt();
                (0..m)
                    .map(|label| {
                        let gi = label >> half;
                        let gq = label & (levels - 1);
                        Complex64::new(amp(gi), amp(gq)) * norm
                    })
                    .collect()
            }
            ConstellationKind::Psk(m) => {
                if m < 2 || !m.is_power_of_two() {
                    return Err(invalid(format!("PSK order {m} is not a power of 2")));
                }
                (0..m)
                    .map(|label| Complex64::from_polar(1.0, 2.0 * PI * gray_inv(label) as f64 / m as f64))
                    .collect()
            }
            ConstellationKind::Pam(m) => {
                if m < 2 || !m.is_power_of_two() {
                    return Err(invalid(format!("PAM order {m} is not a power of 2")));
                }
                let norm = (3.0 / ((m * m) as f64 - 1.0)).sqrt();
                (0..m)
                    .map(|label| Complex64::new((((m - 1) as f64) - 2.0 * gray_inv(label) as f64) * norm, 0.0))
                    .collect()
            }
        };
        let bits = match kind {
            ConstellationKind::Qam(m) | ConstellationKind::Psk(m) | ConstellationKind::Pam(m) => {
                m.trailing_zeros() as usize
            }
        };
        Ok(Constellation { kind, bits, points })
    }

    pub fn kind(&self) -> ConstellationKind {
        self.kind
    }

    pub fn name(&self) -> String {
        self.kind.to_string()
    }

    pub fn size(&self) -> usize {
        self.points.len()
    }

    pub fn bits_per_symbol(&self) -> usize {
        self.bits
    }

    pub fn points(&self) -> &[Complex64] {
        &self.points
    }

    /// Real-valued alphabets (PAM) only use the real axis.
    pub fn is_real(&self) -> bool {
        matches!(self.kind, ConstellationKind::Pam(_))
    }

    /// Label (point index) of a bit group, MSB first.
    pub fn label_of(&self, bits: &[bool]) -> Result<usize> {
        if bits.len() != self.bits {
            return Err(Error::BitLength {
                expected: self.bits,
                got: bits.len(),
            });
        }
        Ok(bits.iter().fold(0usize, |acc, &b| (acc << 1) | b as usize))
    }

    pub fn gray_map(&self, bits: &[bool]) -> Result<Complex64> {
        Ok(self.points[self.label_of(bits)?])
    }

    /// Index of the nearest point; ties go to the lowest index.
    pub fn nearest(&self, z: Complex64) -> usize {
        let mut best = 0;
        let mut best_d = f64::INFINITY;
        for (i, p) in self.points.iter().enumerate() {
            let d = (z - p).norm_sqr();
            if d < best_d {
                best_d = d;
                best = i;
            }
        }
        best
    }

    pub fn push_label_bits(&self, label: usize, out: &mut Vec<bool>) {
        for k in (0..self.bits).rev() {
            out.push((label >> k) & 1 == 1);
        }
    }

    pub fn gray_demap_hard(&self, z: Complex64) -> Vec<bool> {
        let mut out = Vec::with_capacity(self.bits);
        self.push_label_bits(self.nearest(z), &mut out);
        out
    }
}
