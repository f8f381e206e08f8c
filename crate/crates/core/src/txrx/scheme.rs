use crate::error::{invalid, Error, Result};
use std::fmt;
use std::str::FromStr;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Scheme {
    /// Odd subcarriers only, clipped at zero.
    Aco,
    /// Positive and negated-negative parts sent in two consecutive blocks.
    Flip,
    /// Real PAM on sine subcarriers, clipped at zero.
    PamDmt,
}

impl fmt::Display for Scheme {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Scheme::Aco => "aco",
            Scheme::Flip => "flip",
            Scheme::PamDmt => "pamdmt",
        })
    }
}

impl FromStr for Scheme {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().replace(['-', '_'], "").as_str() {
            "aco" | "acoofdm" => Ok(Scheme::Aco),
            "flip" | "flipofdm" => Ok(Scheme::Flip),
            "pamdmt" | "pam" => Ok(Scheme::PamDmt),
            _ => Err(invalid(format!("unknown scheme `{s}`"))),
        }
    }
}

impl Scheme {
    pub fn validate_len(self, n: usize) -> Result<()> {
        if n < 4 || !n.is_power_of_two() {
            return Err(invalid(format!("block length {n} must be a power of two >= 4")));
        }
        Ok(())
    }

    /// Data symbols carried by one frame.
    pub fn symbols_per_frame(self, n: usize) -> usize {
        match self {
            Scheme::Aco => n / 4,
            Scheme::Flip | Scheme::PamDmt => n / 2 - 1,
        }
    }

    /// Channel uses occupied by one frame.
    pub fn channel_uses(self, n: usize) -> usize {
        match self {
            Scheme::Aco | Scheme::PamDmt => n,
            Scheme::Flip => 2 * n,
        }
    }

    pub fn num_pairs(self, n: usize) -> usize {
        self.channel_uses(n) / 2
    }

    /// Channel-use indices `(a, b)` of pair `p`. For PAM-DMT the
    /// self-symmetric samples 0 and N/2 (both zero before noise) share
    /// pair 0.
    pub fn pair(self, n: usize, p: usize) -> (usize, usize) {
        match self {
            Scheme::Aco => (p, p + n / 2),
            Scheme::Flip => (p, p + n),
            Scheme::PamDmt => {
                if p == 0 {
                    (0, n / 2)
                } else {
                    (p, n - p)
                }
            }
        }
    }

    /// Frequency bin of data symbol `k`.
    pub fn data_bin(self, k: usize) -> usize {
        match self {
            Scheme::Aco => 2 * k + 1,
            Scheme::Flip | Scheme::PamDmt => k + 1,
        }
    }

    /// Number of nonzero bins in a frame.
    pub fn active_bins(self, n: usize) -> usize {
        match self {
            Scheme::Aco => n / 2,
            Scheme::Flip | Scheme::PamDmt => n - 2,
        }
    }

    /// Expands per-pair bipolar values into the full length-`n` bipolar block.
    pub fn expand_pairs(self, n: usize, values: &[f64]) -> Vec<f64> {
        match self {
            Scheme::Aco => values.iter().copied().chain(values.iter().map(|v| -v)).collect(),
            Scheme::Flip => values.to_vec(),
            Scheme::PamDmt => {
                let mut full = vec![0.0; n];
                for (p, &v) in values.iter().enumerate() {
                    let (a, b) = self.pair(n, p);
                    full[a] = v;
                    full[b] = -v;
                }
                full
            }
        }
    }

    /// Bipolar value of each pair, read from the full bipolar block.
    pub fn pair_values(self, n: usize, bipolar: &[f64]) -> Vec<f64> {
        (0..self.num_pairs(n)).map(|p| bipolar[self.pair(n, p).0]).collect()
    }
}
