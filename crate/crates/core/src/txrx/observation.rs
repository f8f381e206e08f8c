use super::scheme::Scheme;
use crate::error::{invalid, Result};

/// The pair `(Y1, Y2)`: `y1 = r[a] - r[b]`, `y2 = r[a] + r[b]` for each
/// channel-use pair `(a, b)` of the scheme.
#[derive(Debug, Clone, PartialEq)]
pub struct EquivalentObservation {
    pub scheme: Scheme,
    pub n: usize,
    pub y1: Vec<f64>,
    pub y2: Vec<f64>,
}

impl EquivalentObservation {
    pub fn len(&self) -> usize {
        self.y1.len()
    }

    pub fn is_empty(&self) -> bool {
        self.y1.is_empty()
    }

    /// `r[a]` of pair `p`.
    #[inline]
    pub fn first(&self, p: usize) -> f64 {
        0.5 * (self.y1[p] + self.y2[p])
    }

    /// `r[b]` of pair `p`.
    #[inline]
    pub fn second(&self, p: usize) -> f64 {
        0.5 * (self.y2[p] - self.y1[p])
    }

    /// Inverse of [`split_pairs`].
    pub fn reconstruct(&self) -> Vec<f64> {
        let mut r = vec![0.0; self.scheme.channel_uses(self.n)];
        for p in 0..self.len() {
            let (a, b) = self.scheme.pair(self.n, p);
            r[a] = self.first(p);
            r[b] = self.second(p);
        }
        r
    }
}

pub fn split_pairs(received: &[f64], scheme: Scheme, n: usize) -> Result<EquivalentObservation> {
    scheme.validate_len(n)?;
    if received.len() != scheme.channel_uses(n) {
        return Err(invalid(format!(
            "{scheme} frame of N={n} spans {} channel uses, got {}",
            scheme.channel_uses(n),
            received.len()
        )));
    }
    let pairs = scheme.num_pairs(n);
    let mut y1 = Vec::with_capacity(pairs);
    let mut y2 = Vec::with_capacity(pairs);
    for p in 0..pairs {
        let (a, b) = scheme.pair(n, p);
        y1.push(received[a] - received[b]);
        y2.push(received[a] + received[b]);
    }
    Ok(EquivalentObservation { scheme, n, y1, y2 })
}
