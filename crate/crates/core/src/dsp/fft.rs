//! Unitary radix-2 decimation-in-time FFT.
//!
//! Both directions are scaled by `1/sqrt(N)`, so `||x||^2 = ||X||^2`.

use super::block::{FrequencyBlock, TimeBlock};
use crate::error::{invalid, Result};
use num_complex::Complex64;
use std::f64::consts::PI;

/// Precomputed twiddles and bit-reversal permutation for one block length.
#[derive(Debug, Clone)]
pub struct FftPlan {
    n: usize,
    log2n: u32,
    twiddles: Vec<Complex64>,
    scale: f64,
}

impl FftPlan {
    pub fn new(n: usize) -> Result<Self> {
        if n == 0 || !n.is_power_of_two() {
            return Err(invalid(format!("transform length {n} is not a power of two")));
        }
        let twiddles = (0..n / 2)
            .map(|k| Complex64::from_polar(1.0, -2.0 * PI * k as f64 / n as f64))
            .collect();
        Ok(FftPlan {
            n,
            log2n: n.trailing_zeros(),
            twiddles,
            scale: 1.0 / (n as f64).sqrt(),
        })
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    /// In-place forward transform, `X[k] = N^{-1/2} sum_i x[i] e^{-2 pi j i k / N}`.
    pub fn forward(&self, data: &mut [Complex64]) {
        self.transform(data, false);
    }

    /// In-place inverse transform.
    pub fn inverse(&self, data: &mut [Complex64]) {
        self.transform(data, true);
    }

    fn transform(&self, data: &mut [Complex64], inverse: bool) {
        assert_eq!(data.len(), self.n, "buffer length does not match plan");
        let n = self.n;
        if n == 1 {
            return;
        }
        let shift = usize::BITS - self.log2n;
        for i in 0..n {
            let j = i.reverse_bits() >> shift;
            if j > i {
                data.swap(i, j);
            }
        }
        let mut half = 1;
        while half < n {
            let stride = n / (2 * half);
            for start in (0..n).step_by(2 * half) {
                for k in 0..half {
                    let mut w = self.twiddles[k * stride];
                    if inverse {
                        w = w.conj();
                    }
                    let t = w * data[start + k + half];
                    let u = data[start + k];
                    data[start + k] = u + t;
                    data[start + k + half] = u - t;
                }
            }
            half *= 2;
        }
        for v in data.iter_mut() {
            *v *= self.scale;
        }
    }
}

/// Forward unitary DFT of a real block.
pub fn dft(block: &TimeBlock) -> Result<FrequencyBlock> {
    let plan = FftPlan::new(block.len())?;
    let mut buf: Vec<Complex64> = block.samples().iter().map(|&x| Complex64::new(x, 0.0)).collect();
    plan.forward(&mut buf);
    Ok(FrequencyBlock::from_transform(buf))
}

/// Inverse unitary DFT of a Hermitian block; the result is real.
pub fn idft(block: &FrequencyBlock) -> Result<TimeBlock> {
    let plan = FftPlan::new(block.len())?;
    let mut buf = block.bins().to_vec();
    plan.inverse(&mut buf);
    TimeBlock::new(buf.into_iter().map(|c| c.re).collect())
}
