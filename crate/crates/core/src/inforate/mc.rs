//! Monte-Carlo estimate of `I(X; Y2 | Y1)`, an independent check on the
//! quadrature route.

use super::gaussian::GaussianClipModel;
use super::quad::Estimate;
use super::special::normal_pdf;
use crate::error::{invalid, Result};
use rand::Rng;
use rand_distr::StandardNormal;

/// Sample mean of `log2 p(y2 | x) / p(y2 | y1)` and its standard error.
pub fn mc_mutual_information<R: Rng + ?Sized>(model: &GaussianClipModel, n_samples: usize, rng: &mut R) -> Result<Estimate> {
    if n_samples < 2 {
        return Err(invalid("Monte-Carlo estimate needs at least 2 samples"));
    }
    let sz = model.sigma_z();
    let (mut sum, mut sum2) = (0.0, 0.0);
    for _ in 0..n_samples {
        let x = model.sigma_x() * rng.sample::<f64, _>(StandardNormal);
        let y1 = x + sz * rng.sample::<f64, _>(StandardNormal);
        let y2 = x.abs() + sz * rng.sample::<f64, _>(StandardNormal);
        let v = (normal_pdf(y2, x.abs(), sz) / model.cond_pdf(y1, y2)).log2();
        sum += v;
        sum2 += v * v;
    }
    let n = n_samples as f64;
    let mean = sum / n;
    let var = (sum2 / n - mean * mean).max(0.0) * n / (n - 1.0);
    Ok(Estimate::new(mean, (var / n).sqrt()))
}
