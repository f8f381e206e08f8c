//! Gauss rules and adaptive composite integration.

use std::f64::consts::PI;

/// A quadrature result with an error estimate.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Estimate {
    pub value: f64,
    pub error: f64,
}

impl Estimate {
    pub fn new(value: f64, error: f64) -> Self {
        Estimate { value, error }
    }
}

/// Gauss-Legendre nodes and weights on `[-1, 1]`.
#[derive(Debug, Clone)]
pub struct GaussLegendre {
    pub nodes: Vec<f64>,
    pub weights: Vec<f64>,
}

impl GaussLegendre {
    /// Newton iteration on the Legendre three-term recurrence.
    pub fn new(order: usize) -> Self {
        assert!(order >= 1);
        let mut nodes = vec![0.0; order];
        let mut weights = vec![0.0; order];
        let m = order.div_ceil(2);
        let nf = order as f64;
        for i in 0..m {
            let mut z = (PI * (i as f64 + 0.75) / (nf + 0.5)).cos();
            let mut dp = 0.0;
            for _ in 0..100 {
                let (mut p1, mut p2) = (1.0, 0.0);
                for j in 0..order {
                    let p3 = p2;
                    p2 = p1;
                    p1 = ((2 * j + 1) as f64 * z * p2 - j as f64 * p3) / (j + 1) as f64;
                }
                dp = nf * (z * p1 - p2) / (z * z - 1.0);
                let dz = p1 / dp;
                z -= dz;
                if dz.abs() < 1e-16 {
                    break;
                }
            }
            nodes[i] = -z;
            nodes[order - 1 - i] = z;
            let w = 2.0 / ((1.0 - z * z) * dp * dp);
            weights[i] = w;
            weights[order - 1 - i] = w;
        }
        GaussLegendre { nodes, weights }
    }

    /// Integral of `f` over `[a, b]`.
    pub fn integrate<F: FnMut(f64) -> f64>(&self, a: f64, b: f64, mut f: F) -> f64 {
        let half = 0.5 * (b - a);
        let mid = 0.5 * (a + b);
        half * self
            .nodes
            .iter()
            .zip(&self.weights)
            .map(|(&x, &w)| w * f(mid + half * x))
            .sum::<f64>()
    }

    /// Composite rule over `panels` equal panels of `[a, b]`.
    pub fn composite<F: FnMut(f64) -> f64>(&self, a: f64, b: f64, panels: usize, mut f: F) -> f64 {
        let h = (b - a) / panels as f64;
        (0..panels)
            .map(|k| {
                let lo = a + k as f64 * h;
                self.integrate(lo, lo + h, &mut f)
            })
            .sum()
    }

    /// Adaptive bisection over the pieces delimited by `breaks` (sorted).
    /// A piece is accepted when one rule and the sum over its halves agree
    /// to `max(abs_tol * len / total_len, rel_tol * |value|)`.
    pub fn adaptive<F: FnMut(f64) -> f64>(&self, breaks: &[f64], abs_tol: f64, rel_tol: f64, mut f: F) -> Estimate {
        let total = breaks.last().unwrap() - breaks[0];
        let mut value = 0.0;
        let mut error = 0.0;
        for w in breaks.windows(2) {
            let (a, b) = (w[0], w[1]);
            if b <= a {
                continue;
            }
            let whole = self.integrate(a, b, &mut f);
            let mut stack = vec![(a, b, whole, 0u32)];
            while let Some((lo, hi, coarse, depth)) = stack.pop() {
                let mid = 0.5 * (lo + hi);
                let left = self.integrate(lo, mid, &mut f);
                let right = self.integrate(mid, hi, &mut f);
                let fine = left + right;
                let diff = (fine - coarse).abs();
                let allowed = (abs_tol * (hi - lo) / total).max(rel_tol * fine.abs());
                if diff <= allowed || depth >= 40 {
                    value += fine;
                    error += diff;
                } else {
                    stack.push((lo, mid, left, depth + 1));
                    stack.push((mid, hi, right, depth + 1));
                }
            }
        }
        Estimate::new(value, error)
    }
}

/// Breakpoints on `[lo, hi]` graded geometrically away from `anchor`:
/// `anchor +- h * 2^k`. Adaptive bisection only sees features that some
/// initial piece resolves, so narrow features need such grading.
pub fn graded_breaks(lo: f64, hi: f64, anchor: f64, h: f64) -> Vec<f64> {
    assert!(lo < hi && h > 0.0);
    let mut pts = vec![lo, hi];
    if anchor > lo && anchor < hi {
        pts.push(anchor);
    }
    let mut step = h;
    while anchor + step < hi || anchor - step > lo {
        for x in [anchor - step, anchor + step] {
            if x > lo && x < hi {
                pts.push(x);
            }
        }
        step *= 2.0;
    }
    pts.sort_by(f64::total_cmp);
    pts.dedup();
    pts
}

/// Gauss-Hermite rule for `int exp(-t^2) f(t) dt`.
#[derive(Debug, Clone)]
pub struct GaussHermite {
    pub nodes: Vec<f64>,
    pub weights: Vec<f64>,
}

impl GaussHermite {
    /// Newton iteration on the orthonormal Hermite recurrence with the
    /// usual asymptotic starting points.
    pub fn new(order: usize) -> Self {
        assert!(order >= 1);
        let n = order;
        let nf = n as f64;
        let pim4 = PI.powf(-0.25);
        let mut nodes = vec![0.0; n];
        let mut weights = vec![0.0; n];
        let m = n.div_ceil(2);
        let mut z = 0.0f64;
        for i in 0..m {
            z = match i {
                0 => (2.0 * nf + 1.0).sqrt() - 1.85575 * (2.0 * nf + 1.0).powf(-1.0 / 6.0),
                1 => z - 1.14 * nf.powf(0.426) / z,
                2 => 1.86 * z - 0.86 * nodes[0],
                3 => 1.91 * z - 0.91 * nodes[1],
                _ => 2.0 * z - nodes[i - 2],
            };
            let mut pp = 0.0;
            for _ in 0..200 {
                let (mut p1, mut p2) = (pim4, 0.0);
                for j in 1..=n {
                    let p3 = p2;
                    p2 = p1;
                    let jf = j as f64;
                    p1 = z * (2.0 / jf).sqrt() * p2 - ((jf - 1.0) / jf).sqrt() * p3;
                }
                pp = (2.0 * nf).sqrt() * p2;
                let dz = p1 / pp;
                z -= dz;
                if dz.abs() <= 1e-15 * z.abs().max(1.0) {
                    break;
                }
            }
            nodes[i] = z;
            nodes[n - 1 - i] = -z;
            weights[i] = 2.0 / (pp * pp);
            weights[n - 1 - i] = weights[i];
        }
        if n % 2 == 1 {
            nodes[m - 1] = 0.0;
        }
        GaussHermite { nodes, weights }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn legendre_integrates_polynomials_exactly() {
        let gl = GaussLegendre::new(10);
        // degree 19 is exact for 10 nodes
        let v = gl.integrate(-1.0, 2.0, |x| x.powi(19) + 3.0 * x * x);
        let exact = (2f64.powi(20) - 1.0) / 20.0 + (8.0 + 1.0);
        assert!((v - exact).abs() < 1e-9 * exact);
        assert!((gl.weights.iter().sum::<f64>() - 2.0).abs() < 1e-14);
    }

    #[test]
    fn hermite_moments() {
        for order in [5, 20, 64] {
            let gh = GaussHermite::new(order);
            let sqrt_pi = PI.sqrt();
            let m0: f64 = gh.weights.iter().sum();
            let m2: f64 = gh.nodes.iter().zip(&gh.weights).map(|(x, w)| w * x * x).sum();
            let m4: f64 = gh.nodes.iter().zip(&gh.weights).map(|(x, w)| w * x.powi(4)).sum();
            assert!((m0 - sqrt_pi).abs() < 1e-13, "order {order}");
            assert!((m2 - sqrt_pi / 2.0).abs() < 1e-13, "order {order}");
            assert!((m4 - 3.0 * sqrt_pi / 4.0).abs() < 1e-12, "order {order}");
        }
    }

    #[test]
    fn adaptive_resolves_narrow_feature() {
        let gl = GaussLegendre::new(10);
        let breaks = graded_breaks(-50.0, 50.0, 0.3, 0.01);
        let est = gl.adaptive(&breaks, 1e-12, 1e-14, |x| (-(x - 0.3) * (x - 0.3) / 2e-4).exp());
        let exact = (2e-4 * PI).sqrt();
        assert!((est.value - exact).abs() < 1e-10, "{} vs {}", est.value, exact);
    }
}
