use aco_ofdm::dsp::{Constellation, ConstellationKind};
use aco_ofdm::inforate::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use std::f64::consts::{E, PI};

fn grid() -> Vec<f64> {
    (-30..=30).map(f64::from).collect()
}

fn e_of(db: f64) -> f64 {
    SnrOperatingPoint::from_optical_db(db, 1.0).unwrap().mean_intensity()
}

fn improved(db: f64) -> f64 {
    rate_improved_gaussian(e_of(db), 1.0, &QuadratureSpec::default()).unwrap().value
}

fn delta_at(db: f64) -> f64 {
    let p = SnrOperatingPoint::from_optical_db(db, 1.0).unwrap();
    delta_gain(&GaussianClipModel::new(p.sigma_x, 1.0).unwrap(), &QuadratureSpec::default())
        .unwrap()
        .value
}

#[test]
fn conventional_rate_reference_values() {
    // 30-digit evaluations of 1/4 log2(1 + pi E^2 / sigma^2).
    assert!((rate_conventional_gaussian(1.0, 1.0) - 0.512_546_416_060_691_8).abs() < 1e-15);
    assert!((rate_conventional_gaussian(10.0, 1.0) - 2.074_984_316_720_998_6).abs() < 1e-14);
    assert_eq!(rate_conventional_gaussian(0.0, 1.0), 0.0);
    assert!((rate_conventional_gaussian(3.0, 2.0) - rate_conventional_gaussian(1.5, 1.0)).abs() < 1e-15);
}

#[test]
fn snr_conventions() {
    let p = snr_convert(0.0, false, 1.0).unwrap();
    assert!((p.electrical_linear() - PI).abs() < 1e-14);
    let zero = SnrOperatingPoint::from_optical_linear(0.0, 1.0).unwrap();
    assert_eq!(zero.electrical_linear(), 0.0);
    let a = electrical_db_from_optical_db(7.0);
    let b = electrical_db_from_optical_db(8.5);
    assert!((b - a - 3.0).abs() < 1e-12);
    assert!((optical_db_from_electrical_db(a) - 7.0).abs() < 1e-12);
}

#[test]
fn conditional_density_normalization_and_symmetry() {
    let quad = QuadratureSpec::default();
    for sx in [0.01, 0.3, 1.0, 5.0, 100.0] {
        let m = GaussianClipModel::new(sx, 1.0).unwrap();
        for k in [-3.0, 0.0, 3.0] {
            let y1 = k * m.sigma_y1();
            assert!((m.cond_pdf_mass(y1, &quad) - 1.0).abs() < 1e-8, "sx={sx} y1={y1}");
        }
        for y1 in [-4.0, -0.5, 0.2, 2.5, 9.0] {
            for y2 in [-3.0, -0.1, 0.0, 0.7, 4.0, 12.0] {
                let (a, b) = (cond_pdf_y2_given_y1(y1, y2, &m), cond_pdf_y2_given_y1(-y1, y2, &m));
                assert!((a - b).abs() <= 1e-15 * a.max(1e-300), "{y1} {y2}");
            }
        }
    }
}

#[test]
fn conditional_density_high_snr_limit() {
    // Y2 | Y1 -> N(|y1|, 4 sigma^2) once |y1| is well outside the noise.
    let m = GaussianClipModel::new(100.0, 1.0).unwrap();
    for y1 in [-20.0, -10.0, -5.0, 5.0, 10.0, 20.0] {
        let sup = (0..=400)
            .map(|i| f64::from(i) * 0.05 - 10.0 + f64::abs(y1))
            .map(|y2| (m.cond_pdf(y1, y2) - special::normal_pdf(y2, f64::abs(y1), 2.0)).abs())
            .fold(0.0, f64::max);
        assert!(sup < 1e-3, "y1={y1}: {sup}");
    }
}

#[test]
fn conditional_moments_match_density() {
    let m = GaussianClipModel::new(1.7, 0.8).unwrap();
    let rule = quad::GaussLegendre::new(20);
    for y1 in [-3.0, 0.0, 0.4, 6.0] {
        let (mean, var) = m.cond_moments(y1);
        let m1 = rule.composite(-40.0, 40.0, 400, |y2| y2 * m.cond_pdf(y1, y2));
        let m2 = rule.composite(-40.0, 40.0, 400, |y2| (y2 - mean).powi(2) * m.cond_pdf(y1, y2));
        assert!((m1 - mean).abs() < 1e-12 && (m2 - var).abs() < 1e-12, "{y1}");
    }
}

#[test]
fn conditional_entropy_limits() {
    let quad = QuadratureSpec::default();
    let tiny = GaussianClipModel::new(1e-6, 1.0).unwrap();
    let h0 = cond_entropy_y2_given_y1(&tiny, &quad).unwrap().value;
    assert!((h0 - 0.5 * (2.0 * PI * E * 2.0).log2()).abs() < 1e-9);
    let big = GaussianClipModel::new(100.0, 1.0).unwrap();
    let h = cond_entropy_y2_given_y1(&big, &quad).unwrap().value;
    assert!((h - 0.5 * (8.0 * PI * E).log2()).abs() < 0.005, "{h}");
}

#[test]
fn delta_reference_value() {
    // Two-dimensional arbitrary-precision integration of -p log p at
    // sigma_x = sigma = 1, halved.
    let m = GaussianClipModel::new(1.0, 1.0).unwrap();
    let d = delta_gain(&m, &QuadratureSpec::default()).unwrap();
    assert!((d.value - 0.054_340_024_133_248_7).abs() < 1e-9, "{}", d.value);
    assert!(d.error < 1e-9);
}

#[test]
fn delta_vanishes_without_signal() {
    let m = GaussianClipModel::new(1e-6, 1.0).unwrap();
    assert!(delta_gain(&m, &QuadratureSpec::default()).unwrap().value < 1e-12);
    assert_eq!(rate_improved_gaussian(0.0, 1.0, &QuadratureSpec::default()).unwrap().value, 0.0);
}

#[test]
fn conditional_entropy_matches_monte_carlo() {
    let quad = QuadratureSpec::default();
    let m = GaussianClipModel::new(1.0, 1.0).unwrap();
    let h = cond_entropy_y2_given_y1(&m, &quad).unwrap().value;
    let mc = mc_mutual_information(&m, 200_000, &mut ChaCha8Rng::seed_from_u64(17)).unwrap();
    let h_mc = 0.5 * (4.0 * PI * E).log2() + mc.value;
    assert!((h_mc / h - 1.0).abs() < 0.01);
    assert!((mc.value - 2.0 * delta_gain(&m, &quad).unwrap().value).abs() < 4.0 * mc.error);
}

#[test]
fn improved_rate_high_snr_forms() {
    let e = e_of(30.0);
    let ig = improved(30.0);
    assert!((ig - 0.25 * (2.0 * PI * e * e).log2()).abs() < 1e-3);
    let shifted = rate_conventional_gaussian(2f64.sqrt() * e, 1.0);
    assert!((ig - shifted).abs() < 1e-3);
    // The residual shrinks as SNR grows.
    let r20 = (improved(20.0) - rate_genie_bound_gaussian(e_of(20.0), 1.0)).abs();
    assert!((ig - shifted).abs() < r20);
}

#[test]
fn gain_bisection_matches_closed_form_inverse() {
    for db in [-30.0, -5.0, 0.0, 12.0, 30.0] {
        let e = e_of(db);
        let g = optical_gain_db(e, 1.0, &QuadratureSpec::default()).unwrap();
        let s2 = PI * e * e;
        let gamma2 = 1.0 + (1.0 + s2) * (4.0 * g.delta.value * std::f64::consts::LN_2).exp_m1() / s2;
        let closed = 5.0 * gamma2.log10();
        assert!((g.optical_db - closed).abs() < 1e-8, "{db}: {} vs {closed}", g.optical_db);
        assert_eq!(g.electrical_db, 2.0 * g.optical_db);
    }
    assert!(optical_gain_db(0.0, 1.0, &QuadratureSpec::default()).is_err());
}

#[test]
fn gain_asymptotes() {
    // 5 log10(2 - 2/pi) and 10 log10(sqrt 2).
    let low = optical_gain_db(e_of(-30.0), 1.0, &QuadratureSpec::default()).unwrap();
    assert!((low.optical_db - 0.673_084_956_848_196_5).abs() < 1e-4);
    let high = optical_gain_db(e_of(40.0), 1.0, &QuadratureSpec::default()).unwrap();
    assert!((high.optical_db - 1.505_149_978_319_906).abs() < 2e-3);
}

#[test]
fn low_snr_relative_gain() {
    let ratio = delta_at(-30.0) / rate_conventional_gaussian(e_of(-30.0), 1.0);
    assert!((ratio - 0.363_380_227_632_418_7).abs() < 1e-4, "{ratio}");
}

#[test]
fn capacity_asymptote_values() {
    assert!((capacity_high_snr_asymptote(10.0, 1.0) - 2.717_527_550_595_684_6).abs() < 1e-14);
    assert!((capacity_high_snr_asymptote(100.0, 1.0) - 6.039_455_645_483_047).abs() < 1e-14);
    assert!((capacity_high_snr_asymptote(6.0, 1.0) - capacity_high_snr_asymptote(3.0, 1.0) - 1.0).abs() < 1e-14);
    assert!(capacity_high_snr_asymptote(0.01, 1.0) < 0.0);
    let gap = |e: f64| capacity_high_snr_asymptote(e, 1.0) - rate_improved_gaussian(e, 1.0, &QuadratureSpec::default()).unwrap().value;
    assert!(gap(100.0) > gap(10.0));
}

#[test]
fn clipped_pam_limits() {
    let quad = QuadratureSpec::default();
    let e = e_of(30.0);
    let clip = rate_clipped_pam(e, 1.0, &quad).unwrap().value;
    assert!((clip - 0.25 * (8.0 * PI * e * e).log2()).abs() < 0.01);
    assert_eq!(rate_clipped_pam(0.0, 1.0, &quad).unwrap().value, 0.0);
}

#[test]
fn clipped_pam_matches_monte_carlo_entropy() {
    use rand::Rng;
    use rand_distr::StandardNormal;
    let quad = QuadratureSpec::default();
    let (sx, sigma) = (2.0, 1.0);
    let pam = ClippedPam::new(sx, sigma).unwrap();
    let exact = pam.information(&quad).value;
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    let n = 400_000;
    let (mut s, mut s2) = (0.0, 0.0);
    for _ in 0..n {
        let x: f64 = sx * rng.sample::<f64, _>(StandardNormal);
        let z: f64 = sigma * rng.sample::<f64, _>(StandardNormal);
        let y = x.max(0.0) + z;
        let v = (special::normal_pdf(y, x.max(0.0), sigma) / pam.output_pdf(y)).log2();
        s += v;
        s2 += v * v;
    }
    let mean = s / n as f64;
    let se = ((s2 / n as f64 - mean * mean) / n as f64).sqrt();
    assert!((mean - exact).abs() < 4.0 * se, "{mean} vs {exact}");
}

#[test]
fn entropy_identity() {
    for s in [0.01, 1.0, 250.0] {
        assert!(entropy_identity_check(s).unwrap() < 1e-12);
    }
    assert!((gaussian_entropy(1.0) - 0.5 * (2.0 * PI * E).log2()).abs() < 1e-15);
    assert!((half_gaussian_entropy(1.0) - (gaussian_entropy(1.0) - 1.0)).abs() < 1e-12);
}

#[test]
fn rate_ordering_and_monotonicity_on_grid() {
    let quad = QuadratureSpec::default();
    let mut prev = [0.0f64; 6];
    for db in grid() {
        let e = e_of(db);
        let conv = rate_conventional_gaussian(e, 1.0);
        let d = delta_at(db);
        let ig = conv + d;
        let genie = rate_genie_bound_gaussian(e, 1.0);
        let clip = rate_clipped_pam(e, 1.0, &quad).unwrap().value;
        let gain = equivalent_gain_db(e, 1.0, d, 1e-10);
        assert!(d >= 0.0 && conv <= ig && ig <= genie + 1e-4, "{db}");
        assert!(clip >= ig, "{db}: clipped {clip} < improved {ig}");
        for (p, v) in prev.iter_mut().zip([conv, d, ig, genie, clip, gain]) {
            assert!(v >= *p, "{db}: not monotone");
            *p = v;
        }
    }
    assert_eq!(rate_genie_bound_gaussian(0.0, 1.0), 0.0);
    assert!((rate_genie_bound_gaussian(e_of(30.0), 1.0) - rate_conventional_gaussian(e_of(30.0), 1.0) - 0.25).abs() < 1e-3);
}

fn qam(m: usize) -> Constellation {
    Constellation::new(ConstellationKind::Qam(m)).unwrap()
}

#[test]
fn discrete_rate_limits() {
    for m in [4, 16, 64] {
        let c = qam(m);
        let hi = rate_discrete_conventional(&c, &SnrOperatingPoint::from_optical_db(25.0, 1.0).unwrap(), MiMethod::default()).unwrap();
        assert!((hi.value - 0.25 * (m as f64).log2()).abs() < 1e-6, "M={m}: {}", hi.value);
        let lo = rate_discrete_conventional(&c, &SnrOperatingPoint::from_optical_db(-30.0, 1.0).unwrap(), MiMethod::default()).unwrap();
        assert!(lo.value < 1e-5);
        let zero = rate_discrete_conventional(&c, &SnrOperatingPoint::from_optical_linear(0.0, 1.0).unwrap(), MiMethod::default()).unwrap();
        assert_eq!(zero.value, 0.0);
    }
}

#[test]
fn discrete_quadrature_matches_monte_carlo() {
    let c = qam(16);
    let p = SnrOperatingPoint::from_optical_db(4.0, 1.0).unwrap();
    let gh = rate_discrete_conventional(&c, &p, MiMethod::default()).unwrap().value;
    let mc = rate_discrete_conventional(&c, &p, MiMethod::MonteCarlo { samples: 10_000_000, seed: 2 }).unwrap();
    assert!((mc.value / gh - 1.0).abs() < 0.01);
    assert!((mc.value - gh).abs() < 4.0 * mc.error, "{} vs {gh} (se {})", mc.value, mc.error);
}

#[test]
fn discrete_rates_approach_gaussian_as_m_grows() {
    // Uniform square QAM keeps a shaping loss at moderate SNR, so the gap to
    // the Gaussian-input curve shrinks monotonically with M and levels off;
    // it only vanishes where the SNR is low enough for shaping not to matter.
    let quad = QuadratureSpec::default();
    for (db, limit) in [(-10.0, 1e-7), (0.0, 0.02), (5.0, 0.08)] {
        let p = SnrOperatingPoint::from_optical_db(db, 1.0).unwrap();
        let gaussian_bound = rate_improved_gaussian(p.mean_intensity(), 1.0, &quad).unwrap().value;
        let gaps: Vec<f64> = [4, 16, 64, 256]
            .iter()
            .map(|&m| {
                let c = qam(m);
                let conv = rate_discrete_conventional(&c, &p, MiMethod::default()).unwrap().value;
                let bound = rate_upper_bound_discrete(&c, &p, &quad).unwrap().value;
                assert!(bound >= conv);
                gaussian_bound - bound
            })
            .collect();
        for w in gaps.windows(2) {
            assert!(w[1] >= 0.0 && w[1] < w[0], "{db} dB: {gaps:?}");
        }
        for w in gaps.windows(3) {
            assert!(w[1] - w[2] < w[0] - w[1], "{db} dB: {gaps:?}");
        }
        assert!(gaps[3] < limit, "{db} dB: {gaps:?}");
    }
}

#[test]
fn discrete_genie_bound() {
    let c = qam(16);
    let p = SnrOperatingPoint::from_optical_db(2.0, 1.0).unwrap();
    let boosted = SnrOperatingPoint::from_optical_db(2.0 + 10.0 * 2f64.sqrt().log10(), 1.0).unwrap();
    let genie = rate_genie_bound(&p, Some(&c)).unwrap();
    let direct = rate_discrete_conventional(&c, &boosted, MiMethod::default()).unwrap().value;
    assert!((genie - direct).abs() < 1e-12);
    assert!(genie > rate_discrete_conventional(&c, &p, MiMethod::default()).unwrap().value);
}

#[test]
fn sixteen_qam_thresholds() {
    let c = qam(16);
    let quad = QuadratureSpec::default();
    for r in [0.5, 0.75] {
        let t = rate_thresholds(&c, r, &quad).unwrap();
        assert!((t.target - r).abs() < 1e-15);
        assert!(t.bound_db < t.conventional_db);
        let at = |db: f64| SnrOperatingPoint::from_optical_db(db, 1.0).unwrap();
        let conv = rate_discrete_conventional(&c, &at(t.conventional_db), MiMethod::default()).unwrap().value;
        let bound = rate_upper_bound_discrete(&c, &at(t.bound_db), &quad).unwrap().value;
        assert!((conv - t.target).abs() < 1e-3 && (bound - t.target).abs() < 1e-3);
    }
    assert!(rate_thresholds(&c, 1.5, &quad).is_err());
}

#[test]
fn rate_point_carries_both_snr_axes() {
    let p = SnrOperatingPoint::from_optical_db(3.0, 1.0).unwrap();
    let row = RatePoint::new(&p, "delta", EstimatorKind::Quadrature, Estimate::new(0.1, 1e-12));
    assert_eq!(row.snr_optical_db, 3.0);
    assert!((row.snr_electrical_db - electrical_db_from_optical_db(3.0)).abs() < 1e-12);
    assert_eq!(row.input, "gaussian");
}
