use crate::dsp::{Constellation, ConstellationKind};
use crate::error::{invalid, Error, Result};
use crate::inforate::{
    capacity_high_snr_asymptote, delta_gain, equivalent_gain_db, rate_clipped_pam, rate_conventional_gaussian,
    rate_discrete_conventional, rate_genie_bound, Estimate, EstimatorKind, GaussianClipModel, MiMethod,
    QuadratureSpec, RatePoint, SnrOperatingPoint,
};
use super::config::SnrAxis;
use rayon::prelude::*;
use std::fmt;
use std::str::FromStr;

/// Input distribution of a rate sweep.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RateInput {
    Gaussian,
    Discrete(ConstellationKind),
}

impl FromStr for RateInput {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        if s.trim().eq_ignore_ascii_case("gaussian") {
            Ok(RateInput::Gaussian)
        } else {
            Ok(RateInput::Discrete(s.parse()?))
        }
    }
}

impl fmt::Display for RateInput {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RateInput::Gaussian => f.write_str("gaussian"),
            RateInput::Discrete(k) => write!(f, "{k}"),
        }
    }
}

/// Rows a rate sweep can emit.
///
/// `conventional`, `improved` and `genie-bound` follow the sweep input. The
/// remaining rows are properties of the clipped-Gaussian signal at the same
/// optical SNR and ignore a discrete input.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum RateQuantity {
    Conventional,
    /// Gaussian inputs: optimal-receiver rate. Discrete inputs: the
    /// conventional rate plus `Delta`.
    Improved,
    Delta,
    GainOpticalDb,
    GainElectricalDb,
    ClippedPam,
    GenieBound,
    Asymptote,
}

impl RateQuantity {
    pub const ALL: [RateQuantity; 8] = [
        RateQuantity::Conventional,
        RateQuantity::Improved,
        RateQuantity::Delta,
        RateQuantity::GainOpticalDb,
        RateQuantity::GainElectricalDb,
        RateQuantity::ClippedPam,
        RateQuantity::GenieBound,
        RateQuantity::Asymptote,
    ];

    fn needs_delta(self) -> bool {
        matches!(
            self,
            RateQuantity::Improved | RateQuantity::Delta | RateQuantity::GainOpticalDb | RateQuantity::GainElectricalDb
        )
    }
}

impl fmt::Display for RateQuantity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            RateQuantity::Conventional => "conventional",
            RateQuantity::Improved => "improved",
            RateQuantity::Delta => "delta",
            RateQuantity::GainOpticalDb => "gain-optical-db",
            RateQuantity::GainElectricalDb => "gain-electrical-db",
            RateQuantity::ClippedPam => "clipped-pam",
            RateQuantity::GenieBound => "genie-bound",
            RateQuantity::Asymptote => "asymptote",
        })
    }
}

impl FromStr for RateQuantity {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let key = s.trim().to_ascii_lowercase().replace('_', "-");
        RateQuantity::ALL
            .into_iter()
            .find(|q| q.to_string() == key)
            .ok_or_else(|| invalid(format!("unknown rate quantity '{s}'")))
    }
}

/// Configuration of a rate sweep.
#[derive(Debug, Clone)]
pub struct RateConfig {
    pub input: RateInput,
    pub grid_db: Vec<f64>,
    pub axis: SnrAxis,
    pub quantities: Vec<RateQuantity>,
    pub quad: QuadratureSpec,
    pub sigma: f64,
}

impl RateConfig {
    /// One row per grid value: `improved` for Gaussian inputs,
    /// `conventional` for constellations.
    pub fn new(input: RateInput, grid_db: Vec<f64>) -> Self {
        let default = match input {
            RateInput::Gaussian => RateQuantity::Improved,
            RateInput::Discrete(_) => RateQuantity::Conventional,
        };
        RateConfig {
            input,
            grid_db,
            axis: SnrAxis::Optical,
            quantities: vec![default],
            quad: QuadratureSpec::default(),
            sigma: 1.0,
        }
    }
}

fn rows_at(config: &RateConfig, constellation: Option<&Constellation>, db: f64) -> Result<Vec<RatePoint>> {
    let point: SnrOperatingPoint = config.axis.point(db, config.sigma)?;
    let e = point.mean_intensity();
    let sigma = point.sigma;
    let input = config.input.to_string();
    let delta = if config.quantities.iter().any(|q| q.needs_delta()) && e > 0.0 {
        delta_gain(&GaussianClipModel::new(point.sigma_x, sigma)?, &config.quad)?
    } else {
        Estimate::new(0.0, 0.0)
    };
    let conventional = |c: Option<&Constellation>| -> Result<(Estimate, EstimatorKind)> {
        Ok(match c {
            None => (Estimate::new(rate_conventional_gaussian(e, sigma), 0.0), EstimatorKind::ClosedForm),
            Some(c) => (rate_discrete_conventional(c, &point, MiMethod::default())?, EstimatorKind::Quadrature),
        })
    };
    let mut rows = Vec::with_capacity(config.quantities.len());
    for &q in &config.quantities {
        let (est, method) = match q {
            RateQuantity::Conventional => conventional(constellation)?,
            RateQuantity::Improved => {
                let (c, _) = conventional(constellation)?;
                (Estimate::new(c.value + delta.value, c.error + delta.error), EstimatorKind::Quadrature)
            }
            RateQuantity::Delta => (delta, EstimatorKind::Quadrature),
            RateQuantity::GainOpticalDb | RateQuantity::GainElectricalDb => {
                if e == 0.0 {
                    return Err(Error::Degenerate("gain is undefined at zero SNR".into()));
                }
                let g = equivalent_gain_db(e, sigma, delta.value, 1e-10);
                let g = if q == RateQuantity::GainElectricalDb { 2.0 * g } else { g };
                (Estimate::new(g, 0.0), EstimatorKind::Quadrature)
            }
            RateQuantity::ClippedPam => (rate_clipped_pam(e, sigma, &config.quad)?, EstimatorKind::Quadrature),
            RateQuantity::GenieBound => {
                let kind = if constellation.is_some() { EstimatorKind::Quadrature } else { EstimatorKind::ClosedForm };
                (Estimate::new(rate_genie_bound(&point, constellation)?, 0.0), kind)
            }
            RateQuantity::Asymptote => (
                Estimate::new(capacity_high_snr_asymptote(e, sigma), 0.0),
                EstimatorKind::ClosedForm,
            ),
        };
        let row_input = match q {
            RateQuantity::Conventional | RateQuantity::Improved | RateQuantity::GenieBound => input.clone(),
            _ => "gaussian".to_string(),
        };
        rows.push(RatePoint::new(&point, q.to_string(), method, est).with_input(row_input));
    }
    Ok(rows)
}

/// Evaluates the configured quantities at every grid value, grid-major.
pub fn run_rate_sweep(config: &RateConfig) -> Result<Vec<RatePoint>> {
    config.quad.validate()?;
    if !(config.sigma > 0.0 && config.sigma.is_finite()) {
        return Err(invalid("noise sigma must be positive"));
    }
    if let Some(bad) = config.grid_db.iter().find(|v| !v.is_finite()) {
        return Err(Error::InvalidGrid(bad.to_string()));
    }
    let constellation = match config.input {
        RateInput::Gaussian => None,
        RateInput::Discrete(k) => Some(Constellation::new(k)?),
    };
    let per_point: Vec<Vec<RatePoint>> = config
        .grid_db
        .par_iter()
        .map(|&db| rows_at(config, constellation.as_ref(), db))
        .collect::<Result<_>>()?;
    Ok(per_point.into_iter().flatten().collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn names_round_trip() {
        for q in RateQuantity::ALL {
            assert_eq!(q.to_string().parse::<RateQuantity>().unwrap(), q);
        }
        assert!("bogus".parse::<RateQuantity>().is_err());
        assert_eq!("gaussian".parse::<RateInput>().unwrap(), RateInput::Gaussian);
        assert_eq!(
            "qam16".parse::<RateInput>().unwrap(),
            RateInput::Discrete(ConstellationKind::Qam(16))
        );
    }

    #[test]
    fn empty_grid_is_empty() {
        let cfg = RateConfig::new(RateInput::Gaussian, Vec::new());
        assert!(run_rate_sweep(&cfg).unwrap().is_empty());
    }

    #[test]
    fn default_is_one_row_per_point() {
        let cfg = RateConfig::new(RateInput::Gaussian, vec![0.0, 10.0]);
        let rows = run_rate_sweep(&cfg).unwrap();
        assert_eq!(rows.len(), 2);
        assert!(rows.iter().all(|r| r.quantity == "improved"));
    }
}
