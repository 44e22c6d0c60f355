use std::f64::consts::{PI, SQRT_2};

use serde::Serialize;

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Family {
    Lognormal,
    Normal,
}

/// Maximum-likelihood fit of one family to a sample.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct DistributionFit {
    pub family: Family,
    pub mu: f64,
    pub sigma: f64,
    pub log_likelihood: f64,
    pub ks: f64,
    pub sample_size: usize,
}

/// Error function, Abramowitz & Stegun 7.1.26 (|error| <= 1.5e-7).
pub fn erf(x: f64) -> f64 {
    const P: f64 = 0.327_591_1;
    const A: [f64; 5] = [0.254_829_592, -0.284_496_736, 1.421_413_741, -1.453_152_027, 1.061_405_429];
    let sign = x.signum();
    let x = x.abs();
    let t = 1.0 / (1.0 + P * x);
    let poly = A.iter().rev().fold(0.0, |acc, &a| acc * t + a) * t;
    sign * (1.0 - poly * (-x * x).exp())
}

pub fn normal_cdf(z: f64) -> f64 {
    0.5 * (1.0 + erf(z / SQRT_2))
}

/// Fits `family` by maximum likelihood: `mu` and `sigma` are the mean and
/// population standard deviation of the sample (of its logarithms for the
/// lognormal family). The KS statistic is the supremum distance between the
/// empirical CDF and the fitted CDF.
pub fn fit(samples: &[f64], family: Family) -> Result<DistributionFit> {
    if samples.len() < 2 {
        return Err(Error::DegenerateSample(format!(
            "need at least two observations, got {}",
            samples.len()
        )));
    }
    let transformed: Vec<f64> = match family {
        Family::Normal => samples.to_vec(),
        Family::Lognormal => samples
            .iter()
            .map(|&x| if x > 0.0 { Ok(x.ln()) } else { Err(Error::Domain(x)) })
            .collect::<Result<_>>()?,
    };
    let size = transformed.len() as f64;
    let mu = transformed.iter().sum::<f64>() / size;
    let variance = transformed.iter().map(|y| (y - mu).powi(2)).sum::<f64>() / size;
    let sigma = variance.sqrt();
    if sigma == 0.0 || !sigma.is_finite() {
        return Err(Error::DegenerateSample("all observations are equal".into()));
    }

    // sum of squared standardized residuals is exactly `size` at the MLE
    let mut log_likelihood = -size * (sigma.ln() + 0.5 * (2.0 * PI).ln() + 0.5);
    if family == Family::Lognormal {
        log_likelihood -= transformed.iter().sum::<f64>();
    }

    let mut sorted = transformed;
    sorted.sort_by(f64::total_cmp);
    let mut ks = 0.0f64;
    let mut i = 0;
    while i < sorted.len() {
        let mut j = i;
        while j < sorted.len() && sorted[j] == sorted[i] {
            j += 1;
        }
        let model = normal_cdf((sorted[i] - mu) / sigma);
        let below = i as f64 / size;
        let at = j as f64 / size;
        ks = ks.max((at - model).abs()).max((below - model).abs());
        i = j;
    }

    Ok(DistributionFit {
        family,
        mu,
        sigma,
        log_likelihood,
        ks: ks.clamp(0.0, 1.0),
        sample_size: samples.len(),
    })
}

/// Lognormal and normal fits, best log-likelihood first.
pub fn compare(samples: &[f64]) -> Result<Vec<DistributionFit>> {
    let mut fits = vec![fit(samples, Family::Lognormal)?, fit(samples, Family::Normal)?];
    fits.sort_by(|a, b| b.log_likelihood.total_cmp(&a.log_likelihood));
    Ok(fits)
}
