use std::path::{Path, PathBuf};

use bitrade_core::learners::gft_estimate;
use bitrade_core::{gain_from_trade, par, PricePair, SeedStreams, Stream, ValuationPair};
use rand::Rng as _;
use serde::{Deserialize, Serialize};

use crate::error::{CliError, Result};

/// Half-width of the acceptance band in standard errors.
pub const BAND_SIGMAS: f64 = 4.0;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct EstimatorTrial {
    pub trial: usize,
    pub p: f64,
    pub s: f64,
    pub b: f64,
    pub exact: f64,
    pub mean: f64,
    /// Sample variance of the one-bit estimates.
    pub variance: f64,
    pub deviation: f64,
    pub band: f64,
    pub pass: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct EstimatorReport {
    pub seed: u64,
    pub samples: usize,
    pub trials: Vec<EstimatorTrial>,
    pub pass: bool,
}

impl EstimatorReport {
    pub fn failures(&self) -> impl Iterator<Item = &EstimatorTrial> {
        self.trials.iter().filter(|t| !t.pass)
    }
}

/// Random `(p, s, b)` triples. Trials 0 and 1 post `p = 0` and `p = 1`;
/// every tenth trial keeps `s > b` when drawn that way.
pub fn triples(trials: usize, seed: u64) -> Vec<(f64, f64, f64)> {
    let mut rng = SeedStreams::new(seed).rng(Stream::Adversary);
    (0..trials)
        .map(|k| {
            let p = match k {
                0 => 0.0,
                1 => 1.0,
                _ => rng.random::<f64>(),
            };
            let (x, y): (f64, f64) = (rng.random(), rng.random());
            let (s, b) = if k % 10 == 9 { (x, y) } else { (x.min(y), x.max(y)) };
            (p, s, b)
        })
        .collect()
}

fn trial(k: usize, (p, s, b): (f64, f64, f64), samples: usize, seed: u64) -> Result<EstimatorTrial> {
    let v = ValuationPair::new(s, b)?;
    let exact = gain_from_trade(&PricePair::single(p)?, &v);
    let mut rng = SeedStreams::new(seed.wrapping_add(1 + k as u64)).rng(Stream::Estimator);
    let mut hits = 0usize;
    for _ in 0..samples {
        hits += usize::from(gft_estimate(p, &v, &mut rng)?.1);
    }
    let n = samples as f64;
    let mean = hits as f64 / n;
    let variance = if samples > 1 { mean * (1.0 - mean) * n / (n - 1.0) } else { 0.0 };
    let deviation = mean - exact;
    let band = BAND_SIGMAS * (variance / n).sqrt();
    Ok(EstimatorTrial { trial: k, p, s, b, exact, mean, variance, deviation, band, pass: deviation.abs() <= band })
}

pub fn validate_estimator(trials: usize, samples: usize, seed: u64) -> Result<EstimatorReport> {
    if trials == 0 || samples == 0 {
        return Err(CliError::Usage("--trials and --samples must be positive".into()));
    }
    let cases: Vec<(usize, (f64, f64, f64))> = triples(trials, seed).into_iter().enumerate().collect();
    let trials = par::map(&cases, |&(k, t)| trial(k, t, samples, seed)).into_iter().collect::<Result<Vec<_>>>()?;
    let pass = trials.iter().all(|t| t.pass);
    Ok(EstimatorReport { seed, samples, trials, pass })
}

/// Columns `trial,p,s,b,exact,mean,variance,deviation,band,pass`.
pub fn write_estimator(report: &EstimatorReport, out_dir: &Path) -> Result<PathBuf> {
    std::fs::create_dir_all(out_dir)?;
    let path = out_dir.join("estimator.csv");
    let mut w = csv::Writer::from_path(&path)?;
    for t in &report.trials {
        w.serialize(t)?;
    }
    w.flush()?;
    Ok(path)
}
