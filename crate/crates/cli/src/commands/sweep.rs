use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};

use crate::commands::run::execute_at;
use crate::config::Experiment;
use crate::error::{CliError, Result};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SweepRow {
    #[serde(rename = "T")]
    pub horizon: usize,
    pub alpha: f64,
    pub mean_regret: f64,
    pub std_regret: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SlopeFit {
    pub alpha: f64,
    /// `None` when some mean regret is not positive.
    pub slope: Option<f64>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct SweepResult {
    pub rows: Vec<SweepRow>,
    pub slopes: Vec<SlopeFit>,
}

/// Least-squares slope of `ln y` against `ln x`.
pub fn loglog_slope(points: &[(f64, f64)]) -> Option<f64> {
    if points.len() < 2 || points.iter().any(|&(x, y)| !(x > 0.0 && y > 0.0)) {
        return None;
    }
    let logs: Vec<(f64, f64)> = points.iter().map(|&(x, y)| (x.ln(), y.ln())).collect();
    let n = logs.len() as f64;
    let mx = logs.iter().map(|p| p.0).sum::<f64>() / n;
    let my = logs.iter().map(|p| p.1).sum::<f64>() / n;
    let sxx: f64 = logs.iter().map(|p| (p.0 - mx).powi(2)).sum();
    let sxy: f64 = logs.iter().map(|p| (p.0 - mx) * (p.1 - my)).sum();
    (sxx > 0.0).then(|| sxy / sxx)
}

/// One row per `(T, alpha)`, horizons in the given order.
pub fn sweep(exp: &Experiment, horizons: &[usize]) -> Result<SweepResult> {
    let mut distinct = horizons.to_vec();
    distinct.sort_unstable();
    distinct.dedup();
    if distinct.len() < 2 {
        return Err(CliError::Usage("sweep needs at least two distinct horizons".into()));
    }
    let mut rows = Vec::new();
    for &t in horizons {
        let batch = execute_at(exp, t)?;
        rows.extend(batch.regret.iter().map(|a| SweepRow {
            horizon: t,
            alpha: a.alpha,
            mean_regret: a.regret.mean,
            std_regret: a.regret.std,
        }));
    }
    let slopes = exp
        .config
        .alphas
        .iter()
        .map(|&alpha| {
            let pts: Vec<(f64, f64)> =
                rows.iter().filter(|r| r.alpha == alpha).map(|r| (r.horizon as f64, r.mean_regret)).collect();
            SlopeFit { alpha, slope: loglog_slope(&pts) }
        })
        .collect();
    Ok(SweepResult { rows, slopes })
}

/// Columns `T,alpha,mean_regret,std_regret`.
pub fn write_csv<W: std::io::Write>(rows: &[SweepRow], out: W) -> Result<()> {
    let mut w = csv::Writer::from_writer(out);
    for r in rows {
        w.serialize(r)?;
    }
    w.flush()?;
    Ok(())
}

pub fn write_sweep(result: &SweepResult, out_dir: &Path) -> Result<PathBuf> {
    std::fs::create_dir_all(out_dir)?;
    let path = out_dir.join("sweep.csv");
    write_csv(&result.rows, std::fs::File::create(&path)?)?;
    Ok(path)
}
