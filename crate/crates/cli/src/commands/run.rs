use std::fs::File;
use std::io::BufWriter;
use std::path::{Path, PathBuf};

use bitrade_core::{Batch, BatchSummary, Learner};

use crate::commands::write_file;
use crate::config::Experiment;
use crate::error::Result;
use crate::report::RegretReport;

/// Runs every seed of the experiment at `horizon`.
pub fn execute_at(exp: &Experiment, horizon: usize) -> Result<BatchSummary> {
    let cfg = &exp.config;
    cfg.validate_at(horizon)?;
    let source = cfg.build_adversary(horizon)?;
    let factory = || -> bitrade_core::Result<Box<dyn Learner>> { cfg.learner.build(horizon) };
    let batch = Batch {
        learner: &factory,
        source: source.as_ref(),
        protocol: cfg.protocol_at(horizon)?,
        alphas: &cfg.alphas,
        keep_traces: cfg.traces,
    };
    Ok(batch.run(&cfg.seeds.expand())?)
}

pub fn execute(exp: &Experiment) -> Result<(RegretReport, BatchSummary)> {
    let batch = execute_at(exp, exp.config.horizon)?;
    Ok((RegretReport::new(exp, &batch), batch))
}

/// Files written by [`run`].
#[derive(Debug, Clone)]
pub struct RunOutput {
    pub report: RegretReport,
    pub report_path: PathBuf,
    pub trace_paths: Vec<PathBuf>,
}

/// Writes `report.json` and, with traces enabled, `traces/seed-<seed>.csv`.
pub fn run(exp: &Experiment, out_dir: &Path) -> Result<RunOutput> {
    let (report, batch) = execute(exp)?;
    let report_path = out_dir.join("report.json");
    write_file(&report_path, &report.to_json())?;
    let mut trace_paths = Vec::new();
    for e in &batch.episodes {
        if let Some(trace) = &e.trace {
            let path = out_dir.join("traces").join(format!("seed-{}.csv", e.seed));
            std::fs::create_dir_all(path.parent().expect("joined path has a parent"))?;
            trace.write_csv(BufWriter::new(File::create(&path)?))?;
            trace_paths.push(path);
        }
    }
    Ok(RunOutput { report, report_path, trace_paths })
}
