use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use bitrade_cli::commands::{analyze, estimator, sweep as sweep_cmd};
use bitrade_cli::{analyze_game, golden_passed, run, sweep, validate_estimator, Experiment};
use clap::{Parser, Subcommand};

#[derive(Debug, Parser)]
#[command(name = "bitrade", version, about = "Regret experiments for posted-price bilateral trade")]
struct Cli {
    /// Output directory (overrides the config's `output`).
    #[arg(long, global = true)]
    out: Option<PathBuf>,

    /// Worker threads for seed-parallel execution.
    #[arg(long, global = true, env = "BITRADE_THREADS")]
    threads: Option<usize>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Run one experiment and write its regret report.
    Run { config: PathBuf },
    /// Re-run an experiment over several horizons and emit a regret CSV.
    Sweep {
        config: PathBuf,
        #[arg(long, num_args = 1.., value_delimiter = ',', required = true)]
        horizons: Vec<usize>,
    },
    /// Monte Carlo check of the one-bit GFT estimator.
    ValidateEstimator {
        #[arg(long, default_value_t = 1000)]
        trials: usize,
        #[arg(long, default_value_t = 200_000)]
        samples: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Classify a partial-monitoring game and check its observability.
    AnalyzeGame { game: String },
}

fn configure_threads(threads: Option<usize>) -> Result<()> {
    let Some(k) = threads else { return Ok(()) };
    if k == 0 {
        bail!("--threads must be positive");
    }
    #[cfg(feature = "parallel")]
    rayon::ThreadPoolBuilder::new().num_threads(k).build_global().context("configuring thread pool")?;
    Ok(())
}

fn load(config: &Path) -> Result<Experiment> {
    Experiment::load(config).with_context(|| format!("loading {}", config.display()))
}

fn main() -> ExitCode {
    match real_main() {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

fn real_main() -> Result<ExitCode> {
    let cli = Cli::parse();
    configure_threads(cli.threads)?;
    match cli.command {
        Command::Run { config } => {
            let exp = load(&config)?;
            let out = run(&exp, &exp.output_dir(cli.out.as_deref()))?;
            let r = &out.report;
            println!("{} vs {}, T={}, {} seeds", r.learner, r.adversary, r.horizon, r.seeds.len());
            for a in &r.regret {
                println!("  alpha={}: mean regret {:.4} (std {:.4})", a.alpha, a.regret.mean, a.regret.std);
            }
            println!("report: {}", out.report_path.display());
            if !out.trace_paths.is_empty() {
                println!("traces: {} files", out.trace_paths.len());
            }
        }
        Command::Sweep { config, horizons } => {
            let exp = load(&config)?;
            let result = sweep(&exp, &horizons)?;
            let path = sweep_cmd::write_sweep(&result, &exp.output_dir(cli.out.as_deref()))?;
            sweep_cmd::write_csv(&result.rows, std::io::stdout().lock())?;
            for s in &result.slopes {
                match s.slope {
                    Some(v) => println!("alpha={}: log-log slope {v:.4}", s.alpha),
                    None => println!("alpha={}: log-log slope undefined (non-positive mean regret)", s.alpha),
                }
            }
            println!("csv: {}", path.display());
        }
        Command::ValidateEstimator { trials, samples, seed } => {
            let report = validate_estimator(trials, samples, seed)?;
            let path = estimator::write_estimator(&report, cli.out.as_deref().unwrap_or(Path::new("out")))?;
            let worst = report.trials.iter().map(|t| t.deviation.abs()).fold(0.0, f64::max);
            println!("{trials} trials x {samples} samples, max |deviation| {worst:.3e}");
            for t in report.failures() {
                println!("  trial {} (p={}, s={}, b={}): deviation {:.3e} > band {:.3e}", t.trial, t.p, t.s, t.b, t.deviation, t.band);
            }
            println!("deviations: {}", path.display());
            if !report.pass {
                println!("FAIL");
                return Ok(ExitCode::FAILURE);
            }
            println!("PASS");
        }
        Command::AnalyzeGame { game } => {
            let report = analyze_game(&game).with_context(|| format!("analyzing {game}"))?;
            let path = analyze::write_analysis(&report, cli.out.as_deref().unwrap_or(Path::new("out")))?;
            println!(
                "dominated {:?}, degenerate {:?}, pareto {:?}",
                report.dominated, report.degenerate, report.pareto_optimal
            );
            println!(
                "globally observable: {}, locally observable: {}",
                report.global_observability.observable, report.local_observability.observable
            );
            for c in report.golden.iter().flatten() {
                println!("  {} {}: {}", if c.pass { "ok  " } else { "FAIL" }, c.name, c.actual);
            }
            println!("report: {}", path.display());
            if !golden_passed(&report) {
                return Ok(ExitCode::FAILURE);
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}
