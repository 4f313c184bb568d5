use std::path::{Path, PathBuf};

use bitrade_pm::{analyze, bilateral_trade_game, bilateral_trade_golden, AnalysisReport, PmGame};

use crate::commands::write_file;
use crate::error::Result;

pub const BUILTIN_BILATERAL: &str = "builtin:bilateral-trade";

/// Analyzes a game file, or the builtin game with its golden comparison.
pub fn analyze_game(target: &str) -> Result<AnalysisReport> {
    if target == BUILTIN_BILATERAL {
        let mut report = analyze(&bilateral_trade_game());
        report.golden = Some(bilateral_trade_golden(&report));
        return Ok(report);
    }
    Ok(analyze(&PmGame::from_path(target)?))
}

/// `false` when a golden check is present and failed.
pub fn golden_passed(report: &AnalysisReport) -> bool {
    report.golden.as_ref().is_none_or(|g| g.iter().all(|c| c.pass))
}

pub fn write_analysis(report: &AnalysisReport, out_dir: &Path) -> Result<PathBuf> {
    let path = out_dir.join("analysis.json");
    let json = serde_json::to_string_pretty(report).expect("report is always serializable");
    write_file(&path, &json)?;
    Ok(path)
}
