//! Regret reports written by `run`.

use bitrade_core::{AlphaSummary, BatchSummary, FeedbackModel, PriceMode, Summary};
use serde::{Deserialize, Serialize};

use crate::config::Experiment;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SeedTotals {
    pub seed: u64,
    pub total_gft: f64,
    pub hindsight_price: f64,
    pub hindsight_gft: f64,
    /// Same order as `RegretReport::alphas`.
    pub regrets: Vec<f64>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RegretReport {
    pub config_hash: String,
    pub master_seed: u64,
    pub learner: String,
    pub adversary: String,
    pub feedback: FeedbackModel,
    pub price_mode: PriceMode,
    pub horizon: usize,
    pub alphas: Vec<f64>,
    pub seeds: Vec<SeedTotals>,
    pub total_gft: Summary,
    pub hindsight_gft: Summary,
    pub regret: Vec<AlphaSummary>,
    /// Seed-averaged cumulative GFT after each round, when traces were kept.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub mean_cumulative_gft: Option<Vec<f64>>,
}

impl RegretReport {
    pub fn new(exp: &Experiment, batch: &BatchSummary) -> Self {
        let cfg = &exp.config;
        let seeds = batch
            .episodes
            .iter()
            .map(|e| SeedTotals {
                seed: e.seed,
                total_gft: e.total_gft,
                hindsight_price: e.hindsight_price,
                hindsight_gft: e.hindsight_gft,
                regrets: e.regrets.clone(),
            })
            .collect();
        let mean_cumulative_gft = cfg.traces.then(|| {
            let n = batch.episodes.len() as f64;
            let mut curve = vec![0.0; cfg.horizon];
            for trace in batch.episodes.iter().filter_map(|e| e.trace.as_ref()) {
                let mut acc = 0.0;
                for (c, r) in curve.iter_mut().zip(&trace.rounds) {
                    acc += r.gft;
                    *c += acc;
                }
            }
            curve.iter().map(|c| c / n).collect()
        });
        Self {
            config_hash: exp.hash.clone(),
            master_seed: cfg.seeds.master(),
            learner: cfg.learner.name().to_string(),
            adversary: cfg.adversary.name().to_string(),
            feedback: cfg.feedback,
            price_mode: cfg.price_mode,
            horizon: cfg.horizon,
            alphas: cfg.alphas.clone(),
            seeds,
            total_gft: batch.total_gft,
            hindsight_gft: batch.hindsight_gft,
            regret: batch.regret.clone(),
            mean_cumulative_gft,
        }
    }

    /// Recomputes every regret and summary from the stored per-seed totals.
    pub fn verify(&self) -> Result<(), String> {
        for s in &self.seeds {
            if s.regrets.len() != self.alphas.len() {
                return Err(format!("seed {}: {} regrets for {} alphas", s.seed, s.regrets.len(), self.alphas.len()));
            }
            for (a, r) in self.alphas.iter().zip(&s.regrets) {
                let expected = s.hindsight_gft - a * s.total_gft;
                if *r != expected {
                    return Err(format!("seed {}: alpha {a} regret {r} != {expected}", s.seed));
                }
            }
        }
        let col = |f: &dyn Fn(&SeedTotals) -> f64| Summary::of(&self.seeds.iter().map(f).collect::<Vec<_>>());
        if col(&|s| s.total_gft) != self.total_gft {
            return Err("total_gft summary does not match seeds".into());
        }
        if col(&|s| s.hindsight_gft) != self.hindsight_gft {
            return Err("hindsight_gft summary does not match seeds".into());
        }
        if self.regret.len() != self.alphas.len() {
            return Err("regret summaries do not match alphas".into());
        }
        for (k, a) in self.regret.iter().enumerate() {
            if a.alpha != self.alphas[k] || col(&|s| s.regrets[k]) != a.regret {
                return Err(format!("alpha {} regret summary does not match seeds", a.alpha));
            }
        }
        Ok(())
    }

    pub fn mean_regret(&self, alpha: f64) -> Option<f64> {
        self.regret.iter().find(|a| a.alpha == alpha).map(|a| a.regret.mean)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report is always serializable")
    }
}
