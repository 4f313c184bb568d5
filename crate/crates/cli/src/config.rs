//! Experiment configuration files.

use std::path::{Path, PathBuf};

use bitrade_core::adversaries::AdversarySpec;
use bitrade_core::learners::LearnerSpec;
use bitrade_core::{FeedbackModel, PriceMode, ProtocolConfig, ValuationSource};
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::error::{CliError, Result};

/// Either an explicit seed list or `count` consecutive seeds from `master`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Seeds {
    List(Vec<u64>),
    Master { master: u64, count: u64 },
}

impl Seeds {
    pub fn expand(&self) -> Vec<u64> {
        match self {
            Seeds::List(v) => v.clone(),
            Seeds::Master { master, count } => (0..*count).map(|i| master + i).collect(),
        }
    }

    /// The seed reports are keyed by: `master`, or the first listed seed.
    pub fn master(&self) -> u64 {
        match self {
            Seeds::List(v) => v.first().copied().unwrap_or(0),
            Seeds::Master { master, .. } => *master,
        }
    }
}

fn default_alphas() -> Vec<f64> {
    vec![1.0, 2.0]
}

fn is_false(b: &bool) -> bool {
    !*b
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ExperimentConfig {
    pub adversary: AdversarySpec,
    pub learner: LearnerSpec,
    pub feedback: FeedbackModel,
    pub price_mode: PriceMode,
    pub horizon: usize,
    #[serde(default = "default_alphas")]
    pub alphas: Vec<f64>,
    pub seeds: Seeds,
    /// Output directory; `--out` takes precedence.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub output: Option<PathBuf>,
    /// Keep per-round traces and write them as CSV.
    #[serde(default, skip_serializing_if = "is_false")]
    pub traces: bool,
}

fn invalid(field: &str, message: impl ToString) -> CliError {
    CliError::Config { field: field.to_string(), message: message.to_string() }
}

impl ExperimentConfig {
    pub fn from_json(text: &str) -> Result<Self> {
        let de = &mut serde_json::Deserializer::from_str(text);
        serde_path_to_error::deserialize(de).map_err(|e| {
            let path = e.path().to_string();
            let field = if path == "." { "<root>".to_string() } else { path };
            invalid(&field, e.into_inner())
        })
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("config is always serializable")
    }

    /// Hex SHA-256 of the compact JSON serialization.
    pub fn hash(&self) -> String {
        let bytes = serde_json::to_vec(self).expect("config is always serializable");
        hex::encode(Sha256::digest(bytes))
    }

    pub fn protocol(&self) -> Result<ProtocolConfig> {
        self.protocol_at(self.horizon)
    }

    pub fn protocol_at(&self, horizon: usize) -> Result<ProtocolConfig> {
        ProtocolConfig::new(self.feedback, self.price_mode, horizon).map_err(|e| invalid("horizon", e))
    }

    /// Checks every field that can be checked without running anything.
    pub fn validate(&self) -> Result<()> {
        self.validate_at(self.horizon)
    }

    pub fn validate_at(&self, horizon: usize) -> Result<()> {
        if horizon == 0 {
            return Err(invalid("horizon", "must be positive"));
        }
        if self.alphas.is_empty() {
            return Err(invalid("alphas", "at least one alpha is required"));
        }
        if let Some(a) = self.alphas.iter().find(|a| !(**a >= 1.0 && a.is_finite())) {
            return Err(invalid("alphas", format!("alpha must be a finite number >= 1, got {a}")));
        }
        match &self.seeds {
            Seeds::List(v) if v.is_empty() => return Err(invalid("seeds", "seed list is empty")),
            Seeds::Master { count: 0, .. } => return Err(invalid("seeds.count", "must be positive")),
            Seeds::Master { master, count } if master.checked_add(*count).is_none() => {
                return Err(invalid("seeds", "master + count overflows u64"))
            }
            _ => {}
        }
        let protocol = self.protocol_at(horizon)?;
        let learner = self.learner.build(horizon).map_err(|e| invalid("learner", e))?;
        learner.check_protocol(&protocol).map_err(|e| {
            invalid(
                "feedback",
                format!("learner `{}` cannot run under {:?}/{:?}: {e}", self.learner.name(), self.feedback, self.price_mode),
            )
        })?;
        self.build_adversary(horizon)?;
        Ok(())
    }

    pub fn build_adversary(&self, horizon: usize) -> Result<Box<dyn ValuationSource>> {
        self.adversary.build(horizon).map_err(|e| invalid("adversary", e))
    }
}

/// A validated configuration together with its hash and location.
#[derive(Debug, Clone)]
pub struct Experiment {
    pub config: ExperimentConfig,
    /// Hash of the config as written, before path resolution.
    pub hash: String,
    pub base_dir: PathBuf,
}

impl Experiment {
    /// Relative paths (fixed-file adversary, output) resolve against `base_dir`.
    pub fn new(mut config: ExperimentConfig, base_dir: &Path) -> Result<Self> {
        let hash = config.hash();
        config.adversary.resolve_paths(base_dir);
        if let Some(out) = &mut config.output {
            if out.is_relative() {
                *out = base_dir.join(&*out);
            }
        }
        config.validate()?;
        Ok(Self { config, hash, base_dir: base_dir.to_path_buf() })
    }

    pub fn load(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path).map_err(|e| CliError::Io(format!("{}: {e}", path.display())))?;
        let config = ExperimentConfig::from_json(&text)?;
        let base = path.parent().map(Path::to_path_buf).unwrap_or_default();
        Self::new(config, &base)
    }

    pub fn output_dir(&self, cli_out: Option<&Path>) -> PathBuf {
        cli_out
            .map(Path::to_path_buf)
            .or_else(|| self.config.output.clone())
            .unwrap_or_else(|| PathBuf::from("out"))
    }
}
