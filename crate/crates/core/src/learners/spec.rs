use serde::{Deserialize, Serialize};

use crate::env::Learner;
use crate::error::Result;
use crate::learners::{
    default_eta, BlockDecompositionLearner, BlockParams, FixedPriceLearner, MwFullFeedbackLearner,
    RandomUniformLearner,
};
use crate::trade::PriceGrid;

/// Learner selection as written in experiment configs.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "name", rename_all = "kebab-case", deny_unknown_fields)]
pub enum LearnerSpec {
    Fixed {
        price: f64,
    },
    MwFull {
        /// Uniform grid steps; defaults to the horizon.
        #[serde(default, skip_serializing_if = "Option::is_none")]
        grid_steps: Option<usize>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        eta: Option<f64>,
    },
    BlockDecomposition {
        #[serde(default, skip_serializing_if = "Option::is_none")]
        blocks: Option<usize>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        grid_steps: Option<usize>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        eta: Option<f64>,
    },
    RandomUniform,
}

impl LearnerSpec {
    pub fn name(&self) -> &'static str {
        match self {
            LearnerSpec::Fixed { .. } => "fixed",
            LearnerSpec::MwFull { .. } => "mw-full",
            LearnerSpec::BlockDecomposition { .. } => "block-decomposition",
            LearnerSpec::RandomUniform => "random-uniform",
        }
    }

    pub fn build(&self, horizon: usize) -> Result<Box<dyn Learner>> {
        Ok(match *self {
            LearnerSpec::Fixed { price } => Box::new(FixedPriceLearner::new(price)?),
            LearnerSpec::MwFull { grid_steps, eta } => {
                let grid = PriceGrid::uniform(grid_steps.unwrap_or(horizon))?;
                Box::new(MwFullFeedbackLearner::new(grid, eta.unwrap_or(default_eta(horizon)))?)
            }
            LearnerSpec::BlockDecomposition { blocks, grid_steps, eta } => Box::new(
                BlockDecompositionLearner::new(BlockParams::with_grid_steps(
                    horizon, blocks, grid_steps, eta,
                )?)?,
            ),
            LearnerSpec::RandomUniform => Box::new(RandomUniformLearner::new()),
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_config_blocks() {
        let s: LearnerSpec = serde_json::from_str(r#"{"name":"fixed","price":0.5}"#).unwrap();
        assert_eq!(s, LearnerSpec::Fixed { price: 0.5 });
        let s: LearnerSpec = serde_json::from_str(r#"{"name":"mw-full"}"#).unwrap();
        assert_eq!(s.build(100).unwrap().name(), "mw-full");
        let s: LearnerSpec =
            serde_json::from_str(r#"{"name":"block-decomposition","blocks":10}"#).unwrap();
        assert_eq!(s.build(100).unwrap().name(), "block-decomposition");
        let s: LearnerSpec = serde_json::from_str(r#"{"name":"random-uniform"}"#).unwrap();
        assert_eq!(s, LearnerSpec::RandomUniform);
        assert!(serde_json::from_str::<LearnerSpec>(r#"{"name":"ucb"}"#).is_err());
        assert!(LearnerSpec::Fixed { price: 2.0 }.build(10).is_err());
    }
}
