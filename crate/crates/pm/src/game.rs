//! Finite partial-monitoring games with a gain matrix and a symbol matrix.

use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::error::{PmError, Result};
use crate::rational::{format_rational, parse_rational, Q};
use crate::MAX_OUTCOMES;

/// `N` actions by `M` outcomes; the learner maximizes gain.
#[derive(Debug, Clone, PartialEq)]
pub struct PmGame {
    gain: Vec<Vec<Q>>,
    feedback: Vec<Vec<String>>,
    action_labels: Vec<String>,
    outcome_labels: Vec<String>,
}

/// Indicator rows of one action's feedback symbols, in order of first appearance.
#[derive(Debug, Clone, PartialEq)]
pub struct SignalMatrix {
    pub symbols: Vec<String>,
    pub rows: Vec<Vec<Q>>,
}

/// JSON layout of a game file.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GameDocument {
    pub gain: Vec<Vec<String>>,
    pub feedback: Vec<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub actions: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub outcomes: Option<Vec<String>>,
}

impl PmGame {
    pub fn new(gain: Vec<Vec<Q>>, feedback: Vec<Vec<String>>) -> Result<Self> {
        let n = gain.len();
        let m = gain.first().map_or(0, Vec::len);
        let actions = (1..=n).map(|i| i.to_string()).collect();
        let outcomes = (1..=m).map(|j| j.to_string()).collect();
        Self::with_labels(gain, feedback, actions, outcomes)
    }

    pub fn with_labels(
        gain: Vec<Vec<Q>>,
        feedback: Vec<Vec<String>>,
        action_labels: Vec<String>,
        outcome_labels: Vec<String>,
    ) -> Result<Self> {
        let n = gain.len();
        let m = gain.first().map_or(0, Vec::len);
        if n == 0 || m == 0 {
            return Err(PmError::Empty);
        }
        if m > MAX_OUTCOMES {
            return Err(PmError::TooManyOutcomes(m));
        }
        let mismatch = |what: String| Err(PmError::DimensionMismatch(what));
        if let Some(i) = gain.iter().position(|r| r.len() != m) {
            return mismatch(format!("gain row {} has {} entries, expected {m}", i + 1, gain[i].len()));
        }
        if feedback.len() != n {
            return mismatch(format!("feedback has {} rows, gain has {n}", feedback.len()));
        }
        if let Some(i) = feedback.iter().position(|r| r.len() != m) {
            return mismatch(format!("feedback row {} has {} entries, expected {m}", i + 1, feedback[i].len()));
        }
        if action_labels.len() != n {
            return mismatch(format!("{} action labels for {n} actions", action_labels.len()));
        }
        if outcome_labels.len() != m {
            return mismatch(format!("{} outcome labels for {m} outcomes", outcome_labels.len()));
        }
        Ok(Self { gain, feedback, action_labels, outcome_labels })
    }

    pub fn from_document(doc: &GameDocument) -> Result<Self> {
        let gain = doc
            .gain
            .iter()
            .map(|row| row.iter().map(|x| parse_rational(x)).collect::<Result<Vec<_>>>())
            .collect::<Result<Vec<_>>>()?;
        let n = gain.len();
        let m = gain.first().map_or(0, Vec::len);
        let actions = doc.actions.clone().unwrap_or_else(|| (1..=n).map(|i| i.to_string()).collect());
        let outcomes = doc.outcomes.clone().unwrap_or_else(|| (1..=m).map(|j| j.to_string()).collect());
        Self::with_labels(gain, doc.feedback.clone(), actions, outcomes)
    }

    pub fn from_json(text: &str) -> Result<Self> {
        Self::from_document(&serde_json::from_str(text)?)
    }

    pub fn from_path(path: impl AsRef<Path>) -> Result<Self> {
        Self::from_json(&std::fs::read_to_string(path)?)
    }

    pub fn to_document(&self) -> GameDocument {
        GameDocument {
            gain: self.gain.iter().map(|r| r.iter().map(format_rational).collect()).collect(),
            feedback: self.feedback.clone(),
            actions: Some(self.action_labels.clone()),
            outcomes: Some(self.outcome_labels.clone()),
        }
    }

    pub fn num_actions(&self) -> usize {
        self.gain.len()
    }

    pub fn num_outcomes(&self) -> usize {
        self.gain[0].len()
    }

    pub fn gain(&self) -> &[Vec<Q>] {
        &self.gain
    }

    pub fn gain_row(&self, action: usize) -> &[Q] {
        &self.gain[action]
    }

    pub fn feedback(&self) -> &[Vec<String>] {
        &self.feedback
    }

    pub fn action_labels(&self) -> &[String] {
        &self.action_labels
    }

    pub fn outcome_labels(&self) -> &[String] {
        &self.outcome_labels
    }

    pub fn signal_matrix(&self, action: usize) -> SignalMatrix {
        let row = &self.feedback[action];
        let mut symbols: Vec<String> = Vec::new();
        for s in row {
            if !symbols.contains(s) {
                symbols.push(s.clone());
            }
        }
        let rows = symbols
            .iter()
            .map(|sym| row.iter().map(|h| Q::from_integer(i32::from(h == sym).into())).collect())
            .collect();
        SignalMatrix { symbols, rows }
    }

    /// Same game with every gain multiplied by `factor`.
    pub fn scaled(&self, factor: &Q) -> Self {
        let mut g = self.clone();
        for row in &mut g.gain {
            for x in row.iter_mut() {
                *x = &*x * factor;
            }
        }
        g
    }
}
