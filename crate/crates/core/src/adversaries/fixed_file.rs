//! A fixed sequence read from a CSV file of `s,b` rows.

use std::path::{Path, PathBuf};

use crate::error::{Error, Result};
use crate::harness::ValuationSource;
use crate::rng::Rng;
use crate::trade::{ValuationPair, ValuationSequence};

#[derive(Debug, Clone, PartialEq)]
pub struct FixedFile {
    path: PathBuf,
    sequence: ValuationSequence,
}

fn parse_field(raw: Option<&str>, line: usize) -> std::result::Result<f64, String> {
    let raw = raw.ok_or_else(|| format!("line {line}: expected two columns"))?;
    raw.trim().parse::<f64>().map_err(|_| format!("line {line}: cannot parse {raw:?}"))
}

/// Parses CSV text of `s,b` rows; a non-numeric first row is taken as a header.
pub fn parse_sequence_csv(text: &str) -> Result<ValuationSequence> {
    let mut reader = csv::ReaderBuilder::new()
        .has_headers(false)
        .trim(csv::Trim::All)
        .comment(Some(b'#'))
        .from_reader(text.as_bytes());
    let mut rounds = Vec::new();
    for (idx, record) in reader.records().enumerate() {
        let record = record?;
        let line = idx + 1;
        let parsed = parse_field(record.get(0), line).and_then(|s| Ok((s, parse_field(record.get(1), line)?)));
        match parsed {
            Ok((s, b)) => rounds.push(ValuationPair::new(s, b)?),
            Err(_) if idx == 0 => continue,
            Err(msg) => return Err(Error::AdversaryConfig(msg)),
        }
    }
    ValuationSequence::new(rounds)
}

impl FixedFile {
    pub fn load(path: impl AsRef<Path>) -> Result<Self> {
        let path = path.as_ref().to_path_buf();
        let text = std::fs::read_to_string(&path)?;
        let sequence = parse_sequence_csv(&text)?;
        Ok(Self { path, sequence })
    }

    pub fn path(&self) -> &Path {
        &self.path
    }

    pub fn sequence(&self) -> &ValuationSequence {
        &self.sequence
    }
}

impl ValuationSource for FixedFile {
    fn generate(&self, horizon: usize, rng: &mut Rng) -> Result<ValuationSequence> {
        self.sequence.generate(horizon, rng)
    }
}
