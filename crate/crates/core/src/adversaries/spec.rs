//! Adversary selection from configuration.

use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};

use super::{FixedFile, FourOutcome, GridHiding, IidFinite, NestedThirds, TwoCopy};
use crate::error::{Error, Result};
use crate::exact::Rational;
use crate::harness::ValuationSource;
use crate::trade::ValuationPair;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct IidOutcome {
    pub s: f64,
    pub b: f64,
    pub prob: f64,
}

fn yes() -> bool {
    true
}

fn is_true(x: &bool) -> bool {
    *x
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "name", rename_all = "kebab-case", deny_unknown_fields)]
pub enum AdversarySpec {
    NestedThirds {
        delta: f64,
    },
    TwoCopy {
        /// Defaults to `1/T`.
        #[serde(default, skip_serializing_if = "Option::is_none")]
        delta: Option<f64>,
    },
    GridHiding {
        #[serde(rename = "Delta", default, skip_serializing_if = "Option::is_none")]
        wide: Option<Rational>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        delta: Option<Rational>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        alpha: Option<Rational>,
        #[serde(default = "yes", skip_serializing_if = "is_true")]
        perturb: bool,
    },
    FourOutcome {
        epsilon: Rational,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        delta_pert: Option<Rational>,
    },
    Iid {
        support: Vec<IidOutcome>,
    },
    Constant {
        s: f64,
        b: f64,
    },
    FixedFile {
        path: PathBuf,
    },
}

fn field(name: &str, err: Error) -> Error {
    Error::AdversaryConfig(format!("field `{name}`: {err}"))
}

impl AdversarySpec {
    pub fn name(&self) -> &'static str {
        match self {
            AdversarySpec::NestedThirds { .. } => "nested-thirds",
            AdversarySpec::TwoCopy { .. } => "two-copy",
            AdversarySpec::GridHiding { .. } => "grid-hiding",
            AdversarySpec::FourOutcome { .. } => "four-outcome",
            AdversarySpec::Iid { .. } => "iid",
            AdversarySpec::Constant { .. } => "constant",
            AdversarySpec::FixedFile { .. } => "fixed-file",
        }
    }

    /// Resolves a relative `fixed-file` path against `base`.
    pub fn resolve_paths(&mut self, base: &Path) {
        if let AdversarySpec::FixedFile { path } = self {
            if path.is_relative() {
                *path = base.join(&*path);
            }
        }
    }

    pub fn build(&self, horizon: usize) -> Result<Box<dyn ValuationSource>> {
        Ok(match self {
            AdversarySpec::NestedThirds { delta } => {
                Box::new(NestedThirds::new(*delta).map_err(|e| field("delta", e))?)
            }
            AdversarySpec::TwoCopy { delta } => Box::new(match delta {
                Some(d) => TwoCopy::new(*d).map_err(|e| field("delta", e))?,
                None => TwoCopy::for_horizon(horizon)?,
            }),
            AdversarySpec::GridHiding { wide, delta, alpha, perturb } => {
                let g = match (wide, delta, alpha) {
                    (None, None, Some(a)) => GridHiding::for_alpha(&a.0).map_err(|e| field("alpha", e))?,
                    (None, None, None) => {
                        GridHiding::new(Rational::new(1, 10).0, Rational::new(1, 30).0)?
                    }
                    (Some(w), Some(d), None) => {
                        GridHiding::new(w.0.clone(), d.0.clone()).map_err(|e| field("Delta/delta", e))?
                    }
                    (_, _, Some(_)) => {
                        return Err(Error::AdversaryConfig("field `alpha`: give either alpha or Delta and delta".into()))
                    }
                    _ => return Err(Error::AdversaryConfig("fields `Delta`/`delta`: both must be given".into())),
                };
                Box::new(g.with_perturbation(*perturb))
            }
            AdversarySpec::FourOutcome { epsilon, delta_pert } => {
                let dp = delta_pert.clone().unwrap_or_else(|| Rational::integer(0));
                Box::new(FourOutcome::new(epsilon.0.clone(), dp.0).map_err(|e| field("epsilon/delta_pert", e))?)
            }
            AdversarySpec::Iid { support } => {
                let outcomes = support
                    .iter()
                    .map(|o| Ok((ValuationPair::new(o.s, o.b)?, o.prob)))
                    .collect::<Result<Vec<_>>>()
                    .map_err(|e| field("support", e))?;
                Box::new(IidFinite::new(outcomes).map_err(|e| field("support", e))?)
            }
            AdversarySpec::Constant { s, b } => {
                Box::new(IidFinite::constant(ValuationPair::new(*s, *b).map_err(|e| field("s/b", e))?))
            }
            AdversarySpec::FixedFile { path } => Box::new(FixedFile::load(path).map_err(|e| field("path", e))?),
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn parse(s: &str) -> AdversarySpec {
        serde_json::from_str(s).unwrap()
    }

    #[test]
    fn parses_each_variant() {
        assert_eq!(parse(r#"{"name":"nested-thirds","delta":0.05}"#), AdversarySpec::NestedThirds { delta: 0.05 });
        assert_eq!(parse(r#"{"name":"two-copy"}"#), AdversarySpec::TwoCopy { delta: None });
        let g = parse(r#"{"name":"grid-hiding","Delta":"1/10","delta":"1/30"}"#);
        assert_eq!(g.name(), "grid-hiding");
        assert!(g.build(10).is_ok());
        let f = parse(r#"{"name":"four-outcome","epsilon":"1/10","delta_pert":"1/100"}"#);
        assert!(f.build(10).is_ok());
        let i = parse(r#"{"name":"iid","support":[{"s":0.1,"b":0.6,"prob":0.5},{"s":0.2,"b":0.3,"prob":0.5}]}"#);
        assert!(i.build(10).is_ok());
        assert!(parse(r#"{"name":"constant","s":0.2,"b":0.8}"#).build(5).is_ok());
    }

    #[test]
    fn round_trip() {
        for s in [
            r#"{"name":"grid-hiding","alpha":"3/2","perturb":false}"#,
            r#"{"name":"two-copy","delta":0.01}"#,
            r#"{"name":"fixed-file","path":"a.csv"}"#,
        ] {
            let spec = parse(s);
            let again: AdversarySpec = serde_json::from_str(&serde_json::to_string(&spec).unwrap()).unwrap();
            assert_eq!(spec, again);
        }
    }

    #[test]
    fn errors_name_the_field() {
        let err = parse(r#"{"name":"nested-thirds","delta":2.0}"#).build(10).err().unwrap();
        assert!(err.to_string().contains("`delta`"));
        let err = parse(r#"{"name":"grid-hiding","Delta":"1/10"}"#).build(10).err().unwrap();
        assert!(err.to_string().contains("Delta"));
        assert!(serde_json::from_str::<AdversarySpec>(r#"{"name":"nested-thirds","delta":0.1,"x":1}"#).is_err());
    }
}
