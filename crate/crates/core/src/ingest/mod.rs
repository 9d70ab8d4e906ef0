//! Graph input and generation: graph6 text, canonical labelling,
//! exhaustive enumeration and seeded sampling.

pub mod canon;
pub mod enumerate;
pub mod graph6;
pub mod random;

pub use canon::{are_isomorphic, canonical_form, canonical_key, canonical_labelling, CanonicalKey};
pub use enumerate::{
    enumerate_alpha2, triangle_free_classes, Alpha2Stream, EnumerateError, MAX_ENUMERATION_ORDER,
};
pub use graph6::{emit_graph6, parse_graph6, Graph6Error, GRAPH6_MAX_ORDER};
pub use random::{random_alpha2, sample_seeds};

use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::Graph;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "mode", rename_all = "snake_case")]
pub enum CorpusMode {
    Exhaustive,
    Random { samples: usize, seed: u64 },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CorpusSpec {
    pub n: usize,
    #[serde(flatten)]
    pub mode: CorpusMode,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CorpusError {
    #[error("exhaustive corpora need n <= {MAX_ENUMERATION_ORDER}, got {0}")]
    ExhaustiveTooLarge(usize),
    #[error("random corpora need at least one sample")]
    NoSamples,
    #[error("random graphs need 1 <= n <= {max}, got {n}", max = crate::graph::MAX_VERTICES)]
    BadOrder { n: usize },
    #[error("cannot parse corpus spec `{0}`; expected n=N[,samples=S][,seed=X]")]
    Syntax(String),
}

/// One generated graph and where it came from.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CorpusItem {
    pub index: usize,
    /// Generator seed for random corpora.
    pub seed: Option<u64>,
    pub graph: Graph,
}

impl CorpusSpec {
    pub fn validate(&self) -> Result<(), CorpusError> {
        match self.mode {
            CorpusMode::Exhaustive if self.n > MAX_ENUMERATION_ORDER => {
                Err(CorpusError::ExhaustiveTooLarge(self.n))
            }
            CorpusMode::Random { samples: 0, .. } => Err(CorpusError::NoSamples),
            CorpusMode::Random { .. } if self.n == 0 || self.n > crate::graph::MAX_VERTICES => {
                Err(CorpusError::BadOrder { n: self.n })
            }
            _ => Ok(()),
        }
    }

    pub fn items(&self) -> Result<Box<dyn Iterator<Item = CorpusItem> + Send>, CorpusError> {
        self.validate()?;
        let n = self.n;
        Ok(match self.mode {
            CorpusMode::Exhaustive => {
                Box::new(enumerate_alpha2(n).expect("validated").enumerate().map(
                    |(index, graph)| CorpusItem {
                        index,
                        seed: None,
                        graph,
                    },
                ))
            }
            CorpusMode::Random { samples, seed } => {
                Box::new(sample_seeds(seed, samples).into_iter().enumerate().map(
                    move |(index, s)| CorpusItem {
                        index,
                        seed: Some(s),
                        graph: random_alpha2(n, s),
                    },
                ))
            }
        })
    }
}

/// `n=N` for an exhaustive corpus; `n=N,samples=S[,seed=X]` for a random
/// one (seed defaults to 0).
impl FromStr for CorpusSpec {
    type Err = CorpusError;

    fn from_str(s: &str) -> Result<Self, CorpusError> {
        let syntax = || CorpusError::Syntax(s.to_string());
        let (mut n, mut samples, mut seed) = (None, None, None);
        for part in s.split(',').map(str::trim).filter(|p| !p.is_empty()) {
            let (key, value) = part.split_once('=').ok_or_else(syntax)?;
            match key.trim() {
                "n" => n = Some(value.trim().parse().map_err(|_| syntax())?),
                "samples" => samples = Some(value.trim().parse().map_err(|_| syntax())?),
                "seed" => seed = Some(value.trim().parse().map_err(|_| syntax())?),
                _ => return Err(syntax()),
            }
        }
        let n = n.ok_or_else(syntax)?;
        let mode = match (samples, seed) {
            (None, None) => CorpusMode::Exhaustive,
            (Some(samples), seed) => CorpusMode::Random {
                samples,
                seed: seed.unwrap_or(0),
            },
            (None, Some(_)) => return Err(syntax()),
        };
        let spec = CorpusSpec { n, mode };
        spec.validate()?;
        Ok(spec)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_specs() {
        assert_eq!(
            "n=8,samples=100,seed=7".parse::<CorpusSpec>().unwrap(),
            CorpusSpec {
                n: 8,
                mode: CorpusMode::Random {
                    samples: 100,
                    seed: 7
                }
            }
        );
        assert_eq!(
            "n=6".parse::<CorpusSpec>().unwrap().mode,
            CorpusMode::Exhaustive
        );
        assert_eq!(
            "n=11".parse::<CorpusSpec>(),
            Err(CorpusError::ExhaustiveTooLarge(11))
        );
        assert_eq!(
            "n=5,samples=0".parse::<CorpusSpec>(),
            Err(CorpusError::NoSamples)
        );
        assert!(matches!(
            "m=5".parse::<CorpusSpec>(),
            Err(CorpusError::Syntax(_))
        ));
        assert!(matches!(
            "n=5,seed=1".parse::<CorpusSpec>(),
            Err(CorpusError::Syntax(_))
        ));
    }

    #[test]
    fn items_are_reproducible() {
        let spec: CorpusSpec = "n=9,samples=5,seed=42".parse().unwrap();
        let a: Vec<CorpusItem> = spec.items().unwrap().collect();
        let b: Vec<CorpusItem> = spec.items().unwrap().collect();
        assert_eq!(a, b);
        assert_eq!(a.len(), 5);
        assert!(a
            .iter()
            .all(|it| it.graph == random_alpha2(9, it.seed.unwrap())));
        let ex: CorpusSpec = "n=5".parse().unwrap();
        assert_eq!(ex.items().unwrap().count(), 14);
    }
}
