//! End-to-end verification of one graph, producing a self-contained
//! certificate.

use std::time::{Duration, Instant};

use serde::{Deserialize, Serialize};

use super::{
    build_cover, classify, verify_claims, ClaimViolation, ClassifyError, CoverCertificate,
    CoverError, Decomposition, Evidence,
};
use crate::detect::{find_c5, find_w5, Pattern, PatternWitness};
use crate::graph::{Graph, VertexSet};
use crate::inflation::{
    maximal_inflation, verify_inflation, InflationPartition, InflationViolation,
};
use crate::invariants::maximum_independent_set;
use crate::minors::{validate_minor_witness, MinorSearch, MinorWitness, SearchOutcome};

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct PipelineOptions {
    /// Run the `K_⌈n/2⌉` minor search on verified graphs with at most this
    /// many vertices.
    pub minor_check_max_n: Option<usize>,
    /// Wall-clock limit for that search.
    pub minor_budget: Option<Duration>,
}

impl PipelineOptions {
    pub fn with_minor_check(max_n: usize, budget: Option<Duration>) -> Self {
        PipelineOptions {
            minor_check_max_n: Some(max_n),
            minor_budget: budget,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "result", rename_all = "snake_case")]
pub enum MinorCheck {
    Skipped,
    Found {
        threshold: usize,
        witness: MinorWitness,
    },
    Absent {
        threshold: usize,
    },
    BudgetExhausted {
        threshold: usize,
    },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "stage", rename_all = "snake_case")]
pub enum Anomaly {
    Inflation {
        seed: PatternWitness,
        violations: Vec<InflationViolation>,
    },
    Classify {
        partition: InflationPartition,
        error: ClassifyError,
    },
    Claims {
        partition: InflationPartition,
        decomposition: Decomposition,
        violations: Vec<ClaimViolation>,
    },
    Cover {
        partition: InflationPartition,
        decomposition: Decomposition,
        error: CoverError,
    },
    /// The minor search proved `h < ⌈n/2⌉` on a graph the pipeline had
    /// otherwise verified.
    MinorThreshold { threshold: usize },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "branch", rename_all = "snake_case")]
pub enum Certificate {
    /// `α ≤ 1`: the graph is complete.
    Clique {
        n: usize,
    },
    /// `α ≥ 3`, outside the hypothesis.
    AlphaExceeded {
        independent: Vec<usize>,
    },
    /// No induced C5; the conjecture is already known for this class.
    C5Free {
        minor_check: MinorCheck,
    },
    /// An induced W5, outside the hypothesis.
    W5Present {
        witness: PatternWitness,
    },
    Cover {
        partition: InflationPartition,
        decomposition: Decomposition,
        cover: CoverCertificate,
        minor_check: MinorCheck,
    },
    Anomaly {
        anomaly: Anomaly,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Outcome {
    Verified,
    HypothesisFailed,
    Anomaly,
}

impl Certificate {
    pub fn outcome(&self) -> Outcome {
        match self {
            Certificate::Clique { .. } | Certificate::C5Free { .. } | Certificate::Cover { .. } => {
                Outcome::Verified
            }
            Certificate::AlphaExceeded { .. } | Certificate::W5Present { .. } => {
                Outcome::HypothesisFailed
            }
            Certificate::Anomaly { .. } => Outcome::Anomaly,
        }
    }

    pub fn branch(&self) -> &'static str {
        match self {
            Certificate::Clique { .. } => "clique",
            Certificate::AlphaExceeded { .. } => "alpha_exceeded",
            Certificate::C5Free { .. } => "c5_free",
            Certificate::W5Present { .. } => "w5_present",
            Certificate::Cover { .. } => "cover",
            Certificate::Anomaly { .. } => "anomaly",
        }
    }
}

/// Runs every stage on `g`: independence number, C5 and W5 search, maximal
/// inflation, classification, claims, cover and the optional minor check.
pub fn verify_pipeline(g: &Graph, opts: &PipelineOptions) -> Certificate {
    let independent = maximum_independent_set(g);
    if independent.len() > 2 {
        return Certificate::AlphaExceeded {
            independent: independent.to_vec(),
        };
    }
    if independent.len() <= 1 {
        return Certificate::Clique { n: g.order() };
    }
    let Some(seed) = find_c5(g) else {
        return match minor_check(g, opts) {
            Err(threshold) => Certificate::Anomaly {
                anomaly: Anomaly::MinorThreshold { threshold },
            },
            Ok(minor_check) => Certificate::C5Free { minor_check },
        };
    };
    if let Some(witness) = find_w5(g) {
        return Certificate::W5Present { witness };
    }
    let anomaly = |anomaly| Certificate::Anomaly { anomaly };
    let partition = maximal_inflation(g, &seed).expect("seed comes from find_c5");
    let violations = verify_inflation(g, &partition);
    if !violations.is_empty() {
        return anomaly(Anomaly::Inflation { seed, violations });
    }
    let decomposition = match classify(g, &partition) {
        Ok(d) => d,
        Err(error) => return anomaly(Anomaly::Classify { partition, error }),
    };
    let violations = verify_claims(g, &partition, &decomposition);
    if !violations.is_empty() {
        return anomaly(Anomaly::Claims {
            partition,
            decomposition,
            violations,
        });
    }
    let cover = match build_cover(g, &partition, &decomposition) {
        Ok(c) => c,
        Err(error) => {
            return anomaly(Anomaly::Cover {
                partition,
                decomposition,
                error,
            })
        }
    };
    match minor_check(g, opts) {
        Err(threshold) => anomaly(Anomaly::MinorThreshold { threshold }),
        Ok(minor_check) => Certificate::Cover {
            partition,
            decomposition,
            cover,
            minor_check,
        },
    }
}

/// `Err(threshold)` when the search proves no `K_threshold` minor exists.
fn minor_check(g: &Graph, opts: &PipelineOptions) -> Result<MinorCheck, usize> {
    let n = g.order();
    match opts.minor_check_max_n {
        Some(max) if n <= max => {}
        _ => return Ok(MinorCheck::Skipped),
    }
    let threshold = n.div_ceil(2);
    let mut search = MinorSearch::new(g);
    if let Some(budget) = opts.minor_budget {
        search = search.with_deadline(Instant::now() + budget);
    }
    match search.clique_minor(threshold) {
        SearchOutcome::Found(witness) => Ok(MinorCheck::Found { threshold, witness }),
        SearchOutcome::BudgetExhausted => Ok(MinorCheck::BudgetExhausted { threshold }),
        SearchOutcome::Absent => Err(threshold),
    }
}

/// Re-checks a certificate against `g` using validators only.
///
/// C5-freeness has no short certificate, so that branch re-runs the C5
/// search. Anomalies are checked by validating their embedded evidence; an
/// `Unexplained` entry fails, and a `MinorThreshold` anomaly carries nothing
/// to check.
pub fn revalidate(g: &Graph, cert: &Certificate) -> Result<(), String> {
    match cert {
        Certificate::Clique { n } => {
            if *n != g.order() || !g.is_clique(g.vertices()) {
                return Err("graph is not complete".into());
            }
        }
        Certificate::AlphaExceeded { independent } => {
            let s: VertexSet = independent.iter().copied().collect();
            if s.len() < 3 || s.len() != independent.len() || !s.is_subset(g.vertices()) {
                return Err("independent set is malformed".into());
            }
            if !g.is_independent(s) {
                return Err("independent set has an edge".into());
            }
        }
        Certificate::C5Free { minor_check } => {
            if find_c5(g).is_some() {
                return Err("graph contains an induced C5".into());
            }
            check_minor(g, minor_check)?;
        }
        Certificate::W5Present { witness } => {
            if witness.pattern != Pattern::W5 || !witness.validate(g) {
                return Err("W5 witness does not validate".into());
            }
        }
        Certificate::Cover {
            partition,
            decomposition,
            cover,
            minor_check,
        } => {
            if !verify_inflation(g, partition).is_empty() {
                return Err("partition is not a maximal inflation".into());
            }
            decomposition.check_definitions(g, partition)?;
            cover.check(g, partition, decomposition)?;
            check_minor(g, minor_check)?;
        }
        Certificate::Anomaly { anomaly } => revalidate_anomaly(g, anomaly)?,
    }
    Ok(())
}

fn check_minor(g: &Graph, check: &MinorCheck) -> Result<(), String> {
    let expected = g.order().div_ceil(2);
    match check {
        MinorCheck::Skipped => Ok(()),
        MinorCheck::Found { threshold, witness } => {
            if *threshold != expected || witness.order() < expected {
                Err("minor witness is below the threshold".into())
            } else if !validate_minor_witness(g, witness) {
                Err("minor witness does not validate".into())
            } else {
                Ok(())
            }
        }
        MinorCheck::Absent { .. } | MinorCheck::BudgetExhausted { .. } => Ok(()),
    }
}

fn revalidate_anomaly(g: &Graph, anomaly: &Anomaly) -> Result<(), String> {
    let check = |ev: &Evidence, p: &InflationPartition| {
        if ev.validate(g, p) {
            Ok(())
        } else {
            Err(format!("evidence {ev:?} does not validate"))
        }
    };
    match anomaly {
        Anomaly::Inflation { seed, violations } => {
            let p = maximal_inflation(g, seed).map_err(|e| e.to_string())?;
            if verify_inflation(g, &p) != *violations {
                return Err("inflation violations do not reproduce".into());
            }
        }
        Anomaly::Classify { partition, error } => match error {
            ClassifyError::Unclassifiable { evidence, .. } => check(evidence, partition)?,
            ClassifyError::AlphaExceeded { independent } => {
                let s: VertexSet = independent.iter().copied().collect();
                if s.len() < 3 || !g.is_independent(s) {
                    return Err("independent set does not validate".into());
                }
            }
            ClassifyError::InvalidPartition { violations } => {
                if verify_inflation(g, partition) != *violations {
                    return Err("inflation violations do not reproduce".into());
                }
            }
        },
        Anomaly::Claims {
            partition,
            violations,
            ..
        } => {
            for v in violations {
                check(&v.evidence, partition)?;
            }
        }
        Anomaly::Cover {
            partition,
            decomposition,
            error,
        } => match error {
            CoverError::NotClique { cover, u, v, .. } => {
                let sets = super::CliqueCover::assemble(partition, decomposition).sets();
                let h = sets
                    .get(cover.wrapping_sub(1))
                    .ok_or("cover index out of range")?;
                if !h.contains(*u) || !h.contains(*v) || g.has_edge(*u, *v) || u == v {
                    return Err("reported non-edge does not reproduce".into());
                }
            }
            CoverError::CountMismatch { .. } => {
                return Err("size identity failure cannot be certified".into())
            }
        },
        Anomaly::MinorThreshold { .. } => {}
    }
    Ok(())
}
