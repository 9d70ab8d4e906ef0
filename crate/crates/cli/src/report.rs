//! JSON-lines report records.

use serde::{Deserialize, Serialize};

use hadwiger_core::decomposition::{Certificate, Outcome, Theorem2Report};
use hadwiger_core::minors::MinorWitness;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "record", rename_all = "snake_case")]
pub enum Record {
    Graph(Box<GraphRecord>),
    Error {
        line: Option<usize>,
        message: String,
    },
    Revalidated(RevalidateRecord),
    Summary(RunReport),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphRecord {
    pub index: usize,
    /// 1-based input line, for file input.
    pub line: Option<usize>,
    /// Generator seed, for generated input.
    pub seed: Option<u64>,
    pub graph6: String,
    /// SHA-256 of the graph6 text, hex.
    pub input_hash: String,
    pub n: usize,
    pub outcome: Outcome,
    pub branch: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub summary: Option<CoverSummary>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub certificate: Option<Certificate>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub invariants: Option<InvariantsRow>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub theorem2: Option<Theorem2Report>,
    /// Largest clique minor found.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub minor_witness: Option<MinorWitness>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub elapsed_ms: Option<u64>,
}

/// Sizes and bounds of a cover certificate, for quick reading.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CoverSummary {
    pub part_sizes: [usize; 5],
    pub y_sizes: [usize; 5],
    pub z_sizes: [usize; 5],
    pub cover_sizes: [usize; 4],
    pub size_sum: usize,
    pub max_size: usize,
    pub cover_bound: usize,
    pub seagull_quarters: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct InvariantsRow {
    pub alpha: usize,
    pub omega: usize,
    pub chi: usize,
    /// Exact Hadwiger number, when computed.
    pub h: Option<usize>,
    /// Whether `h ≥ ⌈n/2⌉`, when decided.
    pub h_at_least_half: Option<bool>,
    /// `h ≥ χ`, when `h` is exact.
    pub hadwiger_holds: Option<bool>,
    /// Theorem 2 equivalence, when `α = 2` and `h` is exact.
    pub theorem2: Option<bool>,
    pub seagull: bool,
    pub remark6: Option<bool>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RevalidateRecord {
    pub line: usize,
    pub index: usize,
    pub ok: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
}

/// Aggregate counts. `verified + hypothesis_failed + anomalies` equals the
/// number of graphs processed; `errors` counts unreadable lines and
/// `filtered` the graphs a hunt skipped.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct RunReport {
    pub total: usize,
    pub verified: usize,
    pub hypothesis_failed: usize,
    pub anomalies: usize,
    pub errors: usize,
    #[serde(default)]
    pub filtered: usize,
}

impl RunReport {
    pub fn add(&mut self, outcome: Outcome) {
        self.total += 1;
        match outcome {
            Outcome::Verified => self.verified += 1,
            Outcome::HypothesisFailed => self.hypothesis_failed += 1,
            Outcome::Anomaly => self.anomalies += 1,
        }
    }

    /// 2 on any anomaly, else 1 on any error, else 0.
    pub fn exit_code(&self) -> i32 {
        if self.anomalies > 0 {
            2
        } else if self.errors > 0 {
            1
        } else {
            0
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn anomaly_exit_code_wins_over_errors() {
        let mut r = RunReport::default();
        assert_eq!(r.exit_code(), 0);
        r.add(Outcome::HypothesisFailed);
        assert_eq!(r.exit_code(), 0);
        r.errors = 3;
        assert_eq!(r.exit_code(), 1);
        r.add(Outcome::Anomaly);
        assert_eq!(r.exit_code(), 2);
        assert_eq!(r.total, r.verified + r.hypothesis_failed + r.anomalies);
    }

    #[test]
    fn summary_round_trips() {
        let rec = Record::Summary(RunReport {
            total: 4,
            verified: 3,
            hypothesis_failed: 1,
            ..RunReport::default()
        });
        let text = serde_json::to_string(&rec).unwrap();
        assert!(text.starts_with(r#"{"record":"summary""#));
        assert_eq!(serde_json::from_str::<Record>(&text).unwrap(), rec);
    }
}
