//! Batch driver behind the `hadwiger-w5` binary: reads graph6 files or
//! generated corpora, runs one check per graph in parallel, and writes
//! JSON-lines (or text) records in input order.

pub mod report;

use std::io::{self, BufRead, Write};
use std::time::{Duration, Instant};

use rayon::prelude::*;
use sha2::{Digest, Sha256};

use hadwiger_core::decomposition::{
    remark6_consistent, revalidate, seagull_threshold_met, verify_pipeline, Certificate, Outcome,
    PipelineOptions, Theorem2Report,
};
use hadwiger_core::ingest::{emit_graph6, parse_graph6, CorpusSpec};
use hadwiger_core::invariants::{chromatic_number, clique_number, independence_number};
use hadwiger_core::minors::{validate_minor_witness, MinorSearch, MinorWitness, SearchOutcome};
use hadwiger_core::Graph;

pub use report::{CoverSummary, GraphRecord, InvariantsRow, Record, RevalidateRecord, RunReport};

/// Graphs handed to the thread pool at a time. Output is flushed after each
/// chunk, so partial reports survive interruption.
const CHUNK: usize = 512;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default, clap::ValueEnum)]
pub enum Check {
    #[default]
    Pipeline,
    Invariants,
    Theorem2,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default, clap::ValueEnum)]
pub enum Format {
    #[default]
    Json,
    Text,
}

#[derive(Clone, Debug, Default)]
pub struct RunConfig {
    pub check: Check,
    pub format: Format,
    /// Wall-clock limit per graph, applied to minor searches only.
    pub minor_budget: Option<Duration>,
    /// Pipeline: run the `K_⌈n/2⌉` cross-check up to this order.
    pub minor_check_max_n: Option<usize>,
    /// Invariants: compute `h` exactly up to this order, else decide the
    /// `⌈n/2⌉` threshold only.
    pub exact_h_max: usize,
    /// Keep only graphs that reach the decomposition (or fail in it).
    pub hunt_filter: bool,
    pub timing: bool,
}

/// One unit of input: a parsed graph or the reason it could not be read.
#[derive(Clone, Debug)]
pub struct Job {
    pub index: usize,
    pub line: Option<usize>,
    pub seed: Option<u64>,
    pub input: Result<(String, Graph), String>,
}

enum Processed {
    Record(Box<GraphRecord>),
    Filtered,
    Error {
        line: Option<usize>,
        message: String,
    },
}

pub fn sha256_hex(text: &str) -> String {
    hex::encode(Sha256::digest(text.as_bytes()))
}

/// Jobs from a graph6 file, one per non-blank line.
pub fn file_jobs<R: BufRead + Send + 'static>(reader: R) -> impl Iterator<Item = io::Result<Job>> {
    let mut index = 0;
    reader
        .split(b'\n')
        .enumerate()
        .filter_map(move |(k, bytes)| {
            let line = k + 1;
            let bytes = match bytes {
                Ok(b) => b,
                Err(e) => return Some(Err(e)),
            };
            let input = match String::from_utf8(bytes) {
                Ok(text) => {
                    let text = text.trim_end_matches(['\n', '\r']).to_string();
                    if text.trim().is_empty() {
                        return None;
                    }
                    parse_graph6(&text)
                        .map(|g| (text, g))
                        .map_err(|e| format!("line {line}: {e}"))
                }
                Err(_) => Err(format!("line {line}: not valid UTF-8")),
            };
            index += 1;
            Some(Ok(Job {
                index: index - 1,
                line: Some(line),
                seed: None,
                input,
            }))
        })
}

/// Jobs from a generated corpus.
pub fn corpus_jobs(spec: &CorpusSpec) -> anyhow::Result<impl Iterator<Item = io::Result<Job>>> {
    let items = spec.items()?;
    Ok(items.map(|item| {
        let input = emit_graph6(&item.graph)
            .map(|text| (text, item.graph))
            .map_err(|e| format!("graph {}: {e}", item.index));
        Ok(Job {
            index: item.index,
            line: None,
            seed: item.seed,
            input,
        })
    }))
}

/// Processes every job and writes one record per graph (or error) in input
/// order, then a summary record.
pub fn run<I, W>(jobs: I, cfg: &RunConfig, out: &mut W) -> io::Result<RunReport>
where
    I: Iterator<Item = io::Result<Job>>,
    W: Write,
{
    let mut report = RunReport::default();
    write_header(cfg, out)?;
    let mut jobs = jobs.peekable();
    while jobs.peek().is_some() {
        let chunk = jobs
            .by_ref()
            .take(CHUNK)
            .collect::<io::Result<Vec<Job>>>()?;
        let results: Vec<Processed> = chunk.into_par_iter().map(|j| process(j, cfg)).collect();
        for r in results {
            match r {
                Processed::Record(rec) => {
                    report.add(rec.outcome);
                    write_record(&Record::Graph(rec), cfg, out)?;
                }
                Processed::Filtered => report.filtered += 1,
                Processed::Error { line, message } => {
                    report.errors += 1;
                    write_record(&Record::Error { line, message }, cfg, out)?;
                }
            }
        }
        out.flush()?;
    }
    write_record(&Record::Summary(report.clone()), cfg, out)?;
    out.flush()?;
    Ok(report)
}

fn process(job: Job, cfg: &RunConfig) -> Processed {
    let (graph6, g) = match job.input {
        Ok(x) => x,
        Err(message) => {
            return Processed::Error {
                line: job.line,
                message,
            }
        }
    };
    let start = Instant::now();
    let mut rec = GraphRecord {
        index: job.index,
        line: job.line,
        seed: job.seed,
        input_hash: sha256_hex(&graph6),
        graph6,
        n: g.order(),
        outcome: Outcome::Verified,
        branch: String::new(),
        summary: None,
        certificate: None,
        invariants: None,
        theorem2: None,
        minor_witness: None,
        elapsed_ms: None,
    };
    match cfg.check {
        Check::Pipeline => {
            let opts = PipelineOptions {
                minor_check_max_n: cfg.minor_check_max_n,
                minor_budget: cfg.minor_budget,
            };
            let cert = verify_pipeline(&g, &opts);
            if cfg.hunt_filter
                && !matches!(
                    cert,
                    Certificate::Cover { .. } | Certificate::Anomaly { .. }
                )
            {
                return Processed::Filtered;
            }
            rec.outcome = cert.outcome();
            rec.branch = cert.branch().to_string();
            rec.summary = summarize(&cert);
            rec.certificate = Some(cert);
        }
        Check::Invariants => {
            let (row, witness) = invariants_row(&g, cfg);
            rec.outcome = if invariants_anomaly(&row) {
                Outcome::Anomaly
            } else if row.alpha > 2 {
                Outcome::HypothesisFailed
            } else {
                Outcome::Verified
            };
            rec.branch = "invariants".into();
            rec.invariants = Some(row);
            rec.minor_witness = witness;
        }
        Check::Theorem2 => {
            rec.branch = "theorem2".into();
            let alpha = independence_number(&g);
            if alpha != 2 {
                rec.outcome = Outcome::HypothesisFailed;
            } else {
                let Ok((h, witness)) = search(&g, cfg).hadwiger_number() else {
                    return Processed::Error {
                        line: job.line,
                        message: format!("graph {}: minor budget exhausted", job.index),
                    };
                };
                let n = g.order();
                let chi = chromatic_number(&g);
                let t2 = Theorem2Report {
                    n,
                    h,
                    chi,
                    meets_chi: h >= chi,
                    meets_half: h >= n.div_ceil(2),
                };
                rec.outcome = if t2.holds() {
                    Outcome::Verified
                } else {
                    Outcome::Anomaly
                };
                rec.theorem2 = Some(t2);
                rec.minor_witness = Some(witness);
            }
        }
    }
    if cfg.timing {
        rec.elapsed_ms = Some(start.elapsed().as_millis() as u64);
    }
    Processed::Record(Box::new(rec))
}

fn search<'a>(g: &'a Graph, cfg: &RunConfig) -> MinorSearch<'a> {
    let s = MinorSearch::new(g);
    match cfg.minor_budget {
        Some(b) => s.with_deadline(Instant::now() + b),
        None => s,
    }
}

pub fn summarize(cert: &Certificate) -> Option<CoverSummary> {
    let Certificate::Cover {
        partition,
        decomposition,
        cover,
        ..
    } = cert
    else {
        return None;
    };
    Some(CoverSummary {
        part_sizes: partition.part_sizes(),
        y_sizes: decomposition.y_sizes(),
        z_sizes: decomposition.z_sizes(),
        cover_sizes: cover.sizes,
        size_sum: cover.size_sum,
        max_size: cover.max_size,
        cover_bound: cover.cover_bound,
        seagull_quarters: cover.seagull_quarters,
    })
}

fn invariants_row(g: &Graph, cfg: &RunConfig) -> (InvariantsRow, Option<MinorWitness>) {
    let n = g.order();
    let half = n.div_ceil(2);
    let alpha = independence_number(g);
    let omega = clique_number(g);
    let chi = chromatic_number(g);
    let s = search(g, cfg);
    let (h, at_least_half, witness) = if n <= cfg.exact_h_max {
        match s.hadwiger_number() {
            Ok((h, w)) => (Some(h), Some(h >= half), Some(w)),
            Err(w) => (None, (w.order() >= half).then_some(true), Some(w)),
        }
    } else {
        match s.clique_minor(half) {
            SearchOutcome::Found(w) => (None, Some(true), Some(w)),
            SearchOutcome::Absent => (None, Some(false), None),
            SearchOutcome::BudgetExhausted => (None, None, None),
        }
    };
    let hadwiger_holds = match (h, &witness) {
        (Some(h), _) => Some(h >= chi),
        (None, Some(w)) if w.order() >= chi => Some(true),
        _ => None,
    };
    let theorem2 = h.filter(|_| alpha == 2).map(|h| (h >= chi) == (h >= half));
    let row = InvariantsRow {
        alpha,
        omega,
        chi,
        h,
        h_at_least_half: at_least_half,
        hadwiger_holds,
        theorem2,
        seagull: seagull_threshold_met(n, omega),
        remark6: (alpha <= 2).then(|| remark6_consistent(n, omega)),
    };
    (row, witness)
}

fn invariants_anomaly(row: &InvariantsRow) -> bool {
    row.hadwiger_holds == Some(false) || row.theorem2 == Some(false) || row.remark6 == Some(false)
}

/// Re-checks every graph record of a saved report against its own graph6
/// text. Failed checks count as anomalies, unreadable lines as errors.
pub fn revalidate_report<R: BufRead, W: Write>(
    reader: R,
    format: Format,
    out: &mut W,
) -> io::Result<RunReport> {
    let cfg = RunConfig {
        format,
        ..RunConfig::default()
    };
    let mut report = RunReport::default();
    for (k, line) in reader.lines().enumerate() {
        let line_no = k + 1;
        let line = line?;
        if line.trim().is_empty() {
            continue;
        }
        let rec = match serde_json::from_str::<Record>(&line) {
            Ok(Record::Graph(rec)) => rec,
            Ok(_) => continue,
            Err(e) => {
                report.errors += 1;
                let message = format!("line {line_no}: {e}");
                write_record(
                    &Record::Error {
                        line: Some(line_no),
                        message,
                    },
                    &cfg,
                    out,
                )?;
                continue;
            }
        };
        let result = check_record(&rec);
        report.add(if result.is_ok() {
            Outcome::Verified
        } else {
            Outcome::Anomaly
        });
        let rv = RevalidateRecord {
            line: line_no,
            index: rec.index,
            ok: result.is_ok(),
            error: result.err(),
        };
        write_record(&Record::Revalidated(rv), &cfg, out)?;
    }
    write_record(&Record::Summary(report.clone()), &cfg, out)?;
    out.flush()?;
    Ok(report)
}

/// Validators for one graph record. Recomputes nothing expensive: hashes,
/// certificate checks, minor witnesses and flag arithmetic.
pub fn check_record(rec: &GraphRecord) -> Result<(), String> {
    if sha256_hex(&rec.graph6) != rec.input_hash {
        return Err("input hash does not match graph6 text".into());
    }
    let g = parse_graph6(&rec.graph6).map_err(|e| e.to_string())?;
    let n = g.order();
    if n != rec.n {
        return Err(format!("recorded n = {}, graph has {n} vertices", rec.n));
    }
    let half = n.div_ceil(2);
    if let Some(w) = &rec.minor_witness {
        if !validate_minor_witness(&g, w) {
            return Err("minor witness fails validation".into());
        }
    }
    let witness_order = rec.minor_witness.as_ref().map(MinorWitness::order);
    if let Some(cert) = &rec.certificate {
        revalidate(&g, cert)?;
        if rec.outcome != cert.outcome() || rec.branch != cert.branch() {
            return Err("outcome or branch disagrees with certificate".into());
        }
        if rec.summary != summarize(cert) {
            return Err("summary disagrees with certificate".into());
        }
    }
    if let Some(row) = &rec.invariants {
        if let Some(h) = row.h {
            if witness_order != Some(h) {
                return Err("no minor witness of order h".into());
            }
        }
        if row.h_at_least_half == Some(true) && witness_order.is_none_or(|t| t < half) {
            return Err("threshold claimed without a witness".into());
        }
        if row.seagull != seagull_threshold_met(n, row.omega)
            || row.remark6 != (row.alpha <= 2).then(|| remark6_consistent(n, row.omega))
        {
            return Err("clique-number flags are inconsistent".into());
        }
        let t2 = row
            .h
            .filter(|_| row.alpha == 2)
            .map(|h| (h >= row.chi) == (h >= half));
        if row.theorem2 != t2 {
            return Err("theorem2 flag is inconsistent".into());
        }
        if (rec.outcome == Outcome::Anomaly) != invariants_anomaly(row) {
            return Err("outcome disagrees with invariant flags".into());
        }
    }
    if let Some(t2) = &rec.theorem2 {
        if t2.n != n || t2.meets_chi != (t2.h >= t2.chi) || t2.meets_half != (t2.h >= half) {
            return Err("theorem2 report arithmetic is wrong".into());
        }
        if witness_order != Some(t2.h) {
            return Err("no minor witness of order h".into());
        }
    }
    Ok(())
}

fn write_header<W: Write>(cfg: &RunConfig, out: &mut W) -> io::Result<()> {
    if cfg.format != Format::Text {
        return Ok(());
    }
    match cfg.check {
        Check::Pipeline => writeln!(
            out,
            "{:>6}  {:>18}  {:>3}  {:<17} {:<14} cover",
            "index", "source", "n", "outcome", "branch"
        ),
        Check::Invariants => writeln!(
            out,
            "{:>6}  {:>3} {:>5} {:>5} {:>3} {:>3}  {:<5} {:<8} {:<7} {:<7}",
            "index", "n", "alpha", "omega", "chi", "h", "half", "theorem2", "seagull", "remark6"
        ),
        Check::Theorem2 => writeln!(
            out,
            "{:>6}  {:>3} {:>3} {:>3}  {:<9} {:<10} holds",
            "index", "n", "h", "chi", "meets_chi", "meets_half"
        ),
    }
}

fn opt<T: ToString>(v: Option<T>) -> String {
    v.map_or_else(|| "-".to_string(), |v| v.to_string())
}

fn outcome_name(o: Outcome) -> &'static str {
    match o {
        Outcome::Verified => "verified",
        Outcome::HypothesisFailed => "hypothesis_failed",
        Outcome::Anomaly => "anomaly",
    }
}

fn write_record<W: Write>(rec: &Record, cfg: &RunConfig, out: &mut W) -> io::Result<()> {
    if cfg.format == Format::Json {
        serde_json::to_writer(&mut *out, rec)?;
        return writeln!(out);
    }
    match rec {
        Record::Graph(r) => {
            if let Some(row) = &r.invariants {
                return writeln!(
                    out,
                    "{:>6}  {:>3} {:>5} {:>5} {:>3} {:>3}  {:<5} {:<8} {:<7} {:<7}",
                    r.index,
                    r.n,
                    row.alpha,
                    row.omega,
                    row.chi,
                    opt(row.h),
                    opt(row.h_at_least_half),
                    opt(row.theorem2),
                    row.seagull,
                    opt(row.remark6)
                );
            }
            if r.branch == "theorem2" {
                let t = r.theorem2.as_ref();
                return writeln!(
                    out,
                    "{:>6}  {:>3} {:>3} {:>3}  {:<9} {:<10} {}",
                    r.index,
                    r.n,
                    opt(t.map(|t| t.h)),
                    opt(t.map(|t| t.chi)),
                    opt(t.map(|t| t.meets_chi)),
                    opt(t.map(|t| t.meets_half)),
                    opt(t.map(Theorem2Report::holds))
                );
            }
            let source = match (r.line, r.seed) {
                (Some(l), _) => format!("line {l}"),
                (None, Some(s)) => format!("{s:#x}"),
                (None, None) => "-".into(),
            };
            let cover = r.summary.as_ref().map_or(String::new(), |s| {
                format!(
                    "{:?} max {} >= {}",
                    s.cover_sizes, s.max_size, s.cover_bound
                )
            });
            writeln!(
                out,
                "{:>6}  {:>18}  {:>3}  {:<17} {:<14} {}",
                r.index,
                source,
                r.n,
                outcome_name(r.outcome),
                r.branch,
                cover
            )
        }
        Record::Error { message, .. } => writeln!(out, "error: {message}"),
        Record::Revalidated(rv) => match &rv.error {
            None => writeln!(out, "line {:>6}  ok", rv.line),
            Some(e) => writeln!(out, "line {:>6}  FAILED: {e}", rv.line),
        },
        Record::Summary(s) => writeln!(
            out,
            "total {}  verified {}  hypothesis_failed {}  anomalies {}  errors {}  filtered {}",
            s.total, s.verified, s.hypothesis_failed, s.anomalies, s.errors, s.filtered
        ),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use hadwiger_core::families::{cycle, octahedron};

    fn record_for(g: &Graph, check: Check) -> GraphRecord {
        let text = emit_graph6(g).unwrap();
        let job = Job {
            index: 0,
            line: Some(1),
            seed: None,
            input: Ok((text, g.clone())),
        };
        let cfg = RunConfig {
            check,
            exact_h_max: 10,
            ..RunConfig::default()
        };
        match process(job, &cfg) {
            Processed::Record(r) => *r,
            _ => panic!("expected a graph record"),
        }
    }

    #[test]
    fn records_pass_their_own_checks() {
        for g in [cycle(5), octahedron()] {
            for check in [Check::Pipeline, Check::Invariants, Check::Theorem2] {
                let rec = record_for(&g, check);
                assert_eq!(check_record(&rec), Ok(()), "{check:?}");
            }
        }
    }

    #[test]
    fn octahedron_invariants() {
        let rec = record_for(&octahedron(), Check::Invariants);
        let row = rec.invariants.unwrap();
        assert_eq!((row.alpha, row.omega, row.chi, row.h), (2, 3, 3, Some(4)));
        assert_eq!(rec.minor_witness.unwrap().order(), 4);
    }

    #[test]
    fn forged_flags_are_caught() {
        let mut rec = record_for(&cycle(5), Check::Invariants);
        rec.invariants.as_mut().unwrap().h = Some(4);
        assert!(check_record(&rec).is_err());

        let mut rec = record_for(&cycle(5), Check::Theorem2);
        rec.theorem2.as_mut().unwrap().meets_half = false;
        assert!(check_record(&rec).is_err());

        let mut rec = record_for(&cycle(5), Check::Pipeline);
        rec.outcome = Outcome::HypothesisFailed;
        assert!(check_record(&rec).is_err());
    }

    #[test]
    fn hash_is_sha256_of_text() {
        assert_eq!(
            sha256_hex(""),
            "e3b0c44298fc1c149afbf4c8996fb92427ae41e4649b934ca495991b7852b855"
        );
    }
}
