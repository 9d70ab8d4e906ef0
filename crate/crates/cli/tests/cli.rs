use std::io::Write;
use std::process::{Command, Output};

use hadwiger_cli::{Record, RunReport};
use hadwiger_core::decomposition::Outcome;
use hadwiger_core::families::{complete, cycle, wheel};
use hadwiger_core::ingest::emit_graph6;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_hadwiger-w5"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn file_with(lines: &[String]) -> tempfile::NamedTempFile {
    let mut f = tempfile::NamedTempFile::new().unwrap();
    for l in lines {
        writeln!(f, "{l}").unwrap();
    }
    f.flush().unwrap();
    f
}

fn g6(g: &hadwiger_core::Graph) -> String {
    emit_graph6(g).unwrap()
}

fn records(out: &Output) -> Vec<Record> {
    String::from_utf8(out.stdout.clone())
        .unwrap()
        .lines()
        .map(|l| serde_json::from_str(l).expect("every line is a record"))
        .collect()
}

fn summary(recs: &[Record]) -> RunReport {
    match recs.last() {
        Some(Record::Summary(s)) => s.clone(),
        other => panic!("last record is not a summary: {other:?}"),
    }
}

fn path(f: &tempfile::NamedTempFile) -> &str {
    f.path().to_str().unwrap()
}

#[test]
fn c5_file_is_verified() {
    let f = file_with(&[g6(&cycle(5))]);
    let out = run(&["verify", "--input", path(&f)]);
    assert_eq!(out.status.code(), Some(0));
    let recs = records(&out);
    let s = summary(&recs);
    assert_eq!((s.total, s.verified, s.anomalies, s.errors), (1, 1, 0, 0));
    let Record::Graph(r) = &recs[0] else { panic!() };
    assert_eq!(r.branch, "cover");
    assert_eq!(r.line, Some(1));
}

#[test]
fn w5_file_fails_hypothesis_without_anomaly() {
    let f = file_with(&[g6(&wheel(5))]);
    let out = run(&["verify", "--input", path(&f)]);
    assert_eq!(out.status.code(), Some(0));
    let recs = records(&out);
    let s = summary(&recs);
    assert_eq!((s.total, s.hypothesis_failed, s.anomalies), (1, 1, 0));
    let Record::Graph(r) = &recs[0] else { panic!() };
    assert_eq!(r.outcome, Outcome::HypothesisFailed);
    assert_eq!(r.branch, "w5_present");
}

#[test]
fn malformed_line_reports_line_number_and_continues() {
    let f = file_with(&[g6(&cycle(5)), "D?".into(), g6(&complete(4))]);
    let out = run(&["verify", "--input", path(&f)]);
    assert_eq!(out.status.code(), Some(1));
    let recs = records(&out);
    assert!(
        matches!(&recs[1], Record::Error { line: Some(2), message } if message.contains("line 2"))
    );
    let s = summary(&recs);
    assert_eq!((s.total, s.verified, s.errors), (2, 2, 1));
}

#[test]
fn missing_file_exits_one() {
    let out = run(&["verify", "--input", "/nonexistent/graphs.g6"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("cannot open"));
}

#[test]
fn empty_file_gives_empty_table() {
    let f = file_with(&[]);
    let out = run(&["invariants", "--input", path(&f)]);
    assert_eq!(out.status.code(), Some(0));
    let recs = records(&out);
    assert_eq!(recs.len(), 1);
    assert_eq!(summary(&recs), RunReport::default());

    let out = run(&["invariants", "--input", path(&f), "--format", "text"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert_eq!(text.lines().count(), 2, "header and summary only:\n{text}");
}

#[test]
fn invariants_of_c5_and_k6() {
    let f = file_with(&[g6(&cycle(5)), g6(&complete(6))]);
    let out = run(&["invariants", "--input", path(&f)]);
    assert_eq!(out.status.code(), Some(0));
    let recs = records(&out);
    let rows: Vec<_> = recs[..2]
        .iter()
        .map(|r| match r {
            Record::Graph(r) => (r.n, r.invariants.clone().unwrap()),
            _ => panic!(),
        })
        .collect();
    let (n, c5) = &rows[0];
    assert_eq!(
        (*n, c5.alpha, c5.omega, c5.chi, c5.h),
        (5, 2, 2, 3, Some(3))
    );
    assert_eq!(
        (c5.theorem2, c5.seagull, c5.remark6),
        (Some(true), true, Some(true))
    );
    let (n, k6) = &rows[1];
    assert_eq!(
        (*n, k6.alpha, k6.omega, k6.chi, k6.h),
        (6, 1, 6, 6, Some(6))
    );
}

#[test]
fn hunt_is_deterministic_and_clean() {
    let args = ["hunt", "--n", "8", "--samples", "100", "--seed", "42"];
    let a = run(&args);
    let b = run(&args);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    let s = summary(&records(&a));
    assert_eq!(s.anomalies, 0);
    assert_eq!(s.total + s.filtered, 100);
    assert_eq!(s.total, s.verified);
}

#[test]
fn hunt_at_five_vertices_is_trivial() {
    let out = run(&["hunt", "--n", "5", "--samples", "10", "--seed", "9"]);
    assert_eq!(out.status.code(), Some(0));
    let s = summary(&records(&out));
    assert_eq!(s.total + s.filtered, 10);
    assert_eq!((s.anomalies, s.hypothesis_failed), (0, 0));
}

#[test]
fn hunt_rejects_small_orders() {
    assert_eq!(
        run(&["hunt", "--n", "4", "--samples", "1"]).status.code(),
        Some(1)
    );
}

fn revalidate_ok(report: &[u8]) -> RunReport {
    let mut f = tempfile::NamedTempFile::new().unwrap();
    f.write_all(report).unwrap();
    let out = run(&["verify", "--revalidate", "--input", path(&f)]);
    let recs = records(&out);
    assert!(recs
        .iter()
        .all(|r| !matches!(r, Record::Revalidated(rv) if !rv.ok)));
    assert_eq!(out.status.code(), Some(0));
    summary(&recs)
}

#[test]
fn saved_reports_revalidate() {
    for check in ["pipeline", "invariants", "theorem2"] {
        let out = run(&["verify", "--gen", "n=7", "--check", check]);
        assert_eq!(out.status.code(), Some(0), "{check}");
        let s = revalidate_ok(&out.stdout);
        assert_eq!(s.total, 107, "{check}");
    }
    let out = run(&["hunt", "--n", "12", "--samples", "50", "--seed", "5"]);
    let s = revalidate_ok(&out.stdout);
    assert_eq!(s.total, summary(&records(&out)).total);
}

#[test]
fn revalidate_catches_tampering() {
    let f = file_with(&[g6(&cycle(5))]);
    let out = run(&["verify", "--input", path(&f)]);
    let text = String::from_utf8(out.stdout).unwrap();
    // Swap in a different graph without updating the hash.
    let tampered = text.replace("\"graph6\":\"Dhc\"", "\"graph6\":\"D~{\"");
    assert_ne!(tampered, text);
    let mut t = tempfile::NamedTempFile::new().unwrap();
    t.write_all(tampered.as_bytes()).unwrap();
    let out = run(&["verify", "--revalidate", "--input", path(&t)]);
    assert_eq!(out.status.code(), Some(2));
    let recs = records(&out);
    assert!(matches!(&recs[0], Record::Revalidated(rv) if !rv.ok));
}

#[test]
fn text_output_is_aligned_rows() {
    let f = file_with(&[g6(&cycle(5)), g6(&wheel(5))]);
    let out = run(&["verify", "--input", path(&f), "--format", "text"]);
    let text = String::from_utf8(out.stdout).unwrap();
    let lines: Vec<_> = text.lines().collect();
    assert_eq!(lines.len(), 4);
    assert!(lines[1].contains("cover"));
    assert!(lines[2].contains("w5_present"));
    assert!(lines[3].starts_with("total 2"));
}

#[test]
fn generated_exhaustive_corpus_counts() {
    let out = run(&["verify", "--gen", "n=6"]);
    assert_eq!(out.status.code(), Some(0));
    let s = summary(&records(&out));
    assert_eq!(s.total, 38);
    assert_eq!(s.anomalies, 0);
}
