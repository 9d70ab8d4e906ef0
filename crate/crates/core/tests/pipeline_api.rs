use hadwiger_core::decomposition::{
    revalidate, verify_pipeline, Certificate, MinorCheck, Outcome, PipelineOptions,
};
use hadwiger_core::families::{c5_blowup, complete, cycle, wheel};
use hadwiger_core::ingest::{emit_graph6, parse_graph6, CorpusMode, CorpusSpec};
use hadwiger_core::minors::validate_minor_witness;

fn round_trip(cert: &Certificate) -> Certificate {
    serde_json::from_str(&serde_json::to_string(cert).unwrap()).unwrap()
}

#[test]
fn graph6_to_cover_certificate_and_back() {
    let g = c5_blowup([3, 2, 2, 1, 2]);
    let g = parse_graph6(&emit_graph6(&g).unwrap()).unwrap();
    let opts = PipelineOptions::with_minor_check(12, None);
    let cert = verify_pipeline(&g, &opts);
    let Certificate::Cover {
        cover, minor_check, ..
    } = &cert
    else {
        panic!("expected a cover, got {}", cert.branch());
    };
    assert_eq!(
        cover.size_sum,
        g.order() + cover.double_counted[0] + cover.double_counted[1]
    );
    assert!(4 * cover.max_size >= g.order() + 2);
    match minor_check {
        MinorCheck::Found { threshold, witness } => {
            assert_eq!(*threshold, 5);
            assert!(validate_minor_witness(&g, witness));
        }
        other => panic!("minor check: {other:?}"),
    }
    let back = round_trip(&cert);
    assert_eq!(back, cert);
    assert_eq!(revalidate(&g, &back), Ok(()));
}

#[test]
fn branches_for_small_families() {
    let opts = PipelineOptions::default();
    let cases = [
        (complete(4), "clique", Outcome::Verified),
        (cycle(5), "cover", Outcome::Verified),
        (wheel(5), "w5_present", Outcome::HypothesisFailed),
        (cycle(7), "alpha_exceeded", Outcome::HypothesisFailed),
        (cycle(4), "c5_free", Outcome::Verified),
    ];
    for (g, branch, outcome) in cases {
        let cert = verify_pipeline(&g, &opts);
        assert_eq!((cert.branch(), cert.outcome()), (branch, outcome));
        assert_eq!(revalidate(&g, &round_trip(&cert)), Ok(()), "{branch}");
    }
}

#[test]
fn corpus_specs_parse_and_generate() {
    let spec: CorpusSpec = "n=9,samples=20,seed=3".parse().unwrap();
    assert_eq!(
        spec.mode,
        CorpusMode::Random {
            samples: 20,
            seed: 3
        }
    );
    let a: Vec<_> = spec.items().unwrap().collect();
    let b: Vec<_> = spec.items().unwrap().collect();
    assert_eq!(a, b);
    assert!(a.iter().all(|item| item.graph.order() == 9));

    let spec: CorpusSpec = "n=7".parse().unwrap();
    assert_eq!(spec.items().unwrap().count(), 107);
    assert!("n=11".parse::<CorpusSpec>().is_err());
    let too_big = CorpusSpec {
        n: 11,
        mode: CorpusMode::Exhaustive,
    };
    assert!(too_big.items().is_err());
    assert!("samples=3".parse::<CorpusSpec>().is_err());
}
