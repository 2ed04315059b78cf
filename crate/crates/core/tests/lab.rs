use std::sync::Arc;

use unitgraph::graph::build_unit_graph;
use unitgraph::lab::{
    default_catalog, run_catalog, verify_ring, verify_with_graph, LabOptions, Status, Target,
    TheoremFilter, TheoremId,
};
use unitgraph::ring::{parse_ring_spec, realize, RingSpec};
use unitgraph::structure::{jacobson_radical, maximal_left_ideals, radical_by_intersection};

fn spec(s: &str) -> RingSpec {
    parse_ring_spec(s).unwrap()
}

#[test]
fn smallest_ring_has_no_failures() {
    let verdicts = verify_ring(&spec("Z2"), &TheoremFilter::all(), &LabOptions::default()).unwrap();
    assert_eq!(verdicts.len(), TheoremId::ALL.len());
    for v in &verdicts {
        assert!(matches!(v.status, Status::Holds | Status::NotApplicable), "{}", v.to_line());
    }
}

/// Removing or adding one edge must surface as a failing verdict whose
/// counterexample is genuine in the corrupted graph.
#[test]
fn corrupted_adjacency_is_caught() {
    let cases = [
        ("Z5", (1, 2), false, TheoremId::MultipartiteIff),
        ("Z4", (0, 2), true, TheoremId::IdealIndependence),
        ("GF(4)", (0, 3), false, TheoremId::RadicalOmega),
    ];
    for (ring, (a, b), present, expected) in cases {
        let r = Arc::new(realize(&spec(ring), 4096).unwrap());
        let mut g = build_unit_graph(&r);
        g.set_edge(a, b, present);
        let verdicts = verify_with_graph(r.clone(), g.clone(), &TheoremFilter::all(), &LabOptions::default());
        let failed: Vec<_> = verdicts.iter().filter(|v| v.status == Status::Fails).collect();
        assert!(!failed.is_empty(), "{ring}: corruption went unnoticed");
        let lines: Vec<String> = failed.iter().map(|v| v.to_line()).collect();
        assert!(failed.iter().any(|v| v.theorem == expected), "{ring}: {lines:?}");
        for v in failed {
            assert!(v.to_line().contains("\tfails\t"));
            for e in v.evidence.iter().filter(|e| e.target == Target::Ring) {
                assert!(e.witness.recheck(&r, &g), "{ring}: {}", v.to_line());
            }
        }
    }
}

#[test]
fn verdict_lines_are_deterministic_across_job_counts() {
    let specs: Vec<RingSpec> = ["Z8", "Z9", "Z15", "GF(9)", "M2(GF(2))", "Z2 x Z3", "Z3 x M2(GF(2))"]
        .iter()
        .map(|s| spec(s))
        .collect();
    let render = |jobs| -> Vec<String> {
        run_catalog(&specs, &TheoremFilter::all(), &LabOptions::default(), jobs)
            .into_iter()
            .flat_map(|r| r.outcome.unwrap())
            .map(|v| v.to_line())
            .collect()
    };
    let first = render(1);
    assert_eq!(first, render(1));
    assert_eq!(first, render(3));
}

#[test]
fn multipartite_filter_holds_on_catalog() {
    let specs: Vec<RingSpec> = default_catalog().into_iter().map(|e| e.spec).collect();
    let filter = TheoremFilter::parse("T3.1").unwrap();
    for report in run_catalog(&specs, &filter, &LabOptions::default(), 1) {
        let verdicts = report.outcome.unwrap();
        assert_eq!(verdicts.len(), 2);
        assert_eq!(verdicts[0].status, Status::Holds, "{}", verdicts[0].to_line());
        assert_ne!(verdicts[1].status, Status::Fails, "{}", verdicts[1].to_line());
    }
}

#[test]
fn radical_agrees_with_maximal_ideals_on_catalog() {
    for entry in default_catalog() {
        let r = realize(&entry.spec, 4096).unwrap();
        let Ok(maximal) = maximal_left_ideals(&r, 1024) else {
            continue;
        };
        let j = jacobson_radical(&r);
        let meet = radical_by_intersection(&r, &maximal);
        assert_eq!(j.to_vec(), meet.to_vec(), "{}", entry.spec);
    }
}

#[test]
fn unknown_theorem_prefix_is_rejected() {
    assert!(TheoremFilter::parse("T9.9").is_err());
    assert!(TheoremFilter::parse("t3.2").is_ok());
}
