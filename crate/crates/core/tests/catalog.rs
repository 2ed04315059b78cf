use std::time::Instant;

use unitgraph::lab::{default_catalog, run_catalog, LabOptions, Status, Summary, TheoremFilter};
use unitgraph::ring::RingSpec;

#[test]
fn full_catalog_has_no_failures() {
    let specs: Vec<RingSpec> = default_catalog().into_iter().map(|e| e.spec).collect();
    let start = Instant::now();
    let reports = run_catalog(&specs, &TheoremFilter::all(), &LabOptions::default(), 1);
    let elapsed = start.elapsed();
    for r in &reports {
        let verdicts = r.outcome.as_ref().unwrap_or_else(|e| panic!("{}: {e}", r.spec));
        for v in verdicts {
            if v.status != Status::Holds {
                println!("{}", v.to_line());
            }
            assert_ne!(v.status, Status::Fails, "{}", v.to_line());
        }
    }
    let s = Summary::of(&reports);
    println!("{s:?} in {elapsed:?}");
    assert!(s.passed());
}
