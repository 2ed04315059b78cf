use std::process::{Command, Output};

fn unitgraph(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_unitgraph"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

/// The value column of a `records` line with this key.
fn field(text: &str, key: &str) -> String {
    text.lines()
        .find_map(|l| l.strip_prefix(&format!("{key}\t")))
        .unwrap_or_else(|| panic!("no {key} in {text}"))
        .to_string()
}

#[test]
fn ring_reports() {
    let o = unitgraph(&["ring", "Z4", "--format", "records"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert_eq!(field(&text, "local"), "true");
    assert_eq!(field(&text, "units"), "2");
    assert_eq!(field(&text, "radical"), "{0,2}");

    let text = stdout(&unitgraph(&["ring", "M2(GF(2))", "--format", "records"]));
    assert_eq!(field(&text, "units"), "6");
    assert_eq!(field(&text, "radical"), "{0}");
    assert!(field(&text, "maximal_left_ideals").starts_with("3 "));

    let human = stdout(&unitgraph(&["ring", "Z2[x]/(x^2)"]));
    assert!(human.lines().any(|l| l.starts_with("radical:") && l.ends_with("{0,x}")));
}

#[test]
fn parse_and_realization_errors() {
    let o = unitgraph(&["ring", "GF(6)"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("not a prime power"));
    assert!(o.stdout.is_empty());

    let o = unitgraph(&["ring", "Z4 x"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("position"));

    let o = unitgraph(&["ring", "M4(Z2)"]);
    assert_eq!(o.status.code(), Some(3));
    assert!(stderr(&o).contains("exceeds the cap"));

    let o = unitgraph(&["ring", "Z64", "--order-cap", "32"]);
    assert_eq!(o.status.code(), Some(3));
}

#[test]
fn graph_exports() {
    assert_eq!(stdout(&unitgraph(&["graph", "Z3", "--format", "edgelist"])), "0 1\n0 2\n");
    assert_eq!(stdout(&unitgraph(&["graph", "Z4"])), "0 1\n0 3\n1 2\n2 3\n");
    let dot = stdout(&unitgraph(&["graph", "Z2", "--format", "dot"]));
    assert!(dot.starts_with("graph "));
    assert_eq!(dot.matches(" -- ").count(), 1);
    assert_eq!(dot.matches("[label=").count(), 2);
}

#[test]
fn conflicting_formats_are_rejected() {
    for args in [
        ["graph", "Z3", "--format", "human"],
        ["ring", "Z3", "--format", "dot"],
        ["invariants", "Z3", "--format", "edgelist"],
    ] {
        let o = unitgraph(&args);
        assert_eq!(o.status.code(), Some(2), "{args:?}");
        assert!(o.stdout.is_empty());
    }
}

#[test]
fn invariants_of_small_rings() {
    let cases = [
        ("Z5", "3", "2", "3", "false", Some("3")),
        ("Z4", "2", "2", "2", "true", Some("2")),
        ("GF(4)", "4", "1", "4", "false", Some("4")),
        ("Z9", "4", "3", "4", "false", None),
    ];
    for (ring, omega, alpha, chi, bipartite, r) in cases {
        let o = unitgraph(&["invariants", ring, "--format", "records"]);
        assert_eq!(o.status.code(), Some(0), "{ring}");
        let text = stdout(&o);
        assert_eq!(field(&text, "omega"), omega, "{ring}");
        assert_eq!(field(&text, "alpha"), alpha, "{ring}");
        assert_eq!(field(&text, "chi"), chi, "{ring}");
        assert_eq!(field(&text, "bipartite"), bipartite, "{ring}");
        assert_eq!(field(&text, "complete_multipartite"), r.is_some().to_string(), "{ring}");
        if let Some(r) = r {
            assert_eq!(field(&text, "r"), r, "{ring}");
        }
    }
    let text = stdout(&unitgraph(&["invariants", "Z5", "--format", "records"]));
    assert_eq!(field(&text, "parts"), "{0} {1,4} {2,3}");
}

#[test]
fn budget_exhaustion_exits_4_with_partial_report() {
    let o = unitgraph(&["invariants", "M2(GF(3))", "--node-budget", "1000", "--format", "records"]);
    assert_eq!(o.status.code(), Some(4));
    assert!(field(&stdout(&o), "chi").contains("not exact"));
    assert!(stderr(&o).contains("budget"));
}

#[test]
fn verify_single_rings() {
    let o = unitgraph(&["verify", "--theorem", "T3.2c", "--ring", "Z3 x M2(GF(2))"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    let line = text.lines().next().unwrap();
    assert!(line.starts_with("T3.2c\tZ3 x M2(GF(2))\tholds\t"), "{line}");
    assert!(line.contains("bipartite=false"));

    let o = unitgraph(&["verify", "--theorem", "T2.5", "--ring", "Z4"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    let statuses: Vec<&str> = text.lines().filter_map(|l| l.split('\t').nth(2)).collect();
    assert_eq!(statuses, ["n/a", "n/a"]);

    let o = unitgraph(&["verify", "--theorem", "T2.5-clique", "--ring", "Z15", "--format", "records"]);
    let text = stdout(&o);
    assert!(text.lines().next().unwrap().contains("clique={1,6,10}"), "{text}");
    assert!(text.lines().last().unwrap().starts_with("#summary\tholds=1\tfails=0"));
}

#[test]
fn verify_rejects_unknown_theorems_and_bad_rings() {
    assert_eq!(unitgraph(&["verify", "--theorem", "T9"]).status.code(), Some(2));
    assert_eq!(unitgraph(&["verify", "--ring", "Q7"]).status.code(), Some(2));
    let o = unitgraph(&["verify", "--ring", "Z5000", "--theorem", "L2.1a"]);
    assert_eq!(o.status.code(), Some(3));
    assert!(stderr(&o).contains("Z5000"));
}

#[test]
fn verify_multipartite_over_catalog() {
    let o = unitgraph(&["verify", "--theorem", "T3.1", "--jobs", "2"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    let iff: Vec<&str> = text.lines().filter(|l| l.starts_with("T3.1-iff\t")).collect();
    assert!(iff.len() >= 35);
    assert!(iff.iter().all(|l| l.split('\t').nth(2) == Some("holds")));
}

#[test]
fn catalog_listing() {
    let o = unitgraph(&["catalog", "list", "--format", "records"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.lines().count() >= 35);
    assert!(text.lines().all(|l| l.split('\t').count() == 3));

    let small = stdout(&unitgraph(&["catalog", "list", "--max-order", "16", "--format", "records"]));
    assert!(small.lines().count() < text.lines().count());
    assert!(small.lines().all(|l| l.split('\t').nth(1).unwrap().parse::<u64>().unwrap() <= 16));

    assert_eq!(
        stdout(&unitgraph(&["catalog", "describe", "Z15"])),
        "exercises T2.5 (two maximal ideals, 2 a unit)\n"
    );
    assert_eq!(unitgraph(&["catalog", "describe", "Z17"]).status.code(), Some(3));
}

#[test]
fn output_is_deterministic() {
    for args in [
        vec!["ring", "Z3 x GF(4)"],
        vec!["invariants", "M2(GF(2))"],
        vec!["graph", "Z6", "--format", "dot"],
        vec!["verify", "--max-order", "27", "--jobs", "3"],
    ] {
        assert_eq!(stdout(&unitgraph(&args)), stdout(&unitgraph(&args)), "{args:?}");
    }
}
