use std::process::Command;

use altpower::graph::cache::GraphRecord;
use altpower::graph::GraphKind;
use altpower::{CyclicClass, PartitionType};

fn run(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("altpower").chain(args.iter().copied());
    let code = altpower::cli::run(argv, &mut out, &mut err);
    (
        code,
        String::from_utf8(out).unwrap(),
        String::from_utf8(err).unwrap(),
    )
}

#[test]
fn order_graph_of_a7_lists_components() {
    let (code, out, _) = run(&["graph", "--kind", "order", "--n", "7"]);
    assert_eq!(code, 0);
    let lines: Vec<&str> = out.lines().skip(1).collect();
    assert_eq!(lines, ["{2,3,4,6}", "{5}", "{7}"]);
}

#[test]
fn counts_printed_for_small_graphs() {
    let (_, out, _) = run(&["graph", "--kind", "ptype", "--n", "8"]);
    assert!(
        out.starts_with("kind=ptype n=8 ") && out.lines().next().unwrap().ends_with("components=3")
    );
    let (_, out, _) = run(&["graph", "--kind", "quotient", "--n", "5"]);
    assert!(out.lines().next().unwrap().ends_with("components=31"));
}

#[test]
fn identical_arguments_give_identical_bytes() {
    let cases: [&[&str]; 4] = [
        &[
            "census", "--from", "3", "--to", "30", "--format", "markdown",
        ],
        &[
            "census",
            "--from",
            "3",
            "--to",
            "8",
            "--brute-force",
            "--format",
            "json",
        ],
        &[
            "verify",
            "--suite",
            "procedure",
            "--max-n",
            "6",
            "--seed",
            "9",
        ],
        &["graph", "--kind", "quotient", "--n", "6", "--json"],
    ];
    for args in cases {
        let a = run(args);
        let b = run(args);
        assert_eq!(a.0, 0, "{args:?}: {}", a.2);
        assert_eq!(a.1, b.1, "{args:?}");
    }
}

#[test]
fn census_table1_markdown() {
    let (code, out, _) = run(&[
        "census", "--from", "3", "--to", "10", "--format", "markdown",
    ]);
    assert_eq!(code, 0);
    for c0 in [
        "| 1 |",
        "| 7 |",
        "| 31 |",
        "| 121 |",
        "| 421 |",
        "| 962 |",
        "| 5442 |",
        "| 29345 |",
    ] {
        assert!(out.contains(c0), "{c0} missing");
    }
    let (_, out, _) = run(&["census", "--from", "16", "--to", "16"]);
    let row = out.lines().nth(1).unwrap();
    assert!(row.split('\t').any(|f| f == "true"), "{row}");
}

#[test]
fn json_round_trips_through_record_parser() {
    for (kind, n) in [("quotient", 6), ("ptype", 12), ("order", 9)] {
        let (code, out, _) = run(&["graph", "--kind", kind, "--n", &n.to_string(), "--json"]);
        assert_eq!(code, 0);
        let rec = GraphRecord::from_json(&out).unwrap();
        assert_eq!(rec.kind, kind.parse::<GraphKind>().unwrap());
        assert_eq!(rec.to_json().unwrap().trim(), out.trim());
        match rec.kind {
            GraphKind::Quotient => {
                rec.to_graph::<CyclicClass>().unwrap();
            }
            GraphKind::PowerType => {
                rec.to_graph::<PartitionType>().unwrap();
            }
            _ => {}
        }
    }
}

#[test]
fn out_file_and_cache_dir() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("g.json");
    let (code, _, _) = run(&[
        "graph",
        "--kind",
        "ptype",
        "--n",
        "9",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert_eq!(code, 0);
    GraphRecord::read(&path).unwrap();

    let cache = dir.path().join("cache");
    let args = [
        "--cache-dir",
        cache.to_str().unwrap(),
        "graph",
        "--kind",
        "quotient",
        "--n",
        "6",
    ];
    let first = run(&args);
    assert!(cache.join("quotient-n6.json").exists());
    assert_eq!(run(&args).1, first.1);
}

#[test]
fn exit_codes() {
    assert_eq!(run(&["verify", "--suite", "edges", "--max-n", "6"]).0, 0);
    assert_eq!(run(&["verify", "--suite", "nope"]).0, 2);
    assert_eq!(run(&["census", "--from", "5", "--to", "3"]).0, 2);
    assert_eq!(run(&["census", "--from", "2", "--to", "3"]).0, 2);
    assert_eq!(run(&["graph", "--kind", "quotient", "--n", "11"]).0, 3);
    assert_eq!(
        run(&["census", "--from", "11", "--to", "11", "--brute-force"]).0,
        3
    );
    let (code, _, err) = run(&[
        "--brute-force-ceiling",
        "4",
        "graph",
        "--kind",
        "quotient",
        "--n",
        "5",
    ]);
    assert_eq!(code, 3);
    assert!(err.contains("ceiling 4"));
}

#[test]
fn classify_reports_row() {
    let (code, out, _) = run(&["classify", "--n", "13"]);
    assert_eq!(code, 0);
    assert!(out.contains("critical_primes\t[11, 13]"));
    assert!(out.contains("c0\t68221441"));
}

#[test]
fn binary_exit_status() {
    let bin = env!("CARGO_BIN_EXE_altpower");
    let ok = Command::new(bin)
        .args(["graph", "--kind", "order", "--n", "6"])
        .output()
        .unwrap();
    assert_eq!(ok.status.code(), Some(0));
    assert_eq!(String::from_utf8_lossy(&ok.stdout).lines().count(), 4);
    let bad = Command::new(bin)
        .args(["graph", "--kind", "bogus", "--n", "6"])
        .output()
        .unwrap();
    assert_eq!(bad.status.code(), Some(2));
}
