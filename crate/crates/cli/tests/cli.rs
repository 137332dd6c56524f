use dot_parser::{ast, canonical};
use sects_cli::*;
use std::collections::{BTreeMap, BTreeSet};
use std::process::Command;

fn bin() -> Command {
    let mut c = Command::new(env!("CARGO_BIN_EXE_sects"));
    c.env_remove("SECTS_LIMIT_N");
    c
}

struct Dot {
    labels: BTreeMap<String, String>,
    colors: BTreeMap<String, String>,
    edges: BTreeSet<(String, String)>,
}

fn parse_dot(text: &str) -> Dot {
    let graph = canonical::Graph::from(ast::Graph::try_from(text).expect("valid DOT"));
    assert!(graph.is_digraph);
    let mut labels = BTreeMap::new();
    let mut colors = BTreeMap::new();
    for (id, node) in graph.nodes.set {
        for (k, v) in node.attr.elems {
            let (k, v): (String, String) = (k.into(), v.into());
            match k.as_str() {
                "label" => {
                    labels.insert(id.clone(), v);
                }
                "color" => {
                    colors.insert(id.clone(), v);
                }
                _ => {}
            }
        }
    }
    let edges = graph
        .edges
        .set
        .iter()
        .map(|e| (labels[&e.from].clone(), labels[&e.to].clone()))
        .collect();
    Dot { labels, colors, edges }
}

fn hasse(p: usize, q: usize, color: bool) -> Dot {
    let mut cfg = RunConfig::new(p, q, OutputFormat::Dot);
    cfg.color_by_sect = color;
    parse_dot(&cmd_hasse(&cfg).unwrap())
}

fn distinct(m: &BTreeMap<String, String>) -> usize {
    m.values().collect::<BTreeSet<_>>().len()
}

#[test]
fn hasse_two_one() {
    let d = hasse(2, 1, true);
    assert_eq!(d.labels.len(), 6);
    assert_eq!(d.edges.len(), 6);
    assert_eq!(distinct(&d.colors), 3);
    let expected: BTreeSet<(String, String)> = [
        ("++-", "+11"),
        ("+-+", "+11"),
        ("+-+", "11+"),
        ("-++", "11+"),
        ("+11", "1+1"),
        ("11+", "1+1"),
    ]
    .iter()
    .map(|(a, b)| (a.to_string(), b.to_string()))
    .collect();
    assert_eq!(d.edges, expected);
}

#[test]
fn hasse_two_two() {
    let d = hasse(2, 2, true);
    assert_eq!(d.labels.len(), 21);
    assert_eq!(d.edges.len(), 38);
    assert_eq!(distinct(&d.colors), 6);
}

#[test]
fn hasse_one_one() {
    let d = hasse(1, 1, false);
    assert_eq!(d.labels.len(), 3);
    assert_eq!(d.edges.len(), 2);
    assert!(d.colors.is_empty());
}

#[test]
fn colors_follow_sects() {
    // two nodes share a color exactly when they share a base clan
    let d = hasse(3, 2, true);
    let by_label: BTreeMap<&str, &str> = d
        .labels
        .iter()
        .map(|(id, l)| (l.as_str(), d.colors[id].as_str()))
        .collect();
    for (a, ca) in &by_label {
        for (b, cb) in &by_label {
            let ga: sects_core::Clan = a.parse().unwrap();
            let gb: sects_core::Clan = b.parse().unwrap();
            let same = sects_core::base_clan(&ga) == sects_core::base_clan(&gb);
            assert_eq!(same, ca == cb, "{a} {b}");
        }
    }
}

#[test]
fn every_dot_document_parses() {
    for n in 2..=6 {
        for p in 1..n {
            for color in [false, true] {
                let d = hasse(p, n - p, color);
                assert_eq!(d.labels.len() as u128, sects_core::clan_count(p, n - p));
            }
        }
    }
}

#[test]
fn enumerate_counts() {
    for (p, q, lines) in [(2, 1, 6), (2, 2, 21), (1, 1, 3)] {
        let out = cmd_enumerate(&RunConfig::new(p, q, OutputFormat::Text)).unwrap();
        let rows: Vec<&str> = out.lines().collect();
        assert_eq!(rows[0], lines.to_string());
        assert_eq!(rows.len() - 1, lines);
    }
    let out = cmd_enumerate(&RunConfig::new(1, 1, OutputFormat::Json)).unwrap();
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    let set: BTreeSet<&str> = v["clans"].as_array().unwrap().iter().map(|c| c.as_str().unwrap()).collect();
    assert_eq!(set, BTreeSet::from(["+-", "-+", "11"]));
}

#[test]
fn dense_two_two() {
    let out = cmd_dense(&RunConfig::new(2, 2, OutputFormat::Json)).unwrap();
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["min"], "--++");
    assert_eq!(v["max"], "1221");
    assert_eq!(v["ideal"], true);
    assert_eq!(v["size"], 7);
}

#[test]
fn sects_two_two() {
    let out = cmd_sects(&RunConfig::new(2, 2, OutputFormat::Json)).unwrap();
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    let mut sizes: Vec<usize> = v["sects"]
        .as_array()
        .unwrap()
        .iter()
        .map(|s| s["members"].as_array().unwrap().len())
        .collect();
    sizes.sort_unstable();
    assert_eq!(sizes, vec![1, 2, 3, 3, 5, 7]);
}

#[test]
fn iso_two() {
    let (out, ok) = cmd_iso(&RunConfig::new(2, 2, OutputFormat::Json)).unwrap();
    assert!(ok);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["p"], 2);
    assert_eq!(v["bijective"], true);
    assert_eq!(v["order_preserving"], true);
    assert_eq!(v["order_reflecting"], true);
}

#[test]
fn delannoy_trivial() {
    assert_eq!(cmd_delannoy("N E E", OutputFormat::Text).unwrap(), "NEE\n");
    let v: serde_json::Value =
        serde_json::from_str(&cmd_delannoy("N E E", OutputFormat::Json).unwrap()).unwrap();
    assert_eq!(v["path"], "NEE");
}

#[test]
fn repeated_runs_are_byte_identical() {
    for args in [
        vec!["hasse", "-p", "3", "-q", "2", "--color-by-sect"],
        vec!["sects", "-p", "3", "-q", "3"],
        vec!["dense", "-p", "3", "-q", "2"],
        vec!["iso", "-p", "3"],
    ] {
        let a = bin().args(&args).output().unwrap();
        let b = bin().args(&args).output().unwrap();
        assert!(a.status.success(), "{args:?}");
        assert_eq!(a.stdout, b.stdout, "{args:?}");
    }
}

#[test]
fn limit_exceeded_is_a_json_error() {
    let out = bin().args(["enumerate", "-p", "7", "-q", "6"]).output().unwrap();
    assert_eq!(out.status.code(), Some(2));
    assert!(out.stdout.is_empty());
    let v: serde_json::Value = serde_json::from_slice(&out.stderr).unwrap();
    assert_eq!(v["error"]["kind"], "LimitExceeded");
}

#[test]
fn env_overrides_limit() {
    let out = bin()
        .env("SECTS_LIMIT_N", "3")
        .args(["enumerate", "-p", "2", "-q", "2"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
    let v: serde_json::Value = serde_json::from_slice(&out.stderr).unwrap();
    assert_eq!(v["error"]["kind"], "LimitExceeded");

    let out = bin()
        .env("SECTS_LIMIT_N", "3")
        .args(["enumerate", "-p", "2", "-q", "1"])
        .output()
        .unwrap();
    assert!(out.status.success());
}

#[test]
fn other_errors_are_json_too() {
    for args in [
        vec!["delannoy", "N X"],
        vec!["dense", "-p", "1", "-q", "2"],
        vec!["sects", "-p", "2", "-q", "2", "--format", "dot"],
        vec!["nonsense"],
    ] {
        let out = bin().args(&args).output().unwrap();
        assert_eq!(out.status.code(), Some(2), "{args:?}");
        let v: serde_json::Value = serde_json::from_slice(&out.stderr).unwrap();
        assert!(v["error"]["kind"].is_string(), "{args:?}");
    }
}

#[test]
fn output_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("c21.dot");
    let out = bin()
        .args(["hasse", "-p", "2", "-q", "1", "-o"])
        .arg(&path)
        .output()
        .unwrap();
    assert!(out.status.success());
    assert!(out.stdout.is_empty());
    let text = std::fs::read_to_string(&path).unwrap();
    assert_eq!(parse_dot(&text).edges.len(), 6);

    let bad = bin()
        .args(["enumerate", "-p", "1", "-q", "1", "-o"])
        .arg(dir.path().join("missing").join("x.txt"))
        .output()
        .unwrap();
    assert_eq!(bad.status.code(), Some(2));
    let v: serde_json::Value = serde_json::from_slice(&bad.stderr).unwrap();
    assert_eq!(v["error"]["kind"], "IoError");
}
