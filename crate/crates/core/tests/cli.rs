use std::fs;
use std::path::{Path, PathBuf};

use bifuzzy::cli::{ranking, run, Outcome};
use tempfile::TempDir;

const BICAPACITY: &str = r#"{
  "n": 2,
  "entries": [
    {"pos": [], "neg": [1], "value": -0.6},
    {"pos": [], "neg": [2], "value": -0.3},
    {"pos": [1], "neg": [], "value": 0.5},
    {"pos": [2], "neg": [], "value": 0.4},
    {"pos": [1], "neg": [2], "value": 0.2},
    {"pos": [2], "neg": [1], "value": -0.2}
  ]
}
"#;

const CAPACITY: &str =
    r#"{"n": 2, "entries": [{"pos": [1], "value": 0.25}, {"pos": [2], "value": 0.5}]}"#;

const ALTERNATIVES: &str = "id,c1,c2\na,0.8,-0.5\nb,0.3,0.3\nc,-0.2,0.9\n";

struct Workspace {
    dir: TempDir,
}

impl Workspace {
    fn new() -> Self {
        let ws = Workspace {
            dir: tempfile::tempdir().unwrap(),
        };
        ws.write("bicap.json", BICAPACITY);
        ws.write("cap.json", CAPACITY);
        ws.write("alts.csv", ALTERNATIVES);
        ws
    }

    fn write(&self, name: &str, text: &str) -> PathBuf {
        let path = self.path(name);
        fs::write(&path, text).unwrap();
        path
    }

    fn path(&self, name: &str) -> PathBuf {
        self.dir.path().join(name)
    }

    fn run(&self, args: &[&str]) -> Outcome {
        let mut full = vec!["bifuzzy".to_string()];
        for a in args {
            full.push(match a.strip_prefix('@') {
                Some(name) => self.path(name).display().to_string(),
                None => a.to_string(),
            });
        }
        run(full)
    }
}

fn lines(path: &Path) -> Vec<String> {
    fs::read_to_string(path)
        .unwrap()
        .lines()
        .map(str::to_string)
        .collect()
}

#[test]
fn validate_prints_fingerprint() {
    let ws = Workspace::new();
    let out = ws.run(&["validate", "--carrier", "@bicap.json"]);
    assert_eq!(out.code, 0, "{}", out.stderr);
    assert!(out.stdout.starts_with("valid bi-capacity on 2 criteria"));
    let again = ws.run(&["validate", "--carrier", "@bicap.json"]);
    assert_eq!(out.stdout, again.stdout);
    let cap = ws.run(&[
        "validate",
        "--carrier",
        "@cap.json",
        "--polarity",
        "classic",
    ]);
    assert_eq!(cap.code, 0, "{}", cap.stderr);
}

#[test]
fn invalid_carrier_exits_one() {
    let ws = Workspace::new();
    ws.write(
        "bad.json",
        r#"{"n": 2, "entries": [{"pos": [1], "value": 0.9}, {"pos": [2], "value": 1.2}]}"#,
    );
    let out = ws.run(&[
        "validate",
        "--carrier",
        "@bad.json",
        "--polarity",
        "classic",
    ]);
    assert_eq!(out.code, 1);
    assert!(!out.stderr.is_empty());
    let missing = ws.run(&["validate", "--carrier", "@nope.json"]);
    assert_eq!(missing.code, 1);
}

#[test]
fn score_table_matches_hand_values() {
    let ws = Workspace::new();
    let out = ws.run(&[
        "score",
        "--carrier",
        "@bicap.json",
        "--alternatives",
        "@alts.csv",
        "--integral",
        "choquet",
    ]);
    assert_eq!(out.code, 0, "{}", out.stderr);
    assert_eq!(out.stdout, "id,value\na,0.25\nb,0.3\nc,0.24\n");
}

#[test]
fn rank_json_orders_by_value() {
    let ws = Workspace::new();
    let out = ws.run(&[
        "rank",
        "--carrier",
        "@bicap.json",
        "--alternatives",
        "@alts.csv",
        "--integral",
        "sugeno",
        "--format",
        "json",
    ]);
    assert_eq!(out.code, 0, "{}", out.stderr);
    let doc: serde_json::Value = serde_json::from_str(&out.stdout).unwrap();
    let ids: Vec<&str> = doc["ranking"]
        .as_array()
        .unwrap()
        .iter()
        .map(|r| r["id"].as_str().unwrap())
        .collect();
    assert_eq!(ids, ["a", "c", "b"]);
    assert_eq!(doc["variant"], "neutral");
}

#[test]
fn scale_and_dimension_errors_exit_two() {
    let ws = Workspace::new();
    ws.write("wide.csv", "id,c1,c2\na,1.5,0\n");
    let out = ws.run(&[
        "score",
        "--carrier",
        "@bicap.json",
        "--alternatives",
        "@wide.csv",
        "--integral",
        "choquet",
    ]);
    assert_eq!(out.code, 2, "{}", out.stderr);
    ws.write("three.csv", "id,c1,c2,c3\na,0.1,0.2,0.3\n");
    let out = ws.run(&[
        "score",
        "--carrier",
        "@bicap.json",
        "--alternatives",
        "@three.csv",
        "--integral",
        "choquet",
    ]);
    assert_eq!(out.code, 2, "{}", out.stderr);
}

#[test]
fn classic_sugeno_on_capacity() {
    let ws = Workspace::new();
    ws.write("unit.csv", "id,c1,c2\na,0.9,0.6\nb,0.2,0.1\n");
    let out = ws.run(&[
        "score",
        "--carrier",
        "@cap.json",
        "--alternatives",
        "@unit.csv",
        "--integral",
        "sugeno",
        "--polarity",
        "classic",
    ]);
    assert_eq!(out.code, 0, "{}", out.stderr);
    assert_eq!(out.stdout, "id,value\na,0.6\nb,0.2\n");
}

#[test]
fn check_axioms_passes_on_own_carrier() {
    let ws = Workspace::new();
    let out = ws.run(&[
        "check-axioms",
        "--carrier",
        "@bicap.json",
        "--integral",
        "shilkret",
        "--variant",
        "left",
        "--trials",
        "200",
    ]);
    assert_eq!(out.code, 0, "{}{}", out.stdout, out.stderr);
    assert!(out.stdout.contains("PASS idempotency"));
    assert!(out.stdout.contains("elicitation round-trip: exact"));
}

#[test]
fn mean_fails_min_stability_audit() {
    let ws = Workspace::new();
    let out = ws.run(&[
        "check-axioms",
        "--integral",
        "mean",
        "--criteria",
        "2",
        "--axioms",
        "bipolar-min-stability",
        "--format",
        "json",
    ]);
    assert_eq!(out.code, 4, "{}", out.stderr);
    let doc: serde_json::Value = serde_json::from_str(&out.stdout).unwrap();
    assert_eq!(doc["passed"], false);
    assert!(doc["reports"][0]["violation_count"].as_u64().unwrap() > 0);
}

#[test]
fn unknown_axiom_is_a_usage_error() {
    let ws = Workspace::new();
    let out = ws.run(&[
        "check-axioms",
        "--integral",
        "mean",
        "--axioms",
        "frobnication",
    ]);
    assert_eq!(out.code, 1);
}

#[test]
fn elicit_writes_round_trippable_carrier() {
    let ws = Workspace::new();
    let out = ws.run(&[
        "elicit",
        "--carrier",
        "@bicap.json",
        "--integral",
        "choquet",
        "--out",
        "@elicited.json",
    ]);
    assert_eq!(out.code, 0, "{}", out.stderr);
    assert!(out.stdout.contains("exact-roundtrip: true"));
    assert_eq!(
        fs::read_to_string(ws.path("elicited.json")).unwrap(),
        BICAPACITY
    );
    assert_eq!(
        lines(&ws.path("elicited.json")).len(),
        BICAPACITY.lines().count()
    );
}

#[test]
fn competition_ranking_shares_ties() {
    let r = ranking(&[0.3, 0.5, 0.3, 0.1]);
    assert_eq!(r, vec![(1, 1), (2, 0), (2, 2), (4, 3)]);
}
