use std::fs;
use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

fn purebraid(args: &[&str]) -> Output {
    purebraid_env(args, &[])
}

fn purebraid_env(args: &[&str], env: &[(&str, &Path)]) -> Output {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_purebraid"));
    cmd.args(args).env_remove("PUREBRAID_CACHE_DIR");
    for (k, v) in env {
        cmd.env(k, v);
    }
    cmd.output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

fn json(o: &Output) -> Value {
    serde_json::from_slice(&o.stdout).unwrap_or_else(|e| panic!("{e}: {}", stdout(o)))
}

fn without_timestamp(mut v: Value) -> Value {
    v.as_object_mut().unwrap().remove("generated_at");
    v
}

#[test]
fn dims_rows() {
    let o = purebraid(&["dims", "--n", "4", "--max-degree", "2", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let v = json(&o);
    assert_eq!(v["schema_version"], 1);
    assert_eq!(v["result"]["degrees"][0]["rank"], 6);
    assert_eq!(v["result"]["degrees"][1]["rank"], 4);
    let o = purebraid(&["dims", "--n", "2", "--max-degree", "3", "--format", "json"]);
    assert_eq!(json(&o)["result"]["degrees"][2]["rank"], 0);
    let o = purebraid(&["dims", "--n", "4"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stderr(&o).contains("--max-degree is required"));
}

#[test]
fn bracket_examples_and_round_trip() {
    let run = |n: &str, e: &str| {
        let o = purebraid(&["bracket", "--n", n, e]);
        assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
        stdout(&o).trim().to_string()
    };
    assert_eq!(run("4", "[B(1,2), B(3,4)]"), "0");
    assert_eq!(run("4", "[B(1,2), B(1,4)]"), "B(1,4)B(2,4)");
    assert_eq!(run("4", "[B(1,4), B(2,4)]"), "B(1,4)B(2,4)");
    assert_eq!(run("3", "B(2,1)"), "B(1,2)");
    for e in ["[[B(1,4), B(2,4)], B(1,2)] + 3*B(1,3)", "[[B(1,3),B(2,3)],[B(1,4),B(3,4)]]", "-2*[B(1,2),B(2,3)]"] {
        let once = run("4", e);
        assert_eq!(run("4", &once), once, "{e}");
    }
}

#[test]
fn bracket_errors() {
    let o = purebraid(&["bracket", "--n", "4", "[B(1,2) B(1,3)"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stderr(&o).contains("parse error at position"), "{}", stderr(&o));
    let o = purebraid(&["bracket", "--n", "3", "B(1,4)"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stderr(&o).contains("B(1,4)"));
}

#[test]
fn verify_exit_codes() {
    let o = purebraid(&["verify", "--n", "4", "--max-degree", "4"]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    assert!(stdout(&o).contains("overall=pass"));
    let o = purebraid(&["verify", "--n", "5", "--max-degree", "3", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(json(&o)["status"], "pass");
    let o = purebraid(&["verify", "--n", "2", "--max-degree", "2"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stderr(&o).contains("too small"));
    let o = purebraid(&["verify", "--n", "4", "--max-degree", "8"]);
    assert_eq!(o.status.code(), Some(1), "degree 9 is above the default cap");
}

#[test]
fn help_version_and_usage_errors() {
    assert_eq!(purebraid(&["--help"]).status.code(), Some(0));
    assert_eq!(purebraid(&["--version"]).status.code(), Some(0));
    assert_eq!(purebraid(&["dims", "--bogus"]).status.code(), Some(1));
    assert_eq!(purebraid(&[]).status.code(), Some(1));
    assert_eq!(purebraid(&["dims", "--n", "4", "--max-degree", "0"]).status.code(), Some(1));
}

#[test]
fn centralizer_and_adjoint() {
    let o = purebraid(&["centralizer", "--n", "3", "--max-degree", "3", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let v = json(&o);
    assert_eq!(v["result"]["degrees"][0]["basis"][0], "B(1,2)+B(1,3)+B(2,3)");
    assert_eq!(v["result"]["degrees"][2]["rank"], 0);
    let o = purebraid(&["centralizer", "--n", "4", "--max-degree", "2", "--element", "B(1,2)"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("centralizer of B(1,2)"));
    let o = purebraid(&["adjoint-kernel", "--n", "4", "--max-degree", "3"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).matches("equals_top_centralizer=true").count(), 3);
}

fn write_trivial_spec(dir: &Path, n: usize) -> String {
    let mut text = format!("family = \"custom\"\nn = {n}\norder = 2\n[images]\n");
    for j in 2..=n {
        for i in 1..j {
            text.push_str(&format!("\"A({i},{j})\" = [[1, 0], [0, 1]]\n"));
        }
    }
    let path = dir.join("trivial.toml");
    fs::write(&path, text).unwrap();
    path.to_string_lossy().into_owned()
}

#[test]
fn criterion_outcomes() {
    let dir = tempfile::tempdir().unwrap();
    let trivial = write_trivial_spec(dir.path(), 4);
    let o = purebraid(&["criterion", "--rep", &trivial, "--max-degree", "2"]);
    assert_eq!(o.status.code(), Some(3));
    assert!(stdout(&o).contains("witness=Δ(4)"), "{}", stdout(&o));
    let o = purebraid(&["criterion", "--rep", &trivial, "--max-degree", "2", "--format", "json"]);
    assert_eq!(json(&o)["result"]["checks"][0]["witness_label"], "Δ(4)");

    let o = purebraid(&["criterion", "--rep", "burau", "--n", "4", "--max-degree", "3"]);
    assert!(matches!(o.status.code(), Some(0 | 3)));
    assert_eq!(stdout(&o).lines().filter(|l| l.starts_with("q=")).count(), 5);

    let o = purebraid(&["criterion", "--rep", "gassner", "--n", "3", "--max-degree", "2"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("specialization=consistent"));

    let o = purebraid(&["criterion", "--rep", "burau", "--max-degree", "2"]);
    assert_eq!(o.status.code(), Some(1));
    let o = purebraid(&["criterion", "--rep", &trivial, "--n", "5", "--max-degree", "2"]);
    assert_eq!(o.status.code(), Some(1));
    let missing = dir.path().join("missing.toml");
    let o = purebraid(&["criterion", "--rep", missing.to_str().unwrap(), "--max-degree", "2"]);
    assert_eq!(o.status.code(), Some(1));

    // Degree-one images violating the infinitesimal relations.
    let bad = dir.path().join("bad.toml");
    fs::write(
        &bad,
        "family = \"custom\"\nn = 3\n[images]\n\"A(1,2)\" = [[1, \"u\"], [0, 1]]\n\"A(1,3)\" = [[1, 0], [\"u\", 1]]\n\"A(2,3)\" = [[1, 0], [0, 1]]\n",
    )
    .unwrap();
    let o = purebraid(&["criterion", "--rep", bad.to_str().unwrap(), "--max-degree", "2"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stderr(&o).contains("infinitesimal braid relations"));
}

#[test]
fn cache_lifecycle() {
    let dir = tempfile::tempdir().unwrap();
    let cache = dir.path().join("cache");
    let c = cache.to_str().unwrap();
    let o = purebraid(&["cache", "build", "--n", "5", "--max-degree", "3", "--cache-dir", c]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let uncached = purebraid(&["verify", "--n", "5", "--max-degree", "3", "--format", "json"]);
    let cached = purebraid(&["verify", "--n", "5", "--max-degree", "3", "--format", "json", "--cache-dir", c]);
    assert_eq!(without_timestamp(json(&uncached)), without_timestamp(json(&cached)));
    assert!(stderr(&cached).is_empty(), "{}", stderr(&cached));

    let o = purebraid(&["cache", "inspect", "--cache-dir", c, "--format", "json"]);
    let v = json(&o);
    assert_eq!(v["status"], "ok");
    let entries = v["result"]["entries"].as_array().unwrap().len();
    assert_eq!(entries, 3 * (10 + 1) + 1);

    // Corrupt one entry: it is flagged, then recomputed on use.
    let victim = fs::read_dir(&cache).unwrap().map(|e| e.unwrap().path()).find(|p| p.to_string_lossy().contains("bracket")).unwrap();
    let text = fs::read_to_string(&victim).unwrap();
    fs::write(&victim, format!("{text}1\n")).unwrap();
    let o = purebraid(&["cache", "inspect", "--cache-dir", c]);
    assert!(stdout(&o).contains("checksum mismatch"));
    let again = purebraid(&["verify", "--n", "5", "--max-degree", "3", "--format", "json", "--cache-dir", c]);
    assert_eq!(again.status.code(), Some(0));
    assert!(stderr(&again).contains("checksum mismatch"), "{}", stderr(&again));
    assert_eq!(without_timestamp(json(&again)), without_timestamp(json(&uncached)));

    // The environment variable supplies the default directory.
    let o = purebraid_env(&["cache", "inspect"], &[("PUREBRAID_CACHE_DIR", &cache)]);
    assert_eq!(o.status.code(), Some(0));
    assert!(!stdout(&o).contains("checksum mismatch"));
    let o = purebraid(&["cache", "clear", "--cache-dir", c]);
    assert_eq!(o.status.code(), Some(0));
    assert!(fs::read_dir(&cache).unwrap().next().is_none());
    assert_eq!(purebraid(&["cache", "inspect"]).status.code(), Some(1));
}

#[test]
fn config_file_and_report_dir() {
    let dir = tempfile::tempdir().unwrap();
    let config = dir.path().join("run.toml");
    fs::write(&config, "n = 4\nmax_degree = 2\nformat = \"json\"\nreport_dir = \"reports\"\nrep = \"burau\"\n").unwrap();
    let cfg = config.to_str().unwrap();
    let o = purebraid(&["criterion", "--config", cfg]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    assert_eq!(json(&o)["inputs"]["n"], 4);
    let reports = dir.path().join("reports");
    let txt = fs::read_to_string(reports.join("criterion.txt")).unwrap();
    assert!(txt.contains("conclusion=criterion-met up_to=2"));
    let doc: Value = serde_json::from_str(&fs::read_to_string(reports.join("criterion.json")).unwrap()).unwrap();
    assert_eq!(doc["status"], "criterion-met");
    // Flags override the config file.
    let o = purebraid(&["dims", "--config", cfg, "--format", "text", "--max-degree", "1"]);
    assert!(stdout(&o).starts_with("ranks of E_0^q(P_4)"));
    fs::write(&config, "n = 4\nunknown_key = 1\n").unwrap();
    assert_eq!(purebraid(&["dims", "--config", cfg]).status.code(), Some(1));
}
