use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use serde_json::Value;
use tempfile::TempDir;

const THREE_RECTS: &str = "rects 1\n0 0 9 9\n1 1 8 8\n2 2 10 10\n";
const STACKED: &str = "rects 1\n0 0 10 2\n1 3 11 5\n2 6 12 8\n";

fn rectlevel(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_rectlevel"))
        .args(args)
        .env_remove("RECTLEVEL_SEED")
        .output()
        .expect("binary runs")
}

fn code(o: &Output) -> i32 {
    o.status.code().expect("exited normally")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

fn s(p: &Path) -> &str {
    p.to_str().unwrap()
}

fn write(dir: &TempDir, name: &str, text: &str) -> PathBuf {
    let p = dir.path().join(name);
    std::fs::write(&p, text).unwrap();
    p
}

fn grid3(dir: &TempDir) -> PathBuf {
    let p = dir.path().join("g3.rects");
    let o = rectlevel(&["generate", "--kind", "grid", "--m", "3", "--out", s(&p)]);
    assert_eq!(code(&o), 0, "{}", stderr(&o));
    p
}

fn json_of(o: &Output) -> Value {
    serde_json::from_slice(&o.stdout).expect("stdout is JSON")
}

fn assert_integers_only(v: &Value) {
    match v {
        Value::Number(n) => assert!(n.is_i64() || n.is_u64(), "non-integer {n}"),
        Value::Array(a) => a.iter().for_each(assert_integers_only),
        Value::Object(m) => m.values().for_each(assert_integers_only),
        _ => {}
    }
}

#[test]
fn generate_grid_writes_instance() {
    let dir = TempDir::new().unwrap();
    let p = dir.path().join("g3.rects");
    let o = rectlevel(&["generate", "--kind", "grid", "--m", "3", "--out", s(&p)]);
    assert_eq!(code(&o), 0);
    assert_eq!(stdout(&o), format!("grid n=6 file={}\n", p.display()));
    let text = std::fs::read_to_string(&p).unwrap();
    assert_eq!(text.lines().count(), 7);
    assert_eq!(text.lines().next(), Some("rects 1"));
}

#[test]
fn generate_rejects_bad_parameters() {
    let dir = TempDir::new().unwrap();
    let out = dir.path().join("t.rects");
    let o = rectlevel(&["generate", "--kind", "tightness", "--n", "30", "--p", "6", "--out", s(&out)]);
    assert_eq!(code(&o), 2);
    assert!(stderr(&o).contains("4(p-2)=16 must divide n"), "{}", stderr(&o));
    assert!(!out.exists());

    let o = rectlevel(&["generate", "--kind", "clustered", "--n", "10", "--out", s(&out)]);
    assert_eq!(code(&o), 2);
    assert!(stderr(&o).contains("--clusters"));
}

#[test]
fn generate_is_deterministic_per_seed() {
    let dir = TempDir::new().unwrap();
    let read = |name: &str, seed: &str| {
        let p = dir.path().join(name);
        let o = rectlevel(&["generate", "--kind", "random", "--n", "40", "--seed", seed, "--out", s(&p)]);
        assert_eq!(code(&o), 0);
        std::fs::read_to_string(p).unwrap()
    };
    assert_eq!(read("a", "5"), read("b", "5"));
    assert_ne!(read("c", "5"), read("d", "6"));

    let p = dir.path().join("env");
    let o = Command::new(env!("CARGO_BIN_EXE_rectlevel"))
        .args(["generate", "--kind", "random", "--n", "40", "--out", s(&p)])
        .env("RECTLEVEL_SEED", "5")
        .output()
        .unwrap();
    assert_eq!(code(&o), 0);
    assert_eq!(std::fs::read_to_string(p).unwrap(), read("e", "5"));
}

#[test]
fn analyze_grid_report() {
    let dir = TempDir::new().unwrap();
    let g = grid3(&dir);
    let o = rectlevel(&["analyze", "--in", s(&g), "--k", "0,1"]);
    assert_eq!(code(&o), 0, "{}", stderr(&o));
    let doc = json_of(&o);
    assert_integers_only(&doc);
    assert_eq!(doc["schema_version"], 1);
    assert_eq!(doc["analysis"]["union_complexity"], 36);
    assert_eq!(doc["analysis"]["leq_k"]["0"], 36);
    assert_eq!(doc["packing"]["exact"], 3);
    assert_eq!(doc["piercing"]["q_h"], 3);
    assert_eq!(doc["levels"].as_array().unwrap().len(), 2);
    assert!(doc["levels"][0].get("checks").is_none());
    // keys are written in sorted order
    let text = stdout(&o);
    let pos = |key: &str| text.find(&format!("\"{key}\"")).unwrap();
    assert!(pos("analysis") < pos("instance") && pos("instance") < pos("levels"));
    assert!(pos("levels") < pos("packing") && pos("packing") < pos("piercing"));
}

#[test]
fn analyze_three_rects_both_engines() {
    let dir = TempDir::new().unwrap();
    let p = write(&dir, "three.rects", THREE_RECTS);
    let json = dir.path().join("three.json");
    let o = rectlevel(&["analyze", "--in", s(&p), "--k", "1", "--engine", "both", "--json", s(&json)]);
    assert_eq!(code(&o), 0, "{}", stderr(&o));
    assert!(stdout(&o).contains("leq_1=4"));
    let doc: Value = serde_json::from_str(&std::fs::read_to_string(json).unwrap()).unwrap();
    assert_eq!(doc["analysis"]["leq_k"]["1"], 4);
    assert_eq!(doc["analysis"]["depth_histogram"], serde_json::json!([2, 2]));
    assert_eq!(doc["analysis"]["engine"], "both");
}

#[test]
fn differential_mode_on_random_files() {
    let dir = TempDir::new().unwrap();
    for seed in 0..25 {
        let p = dir.path().join(format!("r{seed}.rects"));
        let n = (10 + 2 * seed).to_string();
        let seed = seed.to_string();
        let o = rectlevel(&["generate", "--kind", "random", "--n", &n, "--seed", &seed, "--out", s(&p)]);
        assert_eq!(code(&o), 0);
        let o = rectlevel(&["analyze", "--in", s(&p), "--k", "0,2", "--engine", "both"]);
        assert_eq!(code(&o), 0, "{}", stderr(&o));
    }
}

#[test]
fn verify_grid_passes() {
    let dir = TempDir::new().unwrap();
    let g = grid3(&dir);
    let o = rectlevel(&["verify", "--in", s(&g), "--k", "0"]);
    assert_eq!(code(&o), 0, "{}", stderr(&o));
    let doc = json_of(&o);
    assert_integers_only(&doc);
    assert_eq!(doc["pass"], true);
    let checks = doc["levels"][0]["checks"].as_array().unwrap();
    let level = checks.iter().find(|c| c["name"] == "level_bound_packing").unwrap();
    assert_eq!(level["detail"], "36 <= 60");
    assert_eq!(level["status"], "pass");
    assert_eq!(doc["levels"][0]["bounds"]["level_leq_k"], 60);
}

#[test]
fn verify_tightness_passes() {
    let dir = TempDir::new().unwrap();
    let p = dir.path().join("t.rects");
    let o = rectlevel(&["generate", "--kind", "tightness", "--n", "32", "--p", "6", "--out", s(&p)]);
    assert_eq!(code(&o), 0);
    let json = dir.path().join("t.json");
    let o = rectlevel(&["verify", "--in", s(&p), "--k", "0,1,2,3", "--json", s(&json)]);
    assert_eq!(code(&o), 0, "{}", stderr(&o));
    assert!(stdout(&o).starts_with("pass: "));
    let doc: Value = serde_json::from_str(&std::fs::read_to_string(json).unwrap()).unwrap();
    assert_eq!(doc["packing"]["exact"], 5);
}

#[test]
fn invalid_instances_exit_two() {
    let dir = TempDir::new().unwrap();
    let dup = write(&dir, "dup.rects", "rects 1\n0 0 4 3\n4 1 6 5\n");
    for cmd in ["analyze", "verify"] {
        let o = rectlevel(&[cmd, "--in", s(&dup)]);
        assert_eq!(code(&o), 2);
        assert!(
            stderr(&o).contains("x=4 shared by rect 0 right edge and rect 1 left edge"),
            "{}",
            stderr(&o)
        );
    }
    let bad = write(&dir, "bad.rects", "rects 1\n0 0 4\n");
    let o = rectlevel(&["analyze", "--in", s(&bad)]);
    assert_eq!(code(&o), 2);
    assert!(stderr(&o).contains("line 2"));
    let o = rectlevel(&["analyze", "--in", s(&dir.path().join("missing.rects"))]);
    assert_eq!(code(&o), 2);
}

#[test]
fn bench_rows_and_oracle_cap() {
    let dir = TempDir::new().unwrap();
    let csv = dir.path().join("b.csv");
    let o = rectlevel(&["bench", "--sizes", "1000,2000,4000", "--seed", "3", "--csv", s(&csv)]);
    assert_eq!(code(&o), 0, "{}", stderr(&o));
    let text = std::fs::read_to_string(&csv).unwrap();
    let rows: Vec<&str> = text.lines().collect();
    assert_eq!(rows[0], "n,vertices,engine,micros");
    assert_eq!(rows.len(), 4);
    assert!(rows[1..].iter().all(|r| r.split(',').nth(2) == Some("sweep")));

    let o = rectlevel(&["bench", "--sizes", "200,400,1600", "--seed", "3", "--engine", "both"]);
    assert_eq!(code(&o), 0);
    let text = stdout(&o);
    let engines: Vec<(&str, &str)> =
        text.lines().skip(1).map(|r| r.split(',').collect::<Vec<_>>()).map(|c| (c[0], c[2])).collect();
    assert_eq!(
        engines,
        vec![("200", "sweep"), ("200", "oracle"), ("400", "sweep"), ("400", "oracle"), ("1600", "sweep")]
    );
    // the vertex column matches across engines and runs
    let again = stdout(&rectlevel(&["bench", "--sizes", "200,400,1600", "--seed", "3", "--engine", "both"]));
    let col =
        |t: &str| t.lines().map(|r| r.split(',').take(3).collect::<Vec<_>>().join(",")).collect::<Vec<_>>();
    assert_eq!(col(&text), col(&again));
    let v: Vec<&str> = text.lines().skip(1).map(|r| r.split(',').nth(1).unwrap()).collect();
    assert_eq!(v[0], v[1]);

    let o = rectlevel(&["bench", "--sizes", "400,200"]);
    assert_eq!(code(&o), 2);
}

#[test]
fn render_grid_and_lines() {
    let dir = TempDir::new().unwrap();
    let g = grid3(&dir);
    let out = dir.path().join("g3.svg");
    let o = rectlevel(&["render", "--in", s(&g), "--out", s(&out), "--k", "0"]);
    assert_eq!(code(&o), 0, "{}", stderr(&o));
    let svg = std::fs::read_to_string(&out).unwrap();
    assert!(svg.starts_with("<?xml"));
    assert_eq!(svg.matches("<rect ").count(), 6);
    assert_eq!(svg.matches("<circle ").count(), 36);
    assert_eq!(svg.matches("<line ").count(), 0);

    let out2 = dir.path().join("g3b.svg");
    rectlevel(&["render", "--in", s(&g), "--out", s(&out2), "--k", "0"]);
    assert_eq!(svg, std::fs::read_to_string(out2).unwrap());

    let stacked = write(&dir, "stacked.rects", STACKED);
    let out = dir.path().join("stacked.svg");
    let o = rectlevel(&["render", "--in", s(&stacked), "--out", s(&out), "--show-lines"]);
    assert_eq!(code(&o), 0);
    let svg = std::fs::read_to_string(&out).unwrap();
    let at: Vec<&str> = svg
        .lines()
        .filter(|l| l.contains(r#"class="horizontal""#))
        .map(|l| l.split("data-at=\"").nth(1).unwrap().split('"').next().unwrap())
        .collect();
    assert_eq!(at, vec!["2", "5", "8"]);
    assert!(svg.contains("stroke-dasharray"));
}

#[test]
fn unwritable_output_exits_two() {
    let dir = TempDir::new().unwrap();
    let g = grid3(&dir);
    let out = dir.path().join("no/such/dir/g.svg");
    let o = rectlevel(&["render", "--in", s(&g), "--out", s(&out)]);
    assert_eq!(code(&o), 2);
    assert!(stderr(&o).contains("no/such/dir"));
}
