use std::io::Write;
use std::path::PathBuf;
use std::process::{Command, Output, Stdio};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_clawcolor"))
}

fn run(args: &[&str], stdin: &str) -> Output {
    let mut child = bin()
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(stdin.as_bytes()).unwrap();
    child.wait_with_output().unwrap()
}

fn temp(name: &str, body: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("clawcolor-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let p = dir.join(name);
    std::fs::write(&p, body).unwrap();
    p
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

const PRISM: &str = "0 1\n1 2\n2 0\n3 4\n4 5\n5 3\n0 3\n1 4\n2 5\n";
const K4: &str = "0 1\n0 2\n0 3\n1 2\n1 3\n2 3\n";
const C6: &str = "0 1\n1 2\n2 3\n3 4\n4 5\n5 0\n";

/// `u v color` triples from `color` output.
fn triples(text: &str) -> Vec<(usize, usize, u8)> {
    text.lines()
        .map(|l| {
            let t: Vec<&str> = l.split_whitespace().collect();
            (t[0].parse().unwrap(), t[1].parse().unwrap(), t[2].parse().unwrap())
        })
        .collect()
}

#[test]
fn prism_is_exceptional_with_nine_colors() {
    let o = run(&["color", "-"], PRISM);
    assert_eq!(o.status.code(), Some(3));
    let t = triples(&stdout(&o));
    assert_eq!(t.len(), 9);
    let mut colors: Vec<u8> = t.iter().map(|x| x.2).collect();
    colors.sort_unstable();
    colors.dedup();
    assert_eq!(colors.len(), 9);
}

#[test]
fn k4_uses_six_colors() {
    let o = run(&["color", "-"], K4);
    assert_eq!(o.status.code(), Some(0));
    let t = triples(&stdout(&o));
    let mut colors: Vec<u8> = t.iter().map(|x| x.2).collect();
    colors.sort_unstable();
    colors.dedup();
    assert_eq!(colors.len(), 6);
}

#[test]
fn claw_is_rejected_with_witness() {
    let o = run(&["color", "-"], "0 1\n0 2\n0 3\n");
    assert_eq!(o.status.code(), Some(2));
    let err = String::from_utf8_lossy(&o.stderr);
    assert!(err.contains("center 0"), "{err}");
}

#[test]
fn degree_four_is_rejected() {
    // Two triangles sharing vertex 0: claw-free, max degree 4.
    let o = run(&["color", "-"], "0 1\n1 2\n2 0\n0 3\n3 4\n4 0\n");
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn parse_error_reports_line() {
    let o = run(&["color", "-"], "0 1\n1 x\n");
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&o.stderr).contains("line 2"));
}

#[test]
fn json_output_round_trips_through_verify() {
    let o = run(&["color", "-", "--json", "--trace"], K4);
    assert_eq!(o.status.code(), Some(0));
    let doc: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(doc["colors_used"], 6);
    assert_eq!(doc["exceptional"], false);
    assert!(!doc["trace"].as_array().unwrap().is_empty());
    let edges = doc["edges"].as_array().unwrap();
    let body: String = edges
        .iter()
        .map(|e| format!("{} {} {}\n", e[0], e[1], e[2]))
        .collect();
    let g = temp("k4.txt", K4);
    let c = temp("k4.col", &body);
    let v = run(&["verify", g.to_str().unwrap(), c.to_str().unwrap()], "");
    assert_eq!(v.status.code(), Some(0), "{}", stdout(&v));
}

#[test]
fn verify_accepts_period_three_on_c6() {
    let g = temp("c6.txt", C6);
    // Edge ids follow the sorted edge list: 01 05 12 23 34 45.
    let c = temp("c6-good.col", "0 1\n1 3\n2 2\n3 3\n4 1\n5 2\n");
    let o = run(&["verify", g.to_str().unwrap(), c.to_str().unwrap()], "");
    assert_eq!(o.status.code(), Some(0));
}

#[test]
fn verify_lists_six_conflicts_for_period_two() {
    let g = temp("c6.txt", C6);
    let c = temp("c6-bad.col", "0 1 1\n1 2 2\n2 3 1\n3 4 2\n4 5 1\n5 0 2\n");
    let o = run(&["verify", g.to_str().unwrap(), c.to_str().unwrap()], "");
    assert_eq!(o.status.code(), Some(5));
    let out = stdout(&o);
    assert_eq!(out.lines().filter(|l| l.starts_with("conflict")).count(), 6, "{out}");
}

#[test]
fn verify_reports_missing_edge() {
    let g = temp("c6.txt", C6);
    let c = temp("c6-missing.col", "0 1\n2 2\n3 3\n4 1\n5 2\n");
    let o = run(&["verify", g.to_str().unwrap(), c.to_str().unwrap()], "");
    assert_eq!(o.status.code(), Some(5));
    assert!(stdout(&o).contains("uncolored 0-5"));
}

#[test]
fn verify_rejects_non_edge() {
    let g = temp("c6.txt", C6);
    let c = temp("c6-nonedge.col", "0 3 1\n");
    let o = run(&["verify", g.to_str().unwrap(), c.to_str().unwrap()], "");
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn exact_values() {
    let o = run(&["exact", "-"], PRISM);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).lines().next(), Some("chi_s = 9"));
    let c5 = "0 1\n1 2\n2 3\n3 4\n4 0\n";
    let o = run(&["exact", "-"], c5);
    assert_eq!(stdout(&o).lines().next(), Some("chi_s = 5"));
    let o = run(&["exact", "-", "--kmax", "4"], c5);
    assert_eq!(stdout(&o).lines().next(), Some("chi_s >= 5"));
}

#[test]
fn exact_over_limit_is_an_error() {
    let o = run(&["exact", "-", "--max-edges", "5"], K4);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn survey_prints_table() {
    let o = run(&["exact", "--survey-expanded-prisms", "3", "--json"], "");
    assert_eq!(o.status.code(), Some(0));
    let doc: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    let row = &doc[0];
    assert_eq!(row["k"], 3);
    assert_eq!(row["m"], 27);
    if row["status"] == "exact" {
        assert_eq!(row["certificate"].as_array().unwrap().len(), 27);
    }
}

#[test]
fn empty_batch_succeeds() {
    let o = run(&["batch"], "");
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("# 0 graphs"));
}

#[test]
fn batch_keeps_order_and_flags_bad_lines() {
    // Triangle, a malformed line, the prism and the claw.
    let input = "Bw\n!!!\nE{Sw\nCs\n";
    let serial = run(&["batch", "--json"], input);
    let parallel = run(&["batch", "--json", "--parallel"], input);
    assert_eq!(serial.status.code(), Some(1));
    let a: serde_json::Value = serde_json::from_slice(&serial.stdout).unwrap();
    let b: serde_json::Value = serde_json::from_slice(&parallel.stdout).unwrap();
    let statuses = |v: &serde_json::Value| -> Vec<String> {
        v["records"]
            .as_array()
            .unwrap()
            .iter()
            .map(|r| r["status"].as_str().unwrap().to_string())
            .collect()
    };
    assert_eq!(statuses(&a), ["verified", "parse_error", "exceptional", "rejected"]);
    assert_eq!(statuses(&a), statuses(&b));
}

#[test]
fn enumerate_feeds_batch() {
    let e = run(&["enumerate", "6", "--claw-free"], "");
    assert_eq!(e.status.code(), Some(0));
    let o = run(&["batch", "--parallel"], &stdout(&e));
    assert_eq!(o.status.code(), Some(0));
    let last = stdout(&o).lines().last().unwrap().to_string();
    assert!(last.contains("1 exceptional") && last.contains("0 failed"), "{last}");
}

#[test]
fn random_bench_is_reproducible() {
    let args = ["bench", "--family", "random", "--sizes", "20,40", "--repeats", "1", "--seed", "7", "--json"];
    let a: serde_json::Value = serde_json::from_slice(&run(&args, "").stdout).unwrap();
    let b: serde_json::Value = serde_json::from_slice(&run(&args, "").stdout).unwrap();
    for i in 0..2 {
        assert_eq!(a[i]["n"], b[i]["n"]);
        assert_eq!(a[i]["m"], b[i]["m"]);
    }
    assert!(a[1]["ratio"].is_number());
}
