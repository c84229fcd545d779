use std::fs;
use std::io::Write;
use std::path::PathBuf;
use std::process::{Command, Output, Stdio};

use serde_json::Value;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_qtorbit"))
}

fn catalog(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../catalog").join(format!("{name}.json"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().unwrap()
}

fn run_stdin(args: &[&str], input: &str) -> Output {
    let mut child = bin().args(args).stdin(Stdio::piped()).stdout(Stdio::piped()).stderr(Stdio::piped()).spawn().unwrap();
    child.stdin.take().unwrap().write_all(input.as_bytes()).unwrap();
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

fn path(name: &str) -> String {
    catalog(name).to_str().unwrap().to_owned()
}

#[test]
fn catalog_files_match_library() {
    let listed = stdout(&run(&["catalog"]));
    for name in listed.lines() {
        let o = run(&["catalog", name]);
        assert_eq!(o.status.code(), Some(0));
        assert_eq!(stdout(&o), fs::read_to_string(catalog(name)).unwrap(), "{name}");
    }
}

#[test]
fn dual_examples() {
    let o = run(&["dual", &path("sphere-1")]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "{\"ground\":[1,2,3],\"facets\":[[]]}\n");
    let o = run(&["dual", &path("points-3")]);
    assert_eq!(stdout(&o), fs::read_to_string(catalog("points-3")).unwrap());
    let o = run_stdin(&["dual", "-"], "{\"ground\":[1,2,3],\"facets\":[[1,2,3]]}");
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("full simplex has no Alexander dual"), "{}", stderr(&o));
}

#[test]
fn dual_twice_is_byte_identical() {
    for name in ["points-2", "points-3", "sphere-0", "sphere-1", "sphere-2", "pentagon", "two-edges", "two-circles", "rp2"] {
        let once = stdout(&run(&["dual", &path(name)]));
        let twice = stdout(&run_stdin(&["dual", "-"], &once));
        assert_eq!(twice, fs::read_to_string(catalog(name)).unwrap(), "{name}");
    }
}

#[test]
fn homology_examples() {
    let rows = |name: &str| -> Value { serde_json::from_str(&stdout(&run(&["homology", &path(name)]))).unwrap() };
    let rp2 = rows("rp2");
    assert_eq!(rp2[2], serde_json::json!({"degree": 1, "rank": 0, "torsion": [2]}));
    assert_eq!(rp2.as_array().unwrap().len(), 3);
    let s2 = rows("sphere-2");
    assert_eq!(s2[3], serde_json::json!({"degree": 2, "rank": 1, "torsion": []}));
    let e = rows("empty");
    assert_eq!(e, serde_json::json!([{"degree": -1, "rank": 1, "torsion": []}]));
    let text = stdout(&run(&["homology", &path("rp2"), "--format", "text"]));
    assert!(text.contains("Z/2"), "{text}");
}

#[test]
fn malformed_input_exits_two() {
    for bad in ["", "{", "[]", "{\"ground\":[1,1],\"facets\":[[1]]}", "{\"ground\":[1],\"facets\":[[2]]}", "{\"ground\":[1],\"facets\":[]}"] {
        for cmd in ["dual", "homology", "construct", "analyze", "verify"] {
            let o = run_stdin(&[cmd, "-"], bad);
            assert_eq!(o.status.code(), Some(2), "{cmd} on {bad:?}: {}", stderr(&o));
            assert!(stderr(&o).starts_with("qtorbit: error:"), "{}", stderr(&o));
        }
    }
    assert_eq!(run(&["homology", "/nonexistent/file.json"]).status.code(), Some(2));
    assert_eq!(run(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(run(&["verify"]).status.code(), Some(2));
    assert_eq!(run(&["verify", "--j", "0", "--m", &path("points-2")]).status.code(), Some(2));
    assert_eq!(run(&["verify", &path("sphere-1"), "--subtorus", "0,2,2"]).status.code(), Some(2));
    assert_eq!(run(&["verify", &path("sphere-1"), "--subtorus", "0,1"]).status.code(), Some(2));
    assert_eq!(run(&["verify", &path("sphere-1"), "--subtorus", "a,b"]).status.code(), Some(2));
}

#[test]
fn verify_sphere() {
    let o = run(&["verify", &path("sphere-2")]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let r: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(r["j_star"], 3);
    assert_eq!(r["homology"]["alexander"], r["homology"]["direct"]);
    let rows = r["homology"]["alexander"].as_array().unwrap();
    let nonzero: Vec<&Value> = rows.iter().filter(|x| x["rank"] != 0 || x["torsion"] != serde_json::json!([])).collect();
    assert_eq!(nonzero, vec![&serde_json::json!({"degree": 5, "rank": 1, "torsion": []})]);
}

#[test]
fn verify_rp2_has_torsion_row() {
    let o = run(&["verify", &path("rp2")]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let r: Value = serde_json::from_str(&stdout(&o)).unwrap();
    let rows = r["homology"]["alexander"].as_array().unwrap();
    assert!(rows.contains(&serde_json::json!({"degree": 4, "rank": 0, "torsion": [2]})));
    assert_eq!(r["verdicts"]["theorem1_holds"], true);
    assert_eq!(r["homology"]["direct"], Value::Null, "n = 6 is past the default route-b gate");
}

#[test]
fn verify_j_general() {
    let o = run(&["verify", "--j", "2", "--m", &path("points-3")]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let r: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert!(r["j_star"].as_i64().unwrap() >= 2);
    assert_eq!(r["verdicts"]["theorem5_holds"], true);
}

#[test]
fn failed_verification_exits_one() {
    // A subtorus that makes fixed points non-isolated.
    let o = run(&["verify", &path("sphere-1"), "--subtorus", "1,-1,0", "--format", "text"]);
    assert_eq!(o.status.code(), Some(1), "{}", stderr(&o));
    assert!(stdout(&o).trim_end().ends_with("NOT VERIFIED"));
}

#[test]
fn construct_then_analyze() {
    let pair = stdout(&run(&["construct", &path("pentagon")]));
    let o = run_stdin(&["analyze", "-"], &pair);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let a: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(a["star_condition"], true);
    assert_eq!(a["isolated_fixed_points"], true);
    assert_eq!(a["connected_stabilizers"], true);
    assert_eq!(a["j_star"], 1);

    let mut broken: Value = serde_json::from_str(&pair).unwrap();
    broken["lambda"][0]["value"] = serde_json::json!([0, 0, 0, 0, 0]);
    let o = run_stdin(&["analyze", "-"], &broken.to_string());
    assert_eq!(o.status.code(), Some(1), "{}", stderr(&o));
    let a: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(a["star_condition"], false);
}

#[test]
fn output_is_deterministic() {
    for args in [
        vec!["verify", "--format", "json"],
        vec!["verify", "--format", "text"],
        vec!["construct"],
        vec!["homology"],
    ] {
        let mut a = args.clone();
        let p = path("two-edges");
        a.push(&p);
        assert_eq!(run(&a).stdout, run(&a).stdout, "{args:?}");
    }
    let s1 = run(&["sample", "--seed", "11", "--n", "5"]);
    assert_eq!(s1.status.code(), Some(0));
    assert_eq!(s1.stdout, run(&["sample", "--seed", "11", "--n", "5"]).stdout);
    let sampled = stdout(&s1);
    assert_eq!(run_stdin(&["verify", "-"], &sampled).status.code(), Some(0));
}
