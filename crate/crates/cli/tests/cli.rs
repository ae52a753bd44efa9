use std::fs;
use std::io::Write;
use std::path::Path;
use std::process::{Command, Output, Stdio};

use serde_json::Value;

fn treealpha(args: &[&str], stdin: Option<&str>) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_treealpha"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    let mut pipe = child.stdin.take().unwrap();
    pipe.write_all(stdin.unwrap_or("").as_bytes()).unwrap();
    drop(pipe);
    child.wait_with_output().unwrap()
}

fn report(out: &Output) -> Value {
    assert!(
        out.status.success(),
        "stderr: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    serde_json::from_slice(&out.stdout).unwrap()
}

fn gen(args: &[&str]) -> String {
    let mut full = vec!["gen"];
    full.extend_from_slice(args);
    let out = treealpha(&full, None);
    assert!(out.status.success());
    String::from_utf8(out.stdout).unwrap()
}

fn write(dir: &Path, name: &str, text: &str) -> String {
    let path = dir.join(name);
    fs::write(&path, text).unwrap();
    path.to_str().unwrap().to_string()
}

const P3: &str = "p tw 3 2\n1 2\n2 3\n";
const P3_TD: &str = "s td 1 3 3\nb 1 1 2 3\n";

#[test]
fn tin_of_k33_is_three() {
    let r = report(&treealpha(&["tin", "--exact"], Some(&gen(&["knn", "3"]))));
    assert_eq!(r["results"]["tree_independence_number"], 3);
    assert_eq!(r["command"], "tin");
    assert_eq!(r["inputs"][0]["path"], "-");
    assert_eq!(r["inputs"][0]["sha256"].as_str().unwrap().len(), 64);
}

#[test]
fn sharpness_treewidth() {
    let r = report(&treealpha(&["tw"], Some(&gen(&["sharpness", "3"]))));
    assert_eq!(r["results"]["treewidth"], 2);
}

#[test]
fn weighted_path_mwis() {
    let dir = tempfile::tempdir().unwrap();
    let g = write(dir.path(), "p3.gr", P3);
    let td = write(dir.path(), "p3.td", P3_TD);
    let w = write(dir.path(), "p3.w", "1 3\n2 1\n3 3\n");
    let r = report(&treealpha(
        &["mwis", "--graph", &g, "--td", &td, "--weights", &w],
        None,
    ));
    assert_eq!(r["results"]["weight"], "6/1");
    assert_eq!(r["results"]["set"], serde_json::json!([1, 3]));
    assert_eq!(r["results"]["k"], 2);
    assert_eq!(r["inputs"].as_array().unwrap().len(), 3);
}

#[test]
fn tin_witness_validates_and_measures() {
    let dir = tempfile::tempdir().unwrap();
    let g = write(dir.path(), "g.gr", &gen(&["double-join", "cycle", "5"]));
    let td = dir.path().join("w.td");
    let r = report(&treealpha(
        &["tin", "-g", &g, "-o", td.to_str().unwrap()],
        None,
    ));
    assert_eq!(r["results"]["tree_independence_number"], 2);
    assert_eq!(r["artifacts"][0]["role"], "td");
    let td = td.to_str().unwrap();
    let r = report(&treealpha(&["validate", "-g", &g, "-t", td], None));
    assert_eq!(r["results"]["valid"], true);
    let r = report(&treealpha(&["measure", "-g", &g, "-t", td], None));
    assert_eq!(r["results"]["independence_number"], 2);
    let r = report(&treealpha(&["nice", "-g", &g, "-t", td], None));
    assert!(r["results"]["kinds"]["leaf"].as_u64().unwrap() >= 1);
    assert!(
        r["results"]["residual_independence_number"]
            .as_u64()
            .unwrap()
            <= 2
    );
    let r = report(&treealpha(
        &["mwis", "-g", &g, "-t", td, "--threads", "3"],
        None,
    ));
    assert_eq!(r["results"]["weight"], "2/1");
}

#[test]
fn gen_writes_file_with_report() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("c.gr");
    let r = report(&treealpha(
        &["gen", "cycle", "6", "-o", path.to_str().unwrap()],
        None,
    ));
    assert_eq!(r["results"]["n"], 6);
    assert_eq!(r["results"]["m"], 6);
    assert_eq!(fs::read_to_string(&path).unwrap(), gen(&["cycle", "6"]));
}

#[test]
fn packing_modes() {
    let dir = tempfile::tempdir().unwrap();
    let g = write(dir.path(), "p4.gr", &gen(&["path", "4"]));
    let td = write(dir.path(), "p4.td", "s td 1 4 4\nb 1 1 2 3 4\n");
    // induced matching of P4 has one edge
    let r = report(&treealpha(
        &["pack", "-g", &g, "-t", &td, "--patterns", "k2"],
        None,
    ));
    assert_eq!(r["results"]["weight"], "2/1");
    assert_eq!(r["results"]["family_size"], 3);
    // dissociation number of P4 is 3
    let r = report(&treealpha(
        &[
            "pack",
            "-g",
            &g,
            "-t",
            &td,
            "--patterns",
            "k1,k2",
            "--cover",
        ],
        None,
    ));
    assert_eq!(r["results"]["weight"], "3/1");
    // removing one inner vertex leaves components of order at most 2
    let r = report(&treealpha(
        &["pack", "-g", &g, "-t", &td, "--separator", "2"],
        None,
    ));
    assert_eq!(r["results"]["separator_weight"], "1/1");
    let fam = write(dir.path(), "f.fam", "s fam 2\nf 1 5 2 1 2\nf 2 4 2 3 4\n");
    let dg = dir.path().join("d.gr");
    let r = report(&treealpha(
        &[
            "pack",
            "-g",
            &g,
            "-t",
            &td,
            "--family",
            &fam,
            "--emit-derived",
            dg.to_str().unwrap(),
        ],
        None,
    ));
    assert_eq!(r["results"]["weight"], "5/1");
    assert_eq!(
        fs::read_to_string(dg).unwrap().lines().next().unwrap(),
        "p tw 2 1"
    );
}

#[test]
fn compose_along_a_cut_vertex() {
    let dir = tempfile::tempdir().unwrap();
    let g = write(dir.path(), "g.gr", "p tw 5 5\n1 2\n1 3\n2 3\n3 4\n4 5\n");
    let a = write(dir.path(), "a", "1 2\n");
    let b = write(dir.path(), "b", "4 5\n");
    let c = write(dir.path(), "c", "3\n");
    let ta = write(dir.path(), "a.td", "s td 1 3 5\nb 1 1 2 3\n");
    let tb = write(dir.path(), "b.td", "s td 2 2 5\nb 1 3 4\nb 2 4 5\n1 2\n");
    let r = report(&treealpha(
        &[
            "compose", "-g", &g, "--cut", &a, &b, &c, "--td-a", &ta, "--td-b", &tb,
        ],
        None,
    ));
    assert_eq!(r["results"]["independence_number"], 1);
    assert_eq!(r["results"]["nodes"], 3);
}

#[test]
fn exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    let g = write(dir.path(), "p3.gr", P3);
    let bad = write(dir.path(), "bad.td", "s td 2 2 3\nb 1 1 2\nb 2 3\n1 2\n");
    assert_eq!(treealpha(&["--help"], None).status.code(), Some(0));
    assert_eq!(treealpha(&["frobnicate"], None).status.code(), Some(1));
    assert_eq!(
        treealpha(&["tin"], Some("not a graph")).status.code(),
        Some(1)
    );
    assert_eq!(
        treealpha(&["tin", "-g", "/nonexistent.gr"], None)
            .status
            .code(),
        Some(1)
    );

    let out = treealpha(&["validate", "-g", &g, "-t", &bad], None);
    assert_eq!(out.status.code(), Some(2));
    let r: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(r["results"]["valid"], false);
    assert!(r["results"]["violations"][0]
        .as_str()
        .unwrap()
        .contains("(2, 3)"));
    assert_eq!(
        treealpha(&["mwis", "-g", &g, "-t", &bad], None)
            .status
            .code(),
        Some(2)
    );

    let td = write(dir.path(), "p3.td", P3_TD);
    let out = treealpha(&["mwis", "-g", &g, "-t", &td, "-k", "1"], None);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("residual bound 1"));

    let big = gen(&["path", "21"]);
    assert_eq!(treealpha(&["tin"], Some(&big)).status.code(), Some(3));
    assert_eq!(
        treealpha(&["tw", "--force"], Some(&big)).status.code(),
        Some(0)
    );
    assert_eq!(
        treealpha(&["pack", "-g", &g, "-t", &td, "--separator", "6"], None)
            .status
            .code(),
        Some(3)
    );
}

#[test]
fn reports_are_deterministic() {
    let input = gen(&["double-join", "knn", "2"]);
    let strip = |out: Output| {
        let mut r = report(&out);
        r["wall_time_ms"] = Value::Null;
        serde_json::to_string(&r).unwrap()
    };
    let once = strip(treealpha(&["tin"], Some(&input)));
    assert_eq!(
        once,
        strip(treealpha(&["tin", "--threads", "4"], Some(&input)))
    );
    assert_eq!(once, strip(treealpha(&["tin"], Some(&input))));
}
