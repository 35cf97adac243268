use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

fn tinkit(dir: &Path, args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_tinkit"))
        .args(args)
        .current_dir(dir)
        .env_remove("TINKIT_BUDGET")
        .output()
        .expect("binary runs")
}

fn report(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout)
        .unwrap_or_else(|e| panic!("stdout is not a report ({e}): {}", String::from_utf8_lossy(&out.stdout)))
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("exited normally")
}

fn stderr(out: &Output) -> String {
    String::from_utf8_lossy(&out.stderr).into_owned()
}

#[test]
fn witness_treewidth() {
    let dir = tempfile::tempdir().unwrap();
    let out = tinkit(dir.path(), &["gen", "--family", "Gn", "--n", "3", "-o", "g3.gr"]);
    assert_eq!(code(&out), 0, "{}", stderr(&out));
    let out = tinkit(dir.path(), &["oracle", "tw", "g3.gr"]);
    assert_eq!(code(&out), 0);
    let r = report(&out);
    assert_eq!(r["result"]["value"], 2);
    assert_eq!(r["inputs"][0]["sha256"].as_str().unwrap().len(), 64);
}

#[test]
fn star_path_decomposition_and_certificate() {
    let dir = tempfile::tempdir().unwrap();
    tinkit(dir.path(), &["gen", "--family", "cycle", "--n", "6", "-o", "c6.gr"]);
    // C6 contains an induced P5, so (d, s) = (3, 5) certifies.
    let out = tinkit(
        dir.path(),
        &[
            "decompose",
            "--strategy",
            "star-path",
            "--d",
            "3",
            "--s",
            "5",
            "--graph",
            "c6.gr",
        ],
    );
    assert_eq!(code(&out), 1);
    let r = report(&out);
    assert_eq!(r["result"]["certificate"]["kind"], "path");
    assert_eq!(r["result"]["certificate"]["embedding"].as_array().unwrap().len(), 5);
    let out = tinkit(
        dir.path(),
        &[
            "decompose",
            "--strategy",
            "star-path",
            "--d",
            "3",
            "--s",
            "6",
            "--graph",
            "c6.gr",
            "-o",
            "c6.td",
        ],
    );
    assert_eq!(code(&out), 0, "{}", stderr(&out));
    let r = report(&out);
    assert_eq!(r["bounds"][0]["bound"], 8);
    assert_eq!(r["bounds"][0]["holds"], true);
    let out = tinkit(dir.path(), &["validate", "--graph", "c6.gr", "--td", "c6.td"]);
    assert_eq!(code(&out), 0);
    assert_eq!(report(&out)["result"]["valid"], true);
}

#[test]
fn corrupted_decomposition_names_the_axiom() {
    let dir = tempfile::tempdir().unwrap();
    tinkit(dir.path(), &["gen", "--family", "path", "--n", "3", "-o", "p3.gr"]);
    std::fs::write(dir.path().join("bad.td"), "s td 2 2 3\nb 1 1 2\nb 2 3\n1 2\n").unwrap();
    let out = tinkit(dir.path(), &["validate", "--graph", "p3.gr", "--td", "bad.td"]);
    assert_eq!(code(&out), 2);
    assert!(stderr(&out).contains("edge-coverage"), "{}", stderr(&out));
    assert_eq!(report(&out)["result"]["axiom"], "edge-coverage");
}

#[test]
fn input_errors_carry_line_numbers() {
    let dir = tempfile::tempdir().unwrap();
    std::fs::write(dir.path().join("bad.gr"), "c header next\np tw 3 1\n1 4\n").unwrap();
    let out = tinkit(dir.path(), &["oracle", "alpha", "bad.gr"]);
    assert_eq!(code(&out), 2);
    assert!(stderr(&out).contains("line 3"), "{}", stderr(&out));
    let out = tinkit(dir.path(), &["oracle", "alpha", "missing.gr"]);
    assert_eq!(code(&out), 2);
    let out = tinkit(dir.path(), &["decompose", "--strategy", "nonsense", "--graph", "x.gr"]);
    assert_eq!(code(&out), 2);
}

#[test]
fn budget_exhaustion_exits_3() {
    let dir = tempfile::tempdir().unwrap();
    tinkit(dir.path(), &["gen", "--family", "Gn", "--n", "3", "-o", "g3.gr"]);
    let out = Command::new(env!("CARGO_BIN_EXE_tinkit"))
        .args(["oracle", "tin", "g3.gr"])
        .current_dir(dir.path())
        .env("TINKIT_BUDGET", "3")
        .output()
        .unwrap();
    assert_eq!(code(&out), 3, "{}", stderr(&out));
}

#[test]
fn mwis_with_rational_weights() {
    let dir = tempfile::tempdir().unwrap();
    tinkit(dir.path(), &["gen", "--family", "cycle", "--n", "6", "-o", "c6.gr"]);
    std::fs::write(dir.path().join("w.json"), r#"[1, 2, {"num": 5, "den": 2}, 1, 1, 1]"#).unwrap();
    let out = tinkit(dir.path(), &["mwis", "--graph", "c6.gr", "--weights", "w.json"]);
    assert_eq!(code(&out), 0, "{}", stderr(&out));
    let r = report(&out);
    assert_eq!(r["result"]["weight"]["num"], 9);
    assert_eq!(r["result"]["weight"]["den"], 2);
    assert_eq!(r["result"]["set"], serde_json::json!([0, 2, 4]));
    let out = tinkit(
        dir.path(),
        &[
            "mwis",
            "--graph",
            "c6.gr",
            "--weights",
            "w.json",
            "--d",
            "3",
            "--p",
            "2",
        ],
    );
    assert_eq!(report(&out)["result"]["strategy"], "backbone");
    tinkit(
        dir.path(),
        &["decompose", "--strategy", "heuristic", "--graph", "c6.gr", "-o", "h.td"],
    );
    let out = tinkit(
        dir.path(),
        &["mwis", "--graph", "c6.gr", "--weights", "w.json", "--td", "h.td"],
    );
    let r = report(&out);
    assert_eq!(
        (r["result"]["strategy"].clone(), r["result"]["weight"]["num"].clone()),
        ("supplied".into(), 9.into())
    );
}

#[test]
fn cograph_route() {
    let dir = tempfile::tempdir().unwrap();
    tinkit(dir.path(), &["gen", "--family", "biclique", "--n", "3", "-o", "k33.gr"]);
    let out = tinkit(dir.path(), &["cograph", "--graph", "k33.gr", "--td-out", "k33.td"]);
    assert_eq!(code(&out), 0);
    let r = report(&out);
    assert_eq!(r["result"]["tin"], 3);
    assert_eq!(r["result"]["cotree"]["op"], "join");
    let out = tinkit(dir.path(), &["validate", "--graph", "k33.gr", "--td", "k33.td"]);
    assert_eq!(report(&out)["result"]["alpha"], 3);
    tinkit(dir.path(), &["gen", "--family", "path", "--n", "4", "-o", "p4.gr"]);
    let out = tinkit(dir.path(), &["cograph", "--graph", "p4.gr"]);
    assert_eq!(code(&out), 1);
    assert_eq!(
        report(&out)["result"]["certificate"]["embedding"],
        serde_json::json!([0, 1, 2, 3])
    );
}

#[test]
fn lifts() {
    let dir = tempfile::tempdir().unwrap();
    tinkit(dir.path(), &["gen", "--family", "Gn", "--n", "3", "-o", "g3.gr"]);
    let out = tinkit(
        dir.path(),
        &["line-td", "--graph", "g3.gr", "-o", "l.gr", "--td-out", "l.td"],
    );
    assert_eq!(code(&out), 0, "{}", stderr(&out));
    let r = report(&out);
    assert!(r["bounds"][0]["holds"].as_bool().unwrap());
    let out = tinkit(dir.path(), &["validate", "--graph", "l.gr", "--td", "l.td"]);
    assert_eq!(code(&out), 0);

    tinkit(dir.path(), &["gen", "--family", "path", "--n", "5", "-o", "p5.gr"]);
    tinkit(
        dir.path(),
        &[
            "decompose",
            "--strategy",
            "heuristic",
            "--graph",
            "p5.gr",
            "-o",
            "p5.td",
        ],
    );
    std::fs::write(dir.path().join("fam.json"), "[[0, 1], [1, 2, 3], [3, 4], [4]]").unwrap();
    let out = tinkit(
        dir.path(),
        &[
            "lift", "--host", "p5.gr", "--td", "p5.td", "--family", "fam.json", "-o", "i.gr", "--td-out", "i.td",
        ],
    );
    assert_eq!(code(&out), 0, "{}", stderr(&out));
    let out = tinkit(dir.path(), &["validate", "--graph", "i.gr", "--td", "i.td"]);
    assert_eq!(code(&out), 0);
    std::fs::write(dir.path().join("bad.json"), "[[0, 2]]").unwrap();
    let out = tinkit(
        dir.path(),
        &["lift", "--host", "p5.gr", "--td", "p5.td", "--family", "bad.json"],
    );
    assert_eq!(code(&out), 2);
}

#[test]
fn detect_patterns() {
    let dir = tempfile::tempdir().unwrap();
    tinkit(dir.path(), &["gen", "--family", "wall", "--n", "3", "-o", "w.gr"]);
    let out = tinkit(
        dir.path(),
        &["detect", "--graph", "w.gr", "--pattern", "star", "--size", "3"],
    );
    assert_eq!(code(&out), 1);
    let out = tinkit(
        dir.path(),
        &["detect", "--graph", "w.gr", "--pattern", "star", "--size", "4"],
    );
    assert_eq!(code(&out), 0);
    assert_eq!(report(&out)["result"]["found"], false);
}

#[test]
fn outputs_round_trip_and_reruns_are_identical() {
    let dir = tempfile::tempdir().unwrap();
    let args = [
        "gen",
        "--family",
        "gnp",
        "--n",
        "12",
        "--p",
        "0.4",
        "--seed",
        "9",
        "-o",
        "a.gr",
        "--deterministic",
    ];
    let first = tinkit(dir.path(), &args);
    let a = std::fs::read(dir.path().join("a.gr")).unwrap();
    let second = tinkit(dir.path(), &args);
    assert_eq!(first.stdout, second.stdout);
    assert_eq!(std::fs::read(dir.path().join("a.gr")).unwrap(), a);
    let text = String::from_utf8(a).unwrap();
    assert_eq!(tinkit::io::write_gr(&tinkit::io::read_gr(&text).unwrap()), text);

    let v1 = tinkit(dir.path(), &["verify-paper", "--criterion", "2", "--deterministic"]);
    let v2 = tinkit(dir.path(), &["verify-paper", "--criterion", "2", "--deterministic"]);
    assert_eq!(code(&v1), 0, "{}", stderr(&v1));
    assert_eq!(v1.stdout, v2.stdout);
    assert!(stderr(&v1).contains("criterion 2 [PASS]"));
}
