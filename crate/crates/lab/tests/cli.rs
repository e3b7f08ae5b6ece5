//! The binary end to end: outputs and exit codes.

use std::path::{Path, PathBuf};
use std::process::Command;

fn fixture(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("tests/fixtures")
        .join(name)
        .display()
        .to_string()
}

struct Run {
    code: i32,
    stdout: String,
    stderr: String,
}

fn rek(args: &[&str]) -> Run {
    let out = Command::new(env!("CARGO_BIN_EXE_rek-lab"))
        .args(args)
        .env("REK_LAB_THREADS", "2")
        .output()
        .unwrap();
    Run {
        code: out.status.code().unwrap(),
        stdout: String::from_utf8(out.stdout).unwrap(),
        stderr: String::from_utf8(out.stderr).unwrap(),
    }
}

#[test]
fn compute_lambda3_of_a_cycle() {
    let r = rek(&["compute", &fixture("c6.el"), "--k", "3"]);
    assert_eq!(r.code, 0, "{}", r.stderr);
    assert!(r.stdout.starts_with("lambda3 = 2\n"), "{}", r.stdout);
    assert!(r.stdout.contains("side: "));
}

#[test]
fn star_has_no_restricted_cut() {
    let r = rek(&["compute", &fixture("star5.el"), "--k", "2"]);
    assert_eq!(r.code, 3);
    assert!(r.stdout.starts_with("lambda2 = infinity"));
    let r = rek(&["--json", "compute", &fixture("star5.el"), "--k", "2"]);
    assert_eq!(r.code, 3);
    let v: serde_json::Value = serde_json::from_str(&r.stdout).unwrap();
    assert_eq!(v["value"], "infinity");
    assert!(v["witness"].is_null());
}

#[test]
fn oracle_on_a_product_fixture() {
    let r = rek(&[
        "--json",
        "compute",
        &fixture("c5xk4.g6"),
        "--k",
        "3",
        "--method",
        "oracle",
    ]);
    assert_eq!(r.code, 0, "{}", r.stderr);
    let v: serde_json::Value = serde_json::from_str(&r.stdout).unwrap();
    assert_eq!(v["value"], 27);
    assert_eq!(v["method"], "oracle");
    assert_eq!(v["witness"]["edges"].as_array().unwrap().len(), 27);
}

#[test]
fn budget_refusals() {
    let r = rek(&[
        "--budget-oracle",
        "10",
        "compute",
        &fixture("c5xk4.g6"),
        "--k",
        "3",
        "--method",
        "oracle",
    ]);
    assert_eq!(r.code, 4);
    assert!(r.stderr.starts_with("refused:"), "{}", r.stderr);
    let r = rek(&[
        "--budget-flow",
        "10",
        "compute",
        &fixture("c5xk4.g6"),
        "--k",
        "3",
    ]);
    assert_eq!(r.code, 4);
    let r = rek(&[
        "--budget-oracle",
        "4",
        "--budget-flow",
        "10",
        "verify",
        "--theorem",
        "T3.1",
        &fixture("c5.el"),
        "--n",
        "4",
    ]);
    assert_eq!(r.code, 4);
    assert!(
        r.stdout.contains("verdict: oracle-too-large"),
        "{}",
        r.stdout
    );
}

#[test]
fn input_errors() {
    let r = rek(&["compute", "/nonexistent/graph.el"]);
    assert_eq!(r.code, 2);
    assert!(r.stderr.starts_with("error: cannot read"));

    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.el");
    std::fs::write(&bad, "n 3\n0 1\n1 9\n").unwrap();
    let r = rek(&["compute", bad.to_str().unwrap()]);
    assert_eq!(r.code, 2);
    assert!(r.stderr.contains("line 3"), "{}", r.stderr);

    let r = rek(&["compute", &fixture("c6.el"), "--k", "0"]);
    assert_eq!(r.code, 2);
    let r = rek(&["verify", "--theorem", "T9.9", &fixture("c5.el")]);
    assert_eq!(r.code, 2);
    let r = rek(&["gen", "--family", "harary", "--params", "k=3,n=7"]);
    assert_eq!(r.code, 2, "odd k with odd n");
}

#[test]
fn verify_reports() {
    let r = rek(&["verify", "--theorem", "T3.1", &fixture("c5.el"), "--n", "4"]);
    assert_eq!(r.code, 0, "{}", r.stderr);
    assert!(r.stdout.contains("predicted: lambda3 = 18"), "{}", r.stdout);
    assert!(r.stdout.contains("computed: 18 (oracle)"));
    assert!(r.stdout.ends_with("verdict: confirmed\n"));

    let r = rek(&[
        "--json",
        "verify",
        "--theorem",
        "t3.1",
        &fixture("subdivided_k4.el"),
        "--n",
        "4",
    ]);
    assert_eq!(r.code, 0);
    let v: serde_json::Value = serde_json::from_str(&r.stdout).unwrap();
    assert_eq!(v["predicted"]["value"], 20);
    assert_eq!(v["verdict"], "confirmed");

    let r = rek(&[
        "verify",
        "--theorem",
        "T1.1",
        &fixture("star5.el"),
        "--n",
        "3",
    ]);
    assert_eq!(r.code, 0);
    assert!(r.stdout.contains("verdict: "));

    let r = rek(&["verify", "--theorem", "T3.1", &fixture("c5.el"), "--n", "3"]);
    assert_eq!(r.code, 0);
    assert!(r.stdout.contains("hypothesis n>=4: fails"));
    assert!(r.stdout.contains("verdict: hypotheses-unmet"));
}

#[test]
fn invariants_json() {
    let r = rek(&["invariants", &fixture("petersen.el")]);
    assert_eq!(r.code, 0);
    let v: serde_json::Value = serde_json::from_str(&r.stdout).unwrap();
    assert_eq!(v["min_degree"], 3);
    assert_eq!(v["xi"], 4);
    assert_eq!(v["xi3"], 5);
}

fn read(path: &Path) -> String {
    std::fs::read_to_string(path).unwrap()
}

#[test]
fn product_writes_graph_and_index_map() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("p.g6");
    let r = rek(&[
        "product",
        "--op",
        "strong",
        &fixture("c5.el"),
        &fixture("c5.el"),
        "-o",
        out.to_str().unwrap(),
    ]);
    assert_eq!(r.code, 0, "{}", r.stderr);
    assert_eq!(r.stdout, "");
    let again = rek(&["--json", "compute", out.to_str().unwrap()]);
    let v: serde_json::Value = serde_json::from_str(&again.stdout).unwrap();
    assert_eq!(v["order"], 25);
    assert_eq!(v["value"], 8);

    let map: serde_json::Value =
        serde_json::from_str(&read(&dir.path().join("p.g6.index.json"))).unwrap();
    assert_eq!(map["kind"], "strong");
    assert_eq!(map["vertices"][7], serde_json::json!([1, 2]));

    let r = rek(&["product", "--op", "k2odot", &fixture("c5.el")]);
    assert_eq!(r.code, 0);
    assert!(r.stdout.starts_with("n 10\n"));
    let r = rek(&["product", "--op", "strong", &fixture("c5.el")]);
    assert_eq!(r.code, 2);
}

#[test]
fn gen_is_deterministic() {
    let args = [
        "--seed",
        "7",
        "gen",
        "--family",
        "random-regular",
        "--params",
        "n=10,d=3",
    ];
    let a = rek(&args);
    let b = rek(&args);
    assert_eq!(a.code, 0, "{}", a.stderr);
    assert_eq!(a.stdout, b.stdout);
    assert!(a.stdout.starts_with("# random-regular"));
    let c = rek(&[
        "--seed",
        "8",
        "gen",
        "--family",
        "random-regular",
        "--params",
        "n=10,d=3",
    ]);
    assert_ne!(a.stdout, c.stdout);

    let r = rek(&[
        "gen", "--family", "harary", "--params", "k=3,n=8", "--format", "g6",
    ]);
    assert_eq!(r.code, 0);
    assert_eq!(r.stdout.trim().len(), 1 + (28usize).div_ceil(6));
}

#[test]
fn small_sweep_is_reproducible() {
    let dir = tempfile::tempdir().unwrap();
    let config = dir.path().join("sweep.json");
    std::fs::write(
        &config,
        r#"{"seed": 11, "instances": 12, "theorems": ["T1.1", "T3.1"],
            "families": [{"family": "cycle", "n": [5, 6]}, {"family": "star", "n": [4, 5]}],
            "factor_orders": [4]}"#,
    )
    .unwrap();
    let (a, b) = (dir.path().join("a.json"), dir.path().join("b.json"));
    for out in [&a, &b] {
        let r = rek(&[
            "sweep",
            "--config",
            config.to_str().unwrap(),
            "-o",
            out.to_str().unwrap(),
        ]);
        assert_eq!(r.code, 0, "{}", r.stderr);
        assert!(r.stdout.contains("T3.1"));
    }
    assert_eq!(read(&a), read(&b));
    let v: serde_json::Value = serde_json::from_str(&read(&a)).unwrap();
    assert_eq!(v["prng"], "splitmix64");
    assert_eq!(v["violations"], serde_json::json!([]));
}
