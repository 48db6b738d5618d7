use std::process::{Command, Output};

fn hopflike(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hopflike"))
        .args(args)
        .env_remove("HOPFLIKE_CACHE")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn normalize_prints_endpoints_and_matrix() {
    let o = hopflike(&["normalize", "(7) ; s[1,1,3]"]);
    assert!(o.status.success());
    let text = stdout(&o);
    assert!(text.contains("source: (7)\n"), "{text}");
    assert!(text.contains("target: (3,4)\n"), "{text}");
    // A(3,4) -> A(7) is multiplication: h[3] (x) h[4] goes to h[4,3].
    let j = hopflike(&["--format", "json", "normalize", "(7) ; s[1,1,3]"]);
    let v: serde_json::Value = serde_json::from_slice(&j.stdout).unwrap();
    assert_eq!(v["columns"][0], "h[3] (x) h[4]");
    let row = v["rows"].as_array().unwrap().iter().position(|r| r == "h[4,3]").unwrap();
    assert_eq!(v["matrix"][row][0], "1");
}

#[test]
fn normalize_reports_positions() {
    let o = hopflike(&["normalize", "(3,4) ; x[2,1]"]);
    assert_eq!(o.status.code(), Some(2));
    let err = String::from_utf8(o.stderr).unwrap();
    assert!(err.contains("line 1, column 9"), "{err}");
}

#[test]
fn matrices_lists_both_permutation_matrices() {
    let o = hopflike(&["matrices", "--alpha", "(1,1)", "--beta", "(1,1)"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o), "[[0,1],[1,0]]\n[[1,0],[0,1]]\ncount: 2\n");
    let none = hopflike(&["matrices", "--alpha", "(2,1)", "--beta", "(1,2)", "--mode", "positive"]);
    assert_eq!(stdout(&none), "count: 0\n");
    let one = hopflike(&["matrices", "--alpha", "(2,2)", "--beta", "(2,2)", "--mode", "positive"]);
    assert_eq!(stdout(&one), "[[1,1],[1,1]]\ncount: 1\n");
}

#[test]
fn compositions_with_length_bound() {
    let o = hopflike(&["compositions", "--n", "4", "--max-length", "2"]);
    assert_eq!(stdout(&o), "(4)\n(1,3)\n(2,2)\n(3,1)\ncount: 4\n");
}

#[test]
fn passing_and_failing_suites_set_the_exit_status() {
    let ok = hopflike(&["verify", "simplicial", "--max-n", "5"]);
    assert_eq!(ok.status.code(), Some(0));
    assert!(stdout(&ok).contains("PASS"));
    let bad = hopflike(&["verify", "square", "--alpha", "(1,1)", "--beta", "(1,1)", "--reading", "per-k", "--format", "json"]);
    assert_eq!(bad.status.code(), Some(1));
    let v: serde_json::Value = serde_json::from_slice(&bad.stdout).unwrap();
    assert_eq!(v["failures"][0]["instance"], "K=[[0,1],[1,0]] gamma=(2)");
    assert_eq!(v["failures"][0]["right"], "2*h[1] (x) h[1]");
    assert_eq!(v["millis"], 0);
    let summed = hopflike(&["verify", "square", "--alpha", "(1,1)", "--beta", "(1,1)"]);
    assert_eq!(summed.status.code(), Some(0));
}

#[test]
fn json_output_is_deterministic() {
    let args = ["--format", "json", "verify", "relations", "--family", "mixed", "--max-sum", "4", "--max-len", "3", "--reading", "per-k"];
    let a = hopflike(&args);
    let b = hopflike(&args);
    assert_eq!(a.stdout, b.stdout);
    assert!(!a.stdout.is_empty());
}

#[test]
fn usage_errors() {
    for args in [
        &["verify", "relations", "--family", "xx", "--max-sum", "2", "--max-len", "2"][..],
        &["verify", "hopf", "--max-degree", "0"],
        &["verify", "hopf", "--max-degree", "2", "--bogus"],
        &["cache", "stats"],
    ] {
        let o = hopflike(args);
        assert_eq!(o.status.code(), Some(2), "{args:?}");
    }
}

#[test]
fn every_subcommand_documents_its_flags() {
    let cases: [(&[&str], &[&str]); 11] = [
        (&["verify", "simplicial"], &["--max-n"]),
        (&["verify", "relations"], &["--family", "--max-sum", "--max-len", "--reading"]),
        (&["verify", "hopf"], &["--max-degree"]),
        (&["verify", "psh"], &["--max-degree", "--positivity-degree"]),
        (&["verify", "square"], &["--alpha", "--beta", "--reading"]),
        (&["verify", "bidegree12"], &["--max-total"]),
        (&["explore", "mixed"], &["--a", "--beta", "--format"]),
        (&["matrices"], &["--alpha", "--beta", "--mode"]),
        (&["compositions"], &["--n", "--max-length"]),
        (&["normalize"], &["<WORD>"]),
        (&["cache", "stats"], &["--cache"]),
    ];
    for (cmd, flags) in cases {
        let mut args = cmd.to_vec();
        args.push("--help");
        let o = hopflike(&args);
        assert!(o.status.success(), "{cmd:?}");
        let text = stdout(&o);
        for f in flags {
            assert!(text.contains(f), "{cmd:?} help lacks {f}:\n{text}");
        }
    }
}

#[test]
fn explore_always_succeeds() {
    let o = hopflike(&["explore", "mixed", "--a", "1", "--beta", "(1,1)", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["witness"], "h[1] (x) h[1] (x) h[1]");
    assert!(!v["differences"].as_array().unwrap().is_empty());
    let unit = hopflike(&["explore", "mixed", "--a", "0", "--beta", "(2,1)", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_slice(&unit.stdout).unwrap();
    assert!(v["differences"].as_array().unwrap().is_empty());
}

#[test]
fn cache_is_written_read_and_cleared() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("hall.json");
    let p = path.to_str().unwrap();
    let first = hopflike(&["--cache", p, "--format", "json", "verify", "psh", "--max-degree", "4"]);
    assert!(first.status.success());
    assert!(path.exists());
    let again = hopflike(&["--cache", p, "--format", "json", "verify", "psh", "--max-degree", "4"]);
    assert_eq!(first.stdout, again.stdout);

    let stats = Command::new(env!("CARGO_BIN_EXE_hopflike"))
        .args(["--format", "json", "cache", "stats"])
        .env("HOPFLIKE_CACHE", p)
        .output()
        .unwrap();
    let v: serde_json::Value = serde_json::from_slice(&stats.stdout).unwrap();
    assert_eq!(v["present"], true);
    assert_eq!(v["degrees"].as_array().unwrap().len(), 5);

    std::fs::write(&path, "{}").unwrap();
    let corrupt = hopflike(&["--cache", p, "verify", "psh", "--max-degree", "2"]);
    assert_eq!(corrupt.status.code(), Some(2));

    let cleared = hopflike(&["--cache", p, "cache", "clear"]);
    assert!(cleared.status.success());
    assert!(!path.exists());
}

#[test]
fn timing_flag_controls_millis() {
    let o = hopflike(&["--format", "json", "--timing", "verify", "hopf", "--max-degree", "2"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert!(v["millis"].is_u64());
}
