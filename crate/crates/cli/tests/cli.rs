use std::path::Path;
use std::process::Command;

fn run_env(args: &[&str], env: &[(&str, &Path)]) -> (i32, String, String) {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_gwadams"));
    cmd.args(args).env_remove("GWADAMS_CACHE");
    for (k, v) in env {
        cmd.env(k, v);
    }
    let out = cmd.output().expect("binary runs");
    (
        out.status.code().unwrap_or(-1),
        String::from_utf8(out.stdout).expect("utf-8 stdout"),
        String::from_utf8(out.stderr).expect("utf-8 stderr"),
    )
}

fn run(args: &[&str]) -> (i32, String, String) {
    run_env(args, &[])
}

fn golden(name: &str) -> String {
    let p = Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/golden").join(name);
    std::fs::read_to_string(&p).unwrap_or_else(|e| panic!("{}: {e}", p.display()))
}

#[test]
fn documented_examples() {
    let cases: &[(&[&str], &str)] = &[
        (&["universal", "P", "1", "--format", "text"], "X1*Y1\n"),
        (&["universal", "Q", "1", "3", "--format", "text"], "X3\n"),
        (&["omega", "4"], "8*tau*gamma\n"),
        (&["adams", "2", "--target", "tau"], "-2*eps*gamma\n"),
        (&["ternary", "--theory", "k", "--class", "1"], "4σ(v1)+2β⁻²σ(v1v2)+β⁻⁴v1v2v3\n"),
    ];
    for (args, want) in cases {
        let (code, out, err) = run(args);
        assert_eq!(code, 0, "{args:?}: {err}");
        assert_eq!(&out, want, "{args:?}");
    }
}

#[test]
fn r_pipelines_agree() {
    let (code, out, _) = run(&["universal", "R", "2", "--method", "both"]);
    assert_eq!(code, 0);
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(lines.len(), 3);
    assert_eq!(lines[0], lines[1]);
    assert_eq!(lines[2], "agree");
}

#[test]
fn golden_files() {
    let cases: &[(&[&str], &str)] = &[
        (&["universal", "P", "1", "--format", "text"], "universal_p1.txt"),
        (&["universal", "Q", "1", "3", "--format", "text"], "universal_q13.txt"),
        (&["universal", "R", "2", "--method", "both"], "universal_r2_both.txt"),
        (&["universal", "P", "3", "--format", "latex"], "universal_p3.tex"),
        (&["omega", "4"], "omega_4.txt"),
        (&["omega", "--table", "10"], "omega_table.txt"),
        (&["adams", "2", "--target", "tau"], "adams_2_tau.txt"),
        (&["adams", "3", "--target", "h2i:1"], "adams_3_h2.txt"),
        (&["ternary", "--theory", "k", "--class", "1"], "ternary_k_1.txt"),
        (&["ternary", "--theory", "gw"], "ternary_gw.txt"),
        (&["ternary", "--theory", "k"], "ternary_k.txt"),
        (&["ternary", "--theory", "witt"], "ternary_witt.txt"),
        (&["ternary", "--theory", "gw", "--format", "latex"], "ternary_gw.tex"),
        (&["ternary", "--theory", "k", "--format", "latex"], "ternary_k.tex"),
        (&["ternary", "--theory", "witt", "--format", "latex"], "ternary_witt.tex"),
    ];
    for (args, file) in cases {
        let (code, out, err) = run(args);
        assert_eq!(code, 0, "{args:?}: {err}");
        assert_eq!(out, golden(file), "{args:?}");
    }
}

#[test]
fn golden_suite_reports() {
    for suite in [
        "appendix-a",
        "appendix-b",
        "coefficient-ring",
        "lambda-axioms",
        "adams-hyperbolic",
        "omega",
        "borel",
        "ternary",
        "forms",
    ] {
        let (code, out, err) = run(&["verify", suite]);
        assert_eq!(code, 0, "{suite}: {err}");
        assert_eq!(out, golden(&format!("verify_{suite}.txt")), "{suite}");
    }
}

#[test]
fn exit_codes() {
    assert_eq!(run(&["universal", "P", "5"]).0, 2);
    assert_eq!(run(&["universal", "Q", "2", "4"]).0, 2);
    assert_eq!(run(&["universal", "P", "5", "--max", "5"]).0, 0);
    assert_eq!(run(&["universal", "S", "1"]).0, 2);
    assert_eq!(run(&["universal", "P", "1", "--method", "direct"]).0, 2);
    assert_eq!(run(&["verify", "nonexistent"]).0, 2);
    assert_eq!(run(&["adams", "2", "--target", "{not json"]).0, 2);
    assert_eq!(run(&["adams", "2", "--target", "zeta"]).0, 2);
    assert_eq!(run(&["ternary", "--theory", "k", "--class", "5"]).0, 2);
    assert_eq!(run(&["ternary", "--theory", "ko"]).0, 2);
    assert_eq!(run(&["omega"]).0, 2);
    assert_eq!(run(&["frobnicate"]).0, 2);
}

#[test]
fn verify_omega_has_enough_entries() {
    let (code, out, _) = run(&["verify", "omega", "--format", "json"]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert!(v["entries"].as_array().unwrap().len() >= 14);
}

#[test]
fn adams_on_json_classes() {
    // psi^2(u1) in one generator: the rank-2 recursion gives u1^2 - 2 gamma
    let u1 = r#"{"generators":1,"quotient":false,"prefix":"u","terms":[{"u_exps":[1],"components":[{"deg":0,"min_gamma_exp":0,"a":["1"]}]}]}"#;
    let (code, out, err) = run(&["adams", "2", "--target", u1]);
    assert_eq!(code, 0, "{err}");
    assert!(out.contains("u1^2"), "{out}");
    let tau = r#"{"components":[{"deg":2,"min_gamma_exp":0,"c":["1"]}]}"#;
    let (code, out, err) = run(&["adams", "2", "--target", tau]);
    assert_eq!(code, 0, "{err}");
    assert_eq!(out, "-2*eps*gamma\n");
}

#[test]
fn report_is_deterministic() {
    let dir = tempfile::tempdir().unwrap();
    let (a, b) = (dir.path().join("a.json"), dir.path().join("b.json"));
    let (c1, o1, _) = run(&["verify", "all", "--json", a.to_str().unwrap(), "--no-timestamp"]);
    let (c2, o2, _) = run(&["verify", "all", "--json", b.to_str().unwrap(), "--no-timestamp"]);
    assert_eq!((c1, c2), (0, 0));
    assert_eq!(o1, o2);
    let (ja, jb) = (std::fs::read(&a).unwrap(), std::fs::read(&b).unwrap());
    assert_eq!(ja, jb);
    let v: serde_json::Value = serde_json::from_slice(&ja).unwrap();
    assert!(v.get("timestamp").is_none());
    assert_eq!(v["suite"], "all");

    let c = dir.path().join("c.json");
    assert_eq!(run(&["verify", "omega", "--json", c.to_str().unwrap()]).0, 0);
    let v: serde_json::Value = serde_json::from_slice(&std::fs::read(&c).unwrap()).unwrap();
    assert!(v["timestamp"].as_u64().is_some());
}

#[test]
fn mismatches_are_not_failures() {
    let (code, out, _) = run(&["verify", "adams-hyperbolic"]);
    assert_eq!(code, 0);
    assert!(out.contains("mismatch-documented psi_h_1"));
    assert!(!out.lines().any(|l| l.starts_with("fail")));
}

#[test]
fn cache_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let cache = dir.path().join("cache.json");
    let env = [("GWADAMS_CACHE", cache.as_path())];
    let (c1, o1, _) = run_env(&["universal", "R", "3"], &env);
    assert_eq!(c1, 0);
    let first = std::fs::read(&cache).expect("cache written");
    let (c2, o2, _) = run_env(&["universal", "R", "3"], &env);
    assert_eq!(c2, 0);
    assert_eq!(o1, o2);
    assert_eq!(std::fs::read(&cache).unwrap(), first);
    std::fs::write(&cache, "not json").unwrap();
    assert_eq!(run_env(&["universal", "P", "1"], &env).0, 2);
}

#[test]
fn form_commands() {
    let h = r#"{"sym":"symmetric","matrix":[["0","1"],["1","0"]]}"#;
    let d = r#"{"sym":"symmetric","matrix":[["1","0"],["0","-1"]]}"#;
    let (code, out, _) = run(&["form", "ext-power", "2", h]);
    assert_eq!(code, 0);
    assert_eq!(out, "symmetric rank 1\n[-1]\n");
    let (code, out, _) = run(&["form", "gw-equal", h, d]);
    assert_eq!(code, 0, "{out}");
    assert!(out.starts_with("equal"));
    let one = r#"{"sym":"symmetric","matrix":[["1"]]}"#;
    assert_eq!(run(&["form", "gw-equal", h, &format!("[{one},{one}]")]).0, 1);
    let (code, out, _) = run(&["form", "invariants", d, "--format", "json"]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["signature"], 0);
    let (code, out, _) = run(&["form", "hyperbolic", "1", "--skew"]);
    assert_eq!(code, 0);
    assert_eq!(out, "skew rank 2\n[0, 1]\n[-1, 0]\n");
    assert_eq!(run(&["form", "ext-power", "3", h]).0, 2);
    assert_eq!(run(&["form", "invariants", "{\"sym\":\"symmetric\",\"matrix\":[[\"0\"]]}"]).0, 2);
}
