use std::path::PathBuf;
use std::process::{Command, Output};

fn fixture(name: &str) -> String {
    let p: PathBuf = [env!("CARGO_MANIFEST_DIR"), "tests", "fixtures", name].iter().collect();
    p.to_string_lossy().into_owned()
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_multiweb")).args(args).output().expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = run(args);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap()
}

#[test]
fn two_by_three_kasteleyn() {
    let g = fixture("2by3.json");
    let out = stdout(&["kasteleyn", "--graph", &g, "--n", "2"]);
    assert!(out.contains("Z_d: a*d + b*e + c*f"));
    assert!(out.trim_end().ends_with("OK"));
    let web = fixture("2by3_web.json");
    for method in ["coloring", "contraction"] {
        let out = stdout(&["trace", "--graph", &g, "--kasteleyn", "--n", "2", "--web", &web, "--method", method]);
        assert!(out.contains("12"), "{method}: {out}");
    }
}

#[test]
fn json_output_parses() {
    let g = fixture("square.json");
    let conn = fixture("square_conn.json");
    let out = stdout(&["--json", "verify-main", "--graph", &g, "--conn", &conn, "--weights", "file"]);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["pf"], v["sum_traces"]);
}

#[test]
fn vertex_and_qdet_commands() {
    let basis = fixture("basis4.json");
    assert_eq!(stdout(&["det-vertex", "--n", "2", "--vectors", &basis]), "1\n");
    assert_eq!(stdout(&["det-vertex", "--n", "3"]), stdout(&["wedge-norm", "--n", "3"]));
    let m = fixture("m2.json");
    assert!(stdout(&["qdet", "--matrix", &m]).contains("-b*c*q + a*d"));
}

#[test]
fn ring_commands() {
    let g = fixture("ring.json");
    let parity = stdout(&["annulus-parity", "--graph", &g, "--inner", "0,1,2,3,4,5"]);
    assert!(parity.contains("1/16"), "{parity}");
    let ck = stdout(&["annulus-ck", "--graph", &g, "--inner", "0,1,2,3,4,5"]);
    let c0: f64 = ck.lines().next().unwrap().strip_prefix("C_0: ").unwrap().parse().unwrap();
    assert!((c0 - 1216.0).abs() < 1e-6, "{ck}");
}

#[test]
fn random_suites_succeed() {
    for args in [
        vec!["verify-main", "--count", "4"],
        vec!["verify-main", "--count", "3", "--n", "2"],
        vec!["kasteleyn", "--count", "4"],
        vec!["isotopy-check", "--count", "100", "--triangulations", "3"],
    ] {
        assert!(stdout(&args).trim_end().ends_with("OK"), "{args:?}");
    }
}

#[test]
fn output_is_deterministic_across_threads() {
    let web = fixture("2by3_web.json");
    let g = fixture("2by3.json");
    for args in [
        vec!["verify-main", "--count", "5", "--weights", "symbolic", "--ring", "poly"],
        vec!["--json", "multiwebs", "--graph", g.as_str(), "--n", "2"],
        vec!["trace", "--graph", g.as_str(), "--kasteleyn", "--n", "2", "--web", web.as_str(), "--method", "coloring"],
    ] {
        let base = run(&args).stdout;
        assert_eq!(base, run(&args).stdout);
        for t in ["1", "3"] {
            let mut with = vec!["--threads", t];
            with.extend(&args);
            assert_eq!(run(&with).stdout, base, "{args:?} with {t} threads");
        }
    }
}

#[test]
fn usage_errors_exit_two() {
    let g = fixture("2by3.json");
    for args in [
        vec!["frobnicate"],
        vec!["pfaffian", "--graph", g.as_str(), "--weights", "symbolic"],
        vec!["multiwebs", "--graph", "/nonexistent.json"],
        vec!["spin-corr", "--graph", g.as_str(), "--face1", "1,2", "--face2", "9,9,9"],
        vec!["trace", "--graph", g.as_str(), "--kasteleyn", "--conn", "x.json"],
    ] {
        assert_eq!(run(&args).status.code(), Some(2), "{args:?}");
    }
}
