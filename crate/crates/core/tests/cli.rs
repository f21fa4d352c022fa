use std::process::{Command, Output};

fn qc(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qcholder")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn mean_prints_csv_with_seventeen_digits() {
    let o = qc(&["mean", "--field", "const 1", "--center", "0,0", "--radii", "0.1:0.5:10"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines[0], "r,q");
    assert_eq!(lines.len(), 11);
    assert_eq!(lines[10], "5.0000000000000000e-1,1.0000000000000000e0");
}

#[test]
fn boundary_certificate_json() {
    let o = qc(&["certificate", "boundary", "--C", "1", "--eps0", "0.5"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["constants"]["delta0"].as_f64(), Some(0.25));
    assert!((v["constants"]["global_l"].as_f64().unwrap() - 64.45379231562025).abs() < 1e-12);
    assert_eq!(v["global"]["validity_radius"].as_f64(), Some(2.0));
}

#[test]
fn ring_inequality_holds() {
    let o = qc(&["verify", "ring", "--map", "radial:0.5", "--Q", "const 2", "--r1", "0.1", "--r2", "0.5"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["holds"], true);
    let o = qc(&["verify", "ring", "--map", "radial:0.5", "--Q", "const 1", "--r1", "0.1", "--r2", "0.5"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn exit_codes() {
    assert_eq!(qc(&["condition", "dini", "--field", "const 3", "--eps0", "0.5"]).status.code(), Some(2));
    assert_eq!(qc(&["condition", "dini", "--field", "const 3", "--alpha", "0.3", "--eps0", "0.5"]).status.code(), Some(0));
    assert_eq!(qc(&["certificate", "interior", "--field", "const 3", "--eps0", "0.5"]).status.code(), Some(2));
    assert_eq!(qc(&["condition", "dini", "--field", "nonsense", "--eps0", "0.5"]).status.code(), Some(1));
    // log(1/ε)-weighted means of Q ≡ 1 grow without bound.
    let weighted = ["condition", "weighted", "--field", "const 1", "--eps0", "0.25", "--weight", "log", "--a", "1", "--gamma", "2"];
    assert_eq!(qc(&weighted).status.code(), Some(2));
    assert_eq!(qc(&["verify"]).status.code(), Some(64));
    assert_eq!(qc(&["mean", "--no-such-flag"]).status.code(), Some(64));
    assert_eq!(qc(&["--version"]).status.code(), Some(0));
}

#[test]
fn field_parse_errors_name_the_column() {
    let o = qc(&["condition", "fmv", "--field", "power q=2", "--eps0", "0.5"]);
    assert_eq!(o.status.code(), Some(1));
    let err = String::from_utf8(o.stderr).unwrap();
    assert!(err.contains("column"), "{err}");
}

#[test]
fn deterministic_output() {
    let args = ["verify", "oracle", "--field", "power p=1", "--region", "annulus", "--inner", "0.1", "--outer", "1", "--samples", "20000", "--seed", "9"];
    let a = qc(&args);
    let b = qc(&args);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    let c = qc(&["mean", "--field", "power p=1 center=0.1,0", "--radii", "0.1:1:5", "--json"]);
    let d = qc(&["mean", "--field", "power p=1 center=0.1,0", "--radii", "0.1:1:5", "--json"]);
    assert_eq!(c.stdout, d.stdout);
}

#[test]
fn config_file_and_flag_precedence() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = dir.path().join("run.toml");
    std::fs::write(&cfg, "field = \"const 3\"\neps0 = 0.5\nalpha = 0.3\n").unwrap();
    let cfg = cfg.to_str().unwrap();
    assert_eq!(qc(&["condition", "dini", "--config", cfg]).status.code(), Some(0));
    assert_eq!(qc(&["condition", "dini", "--config", cfg, "--alpha", "1"]).status.code(), Some(2));
}

#[test]
fn out_and_grid_files() {
    let dir = tempfile::tempdir().unwrap();
    let grid = dir.path().join("t.csv");
    std::fs::write(&grid, "t\n0.25\n0.125\n0.0625\n0.03125\n").unwrap();
    let out = dir.path().join("report.csv");
    let o = qc(&[
        "condition", "fmv", "--field", "const 1", "--eps0", "0.5",
        "--grid", grid.to_str().unwrap(), "--out", out.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(0));
    assert!(o.stdout.is_empty());
    let text = std::fs::read_to_string(&out).unwrap();
    assert_eq!(text.lines().count(), 5);

    std::fs::write(&grid, "t\n0.25\n0.5\n").unwrap();
    let o = qc(&["condition", "fmv", "--field", "const 1", "--eps0", "0.5", "--grid", grid.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn beltrami_subcommands() {
    let o = qc(&["beltrami", "coeff", "--map", "radial:0.5", "--z", "0.3,0.4"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert!((v["K"].as_f64().unwrap() - 2.0).abs() < 1e-6);

    let o = qc(&["beltrami", "reflect", "--mu", "mu-radial 0.5", "--map", "radial:0.5", "--z", "1.5,-0.5"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    for k in 0..2 {
        let a = v["mu_F"][k].as_f64().unwrap();
        let b = v["mu_of_F"][k].as_f64().unwrap();
        assert!((a - b).abs() < 1e-6);
    }
    assert_eq!(qc(&["beltrami", "reflect", "--mu", "mu-radial 0.5", "--z", "0.5,0"]).status.code(), Some(1));
    assert_eq!(qc(&["beltrami", "bounds", "--mu", "mu-radial 0.5"]).status.code(), Some(0));
}

#[test]
fn remaining_subcommands_run() {
    for args in [
        vec!["condition", "ballmean", "--field", "power p=1", "--eps0", "0.5"],
        vec!["condition", "weighted", "--field", "const 1", "--eps0", "0.25", "--weight", "unit"],
        vec!["condition", "boundary", "--mu", "mu-radial 0.5", "--eps0", "0.5"],
        vec!["certificate", "ballmean", "--field", "const 1", "--C", "2", "--eps0", "0.5"],
        vec!["certificate", "cor3", "--C", "7", "--eps0", "0.5"],
        vec!["certificate", "cor3", "--field", "const 1", "--C", "7", "--eps0", "0.5"],
        vec!["certificate", "interior", "--field", "const 1", "--eps0", "0.5"],
        vec!["verify", "exponent", "--map", "radial:0.25"],
    ] {
        let o = qc(&args);
        assert_eq!(o.status.code(), Some(0), "{args:?}: {}", String::from_utf8_lossy(&o.stderr));
    }
}
