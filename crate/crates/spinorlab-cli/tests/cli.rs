use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_spinorlab")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

#[test]
fn lambda_rest_spinor() {
    let o = run(&["spinor", "--kind", "lambda", "--class", "S", "--eta", "up", "--p", "0,0,0", "--m", "2", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    let v: Value = serde_json::from_slice(&o.stdout).unwrap();
    let comps = v["components"].as_array().expect("components");
    let want = [(0.0, 0.0), (0.0, 1.0), (1.0, 0.0), (0.0, 0.0)];
    for (z, (a, b)) in comps.iter().zip(want) {
        assert!((z[0].as_f64().unwrap() - a).abs() < 1e-12 && (z[1].as_f64().unwrap() - b).abs() < 1e-12, "{v}");
    }
}

#[test]
fn dirac_rest_spinor_in_standard_basis() {
    let o = run(&["spinor", "--kind", "u", "--sigma", "up", "--p", "0,0,0", "--m", "1", "--basis", "standard", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: Value = serde_json::from_slice(&o.stdout).unwrap();
    let first = &v["components"][0];
    assert!((first[0].as_f64().unwrap() - 1.0).abs() < 1e-12, "{v}");
}

#[test]
fn missing_mass_is_a_usage_error() {
    let o = run(&["spinor", "--kind", "u", "--p", "0,0,0"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn unknown_suite_is_a_usage_error() {
    assert_eq!(run(&["verify", "--suite", "nosuch"]).status.code(), Some(2));
}

#[test]
fn failing_tolerance_exits_one() {
    let o = run(&["verify", "--suite", "dirac", "--samples", "10", "--tol", "1e-300"]);
    assert_eq!(o.status.code(), Some(1));
    let v: Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["passed"], false);
}

#[test]
fn maxwell_roots_on_both_branches() {
    let o = run(&["dispersion", "--model", "maxwell", "--p", "0,0,1", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: Value = serde_json::from_slice(&o.stdout).unwrap();
    let mut re: Vec<f64> = v["roots"].as_array().unwrap().iter().map(|r| r["energy"][0].as_f64().unwrap()).collect();
    re.sort_by(f64::total_cmp);
    for (got, want) in re.iter().zip([-1.0, -1.0, 0.0, 0.0, 1.0, 1.0]) {
        assert!((got - want).abs() < 1e-12, "{re:?}");
    }
}

#[test]
fn tucker_hammer_dispersion_is_relativistic() {
    let o = run(&["dispersion", "--model", "wth", "--A", "1", "--B", "2", "--p", "1,0,0", "--m", "1", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: Value = serde_json::from_slice(&o.stdout).unwrap();
    let rows = v["roots"].as_array().unwrap();
    assert_eq!(rows[0]["degree"], 6);
    assert!(rows[1..].iter().all(|r| r["class"] == "relativistic"), "{v}");
}

#[test]
fn report_round_trips_verify_output() {
    let dir = std::env::temp_dir().join(format!("spinorlab-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("fock.json");
    let o = run(&["verify", "--suite", "fock"]);
    assert_eq!(o.status.code(), Some(0));
    std::fs::write(&path, &o.stdout).unwrap();
    let r = run(&["report", path.to_str().unwrap(), "--format", "json"]);
    assert_eq!(r.status.code(), Some(0));
    assert_eq!(stdout(&r), stdout(&o));
    let t = run(&["report", path.to_str().unwrap(), "--format", "text"]);
    assert!(stdout(&t).contains("fock.no_simultaneous"));
    std::fs::remove_dir_all(&dir).ok();
}
