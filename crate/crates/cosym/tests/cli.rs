//! Black-box tests of the command line interface: exit-code contract,
//! output formats, and closure of `deform` under re-ingestion.

use std::process::{Command, Output};

fn cosym(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_cosym"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn stderr(o: &Output) -> String {
    String::from_utf8_lossy(&o.stderr).into_owned()
}

#[test]
fn verify_model_passes_with_exit_zero() {
    let o = cosym(&[
        "verify", "--model", "model-frame", "--mu", "1", "--n", "1", "--points", "20",
    ]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    assert!(stdout(&o).contains("PASS"));
}

#[test]
fn verify_twisted_control_fails_with_exit_one() {
    let o = cosym(&[
        "verify", "--model", "control-twisted", "--n", "2", "--points", "20", "--format", "json",
    ]);
    assert_eq!(o.status.code(), Some(1));
    let rep: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    let failing: Vec<&str> = rep["checks"]
        .as_array()
        .unwrap()
        .iter()
        .filter(|c| c["status"] == "fail")
        .map(|c| c["check"].as_str().unwrap())
        .collect();
    assert!(failing.contains(&"kahler-leaves"), "{failing:?}");
    assert!(failing.contains(&"cr-integrability"), "{failing:?}");
}

#[test]
fn malformed_expression_is_an_input_error() {
    let dir = std::env::temp_dir().join("cosym-cli-bad");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("bad.json");
    std::fs::write(
        &path,
        r#"{"schema":1,"chart":{"n":1},"structure":{"cr_chart":{"a":["x1 + * y1"],"g":[["0.5"]]}}}"#,
    )
    .unwrap();
    let o = cosym(&["verify", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    let msg = stderr(&o);
    assert!(msg.contains("position") || msg.contains("at "), "{msg}");
}

#[test]
fn unknown_model_and_unknown_check_are_input_errors() {
    let o = cosym(&["verify", "--model", "no-such-model", "--points", "5"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("flat"), "registry should be listed");

    let o = cosym(&[
        "verify", "--model", "flat", "--points", "5", "--checks", "axioms,bogus",
    ]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("bogus"));
}

#[test]
fn check_selection_limits_the_run() {
    let o = cosym(&[
        "verify", "--model", "control-twisted", "--n", "2", "--points", "10", "--checks",
        "axioms,almost-cosymplectic",
    ]);
    // the control is a valid almost cosymplectic structure, so the
    // selected subset passes even though integrability would not
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
}

#[test]
fn list_models_names_the_registry() {
    let o = cosym(&["list-models"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    for name in [
        "flat",
        "model-frame",
        "model-global-cr",
        "control-twisted",
        "control-contact",
    ] {
        assert!(out.contains(name), "missing {name}");
    }
}

#[test]
fn estimate_kmn_marks_underdetermined_as_null() {
    let o = cosym(&[
        "estimate-kmn", "--model", "flat", "--points", "3", "--format", "json",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let rep: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    for e in rep["points"].as_array().unwrap() {
        assert_eq!(e["kappa"], 0.0);
        assert!(e["mu"].is_null());
        assert!(e["nu"].is_null());
        assert_eq!(e["underdetermined"], true);
    }
}

#[test]
fn deform_output_reingests_and_verifies() {
    let o = cosym(&[
        "deform", "--model", "model-frame", "--mu", "1", "--beta", "2", "--points", "20",
    ]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let dir = std::env::temp_dir().join("cosym-cli-deform");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("deformed.json");
    std::fs::write(&path, stdout(&o)).unwrap();

    let v = cosym(&[
        "verify", path.to_str().unwrap(), "--points", "20", "--checks",
        "axioms,almost-cosymplectic,kahler-leaves",
    ]);
    assert_eq!(v.status.code(), Some(0), "{}", stdout(&v));

    // a second deformation applied to the emitted file still works
    let o2 = cosym(&[
        "deform", path.to_str().unwrap(), "--beta", "0.5", "--points", "20",
    ]);
    assert_eq!(o2.status.code(), Some(0), "{}", stderr(&o2));
}

#[test]
fn inadmissible_deformation_is_a_check_failure() {
    let o = cosym(&[
        "deform", "--model", "model-frame", "--mu", "1", "--beta", "1 + x1",
    ]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stderr(&o).contains("rejected"));
}

#[test]
fn json_reports_are_byte_identical_across_runs() {
    let args = [
        "report", "--model", "model-global-cr", "--mu", "1.5", "--n", "2", "--points", "40",
        "--seed", "9", "--format", "json",
    ];
    let (a, b) = (cosym(&args), cosym(&args));
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
}
