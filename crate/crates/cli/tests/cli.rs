use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use limspec::NearbyVariant;
use limspec_cli::{cmd_nearby, cmd_sp, CliError, Report};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_limspec"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn fixture(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("../core/fixtures").join(name)
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

fn vars(names: &[&str]) -> Vec<String> {
    names.iter().map(|s| s.to_string()).collect()
}

#[test]
fn cusp_spectrum_text() {
    let o = run(&["sp", "x^2+y^3", "--vars", "x,y"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.contains("Sp          t^(5/6) + t^(7/6)\n"), "{out}");
    assert!(out.contains("mu          2\n"));
    assert!(out.contains("symmetric   true\n"));
}

#[test]
fn cusp_spectrum_json_matches_golden() {
    let o = run(&["sp", "x^2 + y^3", "--vars", "x,y", "--json"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), include_str!("golden/cusp_sp.json"));
}

#[test]
fn quadric_in_three_variables() {
    let r = cmd_sp("x^2+y^2+z^2", &vars(&["x", "y", "z"]), None).unwrap();
    assert_eq!(r.spectrum, "t^(3/2)");
    assert_eq!(r.milnor_number, 1);
    assert!(r.symmetric);
}

#[test]
fn supplied_weights_are_used() {
    let r = cmd_sp("x^3 + x*y^3", &vars(&["x", "y"]), Some("1/3,2/9")).unwrap();
    assert!(!r.weights_inferred);
    assert_eq!(r.milnor_number, 7);
    assert_eq!(r.weights, ["1/3", "2/9"]);
}

#[test]
fn non_isolated_exits_2() {
    let o = run(&["sp", "x^2*y", "--vars", "x,y"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("NonIsolatedSingularity"), "{}", stderr(&o));
    assert!(stdout(&o).is_empty());
}

#[test]
fn input_errors_exit_2() {
    for args in [
        vec!["sp", "x^2 +", "--vars", "x"],
        vec!["sp", "x^2 + y^3", "--vars", "x"],
        vec!["sp", "x^2 + y^3", "--vars", "x,x"],
        vec!["sp", "x^2 + y^3", "--vars", "x,y", "--weights", "1/2"],
        vec!["sp", "x^2 + y^3", "--vars", "x,y", "--weights", "1/3,1/3"],
        vec!["sp", "x^2 + y^3", "--vars", "x,y", "--weights", "1/2,3/2"],
        vec!["sp", "x^2 + y^3 + x", "--vars", "x,y"],
        vec!["sp", "0", "--vars", "x"],
        vec!["sp", "x^2 + y^3"],
        vec!["nearby", "/nonexistent/model.json"],
        vec!["nearby", "x.json", "--variant", "sideways"],
    ] {
        let o = run(&args);
        assert_eq!(o.status.code(), Some(2), "{args:?}: {}", stderr(&o));
        assert!(stdout(&o).is_empty(), "{args:?}");
    }
}

#[test]
fn error_kinds_map_to_exit_codes() {
    assert_eq!(CliError::Input(String::new()).exit_code(), 2);
    assert_eq!(CliError::Consistency(String::new()).exit_code(), 3);
    let e = cmd_sp("x^2 + y^3", &vars(&["x", "y"]), Some("1/3,1/3")).unwrap_err();
    assert!(matches!(e, CliError::Input(ref m) if m.contains("NotWeightedHomogeneous")), "{e}");
}

#[test]
fn i2_fixture_evaluates_to_zero() {
    let o = run(&["nearby", fixture("i2_elliptic.json").to_str().unwrap(), "--json"]);
    assert_eq!(o.status.code(), Some(0));
    let Report::Nearby(r) = serde_json::from_str(&stdout(&o)).unwrap() else {
        panic!("not a nearby report")
    };
    assert!(r.class.is_empty());
    assert_eq!(r.euler_specialization, 0);
    assert_eq!(r.spectrum, "0");
}

#[test]
fn cusp_fixture_local_variant() {
    let o = run(&["nearby", fixture("cusp_local.json").to_str().unwrap(), "--variant", "local"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.contains("Sp          t^(5/6) + t^(7/6)\n"), "{out}");
    assert!(out.contains("chi         -1\n"));
}

#[test]
fn dim_flag_overrides_the_file() {
    let r = cmd_nearby(&fixture("cusp_local.json"), NearbyVariant::Local, Some(3)).unwrap();
    assert_eq!(r.dim, 3);
    // (−1)^{n−1} flips, and the twist moves by one
    assert_eq!(r.spectrum_prime, "-t^(5/6) - t^(7/6)");
    assert_eq!(r.spectrum, "-t^(11/6) - t^(13/6)");
}

#[test]
fn schema_errors_name_the_location() {
    let dir = std::env::temp_dir().join(format!("limspec-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("bad.json");
    std::fs::write(
        &path,
        r#"{"n": 2, "components": [{"id": "A", "multiplicity": 1, "kind": "vertical"}],
            "strata": [{"ids": ["A"], "cover_class": [[0, 0, "3/2", 1]]}]}"#,
    )
    .unwrap();
    let o = run(&["nearby", path.to_str().unwrap()]);
    std::fs::remove_dir_all(&dir).unwrap();
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("/strata/0/cover_class/0/2"), "{}", stderr(&o));
}

#[test]
fn unused_components_warn_on_stderr() {
    let dir = std::env::temp_dir().join(format!("limspec-cli-warn-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("model.json");
    std::fs::write(
        &path,
        r#"{"n": 1, "components": [{"id": "A", "multiplicity": 1, "kind": "vertical"},
                                 {"id": "B", "multiplicity": 2, "kind": "vertical"}],
            "strata": [{"ids": ["A"], "cover_class": [[0, 0, "0", 3]]}]}"#,
    )
    .unwrap();
    let o = run(&["nearby", path.to_str().unwrap()]);
    std::fs::remove_dir_all(&dir).unwrap();
    assert_eq!(o.status.code(), Some(0));
    assert!(stderr(&o).contains("warning: component `B` occurs in no stratum"));
    assert!(stdout(&o).contains("chi         3\n"));
}

#[test]
fn reports_round_trip_through_json() {
    let reports = [
        Report::Sp(cmd_sp("x^3 + x*y^3", &vars(&["x", "y"]), None).unwrap()),
        Report::Nearby(
            cmd_nearby(&fixture("cusp_local.json"), NearbyVariant::Local, None).unwrap(),
        ),
        Report::Check(limspec_cli::cmd_check()),
    ];
    for r in reports {
        let back: Report = serde_json::from_str(&r.to_json()).unwrap();
        assert_eq!(back, r);
    }
}

#[test]
fn check_passes_and_covers_the_grid() {
    let o = run(&["check"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    assert!(limspec_cli::corpus().len() >= 780);
    assert!(!stdout(&o).contains("FAIL"));
}
