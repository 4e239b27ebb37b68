use std::path::Path;
use std::process::{Command, Output};

fn nilact(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_nilact")).current_dir(env!("CARGO_MANIFEST_DIR")).args(args).output().unwrap()
}

fn code(o: &Output) -> i32 {
    o.status.code().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn shipped_scenario_passes() {
    let o = nilact(&["suite", "--scenario", "scenarios/d4_inversion.scn", "--format", "json"]);
    assert_eq!(code(&o), 0);
    let out = stdout(&o);
    assert_eq!(out.lines().count(), 3);
    for line in out.lines() {
        let v: serde_json::Value = serde_json::from_str(line).unwrap();
        assert_eq!(v["pass"], true);
        assert_eq!(v["falsification"], false);
    }
}

#[test]
fn shipped_scenario_shape() {
    let s = nilact::harness::load_scenario(Path::new(env!("CARGO_MANIFEST_DIR")).join("scenarios/d4_inversion.scn"))
        .unwrap();
    assert_eq!((s.groups.len(), s.actions.len(), s.checks.len()), (1, 1, 3));
}

#[test]
fn input_errors_exit_3() {
    for f in ["tests/fixtures/non_associative.scn", "tests/fixtures/unknown_check.scn", "tests/fixtures/missing.scn"] {
        let o = nilact(&["suite", "--scenario", f]);
        assert_eq!(code(&o), 3, "{f}");
        assert!(o.stdout.is_empty());
    }
    let err = String::from_utf8(nilact(&["suite", "--scenario", "tests/fixtures/non_associative.scn"]).stderr).unwrap();
    assert!(err.contains("not associative"), "{err}");
    assert_eq!(code(&nilact(&["h1", "--instance", "no_such_instance"])), 3);
    assert_eq!(code(&nilact(&["h1"])), 3);
}

#[test]
fn expected_hypothesis_failure_exits_0() {
    let o = nilact(&["suite", "--scenario", "tests/fixtures/expected_hypothesis_fail.scn"]);
    assert_eq!(code(&o), 0, "{}", stdout(&o));
}

#[test]
fn wrong_expectation_exits_1() {
    let dir = std::env::temp_dir().join(format!("nilact-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("wrong.scn");
    std::fs::write(
        &path,
        r#"{"id": "wrong", "groups": [{"id": "C2", "builtin": "cyclic", "n": 2}, {"id": "C4", "builtin": "cyclic", "n": 4}],
            "actions": [{"id": "inv", "actor": "C2", "target": "C4", "gens": [1], "images": ["inv"]}],
            "checks": [{"check": "h1", "action": "inv", "classes": 3}, {"check": "lemma1", "action": "inv"}]}"#,
    )
    .unwrap();
    let o = nilact(&["suite", "--scenario", path.to_str().unwrap()]);
    assert_eq!(code(&o), 1);
    assert!(stdout(&o).contains("2 checks, 1 passed, 1 failed"));
}

#[test]
fn subcommands() {
    let o = nilact(&["h1", "--instance", "c2_inv_c4", "--format", "json"]);
    assert_eq!(code(&o), 0);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["classes"].as_array().unwrap().len(), 2);

    let o = nilact(&["complements", "--instance", "c2_swap_v4"]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).contains("2 complements in 1 N-classes"));

    let o = nilact(&["decompose", "--instance", "c6_inv_c6", "--format", "json"]);
    assert_eq!(code(&o), 0);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["shared_primes"], serde_json::json!([2, 3]));

    let o = nilact(&["verify", "prop5", "--instance", "c6_inv_c6", "--format", "json"]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).lines().all(|l| l.contains(r#""theorem":"prop5""#)));

    let o = nilact(&["catalog", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert!(v.as_array().unwrap().len() >= 20);
}

#[test]
fn budget_exhaustion_is_a_failure_not_a_crash() {
    let o = nilact(&["h1", "--instance", "c3_inner_heis3", "--budget", "5"]);
    assert_eq!(code(&o), 1);
}
