use std::process::{Command, Output};

use ladderops_core::verify::{registry, REPORT_SCHEMA};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ladderops"))
        .args(args)
        .env_remove("LADDEROPS_N_MAX")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

#[test]
fn show_bc2_example() {
    let o = run(&["show", "bc2r", "1", "0"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).trim(), "1 - (a+b+2g+3)/(2a+2g+3) * xi");
}

#[test]
fn show_in_converted_chart() {
    let o = run(&["show", "bc2r", "1", "0", "--chart", "xy"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).trim(), "1 - (a+b+2g+3)/(2a+2g+3) * x - (a+b+2g+3)/(2a+2g+3) * y");
    assert_eq!(run(&["show", "cqz", "2", "--chart", "xy"]).status.code(), Some(2));
}

#[test]
fn apply_lowering_operator() {
    let o = run(&["apply", "Dx+Dy", "jackz", "1", "0"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).trim(), "2");
}

#[test]
fn verify_single_identity() {
    let o = run(&["verify", "4.10", "--n-max", "6"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    let passes: Vec<&str> = text.lines().filter(|l| l.starts_with("pass")).collect();
    assert_eq!(passes.len(), 7, "{text}");
    for (n, line) in passes.iter().enumerate() {
        assert!(line.contains("4.10") && line.contains(&format!("n={n} ")), "{line}");
    }
}

#[test]
fn env_var_sets_default_cap() {
    let o = Command::new(env!("CARGO_BIN_EXE_ladderops"))
        .args(["verify", "4.10"])
        .env("LADDEROPS_N_MAX", "2")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).lines().filter(|l| l.starts_with("pass")).count(), 3);
    let o = Command::new(env!("CARGO_BIN_EXE_ladderops"))
        .args(["verify", "4.10", "--n-max", "1"])
        .env("LADDEROPS_N_MAX", "2")
        .output()
        .unwrap();
    assert_eq!(stdout(&o).lines().filter(|l| l.starts_with("pass")).count(), 2);
}

#[test]
fn mutated_run_fails_and_names_index() {
    let o = run(&["verify", "6.02", "--n-max", "2", "--mutate"]);
    assert_eq!(o.status.code(), Some(1));
    let text = stdout(&o);
    assert!(text.lines().any(|l| l.starts_with("FAIL") && l.contains("6.02") && l.contains("n=1")), "{text}");
}

#[test]
fn usage_and_parse_errors_exit_two() {
    let o = run(&["apply", "x^(1/2)", "jackz", "1", "0"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("column 5"));
    assert_eq!(run(&["show", "nosuch", "1"]).status.code(), Some(2));
    assert_eq!(run(&["verify", "9.99"]).status.code(), Some(2));
    assert_eq!(run(&["frobnicate"]).status.code(), Some(2));
}

#[test]
fn numeric_commands() {
    let o = run(&["numcheck", "4.10", "--samples", "10"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("pass"));
    assert_eq!(run(&["numcheck", "4.10", "--samples", "10", "--mutate"]).status.code(), Some(1));
    let o = run(&["limits"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).lines().count(), 6);
    assert_eq!(run(&["omega-rank", "5"]).status.code(), Some(0));
}

#[test]
fn expand_jack_lists_coefficients() {
    let o = run(&["expand-jack", "2", "1"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    // (m, l) with l <= 1 and l <= m <= 2
    assert_eq!(text.lines().count(), 5);
    assert!(text.starts_with("c[2,1;0,0] = 1\n"), "{text}");
}

#[test]
fn verify_all_json_report() {
    let dir = std::env::temp_dir().join(format!("ladderops-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("report.json");
    let o = run(&["verify-all", "--n-max", "2", "--json", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    let v: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(v["schema"], REPORT_SCHEMA);
    assert_eq!(v["config"]["n_max"], 2);
    let ids: Vec<&str> = v["identities"].as_array().unwrap().iter().map(|r| r["id"].as_str().unwrap()).collect();
    let expected: Vec<&str> = registry().iter().map(|c| c.id).collect();
    assert_eq!(ids, expected);
    for r in v["identities"].as_array().unwrap() {
        for key in ["chart", "notes", "outcomes", "passed", "failed", "errors", "millis"] {
            assert!(r.get(key).is_some(), "missing {key}");
        }
        assert!(r["outcomes"].as_array().unwrap().iter().all(|o| o["status"] == "pass"));
    }
    assert_eq!(v["totals"]["identities"], expected.len());
    std::fs::remove_dir_all(&dir).unwrap();
}
