use serde_json::Value;

use bimon::cli::run_command;

fn run(args: &str) -> (i32, Value) {
    let out = run_command(args.split_whitespace());
    let v = serde_json::from_str(&out.stdout).unwrap_or_else(|e| panic!("{}: {}", e, out.stdout));
    (out.code, v)
}

#[test]
fn anti_involution_on_wreath_passes() {
    let (code, v) = run("check anti-involution --category wreath:2 --max-size 3 --samples 500 --seed 42");
    assert_eq!(code, 0);
    assert_eq!(v["passed"], true);
    assert_eq!(v["instance"], "wreath:2");
    assert_eq!(v["spec"]["seed"], 42);
}

#[test]
fn gl_member_reports_membership() {
    let out = run_command(["gl", "member", "--category", "finite-sets", "--matrix", "[[1,1],[0,1]]"]);
    assert_eq!(out.code, 0);
    let v: Value = serde_json::from_str(&out.stdout).unwrap();
    assert_eq!(v["member"], true);
    let out = run_command(["gl", "member", "--category", "finite-sets", "--matrix", "[[1,1],[1,1]]"]);
    let v: Value = serde_json::from_str(&out.stdout).unwrap();
    assert_eq!(v["member"], false);
}

#[test]
fn bar_tau_reverses_a_one_by_one_chain() {
    let out = run_command(["bar", "tau", "--category", "finite-sets", "--n", "1", "--q", "2", "--chain", "[[2]],[[3]]"]);
    assert_eq!(out.code, 0, "{}", out.stdout);
    let v: Value = serde_json::from_str(&out.stdout).unwrap();
    assert_eq!(v["diagonal"], serde_json::json!([[[3]], [[2]]]));
    assert_eq!(v["gl"], serde_json::json!([false, false]));
}

#[test]
fn missing_anti_involution_is_a_capability_error() {
    let (code, v) = run("check anti-involution --category bichar:3:1");
    assert_eq!(code, 2);
    assert_eq!(v["error"]["kind"], "capability");
}

#[test]
fn unknown_instance_and_bad_flags_exit_two() {
    let (code, v) = run("check bimonoidal --category nonsense");
    assert_eq!(code, 2);
    assert!(v["error"]["kind"].is_string());
    let (code, v) = run("check bimonoidal --samples many");
    assert_eq!(code, 2);
    assert_eq!(v["error"]["kind"], "usage");
    let (code, _) = run("check nonsense");
    assert_eq!(code, 2);
}

#[test]
fn q_must_match_chain_length() {
    let (code, _) = run("bar tau --category finite-sets --q 3 --chain [[2]],[[3]]");
    assert_eq!(code, 2);
}

#[test]
fn build_then_validate_round_trips_through_a_file() {
    let dir = std::env::temp_dir().join(format!("bimon-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("simplex.json");
    let out = run_command([
        "bar",
        "build",
        "--category",
        "wedge:2",
        "--chain",
        "[[[[1]]]],[[[[0]]]]",
        "--json",
        path.to_str().unwrap(),
    ]);
    assert_eq!(out.code, 0, "{}", out.stdout);
    let (code, v) = run(&format!("bar validate --category wedge:2 --simplex {}", path.display()));
    assert_eq!(code, 0, "{}", v);
    assert_eq!(v["passed"], true);
    let (code, v) = run(&format!("bar face --category wedge:2 --i 1 --simplex {}", path.display()));
    assert_eq!(code, 0, "{}", v);
    assert_eq!(v["simplex"]["q"], 1);
    std::fs::remove_dir_all(dir).ok();
}

#[test]
fn non_gl_chains_are_refused_by_build() {
    let (code, v) = run("bar build --category finite-sets --chain [[2]]");
    assert_eq!(code, 2);
    assert_eq!(v["error"]["kind"], "invalid");
    assert!(v["error"]["message"].as_str().unwrap().contains("not in GL"));
}

#[test]
fn mutations_are_all_detected() {
    let (code, v) = run("check mutations --samples 100");
    assert_eq!(code, 0);
    let laws = v["suites"][0]["laws"].as_array().unwrap();
    assert_eq!(laws.len(), 6);
    assert!(laws.iter().all(|l| l["passed"] == true));
}

#[test]
fn classical_check_needs_a_discrete_instance() {
    let (code, _) = run("check classical --category discrete:Z --samples 50");
    assert_eq!(code, 0);
    let (code, v) = run("check classical --category finite-sets");
    assert_eq!(code, 2);
    assert_eq!(v["error"]["kind"], "capability");
}

#[test]
fn reports_are_reproducible() {
    let a = run_command("check bar --category wreath:3 --samples 40".split_whitespace());
    let b = run_command("check bar --category wreath:3 --samples 40".split_whitespace());
    assert_eq!(a, b);
}

#[test]
fn pi0_and_export_commands_respond() {
    let (code, v) = run("pi0 matrix --category wedge:2 --matrix [[[[0,1]],[]],[[],[[1]]]]");
    assert_eq!(code, 0, "{}", v);
    let (code, v) = run("export instances");
    assert_eq!(code, 0);
    assert_eq!(v["bundled"].as_array().unwrap().len(), 15);
    let (code, v) = run("export instance --category monomial:4 --max-size 1");
    assert_eq!(code, 0);
    assert_eq!(v["anti_involution"], true);
}
