use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_genocchi")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

#[test]
fn verify_single_check_passes() {
    let o = run(&["verify", "seidel-figure1"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.starts_with("PASS seidel-figure1"), "{out}");
    assert!(out.contains("198272"));
}

#[test]
fn verify_master_at_three() {
    let o = run(&["verify", "thm2.1-master", "--max-n", "3"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
}

#[test]
fn verify_cycles_at_four() {
    let o = run(&["verify", "thm2.6-cycles", "--max-n", "4"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(run(&["verify", "no-such-check"]).status.code(), Some(2));
    assert_eq!(run(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(run(&["poly", "Q", "2"]).status.code(), Some(2));
    assert_eq!(run(&["cf", "nothing"]).status.code(), Some(2));
}

#[test]
fn budget_overrun_exits_two() {
    let o = run(&["verify", "thm1.1-counts", "--budget", "4"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stdout(&o).starts_with("SKIP"));
}

#[test]
fn json_reports_round_trip() {
    let dir = std::env::temp_dir().join(format!("genocchi-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("reports.json");
    let o = run(&["verify", "all", "--parallel", "--json", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    let text = std::fs::read_to_string(&path).unwrap();
    let v: serde_json::Value = serde_json::from_str(&text).unwrap();
    let list = v.as_array().unwrap();
    assert_eq!(list.len(), 32);
    assert!(list.iter().all(|r| r["status"] == "pass"));
    assert_eq!(list[0]["check"], "seidel-figure1");
    let again = serde_json::to_string_pretty(&v).unwrap() + "\n";
    assert_eq!(again, text);
    std::fs::remove_dir_all(&dir).ok();
}

#[test]
fn poly_with_selected_variables() {
    assert_eq!(stdout(&run(&["poly", "X", "2", "--vars", "t"])).trim(), "1 + 6*t + t^2");
    assert_eq!(stdout(&run(&["poly", "X", "1"])).trim(), "a*abar*b*bbar + a*b*y*t");
}

#[test]
fn enumerate_xhat_three() {
    let out = stdout(&run(&["enumerate", "Xhat", "3"]));
    let words: Vec<&str> = out.lines().take(7).collect();
    assert_eq!(
        words,
        ["1 2 3 4 5 6", "1 2 4 6 3 5", "2 3 4 6 1 5", "2 3 6 1 4 5", "2 4 1 3 5 6", "2 4 6 1 3 5", "2 6 1 3 4 5"]
    );
    assert!(out.contains("7 members"));
}

#[test]
fn cf_median_genocchi() {
    let out = stdout(&run(&["cf", "mediangenocchi", "--order", "5"]));
    let nums: Vec<&str> = out.lines().map(|l| l.split(": ").nth(1).unwrap()).collect();
    assert_eq!(nums, ["1", "2", "8", "56", "608", "9440"]);
}

#[test]
fn bijection_phi_and_back() {
    let word = "2 6 8 1 4 7 14 9 10 12 3 5 11 15 16 13";
    let out = stdout(&run(&["bijection", "phi", word]));
    assert_eq!(out.lines().collect::<Vec<_>>(), ["UUL1DUDL2D", "(0,1)(0,1)(0,2)(1,1)(1,1)(0,0)(0,1)(1,0)"]);
    let back = run(&["bijection", "phi-inverse", "UUL1DUDL2D", "(0,1)(0,1)(0,2)(1,1)(1,1)(0,0)(0,1)(1,0)"]);
    assert_eq!(stdout(&back).trim(), word);
}

#[test]
fn orbit_prints_members_and_sum() {
    let out = stdout(&run(&["orbit", "normalizer", "1 2 4 6 3 5"]));
    assert_eq!(
        out.lines().collect::<Vec<_>>(),
        ["1 2 4 5 6 3", "1 2 4 6 3 5", "1 2 5 6 3 4", "1 2 6 3 4 5", "orbit sum: p^2 + 2*p*q + q^2"]
    );
}

#[test]
fn gamma_of_x_in_t() {
    let out = stdout(&run(&["gamma", "X", "4", "--vars", "t"]));
    assert_eq!(out.lines().collect::<Vec<_>>(), ["gamma_0: 1", "gamma_1: 108", "gamma_2: 160"]);
}
