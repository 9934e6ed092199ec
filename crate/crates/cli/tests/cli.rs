use std::io::Write;
use std::process::{Command, Output, Stdio};

fn ppart(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ppart")).args(args).output().unwrap()
}

fn ppart_stdin(args: &[&str], input: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_ppart"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(input.as_bytes()).unwrap();
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    assert!(o.status.success(), "stderr: {}", String::from_utf8_lossy(&o.stderr));
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn genpoly_examples() {
    assert_eq!(stdout(&ppart(&["genpoly", "rdpp", "5", "0", "--k", "1"])).trim(), "[3,6,8,6,3]");
    assert_eq!(stdout(&ppart(&["genpoly", "cdpp", "5", "0", "--k", "1"])).trim(), "[3,6,7,6,3]");
    assert_eq!(stdout(&ppart(&["genpoly", "gcspp", "4", "0", "--k", "1"])).trim(), "[2,3,3,2]");
    let u2 = ppart(&["genpoly", "tspp", "7", "0", "--filter", "gamma", "--k", "2", "--stat", "u"]);
    assert_eq!(stdout(&u2).trim(), "[0,0,3,6,8,6,3]");
}

#[test]
fn enumerate_counts() {
    let rho = ppart(&["enumerate", "cspp", "4", "0", "--filter", "rho_tilde", "--count"]);
    assert_eq!(stdout(&rho).trim(), "10");
    assert_eq!(stdout(&ppart(&["enumerate", "rdpp", "7", "0", "--count"])).trim(), "646");
    assert_eq!(stdout(&ppart(&["enumerate", "tspp", "3", "0", "--count"])).trim(), "7");
}

#[test]
fn enumerate_output_is_job_stable() {
    for class in ["tspp", "cspp", "dpp", "hpcspp"] {
        let one = stdout(&ppart(&["enumerate", class, "4", "1", "--jobs", "1"]));
        let four = stdout(&ppart(&["enumerate", class, "4", "1", "--jobs", "4"]));
        assert!(!one.is_empty());
        assert_eq!(one, four, "{class}");
    }
}

#[test]
fn map_round_trips() {
    let cspp = stdout(&ppart(&["enumerate", "cspp", "3", "1"]));
    for map in ["gamma_bij", "tbk:2", "rho"] {
        let out = ppart_stdin(&["map", map, "--roundtrip"], &cspp);
        assert_eq!(stdout(&out), cspp, "{map}");
    }
    let rho = stdout(&ppart(&["enumerate", "cspp", "4", "0", "--filter", "rho_tilde"]));
    let image = stdout(&ppart_stdin(&["map", "theta"], &rho));
    assert!(image.lines().all(|l| l.contains("\"kind\":\"domino\"")));
    assert_eq!(stdout(&ppart_stdin(&["map", "theta"], &image)), rho);

    let dpp = stdout(&ppart(&["enumerate", "rdpp", "5", "0"]));
    assert_eq!(stdout(&ppart_stdin(&["map", "phi", "--roundtrip"], &dpp)), dpp);
}

#[test]
fn map_rejects_wrong_input() {
    let tspp = stdout(&ppart(&["enumerate", "tspp", "2", "0"]));
    assert_eq!(ppart_stdin(&["map", "theta"], &tspp).status.code(), Some(1));
    assert_eq!(ppart_stdin(&["map", "theta"], "{not json").status.code(), Some(1));
    assert_eq!(ppart(&["map", "nonsense"]).status.code(), Some(2));
}

#[test]
fn det_and_refvalues() {
    let det = stdout(&ppart(&["det", "r_o", "3", "--format", "json"]));
    let v: serde_json::Value = serde_json::from_str(&det).unwrap();
    assert_eq!(v["det"], serde_json::json!([3, 6, 8, 6, 3]));
    assert_eq!(v["matrix"].as_array().unwrap().len(), 3);
    let ab = stdout(&ppart(&["det", "andrews-burge", "3", "1", "2", "--format", "json"]));
    let v: serde_json::Value = serde_json::from_str(&ab).unwrap();
    assert_eq!(v["equal"], true);
    assert!(stdout(&ppart(&["det", "c_e", "3", "--at-one"])).contains("det = 140"));

    let refs = stdout(&ppart(&["refvalues", "--upto", "9", "--format", "csv"]));
    assert!(refs.lines().any(|l| l.starts_with("9,") && l.contains(",646,")));
}

#[test]
fn verify_exit_codes() {
    let ok = ppart(&["verify", "theorem-results", "--limit", "4"]);
    assert_eq!(ok.status.code(), Some(0));
    assert!(stdout(&ok).contains("0 fail"));
    let bad = ppart(&["verify", "statistics", "--limit", "3", "--inject-fault"]);
    assert_eq!(bad.status.code(), Some(1));
    let json = stdout(&ppart(&["verify", "determinants", "--limit", "3", "--format", "json"]));
    let v: serde_json::Value = serde_json::from_str(&json).unwrap();
    assert!(v["checks"].as_array().unwrap().iter().all(|c| c["status"] == "pass"));
}

#[test]
fn conjectures_are_reported() {
    let out = stdout(&ppart(&["conjecture", "detforms", "--limit", "3", "--format", "json"]));
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert!(v["checks"].as_array().unwrap().iter().all(|c| c["status"] == "reported"));
    assert_eq!(ppart(&["conjecture", "mrr6", "--limit", "5"]).status.code(), Some(0));
}

#[test]
fn usage_errors() {
    assert_eq!(ppart(&["enumerate", "tspp", "3", "0", "--filter", "rho_tilde"]).status.code(), Some(2));
    assert_eq!(ppart(&["enumerate", "rdpp", "3", "0", "--limit", "12"]).status.code(), Some(2));
    assert_eq!(ppart(&["det", "r_o"]).status.code(), Some(2));
    assert_eq!(ppart(&["frobnicate"]).status.code(), Some(2));
    // Past the size limit is a library error, not a usage error.
    assert_eq!(ppart(&["enumerate", "cspp", "5", "3", "--count"]).status.code(), Some(1));
}
