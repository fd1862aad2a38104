use qrk::cli::{run_with, EXIT_FAIL, EXIT_OK, EXIT_USAGE};

fn run(args: &[&str]) -> (i32, String, String) {
    run_env(args, None)
}

fn run_env(args: &[&str], env: Option<&str>) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("qrk").chain(args.iter().copied());
    let code = run_with(argv, env, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

#[test]
fn verify_passes_with_exit_zero() {
    let (code, out, _) = run(&["verify", "eq53", "--order", "20"]);
    assert_eq!(code, EXIT_OK);
    assert!(out.starts_with("eq53"), "{out}");
    assert!(out.contains("pass"));
}

#[test]
fn verify_json_has_the_stable_schema() {
    let (code, out, _) = run(&["verify", "eq2", "--json"]);
    assert_eq!(code, EXIT_OK);
    let v: serde_json::Value = serde_json::from_str(out.trim()).unwrap();
    let keys: Vec<&str> = v.as_object().unwrap().keys().map(String::as_str).collect();
    for k in ["id", "status", "mode", "params", "first_failure", "witness", "elapsed_ms"] {
        assert!(keys.contains(&k), "{k} missing from {out}");
    }
    assert_eq!(keys.len(), 7);
    assert!(out.starts_with("{\"id\":\"eq2\",\"status\":\"pass\",\"mode\":\"finite\",\"params\":"));
    assert_eq!(v["elapsed_ms"], serde_json::Value::Null);
    let (_, again, _) = run(&["verify", "eq2", "--json"]);
    assert_eq!(out, again);
    let (_, timed, _) = run(&["verify", "eq2", "--json", "--timing"]);
    let t: serde_json::Value = serde_json::from_str(timed.trim()).unwrap();
    assert!(t["elapsed_ms"].is_u64());
}

#[test]
fn unknown_identity_and_bad_usage_exit_two() {
    let (code, out, err) = run(&["verify", "nosuch"]);
    assert_eq!(code, EXIT_USAGE);
    assert!(out.is_empty());
    assert!(err.contains("nosuch"));
    let (code, _, err) = run(&["frobnicate"]);
    assert_eq!(code, EXIT_USAGE);
    assert!(err.contains("Usage"), "{err}");
    let (code, _, _) = run(&["verify", "eq2", "--bogus"]);
    assert_eq!(code, EXIT_USAGE);
    let (code, _, _) = run(&["qnt", "fermat", "--p", "8", "--a-max", "3"]);
    assert_eq!(code, EXIT_USAGE);
    let (code, _, _) = run(&["partition"]);
    assert_eq!(code, EXIT_USAGE);
    let (code, _, _) = run_env(&["eval", "x"], Some("ten"));
    assert_eq!(code, EXIT_USAGE);
}

#[test]
fn help_goes_to_stdout() {
    let (code, out, err) = run(&["--help"]);
    assert_eq!(code, EXIT_OK);
    assert!(out.contains("verify-all"));
    assert!(err.is_empty());
}

#[test]
fn chi_emit_prints_the_canonical_polynomial() {
    let (code, out, _) = run(&["qnt", "chi", "--p", "5", "--emit"]);
    assert_eq!(code, EXIT_OK);
    assert_eq!(out, "-4 + 3*y + y^3 - 2*y^5 + y^6\n");
    let (_, out, _) = run(&["qnt", "chi", "--p", "3", "--emit"]);
    assert_eq!(out, "-2 + y\n");
}

#[test]
fn qnt_subcommands() {
    let (code, out, _) = run(&["qnt", "fermat", "--p", "5", "--a-max", "10"]);
    assert_eq!(code, EXIT_OK);
    assert_eq!(out.lines().count(), 10);
    assert_eq!(run(&["qnt", "wilson", "--p", "7"]).0, EXIT_OK);
    assert_eq!(run(&["qnt", "euler", "--m", "9", "--a", "4"]).0, EXIT_OK);
    assert_eq!(run(&["qnt", "euler", "--m", "9", "--a", "3"]).0, EXIT_USAGE);
    let (code, out, _) = run(&["qnt", "special", "--p", "13"]);
    assert_eq!(code, EXIT_OK, "{out}");
}

#[test]
fn partition_subcommand() {
    let (code, out, _) = run(&["partition", "--check5", "--check7", "--scan-prime", "30"]);
    assert_eq!(code, EXIT_OK);
    assert!(out.contains("partitions5"));
    assert!(out.contains("partitions7"));
    assert!(out.contains("n = 21: c_n = 30, d_n = 31"), "{out}");
    let (_, out, _) = run(&["partition", "--scan-prime", "20"]);
    assert!(out.contains("2 <= n <= 20"));
}

#[test]
fn eval_prints_series_and_reports_parse_errors() {
    let (code, out, _) = run(&["eval", "1/(1-x)", "--order", "3"]);
    assert_eq!(code, EXIT_OK);
    assert_eq!(out, "1 + x + x^2 + x^3 + O(x^4)\n");
    let (code, out, _) = run(&["eval", "qnum(3)", "--order", "0"]);
    assert_eq!(code, EXIT_OK);
    assert_eq!(out, "1 + q + q^2 + O(x)\n");
    let (code, _, err) = run(&["eval", "qbinom(2"]);
    assert_eq!(code, EXIT_USAGE);
    assert!(err.contains("position 8"), "{err}");
    let (code, _, err) = run(&["eval", "sum(k, 0, inf, x)", "--order", "3"]);
    assert_eq!(code, EXIT_FAIL);
    assert!(err.contains("valuation"), "{err}");
}

#[test]
fn default_order_comes_from_the_environment() {
    let (_, out, _) = run_env(&["eval", "1/(1-x)"], Some("2"));
    assert_eq!(out, "1 + x + x^2 + O(x^3)\n");
    let (_, out, _) = run_env(&["verify", "eq7"], Some("6"));
    assert!(out.contains("x^0..x^6"), "{out}");
    // Finite ranges keep their defaults.
    let (_, out, _) = run_env(&["verify", "eq2"], Some("6"));
    assert!(out.contains("1 <= N <= 20"), "{out}");
}

#[test]
fn list_shows_every_record() {
    let (code, out, _) = run(&["list"]);
    assert_eq!(code, EXIT_OK);
    assert_eq!(out.lines().count(), qrk::catalog::registry().len());
    let (_, json, _) = run(&["list", "--json"]);
    let v: serde_json::Value = serde_json::from_str(json.trim()).unwrap();
    assert_eq!(v.as_array().unwrap().len(), qrk::catalog::registry().len());
}
