use std::io::Write;
use std::process::{Command, Output, Stdio};

use serde_json::Value;

fn nutkit_env(args: &[&str], stdin: &str, env: &[(&str, &str)]) -> Output {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_nutkit"));
    cmd.args(args).stdin(Stdio::piped()).stdout(Stdio::piped()).stderr(Stdio::piped());
    cmd.env_remove("NUTKIT_JOBS");
    for (k, v) in env {
        cmd.env(k, v);
    }
    let mut child = cmd.spawn().unwrap();
    child.stdin.take().unwrap().write_all(stdin.as_bytes()).unwrap();
    child.wait_with_output().unwrap()
}

fn nutkit(args: &[&str], stdin: &str) -> Output {
    nutkit_env(args, stdin, &[])
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json_lines(o: &Output) -> Vec<Value> {
    stdout(o).lines().map(|l| serde_json::from_str(l).unwrap()).collect()
}

#[test]
fn rose_window_analysis() {
    let g = nutkit(&["generate", "rose-window", "5", "1", "2"], "");
    assert!(g.status.success());
    let a = nutkit(&["analyze"], &stdout(&g));
    let r = &json_lines(&a)[0];
    assert_eq!(r["schema_version"], 1);
    assert_eq!(r["is_nut"], true);
    assert_eq!((r["signature"]["o_v"].as_u64(), r["signature"]["o_e"].as_u64()), (Some(2), Some(3)));
    assert_eq!(r["kernel"].as_array().unwrap().len(), 10);
}

#[test]
fn census_stats() {
    let e = nutkit(&["enumerate", "-n", "7", "--nut"], "");
    let s = nutkit(&["stats", "--group-by", "ov,oe"], &stdout(&e));
    assert_eq!(stdout(&s), "o_v,o_e,graphs,connected,nut\n3,4,1,1,1\n4,5,1,1,1\n4,6,1,1,1\n");
    let all = nutkit(&["enumerate", "-n", "5"], "");
    assert_eq!(stdout(&all).lines().count(), 21);
    let s = nutkit(&["stats", "--group-by", "n"], &stdout(&all));
    assert_eq!(stdout(&s), "n,graphs,connected,nut\n5,21,21,0\n");
}

#[test]
fn filter_passes_lines_through() {
    let input = "Bw\nGzK[]K\nIhfB@g]ao\n";
    let nut = nutkit(&["filter", "--nut"], input);
    assert_eq!(stdout(&nut), "GzK[]K\nIhfB@g]ao\n");
    let vt = nutkit(&["filter", "--nut", "--vt"], input);
    assert_eq!(stdout(&vt), "GzK[]K\n");
    // K2 is nonsingular; C8 has a full vector in its two-dimensional kernel
    let c8 = stdout(&nutkit(&["generate", "cycle", "8"], ""));
    let core = nutkit(&["filter", "--core"], &format!("A_\n{c8}"));
    assert_eq!(stdout(&core), c8);
    assert_eq!(nutkit(&["filter"], input).status.code(), Some(2));
}

#[test]
fn parallel_output_keeps_input_order() {
    let input = stdout(&nutkit(&["enumerate", "-n", "7"], ""));
    let serial = nutkit(&["analyze"], &input);
    let parallel = nutkit(&["analyze", "--jobs", "4"], &input);
    let from_env = nutkit_env(&["analyze"], &input, &[("NUTKIT_JOBS", "3")]);
    assert!(serial.status.success());
    assert_eq!(serial.stdout, parallel.stdout);
    assert_eq!(serial.stdout, from_env.stdout);
    let graphs: Vec<String> = json_lines(&serial).iter().map(|r| r["graph6"].as_str().unwrap().to_string()).collect();
    assert_eq!(graphs, input.lines().collect::<Vec<_>>());
}

#[test]
fn malformed_lines() {
    let strict = nutkit(&["analyze"], "Bw\n~~\nA_\n");
    assert_eq!(strict.status.code(), Some(1));
    assert_eq!(json_lines(&strict).len(), 1);
    assert!(String::from_utf8_lossy(&strict.stderr).contains("line 2"));
    let lenient = nutkit(&["analyze", "--lenient"], "Bw\n~~\nA_\n");
    assert!(lenient.status.success());
    assert_eq!(json_lines(&lenient).len(), 2);
    let sparse = nutkit(&["analyze"], ":Fa@x^\n");
    assert!(String::from_utf8_lossy(&sparse.stderr).contains("sparse6"));
}

#[test]
fn file_input_and_pretty_table() {
    let mut f = tempfile::NamedTempFile::new().unwrap();
    writeln!(f, ">>graph6<<GzK[]K").unwrap();
    let path = f.path().to_str().unwrap();
    let o = nutkit(&["analyze", "--pretty", path], "");
    let text = stdout(&o);
    assert!(text.starts_with("graph6"));
    assert!(text.contains("(1, 2, 16)"));
    assert_eq!(nutkit(&["analyze", "/no/such/file"], "").status.code(), Some(2));
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(nutkit(&["generate", "no-such-family"], "").status.code(), Some(2));
    assert_eq!(nutkit(&["generate", "antiprism", "2"], "").status.code(), Some(2));
    assert_eq!(nutkit(&["enumerate", "-n", "9"], "").status.code(), Some(2));
    assert_eq!(nutkit(&["verify", "two-orbit-prime-exclusion", "--n-max", "11"], "").status.code(), Some(2));
    assert_eq!(nutkit(&["frobnicate"], "").status.code(), Some(2));
}

#[test]
fn constructions() {
    let c5 = stdout(&nutkit(&["generate", "cycle", "5"], ""));
    let m = nutkit(&["construct", "multiplier", "-k", "3", "--check-nut", "--json"], &c5);
    let r = &json_lines(&m)[0];
    assert_eq!((r["order"].as_u64(), r["output_nut"].as_bool()), (Some(15), Some(true)));

    let two = nutkit(&["construct", "two-orbit-nut", "9"], "");
    let a = json_lines(&nutkit(&["analyze"], &stdout(&two)))[0].clone();
    assert_eq!((a["is_nut"].as_bool(), a["signature"]["o_v"].as_u64()), (Some(true), Some(2)));
    assert_eq!(nutkit(&["construct", "two-orbit-nut", "11"], "").status.code(), Some(2));

    let phi5 = stdout(&nutkit(&["generate", "phi5_d3"], ""));
    let f = nutkit(&["construct", "fowler", "--vertex", "2", "--json"], &phi5);
    assert_eq!(json_lines(&f)[0]["output_nut"], true);

    let sub = nutkit(&["construct", "subdivide", "--edge", "0", "1"], "GzK[]K\n");
    assert!(sub.status.success());
    // not a nut graph: fatal unless lenient
    assert_eq!(nutkit(&["construct", "subdivide", "--edge", "0", "1"], "Bw\n").status.code(), Some(1));
    let k1 = nutkit(&["construct", "coalesce", "--vertex", "0", "--json"], "@\n");
    assert_eq!(json_lines(&k1)[0]["output_nut"], true);
}

#[test]
fn verify_suites() {
    let input = stdout(&nutkit(&["enumerate", "-n", "8", "--nut"], ""));
    for suite in ["orbit-inequality", "orbit-sums", "vt-nut-conditions"] {
        let o = nutkit(&["verify", suite], &input);
        assert!(o.status.success(), "{suite}");
        let reports = json_lines(&o);
        assert_eq!(reports.len(), 13);
        assert!(reports.iter().all(|r| r["outcome"] != "fail" && r["schema_version"] == 1));
    }
    let vt = nutkit(&["verify", "vt-nut-conditions"], &input);
    assert_eq!(json_lines(&vt).iter().filter(|r| r["outcome"] == "pass").count(), 1);

    let delta = nutkit(&["verify", "construction-delta", "--construction", "fowler"], &input);
    assert!(delta.status.success());
    assert!(json_lines(&delta).len() > 13);

    let circ = nutkit(&["verify", "circulant-dihedral", "-k", "3", "--min", "7", "--max", "20"], "");
    assert_eq!(json_lines(&circ)[0]["outcome"], "pass");
    let ex = nutkit(&["verify", "two-orbit-existence", "--min", "9", "--max", "30"], "");
    assert!(ex.status.success());
    assert!(json_lines(&ex).iter().all(|r| r["outcome"] == "pass"));
    let k7 = stdout(&nutkit(&["generate", "complete", "7"], ""));
    let m = nutkit(&["verify", "multiplier-symmetry", "-k", "3"], &k7);
    assert_eq!(json_lines(&m)[0]["witness"]["direct"]["aut_order"], "2958824445050880");
}

#[test]
fn output_is_deterministic() {
    let input = stdout(&nutkit(&["enumerate", "-n", "8", "--nut"], ""));
    let a = nutkit(&["verify", "construction-delta", "--construction", "subdivision", "--jobs", "2"], &input);
    let b = nutkit(&["verify", "construction-delta", "--construction", "subdivision"], &input);
    assert_eq!(a.stdout, b.stdout);
}
