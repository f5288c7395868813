use std::fs;
use std::process::{Command, Output};

fn symhodge(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_symhodge"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

#[test]
fn sym_of_elliptic_curve() {
    let o = symhodge(&["sym", "--preset", "torus", "--d", "1", "--n", "2"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(
        stdout(&o).trim(),
        "1 + t*v + t*u + 2*t^2*u*v + t^3*u*v^2 + t^3*u^2*v + t^4*u^2*v^2"
    );
}

#[test]
fn method_all_prints_three_agreeing_lines() {
    let o = symhodge(&["sym", "--preset", "cstar", "--r", "1", "--n", "2", "--method", "all"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(
        stdout(&o),
        "det: 1 + t*u*v\npartition: 1 + t*u*v\ncheah: 1 + t*u*v\n"
    );
}

#[test]
fn identity_checks_pass() {
    for args in [
        &["identity", "combgl", "--m", "1", "--order", "2"][..],
        &["identity", "betti", "--r", "1,1", "--order", "4"],
        &["identity", "cheahfls", "--r", "2,1", "--order", "3"],
    ] {
        let o = symhodge(args);
        assert_eq!(o.status.code(), Some(0), "{args:?}");
        assert_eq!(stdout(&o).trim(), "PASS");
    }
}

#[test]
fn json_output_is_byte_stable() {
    let args = ["sym", "--preset", "gl", "--m", "2", "--n", "3", "--json"];
    let a = symhodge(&args);
    let b = symhodge(&args);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    let v: serde_json::Value = serde_json::from_slice(&a.stdout).unwrap();
    assert_eq!(v["n"], 3);
    assert_eq!(v["method"], "det");
    assert!(v["poly"].as_array().unwrap().iter().all(|t| t["c"].is_string()));
}

#[test]
fn file_presentation_merges_duplicates() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("x.json");
    fs::write(
        &path,
        r#"{"generators":[{"d":1,"p":1,"q":1,"r":1},{"d":1,"p":1,"q":1,"r":2}]}"#,
    )
    .unwrap();
    let from_file = symhodge(&["sym", "--file", path.to_str().unwrap(), "--n", "2"]);
    let from_preset = symhodge(&["sym", "--preset", "cstar", "--r", "3", "--n", "2"]);
    assert_eq!(from_file.status.code(), Some(0));
    assert_eq!(from_file.stdout, from_preset.stdout);
}

#[test]
fn even_degree_is_rejected() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bad.json");
    fs::write(&path, r#"{"generators":[{"d":2,"p":1,"q":1,"r":1}]}"#).unwrap();
    let o = symhodge(&["mhp", "--file", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stderr(&o).contains("degree must be odd"));
}

#[test]
fn missing_file_is_a_domain_error() {
    let o = symhodge(&["mhp", "--file", "/nonexistent/x.json"]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn unknown_preset_is_a_usage_error() {
    let o = symhodge(&["sym", "--preset", "klein", "--n", "2"]);
    assert_eq!(o.status.code(), Some(2));
    let o = symhodge(&["sym", "--preset", "torus", "--n", "2"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn preset_round_trips_through_file() {
    let o = symhodge(&["preset", "--preset", "gl", "--m", "2", "--json"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(
        stdout(&o).trim(),
        r#"{"label":"gl(2)","generators":[{"d":1,"p":1,"q":1,"r":1},{"d":3,"p":2,"q":2,"r":1}]}"#
    );
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("gl2.json");
    fs::write(&path, &o.stdout).unwrap();
    let a = symhodge(&["sym", "--file", path.to_str().unwrap(), "--n", "3"]);
    let b = symhodge(&["sym", "--preset", "gl", "--m", "2", "--n", "3"]);
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn non_subgroup_is_rejected() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("h.txt");
    fs::write(&path, "[1,2,3]\n[2,1,3]\n[1,3,2]\n").unwrap();
    let o = symhodge(&["quotient", "--preset", "torus", "--d", "1", "--n", "3", "--subgroup", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn quotient_by_full_group_matches_sym() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("s3.txt");
    fs::write(&path, "# S_3\n[1,2,3]\n[2,1,3]\n[1,3,2]\n[3,2,1]\n[2,3,1]\n[3,1,2]\n").unwrap();
    let q = symhodge(&["quotient", "--preset", "gl", "--m", "2", "--n", "3", "--subgroup", path.to_str().unwrap()]);
    let s = symhodge(&["sym", "--preset", "gl", "--m", "2", "--n", "3"]);
    assert_eq!(q.status.code(), Some(0));
    assert_eq!(q.stdout, s.stdout);
}

#[test]
fn isotypic_rejects_wrong_size_partition() {
    let o = symhodge(&["isotypic", "--preset", "torus", "--d", "1", "--n", "3", "--lambda", "2,1"]);
    assert_eq!(o.status.code(), Some(0));
    let o = symhodge(&["isotypic", "--preset", "torus", "--d", "1", "--n", "3", "--lambda", "2,2"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn poincare_and_epoly_of_sym() {
    let o = symhodge(&["poincare", "--preset", "torus", "--d", "1", "--n", "2"]);
    assert_eq!(stdout(&o).trim(), "1 + 2*t + 2*t^2 + 2*t^3 + t^4");
    let o = symhodge(&["epoly", "--preset", "cstar", "--r", "1", "--n", "2"]);
    assert_eq!(stdout(&o).trim(), "1 - u*v");
}

#[test]
fn compact_cheah_series() {
    let o = symhodge(&["cheah", "--preset", "cstar", "--r", "1", "--order", "2", "--compact"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(
        stdout(&o),
        "z^0: 1\nz^1: t + t^2*u*v\nz^2: t^3*u*v + t^4*u^2*v^2\n"
    );
    let o = symhodge(&["cheah", "--preset", "lie", "--gens", "3:1", "--order", "2", "--compact"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn thread_cap_does_not_change_results() {
    let run = |threads: &str| {
        Command::new(env!("CARGO_BIN_EXE_symhodge"))
            .args(["sym", "--preset", "gl", "--m", "3", "--n", "5", "--json"])
            .env("SYMHODGE_THREADS", threads)
            .output()
            .unwrap()
    };
    let one = run("1");
    assert_eq!(one.status.code(), Some(0));
    assert_eq!(one.stdout, run("4").stdout);
    assert_eq!(run("many").status.code(), Some(2));
}
