use std::fs;
use std::process::{Command, Output};

fn gaha(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_gaha")).args(args).output().expect("run gaha")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn field<'a>(text: &'a str, key: &str) -> &'a str {
    text.lines()
        .find_map(|l| l.strip_prefix(&format!("{key}: ")))
        .unwrap_or_else(|| panic!("no {key} in {text}"))
}

#[test]
fn info_rows() {
    let cases = [
        ("U(2,2)", "C", "C", "2", "1", "H~_2(1/2)", "8"),
        ("GL(4,R)", "A", "A", "1", "-", "H_4", "24"),
        ("O(3,2)", "B", "B", "1", "1", "H~_2(1/2)", "8"),
        ("Sp(4,R)", "C", "C", "1", "1", "H~_2(1)", "8"),
    ];
    for (g, phi, phi0, short, long, alg, w) in cases {
        let o = gaha(&["info", g]);
        assert!(o.status.success(), "{g}");
        let s = stdout(&o);
        assert_eq!(field(&s, "Phi"), phi, "{g}");
        assert_eq!(field(&s, "Phi0"), phi0, "{g}");
        assert_eq!(field(&s, "c_short"), short, "{g}");
        assert_eq!(field(&s, "c_long"), long, "{g}");
        assert_eq!(field(&s, "algebra"), alg, "{g}");
        assert_eq!(field(&s, "|W|"), w, "{g}");
    }
}

#[test]
fn info_json_and_split_note() {
    let o = gaha(&["info", "O(2,2)", "--format", "json"]);
    assert!(o.status.success());
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["algebra"], "H~_2(0)");
    assert_eq!(v["note"], "H~_2(0) = H(D_2,1) x Z/2Z");
}

#[test]
fn usage_errors_exit_2() {
    for args in [
        vec!["info", "SL(2,R)"],
        vec!["info", "U(1,2)"],
        vec!["verify", "GL(2)"],
        vec!["scan", "GL(2,R)", "--line", "0..1"],
        vec!["scan", "GL(2,R)", "--nu", "1/2"],
        vec!["scan", "GL(2,R)"],
        vec!["frobnicate"],
    ] {
        assert_eq!(gaha(&args).status.code(), Some(2), "{args:?}");
    }
}

#[test]
fn rank_guards() {
    assert_eq!(gaha(&["verify", "GL(4,R)", "--suite", "tensor"]).status.code(), Some(2));
    assert_eq!(gaha(&["verify", "Sp(4,R)", "--suite", "oda"]).status.code(), Some(2));
}

#[test]
fn verify_writes_report() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("report.json");
    let o = gaha(&["verify", "Sp(4,R)", "--out", out.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    let v: serde_json::Value = serde_json::from_str(&fs::read_to_string(&out).unwrap()).unwrap();
    let rows = v.as_array().unwrap();
    assert!(rows.len() > 10);
    assert!(rows.iter().all(|r| r["status"] == "pass"));
    assert!(rows.iter().any(|r| r["check"] == "sbar_anticommutator"));
}

#[test]
fn verify_failure_exits_1_with_detail() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("oda.json");
    let o = gaha(&["verify", "GL(2,R)", "--suite", "oda", "--degree", "3", "--out", out.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&o.stderr).contains("failed for GL(2,R)"));
    let v: serde_json::Value = serde_json::from_str(&fs::read_to_string(&out).unwrap()).unwrap();
    let status = |name: &str| v.as_array().unwrap().iter().find(|r| r["check"] == name).unwrap()["status"].clone();
    assert_eq!(status("oda_injective"), "pass");
    assert_eq!(status("hom_equivariance"), "pass");
    assert_eq!(status("weyl_match"), "pass");
}

#[test]
fn scan_line_matches_a1_signature() {
    let o = gaha(&["scan", "GL(2,R)", "--line", "0..3/2/6"]);
    assert!(o.status.success());
    let s = stdout(&o);
    let mut lines = s.lines();
    assert_eq!(lines.next().unwrap(), "nu,hermitian,radical_dim,pos,neg,zero,unitary");
    let unitary: Vec<&str> = lines.map(|l| l.rsplit(',').next().unwrap()).collect();
    assert_eq!(unitary, ["true", "true", "true", "true", "true", "false", "false"]);
}

#[test]
fn scan_grid_json_and_determinism() {
    let dir = tempfile::tempdir().unwrap();
    let grid = dir.path().join("grid.txt");
    fs::write(&grid, "# points\n0 0\n1/3, -1/5\n2;1\n").unwrap();
    let run = |name: &str| {
        let out = dir.path().join(name);
        let o = gaha(&["scan", "U(2,2)", "--grid", grid.to_str().unwrap(), "--format", "json", "--out", out.to_str().unwrap()]);
        assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
        fs::read(out).unwrap()
    };
    let a = run("a.json");
    assert_eq!(a, run("b.json"));
    let v: serde_json::Value = serde_json::from_slice(&a).unwrap();
    assert_eq!(v.as_array().unwrap().len(), 3);
    assert_eq!(v[0]["nu"], "0;0");
    assert_eq!(v[0]["unitary"], true);
}

#[test]
fn scan_single_point() {
    let o = gaha(&["scan", "Sp(2,R)", "--nu", "-1/3"]);
    assert!(o.status.success());
    assert!(stdout(&o).lines().nth(1).unwrap().starts_with("-1/3,"));
}
