use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

fn latcoh(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_latcoh"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout_json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

fn path(dir: &Path, name: &str) -> String {
    dir.join(name).to_str().unwrap().to_owned()
}

fn write_curve(dir: &Path, name: &str, branches: &[&[u32]]) -> String {
    let branches: Vec<Value> = branches
        .iter()
        .map(|exps| {
            let coords: Vec<Value> = exps
                .iter()
                .map(|&e| serde_json::json!([{"c": [1, 1], "e": e}]))
                .collect();
            serde_json::json!({ "coords": coords })
        })
        .collect();
    let p = path(dir, name);
    std::fs::write(&p, serde_json::json!({ "branches": branches }).to_string()).unwrap();
    p
}

#[test]
fn semigroup_report_has_the_initial_part() {
    let out = latcoh(&["semigroup", "--gens", "6,10,31"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout.clone()).unwrap();
    assert!(text.contains(r#""E":[0,6,10,12,16,18,20,22]"#), "{text}");
    let v = stdout_json(&out);
    assert_eq!(v["delta"], 23);
    assert_eq!(v["e"], -8);
    assert_eq!(v["lg1_equals_2"], true);
    assert_eq!(v["gcd_chain"]["l"], serde_json::json!([6, 2, 1]));
    let human = String::from_utf8(out.stderr).unwrap();
    assert!(human.contains("δ = 23"));
}

#[test]
fn smooth_semigroup() {
    let v = stdout_json(&latcoh(&["semigroup", "--gens", "1"]));
    assert_eq!(v["smooth"], true);
    assert_eq!(v["E"], serde_json::json!([0]));
}

#[test]
fn weight_table_row() {
    let dir = tempfile::tempdir().unwrap();
    let tsv = path(dir.path(), "w.tsv");
    let out = latcoh(&["semigroup", "--gens", "11,14", "--weights", &tsv]);
    assert_eq!(out.status.code(), Some(0));
    let table = std::fs::read_to_string(&tsv).unwrap();
    let row = table.lines().find(|l| l.starts_with("55\t")).unwrap();
    assert_eq!(row.split('\t').last(), Some("-27"));
    assert_eq!(table.lines().count(), 1 + 131);
}

#[test]
fn outputs_are_deterministic_and_files_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let (m, r, out1, out2) = (
        path(dir.path(), "m.json"),
        path(dir.path(), "r.json"),
        path(dir.path(), "a.json"),
        path(dir.path(), "b.json"),
    );
    let run = |out: &str| {
        latcoh(&[
            "semigroup",
            "--gens",
            "6,15,31",
            "--module",
            &m,
            "--root",
            &r,
            "--out",
            out,
        ])
    };
    assert_eq!(run(&out1).status.code(), Some(0));
    assert_eq!(run(&out2).status.code(), Some(0));
    assert_eq!(std::fs::read(&out1).unwrap(), std::fs::read(&out2).unwrap());

    let back = latcoh(&["reconstruct", "--module", &m]);
    assert_eq!(back.status.code(), Some(0));
    let v = stdout_json(&back);
    assert_eq!(v["generators"], serde_json::json!([6, 15, 31]));
    assert_eq!(v["e"], -12);

    assert_eq!(latcoh(&["root-iso", &r, &r]).status.code(), Some(0));
}

#[test]
fn root_formats() {
    let dir = tempfile::tempdir().unwrap();
    let (dot, txt) = (path(dir.path(), "r.dot"), path(dir.path(), "r.txt"));
    assert_eq!(
        latcoh(&["semigroup", "--gens", "4,11", "--root", &dot])
            .status
            .code(),
        Some(0)
    );
    assert!(std::fs::read_to_string(&dot).unwrap().starts_with("graph"));
    assert_eq!(
        latcoh(&["semigroup", "--gens", "4,11", "--root", &txt])
            .status
            .code(),
        Some(0)
    );
    let ascii = std::fs::read_to_string(&txt).unwrap();
    assert!(ascii.lines().last().unwrap().starts_with("-5 |"), "{ascii}");
}

#[test]
fn non_isomorphic_roots_exit_3() {
    let dir = tempfile::tempdir().unwrap();
    let a = path(dir.path(), "a.json");
    let b = path(dir.path(), "b.json");
    latcoh(&["semigroup", "--gens", "4,11", "--root", &a]);
    latcoh(&["semigroup", "--gens", "6,10,31", "--root", &b]);
    let out = latcoh(&["root-iso", &a, &b]);
    assert_eq!(out.status.code(), Some(3));
    assert_eq!(
        String::from_utf8(out.stdout).unwrap().trim(),
        "not isomorphic"
    );
}

#[test]
fn symmetric_set_shares_the_root_of_four_eleven() {
    let dir = tempfile::tempdir().unwrap();
    let s = path(dir.path(), "s.json");
    let members = [0, 4, 9, 10, 12, 15, 16, 18, 21, 22, 23, 24, 26, 27, 28];
    let file =
        serde_json::json!({ "members_below": members, "conductor": 30, "verify_closed": false });
    std::fs::write(&s, file.to_string()).unwrap();
    let (a, b) = (path(dir.path(), "a.json"), path(dir.path(), "b.json"));
    let out = latcoh(&["semigroup", "--in", &s, "--root", &a]);
    assert_eq!(
        out.status.code(),
        Some(0),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    assert_eq!(stdout_json(&out)["plane_branch"], false);
    latcoh(&["semigroup", "--gens", "4,11", "--root", &b]);
    assert_eq!(latcoh(&["root-iso", &a, &b]).status.code(), Some(0));
}

#[test]
fn input_errors_exit_2() {
    let dir = tempfile::tempdir().unwrap();
    let bad = path(dir.path(), "bad.json");
    std::fs::write(&bad, "{\"generators\": [4,\n 6,]}").unwrap();
    let out = latcoh(&["semigroup", "--in", &bad]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8(out.stderr).unwrap().contains("line 2"));

    assert_eq!(
        latcoh(&["semigroup", "--gens", "4,6"]).status.code(),
        Some(2)
    );
    assert_eq!(
        latcoh(&["semigroup", "--gens", "4,6", "--bogus"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(latcoh(&["root-iso", &bad, &bad]).status.code(), Some(2));

    let module = path(dir.path(), "m.json");
    std::fs::write(&module, r#"{"base":-1,"towers":[[-1,-1]]}"#).unwrap();
    assert_eq!(
        latcoh(&["reconstruct", "--module", &module]).status.code(),
        Some(2)
    );
    std::fs::write(&module, r#"{"base":-1,"towers":[[0,-1]]}"#).unwrap();
    assert_eq!(
        latcoh(&["reconstruct", "--module", &module]).status.code(),
        Some(2)
    );
}

#[test]
fn sets_without_a_root_exit_2() {
    let dir = tempfile::tempdir().unwrap();
    let s = path(dir.path(), "s.json");
    std::fs::write(
        &s,
        r#"{"members_below":[0,1,2],"conductor":5,"verify_closed":false}"#,
    )
    .unwrap();
    let out = latcoh(&["semigroup", "--in", &s]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8(out.stderr)
        .unwrap()
        .contains("S_1 has 2 components"));
}

#[test]
fn module_file_in_degrees() {
    let dir = tempfile::tempdir().unwrap();
    let m = path(dir.path(), "m.json");
    // ⟨2,3⟩: T^∞_0 ⊕ T_0 in degrees.
    std::fs::write(&m, r#"{"grading":"degree","base":0,"towers":[[0,0]]}"#).unwrap();
    let v = stdout_json(&latcoh(&["reconstruct", "--module", &m]));
    assert_eq!(v["generators"], serde_json::json!([2, 3]));
    assert_eq!(v["lg1_equals_2"], true);
}

#[test]
fn curve_command() {
    let dir = tempfile::tempdir().unwrap();
    let curve = write_curve(
        dir.path(),
        "c.json",
        &[&[3, 4, 5, 4, 5, 6], &[3, 4, 5, 5, 6, 7]],
    );
    let (w, h, r) = (
        path(dir.path(), "w.tsv"),
        path(dir.path(), "h.json"),
        path(dir.path(), "r.json"),
    );
    let out = latcoh(&[
        "curve",
        "--in",
        &curve,
        "--weights",
        &w,
        "--cohomology",
        &h,
        "--root",
        &r,
    ]);
    assert_eq!(
        out.status.code(),
        Some(0),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    let v = stdout_json(&out);
    assert_eq!(v["poincare"], "1 + t1^3*t2^3");
    assert_eq!(v["conductor"], serde_json::json!([4, 4]));
    assert_eq!(v["min_w0"], -4);
    assert_eq!(v["euler"]["holds"], true);
    let tsv = std::fs::read_to_string(&w).unwrap();
    assert_eq!(tsv.lines().next(), Some("l1\\l2\t0\t1\t2\t3\t4"));
    assert_eq!(tsv.lines().nth(4), Some("3\t-1\t-2\t-3\t-4\t-3"));
    let coh: Value = serde_json::from_str(&std::fs::read_to_string(&h).unwrap()).unwrap();
    assert_eq!(coh["r"], 2);

    assert_eq!(
        latcoh(&["curve", "--in", &curve, "--conductor", "4,4"])
            .status
            .code(),
        Some(0)
    );
    assert_eq!(
        latcoh(&["curve", "--in", &curve, "--conductor", "5,4"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        latcoh(&["curve", "--in", &curve, "--conductor", "4"])
            .status
            .code(),
        Some(2)
    );
}

#[test]
fn binomial_pair_roots_are_isomorphic() {
    let dir = tempfile::tempdir().unwrap();
    // n = 4 with the sign rule: x^p + y^q ↦ (α t^q, β t^p).
    let branch = |p: u32, q: u32| {
        let (a, b) = if p % 2 == 1 { (-1, 1) } else { (1, -1) };
        serde_json::json!({ "coords": [[{"c": [a, 1], "e": q}], [{"c": [b, 1], "e": p}]] })
    };
    let write = |name: &str, bs: Vec<Value>| {
        let p = path(dir.path(), name);
        std::fs::write(&p, serde_json::json!({ "branches": bs }).to_string()).unwrap();
        p
    };
    let c = write("c.json", vec![branch(4, 5), branch(5, 4)]);
    let c2 = write("c2.json", vec![branch(3, 4), branch(6, 5)]);
    let (ra, rb) = (path(dir.path(), "ra.json"), path(dir.path(), "rb.json"));
    assert_eq!(
        latcoh(&["curve", "--in", &c, "--root", &ra]).status.code(),
        Some(0)
    );
    assert_eq!(
        latcoh(&["curve", "--in", &c2, "--root", &rb]).status.code(),
        Some(0)
    );
    assert_eq!(latcoh(&["root-iso", &ra, &rb]).status.code(), Some(0));
}

#[test]
fn sweeps() {
    let v = stdout_json(&latcoh(&["roundtrip", "--max-conductor", "0"]));
    assert_eq!(
        (v["tested"].as_u64(), v["passed"].as_u64()),
        (Some(1), Some(1))
    );
    let out = latcoh(&["roundtrip", "--max-conductor", "30"]);
    assert_eq!(out.status.code(), Some(0));
    let v = stdout_json(&out);
    assert_eq!(v["tested"], v["passed"]);
    let out = latcoh(&["conjecture-sweep", "--max-conductor", "30"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout_json(&out)["counterexamples"], serde_json::json!([]));
}

#[test]
fn thread_variable() {
    let out = Command::new(env!("CARGO_BIN_EXE_latcoh"))
        .args(["roundtrip", "--max-conductor", "20"])
        .env("LATCOH_THREADS", "1")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    let out = Command::new(env!("CARGO_BIN_EXE_latcoh"))
        .args(["roundtrip", "--max-conductor", "20"])
        .env("LATCOH_THREADS", "zero")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
}
