//! End-to-end runs of the `coletter` binary on the bundled instances.

use std::fs;
use std::path::PathBuf;
use std::process::{Command, Output};

fn instance(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("instances").join(name)
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_coletter"))
        .args(args)
        .output()
        .unwrap()
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

fn path(name: &str) -> String {
    instance(name).to_string_lossy().into_owned()
}

#[test]
fn resolution_of_two_variables() {
    let dir = tempfile::tempdir().unwrap();
    let out = run(&[
        "resolution",
        &path("two-variables.json"),
        "--mapping-cone",
        "--out",
        dir.path().to_str().unwrap(),
    ]);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    let text = stdout(&out);
    assert!(text.contains("ranks [2, 1]"), "{text}");
    assert!(text.contains("verified"));
    assert!(text.contains("mapping-cone build identical"));
    let json: serde_json::Value =
        serde_json::from_str(&fs::read_to_string(dir.path().join("resolution.json")).unwrap()).unwrap();
    assert!(json.is_object());
    assert!(text.contains(&dir.path().join("resolution.json").display().to_string()));
    assert!(dir.path().join("resolution.m2").exists());
}

#[test]
fn power_resolution_of_the_square() {
    let out = run(&[
        "power",
        &path("three-letters.json"),
        "--k",
        "2",
        "--verify-resolution",
        "--certify-regular",
        "--polarization-check",
    ]);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    let text = stdout(&out);
    assert!(text.contains("ranks [6, 8, 3]"), "{text}");
    assert!(text.contains("regular sequence of 3 differences: certified"));
    assert!(text.contains("no variable bijection onto the polarization"));
}

#[test]
fn classify_the_ball() {
    let out = run(&["complex", "classify", &path("ball.json")]);
    assert!(out.status.success());
    assert!(
        stdout(&out).contains("ball, dimension 1, boundary = 2 vertices"),
        "{}",
        stdout(&out)
    );
    let out = run(&["complex", "boundary", &path("ball.json")]);
    assert_eq!(stdout(&out), "(p,1)\n(q,3)\n");
    let out = run(&["complex", "homology", &path("sphere-4.json")]);
    assert!(
        stdout(&out).contains("homology sphere of dimension 2"),
        "{}",
        stdout(&out)
    );
}

#[test]
fn betti_tables_agree_and_shift_ideals_report_a_witness() {
    let out = run(&["betti", &path("chain-3.json"), "--oracle", "koszul"]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("tables agree"));
    let out = run(&["hs", &path("chain-3.json"), "--t", "2"]);
    assert!(out.status.success());
    let text = stdout(&out);
    let row = text.lines().find(|l| l.trim_start().starts_with('2')).unwrap();
    assert!(row.contains("no"), "{row}");
    assert!(row.contains("X[p2,1]X[p3,1]X[p3,2]"), "{row}");
}

#[test]
fn exit_codes() {
    // guard trip
    let out = run(&["resolution", &path("chain-3.json"), "--guard", "basis=3"]);
    assert_eq!(out.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&out.stderr).contains("basis"));
    // unknown guard and missing file
    assert_eq!(
        run(&["--guard", "nonsense=1", "resolution", &path("ball.json")])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        run(&["resolution", "/nonexistent/instance.json"]).status.code(),
        Some(2)
    );
    // malformed JSON reports a position
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.json");
    fs::write(&bad, "{\n  \"elements\": [\"p\"],\n  \"covers\": oops\n}\n").unwrap();
    let out = run(&["resolution", bad.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert!(
        String::from_utf8_lossy(&out.stderr).contains("line 3"),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    // guard inside the power certificate
    let out = run(&[
        "power",
        &path("three-letters.json"),
        "--k",
        "2",
        "--verify-resolution",
        "--guard",
        "power-generators=2",
    ]);
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn random_instances_are_reproducible() {
    let a = run(&["random", "--seed", "42", "--m", "3", "--n", "4"]);
    let b = run(&["random", "--seed", "42", "--m", "3", "--n", "4"]);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
    let c = run(&["random", "--seed", "43", "--m", "3", "--n", "4"]);
    assert_ne!(a.stdout, c.stdout);
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("i.json");
    fs::write(&file, &a.stdout).unwrap();
    let out = run(&["verify-all", file.to_str().unwrap()]);
    assert!(out.status.success(), "{}", stdout(&out));
    assert!(stdout(&out).contains("all checks passed"));
}
