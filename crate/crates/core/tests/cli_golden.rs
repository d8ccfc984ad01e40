//! Runs the `monodisk` binary and compares stdout against files in
//! `tests/golden`. Set `UPDATE_GOLDEN=1` to rewrite them.

use std::path::PathBuf;
use std::process::{Command, Output};

fn monodisk(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_monodisk"))
        .args(args)
        .env_remove("MONODISK_SEED")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn golden(name: &str, args: &[&str]) {
    let o = monodisk(args);
    assert!(o.status.success(), "{args:?}: {}", String::from_utf8_lossy(&o.stderr));
    let path = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/golden").join(name);
    let got = stdout(&o);
    if std::env::var_os("UPDATE_GOLDEN").is_some() {
        std::fs::create_dir_all(path.parent().unwrap()).unwrap();
        std::fs::write(&path, &got).unwrap();
        return;
    }
    let want = std::fs::read_to_string(&path).unwrap_or_else(|e| panic!("{}: {e}", path.display()));
    assert_eq!(got, want, "{name}");
}

#[test]
fn count_outputs() {
    golden("count_c_5_3.txt", &["count", "--family", "C", "--n", "5", "--k", "3"]);
    golden("count_ctilde_3_2.txt", &["count", "--family", "ctilde", "--n", "3", "--k", "2"]);
    golden("count_d_7.txt", &["count", "--family", "d", "--n", "7"]);
}

#[test]
fn necklace_output() {
    golden("necklace_4_6.txt", &["necklace", "--a", "4", "--b", "6", "--brute"]);
}

#[test]
fn members_output() {
    golden("members_3_2.txt", &["members", "--n", "3", "--k", "2", "--limit", "62"]);
}

#[test]
fn quasipoly_outputs() {
    golden("quasipoly_3.txt", &["quasipoly", "--n", "3", "--derive"]);
    golden("quasipoly_5.txt", &["quasipoly", "--n", "5", "--derive"]);
}

#[test]
fn locus_output() {
    golden("locus_3.txt", &["locus", "--n", "3"]);
}

fn error_kind(o: &Output) -> String {
    let line = String::from_utf8(o.stderr.clone()).unwrap();
    let v: serde_json::Value = serde_json::from_str(line.trim()).expect("stderr is one JSON object");
    assert!(v["message"].is_string());
    v["error"].as_str().unwrap().to_owned()
}

#[test]
fn failures_map_to_exit_codes() {
    let cases: [(&[&str], i32, &str); 5] = [
        (&["count", "--family", "C"], 2, "usage"),
        (&["count", "--family", "C", "--n", "4"], 2, "usage"),
        (&["build", "--family", "C", "--n", "3", "--k", "2", "--word", "LLL"], 2, "usage"),
        (&["verify", "/definitely/not/here.json"], 1, "io"),
        (&["frobnicate"], 2, "usage"),
    ];
    for (args, code, kind) in cases {
        let o = monodisk(args);
        assert_eq!(o.status.code(), Some(code), "{args:?}");
        assert_eq!(error_kind(&o), kind, "{args:?}");
        assert!(o.stdout.is_empty(), "{args:?}");
    }
}

#[test]
fn malformed_document_is_a_document_error() {
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("bad.json");
    std::fs::write(&file, r#"{"schema_version": 1, "disk": {"cx": 0, "cy": 0}}"#).unwrap();
    let o = monodisk(&["verify", file.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
    assert_eq!(error_kind(&o), "document");
}

#[test]
fn built_documents_verify() {
    let dir = tempfile::tempdir().unwrap();
    let grid: &[&[&str]] = &[
        &["--family", "symradial", "--n", "5"],
        &["--family", "radgen", "--n", "6"],
        &["--family", "D", "--n", "5", "--t", "0.3"],
        &["--family", "D31", "--chirality", "b"],
        &["--family", "C", "--n", "3", "--k", "2", "--word", "LSSLSSSSSS"],
        &["--family", "Ctilde", "--n", "3", "--k", "2", "--t", "0.3", "--variant", "about-q"],
    ];
    for (i, params) in grid.iter().enumerate() {
        let file = dir.path().join(format!("t{i}.json"));
        let mut args = vec!["build"];
        args.extend_from_slice(params);
        args.extend_from_slice(&["--out", file.to_str().unwrap()]);
        let o = monodisk(&args);
        assert!(o.status.success(), "{params:?}: {}", String::from_utf8_lossy(&o.stderr));
        let v = monodisk(&["verify", file.to_str().unwrap(), "--samples", "2000"]);
        assert_eq!(v.status.code(), Some(0), "{params:?}: {}", stdout(&v));
        let report: serde_json::Value = serde_json::from_str(&stdout(&v)).unwrap();
        assert_eq!(report["valid"], true);
        assert_eq!(report["monohedral"], true);
        let svg = dir.path().join(format!("t{i}.svg"));
        let r = monodisk(&["render", file.to_str().unwrap(), "--svg", svg.to_str().unwrap(), "--style", "colored"]);
        assert!(r.status.success(), "{params:?}: {}", String::from_utf8_lossy(&r.stderr));
        assert!(std::fs::read_to_string(&svg).unwrap().contains("<svg "), "{params:?}");
    }
}

#[test]
fn outputs_are_deterministic() {
    let a = monodisk(&["build", "--family", "D", "--n", "3", "--t", "0.4"]);
    let b = monodisk(&["build", "--family", "D", "--n", "3", "--t", "0.4"]);
    assert_eq!(a.stdout, b.stdout);
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("d.json");
    std::fs::write(&file, &a.stdout).unwrap();
    let path = file.to_str().unwrap();
    let r1 = monodisk(&["verify", path, "--samples", "500"]);
    let r2 = monodisk(&["verify", path, "--samples", "500"]);
    assert_eq!(r1.stdout, r2.stdout);
    let seeded = Command::new(env!("CARGO_BIN_EXE_monodisk"))
        .args(["verify", path, "--samples", "500"])
        .env("MONODISK_SEED", "7")
        .output()
        .unwrap();
    let report: serde_json::Value = serde_json::from_slice(&seeded.stdout).unwrap();
    assert_eq!(report["seed"], 7);
}

#[test]
fn documented_examples() {
    assert_eq!(stdout(&monodisk(&["count", "--family", "C", "--n", "3", "--k", "2"])), "62\n");
    assert_eq!(stdout(&monodisk(&["necklace", "--a", "3", "--b", "6", "--brute"])), "10 (formula=oracle ✓)\n");
    let built = monodisk(&["build", "--family", "D", "--n", "5", "--t", "0.3"]);
    assert!(built.status.success());
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("d5.json");
    std::fs::write(&file, &built.stdout).unwrap();
    let v = monodisk(&["verify", file.to_str().unwrap()]);
    assert_eq!(v.status.code(), Some(0));
    let report: serde_json::Value = serde_json::from_slice(&v.stdout).unwrap();
    assert_eq!(report["tile_count"], 20);
    assert_eq!(report["center_touch_count"], 10);
}
