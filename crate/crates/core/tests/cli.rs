use std::fs;
use std::path::Path;
use std::process::{Command, Output};

fn ptbands(dir: &Path, args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ptbands"))
        .args(args)
        .current_dir(dir)
        .env("SOURCE_DATE_EPOCH", "1700000000")
        .output()
        .unwrap()
}

fn manifest(dir: &Path) -> serde_json::Value {
    serde_json::from_str(&fs::read_to_string(dir.join("manifest.json")).unwrap()).unwrap()
}

#[test]
fn bands_writes_exactly_the_manifest_files() {
    let tmp = tempfile::tempdir().unwrap();
    let out = ptbands(tmp.path(), &["--quiet", "--out", "o", "bands", "--samples", "3", "--bands", "4"]);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    let dir = tmp.path().join("o");
    let m = manifest(&dir);
    assert_eq!(m["subcommand"], "bands");
    assert_eq!(m["timestamp"], 1700000000);
    let listed: Vec<String> =
        m["outputs"].as_array().unwrap().iter().map(|f| f["path"].as_str().unwrap().to_string()).collect();
    let mut on_disk: Vec<String> = fs::read_dir(&dir)
        .unwrap()
        .map(|e| e.unwrap().file_name().into_string().unwrap())
        .filter(|n| n != "manifest.json")
        .collect();
    on_disk.sort();
    let mut sorted = listed.clone();
    sorted.sort();
    assert_eq!(sorted, on_disk);
    for f in m["outputs"].as_array().unwrap() {
        let bytes = fs::read(dir.join(f["path"].as_str().unwrap())).unwrap();
        assert_eq!(f["bytes"], bytes.len());
        assert_eq!(f["sha256"].as_str().unwrap(), ptcrystal::output::sha256_hex(&bytes));
    }
    let csv = fs::read_to_string(dir.join("bands.csv")).unwrap();
    assert!(csv.starts_with("segment,k_index,kx,ky,band,re_omega,im_omega,pair_id,corep_label\n"));
    assert_eq!(csv.lines().count(), 1 + 3 * 4 * 4);
    assert!(!csv.contains('\r'));
}

#[test]
fn refined_bands_and_repeat_runs_are_identical() {
    let tmp = tempfile::tempdir().unwrap();
    let args = [
        "--out",
        "o",
        "bands",
        "--path",
        "gamma-x",
        "--samples",
        "3",
        "--bands",
        "2",
        "--refine",
        "x",
        "--refine-points",
        "5",
    ];
    let (a, b) = (tmp.path().join("a"), tmp.path().join("b"));
    fs::create_dir_all(&a).unwrap();
    fs::create_dir_all(&b).unwrap();
    assert!(ptbands(&a, &args).status.success());
    assert!(ptbands(&b, &args).status.success());
    let names: Vec<_> = fs::read_dir(a.join("o")).unwrap().map(|e| e.unwrap().file_name()).collect();
    assert!(names.iter().any(|n| n.to_string_lossy().starts_with("refine_")));
    for n in names {
        assert_eq!(fs::read(a.join("o").join(&n)).unwrap(), fs::read(b.join("o").join(&n)).unwrap(), "{n:?}");
    }
}

#[test]
fn classify_reports_the_gamma_shell() {
    let tmp = tempfile::tempdir().unwrap();
    let out = ptbands(tmp.path(), &["--out", "c", "classify", "--k", "gamma", "--window", "0.45:0.55"]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("Γ5") && text.contains("Γ3") && text.contains("Γ1"), "{text}");
    let report: serde_json::Value =
        serde_json::from_str(&fs::read_to_string(tmp.path().join("c/classify.json")).unwrap()).unwrap();
    assert_eq!(report["classification"]["modes"].as_array().unwrap().len(), 4);
}

#[test]
fn tables_and_dw_test() {
    let tmp = tempfile::tempdir().unwrap();
    let out = ptbands(tmp.path(), &["tables", "c4v"]);
    assert!(out.status.success());
    assert!(String::from_utf8_lossy(&out.stdout).contains("A1"));
    let out = ptbands(tmp.path(), &["--out", "t", "tables", "--k", "m"]);
    assert!(out.status.success());
    assert!(tmp.path().join("t/tables_m.json").exists());
    let out = ptbands(tmp.path(), &["dw-test"]);
    assert!(out.status.success());
    let text = String::from_utf8_lossy(&out.stdout);
    assert!(text.contains("Eu") && text.contains("16"));
}

#[test]
fn sweep_ni_rows() {
    let tmp = tempfile::tempdir().unwrap();
    let out = ptbands(tmp.path(), &["--out", "s", "sweep-ni", "--k", "x", "--ni", "0,0.05"]);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    let dir = tmp.path().join("s");
    let listed = manifest(&dir)["outputs"][0]["path"].as_str().unwrap().to_string();
    let csv = fs::read_to_string(dir.join(listed)).unwrap();
    let rows: Vec<Vec<&str>> = csv.lines().skip(1).map(|l| l.split(',').collect()).collect();
    assert_eq!(rows.len(), 2);
    let im0: f64 = rows[0][2].parse::<f64>().unwrap().abs();
    let im1: f64 = rows[1][2].parse::<f64>().unwrap().abs();
    assert!(im0 < 1e-10 && im1 > 1e-4);
}

#[test]
fn exit_codes() {
    let tmp = tempfile::tempdir().unwrap();
    assert_eq!(ptbands(tmp.path(), &["tables", "nope"]).status.code(), Some(2));
    assert_eq!(ptbands(tmp.path(), &["sweep-ni", "--ni", ""]).status.code(), Some(2));
    assert_eq!(ptbands(tmp.path(), &["frobnicate"]).status.code(), Some(2));
    fs::write(tmp.path().join("bad.json"), r#"{"n_r": "two"}"#).unwrap();
    assert_eq!(ptbands(tmp.path(), &["--config", "bad.json", "dw-test"]).status.code(), Some(2));
    fs::write(tmp.path().join("big.json"), r#"{"truncation": 99}"#).unwrap();
    assert_eq!(ptbands(tmp.path(), &["--config", "big.json", "dw-test"]).status.code(), Some(2));
    let flat = tmp.path().join("flat.json");
    fs::write(&flat, r#"{"n_i": 0.0}"#).unwrap();
    let out =
        ptbands(tmp.path(), &["--config", "flat.json", "sweep-ni", "--k", "gamma", "--bands", "1,2", "--ni", "0"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(ptbands(tmp.path(), &["--help"]).status.code(), Some(0));
}
