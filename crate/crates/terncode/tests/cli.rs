//! End-to-end CLI behavior: exit codes, file formats, report determinism.

use std::fs;
use std::path::Path;
use std::process::{Command, Output};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_terncode"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn path_str(p: &Path) -> String {
    p.display().to_string()
}

#[test]
fn construct_then_analyze_minimal_bent() {
    let dir = tempfile::tempdir().unwrap();
    let tft = dir.path().join("bent.tft");
    let out = run(&["construct", "field-mult-bent", "--k", "2", "--m", "1", "--out", &path_str(&tft)]);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    let stdout = String::from_utf8_lossy(&out.stdout);
    assert!(stdout.contains("vectorial regular 0-plateaued"), "{stdout}");

    let report = dir.path().join("report.json");
    let out = run(&["analyze", &path_str(&tft), "--minimality", "both", "--out", &path_str(&report)]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    let json: serde_json::Value =
        serde_json::from_str(&fs::read_to_string(&report).unwrap()).unwrap();
    assert_eq!(json["schema"], "cfa/1");
    assert_eq!(json["length"], 80);
    assert_eq!(json["dimension"], 5);
    assert_eq!(json["ab_satisfied"], true);
    let methods = json["minimality"]["methods"].as_array().unwrap();
    assert_eq!(methods.len(), 2);
    assert!(methods.iter().all(|m| m["verdict"] == "minimal"));
}

#[test]
fn analyze_reports_witness_and_exit_3_on_nonminimal() {
    // f(x0, x1, x2) = x0 x1 written by hand as TFT/1.
    let dir = tempfile::tempdir().unwrap();
    let tft = dir.path().join("prod.tft");
    let mut body = String::from("tft 1 3 1\n");
    for x in 0..27 {
        body.push(char::from(b'0' + ((x % 3) * ((x / 3) % 3) % 3) as u8));
        body.push('\n');
    }
    fs::write(&tft, body).unwrap();

    let report = dir.path().join("report.json");
    let out = run(&["analyze", &path_str(&tft), "--minimality", "both", "--out", &path_str(&report)]);
    assert_eq!(out.status.code(), Some(3));
    let json: serde_json::Value =
        serde_json::from_str(&fs::read_to_string(&report).unwrap()).unwrap();
    let methods = json["minimality"]["methods"].as_array().unwrap();
    assert!(methods.iter().any(|m| m["verdict"] == "not_minimal"));
    assert!(methods.iter().any(|m| m["witness"]["kind"] == "sum_triple"));
}

#[test]
fn bound_only_mode_is_inconclusive_on_the_seed_function() {
    let dir = tempfile::tempdir().unwrap();
    let tft = dir.path().join("seed.tft");
    let out = run(&[
        "construct", "indicator-quadratic", "--n", "6", "--r", "2", "--out", &path_str(&tft),
    ]);
    assert!(out.status.success());
    let out = run(&["analyze", &path_str(&tft), "--minimality", "bound"]);
    assert_eq!(out.status.code(), Some(4));
}

#[test]
fn parse_errors_exit_1_and_bad_params_exit_2() {
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.tft");
    fs::write(&bad, "tft 9 zz\n").unwrap();
    let out = run(&["analyze", &path_str(&bad)]);
    assert_eq!(out.status.code(), Some(1));

    let missing = dir.path().join("missing.tft");
    let out = run(&["analyze", &path_str(&missing)]);
    assert_eq!(out.status.code(), Some(1));

    let tft = dir.path().join("x.tft");
    let out = run(&["construct", "field-mult-bent", "--k", "2", "--m", "3", "--out", &path_str(&tft)]);
    assert_eq!(out.status.code(), Some(2));

    let out = run(&["verify-paper", "--suite", "nonsense"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn analyze_rejects_nonvanishing_origin_with_exit_2() {
    let dir = tempfile::tempdir().unwrap();
    let tft = dir.path().join("shift.tft");
    let mut body = String::from("tft 1 2 1\n");
    for x in 0..9 {
        body.push(char::from(b'0' + ((x as u8 + 1) % 3)));
        body.push('\n');
    }
    fs::write(&tft, body).unwrap();
    let out = run(&["analyze", &path_str(&tft)]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn reports_are_byte_identical_across_runs() {
    let dir = tempfile::tempdir().unwrap();
    let tft = dir.path().join("g.tft");
    run(&["construct", "field-mult-bent", "--k", "2", "--m", "2", "--out", &path_str(&tft)]);
    let r1 = dir.path().join("r1.json");
    let r2 = dir.path().join("r2.json");
    for r in [&r1, &r2] {
        let out = run(&[
            "analyze", &path_str(&tft), "--minimality", "both", "--seed", "7",
            "--out", &path_str(r),
        ]);
        assert_eq!(out.status.code(), Some(0));
    }
    assert_eq!(fs::read(&r1).unwrap(), fs::read(&r2).unwrap());
}

#[test]
fn tft_files_round_trip_through_the_cli() {
    let dir = tempfile::tempdir().unwrap();
    let f = dir.path().join("f.tft");
    let g = dir.path().join("g.tft");
    let fg = dir.path().join("fg.tft");
    run(&["construct", "indicator-quadratic", "--n", "6", "--r", "2", "--out", &path_str(&f)]);
    run(&["construct", "field-mult-bent", "--k", "3", "--m", "1", "--out", &path_str(&g)]);
    let out = run(&["construct", "compose", "--f", &path_str(&f), "--g", &path_str(&g), "--out", &path_str(&fg)]);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    let text = fs::read_to_string(&fg).unwrap();
    assert!(text.starts_with("tft 1 6 2\n"));
    assert_eq!(text.lines().count(), 1 + 729);
    // Composition puts f in output coordinate 0 = the least significant
    // digit, printed last on each row.
    let f_text = fs::read_to_string(&f).unwrap();
    for (row, f_row) in text.lines().skip(1).zip(f_text.lines().skip(1)) {
        assert_eq!(&row[1..2], f_row);
    }
}

#[test]
fn spectrum_csv_export() {
    let dir = tempfile::tempdir().unwrap();
    let tft = dir.path().join("b.tft");
    run(&["construct", "field-mult-bent", "--k", "2", "--m", "1", "--out", &path_str(&tft)]);
    let csv = dir.path().join("spec.csv");
    let out = run(&["spectrum", &path_str(&tft), "--out", &path_str(&csv)]);
    assert!(out.status.success());
    let text = fs::read_to_string(&csv).unwrap();
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines[0], "rank_mu,rank_nu,re_unit,om_unit");
    assert_eq!(lines.len(), 1 + 3 * 81);
    // Row mu = 0 is the delta: W(0, 0) = 3^4.
    assert_eq!(lines[1], "0,0,81,0");
    assert_eq!(lines[2], "0,1,0,0");
}

#[test]
fn verify_paper_tables_suite_passes_from_the_cli() {
    let out = run(&["verify-paper", "--suite", "tables"]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stdout));
    let stdout = String::from_utf8_lossy(&out.stdout);
    assert!(stdout.contains("PASS tables/bent_n6_m2"));
    assert!(!stdout.contains("FAIL"));
}
