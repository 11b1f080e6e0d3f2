use std::process::Command;

use gk_core::exactfield::Scalar;
use gk_core::presets::Preset;
use gkverify::config::{parse_file, Borel};
use gkverify::*;

fn argv(line: &str) -> Vec<String> {
    std::iter::once("gkverify".to_string()).chain(line.split_whitespace().map(String::from)).collect()
}

fn config(line: &str) -> RunConfig {
    parse_config(argv(line)).unwrap()
}

fn bin(args: &[&str]) -> std::process::Output {
    Command::new(env!("CARGO_BIN_EXE_gkverify")).args(args).output().unwrap()
}

#[test]
fn parses_documented_invocations() {
    let c = config("A1,U1 --preset canonical --format json");
    assert_eq!(c.spec.dim(), 4);
    assert_eq!(c.structure, Structure::Preset(Preset::Canonical));
    assert_eq!(c.format, Format::Json);
    assert_eq!(c.checks.len(), registry().len());

    let c = config("T2");
    assert_eq!((c.spec.dim(), c.spec.abelian_rank), (2, 2));
    assert_eq!(c.structure, Structure::Preset(Preset::Canonical));
    assert_eq!(c.format, Format::Text);
    assert!(c.cache.is_none() && !c.timings);

    let c = config("A2 --field-d 3 --preset induced-pair-1");
    assert_eq!((c.spec.dim(), c.spec.field_d), (8, 3));
    assert_eq!(c.structure, Structure::Preset(Preset::InducedPair1));
}

#[test]
fn explicit_bases_and_gram() {
    let c = config("A1,U1 --t10-plus 1,0,0,1 --t10-minus -1,0,0,1 --minus-borel opposite --center-gram 4");
    let Structure::Custom { t10_plus, t10_minus, minus_borel } = &c.structure else { panic!("custom structure") };
    assert_eq!(t10_plus[0][3], Scalar::one());
    assert_eq!(t10_minus[0][0], Scalar::from_int(-1));
    assert_eq!(*minus_borel, Borel::Opposite);
    assert_eq!(c.spec.center_gram[(0, 0)], Scalar::from_int(4));

    let c = config("A1,U1 --t10-plus 1/2*i,0,0,1/2*i");
    let Structure::Custom { t10_plus, t10_minus, minus_borel } = &c.structure else { panic!("custom structure") };
    assert_eq!(t10_plus, t10_minus);
    assert_eq!(t10_plus[0][0], &Scalar::i() * &Scalar::from_frac(1, 2));
    assert_eq!(*minus_borel, Borel::Standard);
}

#[test]
fn checks_are_sorted_and_deduplicated() {
    let c = config("A1,U1 --checks thm.degree,prop.hodge-grid,thm.degree");
    assert_eq!(c.checks, ["prop.hodge-grid", "thm.degree"]);
    assert_eq!(config("T2 --checks all").checks.len(), registry().len());
}

#[test]
fn config_errors() {
    for line in [
        "A1,B2",
        "A1",
        "A1,U1 --t10-plus 1,0,0,1x",
        "A1,U1 --t10-plus 1,0,1",
        "A1,U1 --checks nope",
        "A1,U1 --preset nope",
        "A1,U1 --format yaml",
        "A1,U1 --preset canonical --t10-plus 1,0,0,1",
        "A1,U1 --t10-minus 1,0,0,1",
        "A1,U1 --minus-borel opposite",
        "A2 --field-d 4",
        "A1,U1 --center-gram 1,2;3,4",
        "",
    ] {
        assert!(parse_config(argv(line)).is_err(), "{line}");
    }
    let non_samelson = parse_config(argv("A1,U1 --t10-plus 1,0,0,0")).unwrap();
    assert!(Context::new(&non_samelson).is_err());
}

#[test]
fn config_file_and_flag_override() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("run.conf");
    std::fs::write(
        &path,
        "# sample\ngroup = A1,U1\npreset = induced-pair-2\nformat = json\nchecks = thm.degree, prop.picard\ntimings = true\n",
    )
    .unwrap();
    let p = path.to_str().unwrap();
    let c = config(&format!("--config {p}"));
    assert_eq!(c.structure, Structure::Preset(Preset::InducedPair2));
    assert_eq!(c.checks, ["prop.picard", "thm.degree"]);
    assert!(c.timings);
    assert_eq!(c.format, Format::Json);

    let c = config(&format!("A1,A1 --config {p} --format text --t10-plus 1,0,0,0,0,0"));
    assert_eq!(c.spec.dim(), 6);
    assert_eq!(c.format, Format::Text);
    assert!(matches!(c.structure, Structure::Custom { .. }));

    assert!(parse_file("group A1").is_err());
    assert!(parse_file("colour = red").is_err());
    assert!(parse_file("group = T2\ngroup = A2").is_err());
    assert_eq!(parse_file("field-d = 3").unwrap()["field_d"], "3");
    assert!(parse_config(argv("--config /nonexistent/run.conf")).is_err());
}

#[test]
fn registry_names_are_unique_and_sorted() {
    let names: Vec<&str> = registry().iter().map(|c| c.name).collect();
    let mut sorted = names.clone();
    sorted.sort();
    sorted.dedup();
    assert_eq!(names, sorted);
}

#[test]
fn report_layout() {
    let (out, code) = execute(argv("A1,U1 --format json --checks thm.degree,prop.torus-restriction")).unwrap();
    assert_eq!(code, EXIT_PASS);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["schema_version"], 1);
    assert_eq!(v["tool"], "gkverify");
    assert_eq!(v["config"]["group"], "A1,U1");
    assert_eq!(v["config"]["structure"]["kind"], "preset");
    let records = v["records"].as_array().unwrap();
    assert_eq!(records.len(), 2);
    assert_eq!(records[1]["name"], "thm.degree");
    assert_eq!(records[1]["status"], "pass");
    assert_eq!(records[1]["witness"]["plus-metric.degree"], "1/4");
    assert_eq!(records[1]["witness"]["kappa_rho_rho"], "-1/8");
    assert!(records.iter().all(|r| r.get("elapsed_ms").is_none()));
    assert_eq!(v["summary"]["pass"], 2);

    let (out, _) = execute(argv("A1,U1 --format json --checks thm.degree --timings")).unwrap();
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert!(v["records"][0]["elapsed_ms"].is_u64());
}

#[test]
fn skipped_checks_do_not_fail_the_run() {
    let (out, code) = execute(argv("A1,U1 --preset opposite-borel --checks prop.torus-restriction --format json")).unwrap();
    assert_eq!(code, EXIT_PASS);
    assert!(out.contains("\"status\": \"skipped\""));
}

#[test]
fn torus_run_passes_with_calabi_yau_flags() {
    let (out, code) = execute(argv("T2 --format json")).unwrap();
    assert_eq!(code, EXIT_PASS, "{out}");
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    let degree = v["records"].as_array().unwrap().iter().find(|r| r["name"] == "thm.degree").unwrap();
    assert_eq!(degree["witness"]["plus-metric.degree"], "0");
    let cy = v["records"].as_array().unwrap().iter().find(|r| r["name"] == "cor.calabi-yau").unwrap();
    assert_eq!(cy["witness"]["calabi_yau"], "true");
}

#[test]
fn failing_check_gives_exit_one() {
    // A failed record is produced by hand to exercise the summary logic.
    let c = config("A1,U1 --checks thm.degree");
    let ctx = Context::new(&c).unwrap();
    let mut report = run(&c, &ctx);
    assert!(report.passed());
    report.records[0].status = Status::Fail;
    report.summary.pass -= 1;
    report.summary.fail += 1;
    assert!(!report.passed());
    assert!(report.to_text().contains("FAIL  thm.degree"));
}

#[test]
fn binary_exit_codes() {
    let ok = bin(&["A1,U1", "--checks", "thm.degree"]);
    assert_eq!(ok.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&ok.stdout).contains("PASS  thm.degree"));
    let bad = bin(&["A1,Q9"]);
    assert_eq!(bad.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&bad.stderr).contains("unknown token"));
    assert_eq!(bin(&["--bogus"]).status.code(), Some(2));
    assert_eq!(bin(&["--help"]).status.code(), Some(0));
}
