use std::process::{Command, Output};

use nk_cli::{render, Format, Report};
use nk_core::rootrep::IrrepLabel;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_nk-spectra"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn json(args: &[&str]) -> Vec<Report> {
    let mut full = args.to_vec();
    full.extend(["--format", "json"]);
    let out = run(&full);
    assert!(
        out.status.success(),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    serde_json::from_slice(&out.stdout).expect("valid report JSON")
}

#[test]
fn moduli_bound_on_flag_is_eight() {
    match &json(&["moduli-bound", "--space", "flag"])[..] {
        [Report::ModuliBound(m)] => assert_eq!((m.nk_upper_bound, m.nk_upper_bound_raw), (8, 8)),
        other => panic!("unexpected {other:?}"),
    }
}

#[test]
fn cp3_lambda11_at_cutoff_is_v11() {
    let reports = json(&[
        "spectrum", "--space", "cp3", "--bundle", "lambda11", "--cutoff", "12",
    ]);
    let [Report::Spectrum(s)] = &reports[..] else {
        panic!("one spectrum")
    };
    let at12: Vec<_> = s
        .entries
        .iter()
        .filter(|e| e.eigenvalue.0 == 12.into())
        .collect();
    assert_eq!(at12.len(), 1);
    assert_eq!(at12[0].irrep, IrrepLabel::So5(1, 1));
    assert_eq!(s.multiplicity_at_cutoff, 20);
}

#[test]
fn s3xs3_functions_at_zero_is_trivial() {
    let reports = json(&[
        "spectrum",
        "--space",
        "s3xs3",
        "--bundle",
        "functions",
        "--cutoff",
        "0",
    ]);
    let [Report::Spectrum(s)] = &reports[..] else {
        panic!("one spectrum")
    };
    assert_eq!(s.entries.len(), 1);
    assert!(s.entries[0].irrep.is_trivial());
}

#[test]
fn json_round_trips_byte_for_byte() {
    let out = run(&["all", "--format", "json"]);
    assert!(out.status.success());
    let parsed: Vec<Report> = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(render(&parsed, Format::Json).as_bytes(), &out.stdout[..]);
}

#[test]
fn all_passes_and_is_stable() {
    let a = run(&["all"]);
    let b = Command::new(env!("CARGO_BIN_EXE_nk-spectra"))
        .arg("all")
        .env("NK_SPECTRA_THREADS", "1")
        .output()
        .unwrap();
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    let reports: Vec<Report> = json(&["all"]);
    assert!(reports.iter().all(Report::passed));
}

#[test]
fn verify_flag_and_identities_pass() {
    assert_eq!(run(&["verify-flag"]).status.code(), Some(0));
    assert_eq!(
        run(&["identities", "--format", "csv"]).status.code(),
        Some(0)
    );
}

#[test]
fn usage_errors_exit_two() {
    for args in [
        &[
            "spectrum", "--space", "cp3", "--bundle", "lambda11", "--cutoff", "-1",
        ][..],
        &[
            "spectrum", "--space", "cp3", "--bundle", "lambda11", "--cutoff", "x",
        ],
        &["moduli-bound"],
        &["moduli-bound", "--space", "s6"],
        &["frobnicate"],
    ] {
        assert_eq!(run(args).status.code(), Some(2), "{args:?}");
    }
    let bad_threads = Command::new(env!("CARGO_BIN_EXE_nk-spectra"))
        .arg("identities")
        .env("NK_SPECTRA_THREADS", "0")
        .output()
        .unwrap();
    assert_eq!(bad_threads.status.code(), Some(2));
}

#[test]
fn output_file_matches_stdout() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("einstein.csv");
    let args = ["einstein-check", "--space", "flag", "--format", "csv"];
    let to_file = run(&[&args[..], &["--output", path.to_str().unwrap()]].concat());
    assert!(to_file.status.success());
    assert!(to_file.stdout.is_empty());
    assert_eq!(std::fs::read(&path).unwrap(), run(&args).stdout);
}

#[test]
fn csv_quotes_labels() {
    let out = run(&[
        "spectrum",
        "--space",
        "flag",
        "--bundle",
        "functions",
        "--cutoff",
        "12",
        "--format",
        "csv",
    ]);
    let text = String::from_utf8(out.stdout).unwrap();
    assert_eq!(
        text,
        "space,bundle,eigenvalue,irrep,hom_dim,dim,contribution\n\
         FLAG,functions,0,\"V_{0,0}\",1,1,1\n\
         FLAG,functions,12,\"V_{1,1}\",2,8,16\n"
    );
}
