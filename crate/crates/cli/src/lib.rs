//! Report assembly and rendering for the `nk-spectra` binary.

use std::fmt::Write as _;

use nk_core::branching::{Bundle, SpaceId};
use nk_core::nkcheck::{all_suites, verify_pointwise_identities, VerificationReport};
use nk_core::rational::{qi, Ratio, Q};
use nk_core::spectrum::{
    einstein_deformation_check, enumerate_spectrum, moduli_upper_bound, scal_normalization_check,
    EinsteinCheck, ModuliReport, ScalReport, SpectrumEntry, SpectrumError,
};
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SpectrumReport {
    pub space: SpaceId,
    pub bundle: Bundle,
    pub cutoff: Ratio,
    pub entries: Vec<SpectrumEntry>,
    /// Sum of contributions at exactly the cutoff.
    pub multiplicity_at_cutoff: u64,
}

/// A named expected value, checked by `all`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Expectation {
    pub name: String,
    pub expected: String,
    pub actual: String,
    pub passed: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "report", rename_all = "snake_case")]
pub enum Report {
    Spectrum(SpectrumReport),
    ModuliBound(ModuliReport),
    EinsteinCheck(EinsteinCheck),
    ScalCheck(ScalReport),
    Verification(VerificationReport),
    Expectation(Expectation),
}

impl Report {
    /// Whether the report carries a failed assertion.
    pub fn passed(&self) -> bool {
        match self {
            Report::Spectrum(_) | Report::ModuliBound(_) => true,
            Report::EinsteinCheck(e) => e.passes(),
            Report::ScalCheck(s) => s.passes(),
            Report::Verification(v) => v.passed,
            Report::Expectation(e) => e.passed,
        }
    }
}

pub fn spectrum(space: SpaceId, bundle: Bundle, cutoff: Q) -> Result<Report, SpectrumError> {
    let entries = enumerate_spectrum(space, bundle, cutoff)?;
    let multiplicity_at_cutoff = entries
        .iter()
        .filter(|e| e.eigenvalue.0 == cutoff)
        .map(|e| e.contribution)
        .sum();
    Ok(Report::Spectrum(SpectrumReport {
        space,
        bundle,
        cutoff: Ratio(cutoff),
        entries,
        multiplicity_at_cutoff,
    }))
}

pub fn moduli_bound(space: SpaceId) -> Result<Report, SpectrumError> {
    moduli_upper_bound(space).map(Report::ModuliBound)
}

pub fn einstein_check(space: SpaceId) -> Result<Report, SpectrumError> {
    einstein_deformation_check(space).map(Report::EinsteinCheck)
}

pub fn scal_check(space: SpaceId) -> Report {
    Report::ScalCheck(scal_normalization_check(space))
}

pub fn verify_flag() -> Vec<Report> {
    all_suites().into_iter().map(Report::Verification).collect()
}

pub fn identities() -> Report {
    Report::Verification(verify_pointwise_identities())
}

fn expect(name: String, expected: impl ToString, actual: impl ToString) -> Report {
    let (expected, actual) = (expected.to_string(), actual.to_string());
    Report::Expectation(Expectation {
        passed: expected == actual,
        name,
        expected,
        actual,
    })
}

/// Every individual command over every space, followed by the expected
/// values they must reproduce.
pub fn all() -> Result<Vec<Report>, SpectrumError> {
    const EXPECTED: [(SpaceId, u64, u64, u64); 3] = [
        (SpaceId::S3xS3, 9, 0, 0),
        (SpaceId::Cp3, 20, 10, 0),
        (SpaceId::Flag, 32, 16, 8),
    ];
    let twelve = qi(12);
    let mut out = Vec::new();
    let mut checks = Vec::new();
    for (space, forms, functions, bound) in EXPECTED {
        for (bundle, want) in [(Bundle::Functions, functions), (Bundle::Lambda11, forms)] {
            let r = spectrum(space, bundle, twelve)?;
            if let Report::Spectrum(s) = &r {
                checks.push(expect(
                    format!("{space} {bundle} multiplicity at 12"),
                    want,
                    s.multiplicity_at_cutoff,
                ));
            }
            out.push(r);
        }
        let m = moduli_upper_bound(space)?;
        checks.push(expect(
            format!("{space} deformation bound"),
            bound,
            m.nk_upper_bound,
        ));
        out.push(Report::ModuliBound(m));
        out.push(einstein_check(space)?);
        out.push(scal_check(space));
    }
    out.push(identities());
    out.extend(verify_flag());
    out.extend(checks);
    Ok(out)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Table,
    Json,
    Csv,
}

pub fn render(reports: &[Report], format: Format) -> String {
    match format {
        Format::Json => {
            let mut s = serde_json::to_string_pretty(reports).expect("reports serialize");
            s.push('\n');
            s
        }
        Format::Table => reports.iter().map(table).collect::<Vec<_>>().join("\n"),
        Format::Csv => csv(reports),
    }
}

fn fields(r: &Report) -> (String, Vec<(String, String)>) {
    let kv = |k: &str, v: &dyn ToString| (k.to_string(), v.to_string());
    match r {
        Report::Spectrum(_) => unreachable!("spectra are tabulated"),
        Report::ModuliBound(m) => (
            format!("moduli-bound {}", m.space),
            vec![
                kv("dim_omega11_12", &m.dim_omega11_12),
                kv("dim_isometry", &m.dim_isometry),
                kv("dim_omega0_12", &m.dim_omega0_12),
                kv("nk_upper_bound_raw", &m.nk_upper_bound_raw),
                kv("nk_upper_bound", &m.nk_upper_bound),
                kv("einstein_multiplicity_2", &m.einstein_extra.multiplicity_2),
                kv("einstein_multiplicity_6", &m.einstein_extra.multiplicity_6),
            ],
        ),
        Report::EinsteinCheck(e) => (
            format!("einstein-check {}", e.space),
            vec![
                kv("multiplicity_2", &e.multiplicity_2),
                kv("multiplicity_6", &e.multiplicity_6),
                kv("passed", &e.passes()),
            ],
        ),
        Report::ScalCheck(s) => (
            format!("scal-check {}", s.space),
            vec![
                kv("casimir_isotropy", &s.casimir_isotropy),
                kv("scal_killing", &s.scal_killing),
                kv("scal_metric", &s.scal_metric),
                kv("q_rbar", &s.q_rbar),
                kv("passed", &s.passes()),
            ],
        ),
        Report::Verification(v) => (
            format!("verify {}", v.suite),
            v.checks
                .iter()
                .map(|c| {
                    (
                        c.name.clone(),
                        if c.passed {
                            "ok".into()
                        } else {
                            format!("FAIL {}", c.residual)
                        },
                    )
                })
                .chain(std::iter::once(kv("passed", &v.passed)))
                .collect(),
        ),
        Report::Expectation(e) => (
            format!("expect {}", e.name),
            vec![
                kv("expected", &e.expected),
                kv("actual", &e.actual),
                kv("passed", &e.passed),
            ],
        ),
    }
}

fn spectrum_rows(s: &SpectrumReport) -> Vec<[String; 5]> {
    s.entries
        .iter()
        .map(|e| {
            [
                e.eigenvalue.to_string(),
                e.irrep.to_string(),
                e.hom_dim.to_string(),
                e.irrep_dim.to_string(),
                e.contribution.to_string(),
            ]
        })
        .collect()
}

const SPECTRUM_HEADER: [&str; 5] = ["eigenvalue", "irrep", "hom_dim", "dim", "contribution"];

fn table(r: &Report) -> String {
    let mut out = String::new();
    if let Report::Spectrum(s) = r {
        let rows = spectrum_rows(s);
        let widths: Vec<usize> = (0..5)
            .map(|i| {
                rows.iter()
                    .map(|row| row[i].chars().count())
                    .chain([SPECTRUM_HEADER[i].len()])
                    .max()
                    .unwrap()
            })
            .collect();
        let line = |cells: Vec<&str>| {
            let padded: Vec<String> = cells
                .iter()
                .zip(&widths)
                .map(|(c, w)| format!("{c:<w$}"))
                .collect();
            padded.join("  ").trim_end().to_string()
        };
        let _ = writeln!(out, "spectrum {} {} cutoff {}", s.space, s.bundle, s.cutoff);
        let _ = writeln!(out, "{}", line(SPECTRUM_HEADER.to_vec()));
        for row in &rows {
            let _ = writeln!(out, "{}", line(row.iter().map(String::as_str).collect()));
        }
        let _ = writeln!(
            out,
            "multiplicity at {}: {}",
            s.cutoff, s.multiplicity_at_cutoff
        );
        return out;
    }
    let (title, kv) = fields(r);
    let w = kv.iter().map(|(k, _)| k.chars().count()).max().unwrap_or(0);
    let _ = writeln!(out, "{title}");
    for (k, v) in kv {
        let _ = writeln!(out, "  {k:<w$}  {v}");
    }
    out
}

fn csv(reports: &[Report]) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    let spectra: Vec<&SpectrumReport> = reports
        .iter()
        .filter_map(|r| {
            if let Report::Spectrum(s) = r {
                Some(s)
            } else {
                None
            }
        })
        .collect();
    let write = |w: &mut csv::Writer<Vec<u8>>, rec: &[String]| {
        w.write_record(rec).expect("in-memory write")
    };
    if !spectra.is_empty() {
        let header: Vec<String> = ["space", "bundle"]
            .iter()
            .chain(&SPECTRUM_HEADER)
            .map(|s| s.to_string())
            .collect();
        write(&mut w, &header);
        for s in &spectra {
            for row in spectrum_rows(s) {
                let rec: Vec<String> = [s.space.to_string(), s.bundle.to_string()]
                    .into_iter()
                    .chain(row)
                    .collect();
                write(&mut w, &rec);
            }
        }
    }
    let rest: Vec<&Report> = reports
        .iter()
        .filter(|r| !matches!(r, Report::Spectrum(_)))
        .collect();
    if !rest.is_empty() {
        let mut w2 = csv::Writer::from_writer(Vec::new());
        write(&mut w2, &["report".into(), "field".into(), "value".into()]);
        for r in rest {
            let (title, kv) = fields(r);
            for (k, v) in kv {
                write(&mut w2, &[title.clone(), k, v]);
            }
        }
        let mut head = w.into_inner().expect("flush");
        if !head.is_empty() {
            head.push(b'\n');
        }
        head.extend(w2.into_inner().expect("flush"));
        return String::from_utf8(head).expect("utf-8");
    }
    String::from_utf8(w.into_inner().expect("flush")).expect("utf-8")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn failed_expectation_fails_the_run() {
        let r = expect("x".into(), 8, 7);
        assert!(!r.passed());
        assert!(expect("x".into(), 8, 8).passed());
    }

    #[test]
    fn table_output_is_aligned() {
        let s = render(
            &[spectrum(SpaceId::Flag, Bundle::Functions, qi(12)).unwrap()],
            Format::Table,
        );
        assert_eq!(
            s,
            "spectrum FLAG functions cutoff 12\n\
             eigenvalue  irrep    hom_dim  dim  contribution\n\
             0           V_{0,0}  1        1    1\n\
             12          V_{1,1}  2        8    16\n\
             multiplicity at 12: 16\n"
        );
    }
}
