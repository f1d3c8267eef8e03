use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use nk_cli::{render, Format, Report};
use nk_core::branching::{Bundle, SpaceId};
use nk_core::rational::{parse_rational, Q};
use num_traits::Signed;

const EXIT_USAGE: u8 = 2;
const EXIT_ASSERTION: u8 = 3;

#[derive(Parser)]
#[command(
    name = "nk-spectra",
    version,
    about = "Exact Laplace spectra and deformation checks on homogeneous nearly Kähler 6-manifolds"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    #[arg(long, value_enum, default_value_t = FormatArg::Table, global = true)]
    format: FormatArg,
    /// Write the report here instead of stdout.
    #[arg(long, global = true)]
    output: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// Eigenvalues of the Hermitian Laplacian up to a cutoff.
    Spectrum {
        #[command(flatten)]
        space: SpaceArg,
        #[arg(long, value_enum)]
        bundle: BundleArg,
        /// Non-negative rational, e.g. `12` or `25/2`.
        #[arg(long, value_parser = cutoff, allow_negative_numbers = true)]
        cutoff: Q,
    },
    /// Upper bound on infinitesimal nearly Kähler deformations.
    ModuliBound {
        #[command(flatten)]
        space: SpaceArg,
    },
    /// Exact identities on the flag manifold model.
    VerifyFlag,
    /// Pointwise SU3-structure identities.
    Identities,
    /// Multiplicities of the eigenvalues 2 and 6 on primitive (1,1)-forms.
    EinsteinCheck {
        #[command(flatten)]
        space: SpaceArg,
    },
    /// Isotropy Casimir and scalar curvature normalization.
    ScalCheck {
        #[command(flatten)]
        space: SpaceArg,
    },
    /// Every command on every space, with the expected values asserted.
    All,
}

#[derive(Args)]
struct SpaceArg {
    #[arg(long, value_enum)]
    space: SpaceSel,
}

#[derive(Clone, Copy, ValueEnum)]
enum SpaceSel {
    S3xs3,
    Cp3,
    Flag,
}

impl From<SpaceSel> for SpaceId {
    fn from(s: SpaceSel) -> Self {
        match s {
            SpaceSel::S3xs3 => SpaceId::S3xS3,
            SpaceSel::Cp3 => SpaceId::Cp3,
            SpaceSel::Flag => SpaceId::Flag,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum BundleArg {
    Functions,
    Lambda11,
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Table,
    Json,
    Csv,
}

fn cutoff(s: &str) -> Result<Q, String> {
    let c = parse_rational(s).map_err(|e| e.to_string())?;
    if c.is_negative() {
        return Err(format!("cutoff must be non-negative, got {c}"));
    }
    Ok(c)
}

fn configure_threads() -> Result<(), String> {
    let Ok(raw) = std::env::var("NK_SPECTRA_THREADS") else {
        return Ok(());
    };
    let n: usize = raw
        .trim()
        .parse()
        .ok()
        .filter(|&n| n > 0)
        .ok_or_else(|| format!("NK_SPECTRA_THREADS must be a positive integer, got {raw:?}"))?;
    rayon::ThreadPoolBuilder::new()
        .num_threads(n)
        .build_global()
        .map_err(|e| e.to_string())
}

fn run(command: Command) -> Result<Vec<Report>, nk_core::spectrum::SpectrumError> {
    Ok(match command {
        Command::Spectrum {
            space,
            bundle,
            cutoff,
        } => {
            let bundle = match bundle {
                BundleArg::Functions => Bundle::Functions,
                BundleArg::Lambda11 => Bundle::Lambda11,
            };
            vec![nk_cli::spectrum(space.space.into(), bundle, cutoff)?]
        }
        Command::ModuliBound { space } => vec![nk_cli::moduli_bound(space.space.into())?],
        Command::VerifyFlag => nk_cli::verify_flag(),
        Command::Identities => vec![nk_cli::identities()],
        Command::EinsteinCheck { space } => vec![nk_cli::einstein_check(space.space.into())?],
        Command::ScalCheck { space } => vec![nk_cli::scal_check(space.space.into())],
        Command::All => nk_cli::all()?,
    })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Err(e) = configure_threads() {
        eprintln!("error: {e}");
        return ExitCode::from(EXIT_USAGE);
    }
    let format = match cli.format {
        FormatArg::Table => Format::Table,
        FormatArg::Json => Format::Json,
        FormatArg::Csv => Format::Csv,
    };
    let reports = match run(cli.command) {
        Ok(r) => r,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(EXIT_ASSERTION);
        }
    };
    let text = render(&reports, format);
    let written = match &cli.output {
        Some(path) => std::fs::write(path, &text).map_err(|e| format!("{}: {e}", path.display())),
        None => {
            print!("{text}");
            Ok(())
        }
    };
    if let Err(e) = written {
        eprintln!("error: {e}");
        return ExitCode::FAILURE;
    }
    let failed: Vec<String> = reports
        .iter()
        .filter(|r| !r.passed())
        .map(describe)
        .collect();
    if failed.is_empty() {
        ExitCode::SUCCESS
    } else {
        for f in failed {
            eprintln!("assertion failed: {f}");
        }
        ExitCode::from(EXIT_ASSERTION)
    }
}

fn describe(r: &Report) -> String {
    match r {
        Report::Verification(v) => format!("suite {}", v.suite),
        Report::Expectation(e) => format!("{}: expected {}, got {}", e.name, e.expected, e.actual),
        Report::EinsteinCheck(e) => format!("Einstein deformations on {}", e.space),
        Report::ScalCheck(s) => format!("scalar curvature on {}", s.space),
        Report::Spectrum(_) | Report::ModuliBound(_) => unreachable!("no assertion"),
    }
}
