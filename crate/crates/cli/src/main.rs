//! `hhcalc`: exact Hopf–Hochschild computations from a JSON document.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use hhcalc_core::exactfield::{FieldSpec, PrimeField, Rationals};

use hhcalc::doc::{parse_field, parse_input};
use hhcalc::emit::{emit, Format};
use hhcalc::error::CliError;
use hhcalc::run::{run, Command, OracleKind, Report};

#[derive(Parser, Debug)]
#[command(name = "hhcalc", version, about = "Exact Hopf–Hochschild homology of module algebras")]
struct Cli {
    #[command(subcommand)]
    command: Cmd,
}

#[derive(Subcommand, Debug)]
enum Cmd {
    /// Run every applicable validator.
    Validate(Common),
    /// Hopf–Hochschild homology table (coinvariant mode by default).
    Homology(Common),
    /// Hopf–Hochschild cohomology table.
    Cohomology(Common),
    /// Structure constants of the crossed product algebra.
    CrossedProduct(Common),
    /// Run a comparison oracle.
    Oracle {
        #[arg(value_enum)]
        which: OracleArg,
        #[command(flatten)]
        common: Common,
    },
    /// Homology twisted by the document's Yetter–Drinfeld module.
    Twist(Common),
    /// Compare against an independent computation.
    Compare {
        #[arg(long, value_enum)]
        against: Against,
        #[command(flatten)]
        common: Common,
    },
}

#[derive(Copy, Clone, Debug, ValueEnum)]
enum OracleArg {
    MainIso,
    TorExt,
    Cofinal,
    FreeGen,
    DgmHomotopy,
}

#[derive(Copy, Clone, Debug, ValueEnum)]
enum Against {
    Ordinary,
}

#[derive(Args, Debug)]
struct Common {
    /// Input document.
    input: PathBuf,
    #[arg(long)]
    max_degree: Option<usize>,
    /// `rational` or a prime `p`.
    #[arg(long)]
    field: Option<String>,
    #[arg(long, value_enum, default_value = "json")]
    format: Format,
    #[arg(long)]
    out: Option<PathBuf>,
}

fn execute(cmd: Command, common: &Common) -> Result<Report, CliError> {
    let path = common.input.display().to_string();
    let text = std::fs::read_to_string(&common.input).map_err(|e| CliError::Io { path, message: e.to_string() })?;
    let mut doc = parse_input(&text)?;
    if let Some(n) = common.max_degree {
        doc.options.max_degree = Some(n);
    }
    let spec = match &common.field {
        Some(f) => parse_field(f)?,
        None => doc.field_spec()?,
    };
    match spec {
        FieldSpec::Rational => run(&Rationals, cmd, &doc),
        FieldSpec::Prime { p } => run(&PrimeField::new(p).map_err(hhcalc_core::Error::from)?, cmd, &doc),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let (cmd, common) = match &cli.command {
        Cmd::Validate(c) => (Command::Validate, c),
        Cmd::Homology(c) => (Command::Homology, c),
        Cmd::Cohomology(c) => (Command::Cohomology, c),
        Cmd::CrossedProduct(c) => (Command::CrossedProduct, c),
        Cmd::Twist(c) => (Command::Twist, c),
        Cmd::Compare { against: Against::Ordinary, common } => (Command::CompareOrdinary, common),
        Cmd::Oracle { which, common } => {
            let kind = match which {
                OracleArg::MainIso => OracleKind::MainIso,
                OracleArg::TorExt => OracleKind::TorExt,
                OracleArg::Cofinal => OracleKind::Cofinal,
                OracleArg::FreeGen => OracleKind::FreeGen,
                OracleArg::DgmHomotopy => OracleKind::DgmHomotopy,
            };
            (Command::Oracle(kind), common)
        }
    };
    match execute(cmd, common) {
        Ok(report) => {
            let bytes = emit(&report, common.format);
            let written = match &common.out {
                Some(p) => std::fs::write(p, bytes).map_err(|e| e.to_string()),
                None => {
                    print!("{bytes}");
                    Ok(())
                }
            };
            if let Err(e) = written {
                eprintln!("error: cannot write output: {e}");
                return ExitCode::from(2);
            }
            if report.passed {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
