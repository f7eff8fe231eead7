//! latspec: build toroidal lattices, dump their spectra, evaluate energy
//! invariants, and compute asymptotic constants — all deterministically.

mod commands;
mod output;

use std::fmt;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

/// Failure modes mapped to exit codes: domain errors (bad sizes, solver
/// caps) exit 1, usage errors exit 2, numerical non-convergence exits 3.
#[derive(Debug)]
pub enum AppError {
    Domain(String),
    Usage(String),
    Numerical(String),
}

impl AppError {
    fn exit_code(&self) -> u8 {
        match self {
            AppError::Domain(_) => 1,
            AppError::Usage(_) => 2,
            AppError::Numerical(_) => 3,
        }
    }

    fn message(&self) -> &str {
        match self {
            AppError::Domain(m) | AppError::Usage(m) | AppError::Numerical(m) => m,
        }
    }

    fn from_spectra(err: spectra::SpectraError) -> Self {
        match err {
            spectra::SpectraError::NoConvergence { .. } => AppError::Numerical(err.to_string()),
            spectra::SpectraError::OrderCap { .. } => AppError::Domain(err.to_string()),
            spectra::SpectraError::LengthMismatch { .. } => AppError::Numerical(err.to_string()),
        }
    }

    fn from_quad(err: asymptotics::QuadError) -> Self {
        match err {
            asymptotics::QuadError::InvalidTolerance(_) => AppError::Usage(err.to_string()),
            asymptotics::QuadError::NonFinite { .. } => AppError::Numerical(err.to_string()),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum LatticeFamily {
    /// Union Jack lattice (grid plus face vertices).
    Ujl,
    /// Truncated-square lattice (squares and octagons).
    #[value(name = "488")]
    TruncatedSquare,
    /// Square torus grid.
    Grid,
    /// Single cycle.
    Cycle,
}

impl fmt::Display for LatticeFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LatticeFamily::Ujl => write!(f, "ujl"),
            LatticeFamily::TruncatedSquare => write!(f, "488"),
            LatticeFamily::Grid => write!(f, "grid"),
            LatticeFamily::Cycle => write!(f, "cycle"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum MatrixKind {
    /// Signless Laplacian Q = D + A.
    Q,
    /// Laplacian L = D - A.
    L,
}

impl fmt::Display for MatrixKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MatrixKind::Q => write!(f, "q"),
            MatrixKind::L => write!(f, "l"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum MethodArg {
    /// Closed-form enumeration over torus modes.
    Closed,
    /// Dense Jacobi eigensolver on the explicit matrix.
    Numeric,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum KindArg {
    /// Incidence energy.
    Ie,
    /// Laplacian-energy-like invariant.
    Lel,
}

impl KindArg {
    fn to_invariant(self) -> invariants::InvariantKind {
        match self {
            KindArg::Ie => invariants::InvariantKind::IncidenceEnergy,
            KindArg::Lel => invariants::InvariantKind::Lel,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Json,
    Edgelist,
}

#[derive(Debug, Parser)]
#[command(
    name = "latspec",
    about = "Spectra and energy invariants of toroidal lattices",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Build a lattice and export it.
    Build {
        #[arg(long, value_enum)]
        lattice: LatticeFamily,
        /// Columns (cycle length for --lattice cycle).
        #[arg(long)]
        n: usize,
        /// Rows; required for the two-dimensional lattices.
        #[arg(long)]
        m: Option<usize>,
        #[arg(long, value_enum, default_value = "csv")]
        format: Format,
        /// Write to a file instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Dump a Laplacian or signless-Laplacian spectrum.
    Spectrum {
        #[arg(long, value_enum, default_value = "ujl")]
        lattice: LatticeFamily,
        /// Which matrix to diagonalize.
        #[arg(long, value_enum, default_value = "q")]
        matrix: MatrixKind,
        #[arg(long, value_enum, default_value = "closed")]
        method: MethodArg,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        m: Option<usize>,
        #[arg(long, value_enum, default_value = "csv")]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Evaluate the incidence energy or LEL invariant.
    Invariants {
        #[arg(long, value_enum)]
        kind: KindArg,
        #[arg(long, value_enum, default_value = "closed")]
        method: MethodArg,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        m: Option<usize>,
        /// Batch of sizes as n1xm1,n2xm2,...
        #[arg(long)]
        sizes: Option<String>,
        #[arg(long, value_enum, default_value = "csv")]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Compute the asymptotic constants by adaptive quadrature.
    Asymptotic {
        /// Absolute tolerance on each reported constant.
        #[arg(long, default_value_t = 1e-6)]
        tol: f64,
        #[arg(long, value_enum, default_value = "csv")]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Finite-size per-site values against the quadrature limit.
    Convergence {
        #[arg(long, value_enum)]
        kind: KindArg,
        /// Sizes as n1xm1,n2xm2,...
        #[arg(long)]
        sizes: String,
        #[arg(long, value_enum, default_value = "csv")]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run all structural and spectral cross-checks at one size.
    Verify {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        m: usize,
    },
}

fn run(cli: Cli) -> Result<(), AppError> {
    match cli.command {
        Command::Build {
            lattice,
            n,
            m,
            format,
            out,
        } => commands::cmd_build(lattice, n, m, format, out.as_deref()),
        Command::Spectrum {
            lattice,
            matrix,
            method,
            n,
            m,
            format,
            out,
        } => commands::cmd_spectrum(lattice, matrix, method, n, m, format, out.as_deref()),
        Command::Invariants {
            kind,
            method,
            n,
            m,
            sizes,
            format,
            out,
        } => commands::cmd_invariants(kind, method, n, m, sizes.as_deref(), format, out.as_deref()),
        Command::Asymptotic { tol, format, out } => {
            commands::cmd_asymptotic(tol, format, out.as_deref())
        }
        Command::Convergence {
            kind,
            sizes,
            format,
            out,
        } => commands::cmd_convergence(kind, &sizes, format, out.as_deref()),
        Command::Verify { n, m } => commands::cmd_verify(n, m),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(err) => {
            eprintln!("error: {}", err.message());
            ExitCode::from(err.exit_code())
        }
    }
}
