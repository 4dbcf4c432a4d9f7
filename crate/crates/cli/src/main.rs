mod format;
mod grid;
mod parse;
mod periods;
mod report;
mod verify;

use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use num_complex::Complex;
use teichext::torus::{self, DEFAULT_KERCKHOFF_BOUND};
use teichext::{DistanceMethod, TorusFoliation, TorusPoint, TorusTangent};

/// Extremal length and plurisubharmonicity checks on Teichmüller spaces.
#[derive(Debug, Parser)]
#[command(name = "teichext", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, clap::Args)]
struct PointArgs {
    /// Point of the upper half-plane, `re,im`.
    #[arg(long, value_parser = parse::complex, allow_hyphen_values = true)]
    tau: Complex<f64>,
    /// Foliation weights `a,b`.
    #[arg(long, value_parser = parse::pair, allow_hyphen_values = true)]
    fol: (f64, f64),
}

#[derive(Debug, clap::Args)]
struct TangentArgs {
    #[command(flatten)]
    point: PointArgs,
    /// Tangent direction `re,im`.
    #[arg(long, value_parser = parse::complex, allow_hyphen_values = true)]
    v: Complex<f64>,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Method {
    Brute,
    Eigen,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Extremal length of a foliation on a torus.
    Ext(PointArgs),
    /// Levi form of the extremal length along a tangent direction.
    Levi(TangentArgs),
    /// Coefficient of the differential eta_v, printed as `re,im`.
    Eta(TangentArgs),
    /// Coefficient of J_{tau0}(F) at tau, printed as `re,im`.
    Jmap {
        #[command(flatten)]
        point: PointArgs,
        #[arg(long, value_parser = parse::complex, allow_hyphen_values = true)]
        tau0: Complex<f64>,
    },
    /// Teichmüller distance between two tori.
    Dist {
        #[arg(long, value_parser = parse::complex, allow_hyphen_values = true)]
        from: Complex<f64>,
        #[arg(long, value_parser = parse::complex, allow_hyphen_values = true)]
        to: Complex<f64>,
        #[arg(long, value_enum, default_value_t = Method::Eigen)]
        method: Method,
        /// Curve bound for the brute-force method.
        #[arg(long, default_value_t = DEFAULT_KERCKHOFF_BOUND)]
        bound: u32,
    },
    /// Period report for a gluing-data file.
    Periods(periods::PeriodsArgs),
    /// Run verification suites and write a report.
    Verify(verify::VerifyArgs),
    /// Sample a scalar field on a rectangle of the upper half-plane.
    Grid(grid::GridArgs),
}

fn point(args: &PointArgs) -> anyhow::Result<(TorusPoint, TorusFoliation)> {
    Ok((TorusPoint::new(args.tau)?, TorusFoliation::new(args.fol.0, args.fol.1)?))
}

fn tangent(args: &TangentArgs) -> anyhow::Result<(TorusPoint, TorusFoliation, TorusTangent)> {
    let (x, f) = point(&args.point)?;
    Ok((x, f, TorusTangent::new(x, args.v)?))
}

fn run(command: Command) -> anyhow::Result<ExitCode> {
    let line = match command {
        Command::Ext(args) => {
            let (x, f) = point(&args)?;
            format::number(torus::extremal_length(&x, &f))
        }
        Command::Levi(args) => {
            let (x, f, t) = tangent(&args)?;
            format::number(torus::levi_form(&x, &f, &t)?)
        }
        Command::Eta(args) => {
            let (x, f, t) = tangent(&args)?;
            format::complex(torus::eta_v(&x, &f, &t)?.coeff)
        }
        Command::Jmap { point: args, tau0 } => {
            let (x, f) = point(&args)?;
            format::complex(torus::j_map(&TorusPoint::new(tau0)?, &f, &x).coeff)
        }
        Command::Dist { from, to, method, bound } => {
            let method = match method {
                Method::Brute => DistanceMethod::Brute { bound },
                Method::Eigen => DistanceMethod::Eigen,
            };
            format::number(torus::teich_distance(&TorusPoint::new(from)?, &TorusPoint::new(to)?, method)?)
        }
        Command::Periods(args) => return periods::run(args),
        Command::Verify(args) => return verify::run(args),
        Command::Grid(args) => return grid::run(args).map(|()| ExitCode::SUCCESS),
    };
    println!("{line}");
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
