use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::Context;
use clap::Args;
use serde::Serialize;
use teichext::verify::{run_suite, Suite, SuiteConfig, TOL_CLOSED_FORM, TOL_EXACT, TOL_FD};
use teichext::VerificationReport;

use crate::format::{self, Format};
use crate::report::ReportFile;

#[derive(Debug, Args)]
pub struct VerifyArgs {
    /// Suite to run, or `all`.
    suite: String,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Overrides every check's tolerance.
    #[arg(long)]
    tol: Option<f64>,
    /// Overrides every suite's sample count.
    #[arg(long)]
    samples: Option<usize>,
    /// Relative finite-difference step.
    #[arg(long)]
    h: Option<f64>,
    /// Curve bound for the brute-force distance.
    #[arg(long)]
    bound: Option<u32>,
    /// Report destination; stdout when omitted.
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
}

#[derive(Serialize)]
struct Tolerances {
    exact: f64,
    closed_form: f64,
    finite_difference: f64,
}

#[derive(Serialize)]
struct Invocation<'a> {
    command: &'static str,
    suite: &'a str,
    format: Format,
    config: &'a SuiteConfig,
    tolerances: Tolerances,
}

#[derive(Serialize)]
struct SuiteResult {
    suite: Suite,
    samples: usize,
    pass: bool,
    checks: Vec<VerificationReport>,
}

#[derive(Serialize)]
struct CsvRow<'a> {
    suite: Suite,
    check: &'a str,
    samples: usize,
    min_slack: f64,
    tolerance: f64,
    pass: bool,
    seed: Option<u64>,
    witness: Option<&'a str>,
}

fn selected(name: &str) -> anyhow::Result<Vec<Suite>> {
    if name == "all" {
        return Ok(Suite::ALL.to_vec());
    }
    name.parse::<Suite>().map(|s| vec![s]).map_err(|_| {
        let names: Vec<_> = Suite::ALL.iter().map(|s| s.name()).collect();
        anyhow::anyhow!("unknown suite {name:?}; expected one of {} or all", names.join(", "))
    })
}

fn csv(results: &[SuiteResult]) -> anyhow::Result<String> {
    let mut w = csv::WriterBuilder::new().terminator(csv::Terminator::Any(b'\n')).from_writer(vec![]);
    for r in results {
        for c in &r.checks {
            w.serialize(CsvRow {
                suite: r.suite,
                check: &c.check,
                samples: c.samples,
                min_slack: c.min_slack,
                tolerance: c.tolerance,
                pass: c.pass,
                seed: c.seed,
                witness: c.witness.as_deref(),
            })?;
        }
    }
    Ok(String::from_utf8(w.into_inner()?)?)
}

pub fn run(args: VerifyArgs) -> anyhow::Result<ExitCode> {
    let suites = selected(&args.suite)?;
    let defaults = SuiteConfig::default();
    let config = SuiteConfig {
        seed: args.seed,
        samples: args.samples,
        tol: args.tol,
        h: args.h.unwrap_or(defaults.h),
        bound: args.bound.unwrap_or(defaults.bound),
        ..defaults
    };
    config.validate()?;

    let mut results = Vec::with_capacity(suites.len());
    for suite in suites {
        let checks = run_suite(suite, &config).with_context(|| format!("suite {suite}"))?;
        for c in &checks {
            eprintln!("{}", c.summary_line());
        }
        let pass = checks.iter().all(|c| c.pass);
        results.push(SuiteResult { suite, samples: config.samples.unwrap_or(suite.default_samples()), pass, checks });
    }
    let failed: usize = results.iter().flat_map(|r| &r.checks).filter(|c| !c.pass).count();
    let total: usize = results.iter().map(|r| r.checks.len()).sum();
    eprintln!("verify: {total} checks in {} suites, {failed} failed", results.len());

    let text = match args.format {
        Format::Json => {
            let invocation = Invocation {
                command: "verify",
                suite: &args.suite,
                format: args.format,
                config: &config,
                tolerances: Tolerances { exact: TOL_EXACT, closed_form: TOL_CLOSED_FORM, finite_difference: TOL_FD },
            };
            format::json(&ReportFile::new(invocation, results))?
        }
        Format::Csv => csv(&results)?,
    };
    format::emit(args.out.as_deref(), &text)?;
    Ok(if failed == 0 { ExitCode::SUCCESS } else { ExitCode::from(1) })
}
