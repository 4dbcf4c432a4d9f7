use std::path::PathBuf;

use clap::{Args, ValueEnum};
use num_complex::Complex;
use serde::{Deserialize, Serialize};
use teichext::torus;
use teichext::{TorusFoliation, TorusPoint};

use crate::format::{self, Format};
use crate::parse::{self, Region};
use crate::report::ReportFile;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Field {
    /// `log Ext_τ(F)`.
    LogExt,
    /// `Ext_τ(F)`.
    Ext,
    /// Teichmüller distance from `--from`.
    Dist,
    /// `-1 / (c + Σ Ext_τ(Fᵢ))`.
    Rho,
}

impl Field {
    fn name(self) -> &'static str {
        match self {
            Field::LogExt => "log-ext",
            Field::Ext => "ext",
            Field::Dist => "dist",
            Field::Rho => "rho",
        }
    }
}

#[derive(Debug, Args)]
pub struct GridArgs {
    field: Field,
    /// `re_min,re_max,im_min,im_max`.
    #[arg(long, value_parser = parse::region, allow_hyphen_values = true, default_value = "-1,1,0.5,2")]
    region: Region,
    /// `N` or `COLSxROWS`.
    #[arg(long, value_parser = parse::resolution, default_value = "50")]
    resolution: (usize, usize),
    /// Foliation `a,b`; repeat for the terms of `rho`.
    #[arg(long = "fol", value_parser = parse::pair, allow_hyphen_values = true)]
    foliations: Vec<(f64, f64)>,
    /// Base point of `dist`.
    #[arg(long, value_parser = parse::complex, allow_hyphen_values = true, default_value = "0,1")]
    from: Complex<f64>,
    /// Constant term of `rho`.
    #[arg(long, default_value_t = 1.0)]
    c: f64,
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    format: Format,
}

#[derive(Serialize)]
struct Invocation {
    command: &'static str,
    field: Field,
    region: Region,
    resolution: [usize; 2],
    foliations: Vec<[f64; 2]>,
    from: [f64; 2],
    c: f64,
}

#[derive(Debug, Serialize, Deserialize)]
pub struct GridPoint {
    pub re: f64,
    pub im: f64,
    pub value: f64,
}

fn axis(lo: f64, hi: f64, n: usize) -> impl Iterator<Item = f64> {
    (0..n).map(move |k| if n == 1 { lo } else { lo + (hi - lo) * k as f64 / (n - 1) as f64 })
}

pub fn run(args: GridArgs) -> anyhow::Result<()> {
    let foliations = match (args.field, args.foliations.is_empty()) {
        (Field::Rho, true) => vec![(1.0, 0.0), (0.0, 1.0)],
        (_, true) => vec![(1.0, 0.0)],
        (_, false) => args.foliations,
    };
    if matches!(args.field, Field::Ext | Field::LogExt) && foliations.len() != 1 {
        anyhow::bail!("{} takes exactly one --fol", args.field.name());
    }
    let weights: Vec<TorusFoliation> =
        foliations.iter().map(|&(a, b)| TorusFoliation::new(a, b)).collect::<Result<_, _>>()?;
    let from = TorusPoint::new(args.from)?;
    let region = args.region;
    TorusPoint::from_parts(region.re_min, region.im_min)
        .map_err(|e| anyhow::anyhow!("region must lie in the upper half-plane: {e}"))?;

    let total_ext = |x: &TorusPoint| weights.iter().map(|f| torus::extremal_length(x, f)).sum::<f64>();
    let (cols, rows) = args.resolution;
    let mut points = Vec::with_capacity(cols * rows);
    for im in axis(region.im_min, region.im_max, rows) {
        for re in axis(region.re_min, region.re_max, cols) {
            let x = TorusPoint::from_parts(re, im)?;
            let value = match args.field {
                Field::LogExt => total_ext(&x).ln(),
                Field::Ext => total_ext(&x),
                Field::Dist => torus::kerckhoff_eigen(&from, &x),
                Field::Rho => -1.0 / (args.c + total_ext(&x)),
            };
            points.push(GridPoint { re, im, value });
        }
    }

    let text = match args.format {
        Format::Csv => {
            let mut w = csv::WriterBuilder::new().terminator(csv::Terminator::Any(b'\n')).from_writer(vec![]);
            w.write_record(["re", "im", args.field.name()])?;
            for p in &points {
                w.write_record([p.re, p.im, p.value].map(|x| x.to_string()))?;
            }
            String::from_utf8(w.into_inner()?)?
        }
        Format::Json => {
            let invocation = Invocation {
                command: "grid",
                field: args.field,
                region,
                resolution: [cols, rows],
                foliations: foliations.iter().map(|&(a, b)| [a, b]).collect(),
                from: [args.from.re, args.from.im],
                c: args.c,
            };
            format::json(&ReportFile::new(invocation, points))?
        }
    };
    format::emit(args.out.as_deref(), &text)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn axis_endpoints() {
        let v: Vec<f64> = axis(-1.0, 1.0, 5).collect();
        assert_eq!(v, vec![-1.0, -0.5, 0.0, 0.5, 1.0]);
        assert_eq!(axis(0.0, 1.0, 1).collect::<Vec<_>>(), vec![0.0]);
    }
}
