use std::fmt::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::Context;
use clap::Args;
use serde::Serialize;
use teichext::flat::{self, build, build_double_cover, check_generic, CoverStatus};
use teichext::GluingData;

use crate::format::{self, Format};

#[derive(Debug, Args)]
pub struct PeriodsArgs {
    /// Gluing-data JSON file.
    path: PathBuf,
    /// Exit with status 3 when the double cover is disconnected.
    #[arg(long)]
    require_connected: bool,
    /// Plain `key: value` lines when omitted.
    #[arg(long, value_enum)]
    format: Option<Format>,
}

#[derive(Debug, Serialize)]
struct Summary {
    genus: usize,
    /// Cone angles as multiples of π.
    cone_angles: Vec<u32>,
    punctures: usize,
    generic: bool,
    cover: &'static str,
    cover_genus: Option<usize>,
    odd_rank: usize,
    /// Periods of the symplectic basis as `[re, im]`.
    periods: Vec<[f64; 2]>,
    ext_bilinear: f64,
    area: f64,
    /// `|ext_bilinear - area| / area`.
    slack: f64,
}

impl Summary {
    fn fields(&self) -> Vec<(&'static str, String)> {
        let join = |items: Vec<String>| items.join(" ");
        vec![
            ("genus", self.genus.to_string()),
            ("cone_angles", join(self.cone_angles.iter().map(|m| format!("{m}pi")).collect())),
            ("punctures", self.punctures.to_string()),
            ("generic", self.generic.to_string()),
            ("cover", self.cover.to_string()),
            ("cover_genus", self.cover_genus.map_or_else(|| "-".to_string(), |g| g.to_string())),
            ("odd_rank", self.odd_rank.to_string()),
            (
                "periods",
                join(self.periods.iter().map(|&[re, im]| format::complex(num_complex::Complex::new(re, im))).collect()),
            ),
            ("ext_bilinear", format::number(self.ext_bilinear)),
            ("area", format::number(self.area)),
            ("slack", format::number(self.slack)),
        ]
    }
}

pub fn run(args: PeriodsArgs) -> anyhow::Result<ExitCode> {
    let text = std::fs::read_to_string(&args.path).with_context(|| format!("cannot read {}", args.path.display()))?;
    let gluing =
        GluingData::from_json(&text).with_context(|| format!("{} is not valid gluing data", args.path.display()))?;
    let surface = build(&gluing).with_context(|| format!("{}", args.path.display()))?;
    let cover = build_double_cover(&surface);
    if args.require_connected && !cover.is_connected() {
        eprintln!("error: {}: double cover is disconnected (q is orientable)", args.path.display());
        return Ok(ExitCode::from(3));
    }
    let basis = flat::odd_symplectic_basis(&cover)?;
    let periods = flat::periods(&cover, &basis)?;
    let ext = flat::ext_bilinear(&periods, &basis)?;
    let area = surface.area();
    let summary = Summary {
        genus: surface.genus(),
        cone_angles: surface.cone_points().iter().map(|p| p.multiple).collect(),
        punctures: surface.punctures(),
        generic: check_generic(&surface).generic,
        cover: match cover.status() {
            CoverStatus::Connected => "connected",
            CoverStatus::Orientable => "orientable",
        },
        cover_genus: cover.is_connected().then(|| cover.genus()),
        odd_rank: basis.cycles.len(),
        periods: periods.values.iter().map(|z| [z.re, z.im]).collect(),
        ext_bilinear: ext,
        area,
        slack: (ext - area).abs() / area,
    };

    let out = match args.format {
        None => summary.fields().into_iter().fold(String::new(), |mut s, (k, v)| {
            let _ = writeln!(s, "{k}: {v}");
            s
        }),
        Some(Format::Json) => format::json(&summary)?,
        Some(Format::Csv) => {
            let mut w = csv::WriterBuilder::new().terminator(csv::Terminator::Any(b'\n')).from_writer(vec![]);
            w.write_record(["field", "value"])?;
            for (k, v) in summary.fields() {
                w.write_record([k, &v])?;
            }
            String::from_utf8(w.into_inner()?)?
        }
    };
    format::emit(None, &out)?;
    Ok(ExitCode::SUCCESS)
}
