use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use std::path::PathBuf;
use ym2d::partition_fn::{SurfaceSpec, TruncationParams};
use ym2d::verify::Suite;
use ym2d::zeta::DEFAULT_DIM_CUTOFF;
use ym2d::{Error, Group};

#[derive(Debug, Parser)]
#[command(
    name = "ym2",
    version,
    about = "Certified 2D Yang-Mills partition functions"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Witten zeta function ζ_su(N)(s).
    Zeta(ZetaArgs),
    /// Partition function Z_N on a closed surface.
    Zn(SurfaceRun),
    /// Z_N next to its large-N limit.
    Converge(SurfaceRun),
    /// Property suites.
    Verify(VerifyArgs),
    /// Monotonicity of N ↦ Z_N on orientable surfaces.
    Sweep(SweepArgs),
}

/// Ranks given as `5`, `2..10` (inclusive) or `4,8,16`; forms may be mixed.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(transparent)]
pub struct NList(pub Vec<usize>);

pub fn parse_n_list(raw: &str) -> Result<NList, String> {
    let mut out = Vec::new();
    for piece in raw.split(',').map(str::trim) {
        if let Some((a, b)) = piece.split_once("..") {
            let a: usize = a
                .trim()
                .parse()
                .map_err(|_| format!("bad range start in '{piece}'"))?;
            let b: usize = b
                .trim()
                .parse()
                .map_err(|_| format!("bad range end in '{piece}'"))?;
            if a > b {
                return Err(format!("empty range '{piece}'"));
            }
            out.extend(a..=b);
        } else {
            out.push(piece.parse().map_err(|_| format!("bad rank '{piece}'"))?);
        }
    }
    if out.contains(&0) {
        return Err("ranks start at 1".into());
    }
    Ok(NList(out))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Csv,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum GroupArg {
    Su,
    U,
}

impl From<GroupArg> for Group {
    fn from(g: GroupArg) -> Self {
        match g {
            GroupArg::Su => Group::SpecialUnitary,
            GroupArg::U => Group::Unitary,
        }
    }
}

#[derive(Debug, Clone, Args, Serialize)]
pub struct OutputArgs {
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    pub format: Format,
    /// Write here instead of stdout.
    #[arg(long)]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Clone, Args, Serialize)]
pub struct ZetaArgs {
    #[arg(long = "N", value_parser = parse_n_list)]
    #[serde(rename = "N")]
    pub n: NList,
    #[arg(long)]
    pub s: f64,
    /// Raise the cutoff until every enclosure is at most this wide.
    #[arg(long, conflicts_with = "dim_cutoff")]
    pub target_width: Option<f64>,
    #[arg(long)]
    pub dim_cutoff: Option<u64>,
    #[command(flatten)]
    #[serde(flatten)]
    pub out: OutputArgs,
}

#[derive(Debug, Clone, Args, Serialize)]
#[group(required = true, multiple = false)]
pub struct Orientation {
    #[arg(long)]
    pub orientable: bool,
    #[arg(long)]
    pub non_orientable: bool,
}

/// T and q = e^{−T/2} are alternatives.
#[derive(Debug, Clone, Args, Serialize)]
#[group(required = true, multiple = false)]
pub struct Coupling {
    #[arg(long)]
    pub area: Option<f64>,
    #[arg(long)]
    pub q: Option<f64>,
}

impl Coupling {
    pub fn area(&self) -> Result<f64, Error> {
        match (self.area, self.q) {
            (Some(t), _) if t >= 0.0 => Ok(t),
            (Some(t), _) => Err(Error::InvalidParameter(format!(
                "area must be non-negative, got {t}"
            ))),
            (None, Some(q)) if q > 0.0 && q <= 1.0 => Ok(-2.0 * q.ln()),
            (None, Some(q)) => Err(Error::InvalidQ(q)),
            (None, None) => Err(Error::InvalidParameter(
                "one of --area, --q is required".into(),
            )),
        }
    }
}

#[derive(Debug, Clone, Args, Serialize)]
pub struct TruncArgs {
    #[arg(long, default_value_t = 60)]
    pub k_max: u32,
    #[arg(long)]
    pub n_max: Option<u32>,
    #[arg(long, default_value_t = 0.4)]
    pub gamma: f64,
    #[arg(long, default_value_t = DEFAULT_DIM_CUTOFF)]
    pub dim_cutoff: u64,
}

impl TruncArgs {
    pub fn params(&self) -> TruncationParams {
        TruncationParams {
            k_max: self.k_max,
            n_max: self.n_max,
            gamma: self.gamma,
            dim_cutoff: self.dim_cutoff,
        }
    }
}

#[derive(Debug, Clone, Args, Serialize)]
pub struct SurfaceRun {
    #[command(flatten)]
    #[serde(flatten)]
    pub orientation: Orientation,
    #[arg(long)]
    pub genus: u32,
    #[arg(long, value_enum, default_value_t = GroupArg::Su)]
    pub group: GroupArg,
    #[command(flatten)]
    #[serde(flatten)]
    pub coupling: Coupling,
    #[arg(long = "N", value_parser = parse_n_list)]
    #[serde(rename = "N")]
    pub n: NList,
    #[command(flatten)]
    #[serde(flatten)]
    pub trunc: TruncArgs,
    #[command(flatten)]
    #[serde(flatten)]
    pub out: OutputArgs,
}

impl SurfaceRun {
    pub fn spec(&self, n: usize) -> Result<SurfaceSpec, Error> {
        Ok(SurfaceSpec::new(
            self.orientation.orientable,
            self.genus,
            self.coupling.area()?,
            self.group.into(),
            n,
        ))
    }
}

#[derive(Debug, Clone, Args, Serialize)]
pub struct SweepArgs {
    #[arg(long)]
    pub genus: u32,
    #[arg(long, value_enum, default_value_t = GroupArg::Su)]
    pub group: GroupArg,
    #[command(flatten)]
    #[serde(flatten)]
    pub coupling: Coupling,
    #[arg(long = "N", value_parser = parse_n_list)]
    #[serde(rename = "N")]
    pub n: NList,
    #[command(flatten)]
    #[serde(flatten)]
    pub trunc: TruncArgs,
    #[command(flatten)]
    #[serde(flatten)]
    pub out: OutputArgs,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum SuiteArg {
    Identities,
    Fs,
    Sandwich,
    Tails,
    Jacobi,
    Genus3,
}

impl From<SuiteArg> for Suite {
    fn from(s: SuiteArg) -> Self {
        match s {
            SuiteArg::Identities => Suite::Identities,
            SuiteArg::Fs => Suite::Fs,
            SuiteArg::Sandwich => Suite::Sandwich,
            SuiteArg::Tails => Suite::Tails,
            SuiteArg::Jacobi => Suite::Jacobi,
            SuiteArg::Genus3 => Suite::Genus3,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum ReportFormat {
    Text,
    Json,
}

#[derive(Debug, Clone, Args, Serialize)]
pub struct VerifyArgs {
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Suites to run (repeatable or comma separated); all by default.
    #[arg(long, value_enum, value_delimiter = ',')]
    pub suite: Vec<SuiteArg>,
    #[arg(long, value_enum, default_value_t = ReportFormat::Text)]
    pub report: ReportFormat,
    /// Randomised instances for the identities suite.
    #[arg(long, default_value_t = 10_000)]
    pub instances: usize,
    #[arg(long)]
    pub output: Option<PathBuf>,
}
