//! Argument surface. One shared option block serves every subcommand; the
//! same keys (minus the leading dashes) are accepted in a `--config` file,
//! with command-line flags taking precedence.

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(
    name = "qpaint",
    version,
    about = "Frequency-domain color enhancement and palette-ratio analysis for painting images"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Measure a single image as-is and report one record.
    Analyze {
        image: PathBuf,
        #[command(flatten)]
        opts: CommonOpts,
    },
    /// Alpha-root the image over a grid and tabulate every measure.
    Sweep {
        image: PathBuf,
        #[command(flatten)]
        opts: CommonOpts,
    },
    /// Alpha-root the image at a fixed alpha and write the result.
    Enhance {
        image: PathBuf,
        #[command(flatten)]
        opts: CommonOpts,
    },
    /// Rewrite pixel triples toward a geometric color-ratio progression.
    Correct {
        image: PathBuf,
        #[command(flatten)]
        opts: CommonOpts,
    },
    /// Pick the best alpha by criterion, write the enhanced and
    /// ratio-corrected images, and report the ratios.
    Predict {
        image: PathBuf,
        #[command(flatten)]
        opts: CommonOpts,
    },
    /// Process every image in a directory and aggregate a corpus report.
    Batch {
        dir: PathBuf,
        /// Label for the corpus (e.g. the painter's name).
        #[arg(long)]
        artist: Option<String>,
        #[command(flatten)]
        opts: CommonOpts,
    },
}

#[derive(Debug, Clone, Default, Args)]
pub struct CommonOpts {
    /// Alpha for `enhance` (also accepted, and ignored, elsewhere).
    #[arg(long)]
    pub alpha: Option<f64>,

    /// Alpha grid as LO:STEP:HI, e.g. 0.80:0.02:1.00.
    #[arg(long, value_name = "LO:STEP:HI")]
    pub alpha_grid: Option<String>,

    /// Measure maximized when selecting the best alpha.
    #[arg(long, value_enum)]
    pub criterion: Option<CriterionArg>,

    /// Real (scalar) part used by the quaternion embedding.
    #[arg(long, value_enum)]
    pub real_mode: Option<RealModeArg>,

    /// Side length of the square measure blocks.
    #[arg(long)]
    pub block_size: Option<usize>,

    /// Epsilon in the denominators of the log-deviation measures.
    #[arg(long)]
    pub eps_denominator: Option<f64>,

    /// Floor applied to channels before logarithms.
    #[arg(long)]
    pub eps_log: Option<f64>,

    /// Epsilon guarding the block max/min ratio.
    #[arg(long)]
    pub eps_block: Option<f64>,

    /// Epsilon guarding the per-pixel color ratio.
    #[arg(long)]
    pub eps_cr: Option<f64>,

    /// How `correct`/`predict` rewrite the smallest channel.
    #[arg(long, value_enum)]
    pub cmcr_mode: Option<CmcrModeArg>,

    /// Fixed target ratio for --cmcr-mode target (defaults to the image's
    /// own mean color ratio).
    #[arg(long)]
    pub target_ratio: Option<f64>,

    /// Report file format.
    #[arg(long, value_enum)]
    pub format: Option<FormatArg>,

    /// Also write a tiled contact sheet (sweep).
    #[arg(long)]
    pub contact_sheet: bool,

    /// Output directory (default: current directory).
    #[arg(long, value_name = "DIR")]
    pub out: Option<PathBuf>,

    /// Flat key = value config file; flags given here override it.
    #[arg(long, value_name = "FILE")]
    pub config: Option<PathBuf>,

    /// Worker threads for batch processing.
    #[arg(long, value_name = "N")]
    pub workers: Option<usize>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum CriterionArg {
    Emeq,
    Emec,
    Cr,
    M,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum RealModeArg {
    Brightness,
    Zero,
    GrayMean,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum CmcrModeArg {
    /// Per-pixel ratio of the pixel itself.
    #[value(name = "self")]
    SelfRatio,
    /// One fixed ratio for the whole image.
    Target,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum FormatArg {
    Csv,
    Json,
}
