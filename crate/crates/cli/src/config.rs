//! Run configuration: defaults, config-file values, and flag overrides.
//!
//! The config file is a flat `key = value` text file whose keys mirror the
//! long flags without the leading dashes (`alpha-grid = 0.80:0.02:1.00`).
//! Blank lines and `#` comments are ignored. Command-line flags win over
//! file values; anything still unset falls back to the defaults.

use std::collections::HashMap;
use std::fs;
use std::path::{Path, PathBuf};

use qpaint_core::{AlphaGrid, Criterion, MeasureConfig, RealPart};

use crate::cli::{CmcrModeArg, CommonOpts, CriterionArg, FormatArg, RealModeArg};
use crate::error::{CliError, CliResult};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ReportFormat {
    Csv,
    Json,
}

impl ReportFormat {
    pub fn extension(self) -> &'static str {
        match self {
            ReportFormat::Csv => "csv",
            ReportFormat::Json => "json",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CmcrMode {
    SelfRatio,
    Target,
}

/// Fully resolved settings for one command invocation.
#[derive(Debug, Clone)]
pub struct RunConfig {
    pub alpha: Option<f64>,
    pub grid: Option<AlphaGrid>,
    pub criterion: Criterion,
    pub real_mode: RealPart,
    pub measures: MeasureConfig,
    pub cmcr_mode: CmcrMode,
    pub target_ratio: Option<f64>,
    pub format: ReportFormat,
    pub contact_sheet: bool,
    pub out: Option<PathBuf>,
    pub workers: Option<usize>,
    /// Artist label from the config file (the --artist flag overrides it).
    pub artist: Option<String>,
}

impl RunConfig {
    pub fn resolve(opts: &CommonOpts) -> CliResult<Self> {
        let file = match &opts.config {
            Some(path) => parse_config_file(path)?,
            None => HashMap::new(),
        };

        let alpha = pick(opts.alpha, &file, "alpha", parse_f64)?;
        let grid = pick(
            opts.alpha_grid.as_deref().map(str::to_owned),
            &file,
            "alpha-grid",
            |s| Ok(s.to_owned()),
        )?
        .map(|s| parse_grid(&s))
        .transpose()?;
        let criterion = pick(
            opts.criterion.map(criterion_from_arg),
            &file,
            "criterion",
            parse_criterion,
        )?
        .unwrap_or(Criterion::Emeq);
        let real_mode = pick(
            opts.real_mode.map(real_mode_from_arg),
            &file,
            "real-mode",
            parse_real_mode,
        )?
        .unwrap_or(RealPart::Brightness);

        let defaults = MeasureConfig::default();
        let measures = MeasureConfig {
            block_size: pick(opts.block_size, &file, "block-size", parse_usize)?
                .unwrap_or(defaults.block_size),
            eps_denominator: pick(opts.eps_denominator, &file, "eps-denominator", parse_f64)?
                .unwrap_or(defaults.eps_denominator),
            eps_log: pick(opts.eps_log, &file, "eps-log", parse_f64)?.unwrap_or(defaults.eps_log),
            eps_block: pick(opts.eps_block, &file, "eps-block", parse_f64)?
                .unwrap_or(defaults.eps_block),
            eps_cr: pick(opts.eps_cr, &file, "eps-cr", parse_f64)?.unwrap_or(defaults.eps_cr),
        };
        measures.validate().map_err(CliError::from)?;

        let cmcr_mode = pick(
            opts.cmcr_mode.map(cmcr_from_arg),
            &file,
            "cmcr-mode",
            parse_cmcr_mode,
        )?
        .unwrap_or(CmcrMode::Target);
        let target_ratio = pick(opts.target_ratio, &file, "target-ratio", parse_f64)?;
        if let Some(t) = target_ratio {
            if !(t >= 1.0) {
                return Err(CliError::Config(format!(
                    "target-ratio must be at least 1 (got {t})"
                )));
            }
        }

        let format = pick(
            opts.format.map(format_from_arg),
            &file,
            "format",
            parse_format,
        )?
        .unwrap_or(ReportFormat::Csv);
        let contact_sheet = if opts.contact_sheet {
            true
        } else {
            pick(None, &file, "contact-sheet", parse_bool)?.unwrap_or(false)
        };
        let out = pick(
            opts.out.clone(),
            &file,
            "out",
            |s| Ok(PathBuf::from(s)),
        )?;
        let workers = pick(opts.workers, &file, "workers", parse_usize)?;
        if workers == Some(0) {
            return Err(CliError::Config("workers must be at least 1".into()));
        }
        let artist = file.get("artist").cloned();

        Ok(Self {
            alpha,
            grid,
            criterion,
            real_mode,
            measures,
            cmcr_mode,
            target_ratio,
            format,
            contact_sheet,
            out,
            workers,
            artist,
        })
    }

    pub fn out_dir(&self) -> PathBuf {
        self.out.clone().unwrap_or_else(|| PathBuf::from("."))
    }
}

const KNOWN_KEYS: &[&str] = &[
    "alpha",
    "alpha-grid",
    "criterion",
    "real-mode",
    "block-size",
    "eps-denominator",
    "eps-log",
    "eps-block",
    "eps-cr",
    "cmcr-mode",
    "target-ratio",
    "format",
    "contact-sheet",
    "out",
    "config",
    "workers",
    "artist",
];

pub fn parse_config_file(path: &Path) -> CliResult<HashMap<String, String>> {
    let text = fs::read_to_string(path)
        .map_err(|e| CliError::Config(format!("cannot read config {}: {e}", path.display())))?;
    let mut map = HashMap::new();
    for (lineno, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let (key, value) = line.split_once('=').ok_or_else(|| {
            CliError::Config(format!(
                "{}:{}: expected `key = value`, got `{line}`",
                path.display(),
                lineno + 1
            ))
        })?;
        let key = key.trim().to_ascii_lowercase();
        if !KNOWN_KEYS.contains(&key.as_str()) {
            return Err(CliError::Config(format!(
                "{}:{}: unknown key `{key}`",
                path.display(),
                lineno + 1
            )));
        }
        map.insert(key, value.trim().to_string());
    }
    Ok(map)
}

/// CLI value if present, else the parsed file value, else `None`.
fn pick<T>(
    cli: Option<T>,
    file: &HashMap<String, String>,
    key: &str,
    parse: impl Fn(&str) -> CliResult<T>,
) -> CliResult<Option<T>> {
    if cli.is_some() {
        return Ok(cli);
    }
    match file.get(key) {
        Some(raw) => parse(raw)
            .map(Some)
            .map_err(|e| CliError::Config(format!("config key `{key}`: {e}"))),
        None => Ok(None),
    }
}

fn parse_f64(s: &str) -> CliResult<f64> {
    s.parse()
        .map_err(|_| CliError::Config(format!("`{s}` is not a number")))
}

fn parse_usize(s: &str) -> CliResult<usize> {
    s.parse()
        .map_err(|_| CliError::Config(format!("`{s}` is not a non-negative integer")))
}

fn parse_bool(s: &str) -> CliResult<bool> {
    match s.to_ascii_lowercase().as_str() {
        "true" | "yes" | "1" => Ok(true),
        "false" | "no" | "0" => Ok(false),
        _ => Err(CliError::Config(format!("`{s}` is not a boolean"))),
    }
}

pub fn parse_grid(s: &str) -> CliResult<AlphaGrid> {
    let parts: Vec<&str> = s.split(':').collect();
    if parts.len() != 3 {
        return Err(CliError::Config(format!(
            "alpha grid must be LO:STEP:HI (got `{s}`)"
        )));
    }
    let lo = parse_f64(parts[0])?;
    let step = parse_f64(parts[1])?;
    let hi = parse_f64(parts[2])?;
    AlphaGrid::new(lo, step, hi).map_err(|e| CliError::Config(e.to_string()))
}

fn parse_criterion(s: &str) -> CliResult<Criterion> {
    match s.to_ascii_lowercase().as_str() {
        "emeq" => Ok(Criterion::Emeq),
        "emec" => Ok(Criterion::Emec),
        "cr" => Ok(Criterion::Cr),
        "m" => Ok(Criterion::M),
        _ => Err(CliError::Config(format!(
            "criterion must be emeq|emec|cr|m (got `{s}`)"
        ))),
    }
}

fn parse_real_mode(s: &str) -> CliResult<RealPart> {
    match s.to_ascii_lowercase().as_str() {
        "brightness" => Ok(RealPart::Brightness),
        "zero" => Ok(RealPart::Zero),
        "gray-mean" | "gray_mean" => Ok(RealPart::GrayMean),
        _ => Err(CliError::Config(format!(
            "real-mode must be brightness|zero|gray-mean (got `{s}`)"
        ))),
    }
}

fn parse_cmcr_mode(s: &str) -> CliResult<CmcrMode> {
    match s.to_ascii_lowercase().as_str() {
        "self" => Ok(CmcrMode::SelfRatio),
        "target" => Ok(CmcrMode::Target),
        _ => Err(CliError::Config(format!(
            "cmcr-mode must be self|target (got `{s}`)"
        ))),
    }
}

fn parse_format(s: &str) -> CliResult<ReportFormat> {
    match s.to_ascii_lowercase().as_str() {
        "csv" => Ok(ReportFormat::Csv),
        "json" => Ok(ReportFormat::Json),
        _ => Err(CliError::Config(format!(
            "format must be csv|json (got `{s}`)"
        ))),
    }
}

fn criterion_from_arg(a: CriterionArg) -> Criterion {
    match a {
        CriterionArg::Emeq => Criterion::Emeq,
        CriterionArg::Emec => Criterion::Emec,
        CriterionArg::Cr => Criterion::Cr,
        CriterionArg::M => Criterion::M,
    }
}

fn real_mode_from_arg(a: RealModeArg) -> RealPart {
    match a {
        RealModeArg::Brightness => RealPart::Brightness,
        RealModeArg::Zero => RealPart::Zero,
        RealModeArg::GrayMean => RealPart::GrayMean,
    }
}

fn cmcr_from_arg(a: CmcrModeArg) -> CmcrMode {
    match a {
        CmcrModeArg::SelfRatio => CmcrMode::SelfRatio,
        CmcrModeArg::Target => CmcrMode::Target,
    }
}

fn format_from_arg(a: FormatArg) -> ReportFormat {
    match a {
        FormatArg::Csv => ReportFormat::Csv,
        FormatArg::Json => ReportFormat::Json,
    }
}
