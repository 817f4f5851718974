//! Subcommand implementations.

use std::fs;
use std::path::{Path, PathBuf};

use qpaint_core::io::{load_image, save_png};
use qpaint_core::measures::{self, MeasureRecord};
use qpaint_core::{alpha_root, palette, sweep, AlphaGrid, AlphaSweepResult, ColorImage, Criterion, RatioCatalog};
use rayon::prelude::*;

use crate::config::{CmcrMode, ReportFormat, RunConfig};
use crate::error::{CliError, CliResult};
use crate::report::{self, CorpusReport, CorpusRow, PredictReport};
use crate::sheet;

fn load(path: &Path) -> CliResult<ColorImage> {
    let loaded = load_image(path)?;
    if loaded.alpha_dropped {
        eprintln!("warning: {} has an alpha channel; it was dropped", path.display());
    }
    Ok(loaded.image)
}

fn stem(path: &Path) -> String {
    path.file_stem()
        .and_then(|s| s.to_str())
        .unwrap_or("image")
        .to_string()
}

fn ensure_out_dir(cfg: &RunConfig) -> CliResult<PathBuf> {
    let dir = cfg.out_dir();
    fs::create_dir_all(&dir)
        .map_err(|e| CliError::Input(format!("cannot create {}: {e}", dir.display())))?;
    Ok(dir)
}

fn write_text(path: &Path, text: &str) -> CliResult<()> {
    fs::write(path, text).map_err(|e| CliError::Input(format!("cannot write {}: {e}", path.display())))
}

fn write_records(
    records: &[MeasureRecord],
    format: ReportFormat,
    path: &Path,
) -> CliResult<()> {
    let text = match format {
        ReportFormat::Csv => report::records_to_csv(records),
        ReportFormat::Json => report::records_to_json(records),
    };
    write_text(path, &text)
}

fn classify_line(cr_value: f64) -> String {
    let catalog = RatioCatalog::standard();
    let name = catalog.classify(cr_value);
    let value = catalog
        .entries()
        .iter()
        .find(|(n, _)| *n == name)
        .map(|(_, v)| *v)
        .unwrap_or(f64::NAN);
    format!("nearest catalog ratio: {name} ({value:.4})")
}

pub fn cmd_analyze(image: &Path, cfg: &RunConfig) -> CliResult<()> {
    let img = load(image)?;
    let record = MeasureRecord::compute(&img, 1.0, &cfg.measures)?;

    println!(
        "{} ({}x{} px)",
        image.display(),
        img.height(),
        img.width()
    );
    report::print_record_table(std::slice::from_ref(&record));
    println!("{}", classify_line(record.cr));

    if cfg.out.is_some() {
        let dir = ensure_out_dir(cfg)?;
        let path = dir.join(format!("{}_analyze.{}", stem(image), cfg.format.extension()));
        write_records(std::slice::from_ref(&record), cfg.format, &path)?;
        println!("wrote {}", path.display());
    }
    Ok(())
}

fn run_sweep(img: &ColorImage, cfg: &RunConfig, grid: &AlphaGrid) -> CliResult<AlphaSweepResult> {
    sweep(img, grid, cfg.criterion, cfg.real_mode, &cfg.measures).map_err(CliError::from)
}

pub fn cmd_sweep(image: &Path, cfg: &RunConfig) -> CliResult<()> {
    let img = load(image)?;
    let grid = cfg.grid.unwrap_or_else(AlphaGrid::table_default);
    let result = run_sweep(&img, cfg, &grid)?;

    report::print_record_table(&result.records);
    println!(
        "best alpha by {}: {}",
        result.criterion.as_str(),
        report::format_alpha(result.best_alpha)
    );

    let dir = ensure_out_dir(cfg)?;
    let table_path = dir.join(format!("{}_sweep.{}", stem(image), cfg.format.extension()));
    write_records(&result.records, cfg.format, &table_path)?;
    println!("wrote {}", table_path.display());

    if cfg.contact_sheet {
        let alphas = grid.values();
        let rooted: Vec<(String, ColorImage)> = alphas
            .par_iter()
            .map(|&a| {
                alpha_root(&img, a, cfg.real_mode)
                    .map(|out| (format!("a={}", report::format_alpha(a)), out))
            })
            .collect::<Result<_, _>>()
            .map_err(CliError::from)?;
        let mut tiles: Vec<(String, &ColorImage)> = vec![("orig".to_string(), &img)];
        tiles.extend(rooted.iter().map(|(label, im)| (label.clone(), im)));
        let sheet_img = sheet::contact_sheet(&tiles);
        let sheet_path = dir.join(format!("{}_sheet.png", stem(image)));
        save_png(&sheet_img, &sheet_path)?;
        println!("wrote {}", sheet_path.display());
    }
    Ok(())
}

pub fn cmd_enhance(image: &Path, cfg: &RunConfig) -> CliResult<()> {
    let alpha = cfg
        .alpha
        .ok_or_else(|| CliError::Config("enhance needs --alpha (or `alpha` in the config file)".into()))?;
    let img = load(image)?;
    let out = alpha_root(&img, alpha, cfg.real_mode)?;
    let dir = ensure_out_dir(cfg)?;
    let path = dir.join(format!(
        "{}_alpha{}.png",
        stem(image),
        report::format_alpha(alpha)
    ));
    save_png(&out, &path)?;
    println!("wrote {}", path.display());
    Ok(())
}

fn correct_image(img: &ColorImage, cfg: &RunConfig) -> CliResult<(ColorImage, f64)> {
    let cr_before = measures::cr(img, &cfg.measures);
    let corrected = match cfg.cmcr_mode {
        CmcrMode::SelfRatio => palette::cmcr_self_eps(img, cfg.measures.eps_cr),
        CmcrMode::Target => {
            let target = cfg.target_ratio.unwrap_or(cr_before);
            palette::cmcr_target(img, target)?
        }
    };
    Ok((corrected, cr_before))
}

pub fn cmd_correct(image: &Path, cfg: &RunConfig) -> CliResult<()> {
    let img = load(image)?;
    let (corrected, cr_before) = correct_image(&img, cfg)?;
    let cr_after = measures::cr(&corrected, &cfg.measures);

    let dir = ensure_out_dir(cfg)?;
    let path = dir.join(format!("{}_cmcr.png", stem(image)));
    save_png(&corrected, &path)?;
    println!("CR before: {cr_before:.4}  after: {cr_after:.4}");
    println!("{}", classify_line(cr_before));
    println!("wrote {}", path.display());
    Ok(())
}

fn criterion_value(
    record: &MeasureRecord,
    rooted: &ColorImage,
    cfg: &RunConfig,
) -> CliResult<f64> {
    Ok(match cfg.criterion {
        Criterion::Emec => record.emec,
        Criterion::Cr => record.cr,
        Criterion::M => record.m,
        Criterion::Emeq => {
            measures::emeq(&rooted.to_quaternion(cfg.real_mode), &cfg.measures)?
        }
    })
}

pub fn cmd_predict(image: &Path, cfg: &RunConfig) -> CliResult<()> {
    let img = load(image)?;
    let grid = cfg.grid.unwrap_or_else(AlphaGrid::search_default);
    let result = run_sweep(&img, cfg, &grid)?;
    let best_alpha = result.best_alpha;
    let best_record = *result
        .records
        .iter()
        .find(|r| r.alpha == best_alpha)
        .expect("best alpha comes from the records");

    let enhanced = alpha_root(&img, best_alpha, cfg.real_mode)?;
    let value = criterion_value(&best_record, &enhanced, cfg)?;
    let (corrected, _) = correct_image(&enhanced, cfg)?;

    let dir = ensure_out_dir(cfg)?;
    let enhanced_path = dir.join(format!(
        "{}_alpha{}.png",
        stem(image),
        report::format_alpha(best_alpha)
    ));
    let corrected_path = dir.join(format!("{}_cmcr.png", stem(image)));
    save_png(&enhanced, &enhanced_path)?;
    save_png(&corrected, &corrected_path)?;

    let predict = PredictReport {
        image: image.display().to_string(),
        criterion: cfg.criterion.as_str().to_string(),
        best_alpha,
        criterion_value: value,
        cr_original: measures::cr(&img, &cfg.measures),
        cr_enhanced: best_record.cr,
        cr_corrected: measures::cr(&corrected, &cfg.measures),
        enhanced_path: enhanced_path.display().to_string(),
        corrected_path: corrected_path.display().to_string(),
    };
    let report_path = dir.join(format!("{}_predict.{}", stem(image), cfg.format.extension()));
    let text = match cfg.format {
        ReportFormat::Csv => predict.to_csv(),
        ReportFormat::Json => predict.to_json(),
    };
    write_text(&report_path, &text)?;

    println!(
        "best alpha by {}: {} (value {:.4})",
        predict.criterion,
        report::format_alpha(best_alpha),
        value
    );
    println!(
        "CR original {:.4} -> enhanced {:.4} -> corrected {:.4}",
        predict.cr_original, predict.cr_enhanced, predict.cr_corrected
    );
    println!("{}", classify_line(predict.cr_enhanced));
    println!("wrote {}", enhanced_path.display());
    println!("wrote {}", corrected_path.display());
    println!("wrote {}", report_path.display());
    Ok(())
}

fn list_corpus(dir: &Path) -> CliResult<Vec<PathBuf>> {
    let entries = fs::read_dir(dir)
        .map_err(|e| CliError::Input(format!("cannot read {}: {e}", dir.display())))?;
    let mut files: Vec<PathBuf> = entries
        .filter_map(|e| e.ok().map(|e| e.path()))
        .filter(|p| {
            p.extension()
                .and_then(|e| e.to_str())
                .map(|e| {
                    let e = e.to_ascii_lowercase();
                    e == "png" || e == "jpg" || e == "jpeg"
                })
                .unwrap_or(false)
        })
        .collect();
    files.sort();
    if files.is_empty() {
        return Err(CliError::Input(format!(
            "no PNG/JPEG images found in {}",
            dir.display()
        )));
    }
    Ok(files)
}

pub fn cmd_batch(dir: &Path, artist: Option<String>, cfg: &RunConfig) -> CliResult<()> {
    let files = list_corpus(dir)?;
    let grid = cfg.grid.unwrap_or_else(AlphaGrid::table_default);
    let artist = artist.or_else(|| cfg.artist.clone());

    let process = || -> CliResult<Vec<(CorpusRow, f64)>> {
        files
            .par_iter()
            .map(|path| {
                let img = load(path)?;
                let original_cr = measures::cr(&img, &cfg.measures);
                let result = run_sweep(&img, cfg, &grid)?;
                let best = *result
                    .records
                    .iter()
                    .find(|r| r.alpha == result.best_alpha)
                    .expect("best alpha comes from the records");
                Ok((
                    CorpusRow {
                        image: path
                            .file_name()
                            .and_then(|s| s.to_str())
                            .unwrap_or("image")
                            .to_string(),
                        record: best,
                    },
                    original_cr,
                ))
            })
            .collect()
    };

    let processed = match cfg.workers {
        Some(n) => rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build()
            .map_err(|e| CliError::Config(format!("cannot build worker pool: {e}")))?
            .install(process),
        None => process(),
    }?;

    let (rows, originals): (Vec<CorpusRow>, Vec<f64>) = processed.into_iter().unzip();
    let corpus = CorpusReport::build(artist, rows, &originals);

    println!(
        "{} images from {}",
        corpus.count,
        dir.display()
    );
    report::print_record_table(
        &corpus
            .rows
            .iter()
            .map(|r| r.record)
            .collect::<Vec<_>>(),
    );
    if let Some(name) = &corpus.artist {
        println!("artist: {name}");
    }
    println!(
        "artist ratio over originals: {:.4} ({})",
        corpus.artist_ratio_original,
        classify_line(corpus.artist_ratio_original)
    );
    println!(
        "artist ratio over best-alpha images: {:.4} ({})",
        corpus.artist_ratio_enhanced,
        classify_line(corpus.artist_ratio_enhanced)
    );

    let out_dir = ensure_out_dir(cfg)?;
    let path = out_dir.join(format!("batch_report.{}", cfg.format.extension()));
    let text = match cfg.format {
        ReportFormat::Csv => corpus.to_csv(),
        ReportFormat::Json => corpus.to_json(),
    };
    write_text(&path, &text)?;
    println!("wrote {}", path.display());
    Ok(())
}
