//! Report rendering: CSV tables (4 decimal places) and full-precision JSON.

use qpaint_core::MeasureRecord;
use serde::{Deserialize, Serialize};

pub const CSV_HEADER: &str = "alpha,CR,M1,M2,M3,M,EMEC,EMEC2";

fn fmt4(v: f64) -> String {
    format!("{v:.4}")
}

pub fn record_csv_row(rec: &MeasureRecord) -> String {
    [
        rec.alpha, rec.cr, rec.m1, rec.m2, rec.m3, rec.m, rec.emec, rec.emec2,
    ]
    .map(fmt4)
    .join(",")
}

/// Record table with the canonical header, one row per record.
pub fn records_to_csv(records: &[MeasureRecord]) -> String {
    let mut out = String::from(CSV_HEADER);
    out.push('\n');
    for rec in records {
        out.push_str(&record_csv_row(rec));
        out.push('\n');
    }
    out
}

/// Full-precision JSON array of the same records.
pub fn records_to_json(records: &[MeasureRecord]) -> String {
    serde_json::to_string_pretty(records).expect("records serialize")
}

/// One line per record for terminal output.
pub fn print_record_table(records: &[MeasureRecord]) {
    println!(
        "{:>6}  {:>9}  {:>9}  {:>9}  {:>9}  {:>9}  {:>9}  {:>9}",
        "alpha", "CR", "M1", "M2", "M3", "M", "EMEC", "EMEC2"
    );
    for r in records {
        println!(
            "{:>6.2}  {:>9.4}  {:>9.4}  {:>9.4}  {:>9.4}  {:>9.4}  {:>9.4}  {:>9.4}",
            r.alpha, r.cr, r.m1, r.m2, r.m3, r.m, r.emec, r.emec2
        );
    }
}

/// Per-image rows plus the corpus average, as written by `batch`.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct CorpusReport {
    pub artist: Option<String>,
    pub count: usize,
    pub rows: Vec<CorpusRow>,
    pub average: MeasureRecord,
    /// Mean color ratio over the unprocessed images.
    pub artist_ratio_original: f64,
    /// Mean color ratio over the best-alpha images (the rows above).
    pub artist_ratio_enhanced: f64,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct CorpusRow {
    pub image: String,
    #[serde(flatten)]
    pub record: MeasureRecord,
}

impl CorpusReport {
    pub fn build(
        artist: Option<String>,
        rows: Vec<CorpusRow>,
        originals_cr: &[f64],
    ) -> Self {
        let count = rows.len();
        let k = count as f64;
        let mut average = MeasureRecord {
            alpha: 0.0,
            cr: 0.0,
            m1: 0.0,
            m2: 0.0,
            m3: 0.0,
            m: 0.0,
            emec: 0.0,
            emec2: 0.0,
        };
        for row in &rows {
            let r = &row.record;
            average.alpha += r.alpha;
            average.cr += r.cr;
            average.m1 += r.m1;
            average.m2 += r.m2;
            average.m3 += r.m3;
            average.m += r.m;
            average.emec += r.emec;
            average.emec2 += r.emec2;
        }
        average.alpha /= k;
        average.cr /= k;
        average.m1 /= k;
        average.m2 /= k;
        average.m3 /= k;
        average.m /= k;
        average.emec /= k;
        average.emec2 /= k;

        let artist_ratio_original = originals_cr.iter().sum::<f64>() / k;
        let artist_ratio_enhanced = rows.iter().map(|r| r.record.cr).sum::<f64>() / k;
        Self {
            artist,
            count,
            rows,
            average,
            artist_ratio_original,
            artist_ratio_enhanced,
        }
    }

    pub fn to_csv(&self) -> String {
        let mut out = format!("image,{CSV_HEADER}\n");
        for row in &self.rows {
            out.push_str(&csv_escape(&row.image));
            out.push(',');
            out.push_str(&record_csv_row(&row.record));
            out.push('\n');
        }
        out.push_str(&csv_escape(&format!(
            "Average (over {} paintings)",
            self.count
        )));
        out.push(',');
        out.push_str(&record_csv_row(&self.average));
        out.push('\n');
        out
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

fn csv_escape(field: &str) -> String {
    if field.contains(',') || field.contains('"') || field.contains('\n') {
        format!("\"{}\"", field.replace('"', "\"\""))
    } else {
        field.to_string()
    }
}

/// Summary written by `predict`.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct PredictReport {
    pub image: String,
    pub criterion: String,
    pub best_alpha: f64,
    pub criterion_value: f64,
    pub cr_original: f64,
    pub cr_enhanced: f64,
    pub cr_corrected: f64,
    pub enhanced_path: String,
    pub corrected_path: String,
}

impl PredictReport {
    pub fn to_csv(&self) -> String {
        let mut out = String::from(
            "image,criterion,best_alpha,criterion_value,cr_original,cr_enhanced,cr_corrected\n",
        );
        out.push_str(&format!(
            "{},{},{},{},{},{},{}\n",
            csv_escape(&self.image),
            self.criterion,
            fmt4(self.best_alpha),
            fmt4(self.criterion_value),
            fmt4(self.cr_original),
            fmt4(self.cr_enhanced),
            fmt4(self.cr_corrected),
        ));
        out
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

/// `0.8900 -> "0.89"`, `1.0000 -> "1.0"`; used in output file names.
pub fn format_alpha(alpha: f64) -> String {
    let mut s = format!("{alpha:.4}");
    while s.ends_with('0') && !s.ends_with(".0") {
        s.pop();
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rec(alpha: f64) -> MeasureRecord {
        MeasureRecord {
            alpha,
            cr: 1.5,
            m1: 0.25,
            m2: -0.5,
            m3: 2.0,
            m: -0.62996,
            emec: 12.34567,
            emec2: 13.5,
        }
    }

    #[test]
    fn csv_has_exact_header_and_rounding() {
        let records = vec![rec(0.8), rec(1.0)];
        let csv = records_to_csv(&records);
        let mut lines = csv.lines();
        assert_eq!(lines.next().unwrap(), "alpha,CR,M1,M2,M3,M,EMEC,EMEC2");
        let row = lines.next().unwrap();
        assert!(row.starts_with("0.8000,1.5000,0.2500,-0.5000,2.0000,"));
        assert!(row.contains("12.3457"));
    }

    #[test]
    fn alpha_file_labels() {
        assert_eq!(format_alpha(0.89), "0.89");
        assert_eq!(format_alpha(1.0), "1.0");
        assert_eq!(format_alpha(0.825), "0.825");
        assert_eq!(format_alpha(0.8), "0.8");
    }

    #[test]
    fn corpus_average_is_row_mean() {
        let rows = vec![
            CorpusRow {
                image: "a.png".into(),
                record: rec(0.8),
            },
            CorpusRow {
                image: "b.png".into(),
                record: rec(1.0),
            },
        ];
        let report = CorpusReport::build(Some("Tester".into()), rows, &[1.2, 1.4]);
        assert_eq!(report.count, 2);
        assert!((report.average.alpha - 0.9).abs() < 1e-12);
        assert!((report.artist_ratio_original - 1.3).abs() < 1e-12);
        assert!((report.artist_ratio_enhanced - 1.5).abs() < 1e-12);
        let csv = report.to_csv();
        assert_eq!(csv.lines().count(), 4);
        assert!(csv.contains("Average (over 2 paintings),"));
    }
}
