use std::collections::BTreeMap;
use std::fmt;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::str::FromStr;

use serde::Serialize;

use super::{AggregateRow, MonthlyRow, AGGREGATE_HEADER, MONTHLY_HEADER, PeriodScheme, OTHER_PERIOD};
use crate::error::{Error, Result};
use crate::loanlex::InductionReport;
use crate::pattern::PatternClass;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
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

impl fmt::Display for ReportFormat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.extension())
    }
}

impl FromStr for ReportFormat {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        match s {
            "csv" => Ok(ReportFormat::Csv),
            "json" => Ok(ReportFormat::Json),
            other => Err(format!("unknown report format {other:?}; expected csv or json")),
        }
    }
}

/// Everything written by [`emit_reports`].
#[derive(Debug, Clone, Copy)]
pub struct Reports<'a> {
    pub scheme: &'a PeriodScheme,
    pub rows: &'a [AggregateRow],
    pub monthly: &'a [MonthlyRow],
    /// Borrowed tokens per matched pattern over the whole corpus.
    pub pattern_counts: &'a BTreeMap<String, u64>,
    /// Class of every registry pattern; patterns missing here count as `MANUAL`.
    pub pattern_classes: &'a BTreeMap<String, PatternClass>,
    pub induction: Option<&'a InductionReport>,
}

/// Label for borrowed tokens whose pattern is not in the registry.
pub const MANUAL_CLASS: &str = "MANUAL";

/// Renders every report file and moves them into `out_dir`.
///
/// All files are rendered and written to temporary names first; only when
/// every write succeeded are they renamed into place. Returns the final
/// paths in a fixed order.
pub fn emit_reports(reports: &Reports<'_>, out_dir: &Path, formats: &[ReportFormat]) -> Result<Vec<PathBuf>> {
    let files = render(reports, formats)?;
    fs::create_dir_all(out_dir).map_err(|e| Error::io(out_dir, e))?;
    let mut staged: Vec<(PathBuf, PathBuf)> = Vec::with_capacity(files.len());
    for (name, bytes) in &files {
        let tmp = out_dir.join(format!(".{name}.tmp"));
        let written = fs::File::create(&tmp).and_then(|mut f| {
            f.write_all(bytes)?;
            f.sync_all()
        });
        if let Err(e) = written {
            for (t, _) in &staged {
                let _ = fs::remove_file(t);
            }
            let _ = fs::remove_file(&tmp);
            return Err(Error::io(&tmp, e));
        }
        staged.push((tmp, out_dir.join(name)));
    }
    let mut out = Vec::with_capacity(staged.len());
    for (tmp, dest) in staged {
        fs::rename(&tmp, &dest).map_err(|e| Error::io(&dest, e))?;
        out.push(dest);
    }
    Ok(out)
}

/// File names and contents, without touching the file system.
pub fn render(reports: &Reports<'_>, formats: &[ReportFormat]) -> Result<Vec<(String, Vec<u8>)>> {
    let mut files = Vec::new();
    for &format in formats {
        let ext = format.extension();
        files.push((
            format!("aggregates_{}.{ext}", reports.scheme.name),
            table(reports.rows, &AGGREGATE_HEADER, format)?,
        ));
        files.push((format!("monthly_series.{ext}"), table(reports.monthly, &MONTHLY_HEADER, format)?));
    }
    if let Some(induction) = reports.induction {
        files.push(("induction_report.json".to_owned(), json(induction)?));
    }
    for (family, points) in plot_series(reports) {
        files.push((format!("series_{family}.csv"), xy_csv(&points)?));
    }
    Ok(files)
}

type Points = Vec<(String, String)>;

/// Two-column plot data, one series per figure family.
pub fn plot_series(reports: &Reports<'_>) -> Vec<(&'static str, Points)> {
    let monthly = reports.monthly;
    let articles = monthly.iter().map(|m| (m.month.clone(), m.articles.to_string())).collect();
    let cs_monthly = monthly.iter().map(|m| (m.month.clone(), m.cs_rate_mean.to_string())).collect();

    let mut patterns: Vec<(&String, &u64)> = reports.pattern_counts.iter().collect();
    patterns.sort_by(|a, b| b.1.cmp(a.1).then(a.0.cmp(b.0)));
    let pattern_points = patterns.iter().map(|(p, c)| ((*p).clone(), c.to_string())).collect();

    let mut classes: BTreeMap<&str, u64> = BTreeMap::new();
    for (p, c) in reports.pattern_counts {
        let class = reports.pattern_classes.get(p).map_or(MANUAL_CLASS, |k| k.name());
        *classes.entry(class).or_default() += c;
    }
    let class_points = classes.iter().map(|(k, c)| ((*k).to_owned(), c.to_string())).collect();

    let (means, sds) = period_cs_stats(reports.scheme, monthly);
    vec![
        ("articles_monthly", articles),
        ("patterns", pattern_points),
        ("pattern_classes", class_points),
        ("cs_rate_monthly", cs_monthly),
        ("cs_rate_period_mean", means),
        ("cs_rate_period_sd", sds),
    ]
}

/// Mean and sample standard deviation of the monthly CS rate per period.
fn period_cs_stats(scheme: &PeriodScheme, monthly: &[MonthlyRow]) -> (Points, Points) {
    let mut by_period: BTreeMap<usize, Vec<f64>> = BTreeMap::new();
    for m in monthly {
        let Ok(date) = chrono::NaiveDate::parse_from_str(&format!("{}-01", m.month), "%Y-%m-%d") else {
            continue;
        };
        let slot = scheme
            .periods
            .iter()
            .position(|p| p.start <= date && date <= p.end)
            .unwrap_or(scheme.periods.len());
        by_period.entry(slot).or_default().push(m.cs_rate_mean);
    }
    let mut means = Vec::new();
    let mut sds = Vec::new();
    for (slot, values) in by_period {
        let label = scheme.periods.get(slot).map_or(OTHER_PERIOD, |p| p.label.as_str()).to_owned();
        let n = values.len() as f64;
        let mean = values.iter().sum::<f64>() / n;
        let sd = if values.len() > 1 {
            (values.iter().map(|v| (v - mean).powi(2)).sum::<f64>() / (n - 1.0)).sqrt()
        } else {
            0.0
        };
        means.push((label.clone(), mean.to_string()));
        sds.push((label, sd.to_string()));
    }
    (means, sds)
}

fn table<T: Serialize>(rows: &[T], header: &[&str], format: ReportFormat) -> Result<Vec<u8>> {
    match format {
        ReportFormat::Json => json(rows),
        ReportFormat::Csv => {
            // header written by hand so that empty tables still carry it
            let mut w = csv::WriterBuilder::new().has_headers(false).from_writer(Vec::new());
            w.write_record(header)?;
            for r in rows {
                w.serialize(r)?;
            }
            finish_csv(w)
        }
    }
}

fn xy_csv(points: &Points) -> Result<Vec<u8>> {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(["x", "y"])?;
    for (x, y) in points {
        w.write_record([x, y])?;
    }
    finish_csv(w)
}

fn finish_csv(w: csv::Writer<Vec<u8>>) -> Result<Vec<u8>> {
    w.into_inner()
        .map_err(|e| Error::Io {
            path: PathBuf::from("<csv buffer>"),
            source: e.into_error(),
        })
}

fn json<T: Serialize + ?Sized>(value: &T) -> Result<Vec<u8>> {
    let mut out = serde_json::to_vec_pretty(value)?;
    out.push(b'\n');
    Ok(out)
}
