//! CSV and JSON serialisation of sweep results.
//!
//! Floating-point values are written with 12 significant digits in both
//! formats. CSV columns, in order:
//!
//! `rho, alpha_sq, e_high, e_low, e_out, e_high_norm, e_low_norm, e_out_norm,
//! region, design1, eff1, design2, eff2, carnot1, carnot2`
//!
//! Empty cells mark absent values (no normalisation, boundary records).

use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::Path;
use std::str::FromStr;

use crate::error::{QtmError, Result};
use crate::sweep::{EfficiencySeries, SweepRecord};

pub const CSV_HEADER: [&str; 15] = [
    "rho",
    "alpha_sq",
    "e_high",
    "e_low",
    "e_out",
    "e_high_norm",
    "e_low_norm",
    "e_out_norm",
    "region",
    "design1",
    "eff1",
    "design2",
    "eff2",
    "carnot1",
    "carnot2",
];

pub const CURVES_HEADER: [&str; 6] = ["design", "rho", "alpha_sq", "efficiency", "carnot", "limit_kind"];

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OutputFormat {
    Csv,
    Json,
}

impl FromStr for OutputFormat {
    type Err = QtmError;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "csv" => Ok(OutputFormat::Csv),
            "json" => Ok(OutputFormat::Json),
            other => Err(QtmError::Config(format!("unknown output format {other:?}"))),
        }
    }
}

/// `x` with 12 significant digits, in exponent notation.
pub fn format_sig12(x: f64) -> String {
    if x.is_finite() {
        format!("{x:.11e}")
    } else {
        x.to_string()
    }
}

/// `x` rounded to 12 significant digits.
pub fn round_sig12(x: f64) -> f64 {
    if x.is_finite() {
        format_sig12(x).parse().expect("formatted float parses")
    } else {
        x
    }
}

fn opt(x: Option<f64>) -> String {
    x.map(format_sig12).unwrap_or_default()
}

fn csv_err(e: csv::Error) -> QtmError {
    match e.into_kind() {
        csv::ErrorKind::Io(io) => QtmError::io(None, io),
        other => QtmError::Serialize(format!("{other:?}")),
    }
}

pub fn write_csv<W: Write>(records: &[SweepRecord], out: W) -> Result<()> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(CSV_HEADER).map_err(csv_err)?;
    for r in records {
        let d = |i: usize| r.designs.get(i);
        let row = [
            format_sig12(r.rho),
            format_sig12(r.alpha_sq),
            format_sig12(r.e_high),
            format_sig12(r.e_low),
            format_sig12(r.e_out),
            opt(r.e_high_norm),
            opt(r.e_low_norm),
            opt(r.e_out_norm),
            r.region.name().to_string(),
            d(0).map(|x| x.design.name().to_string()).unwrap_or_default(),
            opt(d(0).and_then(|x| x.efficiency)),
            d(1).map(|x| x.design.name().to_string()).unwrap_or_default(),
            opt(d(1).and_then(|x| x.efficiency)),
            opt(d(0).map(|x| x.carnot)),
            opt(d(1).map(|x| x.carnot)),
        ];
        w.write_record(&row).map_err(csv_err)?;
    }
    w.flush().map_err(|e| QtmError::io(None, e))
}

/// Copy of `record` with every float rounded to 12 significant digits.
pub fn rounded(record: &SweepRecord) -> SweepRecord {
    let mut r = record.clone();
    for v in [&mut r.rho, &mut r.alpha_sq, &mut r.e_high, &mut r.e_low, &mut r.e_out] {
        *v = round_sig12(*v);
    }
    for v in [&mut r.e_high_norm, &mut r.e_low_norm, &mut r.e_out_norm] {
        *v = v.map(round_sig12);
    }
    for d in &mut r.designs {
        d.efficiency = d.efficiency.map(round_sig12);
        d.carnot = round_sig12(d.carnot);
    }
    r
}

pub fn write_json<W: Write>(records: &[SweepRecord], mut out: W) -> Result<()> {
    let rounded: Vec<SweepRecord> = records.iter().map(rounded).collect();
    serde_json::to_writer_pretty(&mut out, &rounded).map_err(|e| QtmError::Serialize(e.to_string()))?;
    writeln!(out).map_err(|e| QtmError::io(None, e))
}

pub fn parse_json(text: &str) -> Result<Vec<SweepRecord>> {
    serde_json::from_str(text).map_err(|e| QtmError::Serialize(e.to_string()))
}

pub fn write_curves_csv<W: Write>(series: &[EfficiencySeries], out: W) -> Result<()> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(CURVES_HEADER).map_err(csv_err)?;
    for s in series {
        for p in &s.points {
            w.write_record([
                s.design.name().to_string(),
                format_sig12(p.rho),
                format_sig12(p.alpha_sq),
                format_sig12(p.efficiency),
                format_sig12(s.carnot),
                s.limit_kind.to_string(),
            ])
            .map_err(csv_err)?;
        }
    }
    w.flush().map_err(|e| QtmError::io(None, e))
}

pub fn write_curves_json<W: Write>(series: &[EfficiencySeries], mut out: W) -> Result<()> {
    let rounded: Vec<EfficiencySeries> = series
        .iter()
        .map(|s| {
            let mut s = s.clone();
            s.carnot = round_sig12(s.carnot);
            s.carnot_rho = round_sig12(s.carnot_rho);
            for p in &mut s.points {
                p.rho = round_sig12(p.rho);
                p.alpha_sq = round_sig12(p.alpha_sq);
                p.efficiency = round_sig12(p.efficiency);
            }
            s
        })
        .collect();
    serde_json::to_writer_pretty(&mut out, &rounded).map_err(|e| QtmError::Serialize(e.to_string()))?;
    writeln!(out).map_err(|e| QtmError::io(None, e))
}

fn with_destination<F>(destination: Option<&Path>, write: F) -> Result<()>
where
    F: FnOnce(&mut dyn Write) -> Result<()>,
{
    let attach_path = |e: QtmError| match e {
        QtmError::Io { path: None, source } => QtmError::io(destination.map(Path::to_path_buf), source),
        other => other,
    };
    match destination {
        Some(path) => {
            let file = File::create(path).map_err(|e| QtmError::io(Some(path.to_path_buf()), e))?;
            let mut buf = BufWriter::new(file);
            write(&mut buf).map_err(attach_path)?;
            buf.flush().map_err(|e| QtmError::io(Some(path.to_path_buf()), e))
        }
        None => {
            let stdout = io::stdout();
            let mut lock = stdout.lock();
            write(&mut lock)
        }
    }
}

/// Writes `records` to `destination`, or standard output when `None`.
pub fn emit(records: &[SweepRecord], format: OutputFormat, destination: Option<&Path>) -> Result<()> {
    if records.is_empty() {
        return Err(QtmError::EmptyGrid);
    }
    with_destination(destination, |w| match format {
        OutputFormat::Csv => write_csv(records, w),
        OutputFormat::Json => write_json(records, w),
    })
}

pub fn emit_curves(
    series: &[EfficiencySeries],
    format: OutputFormat,
    destination: Option<&Path>,
) -> Result<()> {
    with_destination(destination, |w| match format {
        OutputFormat::Csv => write_curves_csv(series, w),
        OutputFormat::Json => write_curves_json(series, w),
    })
}
