//! Grid evaluation over `(v1, v2)` and its CSV / JSON rendering.

use std::io::Write;

use rayon::prelude::*;
use serde::Serialize;

use relspin::{analyze, AnalysisRecord, Velocity};

use crate::error::{CliError, Result};
use crate::format::{format_number, round_significant};

pub const CSV_HEADER: [&str; 8] = ["v1", "v2", "omega", "cos2w", "S", "E", "B", "C"];
pub const DEFAULT_GRID: usize = 101;
pub const DEFAULT_PRECISION: usize = 12;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, clap::ValueEnum)]
pub enum Format {
    #[default]
    Csv,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Execution {
    Serial,
    Parallel,
}

#[derive(Debug, Clone, PartialEq)]
pub struct SweepConfig {
    pub v1_range: (f64, f64),
    pub v2_range: (f64, f64),
    pub grid_n: usize,
    pub format: Format,
    pub precision: usize,
}

impl Default for SweepConfig {
    fn default() -> Self {
        SweepConfig {
            v1_range: (0.0, 1.0),
            v2_range: (0.0, 1.0),
            grid_n: DEFAULT_GRID,
            format: Format::Csv,
            precision: DEFAULT_PRECISION,
        }
    }
}

impl SweepConfig {
    pub fn validate(&self) -> Result<()> {
        for (name, (lo, hi)) in [("v1", self.v1_range), ("v2", self.v2_range)] {
            Velocity::new(lo)?;
            Velocity::new(hi)?;
            if lo > hi {
                return Err(CliError::Usage(format!(
                    "{name} range: min {lo} exceeds max {hi}"
                )));
            }
        }
        if self.grid_n < 2 {
            return Err(CliError::Usage(format!(
                "grid size must be at least 2, got {}",
                self.grid_n
            )));
        }
        validate_precision(self.precision)
    }
}

pub fn validate_precision(precision: usize) -> Result<()> {
    if !(1..=17).contains(&precision) {
        return Err(CliError::Usage(format!(
            "precision must be in 1..=17, got {precision}"
        )));
    }
    Ok(())
}

/// `n` evenly spaced points from `lo` to `hi`, endpoints exact.
pub fn axis(lo: f64, hi: f64, n: usize) -> Vec<f64> {
    (0..n)
        .map(|i| {
            if i == n - 1 {
                hi
            } else {
                lo + (hi - lo) * i as f64 / (n - 1) as f64
            }
        })
        .collect()
}

/// One grid point, flattened.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct SweepRow {
    pub v1: f64,
    pub v2: f64,
    pub omega: f64,
    pub cos2w: f64,
    #[serde(rename = "S")]
    pub s: f64,
    #[serde(rename = "E")]
    pub e: f64,
    #[serde(rename = "B")]
    pub b: f64,
    #[serde(rename = "C")]
    pub c: f64,
}

impl From<&AnalysisRecord> for SweepRow {
    fn from(r: &AnalysisRecord) -> Self {
        SweepRow {
            v1: r.v1.beta(),
            v2: r.v2.beta(),
            omega: r.omega,
            cos2w: r.cos_two_omega,
            s: r.entropy_s,
            e: r.entanglement_e,
            b: r.bell_b,
            c: r.concurrence_c,
        }
    }
}

impl SweepRow {
    fn values(&self) -> [f64; 8] {
        [
            self.v1, self.v2, self.omega, self.cos2w, self.s, self.e, self.b, self.c,
        ]
    }

    fn rounded(&self, precision: usize) -> SweepRow {
        let r = |x| round_significant(x, precision) + 0.0;
        SweepRow {
            v1: r(self.v1),
            v2: r(self.v2),
            omega: r(self.omega),
            cos2w: r(self.cos2w),
            s: r(self.s),
            e: r(self.e),
            b: r(self.b),
            c: r(self.c),
        }
    }
}

pub fn analyze_row(v1: f64, v2: f64) -> Result<SweepRow> {
    let record = analyze(Velocity::new(v1)?, Velocity::new(v2)?)?;
    Ok(SweepRow::from(&record))
}

/// Evaluates the grid in row-major order (`v1` outer, `v2` inner).
pub fn run_sweep(config: &SweepConfig, execution: Execution) -> Result<Vec<SweepRow>> {
    config.validate()?;
    let v1s = axis(config.v1_range.0, config.v1_range.1, config.grid_n);
    let v2s = axis(config.v2_range.0, config.v2_range.1, config.grid_n);
    let points: Vec<(f64, f64)> = v1s
        .iter()
        .flat_map(|&a| v2s.iter().map(move |&b| (a, b)))
        .collect();
    match execution {
        Execution::Serial => points.iter().map(|&(a, b)| analyze_row(a, b)).collect(),
        Execution::Parallel => points.par_iter().map(|&(a, b)| analyze_row(a, b)).collect(),
    }
}

pub fn write_csv<W: Write>(out: W, rows: &[SweepRow], precision: usize) -> Result<()> {
    let mut w = csv::WriterBuilder::new()
        .terminator(csv::Terminator::Any(b'\n'))
        .quote_style(csv::QuoteStyle::Never)
        .from_writer(out);
    let ser = |e: csv::Error| CliError::Serialize(e.to_string());
    w.write_record(CSV_HEADER).map_err(ser)?;
    for row in rows {
        w.write_record(row.values().iter().map(|&x| format_number(x, precision)))
            .map_err(ser)?;
    }
    w.flush().map_err(|e| CliError::Serialize(e.to_string()))
}

pub fn write_json<W: Write>(mut out: W, rows: &[SweepRow], precision: usize) -> Result<()> {
    let rounded: Vec<SweepRow> = rows.iter().map(|r| r.rounded(precision)).collect();
    serde_json::to_writer_pretty(&mut out, &rounded)
        .map_err(|e| CliError::Serialize(e.to_string()))?;
    writeln!(out).map_err(|e| CliError::Serialize(e.to_string()))
}

pub fn render(rows: &[SweepRow], format: Format, precision: usize) -> Result<String> {
    let mut buf = Vec::new();
    match format {
        Format::Csv => write_csv(&mut buf, rows, precision)?,
        Format::Json => write_json(&mut buf, rows, precision)?,
    }
    Ok(String::from_utf8(buf).expect("ascii output"))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn axis_hits_endpoints() {
        let a = axis(0.0, 1.0, 101);
        assert_eq!(a.len(), 101);
        assert_eq!(a[0], 0.0);
        assert_eq!(a[100], 1.0);
        assert_eq!(a[7], 0.07);
        assert_eq!(axis(0.2, 0.2, 3), vec![0.2, 0.2, 0.2]);
    }

    #[test]
    fn config_validation() {
        assert!(SweepConfig::default().validate().is_ok());
        let bad = [
            SweepConfig {
                grid_n: 1,
                ..Default::default()
            },
            SweepConfig {
                precision: 0,
                ..Default::default()
            },
            SweepConfig {
                precision: 18,
                ..Default::default()
            },
            SweepConfig {
                v1_range: (0.6, 0.5),
                ..Default::default()
            },
        ];
        for c in bad {
            assert_eq!(c.validate().unwrap_err().exit_code(), 2);
        }
        let out_of_range = SweepConfig {
            v2_range: (0.0, 1.5),
            ..Default::default()
        };
        assert_eq!(out_of_range.validate().unwrap_err().exit_code(), 2);
    }

    #[test]
    fn two_by_two_corners() {
        let config = SweepConfig {
            grid_n: 2,
            ..Default::default()
        };
        let rows = run_sweep(&config, Execution::Serial).unwrap();
        let corners: Vec<(f64, f64, f64, f64)> =
            rows.iter().map(|r| (r.v1, r.v2, r.cos2w, r.e)).collect();
        assert_eq!((corners[0].0, corners[0].1), (0.0, 0.0));
        assert_eq!((corners[1].0, corners[1].1), (0.0, 1.0));
        assert_eq!((corners[1].2, corners[2].2), (1.0, 1.0));
        assert!((corners[0].3 - 1.0).abs() < 1e-12);
        assert!((corners[1].3 - 1.0).abs() < 1e-12);
        assert!((corners[2].3 - 1.0).abs() < 1e-12);
        assert_eq!((corners[3].2, corners[3].3), (0.0, 0.0));
    }

    #[test]
    fn csv_layout() {
        let config = SweepConfig {
            grid_n: 2,
            ..Default::default()
        };
        let rows = run_sweep(&config, Execution::Serial).unwrap();
        let text = render(&rows, Format::Csv, 12).unwrap();
        let lines: Vec<&str> = text.split('\n').collect();
        assert_eq!(lines[0], "v1,v2,omega,cos2w,S,E,B,C");
        assert_eq!(lines.len(), 6);
        assert_eq!(lines[5], "");
        assert!(!text.contains('\r'));
        assert_eq!(lines[4], "1,1,0.785398163397,0,1,0,2,1");
    }

    #[test]
    fn json_layout() {
        let config = SweepConfig {
            grid_n: 2,
            ..Default::default()
        };
        let rows = run_sweep(&config, Execution::Serial).unwrap();
        let text = render(&rows, Format::Json, 12).unwrap();
        let parsed: serde_json::Value = serde_json::from_str(&text).unwrap();
        let arr = parsed.as_array().unwrap();
        assert_eq!(arr.len(), 4);
        let last = &arr[3];
        for key in CSV_HEADER {
            assert!(last.get(key).is_some(), "missing {key}");
        }
        assert_eq!(last["B"].as_f64(), Some(2.0));
        // pi/4 rounded to 12 digits
        assert_eq!(
            last["omega"].as_f64(),
            Some(round_significant(std::f64::consts::FRAC_PI_4, 12))
        );
    }
}
