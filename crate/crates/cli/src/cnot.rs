//! Fidelity of the boosted state with the light-speed (CNOT-like) limit
//! state along the diagonal `v1 = v2 = t`.

use std::io::Write;

use serde::Serialize;

use relspin::boosted::cnot_limit_fidelity;
use relspin::Velocity;

use crate::error::{CliError, Result};
use crate::format::{format_number, round_significant};
use crate::sweep::Format;

pub const DEFAULT_T_LIST: [f64; 11] = [0.0, 0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9, 1.0];

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct CnotRow {
    pub t: f64,
    pub fidelity: f64,
}

pub fn cnot_table(t_values: &[f64]) -> Result<Vec<CnotRow>> {
    t_values
        .iter()
        .map(|&t| {
            let v = Velocity::new(t)?;
            Ok(CnotRow {
                t,
                fidelity: cnot_limit_fidelity(v, v)?,
            })
        })
        .collect()
}

pub fn write_cnot<W: Write>(
    mut out: W,
    rows: &[CnotRow],
    format: Format,
    precision: usize,
) -> Result<()> {
    let io = |e: std::io::Error| CliError::Serialize(e.to_string());
    match format {
        Format::Csv => {
            writeln!(out, "t,fidelity").map_err(io)?;
            for r in rows {
                writeln!(
                    out,
                    "{},{}",
                    format_number(r.t, precision),
                    format_number(r.fidelity, precision)
                )
                .map_err(io)?;
            }
        }
        Format::Json => {
            let rounded: Vec<CnotRow> = rows
                .iter()
                .map(|r| CnotRow {
                    t: round_significant(r.t, precision),
                    fidelity: round_significant(r.fidelity, precision),
                })
                .collect();
            serde_json::to_writer_pretty(&mut out, &rounded)
                .map_err(|e| CliError::Serialize(e.to_string()))?;
            writeln!(out).map_err(io)?;
        }
    }
    Ok(())
}
