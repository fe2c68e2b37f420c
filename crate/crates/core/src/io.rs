//! File formats: state files in, JSON and CSV tables out.
//!
//! All output is UTF-8 with LF line endings. Field elements appear as
//! exponent labels (`k` for `σ^k`, `-1` for zero) in JSON and as `σ^k` text
//! elsewhere. Real numbers are rounded to 12 significant digits, and values
//! below `1e-13` in magnitude are written as `0`.
//!
//! A state file looks like
//!
//! ```json
//! {"dim": 2, "kind": "vector", "data": [[0.6, 0], [0, 0.8]]}
//! ```
//!
//! with `data` a flat list of `[re, im]` pairs for a vector, or a list of
//! rows of pairs for a density matrix.

use std::path::Path;

use nalgebra::{DMatrix, DVector};
use num_complex::Complex64;
use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::coarse::SurvivorTable;
use crate::error::{Error, Result};
use crate::field::{Basis, CosetPartition, Field, PartitionMode};
use crate::phase_space::MubTable;
use crate::wigner::{QuantumState, WignerTable};

/// Norm and trace tolerance for state files.
pub const STATE_FILE_TOLERANCE: f64 = 1e-8;

#[derive(Deserialize)]
struct StateFile {
    dim: usize,
    kind: String,
    data: Value,
}

fn parse_error(message: impl Into<String>) -> Error {
    Error::Parse {
        line: 0,
        column: 0,
        message: message.into(),
    }
}

fn complex(v: &Value) -> Result<Complex64> {
    match v.as_array().map(Vec::as_slice) {
        Some([re, im]) => match (re.as_f64(), im.as_f64()) {
            (Some(re), Some(im)) => Ok(Complex64::new(re, im)),
            _ => Err(parse_error("amplitude parts must be numbers")),
        },
        _ => Err(parse_error("amplitudes must be [re, im] pairs")),
    }
}

fn list(v: &Value, what: &str) -> Result<Vec<Value>> {
    v.as_array()
        .cloned()
        .ok_or_else(|| parse_error(format!("{what} must be an array")))
}

/// Parses and validates a state document.
pub fn parse_state(text: &str) -> Result<QuantumState> {
    let file: StateFile = serde_json::from_str(text).map_err(|e| Error::Parse {
        line: e.line(),
        column: e.column(),
        message: e.to_string(),
    })?;
    let dim = file.dim;
    if dim < 2 || !dim.is_power_of_two() {
        return Err(Error::Dimension(dim));
    }
    match file.kind.as_str() {
        "vector" => {
            let items = list(&file.data, "data")?;
            if items.len() != dim {
                return Err(parse_error(format!(
                    "expected {dim} amplitudes, got {}",
                    items.len()
                )));
            }
            let amps = items.iter().map(complex).collect::<Result<Vec<_>>>()?;
            QuantumState::from_vector_with_tolerance(DVector::from_vec(amps), STATE_FILE_TOLERANCE)
        }
        "density" => {
            let rows = list(&file.data, "data")?;
            if rows.len() != dim {
                return Err(parse_error(format!(
                    "expected {dim} rows, got {}",
                    rows.len()
                )));
            }
            let mut m = DMatrix::zeros(dim, dim);
            for (r, row) in rows.iter().enumerate() {
                let row = list(row, "row")?;
                if row.len() != dim {
                    return Err(parse_error(format!("row {r} has {} entries", row.len())));
                }
                for (c, x) in row.iter().enumerate() {
                    m[(r, c)] = complex(x)?;
                }
            }
            QuantumState::from_density_with_tolerance(m, STATE_FILE_TOLERANCE)
        }
        other => Err(parse_error(format!(
            "kind must be \"vector\" or \"density\", got {other:?}"
        ))),
    }
}

pub fn read_state_file(path: &Path) -> Result<QuantumState> {
    let text =
        std::fs::read_to_string(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
    parse_state(&text)
}

/// Serializes a pure state as a vector document.
pub fn state_vector_json(amplitudes: &[Complex64]) -> String {
    let data: Vec<[f64; 2]> = amplitudes.iter().map(|z| [z.re, z.im]).collect();
    let doc = serde_json::json!({"dim": amplitudes.len(), "kind": "vector", "data": data});
    format!("{}\n", serde_json::to_string_pretty(&doc).expect("json"))
}

/// Rounds to 12 significant digits and snaps tiny values to zero.
pub fn round_real(x: f64) -> f64 {
    if x.abs() < 1e-13 {
        return 0.0;
    }
    format!("{x:.11e}").parse().expect("float round trip")
}

/// Text form of [`round_real`]: shortest decimal, `0` for zero.
pub fn format_real(x: f64) -> String {
    let r = round_real(x);
    if r == 0.0 {
        "0".to_string()
    } else {
        format!("{r}")
    }
}

#[derive(Serialize)]
struct PartitionJson {
    m: u32,
    n: u32,
    mode: &'static str,
    relative_basis: Vec<i64>,
    cosets: Vec<Vec<i64>>,
}

fn partition_json(field: &Field, p: &CosetPartition) -> PartitionJson {
    PartitionJson {
        m: p.m(),
        n: p.n(),
        mode: match p.mode() {
            PartitionMode::General => "general",
            PartitionMode::Subfield => "subfield",
        },
        relative_basis: p
            .relative_basis()
            .iter()
            .map(|&e| field.exponent_label(e))
            .collect(),
        cosets: p
            .cosets()
            .iter()
            .map(|c| {
                c.elements()
                    .iter()
                    .map(|&e| field.exponent_label(e))
                    .collect()
            })
            .collect(),
    }
}

fn to_json<T: Serialize>(v: &T) -> String {
    format!("{}\n", serde_json::to_string_pretty(v).expect("json"))
}

/// `{"degree", "modulus", "self_dual_basis", "partition"}`.
pub fn field_json(field: &Field, basis: &Basis, partition: Option<&CosetPartition>) -> String {
    #[derive(Serialize)]
    struct Doc {
        degree: u32,
        modulus: Vec<u8>,
        self_dual_basis: Vec<u32>,
        partition: Option<PartitionJson>,
    }
    to_json(&Doc {
        degree: field.degree(),
        modulus: field.modulus_coefficients(),
        self_dual_basis: basis.exponents(field),
        partition: partition.map(|p| partition_json(field, p)),
    })
}

#[derive(Serialize)]
struct SlopeOperators {
    slope: String,
    operators: Vec<String>,
}

/// `[{"slope", "operators"}]`, one entry per column.
pub fn mub_json(field: &Field, table: &MubTable) -> String {
    let cols: Vec<SlopeOperators> = table
        .columns
        .iter()
        .map(|c| SlopeOperators {
            slope: c.slope.label(field),
            operators: c.operators.iter().map(|p| p.to_string()).collect(),
        })
        .collect();
    to_json(&cols)
}

/// `{"m", "n", "partition", "slopes": [{"slope", "survivors"}]}`.
pub fn survivor_json(field: &Field, table: &SurvivorTable) -> String {
    #[derive(Serialize)]
    struct Row {
        slope: String,
        survivors: Vec<String>,
    }
    #[derive(Serialize)]
    struct Doc {
        m: u32,
        n: u32,
        partition: PartitionJson,
        slopes: Vec<Row>,
    }
    to_json(&Doc {
        m: table.partition.m(),
        n: table.partition.n(),
        partition: partition_json(field, &table.partition),
        slopes: table
            .rows
            .iter()
            .map(|r| Row {
                slope: r.slope.label(field),
                survivors: r.operators.iter().map(|p| p.to_string()).collect(),
            })
            .collect(),
    })
}

/// `{"dim", "coarse", "labels", "values"}` with rounded values.
pub fn wigner_json(table: &WignerTable) -> String {
    let values: Vec<Vec<f64>> = table
        .values
        .iter()
        .map(|r| r.iter().map(|&x| round_real(x)).collect())
        .collect();
    let doc = serde_json::json!({
        "dim": table.dim,
        "coarse": table.coarse,
        "labels": table.labels,
        "values": values,
    });
    format!("{}\n", serde_json::to_string_pretty(&doc).expect("json"))
}

/// Header row of column labels, then one row per vertical label.
pub fn wigner_csv(table: &WignerTable) -> String {
    let mut out = String::from("beta\\alpha");
    for l in &table.labels {
        out.push(',');
        out.push_str(l);
    }
    out.push('\n');
    for (label, row) in table.labels.iter().zip(&table.values) {
        out.push_str(label);
        for &x in row {
            out.push(',');
            out.push_str(&format_real(x));
        }
        out.push('\n');
    }
    out
}

/// Plain text grid, for terminals.
pub fn wigner_text(table: &WignerTable) -> String {
    let width = table
        .labels
        .iter()
        .map(|l| l.chars().count())
        .max()
        .unwrap_or(1);
    let cells: Vec<Vec<String>> = table
        .values
        .iter()
        .map(|r| {
            r.iter()
                .map(|&x| format!("{:.6}", round_real(x) + 0.0))
                .collect()
        })
        .collect();
    let cell_w = cells
        .iter()
        .flatten()
        .map(String::len)
        .max()
        .unwrap_or(1)
        .max(width);
    let mut out = format!("{:width$}", "", width = width);
    for l in &table.labels {
        out.push_str(&format!(" {l:>cell_w$}"));
    }
    out.push('\n');
    for (label, row) in table.labels.iter().zip(&cells) {
        out.push_str(&format!("{label:>width$}"));
        for c in row {
            out.push_str(&format!(" {c:>cell_w$}"));
        }
        out.push('\n');
    }
    out
}
