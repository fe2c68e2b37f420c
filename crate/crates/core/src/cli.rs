//! Command-line front end.
//!
//! Exit codes: `0` on success, `2` for usage errors, `3` when an input
//! fails validation. Output goes to stdout unless `--output` is given; a
//! relative `--output` path, or the default file name when `--output` is
//! absent, is placed under `$QCOARSE_OUT_DIR` if that variable is set.

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::error::{Error, Result};
use crate::field::{Basis, CosetPartition, Field, FieldElement};
use crate::io;
use crate::pauli::{cnot_conjugate, Cnot, PauliString};
use crate::phase_space::PhaseSpace;
use crate::wigner;

pub const OUT_DIR_VAR: &str = "QCOARSE_OUT_DIR";

#[derive(Parser, Debug)]
#[command(
    name = "qcoarse",
    version,
    about = "Phase space, MUBs and coarse graining for qubits"
)]
pub struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Field modulus, self-dual basis and (optionally) a coset partition.
    Field(FieldArgs),
    /// Displacement operators grouped by ray.
    Mubs(MubArgs),
    /// Displacement operators that survive coarse graining.
    Coarse(CoarseArgs),
    /// Fine Wigner table of a state.
    Wigner(WignerArgs),
    /// Coarse Wigner table of a state.
    CoarseWigner(CoarseWignerArgs),
    /// Conjugate Pauli strings by a CNOT sequence.
    Conjugate(ConjugateArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Mode {
    General,
    Subfield,
}

#[derive(Args, Debug)]
struct FieldSpec {
    /// Extension degree N.
    #[arg(long)]
    degree: u32,
    /// Modulus polynomial: "x^4+x+1", "0b10011", "0x13" or "19".
    #[arg(long)]
    modulus: Option<String>,
}

#[derive(Args, Debug)]
struct PartitionSpec {
    /// Subfield degree m.
    #[arg(long)]
    m: Option<u32>,
    #[arg(long, value_enum, default_value = "general")]
    mode: Mode,
    /// Relative basis as comma-separated labels, e.g. "1,s1".
    #[arg(long)]
    basis: Option<String>,
}

#[derive(Args, Debug)]
struct OutputSpec {
    #[arg(long, value_enum)]
    format: Option<Format>,
    #[arg(long)]
    output: Option<PathBuf>,
}

#[derive(Args, Debug)]
struct FieldArgs {
    #[command(flatten)]
    field: FieldSpec,
    #[command(flatten)]
    partition: PartitionSpec,
    #[command(flatten)]
    out: OutputSpec,
}

#[derive(Args, Debug)]
struct MubArgs {
    #[command(flatten)]
    field: FieldSpec,
    #[command(flatten)]
    out: OutputSpec,
}

#[derive(Args, Debug)]
struct CoarseArgs {
    #[command(flatten)]
    field: FieldSpec,
    #[command(flatten)]
    partition: PartitionSpec,
    /// CNOT sequence applied to the survivors, e.g. "1:3,2:4" (1-based).
    #[arg(long)]
    cnot: Option<String>,
    #[command(flatten)]
    out: OutputSpec,
}

#[derive(Args, Debug)]
struct WignerArgs {
    #[command(flatten)]
    field: FieldSpec,
    /// State file.
    #[arg(long)]
    state: PathBuf,
    /// Evaluate every point with an explicit kernel matrix.
    #[arg(long)]
    dense: bool,
    #[command(flatten)]
    out: OutputSpec,
}

#[derive(Args, Debug)]
struct CoarseWignerArgs {
    #[command(flatten)]
    field: FieldSpec,
    #[command(flatten)]
    partition: PartitionSpec,
    #[arg(long)]
    state: PathBuf,
    #[command(flatten)]
    out: OutputSpec,
}

#[derive(Args, Debug)]
struct ConjugateArgs {
    /// CNOT sequence, e.g. "1:2,1:3" (1-based control:target).
    #[arg(long)]
    cnot: String,
    /// Pauli strings such as XII or -iZY.
    #[arg(required = true)]
    paulis: Vec<String>,
    #[command(flatten)]
    out: OutputSpec,
}

enum Failure {
    Usage(String),
    Invalid(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Invalid(e)
    }
}

/// Parses a modulus given as a polynomial or an integer.
pub fn parse_modulus(text: &str) -> Result<u32> {
    let t: String = text.chars().filter(|c| !c.is_whitespace()).collect();
    let bad = || Error::ModulusParse(text.to_string());
    if let Some(b) = t.strip_prefix("0b") {
        return u32::from_str_radix(b, 2).map_err(|_| bad());
    }
    if let Some(h) = t.strip_prefix("0x") {
        return u32::from_str_radix(h, 16).map_err(|_| bad());
    }
    if t.chars().all(|c| c.is_ascii_digit()) && !t.is_empty() {
        return t.parse().map_err(|_| bad());
    }
    let mut acc = 0u32;
    for term in t.split('+') {
        let power = match term {
            "1" => 0,
            "x" => 1,
            _ => term
                .strip_prefix("x^")
                .and_then(|k| k.parse::<u32>().ok())
                .filter(|&k| k < 32)
                .ok_or_else(bad)?,
        };
        acc ^= 1 << power;
    }
    Ok(acc)
}

/// Parses "c:t" pairs (1-based) into gates.
pub fn parse_cnots(text: &str) -> Result<Vec<Cnot>> {
    text.split(|c: char| c == ',' || c.is_whitespace())
        .filter(|s| !s.is_empty())
        .map(|pair| {
            let bad = || Error::CnotParse(pair.to_string());
            let (c, t) = pair.split_once(':').ok_or_else(bad)?;
            let c: usize = c.parse().map_err(|_| bad())?;
            let t: usize = t.parse().map_err(|_| bad())?;
            if c == 0 || t == 0 {
                return Err(bad());
            }
            Ok(Cnot::new(c - 1, t - 1))
        })
        .collect()
}

fn build_field(spec: &FieldSpec) -> Result<Field> {
    match &spec.modulus {
        Some(m) => Field::new(spec.degree, parse_modulus(m)?),
        None => Field::canonical(spec.degree),
    }
}

fn build_partition(
    field: &Field,
    spec: &PartitionSpec,
) -> std::result::Result<Option<CosetPartition>, Failure> {
    let Some(m) = spec.m else {
        if spec.basis.is_some() {
            return Err(Failure::Usage("--basis needs --m".into()));
        }
        return Ok(None);
    };
    let partition = match spec.mode {
        Mode::Subfield => {
            if spec.basis.is_some() {
                return Err(Failure::Usage(
                    "--basis is not used with --mode subfield".into(),
                ));
            }
            CosetPartition::subfield(field, m)?
        }
        Mode::General => {
            let Some(text) = &spec.basis else {
                return Err(Failure::Usage("--mode general requires --basis".into()));
            };
            let basis = text
                .split(',')
                .map(|s| field.parse_element(s))
                .collect::<Result<Vec<FieldElement>>>()?;
            CosetPartition::general(field, m, &basis)?
        }
    };
    Ok(Some(partition))
}

fn require_partition(
    field: &Field,
    spec: &PartitionSpec,
) -> std::result::Result<CosetPartition, Failure> {
    build_partition(field, spec)?.ok_or_else(|| Failure::Usage("--m is required".into()))
}

fn check_format(format: Format, allowed: &[Format]) -> std::result::Result<Format, Failure> {
    if allowed.contains(&format) {
        Ok(format)
    } else {
        Err(Failure::Usage(format!(
            "--format {} is not available for this command",
            format.to_possible_value().expect("value").get_name()
        )))
    }
}

fn extension(format: Format) -> &'static str {
    match format {
        Format::Text => "txt",
        Format::Json => "json",
        Format::Csv => "csv",
    }
}

fn execute(
    command: &Command,
) -> std::result::Result<(String, &'static str, Format, &OutputSpec), Failure> {
    use Format::*;
    Ok(match command {
        Command::Field(a) => {
            let format = check_format(a.out.format.unwrap_or(Json), &[Json, Text])?;
            let field = build_field(&a.field)?;
            let partition = build_partition(&field, &a.partition)?;
            let basis = Basis::self_dual(&field);
            let body = match format {
                Json => io::field_json(&field, &basis, partition.as_ref()),
                _ => field_text(&field, &basis, partition.as_ref()),
            };
            (body, "field", format, &a.out)
        }
        Command::Mubs(a) => {
            let format = check_format(a.out.format.unwrap_or(Text), &[Json, Text])?;
            let space = PhaseSpace::new(build_field(&a.field)?);
            let table = space.mub_table();
            let body = match format {
                Json => io::mub_json(space.field(), &table),
                _ => table.render_text(space.field()),
            };
            (body, "mubs", format, &a.out)
        }
        Command::Coarse(a) => {
            let format = check_format(a.out.format.unwrap_or(Text), &[Json, Text])?;
            let space = PhaseSpace::new(build_field(&a.field)?);
            let partition = require_partition(space.field(), &a.partition)?;
            let mut table = space.survivor_table(&partition)?;
            if let Some(gates) = &a.cnot {
                table = table.conjugated(&parse_cnots(gates)?)?;
            }
            let body = match format {
                Json => io::survivor_json(space.field(), &table),
                _ => table.render_text(space.field()),
            };
            (body, "coarse", format, &a.out)
        }
        Command::Wigner(a) => {
            let format = a.out.format.unwrap_or(Csv);
            let space = PhaseSpace::new(build_field(&a.field)?);
            let state = io::read_state_file(&a.state)?;
            let table = if a.dense {
                wigner::wigner_dense(&space, &state)?
            } else {
                wigner::wigner_of_state(&space, &state)?
            };
            (wigner_body(&table, format), "wigner", format, &a.out)
        }
        Command::CoarseWigner(a) => {
            let format = a.out.format.unwrap_or(Csv);
            let space = PhaseSpace::new(build_field(&a.field)?);
            let partition = require_partition(space.field(), &a.partition)?;
            let state = io::read_state_file(&a.state)?;
            let table = wigner::coarse_wigner(&space, &state, &partition)?;
            (wigner_body(&table, format), "coarse-wigner", format, &a.out)
        }
        Command::Conjugate(a) => {
            let format = check_format(a.out.format.unwrap_or(Text), &[Json, Text])?;
            let gates = parse_cnots(&a.cnot)?;
            let ops = a
                .paulis
                .iter()
                .map(|s| PauliString::parse_list(s))
                .collect::<Result<Vec<_>>>()?
                .into_iter()
                .flatten()
                .map(|p| cnot_conjugate(&p, &gates).map(|q| q.to_string()))
                .collect::<Result<Vec<_>>>()?;
            let body = match format {
                Json => format!("{}\n", serde_json::to_string_pretty(&ops).expect("json")),
                _ => ops.iter().map(|s| format!("{s}\n")).collect(),
            };
            (body, "conjugate", format, &a.out)
        }
    })
}

fn wigner_body(table: &wigner::WignerTable, format: Format) -> String {
    match format {
        Format::Csv => io::wigner_csv(table),
        Format::Json => io::wigner_json(table),
        Format::Text => io::wigner_text(table),
    }
}

fn field_text(field: &Field, basis: &Basis, partition: Option<&CosetPartition>) -> String {
    let labels = |xs: &[FieldElement]| {
        xs.iter()
            .map(|&x| field.label(x).to_string())
            .collect::<Vec<_>>()
            .join(" ")
    };
    let mut out = format!("{field}\nself-dual basis: {}\n", labels(basis.elements()));
    if let Some(p) = partition {
        out.push_str(&format!(
            "relative basis (m={}, n={}): {}\n",
            p.m(),
            p.n(),
            labels(p.relative_basis())
        ));
        for c in p.cosets() {
            out.push_str(&format!(
                "C[{}]: {}\n",
                field.label(c.representative()),
                labels(c.elements())
            ));
        }
    }
    out
}

fn destination(name: &str, format: Format, out: &OutputSpec) -> Option<PathBuf> {
    let dir = std::env::var_os(OUT_DIR_VAR).map(PathBuf::from);
    match (&out.output, dir) {
        (Some(p), Some(d)) if p.is_relative() => Some(d.join(p)),
        (Some(p), _) => Some(p.clone()),
        (None, Some(d)) => Some(d.join(format!("{name}.{}", extension(format)))),
        (None, None) => None,
    }
}

/// Runs the CLI on `args` (including the program name) and returns the
/// exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                let _ = write!(err, "{text}");
                2
            } else {
                let _ = write!(out, "{text}");
                0
            };
        }
    };
    let result = execute(&cli.command).and_then(|(body, name, format, spec)| {
        match destination(name, format, spec) {
            Some(path) => std::fs::write(&path, body)
                .map_err(|e| Failure::Invalid(Error::Io(format!("{}: {e}", path.display())))),
            None => out
                .write_all(body.as_bytes())
                .map_err(|e| Failure::Invalid(e.into())),
        }
    });
    match result {
        Ok(()) => 0,
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            2
        }
        Err(Failure::Invalid(e)) => {
            let _ = writeln!(err, "error: {e}");
            3
        }
    }
}
