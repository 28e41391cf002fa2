//! CSV/JSON tables, config hashing and atomic file writes.

use std::io::Write;
use std::path::{Path, PathBuf};

use serde::Serialize;
use serde_json::{json, Map, Value};
use sha2::{Digest, Sha256};

use crate::error::CliError;

pub const DEFAULT_OUT_DIR: &str = "out";

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Csv,
    Json,
}

impl Format {
    pub fn extension(self) -> &'static str {
        match self {
            Self::Csv => "csv",
            Self::Json => "json",
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum Cell {
    Num(f64),
    Int(i64),
    Bool(bool),
    Text(String),
    Missing,
}

impl Cell {
    /// 17 significant digits, enough to round-trip any `f64`.
    fn csv(&self) -> String {
        match self {
            Self::Num(x) => format!("{x:.16e}"),
            Self::Int(i) => i.to_string(),
            Self::Bool(b) => b.to_string(),
            Self::Text(s) => s.clone(),
            Self::Missing => String::new(),
        }
    }

    fn json(&self) -> Value {
        match self {
            Self::Num(x) if x.is_finite() => json!(x),
            Self::Num(x) => json!(x.to_string()),
            Self::Int(i) => json!(i),
            Self::Bool(b) => json!(b),
            Self::Text(s) => json!(s),
            Self::Missing => Value::Null,
        }
    }
}

pub struct Column {
    pub name: &'static str,
    pub description: &'static str,
}

pub struct Table {
    pub columns: Vec<Column>,
    pub rows: Vec<Vec<Cell>>,
}

impl Table {
    pub fn to_csv(&self) -> Result<Vec<u8>, CliError> {
        let mut w = csv::Writer::from_writer(Vec::new());
        w.write_record(self.columns.iter().map(|c| c.name))?;
        for row in &self.rows {
            w.write_record(row.iter().map(Cell::csv))?;
        }
        w.into_inner().map_err(|e| CliError::Io(e.to_string()))
    }

    pub fn rows_json(&self) -> Value {
        Value::Array(
            self.rows
                .iter()
                .map(|row| {
                    let obj: Map<String, Value> = self
                        .columns
                        .iter()
                        .zip(row)
                        .map(|(c, v)| (c.name.to_string(), v.json()))
                        .collect();
                    Value::Object(obj)
                })
                .collect(),
        )
    }

    pub fn columns_json(&self) -> Value {
        Value::Array(
            self.columns
                .iter()
                .map(|c| json!({ "name": c.name, "description": c.description }))
                .collect(),
        )
    }
}

/// The JSON envelope shared by every exported file.
pub fn envelope(command: &str, config: &impl Serialize) -> Result<Map<String, Value>, CliError> {
    let mut m = Map::new();
    m.insert("tool".into(), json!("punctured-plane"));
    m.insert("version".into(), json!(env!("CARGO_PKG_VERSION")));
    m.insert("command".into(), json!(command));
    m.insert("config".into(), serde_json::to_value(config)?);
    Ok(m)
}

pub fn table_document(
    command: &str,
    config: &impl Serialize,
    table: &Table,
    extra: Map<String, Value>,
) -> Result<Value, CliError> {
    let mut doc = envelope(command, config)?;
    doc.insert("columns".into(), table.columns_json());
    doc.insert("rows".into(), table.rows_json());
    doc.extend(extra);
    Ok(Value::Object(doc))
}

/// First 16 hex digits of SHA-256 over the command name and the serialized config.
pub fn config_hash(command: &str, config: &impl Serialize) -> Result<String, CliError> {
    let mut hasher = Sha256::new();
    hasher.update(command.as_bytes());
    hasher.update([0u8]);
    hasher.update(serde_json::to_vec(config)?);
    Ok(hex::encode(hasher.finalize())[..16].to_string())
}

pub fn resolve_path(
    out: Option<&Path>,
    command: &str,
    config: &impl Serialize,
    format: Format,
) -> Result<PathBuf, CliError> {
    match out {
        Some(p) => Ok(p.to_path_buf()),
        None => {
            let hash = config_hash(command, config)?;
            Ok(Path::new(DEFAULT_OUT_DIR).join(format!("{command}-{hash}.{}", format.extension())))
        }
    }
}

/// Writes through a temporary file in the target directory, then renames.
pub fn atomic_write(path: &Path, bytes: &[u8]) -> Result<(), CliError> {
    let dir = match path.parent() {
        Some(d) if !d.as_os_str().is_empty() => d.to_path_buf(),
        _ => PathBuf::from("."),
    };
    std::fs::create_dir_all(&dir)?;
    let mut tmp = tempfile::NamedTempFile::new_in(&dir)?;
    tmp.write_all(bytes)?;
    tmp.flush()?;
    tmp.persist(path)
        .map_err(|e| CliError::Io(e.error.to_string()))?;
    Ok(())
}

pub fn json_bytes(doc: &Value) -> Result<Vec<u8>, CliError> {
    let mut bytes = serde_json::to_vec_pretty(doc)?;
    bytes.push(b'\n');
    Ok(bytes)
}
