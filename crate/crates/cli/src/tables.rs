use std::fs::File;
use std::path::{Path, PathBuf};

use eulersum_core::reduction::{load_identity_table, IdentityTable, TableReport};

use crate::error::CliError;

/// Name of the bundled table.
pub const STARTER_NAME: &str = "builtin:starter";
/// The bundled table, generated by `starter_table`.
pub const STARTER_JSONL: &str = include_str!("../tables/starter.jsonl");
/// Directory searched before the working directory.
pub const TABLE_DIR_ENV: &str = "EULERSUM_TABLE_DIR";

/// Resolves a relative path against `EULERSUM_TABLE_DIR` first.
pub fn resolve(path: &str) -> PathBuf {
    let p = Path::new(path);
    if p.is_relative() {
        if let Some(dir) = std::env::var_os(TABLE_DIR_ENV) {
            let candidate = Path::new(&dir).join(p);
            if candidate.exists() {
                return candidate;
            }
        }
    }
    p.to_path_buf()
}

pub fn load_one(
    source: &str,
    verify_tol: Option<f64>,
) -> Result<(IdentityTable, TableReport), CliError> {
    if source == STARTER_NAME {
        return Ok(load_identity_table(
            STARTER_JSONL.as_bytes(),
            STARTER_NAME,
            verify_tol,
        )?);
    }
    let path = resolve(source);
    let file = File::open(&path)
        .map_err(|e| CliError::Tables(format!("cannot open table {}: {e}", path.display())))?;
    Ok(load_identity_table(
        file,
        &path.display().to_string(),
        verify_tol,
    )?)
}

/// Loads every table, reporting failures and rejected entries on stderr.
/// Fails only when `require` is set and no table loaded.
pub fn load_all(
    sources: &[String],
    verify_tol: Option<f64>,
    require: bool,
) -> Result<Vec<IdentityTable>, CliError> {
    let mut tables = Vec::new();
    for source in sources {
        match load_one(source, verify_tol) {
            Ok((table, report)) => {
                for r in &report.rejected {
                    eprintln!(
                        "{}:{}: rejected {}: {}",
                        table.source(),
                        r.line,
                        r.lhs,
                        r.reason
                    );
                }
                tables.push(table);
            }
            Err(e) => eprintln!("error: {e}"),
        }
    }
    if require && tables.is_empty() {
        return Err(CliError::Tables("no identity table could be loaded".into()));
    }
    Ok(tables)
}
