//! Append-only JSON Lines result store.

use std::collections::HashSet;
use std::fs::{File, OpenOptions};
use std::io::{BufRead, BufReader, BufWriter, Write};
use std::path::{Path, PathBuf};

use cyclodet_core::Identity;
use thiserror::Error;

use crate::record::ResultRecord;

#[derive(Debug, Error)]
pub enum StoreError {
    #[error("{path}: {source}")]
    Io { path: PathBuf, source: std::io::Error },
    #[error("{path}:{line}: malformed record: {message}")]
    Corrupt { path: PathBuf, line: usize, message: String },
}

/// Reads every record; a missing file is an empty store. Blank lines are
/// ignored, anything else that fails to parse aborts with its line number.
pub fn read_store(path: &Path) -> Result<Vec<ResultRecord>, StoreError> {
    let file = match File::open(path) {
        Ok(f) => f,
        Err(e) if e.kind() == std::io::ErrorKind::NotFound => return Ok(Vec::new()),
        Err(source) => return Err(StoreError::Io { path: path.to_owned(), source }),
    };
    let mut out = Vec::new();
    for (idx, line) in BufReader::new(file).lines().enumerate() {
        let line = line.map_err(|source| StoreError::Io { path: path.to_owned(), source })?;
        if line.trim().is_empty() {
            continue;
        }
        let rec = ResultRecord::from_line(&line).map_err(|e| StoreError::Corrupt {
            path: path.to_owned(),
            line: idx + 1,
            message: e.to_string(),
        })?;
        out.push(rec);
    }
    Ok(out)
}

pub fn completed_keys(records: &[ResultRecord]) -> HashSet<(Identity, u64)> {
    records.iter().map(ResultRecord::key).collect()
}

/// Single serialized sink for new records.
pub struct StoreWriter {
    path: PathBuf,
    out: BufWriter<File>,
}

impl StoreWriter {
    pub fn append(path: &Path) -> Result<Self, StoreError> {
        let file = OpenOptions::new()
            .create(true)
            .append(true)
            .open(path)
            .map_err(|source| StoreError::Io { path: path.to_owned(), source })?;
        Ok(StoreWriter { path: path.to_owned(), out: BufWriter::new(file) })
    }

    pub fn write(&mut self, rec: &ResultRecord) -> Result<(), StoreError> {
        writeln!(self.out, "{}", rec.to_line()).map_err(|source| StoreError::Io { path: self.path.clone(), source })
    }

    pub fn flush(&mut self) -> Result<(), StoreError> {
        self.out.flush().map_err(|source| StoreError::Io { path: self.path.clone(), source })
    }
}
