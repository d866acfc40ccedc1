//! Parsing of first-difference tables from CSV or JSON files.

use std::fs;
use std::path::Path;

use anyhow::{bail, Context};
use fatpoints_core::types::DeltaMatrix;
use serde::Deserialize;

#[derive(Deserialize)]
struct JsonInput {
    rows: Vec<Vec<i64>>,
}

pub fn read_delta_matrix(path: &Path) -> anyhow::Result<DeltaMatrix> {
    let text =
        fs::read_to_string(path).with_context(|| format!("cannot read {}", path.display()))?;
    parse_delta_matrix(&text)
}

/// Accepts either comma-separated integer rows (one matrix row per line) or
/// a JSON object with a `rows` field.
pub fn parse_delta_matrix(text: &str) -> anyhow::Result<DeltaMatrix> {
    let rows = if text.trim_start().starts_with('{') {
        serde_json::from_str::<JsonInput>(text)
            .context("invalid JSON input")?
            .rows
    } else {
        parse_csv_rows(text)?
    };
    Ok(DeltaMatrix::new(rows)?)
}

fn parse_csv_rows(text: &str) -> anyhow::Result<Vec<Vec<i64>>> {
    let mut rows = Vec::new();
    for (index, line) in text.lines().enumerate() {
        if line.trim().is_empty() {
            continue;
        }
        let mut row = Vec::new();
        for cell in line.split(',') {
            let cell = cell.trim();
            match cell.parse::<i64>() {
                Ok(value) => row.push(value),
                Err(_) => bail!("line {}: not an integer: {cell:?}", index + 1),
            }
        }
        rows.push(row);
    }
    Ok(rows)
}
