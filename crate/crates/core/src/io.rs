//! Dataset ingestion from CSV and ARFF files.
//!
//! Type inference is purely syntactic: a column is numeric iff every value
//! parses as a finite decimal number, otherwise it is categorical. The
//! target column is always treated as categorical. Any empty, `NA` or `?`
//! cell rejects the whole dataset.

use std::path::Path;
use std::sync::Arc;

use crate::dataset::{Column, Dataset};
use crate::error::DataError;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Csv,
    Arff,
}

impl Format {
    /// Picks a format from the file extension, defaulting to CSV.
    pub fn from_path(path: &Path) -> Format {
        match path.extension().and_then(|e| e.to_str()) {
            Some(ext) if ext.eq_ignore_ascii_case("arff") => Format::Arff,
            _ => Format::Csv,
        }
    }
}

fn is_missing(cell: &str) -> bool {
    let t = cell.trim();
    t.is_empty() || t == "?" || t == "NA"
}

fn parse_numeric(cell: &str) -> Option<f64> {
    let v: f64 = cell.trim().parse().ok()?;
    v.is_finite().then_some(v)
}

/// Loads a dataset from `path`, using `target_name` as the class column.
pub fn load_dataset(path: &Path, format: Format, target_name: &str) -> Result<Dataset, DataError> {
    let name = path
        .file_stem()
        .and_then(|s| s.to_str())
        .unwrap_or("dataset")
        .to_string();
    match format {
        Format::Csv => load_csv(path, b',', target_name, &name),
        Format::Arff => load_arff(path, target_name, &name),
    }
}

/// CSV loader with a configurable separator (RFC 4180, first row header).
pub fn load_csv_with_separator(
    path: &Path,
    separator: u8,
    target_name: &str,
) -> Result<Dataset, DataError> {
    let name = path
        .file_stem()
        .and_then(|s| s.to_str())
        .unwrap_or("dataset")
        .to_string();
    load_csv(path, separator, target_name, &name)
}

fn load_csv(path: &Path, separator: u8, target_name: &str, name: &str) -> Result<Dataset, DataError> {
    let display = path.display().to_string();
    let mut reader = csv::ReaderBuilder::new()
        .delimiter(separator)
        .has_headers(true)
        .flexible(false)
        .from_path(path)?;
    let headers: Vec<String> = reader
        .headers()
        .map_err(|e| DataError::parse(&display, e.to_string()))?
        .iter()
        .map(|h| h.trim().to_string())
        .collect();

    let mut cells: Vec<Vec<String>> = vec![Vec::new(); headers.len()];
    for (row_idx, record) in reader.records().enumerate() {
        let record = record.map_err(|e| DataError::parse(&display, e.to_string()))?;
        if record.len() != headers.len() {
            return Err(DataError::parse(
                &display,
                format!("row {} has {} fields, expected {}", row_idx + 1, record.len(), headers.len()),
            ));
        }
        for (col, cell) in record.iter().enumerate() {
            if is_missing(cell) {
                return Err(DataError::MissingValues {
                    row: row_idx + 1,
                    column: headers[col].clone(),
                });
            }
            cells[col].push(cell.trim().to_string());
        }
    }
    build_dataset(name, &display, headers, cells, target_name, None)
}

/// Column type declared by an ARFF header, used to bypass inference.
enum DeclaredKind {
    Numeric,
    Nominal,
}

fn load_arff(path: &Path, target_name: &str, name: &str) -> Result<Dataset, DataError> {
    let display = path.display().to_string();
    let text = std::fs::read_to_string(path)?;
    let mut headers: Vec<String> = Vec::new();
    let mut declared: Vec<DeclaredKind> = Vec::new();
    let mut cells: Vec<Vec<String>> = Vec::new();
    let mut in_data = false;
    let mut row_idx = 0usize;

    for raw in text.lines() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('%') {
            continue;
        }
        if !in_data {
            let lower = line.to_ascii_lowercase();
            if lower.starts_with("@relation") {
                continue;
            }
            if lower.starts_with("@attribute") {
                let rest = line["@attribute".len()..].trim();
                let (attr_name, attr_type) = split_arff_attribute(rest)
                    .ok_or_else(|| DataError::parse(&display, format!("malformed attribute line: {line}")))?;
                let kind = if attr_type.starts_with('{') {
                    DeclaredKind::Nominal
                } else {
                    match attr_type.to_ascii_lowercase().as_str() {
                        "numeric" | "real" | "integer" => DeclaredKind::Numeric,
                        other => {
                            return Err(DataError::parse(
                                &display,
                                format!("unsupported attribute type '{other}' (only numeric and nominal are supported)"),
                            ))
                        }
                    }
                };
                headers.push(attr_name);
                declared.push(kind);
                cells.push(Vec::new());
                continue;
            }
            if lower.starts_with("@data") {
                if headers.is_empty() {
                    return Err(DataError::parse(&display, "@data section before any @attribute"));
                }
                in_data = true;
                continue;
            }
            return Err(DataError::parse(&display, format!("unexpected header line: {line}")));
        }
        row_idx += 1;
        let fields: Vec<&str> = line.split(',').map(|f| f.trim()).collect();
        if fields.len() != headers.len() {
            return Err(DataError::parse(
                &display,
                format!("row {} has {} fields, expected {}", row_idx, fields.len(), headers.len()),
            ));
        }
        for (col, cell) in fields.iter().enumerate() {
            let cell = cell.trim_matches('\'').trim_matches('"');
            if is_missing(cell) {
                return Err(DataError::MissingValues {
                    row: row_idx,
                    column: headers[col].clone(),
                });
            }
            cells[col].push(cell.to_string());
        }
    }
    if !in_data {
        return Err(DataError::parse(&display, "no @data section found"));
    }
    build_dataset(name, &display, headers, cells, target_name, Some(declared))
}

/// Splits an `@attribute` payload into name and type, honoring quoted names.
fn split_arff_attribute(rest: &str) -> Option<(String, String)> {
    let rest = rest.trim();
    if let Some(stripped) = rest.strip_prefix('\'') {
        let end = stripped.find('\'')?;
        let name = stripped[..end].to_string();
        let ty = stripped[end + 1..].trim().to_string();
        (!ty.is_empty()).then_some((name, ty))
    } else {
        let mut parts = rest.splitn(2, char::is_whitespace);
        let name = parts.next()?.to_string();
        let ty = parts.next()?.trim().to_string();
        Some((name, ty))
    }
}

fn build_dataset(
    name: &str,
    display: &str,
    headers: Vec<String>,
    cells: Vec<Vec<String>>,
    target_name: &str,
    declared: Option<Vec<DeclaredKind>>,
) -> Result<Dataset, DataError> {
    let target_idx = headers
        .iter()
        .position(|h| h == target_name)
        .ok_or_else(|| DataError::UnknownTarget(target_name.to_string()))?;
    if cells[target_idx].is_empty() {
        return Err(DataError::parse(display, "dataset has no data rows"));
    }

    let mut columns = Vec::new();
    let mut target = None;
    for (i, (header, values)) in headers.iter().zip(cells.iter()).enumerate() {
        if i == target_idx {
            target = Some(Column::categorical_from_strings(header.clone(), values));
            continue;
        }
        let force_nominal = matches!(
            declared.as_ref().map(|ks| &ks[i]),
            Some(DeclaredKind::Nominal)
        );
        let parsed: Option<Vec<f64>> = if force_nominal {
            None
        } else {
            values.iter().map(|v| parse_numeric(v)).collect()
        };
        let column = match parsed {
            Some(numbers) => Column::numeric(header.clone(), numbers),
            None => Column::categorical_from_strings(header.clone(), values),
        };
        columns.push(column);
    }

    let dataset = Dataset::new(name, columns, target.expect("target column located above"))?;
    dataset.validate_classes()?;
    Ok(dataset)
}

/// Convenience constructor used by tests and the synthetic generators.
pub fn dataset_from_rows(
    name: &str,
    headers: &[&str],
    rows: &[Vec<&str>],
    target_name: &str,
) -> Result<Dataset, DataError> {
    let mut cells: Vec<Vec<String>> = vec![Vec::new(); headers.len()];
    for (row_idx, row) in rows.iter().enumerate() {
        for (col, cell) in row.iter().enumerate() {
            if is_missing(cell) {
                return Err(DataError::MissingValues {
                    row: row_idx + 1,
                    column: headers[col].to_string(),
                });
            }
            cells[col].push(cell.to_string());
        }
    }
    build_dataset(
        name,
        "<memory>",
        headers.iter().map(|h| h.to_string()).collect(),
        cells,
        target_name,
        None,
    )
}

/// One-hot labels used when binarization expands a categorical column.
pub(crate) fn one_hot_labels() -> Arc<Vec<String>> {
    Arc::new(vec!["0".to_string(), "1".to_string()])
}
