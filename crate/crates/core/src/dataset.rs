//! Column-oriented representation of a tabular classification dataset.
//!
//! A [`Dataset`] holds `d` typed predictive columns plus a categorical
//! target with `q` distinct classes. Instances are immutable after
//! construction; every transformation produces a new dataset, so values can
//! be read from multiple workers without synchronization.

use std::collections::HashMap;
use std::sync::Arc;

use crate::error::DataError;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ColumnKind {
    Numeric,
    Categorical,
}

/// Storage for one column. Categorical values are interned: `codes[i]`
/// indexes into `labels`, which preserves first-appearance order.
#[derive(Debug, Clone)]
pub enum ColumnData {
    Numeric(Vec<f64>),
    Categorical { codes: Vec<u32>, labels: Arc<Vec<String>> },
}

#[derive(Debug, Clone)]
pub struct Column {
    pub name: String,
    pub data: ColumnData,
    /// Number of distinct values actually present (phi).
    distinct: usize,
}

impl Column {
    pub fn numeric(name: impl Into<String>, values: Vec<f64>) -> Self {
        let distinct = distinct_f64(&values);
        Column {
            name: name.into(),
            data: ColumnData::Numeric(values),
            distinct,
        }
    }

    /// Builds a categorical column from raw string values, interning the
    /// labels in first-appearance order.
    pub fn categorical_from_strings<S: AsRef<str>>(name: impl Into<String>, values: &[S]) -> Self {
        let mut labels: Vec<String> = Vec::new();
        let mut index: HashMap<String, u32> = HashMap::new();
        let mut codes = Vec::with_capacity(values.len());
        for v in values {
            let v = v.as_ref();
            let code = match index.get(v) {
                Some(&c) => c,
                None => {
                    let c = labels.len() as u32;
                    labels.push(v.to_string());
                    index.insert(v.to_string(), c);
                    c
                }
            };
            codes.push(code);
        }
        Column::categorical(name, codes, Arc::new(labels))
    }

    pub fn categorical(name: impl Into<String>, codes: Vec<u32>, labels: Arc<Vec<String>>) -> Self {
        let distinct = distinct_u32(&codes);
        Column {
            name: name.into(),
            data: ColumnData::Categorical { codes, labels },
            distinct,
        }
    }

    pub fn kind(&self) -> ColumnKind {
        match self.data {
            ColumnData::Numeric(_) => ColumnKind::Numeric,
            ColumnData::Categorical { .. } => ColumnKind::Categorical,
        }
    }

    pub fn len(&self) -> usize {
        match &self.data {
            ColumnData::Numeric(v) => v.len(),
            ColumnData::Categorical { codes, .. } => codes.len(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// phi: the number of distinct values present in the column.
    pub fn distinct_count(&self) -> usize {
        self.distinct
    }

    pub fn as_numeric(&self) -> Option<&[f64]> {
        match &self.data {
            ColumnData::Numeric(v) => Some(v),
            ColumnData::Categorical { .. } => None,
        }
    }

    pub fn as_categorical(&self) -> Option<(&[u32], &[String])> {
        match &self.data {
            ColumnData::Numeric(_) => None,
            ColumnData::Categorical { codes, labels } => Some((codes, labels)),
        }
    }

    /// Integer codes for the column values regardless of kind, suitable for
    /// contingency-table counting. Numeric columns are coded by rank of
    /// their distinct values.
    pub fn interned_codes(&self) -> Vec<u32> {
        match &self.data {
            ColumnData::Categorical { codes, .. } => codes.clone(),
            ColumnData::Numeric(values) => {
                let mut sorted: Vec<f64> = values.clone();
                sorted.sort_by(|a, b| a.partial_cmp(b).unwrap());
                sorted.dedup();
                values
                    .iter()
                    .map(|v| sorted.partition_point(|s| s < v) as u32)
                    .collect()
            }
        }
    }

    /// Restricts the column to the given row indices.
    pub fn select(&self, rows: &[usize]) -> Column {
        match &self.data {
            ColumnData::Numeric(v) => {
                Column::numeric(self.name.clone(), rows.iter().map(|&i| v[i]).collect())
            }
            ColumnData::Categorical { codes, labels } => Column::categorical(
                self.name.clone(),
                rows.iter().map(|&i| codes[i]).collect(),
                Arc::clone(labels),
            ),
        }
    }
}

fn distinct_f64(values: &[f64]) -> usize {
    let mut sorted: Vec<f64> = values.to_vec();
    sorted.sort_by(|a, b| a.partial_cmp(b).unwrap());
    sorted.dedup();
    sorted.len()
}

fn distinct_u32(codes: &[u32]) -> usize {
    let mut sorted: Vec<u32> = codes.to_vec();
    sorted.sort_unstable();
    sorted.dedup();
    sorted.len()
}

/// A typed, column-oriented classification dataset.
#[derive(Debug, Clone)]
pub struct Dataset {
    pub name: String,
    columns: Vec<Column>,
    target: Column,
}

impl Dataset {
    /// Builds a dataset from predictive columns and a categorical target.
    ///
    /// Column lengths must agree and the target must be categorical. The
    /// `q >= 2` requirement is enforced at ingestion ([`validate_classes`])
    /// rather than here, because per-class sub-datasets produced by
    /// `split_by_class` legitimately carry a constant target.
    pub fn new(name: impl Into<String>, columns: Vec<Column>, target: Column) -> Result<Self, DataError> {
        let n = target.len();
        if !matches!(target.kind(), ColumnKind::Categorical) {
            return Err(DataError::parse(
                "<memory>",
                "target column must be categorical",
            ));
        }
        for c in &columns {
            if c.len() != n {
                return Err(DataError::parse(
                    "<memory>",
                    format!("column '{}' has {} values, expected {}", c.name, c.len(), n),
                ));
            }
        }
        Ok(Dataset {
            name: name.into(),
            columns,
            target,
        })
    }

    /// Checks the ingestion-time invariants: at least one attribute and
    /// `2 <= q <= n`.
    pub fn validate_classes(&self) -> Result<(), DataError> {
        if self.columns.is_empty() {
            return Err(DataError::NoAttributes);
        }
        if self.num_classes() < 2 {
            return Err(DataError::SingleClass);
        }
        Ok(())
    }

    /// Number of instances.
    pub fn n(&self) -> usize {
        self.target.len()
    }

    /// Number of predictive attributes.
    pub fn d(&self) -> usize {
        self.columns.len()
    }

    /// Number of distinct classes present in the target (q).
    pub fn num_classes(&self) -> usize {
        self.target.distinct_count()
    }

    pub fn columns(&self) -> &[Column] {
        &self.columns
    }

    pub fn column(&self, i: usize) -> &Column {
        &self.columns[i]
    }

    pub fn target(&self) -> &Column {
        &self.target
    }

    /// Target codes, in the dataset's class order (first appearance).
    pub fn target_codes(&self) -> &[u32] {
        match &self.target.data {
            ColumnData::Categorical { codes, .. } => codes,
            ColumnData::Numeric(_) => unreachable!("target is always categorical"),
        }
    }

    pub fn class_labels(&self) -> &[String] {
        match &self.target.data {
            ColumnData::Categorical { labels, .. } => labels,
            ColumnData::Numeric(_) => unreachable!("target is always categorical"),
        }
    }

    /// Distinct class codes in first-appearance order.
    pub fn class_codes(&self) -> Vec<u32> {
        let mut seen = vec![false; self.class_labels().len()];
        let mut out = Vec::new();
        for &c in self.target_codes() {
            if !seen[c as usize] {
                seen[c as usize] = true;
                out.push(c);
            }
        }
        out
    }

    /// Per-class instance counts, aligned with [`Dataset::class_codes`].
    pub fn class_counts(&self) -> Vec<usize> {
        let codes = self.class_codes();
        let mut pos = HashMap::new();
        for (i, &c) in codes.iter().enumerate() {
            pos.insert(c, i);
        }
        let mut counts = vec![0usize; codes.len()];
        for &c in self.target_codes() {
            counts[pos[&c]] += 1;
        }
        counts
    }

    pub fn numeric_column_indices(&self) -> Vec<usize> {
        (0..self.d())
            .filter(|&i| self.columns[i].kind() == ColumnKind::Numeric)
            .collect()
    }

    pub fn categorical_column_indices(&self) -> Vec<usize> {
        (0..self.d())
            .filter(|&i| self.columns[i].kind() == ColumnKind::Categorical)
            .collect()
    }

    /// Projects the dataset onto a subset of predictive columns, keeping
    /// the target. Column order follows `indices`.
    pub fn project(&self, indices: &[usize]) -> Dataset {
        Dataset {
            name: self.name.clone(),
            columns: indices.iter().map(|&i| self.columns[i].clone()).collect(),
            target: self.target.clone(),
        }
    }

    /// Restricts the dataset to the given rows (all columns and target).
    pub fn select_rows(&self, rows: &[usize]) -> Dataset {
        Dataset {
            name: self.name.clone(),
            columns: self.columns.iter().map(|c| c.select(rows)).collect(),
            target: self.target.select(rows),
        }
    }

    /// Dense numeric matrix view (row major), only valid when every
    /// predictive column is numeric.
    pub fn to_numeric_rows(&self) -> Option<Vec<Vec<f64>>> {
        let mut cols = Vec::with_capacity(self.d());
        for c in &self.columns {
            cols.push(c.as_numeric()?);
        }
        let n = self.n();
        let mut rows = vec![vec![0.0; self.d()]; n];
        for (j, col) in cols.iter().enumerate() {
            for i in 0..n {
                rows[i][j] = col[i];
            }
        }
        Some(rows)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn toy() -> Dataset {
        let a = Column::numeric("a", vec![1.0, 2.0, 3.0, 4.0]);
        let b = Column::categorical_from_strings("b", &["x", "y", "x", "y"]);
        let y = Column::categorical_from_strings("class", &["p", "n", "p", "n"]);
        Dataset::new("toy", vec![a, b], y).unwrap()
    }

    #[test]
    fn shape_and_counts() {
        let ds = toy();
        assert_eq!(ds.n(), 4);
        assert_eq!(ds.d(), 2);
        assert_eq!(ds.num_classes(), 2);
        assert_eq!(ds.class_counts(), vec![2, 2]);
        assert_eq!(ds.class_labels(), &["p".to_string(), "n".to_string()]);
    }

    #[test]
    fn distinct_counts() {
        let ds = toy();
        assert_eq!(ds.column(0).distinct_count(), 4);
        assert_eq!(ds.column(1).distinct_count(), 2);
    }

    #[test]
    fn mismatched_lengths_rejected() {
        let a = Column::numeric("a", vec![1.0]);
        let y = Column::categorical_from_strings("class", &["p", "n"]);
        assert!(Dataset::new("bad", vec![a], y).is_err());
    }

    #[test]
    fn single_class_fails_validation() {
        let a = Column::numeric("a", vec![1.0, 2.0]);
        let y = Column::categorical_from_strings("class", &["p", "p"]);
        let ds = Dataset::new("one", vec![a], y).unwrap();
        assert!(matches!(ds.validate_classes(), Err(DataError::SingleClass)));
    }

    #[test]
    fn interned_codes_rank_numerics() {
        let c = Column::numeric("a", vec![3.0, 1.0, 3.0, 2.0]);
        assert_eq!(c.interned_codes(), vec![2, 0, 2, 1]);
    }
}
