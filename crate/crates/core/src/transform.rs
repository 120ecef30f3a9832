//! Data transformations bridging measure input domains: one-hot
//! binarization (categorical -> numeric), equal-frequency discretization
//! (numeric -> categorical), min-max rescaling and per-class splitting.

use std::sync::Arc;

use crate::dataset::{Column, ColumnData, Dataset};
use crate::io::one_hot_labels;

/// Replaces every categorical predictive column having `phi` distinct
/// values with `phi` numeric 0/1 columns, expanded in place. Numeric
/// columns and the target are untouched.
pub fn binarize(dataset: &Dataset) -> Dataset {
    let mut columns = Vec::new();
    for col in dataset.columns() {
        match &col.data {
            ColumnData::Numeric(_) => columns.push(col.clone()),
            ColumnData::Categorical { codes, labels } => {
                for &code in present_codes(codes).iter() {
                    let values: Vec<f64> = codes
                        .iter()
                        .map(|&c| if c == code { 1.0 } else { 0.0 })
                        .collect();
                    let name = format!("{}={}", col.name, labels[code as usize]);
                    columns.push(Column::numeric(name, values));
                }
            }
        }
    }
    Dataset::new(dataset.name.clone(), columns, dataset.target().clone())
        .expect("binarize preserves column lengths")
}

/// Like [`binarize`] but also reports, for each output column, the index of
/// the source column it came from. Used by learners that need to map
/// attribute subsets through the expansion.
pub fn binarize_with_provenance(dataset: &Dataset) -> (Dataset, Vec<usize>) {
    let mut columns = Vec::new();
    let mut origin = Vec::new();
    for (j, col) in dataset.columns().iter().enumerate() {
        match &col.data {
            ColumnData::Numeric(_) => {
                columns.push(col.clone());
                origin.push(j);
            }
            ColumnData::Categorical { codes, labels } => {
                for &code in present_codes(codes).iter() {
                    let values: Vec<f64> = codes
                        .iter()
                        .map(|&c| if c == code { 1.0 } else { 0.0 })
                        .collect();
                    let name = format!("{}={}", col.name, labels[code as usize]);
                    columns.push(Column::numeric(name, values));
                    origin.push(j);
                }
            }
        }
    }
    let ds = Dataset::new(dataset.name.clone(), columns, dataset.target().clone())
        .expect("binarize preserves column lengths");
    (ds, origin)
}

/// Distinct codes in first-appearance order.
fn present_codes(codes: &[u32]) -> Vec<u32> {
    let mut seen = Vec::new();
    for &c in codes {
        if !seen.contains(&c) {
            seen.push(c);
        }
    }
    seen
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Bins {
    /// max(2, round(n^(1/3))) intervals.
    Auto,
    Fixed(usize),
}

impl Bins {
    pub fn resolve(self, n: usize) -> usize {
        match self {
            Bins::Auto => ((n as f64).cbrt().round() as usize).max(2),
            Bins::Fixed(b) => {
                assert!(b >= 2, "explicit bin count must be at least 2");
                b
            }
        }
    }
}

/// Converts every numeric predictive column to a categorical one via
/// equal-frequency binning. Bin labels are interval indices; ties at a bin
/// boundary are assigned to the lower bin.
pub fn discretize(dataset: &Dataset, bins: Bins) -> Dataset {
    let n = dataset.n();
    let b = bins.resolve(n);
    let columns = dataset
        .columns()
        .iter()
        .map(|col| match &col.data {
            ColumnData::Numeric(values) => discretize_column(&col.name, values, b),
            ColumnData::Categorical { .. } => col.clone(),
        })
        .collect();
    Dataset::new(dataset.name.clone(), columns, dataset.target().clone())
        .expect("discretize preserves column lengths")
}

fn discretize_column(name: &str, values: &[f64], bins: usize) -> Column {
    let n = values.len();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&a, &b| values[a].partial_cmp(&values[b]).unwrap().then(a.cmp(&b)));

    // Equal-frequency cuts at round(k*n/bins); boundary ties extend the
    // lower bin so equal values never straddle an interval.
    let mut assignment = vec![0u32; n];
    let mut label_used = vec![false; bins];
    let mut start = 0usize;
    for k in 0..bins {
        let mut end = if k + 1 == bins {
            n
        } else {
            (((k + 1) as f64) * (n as f64) / (bins as f64)).round() as usize
        };
        if end < start {
            end = start;
        }
        while end > 0 && end < n && values[order[end]] == values[order[end - 1]] {
            end += 1;
        }
        for &idx in &order[start..end] {
            assignment[idx] = k as u32;
        }
        if end > start {
            label_used[k] = true;
        }
        start = end;
    }

    // Compact away empty intervals so codes stay contiguous.
    let mut remap = vec![0u32; bins];
    let mut labels = Vec::new();
    for (k, used) in label_used.iter().enumerate() {
        if *used {
            remap[k] = labels.len() as u32;
            labels.push(labels.len().to_string());
        }
    }
    let codes = assignment.iter().map(|&a| remap[a as usize]).collect();
    Column::categorical(name, codes, Arc::new(labels))
}

/// Maps every numeric predictive column to (x - min) / (max - min).
/// Constant columns map to all-zeros instead of dividing by zero.
pub fn rescale_minmax(dataset: &Dataset) -> Dataset {
    let columns = dataset
        .columns()
        .iter()
        .map(|col| match &col.data {
            ColumnData::Numeric(values) => {
                let min = values.iter().cloned().fold(f64::INFINITY, f64::min);
                let max = values.iter().cloned().fold(f64::NEG_INFINITY, f64::max);
                let scaled = if max > min {
                    values.iter().map(|v| (v - min) / (max - min)).collect()
                } else {
                    vec![0.0; values.len()]
                };
                Column::numeric(col.name.clone(), scaled)
            }
            ColumnData::Categorical { .. } => col.clone(),
        })
        .collect();
    Dataset::new(dataset.name.clone(), columns, dataset.target().clone())
        .expect("rescale preserves column lengths")
}

/// Splits the dataset into one sub-dataset per class, in first-appearance
/// class order. Sub-datasets keep all predictive columns and a constant
/// target; they are exempt from the `q >= 2` ingestion rule.
pub fn split_by_class(dataset: &Dataset) -> Vec<Dataset> {
    dataset
        .class_codes()
        .iter()
        .map(|&class| {
            let rows: Vec<usize> = dataset
                .target_codes()
                .iter()
                .enumerate()
                .filter(|(_, &c)| c == class)
                .map(|(i, _)| i)
                .collect();
            let mut sub = dataset.select_rows(&rows);
            sub.name = format!(
                "{}[{}]",
                dataset.name,
                dataset.class_labels()[class as usize]
            );
            sub
        })
        .collect()
}
