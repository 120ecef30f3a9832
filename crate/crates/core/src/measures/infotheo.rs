//! Information-theoretic measures over categorical data. All entropies use
//! log base 2 and empirical plug-in probabilities without smoothing.

use crate::dataset::{ColumnKind, Dataset};
use crate::summarize::{ElementFault, ExceptionKind, MeasureResult};

/// Shannon entropy of integer-coded values: H = -sum p log2 p.
pub fn entropy_codes(codes: &[u32]) -> f64 {
    let n = codes.len() as f64;
    let max = codes.iter().max().map(|&m| m as usize + 1).unwrap_or(0);
    let mut counts = vec![0usize; max];
    for &c in codes {
        counts[c as usize] += 1;
    }
    counts
        .iter()
        .filter(|&&c| c > 0)
        .map(|&c| {
            let p = c as f64 / n;
            -p * p.log2()
        })
        .sum()
}

/// Joint entropy of two aligned code vectors.
pub fn joint_entropy_codes(x: &[u32], y: &[u32]) -> f64 {
    let n = x.len() as f64;
    let joint = joint_counts(x, y);
    joint
        .counts
        .iter()
        .filter(|&&c| c > 0)
        .map(|&c| {
            let p = c as f64 / n;
            -p * p.log2()
        })
        .sum()
}

struct JointCounts {
    counts: Vec<usize>, // row-major x-by-y
    x_card: usize,
    y_card: usize,
}

fn joint_counts(x: &[u32], y: &[u32]) -> JointCounts {
    let x_card = x.iter().max().map(|&m| m as usize + 1).unwrap_or(0);
    let y_card = y.iter().max().map(|&m| m as usize + 1).unwrap_or(0);
    let mut counts = vec![0usize; x_card * y_card];
    for (&a, &b) in x.iter().zip(y) {
        counts[a as usize * y_card + b as usize] += 1;
    }
    JointCounts {
        counts,
        x_card,
        y_card,
    }
}

/// Goodman-Kruskal tau: how well x predicts y. Not symmetric. `None` when
/// y is constant (zero denominator).
pub fn concentration_codes(x: &[u32], y: &[u32]) -> Option<f64> {
    let n = x.len() as f64;
    let joint = joint_counts(x, y);
    let mut row_marginals = vec![0.0; joint.x_card];
    let mut col_marginals = vec![0.0; joint.y_card];
    for i in 0..joint.x_card {
        for j in 0..joint.y_card {
            let p = joint.counts[i * joint.y_card + j] as f64 / n;
            row_marginals[i] += p;
            col_marginals[j] += p;
        }
    }
    let sum_col_sq: f64 = col_marginals.iter().map(|p| p * p).sum();
    let denom = 1.0 - sum_col_sq;
    if denom == 0.0 {
        return None;
    }
    let mut conditional = 0.0;
    for i in 0..joint.x_card {
        if row_marginals[i] == 0.0 {
            continue;
        }
        for j in 0..joint.y_card {
            let p = joint.counts[i * joint.y_card + j] as f64 / n;
            conditional += p * p / row_marginals[i];
        }
    }
    Some((conditional - sum_col_sq) / denom)
}

/// Extracts the eight information-theoretic measures. The dataset is
/// expected to carry categorical predictive columns (the engine arranges
/// that via discretization or by projecting the categorical subset).
pub fn extract_infotheo(dataset: &Dataset) -> Vec<MeasureResult> {
    let d = dataset.d();
    let y = dataset.target_codes();
    let class_ent = entropy_codes(y);

    let codes: Vec<Vec<u32>> = dataset
        .columns()
        .iter()
        .map(|c| {
            debug_assert_eq!(c.kind(), ColumnKind::Categorical);
            c.interned_codes()
        })
        .collect();

    let attr_ent: Vec<f64> = codes.iter().map(|c| entropy_codes(c)).collect();
    let joint_ent: Vec<f64> = codes.iter().map(|c| joint_entropy_codes(c, y)).collect();
    let mut_inf: Vec<f64> = attr_ent
        .iter()
        .zip(&joint_ent)
        .map(|(a, j)| a + class_ent - j)
        .collect();

    // Ordered pairs (i, j) and (j, i) for every i < j.
    let mut attr_conc = Vec::new();
    let mut attr_conc_faults = Vec::new();
    for i in 0..d {
        for j in (i + 1)..d {
            for (a, b) in [(i, j), (j, i)] {
                match concentration_codes(&codes[a], &codes[b]) {
                    Some(v) => attr_conc.push(v),
                    None => {
                        attr_conc_faults.push(ElementFault {
                            index: attr_conc.len(),
                            kind: ExceptionKind::DivisionByZero,
                            default: None,
                        });
                        attr_conc.push(f64::NAN);
                    }
                }
            }
        }
    }

    let mut class_conc = Vec::new();
    let mut class_conc_faults = Vec::new();
    for c in &codes {
        match concentration_codes(c, y) {
            Some(v) => class_conc.push(v),
            None => {
                class_conc_faults.push(ElementFault {
                    index: class_conc.len(),
                    kind: ExceptionKind::DivisionByZero,
                    default: None,
                });
                class_conc.push(f64::NAN);
            }
        }
    }

    let mean_mi = mut_inf.iter().sum::<f64>() / d as f64;
    let mean_attr_ent = attr_ent.iter().sum::<f64>() / d as f64;
    let (eq_num_attr, ns_ratio) = if mean_mi == 0.0 {
        (
            MeasureResult::exception("eqNumAttr", ExceptionKind::DivisionByZero, None),
            MeasureResult::exception("nsRatio", ExceptionKind::DivisionByZero, None),
        )
    } else {
        (
            MeasureResult::single("eqNumAttr", class_ent / mean_mi),
            MeasureResult::single("nsRatio", (mean_attr_ent - mean_mi) / mean_mi),
        )
    };

    vec![
        if attr_conc.is_empty() {
            // A single attribute has no pairs to concentrate.
            MeasureResult::exception("attrConc", ExceptionKind::EmptyResult, None)
        } else {
            MeasureResult::with_faults("attrConc", attr_conc, attr_conc_faults)
        },
        MeasureResult::ok("attrEnt", attr_ent),
        MeasureResult::with_faults("classConc", class_conc, class_conc_faults),
        MeasureResult::single("classEnt", class_ent),
        eq_num_attr,
        MeasureResult::ok("jointEnt", joint_ent),
        MeasureResult::ok("mutInf", mut_inf),
        ns_ratio,
    ]
}
