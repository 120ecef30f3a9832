//! Simple measures: instance, attribute and class bookkeeping.

use crate::dataset::Dataset;
use crate::summarize::{ExceptionKind, MeasureResult};

/// Extracts the eleven simple measures. `catToNum`/`numToCat` raise an
/// exception when the denominator type is absent; the suggested default
/// for both is `d`.
pub fn extract_simple(dataset: &Dataset) -> Vec<MeasureResult> {
    let n = dataset.n() as f64;
    let d = dataset.d() as f64;
    let nr_num = dataset.numeric_column_indices().len() as f64;
    let nr_cat = d - nr_num;
    let nr_bin = dataset
        .columns()
        .iter()
        .filter(|c| c.distinct_count() == 2)
        .count() as f64;
    let counts = dataset.class_counts();
    let freq_class: Vec<f64> = counts.iter().map(|&c| c as f64 / n).collect();

    let cat_to_num = if nr_num == 0.0 {
        MeasureResult::exception("catToNum", ExceptionKind::DivisionByZero, Some(d))
    } else {
        MeasureResult::single("catToNum", nr_cat / nr_num)
    };
    let num_to_cat = if nr_cat == 0.0 {
        MeasureResult::exception("numToCat", ExceptionKind::DivisionByZero, Some(d))
    } else {
        MeasureResult::single("numToCat", nr_num / nr_cat)
    };

    vec![
        MeasureResult::single("attrToInst", d / n),
        cat_to_num,
        MeasureResult::ok("freqClass", freq_class),
        MeasureResult::single("instToAttr", n / d),
        MeasureResult::single("nrAttr", d),
        MeasureResult::single("nrBin", nr_bin),
        MeasureResult::single("nrCat", nr_cat),
        MeasureResult::single("nrClass", dataset.num_classes() as f64),
        MeasureResult::single("nrInst", n),
        MeasureResult::single("nrNum", nr_num),
        num_to_cat,
    ]
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dataset::Column;
    use crate::summarize::apply_measure_default;

    fn get<'a>(results: &'a [MeasureResult], name: &str) -> &'a MeasureResult {
        results.iter().find(|r| r.name == name).unwrap()
    }

    fn all_numeric() -> Dataset {
        let cols = vec![
            Column::numeric("a", vec![1.0, 2.0, 3.0, 4.0]),
            Column::numeric("b", vec![0.0, 1.0, 0.0, 1.0]),
        ];
        let y = Column::categorical_from_strings("class", &["p", "n", "p", "n"]);
        Dataset::new("num", cols, y).unwrap()
    }

    #[test]
    fn type_ratio_defaults_follow_the_absent_type() {
        // All numeric: numToCat divides by zero and defaults to d.
        let results = extract_simple(&all_numeric());
        let ntc = get(&results, "numToCat");
        assert!(ntc.exception.is_some());
        assert_eq!(apply_measure_default(ntc).unwrap().values, vec![2.0]);
        assert_eq!(get(&results, "catToNum").values, vec![0.0]);

        // All categorical: catToNum divides by zero and defaults to d.
        let cols = vec![
            Column::categorical_from_strings("a", &["x", "y", "x", "y"]),
            Column::categorical_from_strings("b", &["u", "u", "v", "v"]),
        ];
        let y = Column::categorical_from_strings("class", &["p", "n", "p", "n"]);
        let ds = Dataset::new("cat", cols, y).unwrap();
        let results = extract_simple(&ds);
        let ctn = get(&results, "catToNum");
        assert!(ctn.exception.is_some());
        assert_eq!(apply_measure_default(ctn).unwrap().values, vec![2.0]);
        assert_eq!(get(&results, "numToCat").values, vec![0.0]);
    }

    #[test]
    fn balanced_binary_class_frequencies() {
        let cols = vec![Column::numeric("a", (0..10).map(f64::from).collect())];
        let labels: Vec<&str> = (0..10).map(|i| if i < 5 { "p" } else { "n" }).collect();
        let y = Column::categorical_from_strings("class", &labels);
        let ds = Dataset::new("bal", cols, y).unwrap();
        let results = extract_simple(&ds);
        assert_eq!(get(&results, "freqClass").values, vec![0.5, 0.5]);
    }

    #[test]
    fn attribute_instance_ratios() {
        let cols: Vec<Column> = (0..4)
            .map(|j| Column::numeric(format!("a{j}"), (0..8).map(f64::from).collect()))
            .collect();
        let labels: Vec<&str> = (0..8).map(|i| if i % 2 == 0 { "p" } else { "n" }).collect();
        let y = Column::categorical_from_strings("class", &labels);
        let ds = Dataset::new("r", cols, y).unwrap();
        let results = extract_simple(&ds);
        assert_eq!(get(&results, "attrToInst").values, vec![0.5]);
        assert_eq!(get(&results, "instToAttr").values, vec![2.0]);
        let a = get(&results, "attrToInst").values[0];
        let i = get(&results, "instToAttr").values[0];
        assert!((a * i - 1.0).abs() < 1e-12);
    }

    #[test]
    fn binary_attribute_count_covers_both_kinds() {
        let cols = vec![
            Column::numeric("a", vec![0.0, 1.0, 0.0, 1.0]),
            Column::categorical_from_strings("b", &["x", "y", "x", "y"]),
            Column::numeric("c", vec![1.0, 2.0, 3.0, 4.0]),
        ];
        let y = Column::categorical_from_strings("class", &["p", "n", "p", "n"]);
        let ds = Dataset::new("bin", cols, y).unwrap();
        let results = extract_simple(&ds);
        assert_eq!(get(&results, "nrBin").values, vec![2.0]);
        let cat = get(&results, "nrCat").values[0];
        let num = get(&results, "nrNum").values[0];
        assert_eq!(cat + num, 3.0);
    }

    #[test]
    fn class_frequencies_sum_to_one() {
        let cols = vec![Column::numeric("a", (0..7).map(f64::from).collect())];
        let y = Column::categorical_from_strings("class", &["a", "b", "c", "a", "b", "a", "c"]);
        let ds = Dataset::new("t", cols, y).unwrap();
        let results = extract_simple(&ds);
        let freq = &get(&results, "freqClass").values;
        assert_eq!(freq.len(), 3);
        assert!((freq.iter().sum::<f64>() - 1.0).abs() < 1e-12);
        // First-appearance order: a (3/7), b (2/7), c (2/7).
        assert!((freq[0] - 3.0 / 7.0).abs() < 1e-12);
    }
}
