//! Summarization functions mapping variable-cardinality measure results to
//! fixed-cardinality meta-feature values, plus the default-substitution
//! policy for measures that raise exceptions.

use serde::{Deserialize, Serialize};

use crate::stats;

/// Why a measure (or one of its elements) could not be computed.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ExceptionKind {
    /// A ratio's denominator was zero (e.g. no numeric attributes).
    DivisionByZero,
    /// Log of a non-positive value (geometric mean).
    NonPositive,
    /// A constant attribute made the statistic undefined.
    ConstantAttribute,
    /// A covariance matrix could not be inverted / factorized.
    SingularMatrix,
    /// The dataset lacks the column type the measure group requires.
    DomainMissing,
    /// The active scenario excludes this measure.
    ScenarioExcluded,
    /// The induced tree degenerated to a single leaf.
    DegenerateTree,
    /// A class had fewer instances than requested folds; stratification
    /// is degraded but the fold count is kept.
    ClassTooSmall,
    /// The computation produced no values at all.
    EmptyResult,
}

/// Whole-measure exception. `default` carries the substitution value when
/// one is defined (populated at raise time because several defaults depend
/// on the dataset, e.g. `d` for the attribute-type ratios).
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Exception {
    pub kind: ExceptionKind,
    pub default: Option<f64>,
}

/// Exception on a single element of a multi-valued measure.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ElementFault {
    pub index: usize,
    pub kind: ExceptionKind,
    pub default: Option<f64>,
}

/// Raw output of one characterization measure: a named value vector of
/// dataset-dependent cardinality, possibly carrying exceptions. Elements
/// listed in `faults` hold NaN placeholders in `values`.
#[derive(Debug, Clone, PartialEq)]
pub struct MeasureResult {
    pub name: &'static str,
    pub values: Vec<f64>,
    pub exception: Option<Exception>,
    pub faults: Vec<ElementFault>,
}

impl MeasureResult {
    pub fn ok(name: &'static str, values: Vec<f64>) -> Self {
        MeasureResult {
            name,
            values,
            exception: None,
            faults: Vec::new(),
        }
    }

    pub fn single(name: &'static str, value: f64) -> Self {
        Self::ok(name, vec![value])
    }

    pub fn exception(name: &'static str, kind: ExceptionKind, default: Option<f64>) -> Self {
        MeasureResult {
            name,
            values: Vec::new(),
            exception: Some(Exception { kind, default }),
            faults: Vec::new(),
        }
    }

    pub fn with_faults(name: &'static str, values: Vec<f64>, faults: Vec<ElementFault>) -> Self {
        debug_assert!(faults.iter().all(|f| f.index < values.len()));
        MeasureResult {
            name,
            values,
            exception: None,
            faults,
        }
    }

    pub fn is_clean(&self) -> bool {
        self.exception.is_none() && self.faults.is_empty()
    }
}

/// Raised by [`apply_measure_default`] when no substitution exists; the
/// caller must emit a missing value instead.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct NoDefault;

/// Resolves exceptions using the suggested default values: whole-measure
/// exceptions become a single substituted value; element faults are
/// substituted where a default exists and dropped otherwise (the remaining
/// elements are retained).
pub fn apply_measure_default(result: &MeasureResult) -> Result<MeasureResult, NoDefault> {
    if let Some(exc) = &result.exception {
        return match exc.default {
            Some(v) => Ok(MeasureResult::ok(result.name, vec![v])),
            None => Err(NoDefault),
        };
    }
    if result.faults.is_empty() {
        return Ok(result.clone());
    }
    let mut values = result.values.clone();
    let mut drop = vec![false; values.len()];
    for fault in &result.faults {
        match fault.default {
            Some(v) => values[fault.index] = v,
            None => drop[fault.index] = true,
        }
    }
    let kept: Vec<f64> = values
        .into_iter()
        .enumerate()
        .filter(|(i, _)| !drop[*i])
        .map(|(_, v)| v)
        .collect();
    if kept.is_empty() {
        return Err(NoDefault);
    }
    Ok(MeasureResult::ok(result.name, kept))
}

/// The summarization functions of the engine.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub enum Summarizer {
    Mean,
    Sd,
    Min,
    Max,
    Median,
    Quartiles,
    IqRange,
    Range,
    Kurtosis,
    Skewness,
    Count,
    Histogram,
}

impl Summarizer {
    pub const ALL: [Summarizer; 12] = [
        Summarizer::Mean,
        Summarizer::Sd,
        Summarizer::Min,
        Summarizer::Max,
        Summarizer::Median,
        Summarizer::Quartiles,
        Summarizer::IqRange,
        Summarizer::Range,
        Summarizer::Kurtosis,
        Summarizer::Skewness,
        Summarizer::Count,
        Summarizer::Histogram,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            Summarizer::Mean => "mean",
            Summarizer::Sd => "sd",
            Summarizer::Min => "min",
            Summarizer::Max => "max",
            Summarizer::Median => "median",
            Summarizer::Quartiles => "quartiles",
            Summarizer::IqRange => "iqRange",
            Summarizer::Range => "range",
            Summarizer::Kurtosis => "kurtosis",
            Summarizer::Skewness => "skewness",
            Summarizer::Count => "count",
            Summarizer::Histogram => "histogram",
        }
    }
}

impl std::str::FromStr for Summarizer {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Summarizer::ALL
            .iter()
            .find(|f| f.name().eq_ignore_ascii_case(s))
            .copied()
            .ok_or_else(|| format!("unknown summarization function '{s}'"))
    }
}

impl std::fmt::Display for Summarizer {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.name())
    }
}

/// Ordered set of summarization functions applied to multi-valued measures.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SummarizerSpec {
    pub functions: Vec<Summarizer>,
    pub histogram_bins: usize,
}

impl Default for SummarizerSpec {
    fn default() -> Self {
        SummarizerSpec {
            functions: vec![
                Summarizer::Mean,
                Summarizer::Sd,
                Summarizer::Min,
                Summarizer::Max,
                Summarizer::Median,
                Summarizer::Kurtosis,
                Summarizer::Skewness,
                Summarizer::Histogram,
            ],
            histogram_bins: 10,
        }
    }
}

impl SummarizerSpec {
    pub fn new(functions: Vec<Summarizer>, histogram_bins: usize) -> Self {
        assert!(!functions.is_empty(), "summarizer list must be non-empty");
        assert!(histogram_bins >= 2, "histogram needs at least 2 bins");
        SummarizerSpec {
            functions,
            histogram_bins,
        }
    }

    /// Output keys for a measure under this spec, in emission order.
    pub fn keys(&self, measure: &str) -> Vec<String> {
        let mut keys = Vec::new();
        for f in &self.functions {
            match f {
                Summarizer::Quartiles => {
                    for i in 0..5 {
                        keys.push(format!("{measure}.quartiles.{i}"));
                    }
                }
                Summarizer::Histogram => {
                    for i in 0..self.histogram_bins {
                        keys.push(format!("{measure}.histogram.{i}"));
                    }
                }
                other => keys.push(format!("{measure}.{}", other.name())),
            }
        }
        keys
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SummarizeError {
    /// k' = 0 without an exception tag: an upstream bug, not a data issue.
    EmptyInput,
}

/// Applies every function in the spec to the measure values. Keys follow
/// `<measure>.<function>[.<index>]`. Summarizer-level exceptions (sd of a
/// single value, kurtosis/skewness of a constant vector) substitute 0.
pub fn summarize(
    result: &MeasureResult,
    spec: &SummarizerSpec,
) -> Result<Vec<(String, f64)>, SummarizeError> {
    if result.values.is_empty() {
        return Err(SummarizeError::EmptyInput);
    }
    Ok(spec
        .keys(result.name)
        .into_iter()
        .zip(summarize_values(&result.values, spec))
        .collect())
}

/// The value side of [`summarize`], aligned with [`SummarizerSpec::keys`].
pub fn summarize_values(values: &[f64], spec: &SummarizerSpec) -> Vec<f64> {
    let s = stats::sorted(values);
    let mut out = Vec::new();
    for f in &spec.functions {
        match f {
            Summarizer::Mean => out.push(stats::mean(values)),
            Summarizer::Sd => out.push(if values.len() < 2 {
                0.0
            } else {
                stats::sample_sd(values)
            }),
            Summarizer::Min => out.push(s[0]),
            Summarizer::Max => out.push(s[s.len() - 1]),
            Summarizer::Median => out.push(stats::median(values)),
            Summarizer::Quartiles => {
                for p in [0.0, 0.25, 0.5, 0.75, 1.0] {
                    out.push(stats::quantile_sorted(&s, p));
                }
            }
            Summarizer::IqRange => {
                out.push(stats::quantile_sorted(&s, 0.75) - stats::quantile_sorted(&s, 0.25))
            }
            Summarizer::Range => out.push(s[s.len() - 1] - s[0]),
            Summarizer::Kurtosis => out.push(stats::kurtosis(values).unwrap_or(0.0)),
            Summarizer::Skewness => out.push(stats::skewness(values).unwrap_or(0.0)),
            Summarizer::Count => out.push(values.len() as f64),
            Summarizer::Histogram => out.extend(histogram(&s, spec.histogram_bins)),
        }
    }
    out
}

/// Proportions over equal-width bins spanning [min, max]. A constant
/// vector puts all mass in the first bin.
fn histogram(sorted: &[f64], bins: usize) -> Vec<f64> {
    let n = sorted.len() as f64;
    let min = sorted[0];
    let max = sorted[sorted.len() - 1];
    let mut counts = vec![0usize; bins];
    if max > min {
        let width = (max - min) / bins as f64;
        for &v in sorted {
            let idx = (((v - min) / width) as usize).min(bins - 1);
            counts[idx] += 1;
        }
    } else {
        counts[0] = sorted.len();
    }
    counts.into_iter().map(|c| c as f64 / n).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn spec_of(fns: &[Summarizer]) -> SummarizerSpec {
        SummarizerSpec::new(fns.to_vec(), 10)
    }

    fn summarize_one(values: &[f64], f: Summarizer) -> f64 {
        summarize_values(values, &spec_of(&[f]))[0]
    }

    #[test]
    fn mean_of_small_vector() {
        assert_eq!(summarize_one(&[1.0, 2.0, 3.0], Summarizer::Mean), 2.0);
    }

    #[test]
    fn uniform_histogram() {
        let values: Vec<f64> = (0..10).map(|v| v as f64).collect();
        let spec = SummarizerSpec::new(vec![Summarizer::Histogram], 10);
        let out = summarize_values(&values, &spec);
        assert_eq!(out.len(), 10);
        for v in out {
            assert!((v - 0.1).abs() < 1e-12);
        }
    }

    #[test]
    fn constant_vector_skewness_defaults_to_zero() {
        assert_eq!(summarize_one(&[4.0, 4.0, 4.0], Summarizer::Skewness), 0.0);
        assert_eq!(summarize_one(&[4.0, 4.0, 4.0], Summarizer::Kurtosis), 0.0);
        assert_eq!(summarize_one(&[4.0], Summarizer::Sd), 0.0);
    }

    #[test]
    fn quartiles_type7_by_hand() {
        let spec = spec_of(&[Summarizer::Quartiles]);
        let out = summarize_values(&[1.0, 2.0, 3.0, 4.0], &spec);
        assert_eq!(out, vec![1.0, 1.75, 2.5, 3.25, 4.0]);
    }

    #[test]
    fn keys_align_with_values() {
        let spec = SummarizerSpec::new(
            vec![Summarizer::Mean, Summarizer::Quartiles, Summarizer::Histogram],
            4,
        );
        let result = MeasureResult::ok("m", vec![1.0, 2.0]);
        let pairs = summarize(&result, &spec).unwrap();
        let keys: Vec<&str> = pairs.iter().map(|(k, _)| k.as_str()).collect();
        assert_eq!(
            keys,
            vec![
                "m.mean",
                "m.quartiles.0",
                "m.quartiles.1",
                "m.quartiles.2",
                "m.quartiles.3",
                "m.quartiles.4",
                "m.histogram.0",
                "m.histogram.1",
                "m.histogram.2",
                "m.histogram.3",
            ]
        );
    }

    #[test]
    fn empty_input_is_an_error() {
        let result = MeasureResult::ok("m", vec![]);
        assert_eq!(
            summarize(&result, &SummarizerSpec::default()),
            Err(SummarizeError::EmptyInput)
        );
    }

    #[test]
    fn whole_measure_default_substitution() {
        let result = MeasureResult::exception("sdRatio", ExceptionKind::SingularMatrix, Some(-1.0));
        let fixed = apply_measure_default(&result).unwrap();
        assert_eq!(fixed.values, vec![-1.0]);

        let missing = MeasureResult::exception("nsRatio", ExceptionKind::DivisionByZero, None);
        assert_eq!(apply_measure_default(&missing), Err(NoDefault));
    }

    #[test]
    fn element_defaults_substitute_and_drop() {
        // gMean-style: one failing element replaced by the attribute mean.
        let result = MeasureResult::with_faults(
            "gMean",
            vec![2.0, f64::NAN, 5.0],
            vec![ElementFault {
                index: 1,
                kind: ExceptionKind::NonPositive,
                default: Some(3.5),
            }],
        );
        let fixed = apply_measure_default(&result).unwrap();
        assert_eq!(fixed.values, vec![2.0, 3.5, 5.0]);

        // No default: the element is dropped, others retained.
        let result = MeasureResult::with_faults(
            "hMean",
            vec![2.0, f64::NAN],
            vec![ElementFault {
                index: 1,
                kind: ExceptionKind::DivisionByZero,
                default: None,
            }],
        );
        let fixed = apply_measure_default(&result).unwrap();
        assert_eq!(fixed.values, vec![2.0]);
    }

    #[test]
    fn kurtosis_element_default_is_zero() {
        let result = MeasureResult::with_faults(
            "kurtosis",
            vec![f64::NAN, 1.2],
            vec![ElementFault {
                index: 0,
                kind: ExceptionKind::ConstantAttribute,
                default: Some(0.0),
            }],
        );
        let fixed = apply_measure_default(&result).unwrap();
        assert_eq!(fixed.values, vec![0.0, 1.2]);
    }

    proptest! {
        #[test]
        fn singleton_summaries_equal_value(v in -1e9f64..1e9) {
            for f in [Summarizer::Mean, Summarizer::Median, Summarizer::Min, Summarizer::Max] {
                prop_assert_eq!(summarize_one(&[v], f), v);
            }
        }

        #[test]
        fn quartiles_are_ordered(values in prop::collection::vec(-1e6f64..1e6, 1..60)) {
            let out = summarize_values(&values, &spec_of(&[Summarizer::Quartiles]));
            for w in out.windows(2) {
                prop_assert!(w[0] <= w[1] + 1e-12);
            }
        }

        #[test]
        fn histogram_sums_to_one(values in prop::collection::vec(-1e6f64..1e6, 1..80), bins in 2usize..12) {
            let spec = SummarizerSpec::new(vec![Summarizer::Histogram], bins);
            let out = summarize_values(&values, &spec);
            prop_assert_eq!(out.len(), bins);
            let total: f64 = out.iter().sum();
            prop_assert!((total - 1.0).abs() < 1e-12);
            prop_assert!(out.iter().all(|&p| p >= 0.0));
        }
    }

    #[test]
    fn moments_of_seeded_normal_sample() {
        use rand::SeedableRng;
        use rand_distr::Distribution;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        let normal = rand_distr::StandardNormal;
        let sample: Vec<f64> = (0..10_000).map(|_| normal.sample(&mut rng)).collect();
        let kurt = summarize_one(&sample, Summarizer::Kurtosis);
        let skew = summarize_one(&sample, Summarizer::Skewness);
        assert!(kurt.abs() < 0.3, "kurtosis {kurt}");
        assert!(skew.abs() < 0.15, "skewness {skew}");
    }
}
