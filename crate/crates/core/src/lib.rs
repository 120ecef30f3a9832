//! Meta-feature extraction for tabular classification datasets.
//!
//! A meta-feature is the composition of a characterization measure, which
//! maps a dataset to a value vector of dataset-dependent cardinality, and a
//! summarization function that normalizes the cardinality so results from
//! different datasets can live in one meta-base. This crate provides the
//! dataset model and transformations, five measure groups (simple,
//! statistical, information-theoretic, model-based and landmarking), the
//! summarization layer with exception defaults, and an extraction engine
//! wiring them together under the supported characterization scenarios.

pub mod dataset;
pub mod engine;
pub mod error;
pub mod io;
pub mod measures;
pub mod stats;
pub mod summarize;
pub mod synth;
pub mod transform;

pub use dataset::{Column, ColumnData, ColumnKind, Dataset};
pub use engine::{ExtractionConfig, MetaFeatureRecord, Scenario};
pub use error::DataError;
pub use summarize::{MeasureResult, Summarizer, SummarizerSpec};
