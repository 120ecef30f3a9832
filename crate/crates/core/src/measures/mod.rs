//! The five measure groups and their catalog.

pub mod infotheo;
pub mod landmarking;
pub mod model;
pub mod simple;
pub mod statistical;

use serde::{Deserialize, Serialize};

/// Measure groups, in the fixed extraction (and reporting) order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Group {
    Simple,
    Statistical,
    Infotheo,
    Model,
    Landmarking,
}

impl Group {
    pub const ALL: [Group; 5] = [
        Group::Simple,
        Group::Statistical,
        Group::Infotheo,
        Group::Model,
        Group::Landmarking,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            Group::Simple => "simple",
            Group::Statistical => "statistical",
            Group::Infotheo => "infotheo",
            Group::Model => "model",
            Group::Landmarking => "landmarking",
        }
    }
}

impl std::str::FromStr for Group {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Group::ALL
            .iter()
            .find(|g| g.name().eq_ignore_ascii_case(s))
            .copied()
            .ok_or_else(|| format!("unknown measure group '{s}'"))
    }
}

impl std::fmt::Display for Group {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.name())
    }
}

/// Whether a measure always yields one value (identity summarization) or a
/// dataset-dependent vector (summarized).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Cardinality {
    Single,
    Multi,
}

/// Catalog entry for one measure.
#[derive(Debug, Clone, Copy)]
pub struct MeasureInfo {
    pub name: &'static str,
    pub cardinality: Cardinality,
    /// Whether the by-class scenario recomputes the measure per class
    /// (true for the non-discriminant statistical measures only).
    pub by_class: bool,
}

const fn single(name: &'static str) -> MeasureInfo {
    MeasureInfo {
        name,
        cardinality: Cardinality::Single,
        by_class: false,
    }
}

const fn multi(name: &'static str) -> MeasureInfo {
    MeasureInfo {
        name,
        cardinality: Cardinality::Multi,
        by_class: false,
    }
}

const fn by_class(mut info: MeasureInfo) -> MeasureInfo {
    info.by_class = true;
    info
}

pub const SIMPLE_MEASURES: &[MeasureInfo] = &[
    single("attrToInst"),
    single("catToNum"),
    multi("freqClass"),
    single("instToAttr"),
    single("nrAttr"),
    single("nrBin"),
    single("nrCat"),
    single("nrClass"),
    single("nrInst"),
    single("nrNum"),
    single("numToCat"),
];

pub const STATISTICAL_MEASURES: &[MeasureInfo] = &[
    multi("canCor"),
    single("gravity"),
    by_class(multi("cor")),
    by_class(multi("cov")),
    single("nrDisc"),
    multi("eigenvalues"),
    by_class(multi("gMean")),
    by_class(multi("hMean")),
    by_class(multi("iqRange")),
    by_class(multi("kurtosis")),
    by_class(multi("mad")),
    by_class(multi("max")),
    by_class(multi("mean")),
    by_class(multi("median")),
    by_class(multi("min")),
    by_class(single("nrCorAttr")),
    by_class(single("nrNorm")),
    by_class(single("nrOutliers")),
    by_class(multi("range")),
    by_class(multi("sd")),
    single("sdRatio"),
    by_class(multi("skewness")),
    by_class(multi("sparsity")),
    by_class(multi("tMean")),
    by_class(multi("var")),
    single("wLambda"),
];

/// Rescaled variants of the distribution counts, emitted only on request.
pub const STATISTICAL_PROP_MEASURES: &[MeasureInfo] =
    &[by_class(single("propNorm")), by_class(single("propOutliers"))];

pub const INFOTHEO_MEASURES: &[MeasureInfo] = &[
    multi("attrConc"),
    multi("attrEnt"),
    multi("classConc"),
    single("classEnt"),
    single("eqNumAttr"),
    multi("jointEnt"),
    multi("mutInf"),
    single("nsRatio"),
];

pub const MODEL_MEASURES: &[MeasureInfo] = &[
    single("leaves"),
    multi("leavesBranch"),
    multi("leavesCorrob"),
    multi("leavesHomo"),
    multi("leavesPerClass"),
    single("nodes"),
    single("nodesPerAttr"),
    single("nodesPerInst"),
    multi("nodesPerLevel"),
    multi("nodesRepeated"),
    multi("treeDepth"),
    multi("treeImbalance"),
    multi("treeShape"),
    multi("varImportance"),
];

pub const LANDMARKING_MEASURES: &[MeasureInfo] = &[
    multi("bestNode"),
    multi("eliteNN"),
    multi("linearDiscr"),
    multi("naiveBayes"),
    multi("oneNN"),
    multi("randomNode"),
    multi("worstNode"),
];

/// Catalog for a group. `include_props` appends the propNorm/propOutliers
/// variants to the statistical group.
pub fn catalog(group: Group, include_props: bool) -> Vec<MeasureInfo> {
    let base: &[MeasureInfo] = match group {
        Group::Simple => SIMPLE_MEASURES,
        Group::Statistical => STATISTICAL_MEASURES,
        Group::Infotheo => INFOTHEO_MEASURES,
        Group::Model => MODEL_MEASURES,
        Group::Landmarking => LANDMARKING_MEASURES,
    };
    let mut out = base.to_vec();
    if group == Group::Statistical && include_props {
        out.extend_from_slice(STATISTICAL_PROP_MEASURES);
    }
    out
}
