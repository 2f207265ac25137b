use thiserror::Error;

use crate::design::Ratio;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("component {component} is negative ({value})")]
    NegativeEntry { component: usize, value: Ratio },
    #[error("proportions sum to {sum}, expected 1")]
    SumNotOne { sum: Ratio },
    #[error("total amount {total} exceeds maximum {max}")]
    TotalExceedsMax { total: Ratio, max: Ratio },
    #[error("operation requires a {expected} design point or design")]
    WrongKind { expected: &'static str },
    #[error("invalid dimension: {0}")]
    InvalidDimension(String),
    #[error("cannot drop every column of a {m}-component design")]
    DropAllColumns { m: usize },
    #[error("column index {index} out of range for {m} components")]
    InvalidColumn { index: usize, m: usize },
    #[error("ordering {ordering:?} is not a permutation of support {support:?}")]
    OrderingSupportMismatch {
        ordering: Vec<usize>,
        support: Vec<usize>,
    },
    #[error("pairwise-ordering signs are not induced by any order: {0}")]
    InconsistentPwo(String),
    #[error("design already carries orderings")]
    AlreadyExpanded,
    #[error("design already carries total amounts")]
    AmountsAttached,
    #[error("amount level list is empty")]
    EmptyLevels,
    #[error("amount level {0} listed twice")]
    DuplicateLevel(Ratio),
    #[error("amount level {0} is negative")]
    NegativeLevel(Ratio),
    #[error("scale factor {0} is not positive")]
    NonPositiveScale(Ratio),
    #[error("design runs disagree: {0}")]
    InconsistentDesign(String),
    #[error("reduction rule not supported: {0}")]
    UnsupportedReduction(String),
    #[error("design kind does not match model: {0}")]
    KindMismatch(String),
    #[error("model has pairwise-ordering terms but design has no orderings")]
    MissingPwo,
    #[error("model has amount terms but design runs carry no total amount")]
    MissingAmount,
    #[error("design matrix is rank deficient; involved columns: {}", labels.join(", "))]
    RankDeficient { labels: Vec<String> },
    #[error("information matrix is singular (rcond {rcond:.3e}); near-null columns: {}", labels.join(", "))]
    SingularInformation { rcond: f64, labels: Vec<String> },
    #[error("column {0} is constant")]
    ConstantColumn(String),
    #[error("no residual degrees of freedom (N = {n_runs}, p = {n_params})")]
    NoResidualDf { n_runs: usize, n_params: usize },
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("malformed header: {0}")]
    MalformedHeader(String),
    #[error("line {line}: expected {expected} fields, found {found}")]
    RowLengthMismatch {
        line: usize,
        expected: usize,
        found: usize,
    },
    #[error("line {line}: pairwise-ordering value {value:?} not in {{-1, 0, 1}}")]
    BadPwoValue { line: usize, value: String },
    #[error("line {line}: {reason}")]
    InconsistentPwoRow { line: usize, reason: String },
    #[error("line {line}: {reason}")]
    InvalidRow { line: usize, reason: String },
}

impl Error {
    /// Stable machine-readable name of the error variant.
    pub fn code(&self) -> &'static str {
        match self {
            Error::NegativeEntry { .. } => "NegativeEntry",
            Error::SumNotOne { .. } => "SumNotOne",
            Error::TotalExceedsMax { .. } => "TotalExceedsMax",
            Error::WrongKind { .. } => "WrongKind",
            Error::InvalidDimension(_) => "InvalidDimension",
            Error::DropAllColumns { .. } => "DropAllColumns",
            Error::InvalidColumn { .. } => "InvalidColumn",
            Error::OrderingSupportMismatch { .. } => "OrderingSupportMismatch",
            Error::InconsistentPwo(_) => "InconsistentPwo",
            Error::AlreadyExpanded => "AlreadyExpanded",
            Error::AmountsAttached => "AmountsAttached",
            Error::EmptyLevels => "EmptyLevels",
            Error::DuplicateLevel(_) => "DuplicateLevel",
            Error::NegativeLevel(_) => "NegativeLevel",
            Error::NonPositiveScale(_) => "NonPositiveScale",
            Error::InconsistentDesign(_) => "InconsistentDesign",
            Error::UnsupportedReduction(_) => "UnsupportedReduction",
            Error::KindMismatch(_) => "KindMismatch",
            Error::MissingPwo => "MissingPwo",
            Error::MissingAmount => "MissingAmount",
            Error::RankDeficient { .. } => "RankDeficient",
            Error::SingularInformation { .. } => "SingularInformation",
            Error::ConstantColumn(_) => "ConstantColumn",
            Error::NoResidualDf { .. } => "NoResidualDf",
            Error::InvalidArgument(_) => "InvalidArgument",
            Error::MalformedHeader(_) => "MalformedHeader",
            Error::RowLengthMismatch { .. } => "RowLengthMismatch",
            Error::BadPwoValue { .. } => "BadPwoValue",
            Error::InconsistentPwoRow { .. } => "InconsistentPwoRow",
            Error::InvalidRow { .. } => "InvalidRow",
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
