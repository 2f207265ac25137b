//! Exact-rational design points and design containers.
//!
//! Every coordinate is stored as a reduced fraction; conversion to `f64`
//! happens only when a model matrix is materialized for evaluation.
//! Component indices are 0-based in the library API and 1-based in labels
//! and files.

use std::collections::BTreeSet;
use std::fmt;

use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::oofa::OofARun;

/// Exact rational number, always kept in lowest terms with a positive denominator.
pub type Ratio = num_rational::Rational64;

/// Whether the coordinates of a point are mixture proportions or component amounts.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum PointKind {
    Proportion,
    Amount,
}

impl PointKind {
    pub fn name(self) -> &'static str {
        match self {
            PointKind::Proportion => "proportion",
            PointKind::Amount => "amount",
        }
    }

    /// Column prefix used in labels and design files (`x` or `a`).
    pub fn prefix(self) -> char {
        match self {
            PointKind::Proportion => 'x',
            PointKind::Amount => 'a',
        }
    }
}

impl fmt::Display for PointKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Sorted set of components with a nonzero value.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Support(Vec<usize>);

impl Support {
    pub fn indices(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, component: usize) -> bool {
        self.0.binary_search(&component).is_ok()
    }
}

impl From<Vec<usize>> for Support {
    fn from(mut components: Vec<usize>) -> Self {
        components.sort_unstable();
        components.dedup();
        Support(components)
    }
}

/// A point of the simplex (proportions) or of the amount region below it.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct DesignPoint {
    values: Vec<Ratio>,
    kind: PointKind,
}

impl DesignPoint {
    /// Builds a validated point. Amount points are not capped here; use
    /// [`validate_point`] with a maximum for that.
    pub fn new(values: Vec<Ratio>, kind: PointKind) -> Result<Self> {
        let point = DesignPoint { values, kind };
        validate_point(&point, None)?;
        Ok(point)
    }

    pub fn proportion(values: Vec<Ratio>) -> Result<Self> {
        Self::new(values, PointKind::Proportion)
    }

    pub fn amount(values: Vec<Ratio>) -> Result<Self> {
        Self::new(values, PointKind::Amount)
    }

    pub fn values(&self) -> &[Ratio] {
        &self.values
    }

    pub fn kind(&self) -> PointKind {
        self.kind
    }

    /// Number of components.
    pub fn m(&self) -> usize {
        self.values.len()
    }

    pub fn support(&self) -> Support {
        Support(
            self.values
                .iter()
                .enumerate()
                .filter(|(_, v)| !v.is_zero())
                .map(|(i, _)| i)
                .collect(),
        )
    }

    /// Exact coordinate sum, regardless of kind.
    pub fn sum(&self) -> Ratio {
        self.values.iter().copied().sum()
    }

    /// Amount image of this point: every coordinate multiplied by `factor`.
    pub fn scaled(&self, factor: Ratio) -> DesignPoint {
        DesignPoint {
            values: self.values.iter().map(|v| v * factor).collect(),
            kind: PointKind::Amount,
        }
    }

    /// Keeps only the listed coordinates (in the given order) and reinterprets
    /// them as amounts.
    pub(crate) fn select_as_amounts(&self, keep: &[usize]) -> DesignPoint {
        DesignPoint {
            values: keep.iter().map(|&i| self.values[i]).collect(),
            kind: PointKind::Amount,
        }
    }
}

/// Checks the mixture constraints for `point`. `a_max` additionally caps the
/// total of an amount point.
pub fn validate_point(point: &DesignPoint, a_max: Option<Ratio>) -> Result<()> {
    if point.values.is_empty() {
        return Err(Error::InvalidDimension("point has no components".into()));
    }
    if let Some((component, value)) = point
        .values
        .iter()
        .enumerate()
        .find(|(_, v)| v.is_negative())
    {
        return Err(Error::NegativeEntry {
            component,
            value: *value,
        });
    }
    let sum = point.sum();
    match point.kind {
        PointKind::Proportion => {
            if sum != Ratio::from_integer(1) {
                return Err(Error::SumNotOne { sum });
            }
        }
        PointKind::Amount => {
            if let Some(max) = a_max {
                if sum > max {
                    return Err(Error::TotalExceedsMax { total: sum, max });
                }
            }
        }
    }
    Ok(())
}

/// Total amount `A` of an amount point.
pub fn total_amount(point: &DesignPoint) -> Result<Ratio> {
    match point.kind {
        PointKind::Amount => Ok(point.sum()),
        PointKind::Proportion => Err(Error::WrongKind { expected: "amount" }),
    }
}

/// Ordered collection of runs sharing one component count and kind.
#[derive(Debug, Clone, PartialEq)]
pub struct Design {
    m: usize,
    kind: PointKind,
    runs: Vec<OofARun>,
    amount_levels: Vec<Ratio>,
}

impl Design {
    /// Assembles a design, checking that all runs agree on dimension, kind,
    /// and on whether orderings and totals are attached.
    pub fn new(m: usize, kind: PointKind, runs: Vec<OofARun>) -> Result<Self> {
        if m == 0 {
            return Err(Error::InvalidDimension("m must be at least 1".into()));
        }
        let expanded = runs.first().map(|r| r.ordering().is_some());
        let with_amount = runs.first().map(|r| r.amount().is_some());
        for (i, run) in runs.iter().enumerate() {
            if run.point().m() != m {
                return Err(Error::InconsistentDesign(format!(
                    "run {} has {} components, expected {m}",
                    i + 1,
                    run.point().m()
                )));
            }
            if run.point().kind() != kind {
                return Err(Error::InconsistentDesign(format!(
                    "run {} is a {} point in a {kind} design",
                    i + 1,
                    run.point().kind()
                )));
            }
            if Some(run.ordering().is_some()) != expanded {
                return Err(Error::InconsistentDesign(
                    "some runs carry orderings and some do not".into(),
                ));
            }
            if Some(run.amount().is_some()) != with_amount {
                return Err(Error::InconsistentDesign(
                    "some runs carry a total amount and some do not".into(),
                ));
            }
        }
        let levels: BTreeSet<Ratio> = runs.iter().filter_map(|r| r.amount()).collect();
        Ok(Design {
            m,
            kind,
            runs,
            amount_levels: levels.into_iter().collect(),
        })
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn kind(&self) -> PointKind {
        self.kind
    }

    pub fn runs(&self) -> &[OofARun] {
        &self.runs
    }

    /// Run count N.
    pub fn len(&self) -> usize {
        self.runs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.runs.is_empty()
    }

    /// Sorted distinct totals carried by the runs (empty if none attached).
    pub fn amount_levels(&self) -> &[Ratio] {
        &self.amount_levels
    }

    pub fn is_expanded(&self) -> bool {
        self.runs.first().is_some_and(|r| r.ordering().is_some())
    }

    pub fn has_amounts(&self) -> bool {
        !self.amount_levels.is_empty()
    }

    /// Same runs with exact duplicate rows removed (first occurrence kept).
    pub fn deduplicated(&self) -> Design {
        let mut seen = std::collections::HashSet::new();
        let runs = self
            .runs
            .iter()
            .filter(|r| seen.insert((*r).clone()))
            .cloned()
            .collect();
        Design::new(self.m, self.kind, runs).expect("subset of a valid design")
    }
}
