//! Order-of-addition machinery: addition orders, pairwise-ordering (PWO)
//! sign vectors with zero masking, and the design transformations that
//! attach them.
//!
//! A PWO vector holds one entry per unordered pair `(j, k)`, `j < k`, in
//! lexicographic pair order. The entry is `+1` when `j` is added before
//! `k`, `-1` when after, and `0` when either component is absent from the
//! blend.

use std::collections::BTreeSet;
use std::fmt;

use num_traits::{Signed, Zero};

use crate::design::{Design, DesignPoint, PointKind, Ratio, Support};
use crate::error::{Error, Result};

/// Number of unordered component pairs for `m` components.
pub fn pair_count(m: usize) -> usize {
    m * m.saturating_sub(1) / 2
}

/// Position of pair `(j, k)` with `j < k < m` in lexicographic pair order.
pub fn pair_index(j: usize, k: usize, m: usize) -> usize {
    debug_assert!(j < k && k < m);
    j * (2 * m - j - 1) / 2 + (k - j - 1)
}

/// All pairs `(j, k)`, `j < k < m`, in lexicographic order.
pub fn pairs(m: usize) -> Vec<(usize, usize)> {
    (0..m)
        .flat_map(|j| (j + 1..m).map(move |k| (j, k)))
        .collect()
}

/// Addition order of a run's active components.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Ordering(Vec<usize>);

impl Ordering {
    pub fn new(sequence: Vec<usize>) -> Self {
        Ordering(sequence)
    }

    pub fn sequence(&self) -> &[usize] {
        &self.0
    }
}

impl fmt::Display for Ordering {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{}", c + 1)?;
        }
        f.write_str(")")
    }
}

/// Zero-masked pairwise-ordering signs.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PwoVector(Vec<i8>);

impl PwoVector {
    /// Wraps raw signs; callers are responsible for consistency.
    pub fn from_signs(signs: Vec<i8>) -> Self {
        PwoVector(signs)
    }

    pub fn signs(&self) -> &[i8] {
        &self.0
    }

    /// Sign for the ordered pair `(j, k)`; `z_kj = -z_jk`.
    pub fn get(&self, j: usize, k: usize, m: usize) -> i8 {
        match j.cmp(&k) {
            std::cmp::Ordering::Less => self.0[pair_index(j, k, m)],
            std::cmp::Ordering::Greater => -self.0[pair_index(k, j, m)],
            std::cmp::Ordering::Equal => 0,
        }
    }
}

/// One row of an order-of-addition design.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct OofARun {
    point: DesignPoint,
    ordering: Option<Ordering>,
    pwo: Option<PwoVector>,
    amount: Option<Ratio>,
}

impl OofARun {
    /// A run without ordering. Amount points carry their own total.
    pub fn base(point: DesignPoint) -> Self {
        let amount = match point.kind() {
            PointKind::Amount => Some(point.sum()),
            PointKind::Proportion => None,
        };
        OofARun {
            point,
            ordering: None,
            pwo: None,
            amount,
        }
    }

    /// A run with an addition order; the PWO vector is derived from it.
    pub fn ordered(point: DesignPoint, ordering: Ordering, amount: Option<Ratio>) -> Result<Self> {
        let pwo = pwo_from_ordering(&point, &ordering)?;
        let amount = match point.kind() {
            PointKind::Amount => Some(point.sum()),
            PointKind::Proportion => amount,
        };
        Ok(OofARun {
            point,
            ordering: Some(ordering),
            pwo: Some(pwo),
            amount,
        })
    }

    pub fn point(&self) -> &DesignPoint {
        &self.point
    }

    pub fn ordering(&self) -> Option<&Ordering> {
        self.ordering.as_ref()
    }

    pub fn pwo(&self) -> Option<&PwoVector> {
        self.pwo.as_ref()
    }

    /// Total amount `A`: the coordinate sum for amount runs, the attached
    /// level for crossed proportion runs.
    pub fn amount(&self) -> Option<Ratio> {
        self.amount
    }

    pub(crate) fn with_amount(&self, amount: Ratio) -> Self {
        OofARun {
            amount: Some(amount),
            ..self.clone()
        }
    }

    fn scaled(&self, factor: Ratio) -> Self {
        let point = self.point.scaled(factor);
        let amount = Some(point.sum());
        OofARun {
            point,
            ordering: self.ordering.clone(),
            pwo: self.pwo.clone(),
            amount,
        }
    }
}

/// PWO signs induced by addition order `ordering` on `point`'s support.
pub fn pwo_from_ordering(point: &DesignPoint, ordering: &Ordering) -> Result<PwoVector> {
    let m = point.m();
    let support = point.support();
    let mut position = vec![None; m];
    let mismatch = || Error::OrderingSupportMismatch {
        ordering: ordering.0.clone(),
        support: support.indices().to_vec(),
    };
    if ordering.0.len() != support.len() {
        return Err(mismatch());
    }
    for (pos, &c) in ordering.0.iter().enumerate() {
        if c >= m || !support.contains(c) || position[c].is_some() {
            return Err(mismatch());
        }
        position[c] = Some(pos);
    }
    let signs = pairs(m)
        .into_iter()
        .map(|(j, k)| match (position[j], position[k]) {
            (Some(pj), Some(pk)) if pj < pk => 1,
            (Some(_), Some(_)) => -1,
            _ => 0,
        })
        .collect();
    Ok(PwoVector(signs))
}

/// Recovers the unique addition order of `support` that induces `pwo`.
pub fn ordering_from_pwo(support: &Support, m: usize, pwo: &PwoVector) -> Result<Ordering> {
    if pwo.0.len() != pair_count(m) {
        return Err(Error::InconsistentPwo(format!(
            "expected {} signs for {m} components, found {}",
            pair_count(m),
            pwo.0.len()
        )));
    }
    for (j, k) in pairs(m) {
        let active = support.contains(j) && support.contains(k);
        let z = pwo.0[pair_index(j, k, m)];
        let ok = if active { z == 1 || z == -1 } else { z == 0 };
        if !ok {
            return Err(Error::InconsistentPwo(format!(
                "z{}{} = {z} with {} support",
                j + 1,
                k + 1,
                if active { "full" } else { "masked" }
            )));
        }
    }
    // A component preceding r others sits r places from the end.
    let s = support.len();
    let mut sequence = vec![usize::MAX; s];
    for &c in support.indices() {
        let precedes = support
            .indices()
            .iter()
            .filter(|&&o| o != c && pwo.get(c, o, m) == 1)
            .count();
        let slot = s - 1 - precedes;
        if sequence[slot] != usize::MAX {
            return Err(Error::InconsistentPwo(format!(
                "cyclic sign pattern {:?}",
                pwo.0
            )));
        }
        sequence[slot] = c;
    }
    Ok(Ordering(sequence))
}

/// All permutations of `items` in lexicographic order.
pub(crate) fn permutations(items: &[usize]) -> Vec<Vec<usize>> {
    let mut current: Vec<usize> = items.to_vec();
    current.sort_unstable();
    let mut out = vec![current.clone()];
    // Standard next-permutation walk.
    loop {
        let n = current.len();
        let Some(i) = (1..n).rev().find(|&i| current[i - 1] < current[i]) else {
            break;
        };
        let j = (i..n).rev().find(|&j| current[j] > current[i - 1]).unwrap();
        current.swap(i - 1, j);
        current[i..].reverse();
        out.push(current.clone());
    }
    out
}

/// Replaces each base run with support size `s` by `s!` runs, one per
/// addition order of its support, in lexicographic permutation order.
pub fn oofa_expand(design: &Design) -> Result<Design> {
    if design.is_expanded() {
        return Err(Error::AlreadyExpanded);
    }
    let mut runs = Vec::new();
    for run in design.runs() {
        let support = run.point().support();
        for seq in permutations(support.indices()) {
            runs.push(OofARun::ordered(
                run.point().clone(),
                Ordering(seq),
                run.amount(),
            )?);
        }
    }
    Design::new(design.m(), design.kind(), runs)
}

/// Full crossing of a proportion design with total-amount levels. Runs are
/// emitted level by level, in the given level order.
pub fn cross_amounts(design: &Design, levels: &[Ratio]) -> Result<Design> {
    if design.kind() != PointKind::Proportion {
        return Err(Error::WrongKind {
            expected: "proportion",
        });
    }
    if design.has_amounts() {
        return Err(Error::AmountsAttached);
    }
    if levels.is_empty() {
        return Err(Error::EmptyLevels);
    }
    let mut seen = BTreeSet::new();
    for &level in levels {
        if level.is_negative() {
            return Err(Error::NegativeLevel(level));
        }
        if !seen.insert(level) {
            return Err(Error::DuplicateLevel(level));
        }
    }
    let runs = levels
        .iter()
        .flat_map(|&level| design.runs().iter().map(move |r| r.with_amount(level)))
        .collect();
    Design::new(design.m(), PointKind::Proportion, runs)
}

/// Multiplies every amount coordinate and total of a unit-scale amount
/// design by `a_max`. Orderings and PWO signs are unchanged.
pub fn scale_amounts(design: &Design, a_max: Ratio) -> Result<Design> {
    if design.kind() != PointKind::Amount {
        return Err(Error::WrongKind { expected: "amount" });
    }
    if a_max <= Ratio::zero() {
        return Err(Error::NonPositiveScale(a_max));
    }
    let one = Ratio::from_integer(1);
    if let Some(&top) = design.amount_levels().last() {
        if top > one {
            return Err(Error::TotalExceedsMax {
                total: top,
                max: one,
            });
        }
    }
    let runs = design.runs().iter().map(|r| r.scaled(a_max)).collect();
    Design::new(design.m(), PointKind::Amount, runs)
}
