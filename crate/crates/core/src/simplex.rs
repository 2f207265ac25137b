//! Simplex-lattice and simplex-centroid base designs, and their projection
//! into component-amount designs by column deletion.

use std::collections::BTreeSet;

use crate::design::{Design, DesignPoint, PointKind, Ratio};
use crate::error::{Error, Result};
use crate::oofa::OofARun;

/// Parameters of a `{m, w}` simplex lattice.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct LatticeSpec {
    pub m: usize,
    pub w: usize,
}

impl LatticeSpec {
    pub fn new(m: usize, w: usize) -> Result<Self> {
        if m < 2 {
            return Err(Error::InvalidDimension(format!(
                "lattice needs m >= 2, got {m}"
            )));
        }
        if w < 1 {
            return Err(Error::InvalidDimension(format!(
                "lattice needs w >= 1, got {w}"
            )));
        }
        Ok(LatticeSpec { m, w })
    }

    /// `binom(m + w - 1, w)`.
    pub fn point_count(&self) -> usize {
        binomial(self.m + self.w - 1, self.w)
    }
}

pub(crate) fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1usize, |acc, i| acc * (n - i) / (i + 1))
}

/// All proportion vectors with entries in `{0, 1/w, ..., 1}` summing to 1.
///
/// Points are listed in descending lexicographic order of the numerators,
/// starting at the first vertex `(1, 0, ..., 0)`.
pub fn simplex_lattice(m: usize, w: usize) -> Result<Design> {
    let spec = LatticeSpec::new(m, w)?;
    let w_i64 = i64::try_from(w).map_err(|_| Error::InvalidDimension("w too large".into()))?;
    let mut counts = Vec::with_capacity(spec.point_count());
    let mut current = vec![0usize; m];
    compositions(w, 0, &mut current, &mut counts);
    let runs = counts
        .into_iter()
        .map(|c| {
            let values = c.iter().map(|&n| Ratio::new(n as i64, w_i64)).collect();
            DesignPoint::proportion(values).map(OofARun::base)
        })
        .collect::<Result<Vec<_>>>()?;
    Design::new(m, PointKind::Proportion, runs)
}

fn compositions(remaining: usize, pos: usize, current: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
    let last = current.len() - 1;
    if pos == last {
        current[pos] = remaining;
        out.push(current.clone());
        return;
    }
    for n in (0..=remaining).rev() {
        current[pos] = n;
        compositions(remaining - n, pos + 1, current, out);
    }
}

/// Centroids of every nonempty subset of the `m` vertices, ordered by subset
/// size and then lexicographically.
pub fn simplex_centroid(m: usize) -> Result<Design> {
    if m < 2 {
        return Err(Error::InvalidDimension(format!(
            "centroid design needs m >= 2, got {m}"
        )));
    }
    if m > 20 {
        return Err(Error::InvalidDimension(format!(
            "centroid design with m = {m} is too large"
        )));
    }
    let mut runs = Vec::with_capacity((1 << m) - 1);
    for size in 1..=m {
        let value = Ratio::new(1, size as i64);
        for subset in combinations(m, size) {
            let mut values = vec![Ratio::from_integer(0); m];
            for i in subset {
                values[i] = value;
            }
            runs.push(OofARun::base(DesignPoint::proportion(values)?));
        }
    }
    Design::new(m, PointKind::Proportion, runs)
}

/// `k`-subsets of `0..n` in lexicographic order.
fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        out.push(idx.clone());
        let Some(i) = (0..k).rev().find(|&i| idx[i] != i + n - k) else {
            return out;
        };
        idx[i] += 1;
        for j in i + 1..k {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

/// Deletes the columns in `drop` from a proportion base design. The kept
/// coordinates become component amounts, so each run's total amount is the
/// sum of what remains. Duplicate rows are kept.
pub fn project_columns(design: &Design, drop: &BTreeSet<usize>) -> Result<Design> {
    if design.kind() != PointKind::Proportion {
        return Err(Error::WrongKind {
            expected: "proportion",
        });
    }
    if design.is_expanded() {
        return Err(Error::AlreadyExpanded);
    }
    if design.has_amounts() {
        return Err(Error::AmountsAttached);
    }
    let m = design.m();
    if let Some(&index) = drop.iter().find(|&&i| i >= m) {
        return Err(Error::InvalidColumn { index, m });
    }
    if drop.len() >= m {
        return Err(Error::DropAllColumns { m });
    }
    let keep: Vec<usize> = (0..m).filter(|i| !drop.contains(i)).collect();
    let runs = design
        .runs()
        .iter()
        .map(|r| OofARun::base(r.point().select_as_amounts(&keep)))
        .collect();
    Design::new(keep.len(), PointKind::Amount, runs)
}
