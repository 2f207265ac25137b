//! The worked designs: a {3,3} lattice expanded by addition order, a
//! projected four-component centroid, its crossing with three hormone
//! doses, and its 500 mg rescaling.

use std::collections::BTreeSet;

use crate::design::{Design, Ratio};
use crate::error::Result;
use crate::oofa::{cross_amounts, oofa_expand, scale_amounts};
use crate::simplex::{project_columns, simplex_centroid, simplex_lattice};

/// `{3,3}` simplex lattice with every addition order: 21 runs.
pub fn lattice_3_3() -> Result<Design> {
    oofa_expand(&simplex_lattice(3, 3)?)
}

/// Four-component centroid with the last column deleted, expanded: 31 runs
/// at totals `0, 1/2, 2/3, 3/4, 1`.
pub fn projected_centroid() -> Result<Design> {
    let drop = BTreeSet::from([3]);
    oofa_expand(&project_columns(&simplex_centroid(4)?, &drop)?)
}

/// Total doses of the hormone example (units of `1e-4` micrograms).
pub fn hormone_levels() -> [Ratio; 3] {
    [Ratio::new(3, 4), Ratio::new(3, 2), Ratio::from_integer(3)]
}

/// The expanded lattice crossed with the three doses: 63 runs.
pub fn hormone_design() -> Result<Design> {
    cross_amounts(&lattice_3_3()?, &hormone_levels())
}

/// Maximum tablet weight in mg.
pub const TABLET_MAX_MG: i64 = 500;

/// The projected centroid rescaled to a 500 mg maximum.
pub fn tablet_design() -> Result<Design> {
    scale_amounts(&projected_centroid()?, Ratio::from_integer(TABLET_MAX_MG))
}
