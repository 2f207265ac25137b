//! The constructed designs exactly as printed, row by row.

use super::PrintedRows;

/// `{3,3}` lattice with PWO columns.
pub fn table1() -> PrintedRows {
    vec![
        vec!["1", "0", "0", "0", "0", "0"],
        vec!["0", "1", "0", "0", "0", "0"],
        vec!["0", "0", "1", "0", "0", "0"],
        vec!["0.33", "0.67", "0", "1", "0", "0"],
        vec!["0.33", "0.67", "0", "-1", "0", "0"],
        vec!["0.33", "0", "0.67", "0", "1", "0"],
        vec!["0.33", "0", "0.67", "0", "-1", "0"],
        vec!["0.67", "0.33", "0", "-1", "0", "0"],
        vec!["0.67", "0.33", "0", "1", "0", "0"],
        vec!["0.67", "0", "0.33", "0", "-1", "0"],
        vec!["0.67", "0", "0.33", "0", "1", "0"],
        vec!["0", "0.33", "0.67", "0", "0", "1"],
        vec!["0", "0.33", "0.67", "0", "0", "-1"],
        vec!["0", "0.67", "0.33", "0", "0", "-1"],
        vec!["0", "0.67", "0.33", "0", "0", "1"],
        vec!["0.33", "0.33", "0.33", "1", "1", "1"],
        vec!["0.33", "0.33", "0.33", "1", "1", "-1"],
        vec!["0.33", "0.33", "0.33", "1", "-1", "-1"],
        vec!["0.33", "0.33", "0.33", "-1", "1", "1"],
        vec!["0.33", "0.33", "0.33", "-1", "-1", "1"],
        vec!["0.33", "0.33", "0.33", "-1", "-1", "-1"],
    ]
}

/// Projected centroid, unit amounts.
pub fn table2() -> PrintedRows {
    vec![
        vec!["1", "0", "0", "0", "0", "0", "1"],
        vec!["0", "1", "0", "0", "0", "0", "1"],
        vec!["0", "0", "1", "0", "0", "0", "1"],
        vec!["1/2", "1/2", "0", "1", "0", "0", "1"],
        vec!["1/2", "1/2", "0", "-1", "0", "0", "1"],
        vec!["1/2", "0", "1/2", "0", "1", "0", "1"],
        vec!["1/2", "0", "1/2", "0", "-1", "0", "1"],
        vec!["0", "1/2", "1/2", "0", "0", "1", "1"],
        vec!["0", "1/2", "1/2", "0", "0", "-1", "1"],
        vec!["1/3", "1/3", "1/3", "1", "1", "1", "1"],
        vec!["1/3", "1/3", "1/3", "1", "1", "-1", "1"],
        vec!["1/3", "1/3", "1/3", "1", "-1", "-1", "1"],
        vec!["1/3", "1/3", "1/3", "-1", "1", "1", "1"],
        vec!["1/3", "1/3", "1/3", "-1", "-1", "1", "1"],
        vec!["1/3", "1/3", "1/3", "-1", "-1", "-1", "1"],
        vec!["1/4", "1/4", "1/4", "1", "1", "1", "3/4"],
        vec!["1/4", "1/4", "1/4", "1", "1", "-1", "3/4"],
        vec!["1/4", "1/4", "1/4", "1", "-1", "-1", "3/4"],
        vec!["1/4", "1/4", "1/4", "-1", "1", "1", "3/4"],
        vec!["1/4", "1/4", "1/4", "-1", "-1", "1", "3/4"],
        vec!["1/4", "1/4", "1/4", "-1", "-1", "-1", "3/4"],
        vec!["1/3", "1/3", "0", "1", "0", "0", "2/3"],
        vec!["1/3", "1/3", "0", "-1", "0", "0", "2/3"],
        vec!["1/3", "0", "1/3", "0", "1", "0", "2/3"],
        vec!["1/3", "0", "1/3", "0", "-1", "0", "2/3"],
        vec!["0", "1/3", "1/3", "0", "0", "1", "2/3"],
        vec!["0", "1/3", "1/3", "0", "0", "-1", "2/3"],
        vec!["1/2", "0", "0", "0", "0", "0", "1/2"],
        vec!["0", "1/2", "0", "0", "0", "0", "1/2"],
        vec!["0", "0", "1/2", "0", "0", "0", "1/2"],
        vec!["0", "0", "0", "0", "0", "0", "0"],
    ]
}

/// Hormone design: proportions, PWO columns, dose.
pub fn table3() -> PrintedRows {
    vec![
        vec!["1", "0", "0", "0", "0", "0", "0.75"],
        vec!["0", "1", "0", "0", "0", "0", "0.75"],
        vec!["0", "0", "1", "0", "0", "0", "0.75"],
        vec!["0.33", "0.67", "0", "1", "0", "0", "0.75"],
        vec!["0.33", "0.67", "0", "-1", "0", "0", "0.75"],
        vec!["0.67", "0.33", "0", "-1", "0", "0", "0.75"],
        vec!["0.67", "0.33", "0", "1", "0", "0", "0.75"],
        vec!["0.33", "0", "0.67", "0", "1", "0", "0.75"],
        vec!["0.33", "0", "0.67", "0", "-1", "0", "0.75"],
        vec!["0.67", "0", "0.33", "0", "-1", "0", "0.75"],
        vec!["0.67", "0", "0.33", "0", "1", "0", "0.75"],
        vec!["0", "0.33", "0.67", "0", "0", "1", "0.75"],
        vec!["0", "0.33", "0.67", "0", "0", "-1", "0.75"],
        vec!["0", "0.67", "0.33", "0", "0", "-1", "0.75"],
        vec!["0", "0.67", "0.33", "0", "0", "1", "0.75"],
        vec!["0.33", "0.33", "0.33", "1", "1", "1", "0.75"],
        vec!["0.33", "0.33", "0.33", "1", "1", "-1", "0.75"],
        vec!["0.33", "0.33", "0.33", "1", "-1", "-1", "0.75"],
        vec!["0.33", "0.33", "0.33", "-1", "1", "1", "0.75"],
        vec!["0.33", "0.33", "0.33", "-1", "-1", "1", "0.75"],
        vec!["0.33", "0.33", "0.33", "-1", "-1", "-1", "0.75"],
        vec!["1", "0", "0", "0", "0", "0", "1.50"],
        vec!["0", "1", "0", "0", "0", "0", "1.50"],
        vec!["0", "0", "1", "0", "0", "0", "1.50"],
        vec!["0.33", "0.67", "0", "1", "0", "0", "1.50"],
        vec!["0.33", "0.67", "0", "-1", "0", "0", "1.50"],
        vec!["0.67", "0.33", "0", "-1", "0", "0", "1.50"],
        vec!["0.67", "0.33", "0", "1", "0", "0", "1.50"],
        vec!["0.33", "0", "0.67", "0", "1", "0", "1.50"],
        vec!["0.33", "0", "0.67", "0", "-1", "0", "1.50"],
        vec!["0.67", "0", "0.33", "0", "-1", "0", "1.50"],
        vec!["0.67", "0", "0.33", "0", "1", "0", "1.50"],
        vec!["0", "0.33", "0.67", "0", "0", "1", "1.50"],
        vec!["0", "0.33", "0.67", "0", "0", "-1", "1.50"],
        vec!["0", "0.67", "0.33", "0", "0", "-1", "1.50"],
        vec!["0", "0.67", "0.33", "0", "0", "1", "1.50"],
        vec!["0.33", "0.33", "0.33", "1", "1", "1", "1.50"],
        vec!["0.33", "0.33", "0.33", "1", "1", "-1", "1.50"],
        vec!["0.33", "0.33", "0.33", "1", "-1", "-1", "1.50"],
        vec!["0.33", "0.33", "0.33", "-1", "1", "1", "1.50"],
        vec!["0.33", "0.33", "0.33", "-1", "-1", "1", "1.50"],
        vec!["0.33", "0.33", "0.33", "-1", "-1", "-1", "1.50"],
        vec!["1", "0", "0", "0", "0", "0", "3.00"],
        vec!["0", "1", "0", "0", "0", "0", "3.00"],
        vec!["0", "0", "1", "0", "0", "0", "3.00"],
        vec!["0.33", "0.67", "0", "1", "0", "0", "3.00"],
        vec!["0.33", "0.67", "0", "-1", "0", "0", "3.00"],
        vec!["0.67", "0.33", "0", "-1", "0", "0", "3.00"],
        vec!["0.67", "0.33", "0", "1", "0", "0", "3.00"],
        vec!["0.33", "0", "0.67", "0", "1", "0", "3.00"],
        vec!["0.33", "0", "0.67", "0", "-1", "0", "3.00"],
        vec!["0.67", "0", "0.33", "0", "-1", "0", "3.00"],
        vec!["0.67", "0", "0.33", "0", "1", "0", "3.00"],
        vec!["0", "0.33", "0.67", "0", "0", "1", "3.00"],
        vec!["0", "0.33", "0.67", "0", "0", "-1", "3.00"],
        vec!["0", "0.67", "0.33", "0", "0", "-1", "3.00"],
        vec!["0", "0.67", "0.33", "0", "0", "1", "3.00"],
        vec!["0.33", "0.33", "0.33", "1", "1", "1", "3.00"],
        vec!["0.33", "0.33", "0.33", "1", "1", "-1", "3.00"],
        vec!["0.33", "0.33", "0.33", "1", "-1", "-1", "3.00"],
        vec!["0.33", "0.33", "0.33", "-1", "1", "1", "3.00"],
        vec!["0.33", "0.33", "0.33", "-1", "-1", "1", "3.00"],
        vec!["0.33", "0.33", "0.33", "-1", "-1", "-1", "3.00"],
    ]
}

/// Tablet design in mg.
pub fn table5() -> PrintedRows {
    vec![
        vec!["500", "0", "0", "0", "0", "0", "500"],
        vec!["0", "500", "0", "0", "0", "0", "500"],
        vec!["0", "0", "500", "0", "0", "0", "500"],
        vec!["250", "250", "0", "1", "0", "0", "500"],
        vec!["250", "250", "0", "-1", "0", "0", "500"],
        vec!["250", "0", "250", "0", "1", "0", "500"],
        vec!["250", "0", "250", "0", "-1", "0", "500"],
        vec!["0", "250", "250", "0", "0", "1", "500"],
        vec!["0", "250", "250", "0", "0", "-1", "500"],
        vec!["166.7", "166.7", "166.7", "1", "1", "1", "500"],
        vec!["166.7", "166.7", "166.7", "1", "1", "-1", "500"],
        vec!["166.7", "166.7", "166.7", "1", "-1", "-1", "500"],
        vec!["166.7", "166.7", "166.7", "-1", "1", "1", "500"],
        vec!["166.7", "166.7", "166.7", "-1", "-1", "1", "500"],
        vec!["166.7", "166.7", "166.7", "-1", "-1", "-1", "500"],
        vec!["125", "125", "125", "1", "1", "1", "375"],
        vec!["125", "125", "125", "1", "1", "-1", "375"],
        vec!["125", "125", "125", "1", "-1", "-1", "375"],
        vec!["125", "125", "125", "-1", "1", "1", "375"],
        vec!["125", "125", "125", "-1", "-1", "1", "375"],
        vec!["125", "125", "125", "-1", "-1", "-1", "375"],
        vec!["166.7", "166.7", "0", "1", "0", "0", "333.3"],
        vec!["166.7", "166.7", "0", "-1", "0", "0", "333.3"],
        vec!["166.7", "0", "166.7", "0", "1", "0", "333.3"],
        vec!["166.7", "0", "166.7", "0", "-1", "0", "333.3"],
        vec!["0", "166.7", "166.7", "0", "0", "1", "333.3"],
        vec!["0", "166.7", "166.7", "0", "0", "-1", "333.3"],
        vec!["250", "0", "0", "0", "0", "0", "250"],
        vec!["0", "250", "0", "0", "0", "0", "250"],
        vec!["0", "0", "250", "0", "0", "0", "250"],
        // Printed with A = 250; an all-zero blend has total 0, as in the
        // unit-amount table this one rescales.
        vec!["0", "0", "0", "0", "0", "0", "0"],
    ]
}
