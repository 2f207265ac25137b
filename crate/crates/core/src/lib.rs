//! Order-of-addition mixture-amount designs: construction from simplex
//! lattice and centroid designs, pairwise-ordering expansion, the eight
//! mixture-amount and component-amount model families, and design
//! evaluation (leverage, G- and D-criteria, multicollinearity, power, and
//! fraction-of-design-space curves).

pub mod design;
pub mod error;
pub mod evaluate;
pub mod io;
mod linalg;
pub mod models;
pub mod oofa;
pub mod simplex;
pub mod tables;

pub use design::{total_amount, validate_point, Design, DesignPoint, PointKind, Ratio, Support};
pub use error::{Error, Result};
pub use evaluate::{
    evaluate, evaluate_matrix, fds_curve, AmountPolicy, DCriteria, EvalOptions, EvalReport,
    Evaluator, FdsConfig, FdsCurve, OrderingPolicy, PowerConvention, TermReport,
};
pub use io::{read_design, write_design, DesignFormat};
pub use linalg::RCOND_THRESHOLD;
pub use models::{
    build_spec, fit_ols, model_matrix, model_matrix_with, AmountCoding, ModelKind, ModelMatrix,
    ModelSpec, OlsFit, ReductionRule,
};
pub use oofa::{
    cross_amounts, oofa_expand, ordering_from_pwo, pwo_from_ordering, scale_amounts, OofARun,
    Ordering, PwoVector,
};
pub use simplex::{project_columns, simplex_centroid, simplex_lattice, LatticeSpec};
