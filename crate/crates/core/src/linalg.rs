//! Column-equilibrated QR factorization of a model matrix.
//!
//! Columns are scaled to unit norm before factorizing. Leverages and every
//! quantity derived from `(X'X)^-1` are invariant to this scaling, and it keeps
//! mg-scale amount columns from swamping the conditioning estimate.

use nalgebra::{DMatrix, DVector};

/// Reciprocal condition number of the equilibrated information matrix below
/// which it is treated as singular.
pub const RCOND_THRESHOLD: f64 = 1e-10;

#[derive(Debug, Clone, PartialEq)]
pub struct Singular {
    pub rcond: f64,
    /// Columns carrying most of the weight of the near-null direction.
    pub near_null: Vec<usize>,
}

#[derive(Debug, Clone)]
pub struct Factorization {
    q: DMatrix<f64>,
    r: DMatrix<f64>,
    r_inv: DMatrix<f64>,
    scale: DVector<f64>,
    rcond: f64,
}

impl Factorization {
    pub fn new(x: &DMatrix<f64>) -> Result<Self, Singular> {
        let (n, p) = x.shape();
        if p == 0 {
            return Err(Singular {
                rcond: 0.0,
                near_null: Vec::new(),
            });
        }
        if n < p {
            return Err(Singular {
                rcond: 0.0,
                near_null: (0..p).collect(),
            });
        }
        let scale = DVector::from_iterator(p, x.column_iter().map(|c| c.norm()));
        if let Some(j) = scale.iter().position(|&s| s == 0.0 || !s.is_finite()) {
            return Err(Singular {
                rcond: 0.0,
                near_null: vec![j],
            });
        }
        let mut xe = x.clone();
        for (j, mut col) in xe.column_iter_mut().enumerate() {
            col /= scale[j];
        }

        let svd = xe.clone().svd(false, true);
        let sv = &svd.singular_values;
        let (imin, smin) = sv
            .iter()
            .copied()
            .enumerate()
            .min_by(|a, b| a.1.total_cmp(&b.1))
            .unwrap();
        let smax = sv.max();
        let rcond = (smin / smax).powi(2);
        if rcond.is_nan() || rcond < RCOND_THRESHOLD {
            let v_t = svd.v_t.expect("requested");
            let v = v_t.row(imin);
            let vmax = v.amax();
            let near_null = (0..p).filter(|&j| v[j].abs() >= 0.1 * vmax).collect();
            return Err(Singular { rcond, near_null });
        }

        let qr = xe.qr();
        let q = qr.q();
        let r = qr.r();
        let r_inv = r
            .clone()
            .try_inverse()
            .expect("well-conditioned triangular factor");
        Ok(Factorization {
            q,
            r,
            r_inv,
            scale,
            rcond,
        })
    }

    /// Reciprocal condition number of the equilibrated `X'X`.
    pub fn rcond(&self) -> f64 {
        self.rcond
    }

    /// Diagonal of the hat matrix.
    pub fn leverages(&self) -> Vec<f64> {
        self.q.row_iter().map(|row| row.norm_squared()).collect()
    }

    /// `f' (X'X)^-1 f`.
    pub fn quadratic_form(&self, f: &DVector<f64>) -> f64 {
        let scaled = f.component_div(&self.scale);
        let u = self
            .r
            .tr_solve_upper_triangular(&scaled)
            .expect("nonsingular triangular factor");
        u.norm_squared()
    }

    /// Diagonal of `(X'X)^-1`.
    pub fn inverse_diagonal(&self) -> Vec<f64> {
        self.r_inv
            .row_iter()
            .zip(self.scale.iter())
            .map(|(row, s)| row.norm_squared() / (s * s))
            .collect()
    }

    /// Natural log of `det(X'X)`.
    pub fn log_det(&self) -> f64 {
        let diag: f64 = self.r.diagonal().iter().map(|d| d.abs().ln()).sum();
        let scale: f64 = self.scale.iter().map(|s| s.ln()).sum();
        2.0 * (diag + scale)
    }

    pub fn solve_least_squares(&self, y: &DVector<f64>) -> DVector<f64> {
        let qty = self.q.tr_mul(y);
        (&self.r_inv * qty).component_div(&self.scale)
    }
}
