//! Design-evaluation criteria on a model matrix: leverages and prediction
//! variance, G-efficiency, determinant criteria, standard errors,
//! multicollinearity R², t-test power and fraction-of-design-space curves.
//!
//! Prediction variance is the unscaled relative variance `f'(X'X)^-1 f`
//! (unit error variance). All criteria are computed from one equilibrated
//! QR factorization per matrix; nothing inverts `X'X` explicitly.

mod fds;
mod noncentral_t;

pub use fds::{
    fds_curve, sample_prediction_variances, AmountPolicy, FdsConfig, FdsCurve, OrderingPolicy,
};
pub use noncentral_t::{nct_cdf, t_quantile};

use nalgebra::{DMatrix, DVector};
use serde::Serialize;

use crate::design::Design;
use crate::error::{Error, Result};
use crate::linalg::{Factorization, Singular};
use crate::models::{model_matrix_with, AmountCoding, ModelMatrix, ModelSpec};

fn singular(mm: &ModelMatrix, s: Singular) -> Error {
    Error::SingularInformation {
        rcond: s.rcond,
        labels: s
            .near_null
            .iter()
            .map(|&j| mm.col_labels[j].clone())
            .collect(),
    }
}

/// `X'X`.
pub fn information_matrix(x: &DMatrix<f64>) -> DMatrix<f64> {
    x.tr_mul(x)
}

/// How the "k standard deviations" signal maps to a coefficient size.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum PowerConvention {
    /// Coefficient `k/2`: the signal spread over a two-unit factor range.
    #[default]
    HalfRange,
    /// Coefficient `k / r_j`, where `r_j` is the range of column `j` over the
    /// design runs. Equals `HalfRange` for terms coded to `[-1, 1]`; a pure
    /// quadratic of a coded factor spans `[0, 1]` and gets the full `k`.
    TermRange,
}

impl PowerConvention {
    pub fn name(self) -> &'static str {
        match self {
            PowerConvention::HalfRange => "half-range",
            PowerConvention::TermRange => "term-range",
        }
    }
}

/// Determinant-based criteria.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct DCriteria {
    /// `ln |X'X|`.
    pub log_det: f64,
    /// `|X'X|` (may overflow to infinity for large-scale amounts).
    pub det: f64,
    /// `|X'X|^(1/p)`.
    pub det_per_param: f64,
    /// `|X'X|^(1/p) / N`.
    pub det_per_param_over_n: f64,
    /// `N / |X'X|^(1/p)`.
    pub n_over_det_per_param: f64,
}

/// Factorized model matrix with every criterion available on demand.
#[derive(Debug, Clone)]
pub struct Evaluator {
    mm: ModelMatrix,
    fact: Factorization,
}

impl Evaluator {
    pub fn new(mm: ModelMatrix) -> Result<Self> {
        let fact = Factorization::new(&mm.x).map_err(|s| singular(&mm, s))?;
        Ok(Evaluator { mm, fact })
    }

    pub fn matrix(&self) -> &ModelMatrix {
        &self.mm
    }

    pub fn n_runs(&self) -> usize {
        self.mm.n_runs()
    }

    pub fn n_params(&self) -> usize {
        self.mm.n_params()
    }

    pub fn residual_df(&self) -> usize {
        self.n_runs().saturating_sub(self.n_params())
    }

    /// Reciprocal condition number of the column-equilibrated `X'X`.
    pub fn rcond(&self) -> f64 {
        self.fact.rcond()
    }

    /// Prediction variance at each design run (hat-matrix diagonal).
    pub fn leverages(&self) -> Vec<f64> {
        self.fact.leverages()
    }

    pub fn prediction_variance(&self, f: &DVector<f64>) -> f64 {
        self.fact.quadratic_form(f)
    }

    pub fn max_leverage(&self) -> f64 {
        self.leverages()
            .into_iter()
            .fold(f64::NEG_INFINITY, f64::max)
    }

    pub fn mean_leverage(&self) -> f64 {
        let h = self.leverages();
        h.iter().sum::<f64>() / h.len() as f64
    }

    pub fn g_efficiency(&self) -> f64 {
        g_efficiency(self.n_params(), self.n_runs(), self.max_leverage())
    }

    pub fn d_criteria(&self) -> DCriteria {
        let p = self.n_params() as f64;
        let n = self.n_runs() as f64;
        let log_det = self.fact.log_det();
        let per = (log_det / p).exp();
        DCriteria {
            log_det,
            det: log_det.exp(),
            det_per_param: per,
            det_per_param_over_n: per / n,
            n_over_det_per_param: n / per,
        }
    }

    /// Standard errors at unit error variance.
    pub fn std_errors(&self) -> Vec<f64> {
        self.fact
            .inverse_diagonal()
            .into_iter()
            .map(f64::sqrt)
            .collect()
    }

    /// R² of column `j` regressed on all other columns, with the total sum of
    /// squares taken about the column mean. The regression uses the other
    /// columns as given, so for models without an intercept the value can
    /// fall below zero.
    pub fn r2_multicollinearity(&self, j: usize) -> Result<f64> {
        let x = &self.mm.x;
        let p = x.ncols();
        if p < 2 {
            return Err(Error::InvalidArgument(
                "R² needs at least two columns".into(),
            ));
        }
        if j >= p {
            return Err(Error::InvalidArgument(format!("column {j} out of range")));
        }
        let y = x.column(j).into_owned();
        let mean = y.mean();
        let tss: f64 = y.iter().map(|v| (v - mean).powi(2)).sum();
        let spread = y.max() - y.min();
        if spread == 0.0 || tss <= f64::EPSILON * y.norm_squared() {
            return Err(Error::ConstantColumn(self.mm.col_labels[j].clone()));
        }
        let others = x.clone().remove_column(j);
        let q = others.qr().q();
        let fitted = &q * q.tr_mul(&y);
        let rss = (&y - fitted).norm_squared();
        Ok(1.0 - rss / tss)
    }

    /// Range of column `j` over the design runs.
    pub fn column_range(&self, j: usize) -> f64 {
        let c = self.mm.x.column(j);
        c.max() - c.min()
    }

    /// Noncentrality of the t statistic for coefficient `j` at signal `k`.
    pub fn noncentrality(&self, j: usize, signal: f64, convention: PowerConvention) -> Option<f64> {
        let se = self.std_errors()[j];
        let coefficient = match convention {
            PowerConvention::HalfRange => signal / 2.0,
            PowerConvention::TermRange => {
                let range = self.column_range(j);
                if range <= 0.0 {
                    return None;
                }
                signal / range
            }
        };
        Some(coefficient / se)
    }

    /// Two-sided t-test power for coefficient `j`.
    pub fn power(
        &self,
        j: usize,
        signal: f64,
        alpha: f64,
        convention: PowerConvention,
    ) -> Result<Option<f64>> {
        let df = self.residual_df();
        if df == 0 {
            return Err(Error::NoResidualDf {
                n_runs: self.n_runs(),
                n_params: self.n_params(),
            });
        }
        match self.noncentrality(j, signal, convention) {
            Some(delta) => t_test_power(delta, df as f64, alpha).map(Some),
            None => Ok(None),
        }
    }
}

/// `100 p / (N max_pv)`.
pub fn g_efficiency(n_params: usize, n_runs: usize, max_pv: f64) -> f64 {
    100.0 * n_params as f64 / (n_runs as f64 * max_pv)
}

pub fn leverages(mm: &ModelMatrix) -> Result<Vec<f64>> {
    Ok(Evaluator::new(mm.clone())?.leverages())
}

pub fn prediction_variance(mm: &ModelMatrix, f: &DVector<f64>) -> Result<f64> {
    Ok(Evaluator::new(mm.clone())?.prediction_variance(f))
}

pub fn d_criteria(mm: &ModelMatrix) -> Result<DCriteria> {
    Ok(Evaluator::new(mm.clone())?.d_criteria())
}

pub fn std_errors(mm: &ModelMatrix) -> Result<Vec<f64>> {
    Ok(Evaluator::new(mm.clone())?.std_errors())
}

pub fn r2_multicollinearity(mm: &ModelMatrix, j: usize) -> Result<f64> {
    Evaluator::new(mm.clone())?.r2_multicollinearity(j)
}

pub fn power(
    mm: &ModelMatrix,
    j: usize,
    signal: f64,
    alpha: f64,
    convention: PowerConvention,
) -> Result<Option<f64>> {
    Evaluator::new(mm.clone())?.power(j, signal, alpha, convention)
}

/// Power of the two-sided level-`alpha` t-test with `df` degrees of freedom
/// when the statistic has noncentrality `delta`.
pub fn t_test_power(delta: f64, df: f64, alpha: f64) -> Result<f64> {
    if !(alpha > 0.0 && alpha < 1.0) {
        return Err(Error::InvalidArgument(format!(
            "alpha {alpha} not in (0, 1)"
        )));
    }
    if df.is_nan() || df <= 0.0 {
        return Err(Error::InvalidArgument(format!(
            "degrees of freedom {df} not positive"
        )));
    }
    let crit = t_quantile(1.0 - alpha / 2.0, df);
    let upper = 1.0 - nct_cdf(crit, df, delta);
    let lower = nct_cdf(-crit, df, delta);
    Ok((upper + lower).clamp(0.0, 1.0))
}

/// Options for [`evaluate`].
#[derive(Debug, Clone, PartialEq)]
pub struct EvalOptions {
    pub coding: AmountCoding,
    pub signal: f64,
    pub alpha: f64,
    pub convention: PowerConvention,
}

impl Default for EvalOptions {
    fn default() -> Self {
        EvalOptions {
            coding: AmountCoding::Raw,
            signal: 1.0,
            alpha: 0.05,
            convention: PowerConvention::HalfRange,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct TermReport {
    pub label: String,
    pub se: f64,
    pub r2: Option<f64>,
    pub power: Option<f64>,
}

/// Criteria bundle for one design and model.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct EvalReport {
    pub model: String,
    pub coding: String,
    pub n_runs: usize,
    pub n_params: usize,
    pub residual_df: usize,
    pub max_pv: f64,
    /// `N * max_pv`.
    pub max_pv_scaled: f64,
    pub avg_pv: f64,
    pub g_efficiency_pct: f64,
    pub d_criteria: DCriteria,
    pub rcond: f64,
    pub power_convention: String,
    pub signal: f64,
    pub alpha: f64,
    pub terms: Vec<TermReport>,
}

impl EvalReport {
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }
}

/// Builds the model matrix of `design` under `spec` and evaluates it.
pub fn evaluate(design: &Design, spec: &ModelSpec, opts: &EvalOptions) -> Result<EvalReport> {
    let mm = model_matrix_with(design, spec, opts.coding)?;
    evaluate_matrix(mm, spec.kind().name(), opts)
}

pub fn evaluate_matrix(mm: ModelMatrix, model: &str, opts: &EvalOptions) -> Result<EvalReport> {
    let ev = Evaluator::new(mm)?;
    let n = ev.n_runs();
    let p = ev.n_params();
    let max_pv = ev.max_leverage();
    let se = ev.std_errors();
    let terms = (0..p)
        .map(|j| {
            let r2 = match ev.r2_multicollinearity(j) {
                Ok(v) => Some(v),
                Err(Error::ConstantColumn(_) | Error::InvalidArgument(_)) => None,
                Err(e) => return Err(e),
            };
            let power = match ev.power(j, opts.signal, opts.alpha, opts.convention) {
                Ok(v) => v,
                Err(Error::NoResidualDf { .. }) => None,
                Err(e) => return Err(e),
            };
            Ok(TermReport {
                label: ev.matrix().col_labels[j].clone(),
                se: se[j],
                r2,
                power,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(EvalReport {
        model: model.to_string(),
        coding: opts.coding.name().to_string(),
        n_runs: n,
        n_params: p,
        residual_df: ev.residual_df(),
        max_pv,
        max_pv_scaled: n as f64 * max_pv,
        avg_pv: ev.mean_leverage(),
        g_efficiency_pct: g_efficiency(p, n, max_pv),
        d_criteria: ev.d_criteria(),
        rcond: ev.rcond(),
        power_convention: opts.convention.name().to_string(),
        signal: opts.signal,
        alpha: opts.alpha,
        terms,
    })
}
