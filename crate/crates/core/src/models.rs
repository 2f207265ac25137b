//! Mixture-amount and component-amount model specifications, with and
//! without pairwise-ordering terms, and their numeric model matrices.
//!
//! Mixture-amount models (`Ma*`, `OofaMa*`) are Scheffé polynomials in the
//! proportions `x_i`, crossed with powers of the total amount `A`; they
//! carry no intercept. Component-amount models (`Ca*`, `OofaCa*`) are
//! polynomials in the amounts `a_i` with an intercept.

use std::collections::BTreeSet;
use std::fmt;

use nalgebra::{DMatrix, DVector};
use num_traits::{Num, ToPrimitive, Zero};

use crate::design::{Design, PointKind, Ratio};
use crate::error::{Error, Result};
use crate::linalg::Factorization;
use crate::oofa::{pair_count, pair_index, pairs};

/// The eight model families.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ModelKind {
    /// Linear mixture-amount: `x_i`, `x_i A`.
    MaLin,
    /// Quadratic mixture-amount: Scheffé quadratic crossed with `1, A, A^2`.
    MaQuad,
    /// Linear component-amount: intercept and `a_i`.
    CaLin,
    /// Quadratic component-amount: adds `a_i^2` and `a_i a_j`.
    CaQuad,
    /// Mixture-amount with additive PWO terms: `x_i`, `z_kl`, each times `1, A`.
    OofaMaAdd,
    /// Mixture-amount with quadratic blending, PWO terms and mixture-order
    /// interactions, crossed with `1, A, A^2`.
    OofaMaFull,
    /// Component-amount with additive PWO terms.
    OofaCaAdd,
    /// Quadratic component-amount with PWO terms and amount-order interactions.
    OofaCaFull,
}

impl ModelKind {
    pub const ALL: [ModelKind; 8] = [
        ModelKind::MaLin,
        ModelKind::MaQuad,
        ModelKind::CaLin,
        ModelKind::CaQuad,
        ModelKind::OofaMaAdd,
        ModelKind::OofaMaFull,
        ModelKind::OofaCaAdd,
        ModelKind::OofaCaFull,
    ];

    pub fn name(self) -> &'static str {
        match self {
            ModelKind::MaLin => "ma-lin",
            ModelKind::MaQuad => "ma-quad",
            ModelKind::CaLin => "ca-lin",
            ModelKind::CaQuad => "ca-quad",
            ModelKind::OofaMaAdd => "oofa-ma-add",
            ModelKind::OofaMaFull => "oofa-ma-full",
            ModelKind::OofaCaAdd => "oofa-ca-add",
            ModelKind::OofaCaFull => "oofa-ca-full",
        }
    }

    /// Kind of design point the model's variables live on.
    pub fn point_kind(self) -> PointKind {
        match self {
            ModelKind::MaLin | ModelKind::MaQuad | ModelKind::OofaMaAdd | ModelKind::OofaMaFull => {
                PointKind::Proportion
            }
            _ => PointKind::Amount,
        }
    }

    pub fn has_pwo(self) -> bool {
        matches!(
            self,
            ModelKind::OofaMaAdd
                | ModelKind::OofaMaFull
                | ModelKind::OofaCaAdd
                | ModelKind::OofaCaFull
        )
    }

    /// Whether the model has component-by-order interaction terms subject to
    /// a [`ReductionRule`].
    pub fn has_interactions(self) -> bool {
        matches!(self, ModelKind::OofaMaFull | ModelKind::OofaCaFull)
    }
}

impl fmt::Display for ModelKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Which component-by-order interactions `x_i z_kl` (or `a_i z_kl`) to keep.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub enum ReductionRule {
    /// Component `i` pairs with `{i, i+1 mod m}`: for three components this
    /// keeps `x1z12, x2z23, x3z13`.
    #[default]
    CyclicPairing,
    /// Every component with every pair that contains it.
    KeepAll,
    /// Explicit `(component, (j, k))` list.
    Custom(Vec<(usize, (usize, usize))>),
}

impl ReductionRule {
    fn interactions(&self, m: usize) -> Result<Vec<(usize, (usize, usize))>> {
        match self {
            ReductionRule::CyclicPairing => Ok((0..m)
                .map(|i| {
                    let o = (i + 1) % m;
                    (i, (i.min(o), i.max(o)))
                })
                .collect()),
            ReductionRule::KeepAll => Ok((0..m)
                .flat_map(|i| {
                    pairs(m)
                        .into_iter()
                        .filter(move |&(j, k)| j == i || k == i)
                        .map(move |p| (i, p))
                })
                .collect()),
            ReductionRule::Custom(list) => {
                let mut seen = BTreeSet::new();
                let mut out = Vec::with_capacity(list.len());
                for &(i, (j, k)) in list {
                    if i >= m || j >= m || k >= m || j == k {
                        return Err(Error::UnsupportedReduction(format!(
                            "interaction ({i}, ({j}, {k})) invalid for {m} components"
                        )));
                    }
                    let entry = (i, (j.min(k), j.max(k)));
                    if !seen.insert(entry) {
                        return Err(Error::UnsupportedReduction(format!(
                            "interaction ({i}, ({j}, {k})) listed twice"
                        )));
                    }
                    out.push(entry);
                }
                Ok(out)
            }
        }
    }
}

/// One model term: a product of component powers, at most one PWO factor
/// and a power of the total amount, or the intercept.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Term {
    pub intercept: bool,
    /// `(component, exponent)` sorted by component.
    pub comp_powers: Vec<(usize, u8)>,
    pub pwo_pair: Option<(usize, usize)>,
    pub amount_power: u8,
}

impl Term {
    fn intercept() -> Self {
        Term {
            intercept: true,
            comp_powers: Vec::new(),
            pwo_pair: None,
            amount_power: 0,
        }
    }

    fn comps(comp_powers: Vec<(usize, u8)>) -> Self {
        Term {
            intercept: false,
            comp_powers,
            pwo_pair: None,
            amount_power: 0,
        }
    }

    fn pwo(pair: (usize, usize)) -> Self {
        Term {
            pwo_pair: Some(pair),
            ..Term::comps(Vec::new())
        }
    }

    fn with_pwo(mut self, pair: (usize, usize)) -> Self {
        self.pwo_pair = Some(pair);
        self
    }

    fn times_amount(&self, power: u8) -> Self {
        Term {
            amount_power: power,
            ..self.clone()
        }
    }

    pub fn degree(&self) -> u8 {
        self.comp_powers.iter().map(|&(_, e)| e).sum()
    }

    /// Display label: `x1`, `z12`, `x1x2`, `x1z12`, `a11` for `a1^2`, with an
    /// `A` or `A2` suffix for amount powers.
    pub fn label(&self, prefix: char) -> String {
        if self.intercept {
            return "1".to_string();
        }
        let mut s = String::new();
        for &(i, e) in &self.comp_powers {
            s.push(prefix);
            for _ in 0..e {
                s.push_str(&(i + 1).to_string());
            }
        }
        if let Some((j, k)) = self.pwo_pair {
            s.push_str(&pwo_label(j, k));
        }
        match self.amount_power {
            0 => {}
            1 => s.push('A'),
            p => {
                s.push('A');
                s.push_str(&p.to_string());
            }
        }
        s
    }

    /// Value of the term at already-coded variables.
    fn eval<T>(&self, comps: &[T], pwo: &[T], amount: &T, m: usize) -> T
    where
        T: Num + Clone,
    {
        if self.intercept {
            return T::one();
        }
        let mut v = T::one();
        for &(i, e) in &self.comp_powers {
            for _ in 0..e {
                v = v * comps[i].clone();
            }
        }
        if let Some((j, k)) = self.pwo_pair {
            v = v * pwo[pair_index(j, k, m)].clone();
        }
        for _ in 0..self.amount_power {
            v = v * amount.clone();
        }
        v
    }
}

/// Column label of the PWO factor for pair `(j, k)`, 1-based.
pub fn pwo_label(j: usize, k: usize) -> String {
    if j < 9 && k < 9 {
        format!("z{}{}", j + 1, k + 1)
    } else {
        format!("z{}_{}", j + 1, k + 1)
    }
}

/// Ordered term list of one model.
#[derive(Debug, Clone, PartialEq)]
pub struct ModelSpec {
    kind: ModelKind,
    m: usize,
    terms: Vec<Term>,
    labels: Vec<String>,
}

impl ModelSpec {
    pub fn kind(&self) -> ModelKind {
        self.kind
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn terms(&self) -> &[Term] {
        &self.terms
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    /// Parameter count p.
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn uses_amount(&self) -> bool {
        self.terms.iter().any(|t| t.amount_power > 0)
    }

    pub fn uses_pwo(&self) -> bool {
        self.terms.iter().any(|t| t.pwo_pair.is_some())
    }

    /// Model-space row at a point given in floating point. `comps` are
    /// proportions or amounts depending on the model kind; `amount` is the
    /// total `A`. PWO values are usually signs but may be any real in
    /// `[-1, 1]`. The coding is applied here.
    pub fn row_f64(
        &self,
        comps: &[f64],
        pwo: &[f64],
        amount: f64,
        coding: &Coding,
    ) -> DVector<f64> {
        let (coded, amount) = coding.apply_f64(comps, amount);
        DVector::from_iterator(
            self.terms.len(),
            self.terms
                .iter()
                .map(|t| t.eval(&coded, pwo, &amount, self.m)),
        )
    }
}

/// Builds the term list for `kind` on `m` components. The reduction rule
/// only affects the two models with component-by-order interactions.
///
/// Term order: amount powers outermost; within a block linear terms, then
/// (for component-amount models) PWO terms, pure quadratics, two-factor
/// products and interactions. Mixture-amount blocks list two-factor products
/// before PWO terms.
pub fn build_spec(kind: ModelKind, m: usize, reduction: &ReductionRule) -> Result<ModelSpec> {
    if m < 2 {
        return Err(Error::InvalidDimension(format!(
            "models need m >= 2, got {m}"
        )));
    }
    let linear: Vec<Term> = (0..m).map(|i| Term::comps(vec![(i, 1)])).collect();
    let squares: Vec<Term> = (0..m).map(|i| Term::comps(vec![(i, 2)])).collect();
    let products: Vec<Term> = pairs(m)
        .into_iter()
        .map(|(i, j)| Term::comps(vec![(i, 1), (j, 1)]))
        .collect();
    let pwo: Vec<Term> = pairs(m).into_iter().map(Term::pwo).collect();
    let interactions: Vec<Term> = if kind.has_interactions() {
        reduction
            .interactions(m)?
            .into_iter()
            .map(|(i, pair)| Term::comps(vec![(i, 1)]).with_pwo(pair))
            .collect()
    } else {
        Vec::new()
    };
    let cross = |block: Vec<Term>, max_power: u8| -> Vec<Term> {
        (0..=max_power)
            .flat_map(|p| block.iter().map(move |t| t.times_amount(p)))
            .collect()
    };
    let terms: Vec<Term> = match kind {
        ModelKind::MaLin => cross(linear, 1),
        ModelKind::MaQuad => cross([linear, products].concat(), 2),
        ModelKind::CaLin => [vec![Term::intercept()], linear].concat(),
        ModelKind::CaQuad => [vec![Term::intercept()], linear, squares, products].concat(),
        ModelKind::OofaMaAdd => cross([linear, pwo].concat(), 1),
        ModelKind::OofaMaFull => cross([linear, products, pwo, interactions].concat(), 2),
        ModelKind::OofaCaAdd => [vec![Term::intercept()], linear, pwo].concat(),
        ModelKind::OofaCaFull => [
            vec![Term::intercept()],
            linear,
            pwo,
            squares,
            products,
            interactions,
        ]
        .concat(),
    };
    let prefix = kind.point_kind().prefix();
    let labels = terms.iter().map(|t| t.label(prefix)).collect();
    Ok(ModelSpec {
        kind,
        m,
        terms,
        labels,
    })
}

/// How continuous amount variables enter the model matrix.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum AmountCoding {
    /// Amounts as given (unit scale, milligrams, ...).
    #[default]
    Raw,
    /// Each amount variable mapped affinely onto `[-1, 1]` over its range in
    /// the design. Proportions are never coded.
    UnitRange,
}

impl AmountCoding {
    pub fn name(self) -> &'static str {
        match self {
            AmountCoding::Raw => "raw",
            AmountCoding::UnitRange => "unit-range",
        }
    }
}

/// Resolved affine coding of one design: per-component ranges for amount
/// models, the total-amount range for mixture-amount models.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct Coding {
    comp_ranges: Option<Vec<(Ratio, Ratio)>>,
    amount_range: Option<(Ratio, Ratio)>,
}

impl Coding {
    /// No coding at all.
    pub fn identity() -> Self {
        Coding::default()
    }

    /// Resolves `coding` against the ranges observed in `design`.
    pub fn resolve(coding: AmountCoding, design: &Design, spec: &ModelSpec) -> Self {
        if coding == AmountCoding::Raw || design.is_empty() {
            return Coding::identity();
        }
        match spec.kind.point_kind() {
            PointKind::Amount => {
                let ranges = (0..design.m())
                    .map(|i| {
                        let vals = design.runs().iter().map(|r| r.point().values()[i]);
                        let lo = vals.clone().min().unwrap();
                        let hi = vals.max().unwrap();
                        (lo, hi)
                    })
                    .collect();
                Coding {
                    comp_ranges: Some(ranges),
                    amount_range: None,
                }
            }
            PointKind::Proportion => Coding {
                comp_ranges: None,
                amount_range: design
                    .amount_levels()
                    .first()
                    .zip(design.amount_levels().last())
                    .map(|(&lo, &hi)| (lo, hi)),
            },
        }
    }

    fn code_exact(v: Ratio, range: Option<&(Ratio, Ratio)>) -> Ratio {
        match range {
            Some(&(lo, hi)) if hi != lo => (v * 2 - lo - hi) / (hi - lo),
            _ => v,
        }
    }

    fn code_f64(v: f64, range: Option<&(Ratio, Ratio)>) -> f64 {
        match range {
            Some(&(lo, hi)) if hi != lo => {
                let (lo, hi) = (to_f64(lo), to_f64(hi));
                (2.0 * v - lo - hi) / (hi - lo)
            }
            _ => v,
        }
    }

    fn apply_exact(&self, comps: &[Ratio], amount: Ratio) -> (Vec<Ratio>, Ratio) {
        let coded = comps
            .iter()
            .enumerate()
            .map(|(i, &v)| Self::code_exact(v, self.comp_ranges.as_ref().map(|r| &r[i])))
            .collect();
        (coded, Self::code_exact(amount, self.amount_range.as_ref()))
    }

    fn apply_f64(&self, comps: &[f64], amount: f64) -> (Vec<f64>, f64) {
        let coded = comps
            .iter()
            .enumerate()
            .map(|(i, &v)| Self::code_f64(v, self.comp_ranges.as_ref().map(|r| &r[i])))
            .collect();
        (coded, Self::code_f64(amount, self.amount_range.as_ref()))
    }
}

pub(crate) fn to_f64(r: Ratio) -> f64 {
    r.to_f64().expect("finite rational")
}

/// Numeric N x p model matrix with row ids (0-based run index) and column
/// labels.
#[derive(Debug, Clone, PartialEq)]
pub struct ModelMatrix {
    pub x: DMatrix<f64>,
    pub row_ids: Vec<usize>,
    pub col_labels: Vec<String>,
    pub coding: Coding,
}

impl ModelMatrix {
    pub fn n_runs(&self) -> usize {
        self.x.nrows()
    }

    pub fn n_params(&self) -> usize {
        self.x.ncols()
    }

    /// Wraps an arbitrary matrix, labelling columns `c1, c2, ...`.
    pub fn from_matrix(x: DMatrix<f64>) -> Self {
        let col_labels = (1..=x.ncols()).map(|j| format!("c{j}")).collect();
        let row_ids = (0..x.nrows()).collect();
        ModelMatrix {
            x,
            row_ids,
            col_labels,
            coding: Coding::identity(),
        }
    }
}

/// Model matrix with raw amounts.
pub fn model_matrix(design: &Design, spec: &ModelSpec) -> Result<ModelMatrix> {
    model_matrix_with(design, spec, AmountCoding::Raw)
}

/// Model matrix with the given amount coding. Entries are computed as exact
/// rationals and converted to `f64` last.
pub fn model_matrix_with(
    design: &Design,
    spec: &ModelSpec,
    coding: AmountCoding,
) -> Result<ModelMatrix> {
    if design.m() != spec.m {
        return Err(Error::KindMismatch(format!(
            "design has {} components, model {}",
            design.m(),
            spec.m
        )));
    }
    if design.kind() != spec.kind.point_kind() {
        return Err(Error::KindMismatch(format!(
            "{} model needs a {} design, got {}",
            spec.kind,
            spec.kind.point_kind(),
            design.kind()
        )));
    }
    if spec.uses_pwo() && !design.is_expanded() {
        return Err(Error::MissingPwo);
    }
    if spec.uses_amount() && !design.has_amounts() {
        return Err(Error::MissingAmount);
    }
    let coding = Coding::resolve(coding, design, spec);
    let zero_pwo = vec![Ratio::zero(); pair_count(spec.m)];
    let n = design.len();
    let p = spec.terms.len();
    let mut x = DMatrix::zeros(n, p);
    for (i, run) in design.runs().iter().enumerate() {
        let amount = run.amount().unwrap_or_default();
        let (comps, amount) = coding.apply_exact(run.point().values(), amount);
        let pwo: Vec<Ratio> = run.pwo().map_or_else(
            || zero_pwo.clone(),
            |z| {
                z.signs()
                    .iter()
                    .map(|&s| Ratio::from_integer(s.into()))
                    .collect()
            },
        );
        for (j, term) in spec.terms.iter().enumerate() {
            x[(i, j)] = to_f64(term.eval(&comps, &pwo, &amount, spec.m));
        }
    }
    Ok(ModelMatrix {
        x,
        row_ids: (0..n).collect(),
        col_labels: spec.labels.clone(),
        coding,
    })
}

/// Least-squares fit summary.
#[derive(Debug, Clone, PartialEq)]
pub struct OlsFit {
    pub coefficients: Vec<f64>,
    pub labels: Vec<String>,
    pub residuals: Vec<f64>,
    pub residual_df: usize,
    /// Residual variance `RSS / (N - p)`; `None` when saturated.
    pub residual_variance: Option<f64>,
}

/// Ordinary least squares through an orthogonal factorization.
pub fn fit_ols(mm: &ModelMatrix, y: &[f64]) -> Result<OlsFit> {
    let (n, p) = mm.x.shape();
    if y.len() != n {
        return Err(Error::InvalidArgument(format!(
            "response has {} values for {n} runs",
            y.len()
        )));
    }
    if n < p {
        return Err(Error::RankDeficient {
            labels: mm.col_labels.clone(),
        });
    }
    let fact = Factorization::new(&mm.x).map_err(|s| Error::RankDeficient {
        labels: s
            .near_null
            .iter()
            .map(|&j| mm.col_labels[j].clone())
            .collect(),
    })?;
    let y = DVector::from_column_slice(y);
    let beta = fact.solve_least_squares(&y);
    let residuals = &y - &mm.x * &beta;
    let residual_df = n - p;
    let rss = residuals.norm_squared();
    Ok(OlsFit {
        coefficients: beta.iter().copied().collect(),
        labels: mm.col_labels.clone(),
        residuals: residuals.iter().copied().collect(),
        residual_df,
        residual_variance: (residual_df > 0).then(|| rss / residual_df as f64),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::design::DesignPoint;
    use crate::oofa::{cross_amounts, oofa_expand, OofARun};
    use crate::simplex::{project_columns, simplex_centroid, simplex_lattice};

    fn spec(kind: ModelKind, m: usize) -> ModelSpec {
        build_spec(kind, m, &ReductionRule::CyclicPairing).unwrap()
    }

    #[test]
    fn full_mixture_amount_terms() {
        let s = spec(ModelKind::OofaMaFull, 3);
        assert_eq!(s.len(), 36);
        let base = [
            "x1", "x2", "x3", "x1x2", "x1x3", "x2x3", "z12", "z13", "z23", "x1z12", "x2z23",
            "x3z13",
        ];
        for (t, suffix) in ["", "A", "A2"].iter().enumerate() {
            for (j, b) in base.iter().enumerate() {
                assert_eq!(s.labels()[12 * t + j], format!("{b}{suffix}"));
            }
        }
    }

    #[test]
    fn full_component_amount_terms() {
        let s = spec(ModelKind::OofaCaFull, 3);
        let expected = [
            "1", "a1", "a2", "a3", "z12", "z13", "z23", "a11", "a22", "a33", "a1a2", "a1a3",
            "a2a3", "a1z12", "a2z23", "a3z13",
        ];
        assert_eq!(s.labels(), expected);
    }

    #[test]
    fn linear_component_amount_terms() {
        let s = build_spec(ModelKind::CaLin, 3, &ReductionRule::KeepAll).unwrap();
        assert_eq!(s.labels(), ["1", "a1", "a2", "a3"]);
    }

    #[test]
    fn keep_all_and_custom_rules() {
        let s = build_spec(ModelKind::OofaCaFull, 3, &ReductionRule::KeepAll).unwrap();
        assert_eq!(s.len(), 13 + 6);
        assert!(s.labels().contains(&"a1z13".to_string()));
        let custom = ReductionRule::Custom(vec![(0, (1, 0)), (2, (1, 2))]);
        let s = build_spec(ModelKind::OofaCaFull, 3, &custom).unwrap();
        assert_eq!(&s.labels()[13..], ["a1z12", "a3z23"]);
        let dup = ReductionRule::Custom(vec![(0, (0, 1)), (0, (1, 0))]);
        assert_eq!(
            build_spec(ModelKind::OofaCaFull, 3, &dup)
                .unwrap_err()
                .code(),
            "UnsupportedReduction"
        );
        let bad = ReductionRule::Custom(vec![(3, (0, 1))]);
        assert_eq!(
            build_spec(ModelKind::OofaMaFull, 3, &bad)
                .unwrap_err()
                .code(),
            "UnsupportedReduction"
        );
    }

    #[test]
    fn rejects_single_component() {
        assert_eq!(
            build_spec(ModelKind::CaLin, 1, &ReductionRule::default())
                .unwrap_err()
                .code(),
            "InvalidDimension"
        );
    }

    #[test]
    fn vertex_row_of_linear_mixture_amount() {
        let p =
            DesignPoint::proportion(vec![Ratio::from(1), Ratio::from(0), Ratio::from(0)]).unwrap();
        let base = Design::new(3, PointKind::Proportion, vec![OofARun::base(p)]).unwrap();
        let d = cross_amounts(&base, &[Ratio::from(1)]).unwrap();
        let mm = model_matrix(&d, &spec(ModelKind::MaLin, 3)).unwrap();
        assert_eq!(
            mm.x.row(0).iter().copied().collect::<Vec<_>>(),
            [1.0, 0.0, 0.0, 1.0, 0.0, 0.0]
        );
    }

    #[test]
    fn table_matrices_have_expected_shape_and_rank() {
        let t1 = oofa_expand(&simplex_lattice(3, 3).unwrap()).unwrap();
        let levels = [Ratio::new(3, 4), Ratio::new(3, 2), Ratio::from(3)];
        let t3 = cross_amounts(&t1, &levels).unwrap();
        let mm = model_matrix(&t3, &spec(ModelKind::OofaMaFull, 3)).unwrap();
        assert_eq!(mm.x.shape(), (63, 36));
        assert_eq!(mm.x.clone().svd(false, false).rank(1e-9 * mm.x.norm()), 36);

        let t2 = oofa_expand(&project_columns(&simplex_centroid(4).unwrap(), &[3].into()).unwrap())
            .unwrap();
        let mm = model_matrix(&t2, &spec(ModelKind::OofaCaFull, 3)).unwrap();
        assert_eq!(mm.x.shape(), (31, 16));
        assert_eq!(mm.x.clone().svd(false, false).rank(1e-9 * mm.x.norm()), 16);
    }

    #[test]
    fn kind_and_content_mismatches() {
        let lattice = simplex_lattice(3, 2).unwrap();
        let amounts = project_columns(&simplex_centroid(4).unwrap(), &[3].into()).unwrap();
        assert_eq!(
            model_matrix(&lattice, &spec(ModelKind::CaLin, 3))
                .unwrap_err()
                .code(),
            "KindMismatch"
        );
        assert_eq!(
            model_matrix(&amounts, &spec(ModelKind::OofaCaAdd, 3)).unwrap_err(),
            Error::MissingPwo
        );
        assert_eq!(
            model_matrix(&lattice, &spec(ModelKind::MaLin, 3)).unwrap_err(),
            Error::MissingAmount
        );
        assert_eq!(
            model_matrix(&lattice, &spec(ModelKind::MaLin, 4))
                .unwrap_err()
                .code(),
            "KindMismatch"
        );
    }

    #[test]
    fn scheffe_identity_on_proportion_rows() {
        let d = cross_amounts(&simplex_lattice(4, 3).unwrap(), &[Ratio::from(2)]).unwrap();
        let mm = model_matrix(&d, &spec(ModelKind::MaQuad, 4)).unwrap();
        for row in mm.x.row_iter() {
            let s: f64 = (0..4).map(|j| row[j]).sum();
            assert!((s - 1.0).abs() < 1e-15);
        }
    }

    #[test]
    fn unit_range_coding_maps_onto_pm_one() {
        let d = oofa_expand(&project_columns(&simplex_centroid(4).unwrap(), &[3].into()).unwrap())
            .unwrap();
        let mm =
            model_matrix_with(&d, &spec(ModelKind::CaLin, 3), AmountCoding::UnitRange).unwrap();
        for j in 1..4 {
            let col = mm.x.column(j);
            assert_eq!(col.min(), -1.0);
            assert_eq!(col.max(), 1.0);
        }
    }

    #[test]
    fn row_f64_matches_matrix_rows() {
        let d = oofa_expand(&project_columns(&simplex_centroid(4).unwrap(), &[3].into()).unwrap())
            .unwrap();
        let s = spec(ModelKind::OofaCaFull, 3);
        let mm = model_matrix_with(&d, &s, AmountCoding::UnitRange).unwrap();
        for (i, run) in d.runs().iter().enumerate() {
            let comps: Vec<f64> = run.point().values().iter().map(|&v| to_f64(v)).collect();
            let pwo: Vec<f64> = run
                .pwo()
                .unwrap()
                .signs()
                .iter()
                .map(|&z| z.into())
                .collect();
            let row = s.row_f64(&comps, &pwo, 0.0, &mm.coding);
            for j in 0..s.len() {
                assert!((row[j] - mm.x[(i, j)]).abs() < 1e-14);
            }
        }
    }

    #[test]
    fn ols_identity() {
        let mm = ModelMatrix::from_matrix(DMatrix::identity(3, 3));
        let fit = fit_ols(&mm, &[1.0, 2.0, 3.0]).unwrap();
        for (b, e) in fit.coefficients.iter().zip([1.0, 2.0, 3.0]) {
            assert!((b - e).abs() < 1e-14);
        }
        assert_eq!(fit.residual_df, 0);
        assert_eq!(fit.residual_variance, None);
    }

    #[test]
    fn ols_rank_deficient_reports_columns() {
        let x = DMatrix::from_row_slice(
            4,
            3,
            &[1.0, 2.0, 0.0, 1.0, 2.0, 1.0, 1.0, 2.0, 2.0, 1.0, 2.0, 3.0],
        );
        let mut mm = ModelMatrix::from_matrix(x);
        mm.col_labels = vec!["u".into(), "v".into(), "w".into()];
        match fit_ols(&mm, &[0.0; 4]).unwrap_err() {
            Error::RankDeficient { labels } => assert_eq!(labels, ["u", "v"]),
            e => panic!("unexpected {e:?}"),
        }
    }
}
