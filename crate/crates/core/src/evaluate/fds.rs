//! Fraction-of-design-space curves by Monte Carlo sampling.
//!
//! Samples are drawn in fixed-size chunks; chunk `c` uses a ChaCha8 stream
//! `c` under the caller's seed, so the sorted curve is bit-identical for any
//! worker count.

use std::fmt::Write as _;

use nalgebra::DVector;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::Exp1;
use rayon::prelude::*;

use crate::design::{Design, PointKind};
use crate::error::{Error, Result};
use crate::models::{model_matrix_with, to_f64, AmountCoding, ModelSpec};
use crate::oofa::pairs;

use super::Evaluator;

const CHUNK: usize = 1024;
const MIN_SAMPLES: usize = 100;

/// How the total amount of a sampled blend is drawn.
#[derive(Debug, Clone, PartialEq)]
pub enum AmountPolicy {
    /// Uniform on `[min, max]`.
    Continuous { min: f64, max: f64 },
    /// Uniform over a finite set of totals.
    DiscreteLevels(Vec<f64>),
}

impl AmountPolicy {
    /// Continuous over the design's lowest and highest amount level.
    pub fn continuous_over(design: &Design) -> Option<Self> {
        let levels = design.amount_levels();
        Some(AmountPolicy::Continuous {
            min: to_f64(*levels.first()?),
            max: to_f64(*levels.last()?),
        })
    }

    /// The design's own amount levels.
    pub fn levels_of(design: &Design) -> Option<Self> {
        let levels = design.amount_levels();
        (!levels.is_empty())
            .then(|| AmountPolicy::DiscreteLevels(levels.iter().map(|&l| to_f64(l)).collect()))
    }

    fn draw<R: Rng>(&self, rng: &mut R) -> f64 {
        match self {
            AmountPolicy::Continuous { min, max } => min + (max - min) * rng.random::<f64>(),
            AmountPolicy::DiscreteLevels(levels) => levels[rng.random_range(0..levels.len())],
        }
    }

    fn describe(&self) -> String {
        match self {
            AmountPolicy::Continuous { min, max } => format!("continuous[{min},{max}]"),
            AmountPolicy::DiscreteLevels(l) => format!("levels{l:?}"),
        }
    }
}

/// How the pairwise-ordering coordinates of a sampled blend are drawn.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum OrderingPolicy {
    /// A uniformly random addition order of all components; every `z_jk`
    /// is then `+1` or `-1` and the signs are transitive.
    #[default]
    Permutations,
    /// Each `z_jk` uniform on `[-1, 1]` independently, treating the PWO
    /// columns as continuous box factors.
    Relaxed,
}

impl OrderingPolicy {
    pub fn name(self) -> &'static str {
        match self {
            OrderingPolicy::Permutations => "permutations",
            OrderingPolicy::Relaxed => "relaxed",
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct FdsConfig {
    pub samples: usize,
    pub seed: u64,
    /// `None` means continuous over the design's amount range.
    pub amount_policy: Option<AmountPolicy>,
    pub ordering_policy: OrderingPolicy,
    pub coding: AmountCoding,
    /// Worker threads; `None` uses the global rayon pool.
    pub threads: Option<usize>,
}

impl Default for FdsConfig {
    fn default() -> Self {
        FdsConfig {
            samples: 10_000,
            seed: 0,
            amount_policy: None,
            ordering_policy: OrderingPolicy::Permutations,
            coding: AmountCoding::Raw,
            threads: None,
        }
    }
}

/// Sorted prediction variances against cumulative fraction `i / S`.
#[derive(Debug, Clone, PartialEq)]
pub struct FdsCurve {
    pub variances: Vec<f64>,
    pub fractions: Vec<f64>,
    pub seed: u64,
    pub samples: usize,
    pub amount_policy: String,
    pub ordering_policy: OrderingPolicy,
}

impl FdsCurve {
    fn from_unsorted(
        mut variances: Vec<f64>,
        seed: u64,
        amount_policy: String,
        ordering_policy: OrderingPolicy,
    ) -> Self {
        variances.sort_by(f64::total_cmp);
        let s = variances.len();
        let fractions = (1..=s).map(|i| i as f64 / s as f64).collect();
        FdsCurve {
            variances,
            fractions,
            seed,
            samples: s,
            amount_policy,
            ordering_policy,
        }
    }

    /// Fraction of sampled space with prediction variance strictly below `v`.
    pub fn fraction_below(&self, v: f64) -> f64 {
        self.variances.partition_point(|&x| x < v) as f64 / self.samples as f64
    }

    /// Prediction variance at cumulative fraction `f` in `(0, 1]`.
    pub fn quantile(&self, f: f64) -> f64 {
        let i = ((f * self.samples as f64).ceil() as usize).clamp(1, self.samples);
        self.variances[i - 1]
    }

    pub fn max(&self) -> f64 {
        *self.variances.last().unwrap()
    }

    /// `fraction,variance` lines with a header. `points` thins the curve to
    /// that many evenly spaced rows (always keeping the last).
    pub fn to_text(&self, points: Option<usize>) -> String {
        let s = self.samples;
        let idx: Vec<usize> = match points {
            Some(k) if k >= 1 && k < s => (1..=k).map(|i| (i * s).div_ceil(k) - 1).collect(),
            _ => (0..s).collect(),
        };
        let mut out = String::from("fraction,variance\n");
        for i in idx {
            writeln!(out, "{:.6},{:.10}", self.fractions[i], self.variances[i]).unwrap();
        }
        out
    }
}

/// Evaluates `f'(X'X)^-1 f` at `samples` model-space rows drawn by
/// `sampler`, chunked with per-chunk ChaCha8 streams.
pub fn sample_prediction_variances<F>(
    evaluator: &Evaluator,
    samples: usize,
    seed: u64,
    threads: Option<usize>,
    sampler: F,
) -> Result<Vec<f64>>
where
    F: Fn(&mut ChaCha8Rng) -> DVector<f64> + Sync,
{
    let chunks = samples.div_ceil(CHUNK);
    let run_chunk = |c: usize| -> Vec<f64> {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        rng.set_stream(c as u64);
        let len = CHUNK.min(samples - c * CHUNK);
        (0..len)
            .map(|_| evaluator.prediction_variance(&sampler(&mut rng)))
            .collect()
    };
    let parts: Vec<Vec<f64>> = match threads {
        Some(t) => {
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(t.max(1))
                .build()
                .map_err(|e| Error::InvalidArgument(format!("thread pool: {e}")))?;
            pool.install(|| (0..chunks).into_par_iter().map(run_chunk).collect())
        }
        None => (0..chunks).into_par_iter().map(run_chunk).collect(),
    };
    Ok(parts.concat())
}

/// FDS curve of `design` under `spec`: proportions uniform on the simplex
/// (normalized exponential spacings), PWO coordinates and total amount per
/// the configured policies. Amount models use
/// `a_i = x_i A`.
pub fn fds_curve(design: &Design, spec: &ModelSpec, config: &FdsConfig) -> Result<FdsCurve> {
    if config.samples < MIN_SAMPLES {
        return Err(Error::InvalidArgument(format!(
            "FDS needs at least {MIN_SAMPLES} samples, got {}",
            config.samples
        )));
    }
    let mm = model_matrix_with(design, spec, config.coding)?;
    let coding = mm.coding.clone();
    let evaluator = Evaluator::new(mm)?;
    let policy = match &config.amount_policy {
        Some(p) => p.clone(),
        None => {
            AmountPolicy::continuous_over(design).unwrap_or(AmountPolicy::DiscreteLevels(vec![1.0]))
        }
    };
    if let AmountPolicy::DiscreteLevels(l) = &policy {
        if l.is_empty() {
            return Err(Error::EmptyLevels);
        }
    }
    let m = spec.m();
    let pair_list = pairs(m);
    let amount_model = spec.kind().point_kind() == PointKind::Amount;
    let sampler = |rng: &mut ChaCha8Rng| {
        let mut x: Vec<f64> = (0..m).map(|_| rng.sample::<f64, _>(Exp1)).collect();
        let total: f64 = x.iter().sum();
        x.iter_mut().for_each(|v| *v /= total);
        let pwo: Vec<f64> = match config.ordering_policy {
            OrderingPolicy::Permutations => {
                let mut order: Vec<usize> = (0..m).collect();
                order.shuffle(rng);
                let mut position = vec![0; m];
                for (pos, &c) in order.iter().enumerate() {
                    position[c] = pos;
                }
                pair_list
                    .iter()
                    .map(|&(j, k)| if position[j] < position[k] { 1.0 } else { -1.0 })
                    .collect()
            }
            OrderingPolicy::Relaxed => pair_list
                .iter()
                .map(|_| rng.random_range(-1.0..=1.0))
                .collect(),
        };
        let amount = policy.draw(rng);
        if amount_model {
            x.iter_mut().for_each(|v| *v *= amount);
        }
        spec.row_f64(&x, &pwo, amount, &coding)
    };
    let variances = sample_prediction_variances(
        &evaluator,
        config.samples,
        config.seed,
        config.threads,
        sampler,
    )?;
    Ok(FdsCurve::from_unsorted(
        variances,
        config.seed,
        policy.describe(),
        config.ordering_policy,
    ))
}
