//! Independent oracles shared by the integration and acceptance tests.
#![allow(dead_code)]

pub mod printed;

use std::collections::BTreeSet;

use oofa_core::Ratio;
use statrs::distribution::{ContinuousCDF, Normal};
use statrs::function::gamma::ln_gamma;

/// Every `m`-vector of numerators in `0..=w` summing to `w`, by filtering the
/// full grid.
pub fn brute_lattice(m: usize, w: usize) -> BTreeSet<Vec<Ratio>> {
    let mut out = BTreeSet::new();
    let total = (w + 1).pow(m as u32);
    for code in 0..total {
        let mut c = code;
        let mut v = Vec::with_capacity(m);
        for _ in 0..m {
            v.push(c % (w + 1));
            c /= w + 1;
        }
        if v.iter().sum::<usize>() == w {
            out.insert(v.iter().map(|&n| Ratio::new(n as i64, w as i64)).collect());
        }
    }
    out
}

/// Centroids of all nonempty subsets, by bitmask.
pub fn brute_centroid(m: usize) -> BTreeSet<Vec<Ratio>> {
    (1u32..(1 << m))
        .map(|mask| {
            let size = mask.count_ones() as i64;
            (0..m)
                .map(|i| {
                    if mask & (1 << i) != 0 {
                        Ratio::new(1, size)
                    } else {
                        Ratio::from_integer(0)
                    }
                })
                .collect()
        })
        .collect()
}

pub fn binomial(n: u64, k: u64) -> u64 {
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

/// Transitive sign patterns: those some permutation of `0..m` induces,
/// with `+1` when `j` precedes `k`.
pub fn transitive_patterns(m: usize) -> BTreeSet<Vec<i8>> {
    fn perms(items: Vec<usize>) -> Vec<Vec<usize>> {
        if items.len() <= 1 {
            return vec![items];
        }
        let mut out = Vec::new();
        for i in 0..items.len() {
            let mut rest = items.clone();
            let head = rest.remove(i);
            for mut p in perms(rest) {
                p.insert(0, head);
                out.push(p);
            }
        }
        out
    }
    perms((0..m).collect())
        .into_iter()
        .map(|p| {
            let pos = |c: usize| p.iter().position(|&x| x == c).unwrap();
            let mut signs = Vec::new();
            for j in 0..m {
                for k in j + 1..m {
                    signs.push(if pos(j) < pos(k) { 1 } else { -1 });
                }
            }
            signs
        })
        .collect()
}

/// `ends` are `(a, b)`, `values` the integrand at `a`, the midpoint and `b`.
fn adaptive_simpson<F: Fn(f64) -> f64>(
    f: &F,
    ends: (f64, f64),
    values: (f64, f64, f64),
    whole: f64,
    tol: f64,
    depth: u32,
) -> f64 {
    let (a, b) = ends;
    let (fa, fm, fb) = values;
    let m = 0.5 * (a + b);
    let lm = 0.5 * (a + m);
    let rm = 0.5 * (m + b);
    let flm = f(lm);
    let frm = f(rm);
    let left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
    let right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
    let delta = left + right - whole;
    if depth == 0 || delta.abs() <= 15.0 * tol {
        return left + right + delta / 15.0;
    }
    adaptive_simpson(f, (a, m), (fa, flm, fm), left, tol / 2.0, depth - 1)
        + adaptive_simpson(f, (m, b), (fm, frm, fb), right, tol / 2.0, depth - 1)
}

/// `P(T <= t)` for noncentral t by quadrature: with `U ~ chi2(df)`,
/// `P(T <= t) = E[Phi(t sqrt(U/df) - delta)]`. Integrated over `s = sqrt(U)`.
pub fn nct_cdf_quadrature(t: f64, df: f64, delta: f64) -> f64 {
    let normal = Normal::standard();
    let log_norm = (df / 2.0) * std::f64::consts::LN_2 + ln_gamma(df / 2.0);
    let integrand = |s: f64| {
        if s <= 0.0 {
            // Density of s is 2 s^(df-1) e^(-s^2/2) / norm; finite only for df <= 1.
            return if df == 1.0 {
                2.0 * normal.cdf(-delta) * (-log_norm).exp()
            } else {
                0.0
            };
        }
        let u = s * s;
        let log_density = std::f64::consts::LN_2 + (df - 1.0) * s.ln() - u / 2.0 - log_norm;
        normal.cdf(t * (u / df).sqrt() - delta) * log_density.exp()
    };
    let upper = (df + 40.0 * (2.0 * df).sqrt() + 100.0).sqrt();
    let panels = 64;
    let h = upper / panels as f64;
    (0..panels)
        .map(|i| {
            let a = i as f64 * h;
            let b = a + h;
            let (fa, fm, fb) = (integrand(a), integrand(0.5 * (a + b)), integrand(b));
            let whole = h / 6.0 * (fa + 4.0 * fm + fb);
            adaptive_simpson(&integrand, (a, b), (fa, fm, fb), whole, 1e-13, 40)
        })
        .sum()
}

/// Twenty `(t, df, delta)` cases spanning both tails and small to large df.
pub fn nct_grid() -> Vec<(f64, f64, f64)> {
    let ts = [-2.0, 0.5, 1.5, 3.0];
    let dfs = [2.0, 5.0, 15.0, 27.0, 60.0];
    let deltas = [0.0, 0.7, 1.5, 3.0, -1.0];
    let mut out = Vec::new();
    for (i, &t) in ts.iter().enumerate() {
        for (j, &df) in dfs.iter().enumerate() {
            out.push((t, df, deltas[(i + j) % deltas.len()]));
        }
    }
    out
}

/// Rows as printed in a table: each cell is a decimal or fraction string.
pub type PrintedRows = Vec<Vec<&'static str>>;

/// True when `value` displays as `printed` at the printed precision.
pub fn displays_as(value: Ratio, printed: &str) -> bool {
    if printed.contains('/') {
        return oofa_core::io::parse_ratio(printed) == Some(value);
    }
    let decimals = printed.split_once('.').map_or(0, |(_, f)| f.len());
    let scale = Ratio::from_integer(10i64.pow(decimals as u32));
    let rounded = (value * scale).round() / scale;
    oofa_core::io::parse_ratio(printed) == Some(rounded)
}

/// Matches printed rows to generated rows one-to-one (row multisets).
/// Returns the printed rows left unmatched.
pub fn unmatched_rows(generated: &[Vec<Ratio>], printed: &PrintedRows) -> Vec<usize> {
    let mut used = vec![false; generated.len()];
    let mut missing = Vec::new();
    for (i, row) in printed.iter().enumerate() {
        let hit = generated.iter().enumerate().position(|(g, gen)| {
            !used[g]
                && gen.len() == row.len()
                && gen.iter().zip(row).all(|(&v, s)| displays_as(v, s))
        });
        match hit {
            Some(g) => used[g] = true,
            None => missing.push(i),
        }
    }
    missing
}

/// Design rows as ratios: coordinates, PWO signs, then `A` if attached.
pub fn design_rows(design: &oofa_core::Design) -> Vec<Vec<Ratio>> {
    design
        .runs()
        .iter()
        .map(|run| {
            let mut row: Vec<Ratio> = run.point().values().to_vec();
            if let Some(p) = run.pwo() {
                row.extend(p.signs().iter().map(|&s| Ratio::from_integer(s as i64)));
            }
            if let Some(a) = run.amount() {
                row.push(a);
            }
            row
        })
        .collect()
}
