//! Noncentral t distribution function.
//!
//! Series of Lenth (Applied Statistics algorithm AS 243): the cdf is a
//! Poisson-weighted mix of incomplete beta functions, summed until the
//! remaining Poisson mass bounds the truncation error below `1e-12`.

use statrs::distribution::{Continuous, ContinuousCDF, StudentsT};
use statrs::function::beta::beta_reg;
use statrs::function::erf::erfc;
use statrs::function::gamma::ln_gamma;

const ERRMAX: f64 = 1e-12;
const ITRMAX: usize = 2000;

fn std_normal_cdf(x: f64) -> f64 {
    0.5 * erfc(-x / std::f64::consts::SQRT_2)
}

/// `P(T <= t)` for `T` noncentral t with `df` degrees of freedom and
/// noncentrality `delta`.
pub fn nct_cdf(t: f64, df: f64, delta: f64) -> f64 {
    if t.is_nan() || df.is_nan() || delta.is_nan() || df <= 0.0 {
        return f64::NAN;
    }
    if t == f64::INFINITY {
        return 1.0;
    }
    if t == f64::NEG_INFINITY {
        return 0.0;
    }
    let (tt, del, negated) = if t >= 0.0 {
        (t, delta, false)
    } else {
        (-t, -delta, true)
    };

    let lambda = del * del;
    let mut p = 0.5 * (-0.5 * lambda).exp();
    if p == 0.0 {
        // Poisson weights underflow; use the normal approximation.
        let s = 1.0 / (4.0 * df);
        let z = (tt * (1.0 - s) - del) / (1.0 + tt * tt * 2.0 * s).sqrt();
        let lower = std_normal_cdf(z);
        return if negated { 1.0 - lower } else { lower };
    }

    let x = tt * tt / (tt * tt + df);
    let mut tnc = 0.0;
    if x > 0.0 {
        let mut q = (2.0 / std::f64::consts::PI).sqrt() * p * del;
        let mut s = 0.5 - p;
        if s < 1e-7 {
            s = -0.5 * (-0.5 * lambda).exp_m1();
        }
        let mut a = 0.5;
        let b = 0.5 * df;
        let rxb = (df / (tt * tt + df)).powf(b);
        let albeta = ln_gamma(a) + ln_gamma(b) - ln_gamma(a + b);
        let mut xodd = beta_reg(a, b, x);
        let mut godd = 2.0 * rxb * (a * x.ln() - albeta).exp();
        let bx = b * x;
        let mut xeven = if bx < f64::EPSILON { bx } else { 1.0 - rxb };
        let mut geven = bx * rxb;
        tnc = p * xodd + q * xeven;
        for it in 1..=ITRMAX {
            a += 1.0;
            xodd -= godd;
            xeven -= geven;
            godd *= x * (a + b - 1.0) / a;
            geven *= x * (a + b - 0.5) / (a + 0.5);
            let k = it as f64;
            p *= lambda / (2.0 * k);
            q *= lambda / (2.0 * k + 1.0);
            tnc += p * xodd + q * xeven;
            s -= p;
            if s <= 0.0 && it > 1 {
                break;
            }
            let errbd = 2.0 * s * (xodd - godd);
            if errbd.abs() < ERRMAX {
                break;
            }
        }
    }
    tnc += std_normal_cdf(-del);
    let lower = tnc.clamp(0.0, 1.0);
    if negated {
        1.0 - lower
    } else {
        lower
    }
}

/// Quantile of the central t distribution, polished with Newton steps.
pub fn t_quantile(prob: f64, df: f64) -> f64 {
    let dist = StudentsT::new(0.0, 1.0, df).expect("positive degrees of freedom");
    let mut x = dist.inverse_cdf(prob);
    for _ in 0..4 {
        let step = (dist.cdf(x) - prob) / dist.pdf(x);
        if !step.is_finite() {
            break;
        }
        x -= step;
        if step.abs() < 1e-15 * x.abs().max(1.0) {
            break;
        }
    }
    x
}
