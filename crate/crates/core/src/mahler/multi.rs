use std::f64::consts::TAU;

use num_complex::Complex64;
use num_traits::ToPrimitive;
use rayon::prelude::*;

use super::{mahler_univariate, Diagnostics, MahlerMethod, MahlerResult};
use crate::error::{Error, Result};
use crate::laurent::BivariatePolynomial;
use crate::roots::DEGREE_CAP;

#[derive(Clone, Debug)]
pub struct QuadratureConfig {
    pub initial_grid: usize,
    pub max_grid: usize,
    /// Stop once successive estimates of `M` differ by less than this.
    pub tolerance: f64,
}

impl Default for QuadratureConfig {
    fn default() -> Self {
        Self {
            initial_grid: 64,
            max_grid: 2048,
            tolerance: 1e-3,
        }
    }
}

#[derive(Clone, Debug)]
pub struct BoydLawtonConfig {
    pub schedule: Vec<i64>,
    pub tolerance: f64,
}

impl Default for BoydLawtonConfig {
    fn default() -> Self {
        Self {
            schedule: vec![16, 32, 64, 128, 256],
            tolerance: 1e-4,
        }
    }
}

/// Mean of `log|f|` over an `n × n` midpoint grid on the torus.
fn grid_log_mean(f: &BivariatePolynomial, n: usize) -> (f64, u64) {
    let terms: Vec<(i64, i64, f64)> = f
        .terms()
        .map(|((a, b), c)| (a, b, c.to_f64().unwrap_or(f64::NAN)))
        .collect();
    let xs: Vec<i64> = f.second_exponents();
    let (sum, excluded) = (0..n)
        .into_par_iter()
        .map(|j| {
            let th1 = TAU * (j as f64 + 0.5) / n as f64;
            // collapse the first variable: g(y) = Σ_b (Σ_a c z^a) y^b
            let slice: Vec<(i64, Complex64)> = xs
                .iter()
                .map(|&b| {
                    let v = terms
                        .iter()
                        .filter(|t| t.1 == b)
                        .map(|&(a, _, c)| Complex64::from_polar(c, th1 * a as f64))
                        .sum();
                    (b, v)
                })
                .collect();
            let mut s = 0.0;
            let mut skipped = 0u64;
            for k in 0..n {
                let th2 = TAU * (k as f64 + 0.5) / n as f64;
                let v: Complex64 = slice
                    .iter()
                    .map(|&(b, c)| c * Complex64::from_polar(1.0, th2 * b as f64))
                    .sum();
                let m = v.norm();
                if m > 0.0 && m.is_finite() {
                    s += m.ln();
                } else {
                    skipped += 1;
                }
            }
            (s, skipped)
        })
        .reduce(|| (0.0, 0), |a, b| (a.0 + b.0, a.1 + b.1));
    let used = (n * n) as u64 - excluded;
    (
        if used == 0 {
            f64::NEG_INFINITY
        } else {
            sum / used as f64
        },
        excluded,
    )
}

/// `exp` of the torus mean of `log|f|`, refining the grid by doubling.
pub fn mahler_quadrature(
    f: &BivariatePolynomial,
    config: &QuadratureConfig,
) -> Result<MahlerResult> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let mut diagnostics = Diagnostics::default();
    let mut n = config.initial_grid.max(2);
    let mut prev: Option<f64> = None;
    let mut value = f64::NAN;
    let mut error_estimate = f64::INFINITY;
    let mut converged = false;
    while n <= config.max_grid {
        let (log_mean, excluded) = grid_log_mean(f, n);
        value = log_mean.exp();
        diagnostics.history.push((n as u64, value));
        diagnostics.excluded_points = excluded;
        if let Some(p) = prev {
            error_estimate = (value - p).abs();
            if error_estimate < config.tolerance {
                converged = true;
                break;
            }
        }
        prev = Some(value);
        n *= 2;
    }
    if diagnostics.excluded_points > 0 {
        diagnostics
            .notes
            .push("grid points on the zero set were skipped; they form a measure-zero set".into());
    }
    Ok(MahlerResult {
        value,
        method: MahlerMethod::Quadrature,
        error_estimate,
        converged,
        diagnostics,
    })
}

/// `M(f(z, z^d))` along an increasing schedule of `d`.
///
/// Entries whose specialisation exceeds the root finder's degree cap end
/// the sweep; the result is then flagged unless it had already settled.
pub fn mahler_boyd_lawton(
    f: &BivariatePolynomial,
    config: &BoydLawtonConfig,
) -> Result<MahlerResult> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let mut diagnostics = Diagnostics::default();
    let mut value = f64::NAN;
    let mut error_estimate = f64::INFINITY;
    let mut converged = false;
    let mut max_residual: f64 = 0.0;
    for &d in &config.schedule {
        let g = f.specialize_second(d)?;
        if g.span() as usize > DEGREE_CAP {
            diagnostics.notes.push(format!(
                "schedule stopped before d = {d}: degree {} exceeds cap",
                g.span()
            ));
            break;
        }
        let m = mahler_univariate(&g)?;
        max_residual = max_residual.max(m.diagnostics.max_residual.unwrap_or(0.0));
        if let Some(&(_, p)) = diagnostics.history.last() {
            error_estimate = (m.value - p).abs();
        }
        value = m.value;
        diagnostics.history.push((d as u64, value));
        if error_estimate < config.tolerance {
            converged = true;
            break;
        }
    }
    if diagnostics.history.is_empty() {
        return Err(Error::DegreeCap {
            degree: f.specialize_second(config.schedule[0])?.span() as usize,
            cap: DEGREE_CAP,
        });
    }
    if diagnostics.history.len() == 1 && f.second_exponents().len() <= 1 {
        // no dependence on the second variable: every specialisation agrees
        converged = true;
        error_estimate = 0.0;
    }
    diagnostics.max_residual = Some(max_residual);
    Ok(MahlerResult {
        value,
        method: MahlerMethod::BoydLawton,
        error_estimate,
        converged,
        diagnostics,
    })
}
