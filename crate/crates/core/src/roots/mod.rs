//! Simultaneous root finding for integer Laurent polynomials.

use std::f64::consts::TAU;

use num_complex::Complex64;
use num_traits::ToPrimitive;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::laurent::{LaurentPolynomial, Var};

mod squarefree;

use squarefree::squarefree_factors;

/// Largest degree (after stripping monomials) the root finder accepts.
pub const DEGREE_CAP: usize = 2000;
/// Per-root bound on `|f/f'|` for a root to count as certified.
pub const RESIDUAL_THRESHOLD: f64 = 1e-10;

const MAX_ITERATIONS: usize = 1000;

#[derive(Clone, Copy, Debug, Serialize)]
pub struct Root {
    #[serde(serialize_with = "ser_complex")]
    pub value: Complex64,
    /// Newton step length `|g(z)/g'(z)|` for the squarefree factor `g` owning the root.
    pub residual: f64,
    pub multiplicity: usize,
}

fn ser_complex<S: serde::Serializer>(z: &Complex64, s: S) -> std::result::Result<S::Ok, S::Error> {
    use serde::ser::SerializeTuple;
    let mut t = s.serialize_tuple(2)?;
    t.serialize_element(&z.re)?;
    t.serialize_element(&z.im)?;
    t.end()
}

#[derive(Clone, Debug, Serialize)]
pub struct RootSet {
    pub var: Var,
    pub degree: usize,
    /// `|a_n|` of the stripped polynomial.
    pub leading_abs: f64,
    /// Distinct roots; multiplicities sum to `degree`.
    pub roots: Vec<Root>,
    /// Whether every residual is below [`RESIDUAL_THRESHOLD`].
    pub certified: bool,
}

impl RootSet {
    pub fn max_residual(&self) -> f64 {
        self.roots.iter().map(|r| r.residual).fold(0.0, f64::max)
    }

    /// Root moduli, each repeated by multiplicity.
    pub fn moduli(&self) -> Vec<f64> {
        self.roots
            .iter()
            .flat_map(|r| std::iter::repeat_n(r.value.norm(), r.multiplicity))
            .collect()
    }

    /// Jensen's product `|a_n| ∏ max(1, |α|)`.
    pub fn jensen_product(&self) -> f64 {
        self.leading_abs
            * self
                .roots
                .iter()
                .map(|r| r.value.norm().max(1.0).powi(r.multiplicity as i32))
                .product::<f64>()
    }
}

/// Dense polynomial with a cheap `f/f'` evaluation, stable for `|z| > 1`.
struct Dense {
    c: Vec<f64>, // ascending
}

impl Dense {
    fn degree(&self) -> usize {
        self.c.len() - 1
    }

    /// `(f(z), f'(z))` by Horner.
    fn horner(c: &[f64], z: Complex64) -> (Complex64, Complex64) {
        let mut p = Complex64::new(0.0, 0.0);
        let mut dp = Complex64::new(0.0, 0.0);
        for &a in c.iter().rev() {
            dp = dp * z + p;
            p = p * z + a;
        }
        (p, dp)
    }

    /// Newton correction `f(z)/f'(z)`.
    fn newton(&self, z: Complex64) -> Complex64 {
        if z.norm() <= 1.0 {
            let (p, dp) = Self::horner(&self.c, z);
            return p / dp;
        }
        // f(z) = z^n q(1/z) with q the reversed polynomial
        let y = z.inv();
        let rev: Vec<f64> = self.c.iter().rev().copied().collect();
        let (q, dq) = Self::horner(&rev, y);
        let n = self.degree() as f64;
        z * q / (q * n - y * dq)
    }
}

fn newton_checked(d: &Dense, z: Complex64) -> Complex64 {
    let w = d.newton(z);
    if w.is_finite() {
        w
    } else {
        Complex64::new(0.0, 0.0)
    }
}

fn aberth(d: &Dense) -> Vec<Root> {
    let n = d.degree();
    let c0 = d.c[0].abs();
    let cn = d.c[n].abs();
    let radius = (c0 / cn).powf(1.0 / n as f64);
    let mut z: Vec<Complex64> = (0..n)
        .map(|k| Complex64::from_polar(radius, TAU * k as f64 / n as f64 + 0.4))
        .collect();
    let mut done = vec![false; n];
    for _ in 0..MAX_ITERATIONS {
        let mut moved = false;
        for k in 0..n {
            if done[k] {
                continue;
            }
            let ratio = newton_checked(d, z[k]);
            let mut sum = Complex64::new(0.0, 0.0);
            for j in 0..n {
                if j != k {
                    let diff = z[k] - z[j];
                    if diff.norm() > 0.0 {
                        sum += diff.inv();
                    }
                }
            }
            let step = ratio / (Complex64::new(1.0, 0.0) - ratio * sum);
            let step = if step.is_finite() { step } else { ratio };
            z[k] -= step;
            if step.norm() <= 1e-15 * z[k].norm().max(1e-300) {
                done[k] = true;
            } else {
                moved = true;
            }
        }
        if !moved {
            break;
        }
    }
    z.into_iter().map(|z0| polish(d, z0)).collect()
}

/// Newton steps while they keep shrinking the residual.
fn polish(d: &Dense, z0: Complex64) -> Root {
    let mut cur = z0;
    let mut res = newton_checked(d, cur).norm();
    for _ in 0..5 {
        let next = cur - newton_checked(d, cur);
        let r = newton_checked(d, next).norm();
        if r >= res {
            break;
        }
        cur = next;
        res = r;
    }
    Root {
        value: cur,
        residual: res,
        multiplicity: 1,
    }
}

/// Roots of a squarefree polynomial `g(z^stride)` with `g(0) != 0`.
fn simple_roots(g: &LaurentPolynomial, stride: usize) -> Vec<Root> {
    let (_, gc) = g.dense_f64();
    if gc.len() == 1 {
        return Vec::new();
    }
    let base = aberth(&Dense { c: gc });
    if stride == 1 {
        return base;
    }
    let expanded = Dense {
        c: g.substitute_monomial(g.var(), stride as i64)
            .unwrap()
            .dense_f64()
            .1,
    };
    base.iter()
        .flat_map(|r| {
            let rho = r.value.norm().powf(1.0 / stride as f64);
            let arg = r.value.arg() / stride as f64;
            (0..stride)
                .map(move |k| Complex64::from_polar(rho, arg + TAU * k as f64 / stride as f64))
        })
        .map(|z| polish(&expanded, z))
        .collect()
}

/// All roots of `f` after removing its monomial factor.
///
/// Repeated factors are split off exactly first, so the iteration only sees
/// simple roots. Exponent strides are compressed: the roots of `g(z^s)` are
/// the `s`-th roots of the roots of `g`.
pub fn find_roots(f: &LaurentPolynomial) -> Result<RootSet> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let degree = f.span() as usize;
    if degree > DEGREE_CAP {
        return Err(Error::DegreeCap {
            degree,
            cap: DEGREE_CAP,
        });
    }
    let leading_abs = f
        .leading_coeff()
        .unwrap()
        .to_f64()
        .unwrap_or(f64::INFINITY)
        .abs();
    let (_, stride, g) = f.compress();
    let mut roots = Vec::new();
    for (factor, multiplicity) in squarefree_factors(&g) {
        for mut r in simple_roots(&factor, stride as usize) {
            r.multiplicity = multiplicity;
            roots.push(r);
        }
    }
    let certified = roots.iter().all(|r| r.residual < RESIDUAL_THRESHOLD);
    Ok(RootSet {
        var: f.var(),
        degree,
        leading_abs,
        roots,
        certified,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct UnitCircleStats {
    /// Roots with `|α| - 1 >= ε`.
    pub outside: usize,
    /// Roots with `1 - |β| >= ε`.
    pub inside: usize,
    pub distinct: usize,
    /// `∏ |α|` over roots strictly outside the closed unit disc.
    pub outside_product: f64,
}

/// Off-annulus counts, distinct-root count and the outside product.
///
/// Counts run over distinct roots. Two roots are identified when they lie
/// within twice the larger of their residuals, transitively.
pub fn unit_circle_stats(rs: &RootSet, epsilon: f64) -> UnitCircleStats {
    let outside = rs
        .roots
        .iter()
        .filter(|r| r.value.norm() - 1.0 >= epsilon)
        .count();
    let inside = rs
        .roots
        .iter()
        .filter(|r| 1.0 - r.value.norm() >= epsilon)
        .count();
    let outside_product = rs
        .roots
        .iter()
        .filter(|r| r.value.norm() > 1.0)
        .map(|r| r.value.norm().powi(r.multiplicity as i32))
        .product::<f64>();
    UnitCircleStats {
        outside,
        inside,
        distinct: count_clusters(&rs.roots),
        outside_product,
    }
}

fn count_clusters(roots: &[Root]) -> usize {
    let n = roots.len();
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(p: &mut [usize], mut i: usize) -> usize {
        while p[i] != i {
            p[i] = p[p[i]];
            i = p[i];
        }
        i
    }
    for i in 0..n {
        for j in i + 1..n {
            let radius = 2.0 * roots[i].residual.max(roots[j].residual);
            if (roots[i].value - roots[j].value).norm() <= radius {
                let (a, b) = (find(&mut parent, i), find(&mut parent, j));
                parent[a] = b;
            }
        }
    }
    (0..n).filter(|&i| find(&mut parent, i) == i).count()
}
