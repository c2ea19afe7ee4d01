//! Mahler measures: Jensen's formula for one variable, torus quadrature and
//! Boyd–Lawton specialisation for two.

mod multi;

pub use multi::{mahler_boyd_lawton, mahler_quadrature, BoydLawtonConfig, QuadratureConfig};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::laurent::LaurentPolynomial;
use crate::roots::find_roots;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum MahlerMethod {
    JensenRoots,
    Quadrature,
    BoydLawton,
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct Diagnostics {
    /// Largest Newton residual among the roots used.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub max_residual: Option<f64>,
    /// `(grid size or d, value)` for each refinement step.
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub history: Vec<(u64, f64)>,
    /// Grid points skipped because `f` vanished there (a measure-zero set).
    #[serde(skip_serializing_if = "is_zero")]
    pub excluded_points: u64,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
}

fn is_zero(v: &u64) -> bool {
    *v == 0
}

#[derive(Clone, Debug, Serialize)]
pub struct MahlerResult {
    pub value: f64,
    pub method: MahlerMethod,
    pub error_estimate: f64,
    /// False when roots failed certification or a refinement did not settle.
    pub converged: bool,
    pub diagnostics: Diagnostics,
}

/// `M(f) = |a_n| ∏ max(1, |α_i|)` from the roots of `f`.
pub fn mahler_univariate(f: &LaurentPolynomial) -> Result<MahlerResult> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let rs = find_roots(f)?;
    let value = rs.jensen_product();
    // d log M = Σ d|α|/|α| over roots that are (or may be) outside the disc
    let rel: f64 = rs
        .roots
        .iter()
        .filter(|r| r.value.norm() + r.residual > 1.0)
        .map(|r| r.residual / r.value.norm().max(1.0))
        .sum();
    let error_estimate = value * (rel + f64::EPSILON * (rs.degree as f64 + 1.0));
    Ok(MahlerResult {
        value,
        method: MahlerMethod::JensenRoots,
        error_estimate,
        converged: rs.certified,
        diagnostics: Diagnostics {
            max_residual: Some(rs.max_residual()),
            ..Default::default()
        },
    })
}

/// Shorthand for the value of [`mahler_univariate`].
pub fn mahler_measure(f: &LaurentPolynomial) -> Result<f64> {
    Ok(mahler_univariate(f)?.value)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::laurent::Var;
    use proptest::prelude::*;

    fn t(terms: &[(i64, i64)]) -> LaurentPolynomial {
        LaurentPolynomial::from_terms(Var::T, terms.iter().copied())
    }

    #[test]
    fn monomials_and_constants() {
        assert_eq!(mahler_measure(&t(&[(7, 1)])).unwrap(), 1.0);
        assert_eq!(mahler_measure(&t(&[(-3, -1)])).unwrap(), 1.0);
        assert_eq!(mahler_measure(&t(&[(0, -5)])).unwrap(), 5.0);
        assert!(mahler_measure(&t(&[])).is_err());
    }

    #[test]
    fn lehmer_style_values() {
        let m = mahler_univariate(&t(&[(0, -1), (1, -1), (3, 1)])).unwrap();
        assert!((m.value - 1.324718).abs() < 1e-6);
        assert!(m.converged);
        // cyclotomic
        assert!((mahler_measure(&t(&[(0, 1), (1, 1), (2, 1)])).unwrap() - 1.0).abs() < 1e-12);
        // 2t - 1 has its root inside: M = 2
        assert!((mahler_measure(&t(&[(0, -1), (1, 2)])).unwrap() - 2.0).abs() < 1e-12);
    }

    fn arb(max_deg: usize) -> impl Strategy<Value = LaurentPolynomial> {
        (prop::collection::vec(-9i64..=9, 1..=max_deg + 1), -5i64..5)
            .prop_map(|(c, lo)| LaurentPolynomial::from_coeffs(Var::T, lo, c))
            .prop_filter("nonzero", |p| !p.is_zero())
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(40))]

        #[test]
        fn multiplicative(f in arb(20), g in arb(20)) {
            let mf = mahler_measure(&f).unwrap();
            let mg = mahler_measure(&g).unwrap();
            let mfg = mahler_measure(&(&f * &g)).unwrap();
            prop_assert!((mfg - mf * mg).abs() <= 1e-6 * mfg.max(1.0), "{} vs {}", mfg, mf * mg);
        }

        #[test]
        fn substitution_invariant(f in arb(15), n in 2i64..=4) {
            let m = mahler_measure(&f).unwrap();
            let fn_ = f.substitute_monomial(Var::T, n).unwrap();
            prop_assert!((mahler_measure(&fn_).unwrap() - m).abs() <= 1e-6 * m);
            let inv = f.substitute_monomial(Var::T, -1).unwrap();
            prop_assert!((mahler_measure(&inv).unwrap() - m).abs() <= 1e-6 * m);
        }

        #[test]
        fn unit_invariant(f in arb(15), k in -6i64..6, neg in any::<bool>()) {
            let m = mahler_measure(&f).unwrap();
            let g = f.shift(k);
            let g = if neg { -g } else { g };
            prop_assert_eq!(mahler_measure(&g).unwrap(), m);
        }
    }
}
