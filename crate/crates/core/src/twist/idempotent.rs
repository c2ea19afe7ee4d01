use serde::Serialize;

use crate::error::{Error, Result};
use crate::laurent::{binomial, delta, LaurentPolynomial, RationalFunction, Var};

/// Trace of a minimal idempotent in the `i`-th block of `TL_n`.
#[derive(Clone, Debug, Serialize)]
pub struct IdempotentTrace {
    pub index: usize,
    #[serde(skip)]
    pub trace: RationalFunction,
    /// Number of such idempotents in a decomposition of `1_n`: `C(n,i) - C(n,i-1)`.
    pub multiplicity: u64,
}

/// `tr(p_i) = tr(1_n) τ^i P_{n-2i}(τ)` with `τ = δ^{-2}`, `tr(1_n) = δ^{n-1}`,
/// `P_0 = P_1 = 1` and `P_{k+1} = P_k - τ P_{k-1}`.
pub fn idempotent_traces(n: usize) -> Result<Vec<IdempotentTrace>> {
    if n < 2 {
        return Err(Error::InvalidArgument(
            "idempotent traces need n >= 2".into(),
        ));
    }
    let one = RationalFunction::from_poly(LaurentPolynomial::one(Var::A));
    let d = delta();
    let tau = RationalFunction::new(LaurentPolynomial::one(Var::A), &d * &d)?;
    let mut p = vec![one.clone(), one.clone()];
    for k in 1..n {
        let next = p[k].try_sub(&tau.try_mul(&p[k - 1])?)?;
        p.push(next);
    }
    let tr_one = RationalFunction::from_poly(d.pow(n as u32 - 1));
    let mut tau_pow = one;
    let mut out = Vec::new();
    for i in 0..=n / 2 {
        let trace = tr_one.try_mul(&tau_pow)?.try_mul(&p[n - 2 * i])?;
        let lower = if i == 0 {
            0.into()
        } else {
            binomial(n as u64, i as u64 - 1)
        };
        let multiplicity = (binomial(n as u64, i as u64) - lower)
            .try_into()
            .unwrap_or(u64::MAX);
        out.push(IdempotentTrace {
            index: i,
            trace,
            multiplicity,
        });
        tau_pow = tau_pow.try_mul(&tau)?;
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rf(num: LaurentPolynomial, den: LaurentPolynomial) -> RationalFunction {
        RationalFunction::new(num, den).unwrap()
    }

    fn d_pow(k: u32) -> LaurentPolynomial {
        delta().pow(k)
    }

    fn c(v: i64) -> LaurentPolynomial {
        LaurentPolynomial::constant(Var::A, v)
    }

    #[test]
    fn low_rank_values() {
        let t2 = idempotent_traces(2).unwrap();
        assert_eq!(t2[0].trace, rf(&d_pow(2) - &c(1), delta()));
        let t3 = idempotent_traces(3).unwrap();
        assert_eq!(t3[0].trace.as_polynomial(), Some(&(&d_pow(2) - &c(2))));
        let t4 = idempotent_traces(4).unwrap();
        let num = &(&d_pow(4) - &(&d_pow(2) * &c(3))) + &c(1);
        assert_eq!(t4[0].trace, rf(num, delta()));
        // middle block for even n is tr(1_n) τ^{n/2}
        assert_eq!(t4[2].trace, rf(c(1), delta()));
    }

    #[test]
    fn weighted_sum_is_trace_of_identity() {
        for n in 2..=8 {
            let mut sum = RationalFunction::zero(Var::A);
            for t in idempotent_traces(n).unwrap() {
                let w = RationalFunction::from_poly(c(t.multiplicity as i64));
                sum = sum.try_add(&t.trace.try_mul(&w).unwrap()).unwrap();
            }
            assert_eq!(sum.as_polynomial(), Some(&d_pow(n as u32 - 1)), "n = {n}");
        }
    }

    #[test]
    fn multiplicities_count_dimension() {
        // Σ m_i² = C_n
        let catalan = [2u64, 5, 14, 42, 132, 429, 1430];
        for (n, &cn) in (2..=8).zip(&catalan) {
            let s: u64 = idempotent_traces(n)
                .unwrap()
                .iter()
                .map(|t| t.multiplicity.pow(2))
                .sum();
            assert_eq!(s, cn);
        }
    }
}
