//! Temperley–Lieb algebra, the Kauffman braid representation and bracket.

mod basis;
mod braid;
mod matching;
mod vector;

pub use basis::{TlBasis, MAX_STRANDS};
pub use braid::{parse_braid, BraidWord};
pub use matching::PlanarMatching;
pub use vector::{tl_multiply, TlVector};

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::laurent::{LaurentPolynomial, Var};

/// Kauffman bracket of the braid closure, normalised so the unknot is 1.
pub fn bracket(word: &BraidWord) -> Result<LaurentPolynomial> {
    Ok(TlVector::from_braid(word)?.closure_trace())
}

/// `(-A)^{-3w}` times a bracket.
pub fn writhe_normalize(bracket: &LaurentPolynomial, writhe: i64) -> LaurentPolynomial {
    let sign = if writhe % 2 == 0 { 1 } else { -1 };
    bracket.shift(-3 * writhe).scale(&BigInt::from(sign))
}

/// Jones polynomial of the closure in the variable `A`, with `t = A^{-4}`.
pub fn jones(word: &BraidWord) -> Result<LaurentPolynomial> {
    Ok(writhe_normalize(&bracket(word)?, word.writhe()))
}

/// Rewrites a polynomial in `A` as one in `t = A^{-4}`.
///
/// Fails when some exponent is not a multiple of 4 (even-component links
/// carry a `t^{1/2}` factor; strip it with [`t_coefficients`]).
pub fn a_to_t(p: &LaurentPolynomial) -> Result<LaurentPolynomial> {
    if p.var() != Var::A {
        return Err(Error::VarMismatch(Var::A, p.var()));
    }
    if p.terms().any(|(e, _)| e % 4 != 0) {
        return Err(Error::InvalidArgument(
            "exponents are not multiples of 4".into(),
        ));
    }
    Ok(LaurentPolynomial::from_terms(
        Var::T,
        p.terms().map(|(e, c)| (-e / 4, c.clone())),
    ))
}

/// `t = A^{-4}` as a polynomial in `A`.
pub fn t_to_a(p: &LaurentPolynomial) -> Result<LaurentPolynomial> {
    p.substitute_monomial(Var::A, -4)
}

/// Coefficients in ascending powers of `t`, after dropping the leading monomial.
pub fn t_coefficients(p: &LaurentPolynomial) -> Result<Vec<BigInt>> {
    let p = match p.var() {
        Var::A => {
            let lo = p.min_exp().ok_or(Error::ZeroPolynomial)?;
            if p.terms().any(|(e, _)| (e - lo) % 4 != 0) {
                return Err(Error::InvalidArgument(
                    "exponent gaps are not multiples of 4".into(),
                ));
            }
            a_to_t(&p.shift(-lo))?
        }
        _ => p.clone(),
    };
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    Ok(p.coefficient_vector())
}

/// The full twist `Δ² = (σ_s … σ_{s+w-2})^w` on strands `s..s+w-1`.
pub fn full_twist_letters(first: usize, width: usize) -> Vec<i32> {
    let row: Vec<i32> = (first..first + width.saturating_sub(1))
        .map(|i| i as i32)
        .collect();
    row.repeat(width)
}
