use num_bigint::BigInt;
use num_traits::Signed;
use serde::Serialize;

use super::{TwistExponents, TwistFamily};
use crate::error::{Error, Result};
use crate::laurent::{BivariatePolynomial, LaurentPolynomial, RationalFunction, Var};
use crate::mahler::{mahler_boyd_lawton, BoydLawtonConfig, MahlerResult};

fn a_mono(e: i64) -> LaurentPolynomial {
    LaurentPolynomial::monomial(Var::A, e, 1)
}

/// `1 + A^{-4}`, the image of `1 + t`.
fn one_plus_t() -> LaurentPolynomial {
    LaurentPolynomial::from_terms(Var::A, [(-4, 1), (0, 1)])
}

/// Coefficients (ascending in `S`) of `∏ (S - λ)`.
fn shift_polynomial(roots: &[LaurentPolynomial]) -> Vec<LaurentPolynomial> {
    let mut e = vec![a_mono(0)];
    for lambda in roots {
        let mut next = vec![LaurentPolynomial::zero(Var::A); e.len() + 1];
        for (j, c) in e.iter().enumerate() {
            next[j + 1] += c;
            next[j] -= &(c * lambda);
        }
        e = next;
    }
    e
}

/// Exact limit data of a twist family.
///
/// With `n` the region width, `⟨L_m⟩ = A^{n(n-1)m} Σ_i A^{-4 k_i m} c_i(A)`.
/// `q` holds `Σ_i x^{k_i} (1 + A^{-4}) c_i(A)` divided by the unit
/// `sign · A^{unit_exponent}`.
#[derive(Clone, Debug, Serialize)]
pub struct LimitPolynomial {
    pub exponents: TwistExponents,
    pub framing: i64,
    #[serde(skip)]
    pub slices: Vec<RationalFunction>,
    pub q: BivariatePolynomial,
    pub unit_exponent: i64,
    pub unit_sign: i8,
    pub held_out: Vec<u32>,
}

impl LimitPolynomial {
    /// `(1 + A^{-4}) c_i` as exact Laurent polynomials.
    pub fn cleared_slices(&self) -> Vec<LaurentPolynomial> {
        self.exponents
            .k
            .iter()
            .map(|&k| {
                self.q
                    .slice(k)
                    .shift(self.unit_exponent)
                    .scale(&BigInt::from(self.unit_sign))
            })
            .collect()
    }

    /// `Q(A, A^{-4m})` with the unit restored.
    pub fn q_at(&self, m: u32) -> LaurentPolynomial {
        let mut out = LaurentPolynomial::zero(Var::A);
        for (k, s) in self.exponents.k.iter().zip(self.cleared_slices()) {
            out.add_shifted(&s, -4 * k * m as i64, false);
        }
        out
    }

    /// Reconstructs `⟨L_m⟩`.
    pub fn bracket_at(&self, m: u32) -> Result<LaurentPolynomial> {
        Ok(self
            .q_at(m)
            .exact_divide(&one_plus_t())?
            .shift(self.framing * m as i64))
    }

    /// `q` rewritten in `(t, x)` with `t = A^{-4}`.
    pub fn p_tx(&self) -> Result<BivariatePolynomial> {
        if self.q.terms().any(|((a, _), _)| a % 4 != 0) {
            return Err(Error::InvalidArgument(
                "A-exponents of the limit are not a single class mod 4".into(),
            ));
        }
        Ok(BivariatePolynomial::from_terms(
            (Var::T, Var::X),
            self.q.terms().map(|((a, x), c)| ((-a / 4, x), c.clone())),
        ))
    }
}

/// Solves for the `c_i` from `⟨L_0⟩ … ⟨L_{[n/2]}⟩` and validates at `held_out`.
pub fn recover_limit_polynomial_with(
    family: &TwistFamily,
    held_out: &[u32],
) -> Result<LimitPolynomial> {
    let exponents = family.exponents();
    let count = exponents.len();
    let framing = family.region.framing();
    let max_m = held_out
        .iter()
        .copied()
        .max()
        .unwrap_or(0)
        .max(count as u32 - 1);
    let brackets = family.brackets(max_m)?;

    // b'_m = A^{-framing m} ⟨L_m⟩ = Σ_i X_i^m c_i with X_i = A^{-4 k_i}
    let reduced: Vec<LaurentPolynomial> = (0..count)
        .map(|m| brackets[m].shift(-framing * m as i64))
        .collect();
    let nodes: Vec<LaurentPolynomial> = exponents.k.iter().map(|&k| a_mono(-4 * k)).collect();

    let mut slices = Vec::with_capacity(count);
    let mut cleared = Vec::with_capacity(count);
    for i in 0..count {
        let others: Vec<LaurentPolynomial> = nodes
            .iter()
            .enumerate()
            .filter(|&(j, _)| j != i)
            .map(|(_, x)| x.clone())
            .collect();
        let e = shift_polynomial(&others);
        let mut numerator = LaurentPolynomial::zero(Var::A);
        for (c, b) in e.iter().zip(&reduced) {
            numerator += &(c * b);
        }
        let mut denominator = a_mono(0);
        for x in &others {
            denominator = &denominator * &(&nodes[i] - x);
        }
        if denominator.is_zero() {
            return Err(Error::SingularSystem);
        }
        cleared.push((&numerator * &one_plus_t()).exact_divide(&denominator)?);
        slices.push(RationalFunction::new(numerator, denominator)?);
    }

    let raw = BivariatePolynomial::from_slices(
        (Var::A, Var::X),
        exponents.k.iter().copied().zip(cleared.iter()),
    )?;
    let unit_exponent = raw
        .terms()
        .map(|((a, _), _)| a)
        .min()
        .ok_or(Error::ZeroPolynomial)?;
    let first = raw.terms().next().unwrap().1;
    let unit_sign: i8 = if first.is_negative() { -1 } else { 1 };
    let q = BivariatePolynomial::from_terms(
        (Var::A, Var::X),
        raw.terms()
            .map(|((a, x), c)| ((a - unit_exponent, x), c * unit_sign as i64)),
    );
    let limit = LimitPolynomial {
        exponents,
        framing,
        slices,
        q,
        unit_exponent,
        unit_sign,
        held_out: held_out.to_vec(),
    };
    for &m in held_out {
        if limit.bracket_at(m)? != brackets[m as usize] {
            return Err(Error::HeldOutMismatch(m as i64));
        }
    }
    Ok(limit)
}

/// Recovery with held-out checks at `m = [n/2] + 2` and `[n/2] + 5`.
pub fn recover_limit_polynomial(family: &TwistFamily) -> Result<LimitPolynomial> {
    let h = (family.width() / 2) as u32;
    recover_limit_polynomial_with(family, &[h + 2, h + 5])
}

/// Checks that `∏_i (S - A^{n(n-1) - 4k_i})` annihilates consecutive brackets.
///
/// Needs at least `[n/2] + 2` terms; every full window is tested.
pub fn check_recurrence(brackets: &[LaurentPolynomial], width: usize) -> Result<bool> {
    annihilated(brackets, width, (width * (width - 1)) as i64)
}

/// Checks that `∏_i (S - A^{-4k_i})` annihilates `A^{-n(n-1)m} ⟨L_m⟩`.
pub fn check_reduced_recurrence(brackets: &[LaurentPolynomial], width: usize) -> Result<bool> {
    let framing = (width * (width - 1)) as i64;
    let reduced: Vec<LaurentPolynomial> = brackets
        .iter()
        .enumerate()
        .map(|(m, b)| b.shift(-framing * m as i64))
        .collect();
    annihilated(&reduced, width, 0)
}

fn annihilated(seq: &[LaurentPolynomial], width: usize, framing: i64) -> Result<bool> {
    let exponents = TwistExponents::new(width);
    let lambdas: Vec<LaurentPolynomial> = exponents
        .k
        .iter()
        .map(|&k| a_mono(framing - 4 * k))
        .collect();
    let e = shift_polynomial(&lambdas);
    if seq.len() < e.len() {
        return Err(Error::InvalidArgument(format!(
            "recurrence of order {} needs at least {} terms",
            lambdas.len(),
            e.len()
        )));
    }
    for window in seq.windows(e.len()) {
        let mut acc = LaurentPolynomial::zero(Var::A);
        for (c, b) in e.iter().zip(window) {
            acc += &(c * b);
        }
        if !acc.is_zero() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Mahler measure of the limit polynomial `P(t, x)` by Boyd–Lawton.
pub fn limit_mahler(limit: &LimitPolynomial, config: &BoydLawtonConfig) -> Result<MahlerResult> {
    mahler_boyd_lawton(&limit.p_tx()?, config)
}
