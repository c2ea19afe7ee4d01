//! Exact Laurent polynomials over arbitrary-precision integers.
//!
//! [`LaurentPolynomial`] is the value type for every bracket, Jones and
//! colored Jones polynomial in the crate. Terms live in a sparse
//! exponent-to-coefficient map with zero coefficients never stored, so two
//! equal polynomials always have identical maps.

mod bivariate;
mod gcd;
mod json;
mod rational;

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_complex::Complex64;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub use bivariate::BivariatePolynomial;
pub use gcd::gcd;
pub use json::{serialize_bigint, serialize_bigints, BivariateJson, LaurentJson};
pub use rational::RationalFunction;

/// Variable tag carried by every polynomial.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Var {
    #[serde(rename = "A")]
    A,
    #[serde(rename = "t")]
    T,
    #[serde(rename = "x")]
    X,
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Var::A => "A",
            Var::T => "t",
            Var::X => "x",
        })
    }
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct LaurentPolynomial {
    var: Var,
    terms: BTreeMap<i64, BigInt>,
}

/// Result of stripping a polynomial down to its `≐` representative.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UnitNormalization {
    /// Lowest exponent 0, lowest coefficient positive.
    pub normal: LaurentPolynomial,
    /// Exponent of the extracted monomial.
    pub monomial: i64,
    /// Extracted sign, `1` or `-1`.
    pub sign: i8,
}

impl LaurentPolynomial {
    pub fn zero(var: Var) -> Self {
        Self {
            var,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(var: Var) -> Self {
        Self::monomial(var, 0, 1)
    }

    pub fn constant(var: Var, c: impl Into<BigInt>) -> Self {
        Self::monomial(var, 0, c)
    }

    pub fn monomial(var: Var, exp: i64, c: impl Into<BigInt>) -> Self {
        let c = c.into();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(exp, c);
        }
        Self { var, terms }
    }

    /// Builds a polynomial from `(exponent, coefficient)` pairs; repeated
    /// exponents are summed.
    pub fn from_terms<I, C>(var: Var, terms: I) -> Self
    where
        I: IntoIterator<Item = (i64, C)>,
        C: Into<BigInt>,
    {
        let mut p = Self::zero(var);
        for (e, c) in terms {
            p.add_term(e, c.into());
        }
        p
    }

    /// Dense coefficients starting at exponent `low`.
    pub fn from_coeffs<C: Into<BigInt>>(
        var: Var,
        low: i64,
        coeffs: impl IntoIterator<Item = C>,
    ) -> Self {
        Self::from_terms(
            var,
            coeffs
                .into_iter()
                .enumerate()
                .map(|(i, c)| (low + i as i64, c)),
        )
    }

    pub fn var(&self) -> Var {
        self.var
    }

    /// Same terms, different variable tag.
    pub fn with_var(mut self, var: Var) -> Self {
        self.var = var;
        self
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (i64, &BigInt)> + ExactSizeIterator {
        self.terms.iter().map(|(e, c)| (*e, c))
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, exp: i64) -> BigInt {
        self.terms.get(&exp).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.get(&0).is_some_and(|c| c.is_one())
    }

    pub fn min_exp(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    pub fn max_exp(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    /// `max_exp - min_exp`, zero for the zero polynomial.
    pub fn span(&self) -> i64 {
        match (self.min_exp(), self.max_exp()) {
            (Some(lo), Some(hi)) => hi - lo,
            _ => 0,
        }
    }

    pub fn leading_coeff(&self) -> Option<&BigInt> {
        self.terms.values().next_back()
    }

    pub fn trailing_coeff(&self) -> Option<&BigInt> {
        self.terms.values().next()
    }

    /// True when the polynomial is `±var^k`.
    pub fn is_unit(&self) -> bool {
        self.terms.len() == 1 && self.terms.values().next().is_some_and(|c| c.abs().is_one())
    }

    fn check_var(&self, other: &Self) -> Result<()> {
        if self.var == other.var {
            Ok(())
        } else {
            Err(Error::VarMismatch(self.var, other.var))
        }
    }

    fn add_term(&mut self, exp: i64, c: BigInt) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(exp) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    /// `self += sign * var^shift * other`, the inner step of every skein sweep.
    pub fn add_shifted(&mut self, other: &Self, shift: i64, negate: bool) {
        debug_assert_eq!(self.var, other.var);
        for (e, c) in &other.terms {
            let key = e + shift;
            match self.terms.entry(key) {
                std::collections::btree_map::Entry::Vacant(v) => {
                    v.insert(if negate { -c } else { c.clone() });
                }
                std::collections::btree_map::Entry::Occupied(mut o) => {
                    if negate {
                        *o.get_mut() -= c;
                    } else {
                        *o.get_mut() += c;
                    }
                    if o.get().is_zero() {
                        o.remove();
                    }
                }
            }
        }
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.check_var(other)?;
        let mut out = self.clone();
        out.add_shifted(other, 0, false);
        Ok(out)
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        self.check_var(other)?;
        let mut out = self.clone();
        out.add_shifted(other, 0, true);
        Ok(out)
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        self.check_var(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Self::zero(self.var));
        }
        let lo = self.min_exp().unwrap() + other.min_exp().unwrap();
        let hi = self.max_exp().unwrap() + other.max_exp().unwrap();
        let mut acc = vec![BigInt::zero(); (hi - lo + 1) as usize];
        let rhs: Vec<(i64, &BigInt)> = other.terms().collect();
        for (ea, ca) in &self.terms {
            for &(eb, cb) in &rhs {
                acc[(ea + eb - lo) as usize] += ca * cb;
            }
        }
        Ok(Self::from_coeffs(self.var, lo, acc))
    }

    /// Multiplication by `var^k`.
    pub fn shift(&self, k: i64) -> Self {
        Self {
            var: self.var,
            terms: self.terms.iter().map(|(e, c)| (e + k, c.clone())).collect(),
        }
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return Self::zero(self.var);
        }
        Self {
            var: self.var,
            terms: self.terms.iter().map(|(e, v)| (*e, v * c)).collect(),
        }
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut result = Self::one(self.var);
        let mut base = self.clone();
        let mut n = n;
        while n > 0 {
            if n & 1 == 1 {
                result = &result * &base;
            }
            n >>= 1;
            if n > 0 {
                base = &base * &base;
            }
        }
        result
    }

    /// Substitutes `var ↦ target^power`.
    pub fn substitute_monomial(&self, target: Var, power: i64) -> Result<Self> {
        if power == 0 {
            return Err(Error::InvalidArgument(
                "substitution power must be nonzero".into(),
            ));
        }
        Ok(Self {
            var: target,
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (e * power, c.clone()))
                .collect(),
        })
    }

    /// Exact quotient `self / divisor` in the Laurent ring.
    pub fn exact_divide(&self, divisor: &Self) -> Result<Self> {
        self.check_var(divisor)?;
        if divisor.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if self.is_zero() {
            return Ok(Self::zero(self.var));
        }
        let (f_lo, f) = self.dense();
        let (g_lo, g) = divisor.dense();
        let q = dense_exact_div(&f, &g).ok_or(Error::NonExactDivision)?;
        Ok(Self::from_coeffs(self.var, f_lo - g_lo, q))
    }

    /// Dense coefficients from the lowest exponent upward.
    pub fn dense(&self) -> (i64, Vec<BigInt>) {
        let Some(lo) = self.min_exp() else {
            return (0, Vec::new());
        };
        let hi = self.max_exp().unwrap();
        let mut v = vec![BigInt::zero(); (hi - lo + 1) as usize];
        for (e, c) in &self.terms {
            v[(e - lo) as usize] = c.clone();
        }
        (lo, v)
    }

    /// Coefficient vector from the lowest to the highest exponent.
    pub fn coefficient_vector(&self) -> Vec<BigInt> {
        self.dense().1
    }

    /// Strips to lowest exponent 0 with a positive lowest coefficient; the
    /// three outputs reconstruct the input as `sign * var^monomial * normal`.
    pub fn normalize_up_to_unit(&self) -> Result<UnitNormalization> {
        let lo = self.min_exp().ok_or(Error::ZeroPolynomial)?;
        let sign: i8 = if self.trailing_coeff().unwrap().is_negative() {
            -1
        } else {
            1
        };
        let mut normal = self.shift(-lo);
        if sign < 0 {
            normal = -normal;
        }
        Ok(UnitNormalization {
            normal,
            monomial: lo,
            sign,
        })
    }

    /// `f(var^-1)`.
    pub fn reversed(&self) -> Self {
        Self {
            var: self.var,
            terms: self.terms.iter().map(|(e, c)| (-e, c.clone())).collect(),
        }
    }

    /// The `≐` representative, optionally identifying `f(t)` with `f(1/t)`.
    pub fn normal_form(&self, allow_reversal: bool) -> Result<Self> {
        let a = self.normalize_up_to_unit()?.normal;
        if !allow_reversal {
            return Ok(a);
        }
        let b = self.reversed().normalize_up_to_unit()?.normal;
        let key = |p: &Self| {
            p.terms
                .iter()
                .map(|(e, c)| (*e, c.clone()))
                .collect::<Vec<_>>()
        };
        Ok(if key(&a) <= key(&b) { a } else { b })
    }

    /// Equality up to sign, monomial and (optionally) `t ↦ 1/t`.
    pub fn equivalent(&self, other: &Self, allow_reversal: bool) -> bool {
        if self.is_zero() || other.is_zero() {
            return self.is_zero() && other.is_zero();
        }
        match (
            self.normal_form(allow_reversal),
            other.normal_form(allow_reversal),
        ) {
            (Ok(a), Ok(b)) => a.terms == b.terms,
            _ => false,
        }
    }

    /// Sum of absolute values of the coefficients.
    pub fn l1_norm(&self) -> BigInt {
        self.terms.values().map(|c| c.abs()).sum()
    }

    /// Greatest common divisor of the exponent differences (0 for monomials).
    pub fn exponent_stride(&self) -> i64 {
        let Some(lo) = self.min_exp() else { return 0 };
        self.terms.keys().fold(0i64, |g, e| g.gcd(&(e - lo)))
    }

    /// Writes `f = var^lo * g(var^stride)` and returns `(lo, stride, g)`.
    pub fn compress(&self) -> (i64, i64, Self) {
        let Some(lo) = self.min_exp() else {
            return (0, 1, self.clone());
        };
        let stride = self.exponent_stride().max(1);
        let g = Self {
            var: self.var,
            terms: self
                .terms
                .iter()
                .map(|(e, c)| ((e - lo) / stride, c.clone()))
                .collect(),
        };
        (lo, stride, g)
    }

    /// Numeric evaluation by Horner's rule.
    pub fn evaluate(&self, z: Complex64) -> Result<Complex64> {
        let Some(lo) = self.min_exp() else {
            return Ok(Complex64::zero());
        };
        if z == Complex64::zero() {
            if lo < 0 {
                return Err(Error::EvaluateAtZero);
            }
            return Ok(Complex64::new(
                self.coeff(0).to_f64().unwrap_or(f64::NAN),
                0.0,
            ));
        }
        let hi = self.max_exp().unwrap();
        let mut acc = Complex64::zero();
        let mut prev = hi;
        for (e, c) in self.terms.iter().rev() {
            acc *= z.powi((prev - e) as i32);
            acc += c.to_f64().unwrap_or(f64::NAN);
            prev = *e;
        }
        acc *= z.powi(prev as i32);
        Ok(acc)
    }

    /// Coefficients as `f64` from the lowest exponent upward.
    pub fn dense_f64(&self) -> (i64, Vec<f64>) {
        let (lo, v) = self.dense();
        (
            lo,
            v.iter().map(|c| c.to_f64().unwrap_or(f64::NAN)).collect(),
        )
    }
}

/// Exact division of dense ascending coefficient vectors; `None` if inexact.
pub(crate) fn dense_exact_div(f: &[BigInt], g: &[BigInt]) -> Option<Vec<BigInt>> {
    let g = trim(g);
    let f = trim(f);
    if g.is_empty() {
        return None;
    }
    if f.is_empty() {
        return Some(Vec::new());
    }
    if f.len() < g.len() {
        return None;
    }
    let mut rem: Vec<BigInt> = f.to_vec();
    let dg = g.len() - 1;
    let lead = &g[dg];
    let mut q = vec![BigInt::zero(); f.len() - dg];
    for i in (0..q.len()).rev() {
        let top = &rem[i + dg];
        if top.is_zero() {
            continue;
        }
        let (quot, r) = top.div_rem(lead);
        if !r.is_zero() {
            return None;
        }
        for (j, gj) in g.iter().enumerate() {
            if !gj.is_zero() {
                rem[i + j] -= &quot * gj;
            }
        }
        q[i] = quot;
    }
    if rem.iter().all(|c| c.is_zero()) {
        Some(q)
    } else {
        None
    }
}

fn trim(v: &[BigInt]) -> &[BigInt] {
    let mut end = v.len();
    while end > 0 && v[end - 1].is_zero() {
        end -= 1;
    }
    &v[..end]
}

impl fmt::Debug for LaurentPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl fmt::Display for LaurentPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (e, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            let mag = c.abs();
            if i == 0 {
                if neg {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if neg { " - " } else { " + " })?;
            }
            match (*e, mag.is_one()) {
                (0, _) => write!(f, "{}", mag)?,
                (1, true) => write!(f, "{}", self.var)?,
                (1, false) => write!(f, "{}*{}", mag, self.var)?,
                (e, true) => write!(f, "{}^{}", self.var, e)?,
                (e, false) => write!(f, "{}*{}^{}", mag, self.var, e)?,
            }
        }
        Ok(())
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident, $try:ident) => {
        impl $trait<&LaurentPolynomial> for &LaurentPolynomial {
            type Output = LaurentPolynomial;
            /// Panics on a variable mismatch; use the `try_` form to recover.
            fn $method(self, rhs: &LaurentPolynomial) -> LaurentPolynomial {
                self.$try(rhs)
                    .expect("variable mismatch in Laurent arithmetic")
            }
        }
        impl $trait<LaurentPolynomial> for LaurentPolynomial {
            type Output = LaurentPolynomial;
            fn $method(self, rhs: LaurentPolynomial) -> LaurentPolynomial {
                (&self).$method(&rhs)
            }
        }
        impl $trait<&LaurentPolynomial> for LaurentPolynomial {
            type Output = LaurentPolynomial;
            fn $method(self, rhs: &LaurentPolynomial) -> LaurentPolynomial {
                (&self).$method(rhs)
            }
        }
    };
}

forward_binop!(Add, add, try_add);
forward_binop!(Sub, sub, try_sub);
forward_binop!(Mul, mul, try_mul);

impl AddAssign<&LaurentPolynomial> for LaurentPolynomial {
    fn add_assign(&mut self, rhs: &LaurentPolynomial) {
        assert_eq!(self.var, rhs.var, "variable mismatch in Laurent arithmetic");
        self.add_shifted(rhs, 0, false);
    }
}

impl SubAssign<&LaurentPolynomial> for LaurentPolynomial {
    fn sub_assign(&mut self, rhs: &LaurentPolynomial) {
        assert_eq!(self.var, rhs.var, "variable mismatch in Laurent arithmetic");
        self.add_shifted(rhs, 0, true);
    }
}

impl Neg for LaurentPolynomial {
    type Output = LaurentPolynomial;
    fn neg(mut self) -> LaurentPolynomial {
        for c in self.terms.values_mut() {
            *c = -std::mem::take(c);
        }
        self
    }
}

impl Neg for &LaurentPolynomial {
    type Output = LaurentPolynomial;
    fn neg(self) -> LaurentPolynomial {
        -self.clone()
    }
}

/// `δ = -A² - A⁻²`, the value of a removed loop.
pub fn delta() -> LaurentPolynomial {
    LaurentPolynomial::from_terms(Var::A, [(2, -1), (-2, -1)])
}

/// Binomial coefficient as a big integer.
pub fn binomial(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}
