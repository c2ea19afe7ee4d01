use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_complex::Complex64;
use num_traits::{ToPrimitive, Zero};

use super::{LaurentPolynomial, Var};
use crate::error::{Error, Result};

/// Laurent polynomial in two variables, e.g. `P(t, x)` or `Q(A, x)`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BivariatePolynomial {
    vars: (Var, Var),
    terms: BTreeMap<(i64, i64), BigInt>,
}

impl BivariatePolynomial {
    pub fn zero(vars: (Var, Var)) -> Self {
        Self {
            vars,
            terms: BTreeMap::new(),
        }
    }

    pub fn from_terms<I, C>(vars: (Var, Var), terms: I) -> Self
    where
        I: IntoIterator<Item = ((i64, i64), C)>,
        C: Into<BigInt>,
    {
        let mut p = Self::zero(vars);
        for (e, c) in terms {
            p.add_term(e, c.into());
        }
        p
    }

    /// `Σ y^k c_k(first)` from univariate slices in the first variable.
    pub fn from_slices<'a>(
        vars: (Var, Var),
        slices: impl IntoIterator<Item = (i64, &'a LaurentPolynomial)>,
    ) -> Result<Self> {
        let mut p = Self::zero(vars);
        for (k, c) in slices {
            if c.var() != vars.0 {
                return Err(Error::VarMismatch(vars.0, c.var()));
            }
            for (e, v) in c.terms() {
                p.add_term((e, k), v.clone());
            }
        }
        Ok(p)
    }

    /// Embeds a univariate polynomial as the `y^0` slice.
    pub fn from_univariate(p: &LaurentPolynomial, second: Var) -> Self {
        Self::from_terms(
            (p.var(), second),
            p.terms().map(|(e, c)| ((e, 0), c.clone())),
        )
    }

    fn add_term(&mut self, e: (i64, i64), c: BigInt) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(e).or_default();
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&e);
        }
    }

    pub fn vars(&self) -> (Var, Var) {
        self.vars
    }

    pub fn terms(&self) -> impl Iterator<Item = ((i64, i64), &BigInt)> {
        self.terms.iter().map(|(e, c)| (*e, c))
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, e: (i64, i64)) -> BigInt {
        self.terms.get(&e).cloned().unwrap_or_default()
    }

    /// Coefficient of `y^k` as a polynomial in the first variable.
    pub fn slice(&self, k: i64) -> LaurentPolynomial {
        LaurentPolynomial::from_terms(
            self.vars.0,
            self.terms
                .iter()
                .filter(|((_, b), _)| *b == k)
                .map(|((a, _), c)| (*a, c.clone())),
        )
    }

    /// Distinct exponents of the second variable, ascending.
    pub fn second_exponents(&self) -> Vec<i64> {
        let mut v: Vec<i64> = self.terms.keys().map(|(_, b)| *b).collect();
        v.sort_unstable();
        v.dedup();
        v
    }

    fn check_vars(&self, other: &Self) -> Result<()> {
        if self.vars.0 != other.vars.0 {
            return Err(Error::VarMismatch(self.vars.0, other.vars.0));
        }
        if self.vars.1 != other.vars.1 {
            return Err(Error::VarMismatch(self.vars.1, other.vars.1));
        }
        Ok(())
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.check_vars(other)?;
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(*e, c.clone());
        }
        Ok(out)
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        self.try_add(&-other)
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        self.check_vars(other)?;
        let mut out = Self::zero(self.vars);
        for ((a1, b1), c1) in &self.terms {
            for ((a2, b2), c2) in &other.terms {
                out.add_term((a1 + a2, b1 + b2), c1 * c2);
            }
        }
        Ok(out)
    }

    /// Multiplies by a univariate polynomial in the first variable.
    pub fn mul_first(&self, p: &LaurentPolynomial) -> Result<Self> {
        if p.var() != self.vars.0 {
            return Err(Error::VarMismatch(self.vars.0, p.var()));
        }
        self.try_mul(&Self::from_univariate(p, self.vars.1))
    }

    /// Substitutes `first ↦ target^a`, `second ↦ target^b`.
    pub fn substitute_monomial(&self, target: Var, a: i64, b: i64) -> Result<LaurentPolynomial> {
        if a == 0 || b == 0 {
            return Err(Error::InvalidArgument(
                "substitution powers must be nonzero".into(),
            ));
        }
        Ok(LaurentPolynomial::from_terms(
            target,
            self.terms
                .iter()
                .map(|((e1, e2), c)| (e1 * a + e2 * b, c.clone())),
        ))
    }

    /// The Boyd–Lawton specialisation `f(z, z^d)` in the first variable.
    pub fn specialize_second(&self, d: i64) -> Result<LaurentPolynomial> {
        self.substitute_monomial(self.vars.0, 1, d)
    }

    /// Replaces the first variable by `target^power`, keeping the second.
    pub fn substitute_first(&self, target: Var, power: i64) -> Result<Self> {
        if power == 0 {
            return Err(Error::InvalidArgument(
                "substitution power must be nonzero".into(),
            ));
        }
        Ok(Self::from_terms(
            (target, self.vars.1),
            self.terms
                .iter()
                .map(|((e1, e2), c)| ((e1 * power, *e2), c.clone())),
        ))
    }

    pub fn evaluate(&self, z1: Complex64, z2: Complex64) -> Complex64 {
        self.terms
            .iter()
            .map(|((e1, e2), c)| {
                c.to_f64().unwrap_or(f64::NAN) * z1.powi(*e1 as i32) * z2.powi(*e2 as i32)
            })
            .sum()
    }
}

impl fmt::Debug for BivariatePolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|((a, b), c)| format!("{}*{}^{}*{}^{}", c, self.vars.0, a, self.vars.1, b))
            .collect();
        f.write_str(&parts.join(" + "))
    }
}

impl Neg for &BivariatePolynomial {
    type Output = BivariatePolynomial;
    fn neg(self) -> BivariatePolynomial {
        BivariatePolynomial {
            vars: self.vars,
            terms: self.terms.iter().map(|(e, c)| (*e, -c)).collect(),
        }
    }
}

macro_rules! forward_bivariate {
    ($trait:ident, $method:ident, $try:ident) => {
        impl $trait<&BivariatePolynomial> for &BivariatePolynomial {
            type Output = BivariatePolynomial;
            fn $method(self, rhs: &BivariatePolynomial) -> BivariatePolynomial {
                self.$try(rhs)
                    .expect("variable mismatch in bivariate arithmetic")
            }
        }
    };
}

forward_bivariate!(Add, add, try_add);
forward_bivariate!(Sub, sub, try_sub);
forward_bivariate!(Mul, mul, try_mul);

#[cfg(test)]
mod tests {
    use super::*;

    const TX: (Var, Var) = (Var::T, Var::X);

    #[test]
    fn specialize_collapses_to_univariate() {
        // 1 - x t with x -> t^3
        let f = BivariatePolynomial::from_terms(TX, [((0, 0), 1), ((1, 1), -1)]);
        let g = f.specialize_second(3).unwrap();
        assert_eq!(g, LaurentPolynomial::from_terms(Var::T, [(0, 1), (4, -1)]));
    }

    #[test]
    fn product_and_slices() {
        let a = BivariatePolynomial::from_terms(TX, [((0, 0), 1), ((1, 0), 1)]);
        let b = BivariatePolynomial::from_terms(TX, [((0, 0), 1), ((0, 1), 1)]);
        let p = &a * &b;
        assert_eq!(p.num_terms(), 4);
        assert_eq!(
            p.slice(1),
            LaurentPolynomial::from_terms(Var::T, [(0, 1), (1, 1)])
        );
        assert_eq!(p.second_exponents(), vec![0, 1]);
        assert!((&p - &p).is_zero());
    }

    #[test]
    fn mismatched_vars() {
        let a = BivariatePolynomial::zero(TX);
        let b = BivariatePolynomial::zero((Var::A, Var::X));
        assert!(a.try_add(&b).is_err());
    }
}
