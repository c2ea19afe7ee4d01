use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::Signed;

use super::{gcd, LaurentPolynomial, Var};
use crate::error::{Error, Result};

/// Quotient of Laurent polynomials in lowest terms.
///
/// Canonical form: the gcd of numerator and denominator is a unit, the
/// denominator has lowest exponent 0 and a positive leading coefficient.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RationalFunction {
    num: LaurentPolynomial,
    den: LaurentPolynomial,
}

impl RationalFunction {
    pub fn new(num: LaurentPolynomial, den: LaurentPolynomial) -> Result<Self> {
        if num.var() != den.var() {
            return Err(Error::VarMismatch(num.var(), den.var()));
        }
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if num.is_zero() {
            return Ok(Self::from_poly(num));
        }
        let g = gcd(&num, &den);
        let mut num = num.exact_divide(&g)?;
        let mut den = den.exact_divide(&g)?;
        let lo = den.min_exp().unwrap();
        den = den.shift(-lo);
        num = num.shift(-lo);
        if den.leading_coeff().unwrap().is_negative() {
            den = -den;
            num = -num;
        }
        Ok(Self { num, den })
    }

    pub fn from_poly(p: LaurentPolynomial) -> Self {
        let var = p.var();
        Self {
            num: p,
            den: LaurentPolynomial::one(var),
        }
    }

    pub fn zero(var: Var) -> Self {
        Self::from_poly(LaurentPolynomial::zero(var))
    }

    pub fn numerator(&self) -> &LaurentPolynomial {
        &self.num
    }

    pub fn denominator(&self) -> &LaurentPolynomial {
        &self.den
    }

    pub fn var(&self) -> Var {
        self.num.var()
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    /// The polynomial value when the denominator is 1.
    pub fn as_polynomial(&self) -> Option<&LaurentPolynomial> {
        self.den.is_one().then_some(&self.num)
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        let num = self
            .num
            .try_mul(&other.den)?
            .try_add(&other.num.try_mul(&self.den)?)?;
        Self::new(num, self.den.try_mul(&other.den)?)
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        self.try_add(&-other)
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        Self::new(self.num.try_mul(&other.num)?, self.den.try_mul(&other.den)?)
    }

    pub fn try_div(&self, other: &Self) -> Result<Self> {
        if other.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Self::new(self.num.try_mul(&other.den)?, self.den.try_mul(&other.num)?)
    }
}

impl fmt::Debug for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}) / ({})", self.num, self.den)
    }
}

impl Neg for &RationalFunction {
    type Output = RationalFunction;
    fn neg(self) -> RationalFunction {
        RationalFunction {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

macro_rules! forward_rational {
    ($trait:ident, $method:ident, $try:ident) => {
        impl $trait<&RationalFunction> for &RationalFunction {
            type Output = RationalFunction;
            fn $method(self, rhs: &RationalFunction) -> RationalFunction {
                self.$try(rhs)
                    .expect("variable mismatch in rational arithmetic")
            }
        }
    };
}

forward_rational!(Add, add, try_add);
forward_rational!(Sub, sub, try_sub);
forward_rational!(Mul, mul, try_mul);
