//! JSON wire format.
//!
//! Univariate: `{"var": "A", "terms": [[exponent, "coefficient"], ...]}` with
//! strictly increasing exponents. Bivariate:
//! `{"vars": ["t", "x"], "terms": [[e1, e2, "c"], ...]}` in lexicographic order.
//! Coefficients are decimal strings so arbitrary precision survives the trip.

use std::str::FromStr;

use num_bigint::BigInt;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::{BivariatePolynomial, LaurentPolynomial, Var};
use crate::error::{Error, Result};

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct LaurentJson {
    pub var: Var,
    pub terms: Vec<(i64, String)>,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct BivariateJson {
    pub vars: (Var, Var),
    pub terms: Vec<(i64, i64, String)>,
}

fn parse_coeff(s: &str) -> Result<BigInt> {
    BigInt::from_str(s.trim()).map_err(|e| Error::Json(format!("bad coefficient {s:?}: {e}")))
}

impl From<&LaurentPolynomial> for LaurentJson {
    fn from(p: &LaurentPolynomial) -> Self {
        Self {
            var: p.var(),
            terms: p.terms().map(|(e, c)| (e, c.to_string())).collect(),
        }
    }
}

impl TryFrom<LaurentJson> for LaurentPolynomial {
    type Error = Error;

    fn try_from(j: LaurentJson) -> Result<Self> {
        if j.terms.windows(2).any(|w| w[0].0 >= w[1].0) {
            return Err(Error::Json("exponents must be strictly increasing".into()));
        }
        let terms = j
            .terms
            .iter()
            .map(|(e, c)| parse_coeff(c).map(|c| (*e, c)))
            .collect::<Result<Vec<_>>>()?;
        Ok(LaurentPolynomial::from_terms(j.var, terms))
    }
}

impl From<&BivariatePolynomial> for BivariateJson {
    fn from(p: &BivariatePolynomial) -> Self {
        Self {
            vars: p.vars(),
            terms: p.terms().map(|((a, b), c)| (a, b, c.to_string())).collect(),
        }
    }
}

impl TryFrom<BivariateJson> for BivariatePolynomial {
    type Error = Error;

    fn try_from(j: BivariateJson) -> Result<Self> {
        if j.terms
            .windows(2)
            .any(|w| (w[0].0, w[0].1) >= (w[1].0, w[1].1))
        {
            return Err(Error::Json(
                "exponent pairs must be strictly increasing".into(),
            ));
        }
        let terms = j
            .terms
            .iter()
            .map(|(a, b, c)| parse_coeff(c).map(|c| ((*a, *b), c)))
            .collect::<Result<Vec<_>>>()?;
        Ok(BivariatePolynomial::from_terms(j.vars, terms))
    }
}

/// Serialises a big integer as a decimal string.
pub fn serialize_bigint<S: Serializer>(b: &BigInt, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&b.to_string())
}

/// Serialises big integers as decimal strings.
pub fn serialize_bigints<S: Serializer>(
    v: &[BigInt],
    s: S,
) -> std::result::Result<S::Ok, S::Error> {
    s.collect_seq(v.iter().map(|b| b.to_string()))
}

impl Serialize for LaurentPolynomial {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        LaurentJson::from(self).serialize(s)
    }
}

impl<'de> Deserialize<'de> for LaurentPolynomial {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let j = LaurentJson::deserialize(d)?;
        LaurentPolynomial::try_from(j).map_err(serde::de::Error::custom)
    }
}

impl Serialize for BivariatePolynomial {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        BivariateJson::from(self).serialize(s)
    }
}

impl<'de> Deserialize<'de> for BivariatePolynomial {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let j = BivariateJson::deserialize(d)?;
        BivariatePolynomial::try_from(j).map_err(serde::de::Error::custom)
    }
}

impl LaurentPolynomial {
    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("polynomial serialisation cannot fail")
    }

    pub fn from_json(s: &str) -> Result<Self> {
        serde_json::from_str(s).map_err(|e| Error::Json(e.to_string()))
    }
}

impl BivariatePolynomial {
    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("polynomial serialisation cannot fail")
    }

    pub fn from_json(s: &str) -> Result<Self> {
        serde_json::from_str(s).map_err(|e| Error::Json(e.to_string()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn unknot_bracket_format() {
        assert_eq!(
            LaurentPolynomial::one(Var::A).to_json(),
            r#"{"var":"A","terms":[[0,"1"]]}"#
        );
    }

    #[test]
    fn parses_mahler_example() {
        let p = LaurentPolynomial::from_json(r#"{"var":"t","terms":[[0,"-1"],[1,"-1"],[3,"1"]]}"#)
            .unwrap();
        assert_eq!(
            p,
            LaurentPolynomial::from_terms(Var::T, [(0, -1), (1, -1), (3, 1)])
        );
    }

    #[test]
    fn rejects_unordered_exponents() {
        assert!(LaurentPolynomial::from_json(r#"{"var":"t","terms":[[1,"1"],[0,"1"]]}"#).is_err());
        assert!(LaurentPolynomial::from_json(r#"{"var":"t","terms":[[0,"x"]]}"#).is_err());
    }

    #[test]
    fn bivariate_format() {
        let p = BivariatePolynomial::from_terms((Var::T, Var::X), [((0, 0), 1), ((1, 1), -1)]);
        let s = p.to_json();
        assert_eq!(s, r#"{"vars":["t","x"],"terms":[[0,0,"1"],[1,1,"-1"]]}"#);
        assert_eq!(BivariatePolynomial::from_json(&s).unwrap(), p);
    }

    proptest! {
        #[test]
        fn round_trip(terms in prop::collection::vec((-40i64..40, -1_000_000_000_000i64..1_000_000_000_000), 0..12)) {
            let p = LaurentPolynomial::from_terms(Var::A, terms).shift(0);
            let big = p.scale(&BigInt::from(10).pow(30));
            prop_assert_eq!(LaurentPolynomial::from_json(&big.to_json()).unwrap(), big);
        }
    }
}
