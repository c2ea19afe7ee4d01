#![allow(dead_code)]

use std::path::PathBuf;

use jones_twist::skein::{a_to_t, t_coefficients, writhe_normalize};
use jones_twist::twist::{TwistFamily, TwistRegion};
use jones_twist::{parse_braid, BraidWord, LaurentPolynomial, Var};
use num_bigint::BigInt;
use serde::Deserialize;

#[derive(Deserialize)]
pub struct SeriesRow {
    pub m: u32,
    pub span: i64,
    pub mahler: f64,
    pub coeffs: Vec<i64>,
}

#[derive(Deserialize)]
pub struct Series {
    pub braid: String,
    pub region: String,
    pub rows: Vec<SeriesRow>,
}

impl Series {
    pub fn family(&self) -> TwistFamily {
        let region: TwistRegion = self.region.parse().unwrap();
        TwistFamily::at_end(parse_braid(&self.braid).unwrap(), region).unwrap()
    }

    pub fn row(&self, m: u32) -> &SeriesRow {
        self.rows.iter().find(|r| r.m == m).unwrap()
    }
}

#[derive(Deserialize)]
pub struct NamedBraid {
    pub name: String,
    pub word: String,
    pub components: usize,
}

impl NamedBraid {
    pub fn braid(&self) -> BraidWord {
        parse_braid(&self.word).unwrap()
    }
}

#[derive(Deserialize)]
pub struct PretzelRow {
    pub params: Vec<i64>,
    pub low_degree: i64,
    pub coeffs: Vec<i64>,
}

fn fixture_path(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("fixtures")
        .join(name)
}

pub fn load<T: for<'de> Deserialize<'de>>(name: &str) -> T {
    let text = std::fs::read_to_string(fixture_path(name)).unwrap();
    serde_json::from_str(&text).unwrap()
}

pub fn partial_twist() -> Series {
    load("partial_twist.json")
}

pub fn full_twist() -> Series {
    load("full_twist.json")
}

pub fn braids() -> Vec<NamedBraid> {
    load("braids.json")
}

pub fn pretzels() -> Vec<PretzelRow> {
    load("pretzels.json")
}

pub fn big(v: &[i64]) -> Vec<BigInt> {
    v.iter().map(|&x| x.into()).collect()
}

pub fn t_poly(low: i64, coeffs: &[i64]) -> LaurentPolynomial {
    LaurentPolynomial::from_coeffs(Var::T, low, coeffs.iter().copied())
}

/// Jones polynomial of `L_m` in `t`.
pub fn jones_t(family: &TwistFamily, bracket: &LaurentPolynomial, m: u32) -> LaurentPolynomial {
    a_to_t(&writhe_normalize(bracket, family.writhe(m))).unwrap()
}

/// Coefficient vector of a Jones polynomial given in `A`.
pub fn coeffs_of(jones: &LaurentPolynomial) -> Vec<BigInt> {
    t_coefficients(jones).unwrap()
}
