//! Colored Jones polynomials of braid-closure knots by 0-framed cabling.

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::laurent::{binomial, LaurentPolynomial, Var};
use crate::skein::{bracket, full_twist_letters, jones, BraidWord, MAX_STRANDS};
use crate::twist::TwistFamily;

/// An `r`-cable of a knot braid, corrected to framing 0.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CabledBraid {
    pub original: BraidWord,
    pub r: usize,
    /// Blackboard cable followed by the framing correction.
    pub word: BraidWord,
    /// Full twists on the first cable's `r` strands appended to the word;
    /// equals minus the writhe of the original.
    pub framing_correction: i64,
}

/// Letters moving block `i + 1` across block `i` (blocks of width `r`,
/// 1-based), as a positive crossing of the two blocks.
fn block_crossing(i: usize, r: usize, sign: i32) -> Vec<i32> {
    let s = (i - 1) * r;
    let mut w = Vec::with_capacity(r * r);
    for p in 0..r {
        w.extend((s + 1 + p..=s + r + p).rev().map(|g| g as i32));
    }
    if sign < 0 {
        w.reverse();
        w.iter_mut().for_each(|g| *g = -*g);
    }
    w
}

/// `(Δ²_r)^k` on strands `1..r`.
fn block_twists(r: usize, k: i64) -> Vec<i32> {
    if r < 2 || k == 0 {
        return Vec::new();
    }
    let mut one = full_twist_letters(1, r);
    if k < 0 {
        one.reverse();
        one.iter_mut().for_each(|g| *g = -*g);
    }
    one.repeat(k.unsigned_abs() as usize)
}

fn check_capacity(strands: usize, r: usize) -> Result<()> {
    let total = strands * r;
    if total > MAX_STRANDS {
        return Err(Error::Capacity {
            what: "cabled strands",
            value: total,
            limit: MAX_STRANDS,
        });
    }
    Ok(())
}

/// Blackboard `r`-cable of every letter, without framing correction.
fn blackboard_cable(b: &BraidWord, r: usize) -> Vec<i32> {
    b.letters()
        .iter()
        .flat_map(|&g| block_crossing(g.unsigned_abs() as usize, r, g.signum()))
        .collect()
}

/// The 0-framed `r`-cable of a knot closure.
pub fn cable_braid(b: &BraidWord, r: usize) -> Result<CabledBraid> {
    if r == 0 {
        return Err(Error::InvalidArgument(
            "cable multiplicity must be >= 1".into(),
        ));
    }
    if !b.is_knot() {
        return Err(Error::NotAKnot(b.components()));
    }
    check_capacity(b.strands(), r)?;
    let correction = -b.writhe();
    let mut letters = blackboard_cable(b, r);
    letters.extend(block_twists(r, correction));
    Ok(CabledBraid {
        original: b.clone(),
        r,
        word: BraidWord::new(b.strands() * r, letters)?,
        framing_correction: correction,
    })
}

/// `A^{-2} + A^2`, the image of `t^{1/2} + t^{-1/2}`.
fn quantum_two() -> LaurentPolynomial {
    LaurentPolynomial::from_terms(Var::A, [(-2, 1), (2, 1)])
}

/// `J_2 = (t^{1/2} + t^{-1/2}) V` of the 0-framed `r`-cable. The empty
/// cable (`r = 0`) has `V = δ^{-1}` like any unlink, so `J_2 = -1`.
fn j2_of_cable(b: &BraidWord, r: usize) -> Result<LaurentPolynomial> {
    if r == 0 {
        return Ok(LaurentPolynomial::constant(Var::A, -1));
    }
    Ok(&quantum_two() * &jones(&cable_braid(b, r)?.word)?)
}

/// `J_N = Σ_{j=0}^{[(N-1)/2]} (-1)^j C(N-1-j, j) J_2(L^{(N-1-2j)})` in `A`.
pub fn colored_jones(b: &BraidWord, n: usize) -> Result<LaurentPolynomial> {
    if n < 2 {
        return Err(Error::InvalidArgument(format!(
            "color N must be >= 2, got {n}"
        )));
    }
    if !b.is_knot() {
        return Err(Error::NotAKnot(b.components()));
    }
    check_capacity(b.strands(), n - 1)?;
    let terms: Vec<LaurentPolynomial> = (0..=(n - 1) / 2)
        .into_par_iter()
        .map(|j| {
            let c = binomial((n - 1 - j) as u64, j as u64);
            let c = if j % 2 == 0 { c } else { -c };
            Ok(j2_of_cable(b, n - 1 - 2 * j)?.scale(&c))
        })
        .collect::<Result<_>>()?;
    let mut out = LaurentPolynomial::zero(Var::A);
    for t in &terms {
        out += t;
    }
    Ok(out)
}

/// Checks that cabling commutes with twisting.
///
/// Twisting the 0-framed cable of `L` by `Δ²_{rn}` `m` times gives the
/// cable of `L_m` whose framing is `m n²` rather than 0 (each twist links
/// every pair of cable components `n²` more times), so the two brackets are
/// compared with that framing.
pub fn belt_trick_check(family: &TwistFamily, r: usize, m: u32) -> Result<bool> {
    let base = &family.base;
    if !base.is_knot() {
        return Err(Error::NotAKnot(base.components()));
    }
    check_capacity(base.strands(), r)?;
    let strands = base.strands() * r;
    let n = family.region.width;
    let position = family.insertion.unwrap_or(base.len()) * r * r;

    let cabled = cable_braid(base, r)?;
    let big_twist = full_twist_letters((family.region.first - 1) * r + 1, n * r).repeat(m as usize);
    let lhs = cabled.word.insert(position, &big_twist)?;

    let twisted = family.word(m);
    let mut letters = blackboard_cable(&twisted, r);
    letters.extend(block_twists(
        r,
        -twisted.writhe() + m as i64 * (n * n) as i64,
    ));
    let rhs = BraidWord::new(strands, letters)?;
    Ok(bracket(&lhs)? == bracket(&rhs)?)
}

/// `J_N(L_m)` for each `m` in `ms`.
pub fn colored_twist_series(
    family: &TwistFamily,
    n: usize,
    ms: &[u32],
) -> Result<Vec<LaurentPolynomial>> {
    ms.par_iter()
        .map(|&m| colored_jones(&family.word(m), n))
        .collect()
}
