//! Polynomial gcd over the integers by primitive pseudo-remainder sequences.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::LaurentPolynomial;

/// Gcd in `Z[var^±1]`, normalised to lowest exponent 0 and positive leading
/// coefficient. `gcd(0, 0) = 0`.
pub fn gcd(f: &LaurentPolynomial, g: &LaurentPolynomial) -> LaurentPolynomial {
    assert_eq!(f.var(), g.var(), "variable mismatch in gcd");
    let var = f.var();
    if f.is_zero() && g.is_zero() {
        return LaurentPolynomial::zero(var);
    }
    if f.is_zero() || g.is_zero() {
        let h = if f.is_zero() { g } else { f };
        return make_positive(h.shift(-h.min_exp().unwrap()));
    }
    // Work on f(y^s), g(y^s) with the common exponent stride s.
    let stride = f.exponent_stride().gcd(&g.exponent_stride()).max(1);
    let (_, fv) = compress_with(f, stride);
    let (_, gv) = compress_with(g, stride);
    let h = dense_gcd(&fv, &gv);
    let h = LaurentPolynomial::from_terms(
        var,
        h.into_iter()
            .enumerate()
            .map(|(i, c)| (i as i64 * stride, c)),
    );
    make_positive(h)
}

fn compress_with(f: &LaurentPolynomial, stride: i64) -> (i64, Vec<BigInt>) {
    let lo = f.min_exp().unwrap();
    let hi = f.max_exp().unwrap();
    let mut v = vec![BigInt::zero(); ((hi - lo) / stride + 1) as usize];
    for (e, c) in f.terms() {
        v[((e - lo) / stride) as usize] = c.clone();
    }
    (lo, v)
}

fn make_positive(h: LaurentPolynomial) -> LaurentPolynomial {
    if h.leading_coeff().is_some_and(|c| c.is_negative()) {
        -h
    } else {
        h
    }
}

fn content(v: &[BigInt]) -> BigInt {
    v.iter().fold(BigInt::zero(), |g, c| g.gcd(c))
}

fn primitive(v: &[BigInt]) -> Vec<BigInt> {
    let c = content(v);
    if c.is_zero() || c.is_one() {
        return v.to_vec();
    }
    v.iter().map(|x| x / &c).collect()
}

fn trimmed(mut v: Vec<BigInt>) -> Vec<BigInt> {
    while v.last().is_some_and(|c| c.is_zero()) {
        v.pop();
    }
    v
}

/// Pseudo-remainder of `a` by `b` (both ascending, nonzero leading terms).
fn prem(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let mut r = a.to_vec();
    let db = b.len() - 1;
    let lb = &b[db];
    while r.len() > db && !r.is_empty() {
        let dr = r.len() - 1;
        let lr = r[dr].clone();
        for c in r.iter_mut() {
            *c *= lb;
        }
        let off = dr - db;
        for (j, bj) in b.iter().enumerate() {
            r[off + j] -= &lr * bj;
        }
        r = trimmed(r);
        // keep coefficient growth in check
        r = primitive(&r);
    }
    r
}

fn dense_gcd(f: &[BigInt], g: &[BigInt]) -> Vec<BigInt> {
    let cont = content(f).gcd(&content(g));
    let mut a = primitive(&trimmed(f.to_vec()));
    let mut b = primitive(&trimmed(g.to_vec()));
    if a.len() < b.len() {
        std::mem::swap(&mut a, &mut b);
    }
    while !b.is_empty() {
        if b.len() == 1 {
            a = vec![BigInt::one()];
            break;
        }
        let r = prem(&a, &b);
        a = b;
        b = primitive(&r);
    }
    let a = primitive(&a);
    a.into_iter().map(|c| c * &cont).collect()
}
