//! Squarefree decomposition of integer polynomials.

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};

use crate::laurent::{gcd, LaurentPolynomial};

const P: u64 = (1 << 61) - 1;

fn mulmod(a: u64, b: u64) -> u64 {
    ((a as u128 * b as u128) % P as u128) as u64
}

fn powmod(mut a: u64, mut e: u64) -> u64 {
    let mut r = 1;
    while e > 0 {
        if e & 1 == 1 {
            r = mulmod(r, a);
        }
        a = mulmod(a, a);
        e >>= 1;
    }
    r
}

fn reduce(c: &BigInt) -> u64 {
    let p = BigInt::from(P);
    let r = ((c % &p) + &p) % &p;
    r.to_u64().unwrap()
}

fn trim(v: &mut Vec<u64>) {
    while v.last() == Some(&0) {
        v.pop();
    }
}

/// Degree of `gcd(f, f')` over `F_p`, or `None` if `p` divides the leading coefficient.
fn modular_gcd_degree(coeffs: &[BigInt]) -> Option<usize> {
    let f: Vec<u64> = coeffs.iter().map(reduce).collect();
    if *f.last()? == 0 {
        return None;
    }
    let mut df: Vec<u64> = f
        .iter()
        .enumerate()
        .skip(1)
        .map(|(i, &c)| mulmod(c, i as u64 % P))
        .collect();
    trim(&mut df);
    let (mut a, mut b) = (f, df);
    while !b.is_empty() {
        // a mod b
        let inv = powmod(*b.last().unwrap(), P - 2);
        while a.len() >= b.len() {
            let q = mulmod(*a.last().unwrap(), inv);
            let off = a.len() - b.len();
            for (j, &bj) in b.iter().enumerate() {
                a[off + j] = (a[off + j] + P - mulmod(q, bj)) % P;
            }
            trim(&mut a);
            if a.is_empty() {
                break;
            }
        }
        std::mem::swap(&mut a, &mut b);
    }
    Some(a.len().saturating_sub(1))
}

fn derivative(f: &LaurentPolynomial) -> LaurentPolynomial {
    LaurentPolynomial::from_terms(
        f.var(),
        f.terms()
            .filter(|(e, _)| *e != 0)
            .map(|(e, c)| (e - 1, c * e)),
    )
}

/// Writes `f = c ∏ f_i^{m_i}` with pairwise coprime squarefree `f_i`.
///
/// `f` must have lowest exponent 0. A modular check handles the usual
/// squarefree case; otherwise Yun's algorithm runs over the integers.
pub(crate) fn squarefree_factors(f: &LaurentPolynomial) -> Vec<(LaurentPolynomial, usize)> {
    debug_assert_eq!(f.min_exp(), Some(0));
    if f.span() <= 1 {
        return vec![(f.clone(), 1)];
    }
    if modular_gcd_degree(&f.coefficient_vector()) == Some(0) {
        return vec![(f.clone(), 1)];
    }
    let df = derivative(f);
    let a0 = gcd(f, &df);
    let mut b = f.exact_divide(&a0).expect("gcd divides f");
    let c = df.exact_divide(&a0).expect("gcd divides f'");
    let mut d = &c - &derivative(&b);
    let mut out = Vec::new();
    let mut i = 1;
    while b.span() > 0 {
        let a = if d.is_zero() { b.clone() } else { gcd(&b, &d) };
        if a.span() > 0 {
            out.push((a.clone(), i));
        }
        let nb = b.exact_divide(&a).expect("gcd divides b");
        let c = if d.is_zero() {
            LaurentPolynomial::zero(f.var())
        } else {
            d.exact_divide(&a).expect("gcd divides d")
        };
        d = &c - &derivative(&nb);
        b = nb;
        i += 1;
    }
    debug_assert!(!out.iter().any(|(p, _)| p.coeff(0).is_zero()));
    out
}
