//! Closed forms for torus knots, twist knots and pretzel links, and the
//! two-strand twist formula.

mod pretzel;

pub use pretzel::{
    pretzel_bracket, pretzel_equal_odd_closed_form, pretzel_jones, pretzel_plat_bracket,
    pretzel_writhe, PretzelParams,
};

use num_integer::Integer;

use crate::error::{Error, Result};
use crate::laurent::{delta, LaurentPolynomial, Var};

fn a_mono(e: i64, c: i64) -> LaurentPolynomial {
    LaurentPolynomial::monomial(Var::A, e, c)
}

fn t_poly(terms: &[(i64, i64)]) -> LaurentPolynomial {
    LaurentPolynomial::from_terms(Var::T, terms.iter().copied())
}

/// `V_{T(m,n)} = t^{(n-1)(m-1)/2} (1 - t^{m+1} - t^{n+1} + t^{n+m}) / (1 - t²)`
/// in the variable `A` (`t = A^{-4}`), so half-integer powers stay integral.
pub fn torus_jones(m: i64, n: i64) -> Result<LaurentPolynomial> {
    if m < 2 || n < 2 {
        return Err(Error::InvalidArgument(format!(
            "torus knot T({m},{n}) needs m, n >= 2"
        )));
    }
    if m.gcd(&n) != 1 {
        return Err(Error::NonCoprime(m, n));
    }
    let num = LaurentPolynomial::from_terms(
        Var::A,
        [
            (0, 1),
            (-4 * (m + 1), -1),
            (-4 * (n + 1), -1),
            (-4 * (n + m), 1),
        ],
    );
    let den = LaurentPolynomial::from_terms(Var::A, [(0, 1), (-8, -1)]);
    Ok(num.exact_divide(&den)?.shift(-2 * (n - 1) * (m - 1)))
}

/// `≐ V_{K_n}` for the twist knot with `n` half twists, in `t`:
/// `(1 - t³ + t^{2m+1} + t^{2m+3}) / (1 + t)` for `n = 2m` and
/// `(1 - t³ - t^{2m+2} - t^{2m+4}) / (1 + t)` for `n = 2m + 1`.
pub fn twist_knot_jones(n: i64) -> Result<LaurentPolynomial> {
    if n < 1 {
        return Err(Error::InvalidArgument(format!(
            "twist knot index must be >= 1, got {n}"
        )));
    }
    let m = n / 2;
    let num = if n % 2 == 0 {
        t_poly(&[(0, 1), (3, -1), (2 * m + 1, 1), (2 * m + 3, 1)])
    } else {
        t_poly(&[(0, 1), (3, -1), (2 * m + 2, -1), (2 * m + 4, -1)])
    };
    num.exact_divide(&t_poly(&[(0, 1), (1, 1)]))
}

/// `X_m = Σ_{i=0}^{2m} (-1)^i A^{-4i}`.
pub fn alternating_sum(m: u32) -> LaurentPolynomial {
    LaurentPolynomial::from_terms(
        Var::A,
        (0..=2 * m as i64).map(|i| (-4 * i, if i % 2 == 0 { 1 } else { -1 })),
    )
}

/// Bracket after adding `Δ^{2m}` at a crossing whose two splices have
/// brackets `b_id` (the splice that keeps the strands) and `b_e`:
/// `A^{2m} (A b_id + X_m A^{-1} b_e)`.
pub fn two_strand_twist(
    b_id: &LaurentPolynomial,
    b_e: &LaurentPolynomial,
    m: u32,
) -> LaurentPolynomial {
    let mut out = b_id.shift(1);
    out += &(&alternating_sum(m) * b_e).shift(-1);
    out.shift(2 * m as i64)
}

/// `(α, β)` with `ρ(σ^c) = α·1 + β·e` in `TL_2`:
/// `α = A^c`, `β = ((-A^{-3})^c - A^c) / δ`.
pub fn band_coefficients(c: i64) -> (LaurentPolynomial, LaurentPolynomial) {
    let alpha = a_mono(c, 1);
    let twist = a_mono(-3 * c, if c % 2 == 0 { 1 } else { -1 });
    let beta = (&twist - &alpha)
        .exact_divide(&delta())
        .expect("1 + A^4 divides (-A^{-3})^c - A^c");
    (alpha, beta)
}

/// Bracket of a diagram with a band of `c` crossings, given the brackets
/// of the diagram with the band replaced by the identity and by `e`.
pub fn band_bracket(
    b_id: &LaurentPolynomial,
    b_e: &LaurentPolynomial,
    c: i64,
) -> LaurentPolynomial {
    let (alpha, beta) = band_coefficients(c);
    &(&alpha * b_id) + &(&beta * b_e)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::skein::{bracket, jones, BraidWord, PlanarMatching, TlVector};

    fn torus_braid(m: usize, n: usize) -> BraidWord {
        let row: Vec<i32> = (1..n as i32).collect();
        BraidWord::new(n, row.repeat(m)).unwrap()
    }

    #[test]
    fn torus_formula_matches_skein() {
        for (m, n) in [(3, 2), (5, 2), (4, 3), (5, 3), (2, 3), (7, 2), (3, 4)] {
            let f = torus_jones(m as i64, n as i64).unwrap();
            assert_eq!(f, jones(&torus_braid(m, n)).unwrap(), "T({m},{n})");
        }
        assert!(matches!(torus_jones(4, 2), Err(Error::NonCoprime(4, 2))));
    }

    #[test]
    fn torus_symmetry() {
        assert_eq!(torus_jones(3, 2).unwrap(), torus_jones(2, 3).unwrap());
        assert_eq!(torus_jones(5, 3).unwrap(), torus_jones(3, 5).unwrap());
    }

    #[test]
    fn trefoil_closed_form() {
        // t + t³ - t⁴ ≐ 1 + t² - t³
        let v = torus_jones(3, 2).unwrap();
        let expected = t_poly(&[(0, 1), (2, 1), (3, -1)]);
        assert!(crate::skein::a_to_t(&v)
            .unwrap()
            .equivalent(&expected, false));
    }

    #[test]
    fn twist_knot_small_cases() {
        assert_eq!(
            twist_knot_jones(1).unwrap(),
            t_poly(&[(0, 1), (1, -1), (3, -1)])
        );
        let k2 = twist_knot_jones(2).unwrap();
        assert_eq!(k2, t_poly(&[(0, 1), (1, -1), (2, 1), (3, -1), (4, 1)]));
        assert!(k2.equivalent(&k2.reversed(), false));
        assert!(twist_knot_jones(0).is_err());
    }

    #[test]
    fn two_strand_twist_base_case_is_skein_relation() {
        let b_id = a_mono(3, 2);
        let b_e = a_mono(-1, 5);
        let skein = &b_id.shift(1) + &b_e.shift(-1);
        assert_eq!(two_strand_twist(&b_id, &b_e, 0), skein);
    }

    #[test]
    fn two_strand_twist_gives_two_bridge_torus_knots() {
        let one = a_mono(0, 1);
        for m in 1..=3u32 {
            let word = BraidWord::new(2, vec![1; 2 * m as usize + 1]).unwrap();
            assert_eq!(two_strand_twist(&delta(), &one, m), bracket(&word).unwrap());
        }
    }

    #[test]
    fn two_strand_twist_at_trefoil_crossing() {
        // splices of the last crossing of σ₁³: σ₁² and σ₁²·e
        let hopf = BraidWord::new(2, vec![1, 1]).unwrap();
        let b_id = bracket(&hopf).unwrap();
        let e = TlVector::basis_element(&PlanarMatching::generator(2, 1).unwrap()).unwrap();
        let b_e = TlVector::from_braid(&hopf)
            .unwrap()
            .try_mul(&e)
            .unwrap()
            .closure_trace();
        let lhs = two_strand_twist(&b_id, &b_e, 1);
        assert_eq!(
            lhs,
            bracket(&BraidWord::new(2, vec![1; 5]).unwrap()).unwrap()
        );
    }

    #[test]
    fn band_formula_matches_braid_action() {
        for c in -6i64..=6 {
            let word = BraidWord::new(
                2,
                vec![if c >= 0 { 1 } else { -1 }; c.unsigned_abs() as usize],
            )
            .unwrap();
            // closure of the band: identity closes to two loops, e to one
            let expected = bracket(&word).unwrap();
            assert_eq!(
                band_bracket(&delta(), &a_mono(0, 1), c),
                expected,
                "c = {c}"
            );
        }
        for m in 0..4u32 {
            let c = 2 * m as i64 + 1;
            let (b_id, b_e) = (a_mono(2, 3), a_mono(-5, 1));
            assert_eq!(
                band_bracket(&b_id, &b_e, c),
                two_strand_twist(&b_id, &b_e, m)
            );
        }
    }
}
