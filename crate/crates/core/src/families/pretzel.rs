use serde::Serialize;

use super::band_coefficients;
use crate::error::{Error, Result};
use crate::laurent::{delta, LaurentPolynomial, Var};
use crate::skein::{writhe_normalize, BraidWord, PlanarMatching, TlVector};

/// Signed crossing counts `a_1, …, a_n` of the vertical bands of `P(a_1, …, a_n)`.
///
/// A band with `a > 0` is the 2-braid `σ^a` read vertically; this choice
/// makes `P(-2, 3, 5)` the positive torus knot `T(3, 5)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PretzelParams {
    pub a: Vec<i64>,
}

const BAND_SIGN: i64 = 1;

impl PretzelParams {
    pub fn new(a: Vec<i64>) -> Result<Self> {
        if a.is_empty() {
            return Err(Error::InvalidArgument(
                "pretzel link needs at least one band".into(),
            ));
        }
        if a.contains(&0) {
            return Err(Error::InvalidArgument(
                "pretzel band crossing counts must be nonzero".into(),
            ));
        }
        Ok(Self { a })
    }

    /// Equal bands `(2k+1, …, 2k+1)`, `n` of them.
    pub fn equal_odd(k: u32, n: usize) -> Result<Self> {
        Self::new(vec![2 * k as i64 + 1; n])
    }

    pub fn len(&self) -> usize {
        self.a.len()
    }

    pub fn is_empty(&self) -> bool {
        self.a.is_empty()
    }

    /// Exponents `c_i` with band `i` equal to `σ^{c_i}`.
    fn braid_exponents(&self) -> impl Iterator<Item = i64> + '_ {
        self.a.iter().map(|&a| BAND_SIGN * a)
    }
}

impl std::str::FromStr for PretzelParams {
    type Err = Error;

    /// Parses `a1,a2,…,an`.
    fn from_str(s: &str) -> Result<Self> {
        let a = s
            .split(',')
            .map(|x| {
                x.trim()
                    .parse::<i64>()
                    .map_err(|_| Error::InvalidArgument(format!("bad pretzel parameter {x:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(a)
    }
}

/// Loops left after smoothing every band, `j` of them to vertical arcs.
fn state_loops(j: usize) -> usize {
    if j == 0 {
        2
    } else {
        j
    }
}

/// Kauffman bracket of the standard pretzel diagram.
///
/// Bands are spliced one at a time: each becomes `α·(vertical arcs) +
/// β·(cap-cup)`, and `dp[j]` collects the states with `j` vertical bands.
pub fn pretzel_bracket(params: &PretzelParams) -> LaurentPolynomial {
    let zero = LaurentPolynomial::zero(Var::A);
    let mut dp = vec![LaurentPolynomial::one(Var::A)];
    for c in params.braid_exponents() {
        let (alpha, beta) = band_coefficients(c);
        let mut next = vec![zero.clone(); dp.len() + 1];
        for (j, p) in dp.iter().enumerate() {
            next[j + 1] += &(p * &alpha);
            next[j] += &(p * &beta);
        }
        dp = next;
    }
    let d = delta();
    let mut out = zero;
    for (j, p) in dp.iter().enumerate() {
        out += &(p * &d.pow(state_loops(j) as u32 - 1));
    }
    out
}

/// The same bracket from the plat closure of `σ_1^{c_1} σ_3^{c_2} …` in
/// `TL_{2n}`, capped by the arcs joining neighbouring bands.
pub fn pretzel_plat_bracket(params: &PretzelParams) -> Result<LaurentPolynomial> {
    let n = params.len();
    let strands = 2 * n;
    let mut letters = Vec::new();
    for (i, c) in params.braid_exponents().enumerate() {
        let g = (2 * i + 1) as i32;
        letters.extend(std::iter::repeat_n(
            if c > 0 { g } else { -g },
            c.unsigned_abs() as usize,
        ));
    }
    let word = BraidWord::new(strands, letters)?;
    let mut pairing = vec![0u16; 2 * strands];
    for side in [0, strands] {
        for i in 0..n {
            let a = side + 2 * i + 1;
            let b = side + (2 * i + 2) % strands;
            pairing[a] = b as u16;
            pairing[b] = a as u16;
        }
    }
    let caps = PlanarMatching::new(strands, pairing)
        .ok_or_else(|| Error::InvalidArgument("pretzel cap pattern is not planar".into()))?;
    TlVector::basis_element(&caps)?.pairing(&TlVector::from_braid(&word)?)
}

/// Writhe of the pretzel diagram, each component oriented by a walk that
/// starts downward at the first unvisited band strand.
pub fn pretzel_writhe(params: &PretzelParams) -> i64 {
    let n = params.len();
    let odd: Vec<usize> = params
        .a
        .iter()
        .map(|a| (a.unsigned_abs() % 2) as usize)
        .collect();
    // dir[i][s]: +1 if the strand entering band i at top endpoint s runs down
    let mut dir = vec![[0i8; 2]; n];
    for i0 in 0..n {
        for s0 in 0..2 {
            if dir[i0][s0] != 0 {
                continue;
            }
            let (mut i, mut s) = (i0, s0);
            while dir[i][s] == 0 {
                dir[i][s] = 1;
                // down to bottom endpoint, across the bottom arc, then up
                let bottom = s ^ odd[i];
                let (j, b) = if bottom == 1 {
                    ((i + 1) % n, 0)
                } else {
                    ((i + n - 1) % n, 1)
                };
                let up = b ^ odd[j];
                dir[j][up] = -1;
                // across the top arc, then down again
                (i, s) = if up == 1 {
                    ((j + 1) % n, 0)
                } else {
                    ((j + n - 1) % n, 1)
                };
            }
        }
    }
    params
        .braid_exponents()
        .zip(&dir)
        .map(|(c, d)| if d[0] == d[1] { c } else { -c })
        .sum()
}

/// Jones polynomial of `P(a_1, …, a_n)` in `A`.
pub fn pretzel_jones(params: &PretzelParams) -> LaurentPolynomial {
    writhe_normalize(&pretzel_bracket(params), pretzel_writhe(params))
}

/// `((t²+t+1)(t^{2k+2}+t)^n + t(t^{2k+2}-t²-t-1)^n) / (1+t)^{n+1}`, which is
/// `≐ V` of `P(2k+1, …, 2k+1)` with `n` bands.
pub fn pretzel_equal_odd_closed_form(k: u32, n: u32) -> Result<LaurentPolynomial> {
    if k < 1 || n < 2 {
        return Err(Error::InvalidArgument(format!(
            "closed form needs k >= 1 and n >= 2, got k={k}, n={n}"
        )));
    }
    let t = |terms: &[(i64, i64)]| LaurentPolynomial::from_terms(Var::T, terms.iter().copied());
    let e = 2 * k as i64 + 2;
    let c = t(&[(0, 1), (1, 1), (2, 1)]);
    let a = t(&[(1, 1), (e, 1)]);
    let b = t(&[(0, -1), (1, -1), (2, -1), (e, 1)]);
    let num = &(&c * &a.pow(n)) + &(&t(&[(1, 1)]) * &b.pow(n));
    num.exact_divide(&t(&[(0, 1), (1, 1)]).pow(n + 1))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::skein::{a_to_t, t_coefficients};

    fn p(a: &[i64]) -> PretzelParams {
        PretzelParams::new(a.to_vec()).unwrap()
    }

    #[test]
    fn state_sum_matches_plat_closure() {
        for a in [
            &[3][..],
            &[1, 1],
            &[-2, 3, 5],
            &[2, -3, 5],
            &[3, 3, 3],
            &[1, -4, 2, 5],
            &[-1, 2, -3, 1, 2],
        ] {
            assert_eq!(
                pretzel_bracket(&p(a)),
                pretzel_plat_bracket(&p(a)).unwrap(),
                "{a:?}"
            );
        }
    }

    #[test]
    fn torus_knot_as_pretzel() {
        // coefficients 1 0 1 0 0 0 -1 over degrees 4..10
        let v = a_to_t(&pretzel_jones(&p(&[-2, 3, 5]))).unwrap();
        let expected = LaurentPolynomial::from_terms(Var::T, [(4, 1), (6, 1), (10, -1)]);
        assert_eq!(v, expected);
    }

    #[test]
    fn second_pretzel_vector() {
        // -1 1 -1 2 -1 2 -1 1 -1 over degrees -4..4
        let v = a_to_t(&pretzel_jones(&p(&[2, -3, 5]))).unwrap();
        let expected = LaurentPolynomial::from_coeffs(Var::T, -4, [-1, 1, -1, 2, -1, 2, -1, 1, -1]);
        assert_eq!(v, expected);
    }

    #[test]
    fn single_band_is_unknot_and_two_bands_are_torus_links() {
        for a in [-3, 1, 4] {
            assert!(pretzel_bracket(&p(&[a])).is_unit());
        }
        // P(a, b) is the two-bridge torus link T(2, a + b)
        for (a, b) in [(1, 2), (2, 3), (-1, 4)] {
            let c = BAND_SIGN * (a + b);
            let word = BraidWord::new(
                2,
                vec![if c > 0 { 1 } else { -1 }; c.unsigned_abs() as usize],
            )
            .unwrap();
            assert!(pretzel_bracket(&p(&[a, b]))
                .equivalent(&crate::skein::bracket(&word).unwrap(), false));
        }
    }

    #[test]
    fn closed_form_agrees_with_state_sum() {
        for n in 2..=6u32 {
            let closed = pretzel_equal_odd_closed_form(1, n).unwrap();
            let jones = pretzel_jones(&PretzelParams::equal_odd(1, n as usize).unwrap());
            // even n gives a two-component link with half-integer powers of t
            let v = LaurentPolynomial::from_coeffs(Var::T, 0, t_coefficients(&jones).unwrap());
            assert!(closed.equivalent(&v, true), "n = {n}");
        }
    }

    #[test]
    fn parsing() {
        assert_eq!("-2, 3,5".parse::<PretzelParams>().unwrap(), p(&[-2, 3, 5]));
        assert!("2,0".parse::<PretzelParams>().is_err());
        assert!("".parse::<PretzelParams>().is_err());
    }
}
