use std::collections::BTreeMap;
use std::sync::Arc;

use super::basis::TlBasis;
use super::braid::BraidWord;
use super::matching::{compose, PlanarMatching};
use crate::error::{Error, Result};
use crate::laurent::{delta, LaurentPolynomial, Var};

/// `(loops, d1·d2)` for two basis diagrams; the algebra product is `δ^loops · (d1·d2)`.
pub fn tl_multiply(d1: &PlanarMatching, d2: &PlanarMatching) -> Result<(u32, PlanarMatching)> {
    if d1.strands() != d2.strands() {
        return Err(Error::StrandMismatch(d1.strands(), d2.strands()));
    }
    let n = d1.strands();
    let (loops, out) = compose(n, d1.pairing(), d2.pairing());
    Ok((loops as u32, PlanarMatching::from_raw(n, out)))
}

fn delta_powers(k: usize) -> Vec<LaurentPolynomial> {
    let d = delta();
    let mut v = vec![LaurentPolynomial::one(Var::A)];
    for j in 1..=k {
        let next = &v[j - 1] * &d;
        v.push(next);
    }
    v
}

/// Element of `TL_n` over `Z[A^±1]` in the diagram basis.
#[derive(Clone)]
pub struct TlVector {
    basis: Arc<TlBasis>,
    coeffs: BTreeMap<u32, LaurentPolynomial>,
}

impl PartialEq for TlVector {
    fn eq(&self, other: &Self) -> bool {
        self.strands() == other.strands() && self.coeffs == other.coeffs
    }
}

impl Eq for TlVector {}

impl std::fmt::Debug for TlVector {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_map()
            .entries(
                self.coeffs
                    .iter()
                    .map(|(r, c)| (self.basis.matching(*r), c.to_string())),
            )
            .finish()
    }
}

impl TlVector {
    pub fn zero(n: usize) -> Result<Self> {
        Ok(Self {
            basis: TlBasis::get(n)?,
            coeffs: BTreeMap::new(),
        })
    }

    pub fn identity(n: usize) -> Result<Self> {
        let basis = TlBasis::get(n)?;
        let id = basis.identity_rank();
        Ok(Self {
            basis,
            coeffs: BTreeMap::from([(id, LaurentPolynomial::one(Var::A))]),
        })
    }

    pub fn basis_element(m: &PlanarMatching) -> Result<Self> {
        let basis = TlBasis::get(m.strands())?;
        let r = basis.rank_of(m)?;
        Ok(Self {
            basis,
            coeffs: BTreeMap::from([(r, LaurentPolynomial::one(Var::A))]),
        })
    }

    /// `ρ(word)` as an element of `TL_k`.
    pub fn from_braid(word: &BraidWord) -> Result<Self> {
        Self::identity(word.strands())?.apply_word(word)
    }

    pub fn strands(&self) -> usize {
        self.basis.strands()
    }

    pub fn basis(&self) -> &Arc<TlBasis> {
        &self.basis
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn support_size(&self) -> usize {
        self.coeffs.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&PlanarMatching, &LaurentPolynomial)> {
        self.coeffs
            .iter()
            .map(|(r, c)| (self.basis.matching(*r), c))
    }

    pub fn coeff(&self, m: &PlanarMatching) -> Result<LaurentPolynomial> {
        let r = self.basis.rank_of(m)?;
        Ok(self
            .coeffs
            .get(&r)
            .cloned()
            .unwrap_or_else(|| LaurentPolynomial::zero(Var::A)))
    }

    fn check(&self, other: &Self) -> Result<()> {
        if self.strands() != other.strands() {
            return Err(Error::StrandMismatch(self.strands(), other.strands()));
        }
        Ok(())
    }

    fn accumulate(
        map: &mut BTreeMap<u32, LaurentPolynomial>,
        r: u32,
        c: &LaurentPolynomial,
        shift: i64,
        negate: bool,
    ) {
        map.entry(r)
            .or_insert_with(|| LaurentPolynomial::zero(Var::A))
            .add_shifted(c, shift, negate);
    }

    fn pruned(mut coeffs: BTreeMap<u32, LaurentPolynomial>) -> BTreeMap<u32, LaurentPolynomial> {
        coeffs.retain(|_, c| !c.is_zero());
        coeffs
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let mut coeffs = self.coeffs.clone();
        for (r, c) in &other.coeffs {
            Self::accumulate(&mut coeffs, *r, c, 0, false);
        }
        Ok(Self {
            basis: self.basis.clone(),
            coeffs: Self::pruned(coeffs),
        })
    }

    pub fn scale(&self, p: &LaurentPolynomial) -> Result<Self> {
        if p.var() != Var::A {
            return Err(Error::VarMismatch(Var::A, p.var()));
        }
        let coeffs = self.coeffs.iter().map(|(r, c)| (*r, c * p)).collect();
        Ok(Self {
            basis: self.basis.clone(),
            coeffs: Self::pruned(coeffs),
        })
    }

    /// Right multiplication by `ρ(σ_i^{sign})`.
    pub fn apply_generator(&self, i: usize, sign: i8) -> Result<Self> {
        let n = self.strands();
        if i == 0 || i >= n {
            return Err(Error::IndexOutOfRange {
                index: i as i64,
                strands: n,
            });
        }
        // ρ(σ) = A·1 + A^{-1}e,  ρ(σ^{-1}) = A^{-1}·1 + A·e
        let (id_shift, e_shift) = if sign > 0 { (1, -1) } else { (-1, 1) };
        let mut out: BTreeMap<u32, LaurentPolynomial> = BTreeMap::new();
        for (&r, c) in &self.coeffs {
            Self::accumulate(&mut out, r, c, id_shift, false);
            let (r2, loops) = self.basis.act(r, i);
            match loops {
                0 => Self::accumulate(&mut out, r2, c, e_shift, false),
                1 => {
                    // δ = -A² - A^{-2}
                    Self::accumulate(&mut out, r2, c, e_shift + 2, true);
                    Self::accumulate(&mut out, r2, c, e_shift - 2, true);
                }
                _ => unreachable!("a generator closes at most one loop"),
            }
        }
        Ok(Self {
            basis: self.basis.clone(),
            coeffs: Self::pruned(out),
        })
    }

    pub fn apply_word(&self, word: &BraidWord) -> Result<Self> {
        if word.strands() != self.strands() {
            return Err(Error::StrandMismatch(self.strands(), word.strands()));
        }
        let mut v = self.clone();
        for &l in word.letters() {
            v = v.apply_generator(l.unsigned_abs() as usize, l.signum() as i8)?;
        }
        Ok(v)
    }

    /// Algebra product `self · other`.
    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let n = self.strands();
        let powers = delta_powers(n);
        let mut out: BTreeMap<u32, LaurentPolynomial> = BTreeMap::new();
        for (&r1, c1) in &self.coeffs {
            let d1 = self.basis.matching(r1).pairing();
            for (&r2, c2) in &other.coeffs {
                let (loops, p) = compose(n, d1, self.basis.matching(r2).pairing());
                let r = self.basis.rank_raw(p);
                let term = &(c1 * c2) * &powers[loops as usize];
                Self::accumulate(&mut out, r, &term, 0, false);
            }
        }
        Ok(Self {
            basis: self.basis.clone(),
            coeffs: Self::pruned(out),
        })
    }

    /// Markov trace normalised so that a single closed loop evaluates to 1.
    pub fn closure_trace(&self) -> LaurentPolynomial {
        let powers = delta_powers(self.strands());
        let mut out = LaurentPolynomial::zero(Var::A);
        for (&r, c) in &self.coeffs {
            let loops = self.basis.closure_loops(r) as usize;
            out += &(c * &powers[loops - 1]);
        }
        out
    }

    /// Bilinear pairing `tr(x · y)`.
    pub fn pairing(&self, other: &Self) -> Result<LaurentPolynomial> {
        Ok(self.try_mul(other)?.closure_trace())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn a(terms: &[(i64, i64)]) -> LaurentPolynomial {
        LaurentPolynomial::from_terms(Var::A, terms.iter().copied())
    }

    #[test]
    fn sigma_acts_as_formula() {
        let v = TlVector::identity(2)
            .unwrap()
            .apply_generator(1, 1)
            .unwrap();
        let e = PlanarMatching::generator(2, 1).unwrap();
        assert_eq!(v.coeff(&PlanarMatching::identity(2)).unwrap(), a(&[(1, 1)]));
        assert_eq!(v.coeff(&e).unwrap(), a(&[(-1, 1)]));
        let back = v.apply_generator(1, -1).unwrap();
        assert_eq!(back, TlVector::identity(2).unwrap());
    }

    #[test]
    fn traces() {
        assert_eq!(TlVector::identity(1).unwrap().closure_trace(), a(&[(0, 1)]));
        assert_eq!(TlVector::identity(2).unwrap().closure_trace(), delta());
        let hopf = TlVector::from_braid(&BraidWord::new(2, vec![1, 1]).unwrap()).unwrap();
        assert_eq!(hopf.closure_trace(), a(&[(-4, -1), (4, -1)]));
    }

    #[test]
    fn pairings() {
        let id = TlVector::identity(2).unwrap();
        assert_eq!(id.pairing(&id).unwrap(), delta());
        let e = TlVector::basis_element(&PlanarMatching::generator(2, 1).unwrap()).unwrap();
        assert_eq!(e.pairing(&e).unwrap(), delta());
        assert!(id.pairing(&TlVector::identity(3).unwrap()).is_err());
    }

    #[test]
    fn product_matches_word_action() {
        let w1 = BraidWord::new(4, vec![1, -2, 3, 2]).unwrap();
        let w2 = BraidWord::new(4, vec![-3, -1, 2, 2]).unwrap();
        let lhs = TlVector::from_braid(&w1)
            .unwrap()
            .try_mul(&TlVector::from_braid(&w2).unwrap())
            .unwrap();
        assert_eq!(lhs, TlVector::from_braid(&w1.concat(&w2).unwrap()).unwrap());
    }

    #[test]
    fn tl_multiply_examples() {
        let e1 = PlanarMatching::generator(3, 1).unwrap();
        let e2 = PlanarMatching::generator(3, 2).unwrap();
        let (l1, p) = tl_multiply(&e1, &e2).unwrap();
        let (l2, q) = tl_multiply(&p, &e1).unwrap();
        assert_eq!((l1 + l2, q), (0, e1));
    }

    #[test]
    fn out_of_range_generator() {
        assert!(TlVector::identity(3)
            .unwrap()
            .apply_generator(3, 1)
            .is_err());
    }
}
