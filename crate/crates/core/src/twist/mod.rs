//! Full-twist families `L_m`, their bracket series and limit polynomials.

mod blocks;
mod idempotent;
mod limit;
mod multi;
mod nu;

pub use blocks::{
    detect_blocks, Block, BlockDecomposition, Parity, Separator, SeparatorKind,
    DEFAULT_MIN_SEPARATOR,
};
pub use idempotent::{idempotent_traces, IdempotentTrace};
pub use limit::{
    check_recurrence, check_reduced_recurrence, limit_mahler, recover_limit_polynomial,
    recover_limit_polynomial_with, LimitPolynomial,
};
pub use multi::{limit_mahler_multi, recover_multi_limit, MultiLimit, MultiTwistFamily};
pub use nu::nu;

use num_bigint::BigInt;
use num_traits::Signed;
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::laurent::{serialize_bigint, serialize_bigints, LaurentPolynomial};
use crate::mahler::mahler_univariate;
use crate::skein::{
    a_to_t, full_twist_letters, t_coefficients, writhe_normalize, BraidWord, TlVector,
};

/// Strands `first..first+width-1` (1-based) receiving the full twists.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct TwistRegion {
    pub first: usize,
    pub width: usize,
}

impl TwistRegion {
    pub fn new(first: usize, width: usize) -> Self {
        Self { first, width }
    }

    pub fn validate(&self, strands: usize) -> Result<()> {
        if self.width < 2 || self.first == 0 || self.first + self.width - 1 > strands {
            return Err(Error::InvalidRegion {
                first: self.first,
                width: self.width,
                strands,
            });
        }
        Ok(())
    }

    /// Letters of `Δ² = (σ_s … σ_{s+n-2})^n`.
    pub fn full_twist_letters(&self) -> Vec<i32> {
        full_twist_letters(self.first, self.width)
    }

    /// `n(n-1)`: the writhe of one full twist, and the `A` exponent it carries.
    pub fn framing(&self) -> i64 {
        (self.width * (self.width - 1)) as i64
    }
}

impl std::str::FromStr for TwistRegion {
    type Err = Error;

    /// Parses `s:n`.
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::InvalidArgument(format!("region must be first:width, got {s:?}"));
        let (a, b) = s.split_once(':').ok_or_else(bad)?;
        Ok(Self::new(
            a.trim().parse().map_err(|_| bad())?,
            b.trim().parse().map_err(|_| bad())?,
        ))
    }
}

/// The full twist on `region` as a braid on `strands` strands.
pub fn full_twist_word(strands: usize, region: TwistRegion) -> Result<BraidWord> {
    region.validate(strands)?;
    BraidWord::new(strands, region.full_twist_letters())
}

/// `k_i = i(n - i + 1)` for `i = 0..=[n/2]`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TwistExponents {
    pub n: usize,
    pub k: Vec<i64>,
}

impl TwistExponents {
    pub fn new(n: usize) -> Self {
        let n64 = n as i64;
        Self {
            n,
            k: (0..=n64 / 2).map(|i| i * (n64 - i + 1)).collect(),
        }
    }

    /// Number of blocks, `[n/2] + 1`.
    pub fn len(&self) -> usize {
        self.k.len()
    }

    pub fn is_empty(&self) -> bool {
        self.k.is_empty()
    }

    pub fn max(&self) -> i64 {
        *self.k.last().unwrap()
    }
}

/// A braid with full twists inserted on a region at a fixed letter position.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TwistFamily {
    pub base: BraidWord,
    pub region: TwistRegion,
    /// Letter index where the twists go; `None` means the end of the word.
    pub insertion: Option<usize>,
}

impl TwistFamily {
    pub fn new(base: BraidWord, region: TwistRegion, insertion: Option<usize>) -> Result<Self> {
        region.validate(base.strands())?;
        if let Some(p) = insertion {
            if p > base.len() {
                return Err(Error::InvalidArgument(format!(
                    "insertion point {p} beyond word length {}",
                    base.len()
                )));
            }
        }
        Ok(Self {
            base,
            region,
            insertion,
        })
    }

    pub fn at_end(base: BraidWord, region: TwistRegion) -> Result<Self> {
        Self::new(base, region, None)
    }

    pub fn width(&self) -> usize {
        self.region.width
    }

    pub fn exponents(&self) -> TwistExponents {
        TwistExponents::new(self.region.width)
    }

    fn insertion_point(&self) -> usize {
        self.insertion.unwrap_or(self.base.len())
    }

    /// The braid of `L_m`.
    pub fn word(&self, m: u32) -> BraidWord {
        let twist = self.region.full_twist_letters().repeat(m as usize);
        self.base
            .insert(self.insertion_point(), &twist)
            .expect("validated region")
    }

    pub fn writhe(&self, m: u32) -> i64 {
        self.base.writhe() + m as i64 * self.region.framing()
    }

    /// `L ∪ U` with `U` an unknot encircling the region, as a closure on one
    /// more strand. The extra strand runs down to the region and back,
    /// passing the strands beyond the region on the same side both ways.
    pub fn augmented(&self) -> Result<BraidWord> {
        let k = self.base.strands() as i32;
        let first = self.region.first as i32;
        let last = first + self.region.width as i32 - 1;
        let mut clasp: Vec<i32> = (first..=k).rev().collect();
        clasp.extend(first..=last);
        clasp.extend((last + 1..=k).map(|g| -g));
        self.base
            .widen(self.base.strands() + 1)?
            .insert(self.insertion_point(), &clasp)
    }

    /// Brackets of `L_m` for `m = 0..=max_m`, by one incremental sweep.
    ///
    /// The closure is conjugation invariant, so the word is rotated to put
    /// the insertion point at the end.
    pub fn brackets(&self, max_m: u32) -> Result<Vec<LaurentPolynomial>> {
        let p = self.insertion_point();
        let letters = [&self.base.letters()[p..], &self.base.letters()[..p]].concat();
        let rotated = BraidWord::new(self.base.strands(), letters)?;
        let twist = full_twist_word(self.base.strands(), self.region)?;
        let mut v = TlVector::from_braid(&rotated)?;
        let mut out = Vec::with_capacity(max_m as usize + 1);
        for m in 0..=max_m {
            out.push(v.closure_trace());
            if m < max_m {
                v = v.apply_word(&twist)?;
            }
        }
        Ok(out)
    }
}

/// One row of a twist series.
#[derive(Clone, Debug, Serialize)]
pub struct SeriesRecord {
    pub m: u32,
    pub bracket: LaurentPolynomial,
    /// Jones polynomial in `A` (`t = A^{-4}`).
    pub jones: LaurentPolynomial,
    /// Jones coefficients in ascending powers of `t`, lowest one positive.
    #[serde(serialize_with = "serialize_bigints")]
    pub coeffs: Vec<BigInt>,
    pub span: i64,
    /// Sum of absolute coefficients of `(1 + t) V`.
    #[serde(serialize_with = "serialize_bigint")]
    pub l1_norm: BigInt,
    pub mahler: f64,
    pub mahler_error: f64,
}

/// Normalised ascending `t` coefficients of a Jones polynomial in `A`.
pub fn normalized_coefficients(jones: &LaurentPolynomial) -> Result<Vec<BigInt>> {
    let mut v = t_coefficients(jones)?;
    if v[0].is_negative() {
        v.iter_mut().for_each(|c| *c = -&*c);
    }
    Ok(v)
}

fn l1_of_shifted_sum(coeffs: &[BigInt]) -> BigInt {
    // (1 + t) V has coefficients v_j + v_{j-1}
    let mut total = BigInt::from(0);
    for j in 0..=coeffs.len() {
        let a = coeffs.get(j).cloned().unwrap_or_default();
        let b = if j > 0 {
            coeffs[j - 1].clone()
        } else {
            BigInt::from(0)
        };
        total += (a + b).abs();
    }
    total
}

/// Records for each `m` in `ms` (which need not be contiguous).
pub fn twist_series(family: &TwistFamily, ms: &[u32]) -> Result<Vec<SeriesRecord>> {
    let Some(&max_m) = ms.iter().max() else {
        return Ok(Vec::new());
    };
    let brackets = family.brackets(max_m)?;
    ms.par_iter()
        .map(|&m| {
            let bracket = brackets[m as usize].clone();
            let jones = writhe_normalize(&bracket, family.writhe(m));
            let coeffs = normalized_coefficients(&jones)?;
            let mahler = mahler_univariate(&a_to_t(&jones).unwrap_or_else(|_| jones.clone()))?;
            Ok(SeriesRecord {
                m,
                span: coeffs.len() as i64 - 1,
                l1_norm: l1_of_shifted_sum(&coeffs),
                coeffs,
                bracket,
                jones,
                mahler: mahler.value,
                mahler_error: mahler.error_estimate,
            })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::skein::{bracket, parse_braid};

    #[test]
    fn augmented_link_adds_a_split_free_component() {
        let d = crate::laurent::delta();
        // U around one of two parallel strands, with a split unknot beside it
        let inner =
            TwistFamily::at_end(BraidWord::identity(2).unwrap(), TwistRegion::new(1, 2)).unwrap();
        let outer =
            TwistFamily::at_end(BraidWord::identity(3).unwrap(), TwistRegion::new(1, 2)).unwrap();
        let (a, b) = (inner.augmented().unwrap(), outer.augmented().unwrap());
        assert_eq!(b.components(), 4);
        assert_eq!(bracket(&b).unwrap(), &d * &bracket(&a).unwrap());
        // U around both strands of the unlink: a Hopf link with a parallel copy
        assert_eq!(a.components(), 3);
    }

    #[test]
    fn twist_word_shapes() {
        assert_eq!(
            full_twist_word(3, TwistRegion::new(2, 2))
                .unwrap()
                .letters(),
            &[2, 2]
        );
        let w = full_twist_word(4, TwistRegion::new(1, 3)).unwrap();
        assert_eq!(w.letters(), &[1, 2, 1, 2, 1, 2]);
        for n in 2..=6 {
            let w = full_twist_word(6, TwistRegion::new(7 - n, n)).unwrap();
            assert_eq!(w.len(), n * (n - 1));
            assert_eq!(w.permutation(), (0..6).collect::<Vec<_>>());
        }
        assert!(full_twist_word(4, TwistRegion::new(3, 3)).is_err());
        assert!(full_twist_word(4, TwistRegion::new(1, 1)).is_err());
    }

    #[test]
    fn exponents() {
        assert_eq!(TwistExponents::new(2).k, vec![0, 2]);
        assert_eq!(TwistExponents::new(5).k, vec![0, 5, 8]);
        assert_eq!(TwistExponents::new(6).k, vec![0, 6, 10, 12]);
        for n in 2..12 {
            let e = TwistExponents::new(n);
            assert!(e.k.windows(2).all(|w| w[0] < w[1]));
            let h = (n / 2) as i64;
            assert_eq!(e.max(), h * (n as i64 - h + 1));
        }
    }

    #[test]
    fn region_parsing() {
        assert_eq!(
            "2:5".parse::<TwistRegion>().unwrap(),
            TwistRegion::new(2, 5)
        );
        assert!("25".parse::<TwistRegion>().is_err());
    }

    #[test]
    fn sweep_matches_direct_evaluation() {
        let base = parse_braid("strands=4 1 -2 3 -2 1").unwrap();
        let fam = TwistFamily::new(base, TwistRegion::new(2, 3), Some(2)).unwrap();
        let bs = fam.brackets(3).unwrap();
        for m in 0..=3 {
            assert_eq!(bs[m as usize], bracket(&fam.word(m)).unwrap());
        }
    }

    #[test]
    fn insertion_position_is_irrelevant() {
        let base = parse_braid("strands=4 1 -2 3 -2 1 3").unwrap();
        let r = TwistRegion::new(1, 3);
        let front = TwistFamily::new(base.clone(), r, Some(0))
            .unwrap()
            .brackets(2)
            .unwrap();
        let end = TwistFamily::new(base, r, None)
            .unwrap()
            .brackets(2)
            .unwrap();
        assert_eq!(front, end);
    }
}
