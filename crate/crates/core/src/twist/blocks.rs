use num_bigint::BigInt;
use num_traits::Zero;
use serde::Serialize;

use crate::laurent::{serialize_bigint, serialize_bigints};

pub const DEFAULT_MIN_SEPARATOR: usize = 4;

/// Odd regions separate blocks by zeros, even ones by runs `α, -α, α, …`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Parity {
    Odd,
    Even,
}

impl Parity {
    pub fn of_width(n: usize) -> Self {
        if n.is_multiple_of(2) {
            Parity::Even
        } else {
            Parity::Odd
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum SeparatorKind {
    Zeros,
    /// The run starts with `α` and alternates sign.
    Alternating(#[serde(serialize_with = "serialize_bigint")] BigInt),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Separator {
    pub start: usize,
    pub len: usize,
    pub kind: SeparatorKind,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Block {
    pub start: usize,
    #[serde(serialize_with = "serialize_bigints")]
    pub coeffs: Vec<BigInt>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BlockDecomposition {
    pub parity: Parity,
    pub blocks: Vec<Block>,
    pub separators: Vec<Separator>,
}

impl BlockDecomposition {
    pub fn contents(&self) -> Vec<&[BigInt]> {
        self.blocks.iter().map(|b| b.coeffs.as_slice()).collect()
    }

    /// Same block contents, regardless of where they sit.
    pub fn same_blocks(&self, other: &Self) -> bool {
        self.contents() == other.contents()
    }

    /// Constants `α` of the alternating separators, in order.
    pub fn alternating_constants(&self) -> Vec<BigInt> {
        self.separators
            .iter()
            .filter_map(|s| match &s.kind {
                SeparatorKind::Alternating(a) => Some(a.clone()),
                SeparatorKind::Zeros => None,
            })
            .collect()
    }
}

/// Splits a coefficient vector into blocks and maximal separator runs of
/// length at least `min_separator`.
///
/// For even parity a run of odd length with `α ≠ 0` gives its last entry
/// to the following block, so every separator is a whole number of
/// `α, -α` pairs. Zero runs count as separators for either parity.
pub fn detect_blocks(
    coeffs: &[BigInt],
    parity: Parity,
    min_separator: usize,
) -> BlockDecomposition {
    let len = coeffs.len();
    if coeffs.iter().all(Zero::is_zero) {
        return BlockDecomposition {
            parity,
            blocks: Vec::new(),
            separators: if len == 0 {
                Vec::new()
            } else {
                vec![Separator {
                    start: 0,
                    len,
                    kind: SeparatorKind::Zeros,
                }]
            },
        };
    }
    let min_separator = min_separator.max(1);
    let mut separators = Vec::new();
    let mut i = 0;
    while i < len {
        let c = &coeffs[i];
        let mut j = i;
        match parity {
            Parity::Odd => {
                while j + 1 < len && c.is_zero() && coeffs[j + 1].is_zero() {
                    j += 1;
                }
            }
            Parity::Even => {
                while j + 1 < len && coeffs[j + 1] == -&coeffs[j] {
                    j += 1;
                }
            }
        }
        let mut run = j - i + 1;
        let is_candidate = parity == Parity::Even || c.is_zero();
        if parity == Parity::Even && !c.is_zero() && run % 2 == 1 {
            run -= 1;
        }
        if is_candidate && run >= min_separator {
            separators.push(Separator {
                start: i,
                len: run,
                kind: if c.is_zero() {
                    SeparatorKind::Zeros
                } else {
                    SeparatorKind::Alternating(c.clone())
                },
            });
            i += run;
        } else {
            i = j + 1;
        }
    }
    let mut blocks = Vec::new();
    let mut pos = 0;
    for s in separators.iter().chain(std::iter::once(&Separator {
        start: len,
        len: 0,
        kind: SeparatorKind::Zeros,
    })) {
        if s.start > pos {
            blocks.push(Block {
                start: pos,
                coeffs: coeffs[pos..s.start].to_vec(),
            });
        }
        pos = s.start + s.len;
    }
    BlockDecomposition {
        parity,
        blocks,
        separators,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(xs: &[i64]) -> Vec<BigInt> {
        xs.iter().map(|&x| x.into()).collect()
    }

    #[test]
    fn zero_separated() {
        let c = v(&[1, -1, 0, 0, 0, 0, 0, 2, 3, 0, 0, 0, 0, 4]);
        let d = detect_blocks(&c, Parity::Odd, 4);
        assert_eq!(
            d.contents(),
            vec![&v(&[1, -1])[..], &v(&[2, 3])[..], &v(&[4])[..]]
        );
        assert_eq!(d.separators.len(), 2);
        // short zero runs stay inside blocks
        let d = detect_blocks(&v(&[1, 0, 0, 2]), Parity::Odd, 4);
        assert_eq!(d.blocks.len(), 1);
    }

    #[test]
    fn alternating_trims_odd_runs() {
        let c = v(&[1, 0, 1, -1, 1, -1, 1, 4, 5, 7, -7, 7, -7, 6]);
        let d = detect_blocks(&c, Parity::Even, 4);
        assert_eq!(
            d.contents(),
            vec![&v(&[1, 0])[..], &v(&[1, 4, 5])[..], &v(&[6])[..]]
        );
        assert_eq!(d.alternating_constants(), v(&[1, 7]));
    }

    #[test]
    fn all_zero() {
        let d = detect_blocks(&v(&[0, 0, 0]), Parity::Odd, 4);
        assert!(d.blocks.is_empty());
        assert_eq!(d.separators.len(), 1);
    }

    #[test]
    fn tiles_exactly() {
        let c = v(&[3, 0, 0, 0, 0, 0, 2, -2, 2, -2, 2, 1, 0, 0, 0, 0, 5]);
        for parity in [Parity::Odd, Parity::Even] {
            let d = detect_blocks(&c, parity, 4);
            let covered: usize = d.blocks.iter().map(|b| b.coeffs.len()).sum::<usize>()
                + d.separators.iter().map(|s| s.len).sum::<usize>();
            assert_eq!(covered, c.len());
        }
    }
}
