use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A braid on `strands` strands; letter `i > 0` is `σ_i`, `i < 0` is `σ_{|i|}^{-1}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct BraidWord {
    strands: usize,
    letters: Vec<i32>,
}

impl BraidWord {
    pub fn new(strands: usize, letters: Vec<i32>) -> Result<Self> {
        if strands == 0 {
            return Err(Error::InvalidArgument(
                "a braid needs at least one strand".into(),
            ));
        }
        for &l in &letters {
            if l == 0 || l.unsigned_abs() as usize >= strands {
                return Err(Error::IndexOutOfRange {
                    index: l as i64,
                    strands,
                });
            }
        }
        Ok(Self { strands, letters })
    }

    pub fn identity(strands: usize) -> Result<Self> {
        Self::new(strands, Vec::new())
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn letters(&self) -> &[i32] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn writhe(&self) -> i64 {
        self.letters.iter().map(|l| l.signum() as i64).sum()
    }

    /// Where each strand position ends up: `perm[start] = end`.
    pub fn permutation(&self) -> Vec<usize> {
        let mut at: Vec<usize> = (0..self.strands).collect(); // at[pos] = strand
        for &l in &self.letters {
            let i = l.unsigned_abs() as usize;
            at.swap(i - 1, i);
        }
        let mut perm = vec![0; self.strands];
        for (pos, &s) in at.iter().enumerate() {
            perm[s] = pos;
        }
        perm
    }

    /// Number of components of the closure.
    pub fn components(&self) -> usize {
        let perm = self.permutation();
        let mut seen = vec![false; self.strands];
        let mut count = 0;
        for s in 0..self.strands {
            if !seen[s] {
                count += 1;
                let mut p = s;
                while !seen[p] {
                    seen[p] = true;
                    p = perm[p];
                }
            }
        }
        count
    }

    pub fn is_knot(&self) -> bool {
        self.components() == 1
    }

    /// Strand index (0-based) of the component each strand position belongs to.
    pub fn component_labels(&self) -> Vec<usize> {
        let perm = self.permutation();
        let mut label = vec![usize::MAX; self.strands];
        let mut next = 0;
        for s in 0..self.strands {
            if label[s] == usize::MAX {
                let mut p = s;
                while label[p] == usize::MAX {
                    label[p] = next;
                    p = perm[p];
                }
                next += 1;
            }
        }
        label
    }

    pub fn concat(&self, other: &Self) -> Result<Self> {
        if self.strands != other.strands {
            return Err(Error::StrandMismatch(self.strands, other.strands));
        }
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        Ok(Self {
            strands: self.strands,
            letters,
        })
    }

    /// Inserts letters at `position` (0 = front, `len()` = end).
    pub fn insert(&self, position: usize, fragment: &[i32]) -> Result<Self> {
        if position > self.letters.len() {
            return Err(Error::InvalidArgument(format!(
                "insertion point {position} beyond word length {}",
                self.letters.len()
            )));
        }
        let mut letters = self.letters[..position].to_vec();
        letters.extend_from_slice(fragment);
        letters.extend_from_slice(&self.letters[position..]);
        Self::new(self.strands, letters)
    }

    pub fn inverse(&self) -> Self {
        Self {
            strands: self.strands,
            letters: self.letters.iter().rev().map(|l| -l).collect(),
        }
    }

    pub fn mirror(&self) -> Self {
        Self {
            strands: self.strands,
            letters: self.letters.iter().map(|l| -l).collect(),
        }
    }

    pub fn power(&self, k: u32) -> Self {
        Self {
            strands: self.strands,
            letters: self.letters.repeat(k as usize),
        }
    }

    /// Same letters viewed on more strands.
    pub fn widen(&self, strands: usize) -> Result<Self> {
        Self::new(strands, self.letters.clone())
    }
}

impl fmt::Display for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "strands={}", self.strands)?;
        for l in &self.letters {
            write!(f, " {l}")?;
        }
        Ok(())
    }
}

/// Parses whitespace-separated signed generator indices with an optional
/// leading `strands=k`. Without a header the strand count is one more than
/// the largest index used.
pub fn parse_braid(text: &str) -> Result<BraidWord> {
    let mut strands: Option<usize> = None;
    let mut letters = Vec::new();
    let mut offsets = Vec::new();
    let base = text.as_ptr() as usize;
    for (k, token) in text.split_whitespace().enumerate() {
        let offset = token.as_ptr() as usize - base;
        if let Some(value) = token.strip_prefix("strands=") {
            if k != 0 {
                return Err(Error::Parse {
                    offset,
                    message: "strand header must come first".into(),
                });
            }
            let n: usize = value.parse().map_err(|_| Error::Parse {
                offset: offset + "strands=".len(),
                message: format!("invalid strand count {value:?}"),
            })?;
            if n == 0 {
                return Err(Error::Parse {
                    offset: offset + "strands=".len(),
                    message: "strand count must be positive".into(),
                });
            }
            strands = Some(n);
            continue;
        }
        let l: i32 = token.parse().map_err(|_| Error::Parse {
            offset,
            message: format!("expected a signed generator index, found {token:?}"),
        })?;
        if l == 0 {
            return Err(Error::Parse {
                offset,
                message: "generator index 0 does not exist".into(),
            });
        }
        letters.push(l);
        offsets.push(offset);
    }
    let needed = letters
        .iter()
        .map(|l| l.unsigned_abs() as usize + 1)
        .max()
        .unwrap_or(1);
    let strands = match strands {
        Some(n) => {
            if let Some(pos) = letters.iter().position(|l| l.unsigned_abs() as usize >= n) {
                return Err(Error::Parse {
                    offset: offsets[pos],
                    message: format!("generator {} needs more than {n} strands", letters[pos]),
                });
            }
            n
        }
        None => needed,
    };
    BraidWord::new(strands, letters)
}

impl FromStr for BraidWord {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_braid(s)
    }
}
