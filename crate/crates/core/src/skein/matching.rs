//! Noncrossing perfect matchings of `2n` boundary points.
//!
//! Points `0..n` sit on the left edge top to bottom, points `n..2n` on the
//! right edge top to bottom. Walking the boundary of the square clockwise
//! from the top-left corner visits `0, 1, .., n-1, 2n-1, 2n-2, .., n`; a
//! matching is planar exactly when it is noncrossing in that cyclic order, so
//! it corresponds to a balanced parenthesis word. Ranks follow the
//! lexicographic order of those words with `(` before `)`.

use std::fmt;

/// A Temperley–Lieb basis diagram.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PlanarMatching {
    n: usize,
    pairing: Vec<u16>,
}

#[inline]
fn boundary_position(n: usize, p: usize) -> usize {
    if p < n {
        p
    } else {
        3 * n - 1 - p
    }
}

impl PlanarMatching {
    /// Validates a pairing: a fixed-point-free involution with no crossing pairs.
    pub fn new(n: usize, pairing: Vec<u16>) -> Option<Self> {
        if pairing.len() != 2 * n {
            return None;
        }
        for (p, &q) in pairing.iter().enumerate() {
            let q = q as usize;
            if q >= 2 * n || q == p || pairing[q] as usize != p {
                return None;
            }
        }
        let m = Self { n, pairing };
        m.is_noncrossing().then_some(m)
    }

    pub(crate) fn from_raw(n: usize, pairing: Vec<u16>) -> Self {
        Self { n, pairing }
    }

    pub fn identity(n: usize) -> Self {
        let mut pairing = vec![0u16; 2 * n];
        for j in 0..n {
            pairing[j] = (n + j) as u16;
            pairing[n + j] = j as u16;
        }
        Self { n, pairing }
    }

    /// The generator `e_i`, `1 <= i < n`: left points `i-1, i` capped,
    /// right points `n+i-1, n+i` cupped, everything else straight through.
    pub fn generator(n: usize, i: usize) -> Option<Self> {
        if i == 0 || i >= n {
            return None;
        }
        let mut m = Self::identity(n);
        let (a, b) = (i - 1, i);
        m.pairing[a] = b as u16;
        m.pairing[b] = a as u16;
        m.pairing[n + a] = (n + b) as u16;
        m.pairing[n + b] = (n + a) as u16;
        Some(m)
    }

    pub fn strands(&self) -> usize {
        self.n
    }

    pub fn partner(&self, p: usize) -> usize {
        self.pairing[p] as usize
    }

    pub fn pairing(&self) -> &[u16] {
        &self.pairing
    }

    /// Number of strands running from the left edge to the right edge.
    pub fn through_strands(&self) -> usize {
        (0..self.n).filter(|&p| self.partner(p) >= self.n).count()
    }

    fn is_noncrossing(&self) -> bool {
        let n = self.n;
        let mut stack = Vec::with_capacity(n);
        let mut at = vec![0usize; 2 * n];
        for p in 0..2 * n {
            at[boundary_position(n, p)] = p;
        }
        for &p in &at {
            let q = self.partner(p);
            if boundary_position(n, q) > boundary_position(n, p) {
                stack.push(p);
            } else if stack.pop() != Some(q) {
                return false;
            }
        }
        stack.is_empty()
    }

    /// Balanced word in boundary order, `true` for an opening point.
    pub(crate) fn dyck_word(&self) -> Vec<bool> {
        let n = self.n;
        let mut word = vec![false; 2 * n];
        for p in 0..2 * n {
            let (cp, cq) = (
                boundary_position(n, p),
                boundary_position(n, self.partner(p)),
            );
            word[cp] = cq > cp;
        }
        word
    }

    pub(crate) fn from_dyck_word(n: usize, word: &[bool]) -> Self {
        let mut at = vec![0usize; 2 * n];
        for p in 0..2 * n {
            at[boundary_position(n, p)] = p;
        }
        let mut pairing = vec![0u16; 2 * n];
        let mut stack = Vec::with_capacity(n);
        for (c, &open) in word.iter().enumerate() {
            if open {
                stack.push(at[c]);
            } else {
                let p = stack.pop().expect("unbalanced word");
                pairing[p] = at[c] as u16;
                pairing[at[c]] = p as u16;
            }
        }
        Self { n, pairing }
    }
}

impl fmt::Debug for PlanarMatching {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let word: String = self
            .dyck_word()
            .iter()
            .map(|&o| if o { '(' } else { ')' })
            .collect();
        write!(f, "PlanarMatching({word})")
    }
}

/// Ballot-number table for ranking balanced words of length `2n`.
#[derive(Clone, Debug)]
pub(crate) struct DyckRanker {
    n: usize,
    // completions[i * (n + 2) + h]: ways to finish from position i at height h
    completions: Vec<u64>,
}

impl DyckRanker {
    pub(crate) fn new(n: usize) -> Self {
        let len = 2 * n;
        let w = n + 2;
        let mut completions = vec![0u64; (len + 1) * w];
        completions[len * w] = 1;
        for i in (0..len).rev() {
            for h in 0..=n {
                let up = if h < n {
                    completions[(i + 1) * w + h + 1]
                } else {
                    0
                };
                let down = if h > 0 {
                    completions[(i + 1) * w + h - 1]
                } else {
                    0
                };
                completions[i * w + h] = up + down;
            }
        }
        Self { n, completions }
    }

    fn ways(&self, i: usize, h: usize) -> u64 {
        if h > self.n {
            0
        } else {
            self.completions[i * (self.n + 2) + h]
        }
    }

    pub(crate) fn count(&self) -> u64 {
        self.ways(0, 0)
    }

    pub(crate) fn rank(&self, word: &[bool]) -> u64 {
        let mut rank = 0;
        let mut h = 0usize;
        for (i, &open) in word.iter().enumerate() {
            if open {
                h += 1;
            } else {
                rank += self.ways(i + 1, h + 1);
                h -= 1;
            }
        }
        rank
    }

    pub(crate) fn unrank(&self, mut rank: u64) -> Vec<bool> {
        let len = 2 * self.n;
        let mut word = Vec::with_capacity(len);
        let mut h = 0usize;
        for i in 0..len {
            let with_open = self.ways(i + 1, h + 1);
            if rank < with_open {
                word.push(true);
                h += 1;
            } else {
                rank -= with_open;
                word.push(false);
                h -= 1;
            }
        }
        word
    }
}

/// Glues the right edge of `a` to the left edge of `b`.
///
/// Returns the number of closed loops created and the resulting pairing.
pub(crate) fn compose(n: usize, a: &[u16], b: &[u16]) -> (u8, Vec<u16>) {
    const UNSET: u16 = u16::MAX;
    let mut out = vec![UNSET; 2 * n];
    // middle points, i.e. right edge of `a` glued to left edge of `b`
    let mut seen = vec![false; n];
    for p in 0..2 * n {
        if out[p] != UNSET {
            continue;
        }
        let (mut in_a, mut q) = if p < n {
            (true, a[p] as usize)
        } else {
            (false, b[p] as usize)
        };
        let end = loop {
            if in_a {
                if q < n {
                    break q;
                }
                seen[q - n] = true;
                q = b[q - n] as usize;
                in_a = false;
            } else {
                if q >= n {
                    break q;
                }
                seen[q] = true;
                q = a[n + q] as usize;
                in_a = true;
            }
        };
        out[p] = end as u16;
        out[end] = p as u16;
    }
    let mut loops = 0u8;
    for start in 0..n {
        if seen[start] {
            continue;
        }
        loops += 1;
        let mut mid = start;
        loop {
            seen[mid] = true;
            let q = b[mid] as usize;
            seen[q] = true;
            mid = a[n + q] as usize - n;
            if mid == start {
                break;
            }
        }
    }
    (loops, out)
}

/// Loops formed by closing each left point `j` to right point `n + j`.
pub(crate) fn closure_loops(n: usize, pairing: &[u16]) -> u8 {
    let mut seen = vec![false; 2 * n];
    let mut loops = 0u8;
    for start in 0..2 * n {
        if seen[start] {
            continue;
        }
        loops += 1;
        let mut p = start;
        loop {
            seen[p] = true;
            let q = pairing[p] as usize;
            seen[q] = true;
            // closure arc
            p = if q < n { q + n } else { q - n };
            if p == start {
                break;
            }
        }
    }
    loops
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn catalan_counts() {
        let expected = [1u64, 2, 5, 14, 42, 132, 429, 1430, 4862, 16796];
        for (i, &c) in expected.iter().enumerate() {
            assert_eq!(DyckRanker::new(i + 1).count(), c);
        }
        assert_eq!(DyckRanker::new(12).count(), 208012);
    }

    #[test]
    fn rank_unrank_bijection() {
        for n in 1..=6 {
            let r = DyckRanker::new(n);
            for k in 0..r.count() {
                let w = r.unrank(k);
                assert_eq!(r.rank(&w), k);
                let m = PlanarMatching::from_dyck_word(n, &w);
                assert!(PlanarMatching::new(n, m.pairing.clone()).is_some());
                assert_eq!(m.dyck_word(), w);
            }
        }
    }

    #[test]
    fn validation_rejects_crossings() {
        // left 0 with right 3 and left 1 with right 2 cross
        assert!(PlanarMatching::new(2, vec![3, 2, 1, 0]).is_none());
        assert!(PlanarMatching::new(2, vec![2, 3, 0, 1]).is_some());
        assert!(PlanarMatching::new(2, vec![0, 2, 1, 3]).is_none());
    }

    #[test]
    fn generator_squares_to_a_loop() {
        let e = PlanarMatching::generator(2, 1).unwrap();
        let (loops, out) = compose(2, e.pairing(), e.pairing());
        assert_eq!(loops, 1);
        assert_eq!(out, e.pairing());
    }

    #[test]
    fn identity_is_neutral() {
        for n in 1..=5 {
            let r = DyckRanker::new(n);
            let id = PlanarMatching::identity(n);
            for k in 0..r.count() {
                let d = PlanarMatching::from_dyck_word(n, &r.unrank(k));
                assert_eq!(
                    compose(n, id.pairing(), d.pairing()),
                    (0, d.pairing().to_vec())
                );
                assert_eq!(
                    compose(n, d.pairing(), id.pairing()),
                    (0, d.pairing().to_vec())
                );
            }
        }
    }

    #[test]
    fn tl_relations() {
        let e1 = PlanarMatching::generator(3, 1).unwrap();
        let e2 = PlanarMatching::generator(3, 2).unwrap();
        let (l1, p) = compose(3, e1.pairing(), e2.pairing());
        let (l2, q) = compose(3, &p, e1.pairing());
        assert_eq!((l1 + l2, q.as_slice()), (0, e1.pairing()));
        // distant generators commute
        let f1 = PlanarMatching::generator(4, 1).unwrap();
        let f3 = PlanarMatching::generator(4, 3).unwrap();
        assert_eq!(
            compose(4, f1.pairing(), f3.pairing()),
            compose(4, f3.pairing(), f1.pairing())
        );
    }

    #[test]
    fn closure_counts() {
        assert_eq!(closure_loops(1, PlanarMatching::identity(1).pairing()), 1);
        assert_eq!(closure_loops(3, PlanarMatching::identity(3).pairing()), 3);
        assert_eq!(
            closure_loops(2, PlanarMatching::generator(2, 1).unwrap().pairing()),
            1
        );
    }
}
