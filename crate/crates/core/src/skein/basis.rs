use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use rayon::prelude::*;

use super::matching::{closure_loops, compose, DyckRanker, PlanarMatching};
use crate::error::{Error, Result};

/// Largest strand count the dense action tables are built for.
pub const MAX_STRANDS: usize = 12;

/// Enumerated basis of `TL_n` with precomputed right actions of the generators.
#[derive(Debug)]
pub struct TlBasis {
    n: usize,
    ranker: DyckRanker,
    matchings: Vec<PlanarMatching>,
    // actions[r * (n - 1) + (i - 1)] = (rank of D_r · e_i, loops created)
    actions: Vec<(u32, u8)>,
    closure: Vec<u8>,
    identity: u32,
}

impl TlBasis {
    fn build(n: usize) -> Self {
        let ranker = DyckRanker::new(n);
        let size = ranker.count() as usize;
        let matchings: Vec<PlanarMatching> = (0..size as u64)
            .into_par_iter()
            .map(|k| PlanarMatching::from_dyck_word(n, &ranker.unrank(k)))
            .collect();
        let gens: Vec<PlanarMatching> = (1..n)
            .map(|i| PlanarMatching::generator(n, i).unwrap())
            .collect();
        let actions: Vec<(u32, u8)> = matchings
            .par_iter()
            .flat_map_iter(|d| {
                gens.iter()
                    .map(|g| {
                        let (loops, out) = compose(n, d.pairing(), g.pairing());
                        let word = PlanarMatching::from_raw(n, out).dyck_word();
                        (ranker.rank(&word) as u32, loops)
                    })
                    .collect::<Vec<_>>()
            })
            .collect();
        let closure = matchings
            .iter()
            .map(|d| closure_loops(n, d.pairing()))
            .collect();
        let identity = ranker.rank(&PlanarMatching::identity(n).dyck_word()) as u32;
        Self {
            n,
            ranker,
            matchings,
            actions,
            closure,
            identity,
        }
    }

    /// Shared basis for `n` strands, built on first use.
    pub fn get(n: usize) -> Result<Arc<TlBasis>> {
        if n == 0 || n > MAX_STRANDS {
            return Err(Error::Capacity {
                what: "strands",
                value: n,
                limit: MAX_STRANDS,
            });
        }
        static CACHE: OnceLock<Mutex<HashMap<usize, Arc<TlBasis>>>> = OnceLock::new();
        let cache = CACHE.get_or_init(Default::default);
        if let Some(b) = cache.lock().unwrap().get(&n) {
            return Ok(b.clone());
        }
        // Build outside the lock; a racing builder just loses.
        let built = Arc::new(Self::build(n));
        Ok(cache.lock().unwrap().entry(n).or_insert(built).clone())
    }

    pub fn strands(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.matchings.len()
    }

    pub fn is_empty(&self) -> bool {
        self.matchings.is_empty()
    }

    pub fn matching(&self, rank: u32) -> &PlanarMatching {
        &self.matchings[rank as usize]
    }

    pub fn rank_of(&self, m: &PlanarMatching) -> Result<u32> {
        if m.strands() != self.n {
            return Err(Error::StrandMismatch(m.strands(), self.n));
        }
        Ok(self.ranker.rank(&m.dyck_word()) as u32)
    }

    pub(crate) fn rank_raw(&self, pairing: Vec<u16>) -> u32 {
        self.ranker
            .rank(&PlanarMatching::from_raw(self.n, pairing).dyck_word()) as u32
    }

    pub fn identity_rank(&self) -> u32 {
        self.identity
    }

    /// `D_rank · e_i` as `(rank, loops)`.
    #[inline]
    pub fn act(&self, rank: u32, i: usize) -> (u32, u8) {
        self.actions[rank as usize * (self.n - 1) + (i - 1)]
    }

    /// Loops in the trace closure of a basis diagram.
    #[inline]
    pub fn closure_loops(&self, rank: u32) -> u8 {
        self.closure[rank as usize]
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sizes_and_identity() {
        for n in 1..=7 {
            let b = TlBasis::get(n).unwrap();
            assert_eq!(b.closure_loops(b.identity_rank()), n as u8);
            assert_eq!(
                b.rank_of(&PlanarMatching::identity(n)).unwrap(),
                b.identity_rank()
            );
        }
        assert_eq!(TlBasis::get(6).unwrap().len(), 132);
        assert!(TlBasis::get(0).is_err());
        assert!(TlBasis::get(13).is_err());
    }

    #[test]
    fn generator_actions_are_idempotent_up_to_loop() {
        let b = TlBasis::get(5).unwrap();
        for r in 0..b.len() as u32 {
            for i in 1..5 {
                let (r1, _) = b.act(r, i);
                assert_eq!(b.act(r1, i), (r1, 1));
            }
        }
    }
}
