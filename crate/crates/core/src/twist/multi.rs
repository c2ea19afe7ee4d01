use rayon::prelude::*;
use serde::Serialize;

use super::{TwistExponents, TwistRegion};
use crate::error::{Error, Result};
use crate::laurent::{gcd, LaurentPolynomial, RationalFunction, Var};
use crate::mahler::{mahler_univariate, BoydLawtonConfig, Diagnostics, MahlerMethod, MahlerResult};
use crate::roots::DEGREE_CAP;
use crate::skein::{bracket, BraidWord};

fn a_mono(e: i64) -> LaurentPolynomial {
    LaurentPolynomial::monomial(Var::A, e, 1)
}

/// A braid with independent full-twist parameters on several regions.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MultiTwistFamily {
    pub base: BraidWord,
    /// Region and insertion point (`None` = end of word) of each parameter.
    /// Twists at the same point appear in list order.
    pub twists: Vec<(TwistRegion, Option<usize>)>,
}

impl MultiTwistFamily {
    pub fn new(base: BraidWord, twists: Vec<(TwistRegion, Option<usize>)>) -> Result<Self> {
        if twists.is_empty() {
            return Err(Error::InvalidArgument(
                "multi-twist family needs at least one region".into(),
            ));
        }
        for (region, pos) in &twists {
            region.validate(base.strands())?;
            if pos.is_some_and(|p| p > base.len()) {
                return Err(Error::InvalidArgument(format!(
                    "insertion point {} beyond word length {}",
                    pos.unwrap(),
                    base.len()
                )));
            }
        }
        Ok(Self { base, twists })
    }

    pub fn exponents(&self) -> Vec<TwistExponents> {
        self.twists
            .iter()
            .map(|(r, _)| TwistExponents::new(r.width))
            .collect()
    }

    fn check_arity(&self, ms: &[u32]) -> Result<()> {
        if ms.len() != self.twists.len() {
            return Err(Error::InvalidArgument(format!(
                "expected {} twist parameters, got {}",
                self.twists.len(),
                ms.len()
            )));
        }
        Ok(())
    }

    /// The braid of `L_{m_1, …, m_s}`.
    pub fn word(&self, ms: &[u32]) -> Result<BraidWord> {
        self.check_arity(ms)?;
        let len = self.base.len();
        let mut letters = Vec::new();
        for p in 0..=len {
            for ((region, pos), &m) in self.twists.iter().zip(ms) {
                if pos.unwrap_or(len) == p {
                    letters.extend(region.full_twist_letters().repeat(m as usize));
                }
            }
            if p < len {
                letters.push(self.base.letters()[p]);
            }
        }
        BraidWord::new(self.base.strands(), letters)
    }

    pub fn writhe(&self, ms: &[u32]) -> i64 {
        self.base.writhe()
            + self
                .twists
                .iter()
                .zip(ms)
                .map(|((r, _), &m)| r.framing() * m as i64)
                .sum::<i64>()
    }

    pub fn bracket(&self, ms: &[u32]) -> Result<LaurentPolynomial> {
        bracket(&self.word(ms)?)
    }
}

/// Exact multi-parameter limit data.
///
/// `⟨L_m⟩ = A^{Σ_j f_j m_j} Σ_I (Π_j A^{-4 k_{j,I_j} m_j}) N_I / D` where
/// `f_j = n_j(n_j - 1)`, `N_I` are Laurent polynomials and `D` is a common
/// denominator.
#[derive(Clone, Debug, Serialize)]
pub struct MultiLimit {
    pub exponents: Vec<TwistExponents>,
    pub framings: Vec<i64>,
    /// `(K, N_K)` with `K_j = k_{j,I_j}`.
    pub terms: Vec<(Vec<i64>, LaurentPolynomial)>,
    pub denominator: LaurentPolynomial,
    pub held_out: Vec<Vec<u32>>,
}

impl MultiLimit {
    /// Reconstructs `⟨L_m⟩`.
    pub fn bracket_at(&self, ms: &[u32]) -> Result<LaurentPolynomial> {
        if ms.len() != self.framings.len() {
            return Err(Error::InvalidArgument(
                "wrong number of twist parameters".into(),
            ));
        }
        let mut sum = LaurentPolynomial::zero(Var::A);
        for (k, n) in &self.terms {
            let e: i64 = k.iter().zip(ms).map(|(k, &m)| -4 * k * m as i64).sum();
            sum.add_shifted(n, e, false);
        }
        let framing: i64 = self
            .framings
            .iter()
            .zip(ms)
            .map(|(f, &m)| f * m as i64)
            .sum();
        Ok(sum.exact_divide(&self.denominator)?.shift(framing))
    }

    /// Numerator under `A = z`, `x_j = z^{d^j}` (`ν(1, d, …, d^s) = d`).
    pub fn specialize(&self, d: i64) -> LaurentPolynomial {
        let mut out = LaurentPolynomial::zero(Var::A);
        for (k, n) in &self.terms {
            let mut e = 0i64;
            let mut power = 1i64;
            for kj in k {
                power = power.saturating_mul(d);
                e = e.saturating_add(kj.saturating_mul(power));
            }
            out.add_shifted(n, e, false);
        }
        out
    }

    /// A schedule short enough for nested specialisations to stay under the
    /// root finder's degree cap.
    pub fn default_config() -> BoydLawtonConfig {
        BoydLawtonConfig {
            schedule: vec![2, 3, 4, 6, 8, 12, 16],
            tolerance: 1e-4,
        }
    }
}

/// `c_i` weights along one axis: coefficients of `Π_{j≠i}(S - X_j)` and
/// `Π_{j≠i}(X_i - X_j)`, with `X_j = A^{-4k_j}`.
fn axis_weights(k: &[i64]) -> Vec<(Vec<LaurentPolynomial>, LaurentPolynomial)> {
    let nodes: Vec<LaurentPolynomial> = k.iter().map(|&k| a_mono(-4 * k)).collect();
    (0..nodes.len())
        .map(|i| {
            let mut e = vec![a_mono(0)];
            let mut den = a_mono(0);
            for (j, x) in nodes.iter().enumerate() {
                if j == i {
                    continue;
                }
                let mut next = vec![LaurentPolynomial::zero(Var::A); e.len() + 1];
                for (p, c) in e.iter().enumerate() {
                    next[p + 1] += c;
                    next[p] -= &(c * x);
                }
                e = next;
                den = &den * &(&nodes[i] - x);
            }
            (e, den)
        })
        .collect()
}

/// All multi-indices of a box with the given side lengths, last axis fastest.
fn grid(sides: &[usize]) -> Vec<Vec<usize>> {
    let mut out = vec![Vec::new()];
    for &s in sides {
        out = out
            .into_iter()
            .flat_map(|p| {
                (0..s).map(move |i| {
                    let mut q = p.clone();
                    q.push(i);
                    q
                })
            })
            .collect();
    }
    out
}

/// Tensor interpolation on the grid `m_j ∈ 0..=[n_j/2]`, validated at two
/// off-grid points.
pub fn recover_multi_limit(family: &MultiTwistFamily) -> Result<MultiLimit> {
    let exponents = family.exponents();
    let framings: Vec<i64> = family.twists.iter().map(|(r, _)| r.framing()).collect();
    let sides: Vec<usize> = exponents.iter().map(TwistExponents::len).collect();
    let points = grid(&sides);

    let reduced: Vec<LaurentPolynomial> = points
        .par_iter()
        .map(|p| {
            let ms: Vec<u32> = p.iter().map(|&m| m as u32).collect();
            let b = family.bracket(&ms)?;
            let f: i64 = framings.iter().zip(&ms).map(|(f, &m)| f * m as i64).sum();
            Ok(b.shift(-f))
        })
        .collect::<Result<_>>()?;

    let weights: Vec<_> = exponents.iter().map(|e| axis_weights(&e.k)).collect();
    let slices: Vec<(Vec<i64>, RationalFunction)> = points
        .par_iter()
        .map(|index| {
            let mut num = LaurentPolynomial::zero(Var::A);
            for (m, b) in points.iter().zip(&reduced) {
                let mut w = a_mono(0);
                for (j, (&i, &mj)) in index.iter().zip(m).enumerate() {
                    w = &w * &weights[j][i].0[mj];
                    if w.is_zero() {
                        break;
                    }
                }
                if !w.is_zero() {
                    num += &(&w * b);
                }
            }
            let mut den = a_mono(0);
            for (j, &i) in index.iter().enumerate() {
                den = &den * &weights[j][i].1;
            }
            if den.is_zero() {
                return Err(Error::SingularSystem);
            }
            let k = index
                .iter()
                .enumerate()
                .map(|(j, &i)| exponents[j].k[i])
                .collect();
            Ok((k, RationalFunction::new(num, den)?))
        })
        .collect::<Result<_>>()?;

    let mut denominator = a_mono(0);
    for (_, c) in &slices {
        let d = c.denominator();
        let g = gcd(&denominator, d);
        denominator = (&denominator * d).exact_divide(&g)?;
    }
    let terms = slices
        .iter()
        .filter(|(_, c)| !c.is_zero())
        .map(|(k, c)| {
            let scale = denominator.exact_divide(c.denominator())?;
            Ok((k.clone(), c.numerator() * &scale))
        })
        .collect::<Result<Vec<_>>>()?;

    let held_out: Vec<Vec<u32>> = vec![
        exponents.iter().map(|e| e.len() as u32 + 1).collect(),
        exponents
            .iter()
            .enumerate()
            .map(|(j, e)| e.len() as u32 + if j % 2 == 0 { 4 } else { 0 })
            .collect(),
    ];
    let limit = MultiLimit {
        exponents,
        framings,
        terms,
        denominator,
        held_out: held_out.clone(),
    };
    for ms in &held_out {
        if limit.bracket_at(ms)? != family.bracket(ms)? {
            return Err(Error::HeldOutMismatch(ms[0] as i64));
        }
    }
    Ok(limit)
}

/// Mahler measure of the multi-parameter limit by nested Boyd–Lawton
/// specialisation, divided by `M(D)`.
pub fn limit_mahler_multi(
    family: &MultiTwistFamily,
    config: &BoydLawtonConfig,
) -> Result<MahlerResult> {
    let limit = recover_multi_limit(family)?;
    let den = mahler_univariate(&limit.denominator)?;
    let mut diagnostics = Diagnostics::default();
    let mut value = f64::NAN;
    let mut error_estimate = f64::INFINITY;
    let mut converged = false;
    let mut max_residual = den.diagnostics.max_residual.unwrap_or(0.0);
    for &d in &config.schedule {
        let g = limit.specialize(d);
        if g.span() as usize > DEGREE_CAP {
            diagnostics.notes.push(format!(
                "schedule stopped before d = {d}: degree {} exceeds cap",
                g.span()
            ));
            break;
        }
        let m = mahler_univariate(&g)?;
        max_residual = max_residual.max(m.diagnostics.max_residual.unwrap_or(0.0));
        let v = m.value / den.value;
        if let Some(&(_, p)) = diagnostics.history.last() {
            error_estimate = (v - p).abs();
        }
        value = v;
        diagnostics.history.push((d as u64, v));
        if error_estimate < config.tolerance {
            converged = true;
            break;
        }
    }
    if diagnostics.history.is_empty() {
        return Err(Error::DegreeCap {
            degree: limit
                .specialize(config.schedule.first().copied().unwrap_or(2))
                .span() as usize,
            cap: DEGREE_CAP,
        });
    }
    diagnostics.max_residual = Some(max_residual);
    Ok(MahlerResult {
        value,
        method: MahlerMethod::BoydLawton,
        error_estimate,
        converged,
        diagnostics,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::skein::parse_braid;
    use crate::twist::{limit_mahler, recover_limit_polynomial, TwistFamily};

    #[test]
    fn word_places_twists_in_order() {
        let base = parse_braid("strands=4 1 -2 3").unwrap();
        let fam = MultiTwistFamily::new(
            base,
            vec![
                (TwistRegion::new(1, 2), Some(1)),
                (TwistRegion::new(3, 2), None),
                (TwistRegion::new(2, 2), Some(1)),
            ],
        )
        .unwrap();
        assert_eq!(
            fam.word(&[1, 1, 2]).unwrap().letters(),
            &[1, 1, 1, 2, 2, 2, 2, -2, 3, 3, 3]
        );
        assert_eq!(fam.writhe(&[1, 1, 2]), 1 + 2 + 2 + 4);
        assert!(fam.word(&[1, 1]).is_err());
    }

    #[test]
    fn two_parameters_reconstruct_brackets() {
        let base = parse_braid("strands=4 1 -2 3 -2 1 -3").unwrap();
        let fam = MultiTwistFamily::new(
            base,
            vec![
                (TwistRegion::new(1, 2), Some(2)),
                (TwistRegion::new(2, 3), None),
            ],
        )
        .unwrap();
        let limit = recover_multi_limit(&fam).unwrap();
        for ms in [[0u32, 0], [3, 1], [1, 4], [5, 5]] {
            assert_eq!(
                limit.bracket_at(&ms).unwrap(),
                fam.bracket(&ms).unwrap(),
                "{ms:?}"
            );
        }
    }

    #[test]
    fn single_region_agrees_with_one_parameter_limit() {
        let base = parse_braid("strands=3 1 -2 1 -2").unwrap();
        let region = TwistRegion::new(1, 3);
        let multi = MultiTwistFamily::new(base.clone(), vec![(region, None)]).unwrap();
        let a = limit_mahler_multi(&multi, &BoydLawtonConfig::default()).unwrap();
        let single = recover_limit_polynomial(&TwistFamily::at_end(base, region).unwrap()).unwrap();
        let b = limit_mahler(&single, &BoydLawtonConfig::default()).unwrap();
        assert!(
            (a.value - b.value).abs() < 1e-3,
            "{} vs {}",
            a.value,
            b.value
        );
    }
}
