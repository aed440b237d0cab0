use std::fmt;

use super::bits::k_subsets;
use super::{GroundSet, Ideal};
use crate::binom::binom;
use crate::{Error, Result};

/// Expansion refuses to materialize more generators than this.
pub const MAX_EXPANDED_GENERATORS: u128 = 1 << 22;

/// A sum of products `I_q J_r`, kept symbolically.
///
/// `I_q` (resp. `J_r`) is generated by all square-free monomials of degree
/// `q` in the x-block (resp. `r` in the y-block), with `I_0 = J_0 = S`.
///
/// Construction normalizes the term list: terms with `q > n` or `r > m` are
/// the zero ideal and vanish, a term `(q', r')` with some other term `(q, r)`
/// satisfying `q <= q'` and `r <= r'` is redundant and is dropped, and the
/// remaining terms are sorted by increasing `q` (hence decreasing `r`).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MixedSpec {
    ground: GroundSet,
    terms: Vec<(u32, u32)>,
}

impl MixedSpec {
    pub fn new<I>(ground: GroundSet, terms: I) -> Self
    where
        I: IntoIterator<Item = (u32, u32)>,
    {
        let mut terms: Vec<(u32, u32)> = terms
            .into_iter()
            .filter(|&(q, r)| q <= ground.n() && r <= ground.m())
            .collect();
        terms.sort_unstable();
        terms.dedup();
        let mut kept: Vec<(u32, u32)> = Vec::with_capacity(terms.len());
        for (q, r) in terms {
            // Earlier terms have q' <= q, so domination only needs r' <= r.
            if !kept.iter().any(|&(_, r0)| r0 <= r) {
                kept.push((q, r));
            }
        }
        Self {
            ground,
            terms: kept,
        }
    }

    pub fn ground(&self) -> GroundSet {
        self.ground
    }

    pub fn terms(&self) -> &[(u32, u32)] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.terms == [(0, 0)]
    }

    /// The same ideal with x and y exchanged.
    pub fn swapped(&self) -> MixedSpec {
        MixedSpec::new(
            self.ground.swapped(),
            self.terms.iter().map(|&(q, r)| (r, q)),
        )
    }

    /// Number of minimal generators, `Σ C(n,q) C(m,r)`.
    pub fn generator_count(&self) -> Result<u128> {
        let (n, m) = (self.ground.n(), self.ground.m());
        self.terms.iter().try_fold(0u128, |acc, &(q, r)| {
            binom(n as i64, q as i64)
                .checked_mul(binom(m as i64, r as i64))
                .and_then(|c| c.checked_add(acc))
                .ok_or(Error::Overflow("generator count"))
        })
    }

    /// Expands the spec into its minimal generators.
    pub fn make_ideal(&self) -> Result<Ideal> {
        let count = self.generator_count()?;
        if count > MAX_EXPANDED_GENERATORS {
            return Err(Error::TooManyGenerators(count));
        }
        let (n, m) = (self.ground.n(), self.ground.m());
        let mut gens = Vec::with_capacity(count as usize);
        for &(q, r) in &self.terms {
            for xs in k_subsets(n, q) {
                gens.extend(k_subsets(m, r).map(|ys| xs | (ys << n)));
            }
        }
        // Normalized terms are pairwise non-dominating, so no generator of
        // one term divides a generator of another.
        Ok(Ideal::from_minimal(self.ground, gens))
    }

    /// Krull dimension of `S/I` by parameter arithmetic: the largest `a + b`
    /// such that no term `(q, r)` has `q <= a` and `r <= b`. `None` for the
    /// unit ideal.
    pub fn krull_dim(&self) -> Option<u32> {
        let (n, m) = (self.ground.n(), self.ground.m());
        (0..=n)
            .flat_map(|a| (0..=m).map(move |b| (a, b)))
            .filter(|&(a, b)| !self.terms.iter().any(|&(q, r)| q <= a && r <= b))
            .map(|(a, b)| a + b)
            .max()
    }
}

fn format_term(f: &mut fmt::Formatter<'_>, (q, r): (u32, u32)) -> fmt::Result {
    match (q, r) {
        (q, 0) => write!(f, "I{q}"),
        (0, r) => write!(f, "J{r}"),
        (q, r) => write!(f, "I{q}*J{r}"),
    }
}

/// Terms are printed with the x-heavy ones first, e.g. `I2 + J2` or
/// `I3 + I2*J1 + J3`; the zero ideal prints as `0`.
impl fmt::Display for MixedSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (k, &term) in self.terms.iter().rev().enumerate() {
            if k > 0 {
                f.write_str(" + ")?;
            }
            format_term(f, term)?;
        }
        Ok(())
    }
}
