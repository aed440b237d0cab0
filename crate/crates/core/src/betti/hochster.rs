//! Brute-force Betti numbers of arbitrary square-free ideals.

use std::collections::BTreeMap;

use rayon::prelude::*;

use super::{BettiTable, Polynomial};
use crate::alexander::dual_complex_of;
use crate::homology::{link, reduced_homology_dims, Field};
use crate::ideal::Ideal;
use crate::{Error, Result};

/// The oracles enumerate all `2^(n+m)` subsets of the ground set.
pub const ORACLE_LIMIT: u32 = 22;

type Graded = BTreeMap<(usize, usize), u128>;

fn check_oracle_input(ideal: &Ideal) -> Result<()> {
    ideal.require_proper()?;
    let len = ideal.ground().len();
    if len > ORACLE_LIMIT {
        return Err(Error::GroundTooLargeForOracle {
            len,
            limit: ORACLE_LIMIT,
        });
    }
    Ok(())
}

/// Sums per-subset contributions `(i, value)` (ideal convention) into a table,
/// in parallel over subsets. Integer addition keeps the result independent of
/// the schedule.
fn accumulate<F>(ideal: &Ideal, field: Field, contribution: F) -> BettiTable
where
    F: Fn(u64) -> Vec<(usize, u128)> + Sync,
{
    let size = 1u64 << ideal.ground().len();
    let graded = (0..size)
        .into_par_iter()
        .fold(Graded::new, |mut acc, sigma| {
            let degree = sigma.count_ones() as usize;
            for (i, value) in contribution(sigma) {
                *acc.entry((i, degree)).or_insert(0) += value;
            }
            acc
        })
        .reduce(Graded::new, |mut a, b| {
            for (k, v) in b {
                *a.entry(k).or_insert(0) += v;
            }
            a
        });
    BettiTable::from_ideal_entries(
        ideal.ground(),
        field,
        graded.into_iter().map(|((i, j), v)| (i, j, v)),
    )
}

/// Hochster's formula in its link-in-the-dual form:
/// `β_{i,σ}(I) = dim_K H̃_{i-1}(link_{Δ*}(σ̄); K)`, summed over all subsets σ
/// of a given size. Only σ containing a generator are visited; for the others
/// `σ̄` is not a face of `Δ*`.
pub fn hochster_betti(ideal: &Ideal, field: Field) -> Result<BettiTable> {
    check_oracle_input(ideal)?;
    let ground = ideal.ground();
    let dual = dual_complex_of(ideal);
    Ok(accumulate(ideal, field, |sigma| {
        if !ideal.contains_support(sigma) {
            return Vec::new();
        }
        let lk = link(&dual, ground.complement(sigma)).expect("complement is a face of the dual");
        let homology = reduced_homology_dims(&lk, field).expect("links of faces are non-void");
        // homology[i] = dim H̃_{i-1}, which is β_{i,σ}(I).
        homology
            .into_iter()
            .enumerate()
            .filter(|&(_, h)| h > 0)
            .map(|(i, h)| (i, h as u128))
            .collect()
    }))
}

/// Hochster's formula in its induced-subcomplex form:
/// `β_{i,σ}(I) = dim_K H̃_{|σ|-i-2}(Δ|_σ; K)`. Independent of the dual
/// complex; used to cross-check [`hochster_betti`].
pub fn restriction_betti(ideal: &Ideal, field: Field) -> Result<BettiTable> {
    check_oracle_input(ideal)?;
    let complex = ideal.to_complex()?;
    Ok(accumulate(ideal, field, |sigma| {
        let size = sigma.count_ones() as usize;
        let restricted = complex.restrict(sigma);
        let homology = reduced_homology_dims(&restricted, field).expect("contains the empty face");
        // homology[k] = dim H̃_{k-1}; k - 1 = |σ| - i - 2.
        homology
            .into_iter()
            .enumerate()
            .filter(|&(k, h)| h > 0 && k < size)
            .map(|(k, h)| (size - 1 - k, h as u128))
            .collect()
    }))
}

/// `(1 - t)^{n+m} · Hilb(S/I, t) = Σ_{faces F} t^|F| (1 - t)^{n+m-|F|}`,
/// counting faces straight from the generators.
pub fn hilbert_numerator(ideal: &Ideal) -> Result<Polynomial> {
    check_oracle_input(ideal)?;
    let len = ideal.ground().len();
    let counts = (0..1u64 << len)
        .into_par_iter()
        .filter(|&s| !ideal.contains_support(s))
        .fold(
            || vec![0i128; len as usize + 1],
            |mut acc, s| {
                acc[s.count_ones() as usize] += 1;
                acc
            },
        )
        .reduce(
            || vec![0i128; len as usize + 1],
            |a, b| a.iter().zip(&b).map(|(x, y)| x + y).collect(),
        );
    let mut total = Polynomial::default();
    for (k, &count) in counts.iter().enumerate() {
        if count > 0 {
            total.add_shifted(&Polynomial::one_minus_t_pow(len - k as u32), k, count);
        }
    }
    Ok(total)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ideal::{GroundSet, IdealKind, MixedSpec};

    fn mixed(n: u32, m: u32, terms: &[(u32, u32)]) -> Ideal {
        MixedSpec::new(GroundSet::new(n, m).unwrap(), terms.iter().copied())
            .make_ideal()
            .unwrap()
    }

    fn ideal_entries(t: &BettiTable) -> Vec<(usize, usize, u128)> {
        t.entries()
            .filter(|&((i, _), _)| i > 0)
            .map(|((i, j), v)| (i - 1, j, v))
            .collect()
    }

    #[test]
    fn i2_in_three_variables() {
        let t = hochster_betti(&mixed(3, 0, &[(2, 0)]), Field::Rationals).unwrap();
        assert_eq!(ideal_entries(&t), vec![(0, 2, 3), (1, 3, 2)]);
    }

    #[test]
    fn principal_product() {
        let t = hochster_betti(&mixed(2, 3, &[(2, 3)]), Field::Rationals).unwrap();
        assert_eq!(ideal_entries(&t), vec![(0, 5, 1)]);
    }

    #[test]
    fn i1j1_in_two_plus_two() {
        let t = hochster_betti(&mixed(2, 2, &[(1, 1)]), Field::Rationals).unwrap();
        assert_eq!(ideal_entries(&t), vec![(0, 2, 4), (1, 3, 4), (2, 4, 1)]);
    }

    #[test]
    fn both_oracles_agree_on_small_cases() {
        for (n, m, terms) in [
            (3, 0, vec![(2, 0)]),
            (2, 2, vec![(1, 1)]),
            (2, 2, vec![(1, 2), (2, 1)]),
            (3, 2, vec![(0, 2), (2, 1)]),
        ] {
            let i = mixed(n, m, &terms);
            assert_eq!(
                hochster_betti(&i, Field::Rationals),
                restriction_betti(&i, Field::Rationals)
            );
        }
    }

    #[test]
    fn rejects_improper_and_large() {
        let g = GroundSet::new(3, 0).unwrap();
        assert_eq!(
            hochster_betti(&Ideal::zero(g), Field::Rationals),
            Err(Error::NotProper(IdealKind::Zero))
        );
        assert_eq!(
            hochster_betti(&Ideal::unit(g), Field::Rationals),
            Err(Error::NotProper(IdealKind::Unit))
        );
        let big = mixed(23, 0, &[(1, 0)]);
        assert!(matches!(
            hochster_betti(&big, Field::Rationals),
            Err(Error::GroundTooLargeForOracle { len: 23, .. })
        ));
    }

    #[test]
    fn hilbert_numerator_examples() {
        let x1 = Ideal::parse_gens(GroundSet::new(1, 0).unwrap(), "x1").unwrap();
        assert_eq!(hilbert_numerator(&x1).unwrap().coeffs(), &[1, -1]);
        assert_eq!(
            hilbert_numerator(&mixed(3, 0, &[(2, 0)])).unwrap().coeffs(),
            &[1, 0, -3, 2]
        );
        assert_eq!(
            hilbert_numerator(&mixed(2, 2, &[(1, 1)])).unwrap().coeffs(),
            &[1, 0, -4, 4, -1]
        );
    }
}
