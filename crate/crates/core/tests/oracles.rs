//! Cross-checks between independent computations of the same quantity.

mod common;

use common::{choose, random_ideals};
use mixprod::alexander::{dual, dual_complex};
use mixprod::betti::{hilbert_numerator, hochster_betti, restriction_betti};
use mixprod::homology::{reduced_homology_dims, ChainComplex};
use mixprod::ideal::k_subsets;
use mixprod::{Complex, Field, GroundSet, Ideal, MixedSpec};

/// Minimal generators of `∩_g (x_v : v ∈ g)`, one prime per generator of
/// the input, computed by repeated pairwise intersection of monomial ideals
/// (the intersection of two monomial ideals is generated by pairwise lcms).
fn prime_intersection(ideal: &Ideal) -> Vec<u64> {
    fn minimal(mut sets: Vec<u64>) -> Vec<u64> {
        sets.sort_unstable_by_key(|s| (s.count_ones(), *s));
        sets.dedup();
        let mut kept: Vec<u64> = Vec::new();
        for s in sets {
            if kept.iter().all(|&k| k & !s != 0) {
                kept.push(s);
            }
        }
        kept
    }
    let primes: Vec<Vec<u64>> = ideal
        .supports()
        .iter()
        .map(|&g| {
            (0..64)
                .filter(|v| g >> v & 1 == 1)
                .map(|v| 1u64 << v)
                .collect()
        })
        .collect();
    let mut acc = primes[0].clone();
    for p in &primes[1..] {
        let lcms = acc
            .iter()
            .flat_map(|&a| p.iter().map(move |&b| a | b))
            .collect();
        acc = minimal(lcms);
    }
    acc
}

fn sorted(v: &[u64]) -> Vec<u64> {
    let mut v = v.to_vec();
    v.sort_unstable();
    v
}

fn mixed(n: u32, m: u32, terms: &[(u32, u32)]) -> Ideal {
    MixedSpec::new(GroundSet::new(n, m).unwrap(), terms.iter().copied())
        .make_ideal()
        .unwrap()
}

#[test]
fn dual_equals_intersection_of_primes() {
    for ideal in random_ideals(11, 300, 9) {
        let ours = dual(&ideal).unwrap();
        assert_eq!(
            sorted(ours.supports()),
            sorted(&prime_intersection(&ideal)),
            "{ideal}"
        );
    }
}

#[test]
fn dual_equals_intersection_of_primes_on_every_small_ideal() {
    // Every nonempty family of nonempty supports on up to four vertices.
    for len in 1..=4u32 {
        let ground = GroundSet::new(len.div_ceil(2), len / 2).unwrap();
        let subsets = (1u64 << len) - 1;
        for family in 1u64..1 << subsets {
            let supports = (0..subsets).filter(|k| family >> k & 1 == 1).map(|k| k + 1);
            let ideal = Ideal::from_supports(ground, supports.collect::<Vec<_>>());
            assert_eq!(
                sorted(dual(&ideal).unwrap().supports()),
                sorted(&prime_intersection(&ideal)),
                "{ideal}"
            );
        }
    }
}

#[test]
fn dual_equals_intersection_of_primes_on_mixed_products() {
    for spec in mixprod::sweep::specs_up_to(8, &mixprod::sweep::Family::ALL) {
        let ideal = spec.make_ideal().unwrap();
        assert_eq!(
            sorted(dual(&ideal).unwrap().supports()),
            sorted(&prime_intersection(&ideal)),
            "{spec}"
        );
    }
}

#[test]
fn duality_is_an_involution() {
    for ideal in random_ideals(12, 300, 10) {
        assert_eq!(dual(&dual(&ideal).unwrap()).unwrap(), ideal);
    }
}

#[test]
fn dual_complex_faces_are_complements_of_nonfaces() {
    for ideal in random_ideals(13, 60, 7) {
        let delta = ideal.to_complex().unwrap();
        let star = dual_complex(&delta);
        let ground = ideal.ground();
        for tau in 0..=ground.full_mask() {
            assert_eq!(
                star.contains_face(ground.complement(tau)),
                !delta.contains_face(tau),
                "{ideal}"
            );
        }
    }
}

#[test]
fn stanley_reisner_round_trip() {
    for ideal in random_ideals(14, 300, 12) {
        let complex = ideal.to_complex().unwrap();
        assert_eq!(complex.to_ideal(), ideal);
        // Faces are exactly the sets avoiding every generator.
        if ideal.ground().len() <= 8 {
            for s in 0..=ideal.ground().full_mask() {
                assert_eq!(complex.contains_face(s), !ideal.contains_support(s));
            }
        }
    }
}

#[test]
fn boundary_of_boundary_vanishes() {
    for ideal in random_ideals(15, 100, 8) {
        let complex = ideal.to_complex().unwrap();
        let chain = ChainComplex::new(&complex).unwrap();
        for j in 1..=chain.top_dim() {
            assert!(chain.boundary(j - 1).mul(chain.boundary(j)).is_zero());
        }
    }
}

#[test]
fn euler_characteristic_matches_homology() {
    for field in [Field::Rationals, Field::Prime(2), Field::Prime(3)] {
        for ideal in random_ideals(16, 100, 8) {
            let complex = ideal.to_complex().unwrap();
            let f = complex.f_vector();
            let h = reduced_homology_dims(&complex, field).unwrap();
            let alt = |v: &[u64]| -> i64 {
                v.iter()
                    .enumerate()
                    .map(|(k, &x)| if k % 2 == 0 { x as i64 } else { -(x as i64) })
                    .sum()
            };
            assert_eq!(alt(&f), alt(&h), "{ideal} over {field}");
        }
    }
}

#[test]
fn cones_are_acyclic() {
    for ideal in random_ideals(17, 100, 7) {
        let inner = ideal.to_complex().unwrap();
        let len = ideal.ground().len();
        let ground = GroundSet::new(len + 1, 0).unwrap();
        let apex = 1u64 << len;
        let cone = Complex::from_faces(ground, inner.facets().iter().map(|&f| f | apex));
        let h = reduced_homology_dims(&cone, Field::Rationals).unwrap();
        assert!(h.iter().all(|&x| x == 0), "{ideal}: {h:?}");
    }
}

#[test]
fn spheres_have_one_top_class() {
    // Boundary of the k-simplex: all proper subsets of k + 1 vertices.
    for k in 1..=7u32 {
        let ground = GroundSet::new(k + 1, 0).unwrap();
        let sphere = Complex::from_faces(ground, k_subsets(k + 1, k));
        let h = reduced_homology_dims(&sphere, Field::Rationals).unwrap();
        let mut expected = vec![0u64; k as usize + 1];
        expected[k as usize] = 1;
        assert_eq!(h, expected);
    }
}

#[test]
fn both_hochster_forms_agree() {
    for field in [Field::Rationals, Field::Prime(2)] {
        for ideal in random_ideals(18, 200, 6) {
            assert_eq!(
                hochster_betti(&ideal, field).unwrap(),
                restriction_betti(&ideal, field).unwrap(),
                "{ideal}"
            );
        }
    }
}

#[test]
fn k_polynomial_equals_face_count_numerator() {
    for ideal in random_ideals(19, 200, 8) {
        let table = hochster_betti(&ideal, Field::Rationals).unwrap();
        assert_eq!(
            table.k_polynomial(),
            hilbert_numerator(&ideal).unwrap(),
            "{ideal}"
        );
    }
}

#[test]
fn exchanging_blocks_preserves_betti_numbers() {
    for n in 1..=4 {
        for m in 1..=4 {
            for q in 1..=n {
                for r in 1..=m {
                    let a = hochster_betti(&mixed(n, m, &[(q, r)]), Field::Rationals).unwrap();
                    let b = hochster_betti(&mixed(m, n, &[(r, q)]), Field::Rationals).unwrap();
                    let totals = |t: &mixprod::betti::BettiTable| -> Vec<u128> {
                        (0..=n + m).map(|i| t.total(i as usize)).collect()
                    };
                    assert_eq!(totals(&a), totals(&b));
                }
            }
        }
    }
}

#[test]
fn powers_of_the_maximal_ideal_follow_the_binomial_count() {
    // β_i(I_q) = C(n, q+i) C(q+i-1, i), evaluated here independently.
    for n in 1..=7u64 {
        for q in 1..=n {
            let t =
                hochster_betti(&mixed(n as u32, 0, &[(q as u32, 0)]), Field::Rationals).unwrap();
            for i in 0..=n {
                let expected = choose(n, q + i) * choose(q + i - 1, i);
                assert_eq!(t.ideal_betti(i as usize, (q + i) as usize), expected);
                assert_eq!(t.ideal_total(i as usize), expected);
            }
        }
    }
}

#[test]
fn field_characteristic_matters_off_the_mixed_class() {
    // Stanley–Reisner ideal of the six-vertex triangulation of RP^2: its
    // Betti table differs between characteristic 2 and characteristic 0.
    let facets = [
        [1, 2, 3],
        [1, 3, 4],
        [1, 4, 5],
        [1, 5, 6],
        [1, 2, 6],
        [2, 4, 5],
        [2, 3, 5],
        [3, 5, 6],
        [2, 4, 6],
        [3, 4, 6],
    ];
    let ground = GroundSet::new(6, 0).unwrap();
    let complex = Complex::from_faces(
        ground,
        facets
            .iter()
            .map(|f| f.iter().fold(0u64, |s, v| s | 1 << (v - 1))),
    );
    let ideal = complex.to_ideal();
    let q = hochster_betti(&ideal, Field::Rationals).unwrap();
    let two = hochster_betti(&ideal, Field::Prime(2)).unwrap();
    let three = hochster_betti(&ideal, Field::Prime(3)).unwrap();
    assert!(!q.same_numbers(&two));
    assert!(q.same_numbers(&three));
}
