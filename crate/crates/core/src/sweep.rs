//! Exhaustive comparisons of the closed formulas against the oracles over
//! every mixed product ideal on a bounded ground set.
//!
//! Each [`Check`] compares one family of closed results with brute force.
//! Cases are evaluated in parallel; failures are sorted before they are
//! returned so reports do not depend on scheduling.

use std::collections::HashMap;

use rayon::prelude::*;

use crate::alexander::{closed_dual, dual};
use crate::betti::{
    closed_betti_dual_mixed, closed_betti_iqjr, closed_betti_mixed, closed_betti_table,
    hochster_betti, BettiTable,
};
use crate::cm::{classify_cm, closed_krull_dim, closed_type, cm_report, CmReport};
use crate::homology::Field;
use crate::ideal::{GroundSet, MixedSpec};
use crate::shape::Shape;
use crate::Result;

/// Parameter families of mixed product ideals.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Family {
    /// `I_q` or `J_r` alone.
    Power,
    /// `I_s + J_r`, `s, r >= 1`.
    SumOfPowers,
    /// `I_q J_r`, `q, r >= 1`.
    Product,
    /// `I_q J_r + I_s J_t` with exactly one of `q`, `t` zero.
    ProductPlusPower,
    /// `I_q J_r + I_s J_t`, `1 <= q < s`, `1 <= t < r`.
    TwoProducts,
    /// `I_s + I_q J_t + J_r`, `1 <= q < s`, `1 <= t < r`.
    ThreeTerm,
}

impl Family {
    pub const ALL: [Family; 6] = [
        Family::Power,
        Family::SumOfPowers,
        Family::Product,
        Family::ProductPlusPower,
        Family::TwoProducts,
        Family::ThreeTerm,
    ];

    /// Every member of the family on `ground`, in a fixed order.
    pub fn specs(self, ground: GroundSet) -> Vec<MixedSpec> {
        let (n, m) = (ground.n(), ground.m());
        let mut terms: Vec<Vec<(u32, u32)>> = Vec::new();
        match self {
            Family::Power => {
                terms.extend((1..=n).map(|q| vec![(q, 0)]));
                terms.extend((1..=m).map(|r| vec![(0, r)]));
            }
            Family::SumOfPowers => {
                for s in 1..=n {
                    for r in 1..=m {
                        terms.push(vec![(0, r), (s, 0)]);
                    }
                }
            }
            Family::Product => {
                for q in 1..=n {
                    for r in 1..=m {
                        terms.push(vec![(q, r)]);
                    }
                }
            }
            Family::ProductPlusPower | Family::TwoProducts | Family::ThreeTerm => {
                for q in 0..=n {
                    for s in q + 1..=n {
                        for r in 1..=m {
                            for t in 0..r {
                                let keep = match self {
                                    Family::ProductPlusPower => (q == 0) != (t == 0),
                                    _ => q >= 1 && t >= 1,
                                };
                                if !keep {
                                    continue;
                                }
                                terms.push(if self == Family::ThreeTerm {
                                    vec![(s, 0), (q, t), (0, r)]
                                } else {
                                    vec![(q, r), (s, t)]
                                });
                            }
                        }
                    }
                }
            }
        }
        terms
            .into_iter()
            .map(|t| MixedSpec::new(ground, t))
            .collect()
    }
}

/// All ground sets with `1 <= n + m <= max_vertices`, ordered by size then `n`.
pub fn grounds(max_vertices: u32) -> Vec<GroundSet> {
    let mut out = Vec::new();
    for len in 1..=max_vertices {
        for n in (0..=len).rev() {
            if let Ok(g) = GroundSet::new(n, len - n) {
                out.push(g);
            }
        }
    }
    out
}

/// Every member of the given families on every ground set up to `max_vertices`.
pub fn specs_up_to(max_vertices: u32, families: &[Family]) -> Vec<MixedSpec> {
    let mut out = Vec::new();
    for g in grounds(max_vertices) {
        for family in families {
            out.extend(family.specs(g));
        }
    }
    out
}

/// Outcome of one comparison over a set of cases.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    pub name: &'static str,
    pub cases: usize,
    /// One line per failing case, sorted.
    pub failures: Vec<String>,
}

impl Check {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    /// Runs `case` on every parameter set; `Ok(None)` means the case does not apply,
    /// `Ok(Some(false))` or `Err` is a failure.
    pub fn run<F>(name: &'static str, specs: &[MixedSpec], case: F) -> Check
    where
        F: Fn(&MixedSpec) -> Result<Option<bool>> + Sync,
    {
        let results: Vec<(bool, Option<String>)> = specs
            .par_iter()
            .filter_map(|spec| {
                let where_ = || format!("n={} m={} {spec}", spec.ground().n(), spec.ground().m());
                match case(spec) {
                    Ok(None) => None,
                    Ok(Some(true)) => Some((true, None)),
                    Ok(Some(false)) => Some((false, Some(where_()))),
                    Err(e) => Some((false, Some(format!("{}: {e}", where_())))),
                }
            })
            .collect();
        let mut failures: Vec<String> = results.iter().filter_map(|(_, f)| f.clone()).collect();
        failures.sort();
        Check {
            name,
            cases: results.len(),
            failures,
        }
    }
}

fn all_betti_scalars<F>(table: &BettiTable, closed: F) -> Result<bool>
where
    F: Fn(u32) -> Result<u128>,
{
    let len = table.ground().len();
    for i in 0..=len {
        if closed(i)? != table.ideal_total(i as usize) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// `make_mixed(closed_dual(spec)) == dual(make_mixed(spec))`.
pub fn duality_checks(max_vertices: u32) -> Vec<Check> {
    let case = |spec: &MixedSpec| -> Result<Option<bool>> {
        let closed = closed_dual(spec)?.make_ideal()?;
        Ok(Some(closed == dual(&spec.make_ideal()?)?))
    };
    [
        ("dual/power", Family::Power),
        ("dual/sum-of-powers", Family::SumOfPowers),
        ("dual/product", Family::Product),
        ("dual/two-products", Family::TwoProducts),
    ]
    .into_iter()
    .map(|(name, family)| Check::run(name, &specs_up_to(max_vertices, &[family]), case))
    .collect()
}

/// Closed Betti numbers, both the scalar formulas and the graded table,
/// against the link-in-the-dual oracle over `field`.
pub fn betti_checks(max_vertices: u32, field: Field) -> Vec<Check> {
    let case = |spec: &MixedSpec| -> Result<Option<bool>> {
        let (n, m) = (spec.ground().n(), spec.ground().m());
        let oracle = hochster_betti(&spec.make_ideal()?, field)?;
        let scalars = match Shape::of(spec) {
            Shape::XPower(q) => all_betti_scalars(&oracle, |i| closed_betti_iqjr(n, m, q, 0, i))?,
            Shape::YPower(r) => all_betti_scalars(&oracle, |i| closed_betti_iqjr(n, m, 0, r, i))?,
            Shape::Product { q, r } => {
                all_betti_scalars(&oracle, |i| closed_betti_iqjr(n, m, q, r, i))?
            }
            Shape::TwoTerm { q, r, s, t } => {
                all_betti_scalars(&oracle, |i| closed_betti_mixed(n, m, q, r, s, t, i))?
            }
            Shape::ThreeTerm { q, r, s, t } => {
                all_betti_scalars(&oracle, |i| closed_betti_dual_mixed(n, m, q, r, s, t, i))?
            }
            _ => return Ok(None),
        };
        Ok(Some(
            scalars && closed_betti_table(spec, field)?.same_numbers(&oracle),
        ))
    };
    [
        ("betti/power", &[Family::Power][..]),
        ("betti/product", &[Family::Product][..]),
        (
            "betti/two-term",
            &[
                Family::SumOfPowers,
                Family::ProductPlusPower,
                Family::TwoProducts,
            ][..],
        ),
        ("betti/three-term", &[Family::ThreeTerm][..]),
    ]
    .into_iter()
    .map(|(name, families)| Check::run(name, &specs_up_to(max_vertices, families), case))
    .collect()
}

/// Single-product ideals, generated in one degree `d`, have oracle tables on
/// the line `j = d + i` (ideal convention).
pub fn linearity_check(max_vertices: u32, field: Field) -> Check {
    let specs = specs_up_to(max_vertices, &[Family::Power, Family::Product]);
    Check::run("linear/resolution", &specs, |spec| {
        let (q, r) = spec.terms()[0];
        let table = hochster_betti(&spec.make_ideal()?, field)?;
        Ok(Some(table.is_linear_resolution((q + r) as usize)))
    })
}

const CM_FAMILIES: [Family; 4] = [
    Family::Power,
    Family::Product,
    Family::ProductPlusPower,
    Family::TwoProducts,
];

/// Classification, dimension, type and the Gorenstein census against the
/// depth computed from oracle tables over `field`.
pub fn cm_checks(max_vertices: u32, field: Field) -> Vec<Check> {
    let specs = specs_up_to(max_vertices, &CM_FAMILIES);
    let reports: HashMap<&MixedSpec, Result<CmReport>> = specs
        .par_iter()
        .map(|spec| (spec, spec.make_ideal().and_then(|i| cm_report(&i, field))))
        .collect();
    let report_of = |spec: &MixedSpec| reports[spec].clone();
    let mut checks = vec![
        Check::run("cm/classification", &specs, |spec| {
            Ok(Some(classify_cm(spec)? == report_of(spec)?.is_cm()))
        }),
        Check::run("cm/dimension", &specs, |spec| {
            if !classify_cm(spec)? {
                return Ok(None);
            }
            Ok(Some(closed_krull_dim(spec)? == report_of(spec)?.dim))
        }),
    ];
    for (name, family) in [
        ("cm/type-power", Family::Power),
        ("cm/type-product", Family::Product),
        ("cm/type-product-plus-power", Family::ProductPlusPower),
        ("cm/type-two-products", Family::TwoProducts),
    ] {
        let family_specs = specs_up_to(max_vertices, &[family]);
        checks.push(Check::run(name, &family_specs, |spec| {
            if !classify_cm(spec)? {
                return Ok(None);
            }
            Ok(Some(Some(closed_type(spec)?) == report_of(spec)?.cm_type))
        }));
    }
    checks.push(Check::run("gorenstein/census", &specs, |spec| {
        Ok(Some(
            expected_gorenstein(spec) == report_of(spec)?.is_gorenstein(),
        ))
    }));
    checks
}

/// Members of the classified families whose quotient is Gorenstein:
/// `I_n`, `I_1` (in either block, other variables free) and `I_n J_m`.
pub fn expected_gorenstein(spec: &MixedSpec) -> bool {
    let (n, m) = (spec.ground().n(), spec.ground().m());
    match Shape::of(spec) {
        Shape::XPower(q) => q == 1 || q == n,
        Shape::YPower(r) => r == 1 || r == m,
        Shape::Product { q, r } => q == n && r == m,
        _ => false,
    }
}

/// Every check, in a fixed order.
pub fn run_all(max_vertices: u32, field: Field) -> Vec<Check> {
    let mut checks = duality_checks(max_vertices);
    checks.extend(betti_checks(max_vertices, field));
    checks.push(linearity_check(max_vertices, field));
    checks.extend(cm_checks(max_vertices, field));
    checks
}
