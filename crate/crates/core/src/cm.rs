//! Depth, Cohen–Macaulay tests and Cohen–Macaulay type.
//!
//! The oracle side reads everything off a Hochster Betti table: depth comes
//! from Auslander–Buchsbaum, `depth S/I = (n + m) - pd S/I`, and the type of a
//! Cohen–Macaulay quotient is its last total Betti number. The closed side
//! decides the same questions for mixed product ideals by parameter
//! arithmetic alone.

use crate::betti::{hochster_betti, BettiTable};
use crate::binom::binom;
use crate::homology::Field;
use crate::ideal::{Ideal, MixedSpec};
use crate::shape::Shape;
use crate::{Error, Result};

/// Depth, dimension and type of `S/I` as read from one Betti table.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CmReport {
    pub projective_dimension: usize,
    pub depth: u32,
    pub dim: u32,
    /// `Some(last total Betti number)` exactly when `S/I` is Cohen–Macaulay.
    pub cm_type: Option<u128>,
}

impl CmReport {
    pub fn from_table(table: &BettiTable, dim: u32) -> Self {
        let pd = table.projective_dimension();
        let depth = table.ground().len() - pd as u32;
        let cm_type = (depth == dim).then(|| table.total(pd));
        Self {
            projective_dimension: pd,
            depth,
            dim,
            cm_type,
        }
    }

    pub fn is_cm(&self) -> bool {
        self.cm_type.is_some()
    }

    pub fn is_gorenstein(&self) -> bool {
        self.cm_type == Some(1)
    }
}

pub fn cm_report(ideal: &Ideal, field: Field) -> Result<CmReport> {
    let table = hochster_betti(ideal, field)?;
    Ok(CmReport::from_table(&table, ideal.krull_dim()?))
}

pub fn depth_of_quotient(ideal: &Ideal, field: Field) -> Result<u32> {
    let table = hochster_betti(ideal, field)?;
    Ok(ideal.ground().len() - table.projective_dimension() as u32)
}

pub fn is_cm(ideal: &Ideal, field: Field) -> Result<bool> {
    Ok(cm_report(ideal, field)?.is_cm())
}

/// The last total Betti number of a Cohen–Macaulay quotient.
pub fn cm_type(ideal: &Ideal, field: Field) -> Result<u128> {
    cm_report(ideal, field)?.cm_type.ok_or(Error::NotCm)
}

pub fn is_gorenstein(ideal: &Ideal, field: Field) -> Result<bool> {
    Ok(cm_report(ideal, field)?.is_gorenstein())
}

/// The four classified families, after exchanging blocks if needed so that
/// the lone power (if any) sits in the x-block.
enum CmFamily {
    /// `I_q` in `n` x-variables.
    Power { n: u32, q: u32 },
    /// `I_q J_r`.
    Product { n: u32, m: u32, q: u32, r: u32 },
    /// `I_q J_r + I_s`, `0 < q < s`.
    ProductPlusPower {
        n: u32,
        m: u32,
        q: u32,
        r: u32,
        s: u32,
    },
    /// `I_q J_r + I_s J_t`, `0 < q < s`, `0 < t < r`.
    TwoProducts {
        n: u32,
        m: u32,
        q: u32,
        r: u32,
        s: u32,
        t: u32,
    },
}

fn family(spec: &MixedSpec) -> Result<CmFamily> {
    let (n, m) = (spec.ground().n(), spec.ground().m());
    let shape = Shape::of(spec);
    Ok(match shape {
        Shape::XPower(q) => CmFamily::Power { n, q },
        Shape::YPower(r) => CmFamily::Power { n: m, q: r },
        Shape::Product { q, r } => CmFamily::Product { n, m, q, r },
        Shape::TwoTerm { q, r, s, t: 0 } if q >= 1 => CmFamily::ProductPlusPower { n, m, q, r, s },
        // J_r + I_s J_t is I_t J_s + I_r with the blocks exchanged.
        Shape::TwoTerm { q: 0, r, s, t } if t >= 1 => CmFamily::ProductPlusPower {
            n: m,
            m: n,
            q: t,
            r: s,
            s: r,
        },
        Shape::TwoTerm { q, r, s, t } if q >= 1 && t >= 1 => {
            CmFamily::TwoProducts { n, m, q, r, s, t }
        }
        _ => {
            return Err(Error::UnsupportedShape(format!(
                "no Cohen-Macaulay classification for {} ({spec})",
                shape.describe()
            )))
        }
    })
}

/// Whether `S/I` is Cohen–Macaulay, decided from the parameters:
///
/// * `I_q`: always;
/// * `I_q J_r`: iff `q = n` and `r = m`;
/// * `I_q J_r + I_s`: iff `s = q + 1` and `r = m`;
/// * `I_q J_r + I_s J_t`: iff `q = n - 1`, `r = m`, `s = n`, `t = m - 1`.
pub fn classify_cm(spec: &MixedSpec) -> Result<bool> {
    Ok(match family(spec)? {
        CmFamily::Power { .. } => true,
        CmFamily::Product { n, m, q, r } => q == n && r == m,
        CmFamily::ProductPlusPower { m, q, r, s, .. } => s == q + 1 && r == m,
        CmFamily::TwoProducts { n, m, q, r, s, t } => q + 1 == n && r == m && s == n && t + 1 == m,
    })
}

/// Cohen–Macaulay type from the parameters:
///
/// * `I_q`: `C(n-1, n-q)`;
/// * `I_n J_m`: `1`;
/// * `I_q J_m + I_{q+1}`: `C(n-1, n-q) + C(n-1, n-q-1)`;
/// * `I_{n-1} J_m + I_n J_{m-1}`: `m + n - 1`.
pub fn closed_type(spec: &MixedSpec) -> Result<u128> {
    if !classify_cm(spec)? {
        return Err(Error::NotCm);
    }
    let c = |a: u32, b: i64| binom(a as i64 - 1, b);
    Ok(match family(spec)? {
        CmFamily::Power { n, q } => c(n, (n - q) as i64),
        CmFamily::Product { .. } => 1,
        CmFamily::ProductPlusPower { n, q, .. } => {
            c(n, (n - q) as i64) + c(n, n as i64 - q as i64 - 1)
        }
        CmFamily::TwoProducts { n, m, .. } => (m + n - 1) as u128,
    })
}

/// Krull dimension of a Cohen–Macaulay quotient from the parameters:
/// `m + q - 1` for `I_q` and for `I_q J_m + I_{q+1}`, `m + n - 1` for
/// `I_n J_m`, `m + n - 2` for `I_{n-1} J_m + I_n J_{m-1}`. Block exchange
/// applies as in [`classify_cm`].
pub fn closed_krull_dim(spec: &MixedSpec) -> Result<u32> {
    if !classify_cm(spec)? {
        return Err(Error::NotCm);
    }
    let len = spec.ground().len();
    Ok(match family(spec)? {
        CmFamily::Power { n, q } => len - n + q - 1,
        CmFamily::Product { .. } => len - 1,
        CmFamily::ProductPlusPower { m, q, .. } => m + q - 1,
        CmFamily::TwoProducts { .. } => len - 2,
    })
}
