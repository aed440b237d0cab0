//! Alexander duality.
//!
//! For a square-free ideal `I = I_Δ` the dual complex is
//! `Δ* = { complement(τ) : τ ∉ Δ }` and `I* = I_{Δ*}`. Its facets are the
//! complements of the minimal non-faces of `Δ`, i.e. of the generators of `I`.
//! Equivalently `I*` is the intersection of the monomial primes generated by
//! the supports of the generators of `I`.

use crate::ideal::{Complex, Ideal, MixedSpec};
use crate::shape::Shape;
use crate::{Error, Result};

/// `Δ*` for `Δ` given by facets.
pub fn dual_complex(complex: &Complex) -> Complex {
    let ground = complex.ground();
    let nonfaces = complex.to_ideal();
    Complex::from_faces(
        ground,
        nonfaces.supports().iter().map(|&g| ground.complement(g)),
    )
}

/// `Δ*` read directly off the generators of `I = I_Δ`.
pub(crate) fn dual_complex_of(ideal: &Ideal) -> Complex {
    let ground = ideal.ground();
    Complex::from_faces(
        ground,
        ideal.supports().iter().map(|&g| ground.complement(g)),
    )
}

/// The Alexander dual `I*` of a proper square-free ideal.
pub fn dual(ideal: &Ideal) -> Result<Ideal> {
    ideal.require_proper()?;
    Ok(dual_complex_of(ideal).to_ideal())
}

/// The dual of a mixed product ideal, by parameter arithmetic:
///
/// | ideal                                  | dual                                          |
/// |----------------------------------------|-----------------------------------------------|
/// | `I_q`                                  | `I_{n-q+1}`                                   |
/// | `I_q + J_r`                            | `I_{n-q+1} J_{m-r+1}`                          |
/// | `I_q J_r`                              | `I_{n-q+1} + J_{m-r+1}`                        |
/// | `I_q J_r + I_s J_t`, `q,t >= 1`        | `I_{n-q+1} + I_{n-s+1} J_{m-r+1} + J_{m-t+1}`  |
///
/// `J_r` alone is handled like `I_q` on the other block. Any other shape,
/// including two-term sums with exactly one of `q`, `t` zero, is rejected.
pub fn closed_dual(spec: &MixedSpec) -> Result<MixedSpec> {
    let ground = spec.ground();
    let (n, m) = (ground.n(), ground.m());
    let terms: Vec<(u32, u32)> = match Shape::of(spec) {
        Shape::XPower(q) => vec![(n - q + 1, 0)],
        Shape::YPower(r) => vec![(0, m - r + 1)],
        Shape::TwoTerm { q: 0, r, s, t: 0 } => vec![(n - s + 1, m - r + 1)],
        Shape::Product { q, r } => vec![(n - q + 1, 0), (0, m - r + 1)],
        Shape::TwoTerm { q, r, s, t } if q >= 1 && t >= 1 => {
            vec![(n - q + 1, 0), (n - s + 1, m - r + 1), (0, m - t + 1)]
        }
        other => {
            return Err(Error::UnsupportedShape(format!(
                "no closed dual for {} ({spec})",
                other.describe()
            )))
        }
    };
    Ok(MixedSpec::new(ground, terms))
}
