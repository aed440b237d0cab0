//! Exact computations for square-free monomial ideals in two blocks of
//! variables `x_1..x_n`, `y_1..y_m`.
//!
//! The crate covers the Stanley–Reisner correspondence, Alexander duality,
//! reduced simplicial homology over exact fields, graded Betti numbers (by
//! Hochster's formula and by closed formulas for mixed product ideals
//! `I_q J_r + I_s J_t`), and Cohen–Macaulay classification and type.
//!
//! Everything is immutable after construction and every operation is a pure
//! function, so values can be shared freely between threads.

pub mod alexander;
pub mod betti;
pub mod binom;
pub mod cm;
mod error;
pub mod homology;
pub mod ideal;
pub mod shape;
pub mod sweep;

pub use error::{Error, Result};
pub use homology::Field;
pub use ideal::{Complex, ComplexKind, GroundSet, Ideal, IdealKind, MixedSpec, Monomial};
