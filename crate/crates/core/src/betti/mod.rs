//! Graded Betti tables: Hochster-formula oracles for arbitrary square-free
//! ideals and closed formulas for mixed product ideals.

mod closed;
mod hochster;
mod table;

pub use closed::{
    closed_betti_dual_mixed, closed_betti_iq, closed_betti_iqjr, closed_betti_mixed,
    closed_betti_table,
};
pub use hochster::{hilbert_numerator, hochster_betti, restriction_betti, ORACLE_LIMIT};
pub use table::{BettiTable, Polynomial};
