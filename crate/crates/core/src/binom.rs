//! Binomial coefficients from a Pascal table.
//!
//! `C(a, b)` is zero whenever `b < 0` or `b > a`; the closed Betti and type
//! formulas depend on those out-of-range terms vanishing.

use std::sync::OnceLock;

/// Rows `0..PASCAL_ROWS`; `C(127, 63)` still fits in a `u128`.
const PASCAL_ROWS: usize = 128;

fn table() -> &'static Vec<Vec<u128>> {
    static TABLE: OnceLock<Vec<Vec<u128>>> = OnceLock::new();
    TABLE.get_or_init(|| {
        let mut rows: Vec<Vec<u128>> = Vec::with_capacity(PASCAL_ROWS);
        for a in 0..PASCAL_ROWS {
            let mut row = vec![1u128; a + 1];
            for b in 1..a {
                row[b] = rows[a - 1][b - 1] + rows[a - 1][b];
            }
            rows.push(row);
        }
        rows
    })
}

/// `C(a, b)`, zero outside `0 <= b <= a`.
///
/// # Panics
/// If `a >= 128`; every caller works on at most 64 variables.
pub fn binom(a: i64, b: i64) -> u128 {
    if a < 0 || b < 0 || b > a {
        return 0;
    }
    assert!((a as usize) < PASCAL_ROWS, "binomial row {a} out of table");
    table()[a as usize][b as usize]
}
