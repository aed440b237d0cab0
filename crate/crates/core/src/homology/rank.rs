//! Exact matrix rank over Q and over prime fields.

use std::fmt;

use num_bigint::BigInt;

use crate::{Error, Result};

/// Coefficient field for homology and Betti numbers.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub enum Field {
    #[default]
    Rationals,
    /// `GF(p)` for a prime `p < 2^31`.
    Prime(u32),
}

impl Field {
    pub fn prime(p: u64) -> Result<Field> {
        if p >= 1 << 31 || !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        Ok(Field::Prime(p as u32))
    }

    pub fn characteristic(&self) -> u32 {
        match self {
            Field::Rationals => 0,
            Field::Prime(p) => *p,
        }
    }
}

/// `rat`, `gf2`, or `gfp:<p>`.
impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Field::Rationals => f.write_str("rat"),
            Field::Prime(2) => f.write_str("gf2"),
            Field::Prime(p) => write!(f, "gfp:{p}"),
        }
    }
}

impl std::str::FromStr for Field {
    type Err = Error;

    fn from_str(s: &str) -> Result<Field> {
        match s {
            "rat" => Ok(Field::Rationals),
            "gf2" => Ok(Field::Prime(2)),
            _ => {
                let p = s
                    .strip_prefix("gfp:")
                    .and_then(|p| p.parse::<u64>().ok())
                    .ok_or_else(|| Error::OutOfRange(format!("unknown field {s:?}")))?;
                Field::prime(p)
            }
        }
    }
}

fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Integer matrix stored column by column as `(row, value)` pairs with
/// nonzero values.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SparseMatrix {
    nrows: usize,
    ncols: usize,
    columns: Vec<Vec<(usize, i64)>>,
}

impl SparseMatrix {
    pub fn zeros(nrows: usize, ncols: usize) -> Self {
        Self {
            nrows,
            ncols,
            columns: vec![Vec::new(); ncols],
        }
    }

    pub fn from_dense(rows: &[Vec<i64>]) -> Self {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, |r| r.len());
        let mut m = Self::zeros(nrows, ncols);
        for (i, row) in rows.iter().enumerate() {
            assert_eq!(row.len(), ncols, "ragged matrix");
            for (j, &v) in row.iter().enumerate() {
                m.set(i, j, v);
            }
        }
        m
    }

    pub fn set(&mut self, row: usize, col: usize, value: i64) {
        assert!(row < self.nrows && col < self.ncols);
        let column = &mut self.columns[col];
        column.retain(|&(r, _)| r != row);
        if value != 0 {
            column.push((row, value));
            column.sort_unstable_by_key(|&(r, _)| r);
        }
    }

    pub(crate) fn push_column(&mut self, entries: Vec<(usize, i64)>) {
        debug_assert!(entries.iter().all(|&(r, v)| r < self.nrows && v != 0));
        self.columns.push(entries);
        self.ncols += 1;
    }

    pub fn nrows(&self) -> usize {
        self.nrows
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn column(&self, col: usize) -> &[(usize, i64)] {
        &self.columns[col]
    }

    pub fn get(&self, row: usize, col: usize) -> i64 {
        self.columns[col]
            .iter()
            .find(|&&(r, _)| r == row)
            .map_or(0, |&(_, v)| v)
    }

    pub fn is_zero(&self) -> bool {
        self.columns.iter().all(|c| c.is_empty())
    }

    /// `self * rhs`, exact over the integers.
    pub fn mul(&self, rhs: &SparseMatrix) -> SparseMatrix {
        assert_eq!(self.ncols, rhs.nrows);
        let mut out = SparseMatrix::zeros(self.nrows, 0);
        for col in &rhs.columns {
            let mut acc = vec![0i64; self.nrows];
            for &(k, b) in col {
                for &(i, a) in &self.columns[k] {
                    acc[i] += a * b;
                }
            }
            out.push_column(
                acc.into_iter()
                    .enumerate()
                    .filter(|&(_, v)| v != 0)
                    .collect(),
            );
        }
        out
    }

    /// Dense rows (the elimination routines work row-wise).
    fn dense_rows<T: Clone>(&self, zero: T, conv: impl Fn(i64) -> T) -> Vec<Vec<T>> {
        let mut rows = vec![vec![zero; self.ncols]; self.nrows];
        for (j, col) in self.columns.iter().enumerate() {
            for &(i, v) in col {
                rows[i][j] = conv(v);
            }
        }
        rows
    }
}

/// Exact rank over `field`.
pub fn matrix_rank(matrix: &SparseMatrix, field: Field) -> usize {
    if matrix.is_zero() {
        return 0;
    }
    match field {
        Field::Rationals => rank_rational(matrix),
        Field::Prime(2) => rank_gf2(matrix),
        Field::Prime(p) => rank_mod_p(matrix, p as u64),
    }
}

/// Rank over Q. Sparse column reduction in `i64` first; if an entry
/// overflows, fraction-free (Bareiss) elimination in `i128`, then with big
/// integers.
fn rank_rational(matrix: &SparseMatrix) -> usize {
    if let Some(rank) = sparse_rank_integer(matrix) {
        return rank;
    }
    let rows = matrix.dense_rows(0i128, |v| v as i128);
    bareiss_i128(rows)
        .unwrap_or_else(|| bareiss_big(matrix.dense_rows(BigInt::from(0), BigInt::from)))
}

type SparseColumn = Vec<(usize, i64)>;

fn gcd(mut a: i64, mut b: i64) -> i64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a.abs()
}

/// `x * u + y * v` on sorted sparse columns, dropping zeros.
fn combine(x: i64, u: &[(usize, i64)], y: i64, v: &[(usize, i64)]) -> Option<SparseColumn> {
    let mut out = Vec::with_capacity(u.len() + v.len());
    let (mut i, mut j) = (0, 0);
    while i < u.len() || j < v.len() {
        let (row, value) = match (u.get(i), v.get(j)) {
            (Some(&(ru, a)), Some(&(rv, _))) if ru < rv => {
                i += 1;
                (ru, x.checked_mul(a)?)
            }
            (Some(&(ru, _)), Some(&(rv, b))) if rv < ru => {
                j += 1;
                (rv, y.checked_mul(b)?)
            }
            (Some(&(ru, a)), Some(&(_, b))) => {
                i += 1;
                j += 1;
                (ru, x.checked_mul(a)?.checked_add(y.checked_mul(b)?)?)
            }
            (Some(&(ru, a)), None) => {
                i += 1;
                (ru, x.checked_mul(a)?)
            }
            (None, Some(&(rv, b))) => {
                j += 1;
                (rv, y.checked_mul(b)?)
            }
            (None, None) => unreachable!(),
        };
        if value != 0 {
            out.push((row, value));
        }
    }
    Some(out)
}

/// Column reduction keyed on the lowest nonzero row. A column whose lowest
/// row is already a pivot is replaced by `a * col - b * pivot` with `a != 0`,
/// which keeps the span; the content is divided out to limit growth.
/// `None` on `i64` overflow.
fn sparse_rank_integer(matrix: &SparseMatrix) -> Option<usize> {
    let mut pivots: Vec<Option<SparseColumn>> = vec![None; matrix.nrows()];
    let mut rank = 0;
    for j in 0..matrix.ncols() {
        let mut col = matrix.column(j).to_vec();
        while let Some(&(low, b)) = col.last() {
            let Some(pivot) = &pivots[low] else {
                pivots[low] = Some(col);
                rank += 1;
                break;
            };
            let a = pivot.last().expect("pivots are nonzero").1;
            let g = gcd(a, b);
            let mut next = combine(a / g, &col, -(b / g), pivot)?;
            let content = next.iter().fold(0, |acc, &(_, v)| gcd(acc, v));
            if content > 1 {
                next.iter_mut().for_each(|(_, v)| *v /= content);
            }
            col = next;
        }
    }
    Some(rank)
}

/// Rank over GF(p) by the same column reduction, with every pivot scaled to
/// have lowest entry 1.
fn rank_mod_p(matrix: &SparseMatrix, p: u64) -> usize {
    let mut pivots: Vec<Option<Vec<(usize, u64)>>> = vec![None; matrix.nrows()];
    let mut rank = 0;
    for j in 0..matrix.ncols() {
        let mut col: Vec<(usize, u64)> = matrix
            .column(j)
            .iter()
            .map(|&(r, v)| (r, v.rem_euclid(p as i64) as u64))
            .filter(|&(_, v)| v != 0)
            .collect();
        while let Some(&(low, b)) = col.last() {
            let Some(pivot) = &pivots[low] else {
                let inv = pow_mod(b, p - 2, p);
                col.iter_mut().for_each(|(_, v)| *v = *v * inv % p);
                pivots[low] = Some(col);
                rank += 1;
                break;
            };
            // col - b * pivot, pivot's lowest entry being 1.
            let factor = p - b;
            let mut next = Vec::with_capacity(col.len() + pivot.len());
            let (mut i, mut k) = (0, 0);
            while i < col.len() || k < pivot.len() {
                let (row, value) = match (col.get(i), pivot.get(k)) {
                    (Some(&(rc, x)), Some(&(rp, _))) if rc < rp => {
                        i += 1;
                        (rc, x)
                    }
                    (Some(&(rc, _)), Some(&(rp, y))) if rp < rc => {
                        k += 1;
                        (rp, factor * y % p)
                    }
                    (Some(&(rc, x)), Some(&(_, y))) => {
                        i += 1;
                        k += 1;
                        (rc, (x + factor * y) % p)
                    }
                    (Some(&(rc, x)), None) => {
                        i += 1;
                        (rc, x)
                    }
                    (None, Some(&(rp, y))) => {
                        k += 1;
                        (rp, factor * y % p)
                    }
                    (None, None) => unreachable!(),
                };
                if value != 0 {
                    next.push((row, value));
                }
            }
            col = next;
        }
    }
    rank
}

#[allow(clippy::needless_range_loop)]
fn bareiss_i128(mut a: Vec<Vec<i128>>) -> Option<usize> {
    let nrows = a.len();
    let ncols = a.first().map_or(0, |r| r.len());
    let mut prev: i128 = 1;
    let mut rank = 0;
    for col in 0..ncols {
        if rank == nrows {
            break;
        }
        let Some(p) = (rank..nrows).find(|&r| a[r][col] != 0) else {
            continue;
        };
        a.swap(rank, p);
        let pivot = a[rank][col];
        for r in rank + 1..nrows {
            let factor = a[r][col];
            for c in col + 1..ncols {
                let lhs = pivot.checked_mul(a[r][c])?;
                let rhs = factor.checked_mul(a[rank][c])?;
                let num = lhs.checked_sub(rhs)?;
                debug_assert_eq!(num % prev, 0);
                a[r][c] = num / prev;
            }
            a[r][col] = 0;
        }
        prev = pivot;
        rank += 1;
    }
    Some(rank)
}

#[allow(clippy::needless_range_loop)]
fn bareiss_big(mut a: Vec<Vec<BigInt>>) -> usize {
    let zero = BigInt::from(0);
    let nrows = a.len();
    let ncols = a.first().map_or(0, |r| r.len());
    let mut prev = BigInt::from(1);
    let mut rank = 0;
    for col in 0..ncols {
        if rank == nrows {
            break;
        }
        let Some(p) = (rank..nrows).find(|&r| a[r][col] != zero) else {
            continue;
        };
        a.swap(rank, p);
        let pivot = a[rank][col].clone();
        for r in rank + 1..nrows {
            let factor = a[r][col].clone();
            for c in col + 1..ncols {
                let num = &pivot * &a[r][c] - &factor * &a[rank][c];
                a[r][c] = num / &prev;
            }
            a[r][col] = zero.clone();
        }
        prev = pivot;
        rank += 1;
    }
    rank
}

fn pow_mod(mut base: u64, mut exp: u64, p: u64) -> u64 {
    let mut acc = 1;
    base %= p;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % p;
        }
        base = base * base % p;
        exp >>= 1;
    }
    acc
}

/// Rank over GF(2) with rows packed into 64-bit words.
fn rank_gf2(matrix: &SparseMatrix) -> usize {
    let words = matrix.ncols().div_ceil(64);
    let mut rows = vec![vec![0u64; words]; matrix.nrows()];
    for j in 0..matrix.ncols() {
        for &(i, v) in matrix.column(j) {
            if v & 1 == 1 {
                rows[i][j / 64] |= 1 << (j % 64);
            }
        }
    }
    let nrows = rows.len();
    let mut rank = 0;
    for col in 0..matrix.ncols() {
        if rank == nrows {
            break;
        }
        let (w, bit) = (col / 64, 1u64 << (col % 64));
        let Some(p) = (rank..nrows).find(|&r| rows[r][w] & bit != 0) else {
            continue;
        };
        rows.swap(rank, p);
        let (head, tail) = rows.split_at_mut(rank + 1);
        let pivot = &head[rank];
        for row in tail.iter_mut().filter(|row| row[w] & bit != 0) {
            for (x, y) in row[w..].iter_mut().zip(&pivot[w..]) {
                *x ^= y;
            }
        }
        rank += 1;
    }
    rank
}
