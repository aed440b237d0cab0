use std::collections::BTreeMap;
use std::fmt;

use crate::binom::binom;
use crate::homology::Field;
use crate::ideal::GroundSet;

/// Graded Betti numbers `β_{i,j}(S/I)`.
///
/// Only nonzero entries are stored. `β_{0,0} = 1` is always present and is
/// the only entry in homological degree 0. The ideal's own numbers are
/// `β_i(I)_j = β_{i+1,j}(S/I)`; see [`BettiTable::ideal_betti`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BettiTable {
    ground: GroundSet,
    field: Field,
    entries: BTreeMap<(usize, usize), u128>,
}

impl BettiTable {
    /// Builds the quotient table from ideal-convention triples `(i, j, β_i(I)_j)`.
    /// Repeated `(i, j)` pairs are summed; zeros are dropped.
    pub fn from_ideal_entries<I>(ground: GroundSet, field: Field, entries: I) -> Self
    where
        I: IntoIterator<Item = (usize, usize, u128)>,
    {
        let mut map = BTreeMap::new();
        map.insert((0, 0), 1);
        for (i, j, value) in entries {
            if value > 0 {
                *map.entry((i + 1, j)).or_insert(0) += value;
            }
        }
        Self {
            ground,
            field,
            entries: map,
        }
    }

    pub fn ground(&self) -> GroundSet {
        self.ground
    }

    pub fn field(&self) -> Field {
        self.field
    }

    /// `β_{i,j}(S/I)`.
    pub fn get(&self, i: usize, j: usize) -> u128 {
        self.entries.get(&(i, j)).copied().unwrap_or(0)
    }

    /// `β_i(I)_j = β_{i+1,j}(S/I)`.
    pub fn ideal_betti(&self, i: usize, j: usize) -> u128 {
        self.get(i + 1, j)
    }

    /// Total Betti number `β_i(S/I) = Σ_j β_{i,j}(S/I)`.
    pub fn total(&self, i: usize) -> u128 {
        self.entries
            .range((i, 0)..(i + 1, 0))
            .map(|(_, v)| *v)
            .sum()
    }

    /// `β_i(I) = β_{i+1}(S/I)`.
    pub fn ideal_total(&self, i: usize) -> u128 {
        self.total(i + 1)
    }

    /// Nonzero entries `((i, j), β_{i,j}(S/I))` in increasing `(i, j)` order.
    pub fn entries(&self) -> impl Iterator<Item = ((usize, usize), u128)> + '_ {
        self.entries.iter().map(|(&k, &v)| (k, v))
    }

    /// Same numbers, regardless of the field tag.
    pub fn same_numbers(&self, other: &BettiTable) -> bool {
        self.ground == other.ground && self.entries == other.entries
    }

    /// Length of the minimal free resolution of `S/I`.
    pub fn projective_dimension(&self) -> usize {
        self.entries.keys().map(|&(i, _)| i).max().unwrap_or(0)
    }

    /// Whether the ideal, generated in degree `d`, has a `d`-linear
    /// resolution: every `β_{i,j}(S/I)` with `i >= 1` sits at `j = d + i - 1`.
    pub fn is_linear_resolution(&self, d: usize) -> bool {
        self.entries
            .keys()
            .filter(|&&(i, _)| i >= 1)
            .all(|&(i, j)| j == d + i - 1)
    }

    /// `Σ (-1)^i β_{i,j} t^j`, the numerator of the Hilbert series of `S/I`
    /// over `(1 - t)^{n+m}`.
    pub fn k_polynomial(&self) -> Polynomial {
        let mut coeffs = Vec::new();
        for (&(i, j), &v) in &self.entries {
            if coeffs.len() <= j {
                coeffs.resize(j + 1, 0i128);
            }
            let v = v as i128;
            coeffs[j] += if i % 2 == 0 { v } else { -v };
        }
        Polynomial::new(coeffs)
    }
}

/// Macaulay2-style layout: columns are homological degrees, rows are
/// `j - i`, zeros print as `.`.
impl fmt::Display for BettiTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let pd = self.projective_dimension();
        let max_row = self.entries.keys().map(|&(i, j)| j - i).max().unwrap_or(0);
        let mut cells: Vec<Vec<String>> = Vec::new();
        let mut header = vec![String::new()];
        header.extend((0..=pd).map(|i| i.to_string()));
        cells.push(header);
        let mut totals = vec!["total:".to_string()];
        totals.extend((0..=pd).map(|i| self.total(i).to_string()));
        cells.push(totals);
        for row in 0..=max_row {
            let mut line = vec![format!("{row}:")];
            line.extend((0..=pd).map(|i| match self.get(i, i + row) {
                0 => ".".to_string(),
                v => v.to_string(),
            }));
            cells.push(line);
        }
        let columns = cells.iter().map(|l| l.len()).max().unwrap_or(0);
        let widths: Vec<usize> = (0..columns)
            .map(|c| {
                cells
                    .iter()
                    .filter_map(|l| l.get(c))
                    .map(|s| s.len())
                    .max()
                    .unwrap_or(0)
            })
            .collect();
        for (k, line) in cells.iter().enumerate() {
            if k > 0 {
                writeln!(f)?;
            }
            let rendered: Vec<String> = line
                .iter()
                .zip(&widths)
                .map(|(c, &w)| format!("{c:>w$}"))
                .collect();
            f.write_str(rendered.join(" ").trim_end())?;
        }
        Ok(())
    }
}

/// Univariate integer polynomial in `t`, trailing zeros trimmed.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Polynomial {
    coeffs: Vec<i128>,
}

impl Polynomial {
    pub fn new(mut coeffs: Vec<i128>) -> Self {
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    /// `(1 - t)^k`.
    pub fn one_minus_t_pow(k: u32) -> Self {
        Self::new(
            (0..=k as i64)
                .map(|b| {
                    let c = binom(k as i64, b) as i128;
                    if b % 2 == 0 {
                        c
                    } else {
                        -c
                    }
                })
                .collect(),
        )
    }

    /// Coefficients, constant term first.
    pub fn coeffs(&self) -> &[i128] {
        &self.coeffs
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// `self + scale * t^shift * other`.
    pub fn add_shifted(&mut self, other: &Polynomial, shift: usize, scale: i128) {
        let needed = other.coeffs.len() + shift;
        if self.coeffs.len() < needed {
            self.coeffs.resize(needed, 0);
        }
        for (k, c) in other.coeffs.iter().enumerate() {
            self.coeffs[k + shift] += scale * c;
        }
        *self = Polynomial::new(std::mem::take(&mut self.coeffs));
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return f.write_str("0");
        }
        let mut first = true;
        for (k, &c) in self.coeffs.iter().enumerate() {
            if c == 0 {
                continue;
            }
            let sign = if c < 0 { "-" } else { "+" };
            if first {
                if c < 0 {
                    f.write_str("-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            let abs = c.unsigned_abs();
            match (k, abs) {
                (0, _) => write!(f, "{abs}")?,
                (1, 1) => f.write_str("t")?,
                (1, _) => write!(f, "{abs}t")?,
                (_, 1) => write!(f, "t^{k}")?,
                _ => write!(f, "{abs}t^{k}")?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn table(entries: &[(usize, usize, u128)]) -> BettiTable {
        BettiTable::from_ideal_entries(
            GroundSet::new(4, 0).unwrap(),
            Field::Rationals,
            entries.iter().copied(),
        )
    }

    #[test]
    fn conventions() {
        let t = table(&[(0, 2, 6), (1, 3, 8), (2, 4, 3)]);
        assert_eq!(t.get(0, 0), 1);
        assert_eq!(t.get(1, 2), 6);
        assert_eq!(t.ideal_betti(1, 3), 8);
        assert_eq!(t.ideal_total(2), 3);
        assert_eq!(t.total(0), 1);
        assert_eq!(t.projective_dimension(), 3);
        assert!(t.is_linear_resolution(2));
        assert!(!t.is_linear_resolution(3));
    }

    #[test]
    fn mixed_degrees_are_not_linear() {
        let t = table(&[(0, 2, 1), (0, 3, 1), (1, 5, 1)]);
        assert!(!t.is_linear_resolution(2));
        assert!(!t.is_linear_resolution(3));
    }

    #[test]
    fn principal_table() {
        let t = table(&[(0, 4, 1)]);
        assert_eq!(t.projective_dimension(), 1);
        assert_eq!(t.k_polynomial().to_string(), "1 - t^4");
    }

    #[test]
    fn k_polynomial_and_display() {
        let t = table(&[(0, 2, 4), (1, 3, 4), (2, 4, 1)]);
        assert_eq!(t.k_polynomial().coeffs(), &[1, 0, -4, 4, -1]);
        assert_eq!(t.k_polynomial().to_string(), "1 - 4t^2 + 4t^3 - t^4");
        let text = t.to_string();
        let rows: Vec<Vec<&str>> = text
            .lines()
            .map(|l| l.split_whitespace().collect())
            .collect();
        assert_eq!(
            rows,
            vec![
                vec!["0", "1", "2", "3"],
                vec!["total:", "1", "4", "4", "1"],
                vec!["0:", "1", ".", ".", "."],
                vec!["1:", ".", "4", "4", "1"],
            ]
        );
    }

    #[test]
    fn one_minus_t_powers() {
        assert_eq!(Polynomial::one_minus_t_pow(0).coeffs(), &[1]);
        assert_eq!(Polynomial::one_minus_t_pow(3).coeffs(), &[1, -3, 3, -1]);
        let mut p = Polynomial::new(vec![1, -1]);
        p.add_shifted(&Polynomial::new(vec![1]), 1, 1);
        assert_eq!(p.coeffs(), &[1]);
        assert_eq!(Polynomial::default().to_string(), "0");
    }
}
