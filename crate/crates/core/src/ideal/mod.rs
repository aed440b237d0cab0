//! Ground sets, square-free monomials, ideals and simplicial complexes.
//!
//! A square-free monomial is identified with its support, a subset of the
//! ground set stored as a `u64` bitset. Bit `i < n` is `x_{i+1}`, bit
//! `n + j` is `y_{j+1}`.

mod bits;
mod complex;
mod mixed;

use std::fmt;

use crate::{Error, Result};

pub use bits::{k_subsets, minimal_transversals, submasks};
pub use complex::{Complex, ComplexKind};
pub use mixed::MixedSpec;

pub const MAX_VARIABLES: u32 = 64;

/// The variables `x_1..x_n, y_1..y_m`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct GroundSet {
    n: u32,
    m: u32,
}

impl GroundSet {
    pub fn new(n: u32, m: u32) -> Result<Self> {
        let len = n.checked_add(m).ok_or(Error::GroundTooLarge(u32::MAX))?;
        if len == 0 {
            return Err(Error::EmptyGround);
        }
        if len > MAX_VARIABLES {
            return Err(Error::GroundTooLarge(len));
        }
        Ok(Self { n, m })
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn m(&self) -> u32 {
        self.m
    }

    /// Total number of variables; never zero.
    #[allow(clippy::len_without_is_empty)]
    pub fn len(&self) -> u32 {
        self.n + self.m
    }

    pub fn full_mask(&self) -> u64 {
        low_bits(self.len())
    }

    pub fn x_mask(&self) -> u64 {
        low_bits(self.n)
    }

    pub fn y_mask(&self) -> u64 {
        low_bits(self.len()) & !low_bits(self.n)
    }

    /// Bidegree `(|support ∩ x|, |support ∩ y|)`.
    pub fn bidegree(&self, support: u64) -> (u32, u32) {
        (
            (support & self.x_mask()).count_ones(),
            (support & self.y_mask()).count_ones(),
        )
    }

    /// Complement inside the ground set.
    pub fn complement(&self, support: u64) -> u64 {
        !support & self.full_mask()
    }

    pub fn contains(&self, support: u64) -> bool {
        support & !self.full_mask() == 0
    }

    pub fn var_name(&self, index: u32) -> String {
        if index < self.n {
            format!("x{}", index + 1)
        } else {
            format!("y{}", index - self.n + 1)
        }
    }

    /// Renders a support in the `x1*x2*y1` interchange form; `1` for the empty set.
    pub fn format_support(&self, support: u64) -> String {
        if support == 0 {
            return "1".to_string();
        }
        bits::iter_bits(support)
            .map(|i| self.var_name(i))
            .collect::<Vec<_>>()
            .join("*")
    }

    /// Parses the `x1*x2*y1` form. Whitespace around factors is ignored and
    /// repeated variables are rejected (the monomial must be square-free).
    pub fn parse_support(&self, text: &str) -> Result<u64> {
        let bad = || Error::ParseMonomial(text.to_string());
        let text = text.trim();
        if text == "1" {
            return Ok(0);
        }
        let mut support = 0u64;
        for factor in text.split('*') {
            let factor = factor.trim();
            let (block, digits) = factor.split_at(factor.len().min(1));
            let index: u32 = digits.parse().map_err(|_| bad())?;
            if index == 0 {
                return Err(bad());
            }
            let bit = match block {
                "x" if index <= self.n => index - 1,
                "y" if index <= self.m => self.n + index - 1,
                _ => return Err(bad()),
            };
            if support & (1 << bit) != 0 {
                return Err(bad());
            }
            support |= 1 << bit;
        }
        Ok(support)
    }

    /// The ground set with the two blocks exchanged.
    pub fn swapped(&self) -> GroundSet {
        GroundSet {
            n: self.m,
            m: self.n,
        }
    }
}

pub(crate) fn low_bits(count: u32) -> u64 {
    if count >= 64 {
        u64::MAX
    } else {
        (1u64 << count) - 1
    }
}

/// A square-free monomial on a ground set.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Monomial {
    support: u64,
    ground: GroundSet,
}

impl Monomial {
    pub fn new(ground: GroundSet, support: u64) -> Result<Self> {
        if !ground.contains(support) {
            return Err(Error::SupportOutOfRange {
                support,
                len: ground.len(),
            });
        }
        Ok(Self { support, ground })
    }

    pub fn unit(ground: GroundSet) -> Self {
        Self { support: 0, ground }
    }

    pub fn parse(ground: GroundSet, text: &str) -> Result<Self> {
        let support = ground.parse_support(text)?;
        Ok(Self { support, ground })
    }

    pub fn support(&self) -> u64 {
        self.support
    }

    pub fn ground(&self) -> GroundSet {
        self.ground
    }

    pub fn degree(&self) -> u32 {
        self.support.count_ones()
    }

    pub fn bidegree(&self) -> (u32, u32) {
        self.ground.bidegree(self.support)
    }

    pub fn is_unit(&self) -> bool {
        self.support == 0
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.support & !other.support == 0
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial {
            support: self.support | other.support,
            ground: self.ground,
        }
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

/// Total degree first, then bitset value.
impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        canonical_key(self.support).cmp(&canonical_key(other.support))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.ground.format_support(self.support))
    }
}

pub(crate) fn canonical_key(support: u64) -> (u32, u64) {
    (support.count_ones(), support)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum IdealKind {
    Zero,
    Unit,
    Proper,
}

impl fmt::Display for IdealKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            IdealKind::Zero => "zero",
            IdealKind::Unit => "unit",
            IdealKind::Proper => "proper",
        })
    }
}

/// A square-free monomial ideal, stored by its minimal generators in
/// canonical order.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Ideal {
    ground: GroundSet,
    gens: Vec<u64>,
    kind: IdealKind,
}

impl Ideal {
    /// Minimal generating set of the ideal generated by `gens`.
    pub fn minimalize<I>(ground: GroundSet, gens: I) -> Result<Self>
    where
        I: IntoIterator<Item = Monomial>,
    {
        let mut supports = Vec::new();
        for g in gens {
            if g.ground != ground {
                return Err(Error::MixedGroundSets);
            }
            supports.push(g.support);
        }
        Ok(Self::from_supports(ground, supports))
    }

    /// Like [`Ideal::minimalize`] but on raw supports. Bits outside the ground
    /// set are a logic error.
    pub fn from_supports<I>(ground: GroundSet, supports: I) -> Self
    where
        I: IntoIterator<Item = u64>,
    {
        let mut supports: Vec<u64> = supports.into_iter().collect();
        debug_assert!(supports.iter().all(|&s| ground.contains(s)));
        supports.sort_unstable_by_key(|&s| canonical_key(s));
        supports.dedup();
        let mut gens: Vec<u64> = Vec::with_capacity(supports.len());
        for s in supports {
            // Sorted by degree, so only earlier entries can divide `s`.
            if !gens.iter().any(|&g| g & !s == 0) {
                gens.push(s);
            }
        }
        Self::from_minimal(ground, gens)
    }

    /// Supports already pairwise incomparable; only sorts.
    pub(crate) fn from_minimal(ground: GroundSet, mut gens: Vec<u64>) -> Self {
        gens.sort_unstable_by_key(|&s| canonical_key(s));
        let kind = match gens.as_slice() {
            [] => IdealKind::Zero,
            [0] => IdealKind::Unit,
            _ => IdealKind::Proper,
        };
        debug_assert!(kind != IdealKind::Proper || !gens.contains(&0));
        Self { ground, gens, kind }
    }

    pub fn zero(ground: GroundSet) -> Self {
        Self::from_minimal(ground, Vec::new())
    }

    pub fn unit(ground: GroundSet) -> Self {
        Self::from_minimal(ground, vec![0])
    }

    /// Parses a comma-separated generator list such as `x1*x2, y1`.
    pub fn parse_gens(ground: GroundSet, text: &str) -> Result<Self> {
        let mut supports = Vec::new();
        for item in text.split(',') {
            if item.trim().is_empty() {
                continue;
            }
            supports.push(ground.parse_support(item)?);
        }
        Ok(Self::from_supports(ground, supports))
    }

    pub fn ground(&self) -> GroundSet {
        self.ground
    }

    pub fn kind(&self) -> IdealKind {
        self.kind
    }

    pub fn is_proper(&self) -> bool {
        self.kind == IdealKind::Proper
    }

    /// Generator supports in canonical order.
    pub fn supports(&self) -> &[u64] {
        &self.gens
    }

    pub fn gens(&self) -> impl Iterator<Item = Monomial> + '_ {
        self.gens.iter().map(move |&support| Monomial {
            support,
            ground: self.ground,
        })
    }

    pub fn len(&self) -> usize {
        self.gens.len()
    }

    pub fn is_empty(&self) -> bool {
        self.gens.is_empty()
    }

    /// Whether the monomial with this support lies in the ideal.
    pub fn contains_support(&self, support: u64) -> bool {
        self.gens.iter().any(|&g| g & !support == 0)
    }

    pub fn require_proper(&self) -> Result<()> {
        if self.is_proper() {
            Ok(())
        } else {
            Err(Error::NotProper(self.kind))
        }
    }

    /// Stanley–Reisner complex: all subsets containing no generator.
    /// The zero ideal gives the full simplex; the unit ideal has no complex.
    pub fn to_complex(&self) -> Result<Complex> {
        if self.kind == IdealKind::Unit {
            return Err(Error::NotProper(IdealKind::Unit));
        }
        Ok(Complex::from_maximal(
            self.ground,
            complex::maximal_independent_sets(self.ground, &self.gens),
        ))
    }

    /// Krull dimension of `S/I`: the largest face size of the Stanley–Reisner
    /// complex.
    pub fn krull_dim(&self) -> Result<u32> {
        match self.kind {
            IdealKind::Unit => Err(Error::NotProper(IdealKind::Unit)),
            IdealKind::Zero => Ok(self.ground.len()),
            IdealKind::Proper => Ok(self
                .to_complex()?
                .facets()
                .iter()
                .map(|f| f.count_ones())
                .max()
                .unwrap_or(0)),
        }
    }

    /// Renders the generators as `x1*x2, y1*y2`.
    pub fn format_gens(&self) -> String {
        self.gens()
            .map(|g| g.to_string())
            .collect::<Vec<_>>()
            .join(", ")
    }
}

impl fmt::Display for Ideal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.format_gens())
    }
}
