use std::collections::HashSet;

use super::bits::{iter_bits, maximal_sets, minimal_transversals, submasks};
use super::{GroundSet, Ideal};

/// Above this many vertices `to_ideal` stops enumerating every subset of the
/// ground set and computes minimal non-faces as minimal transversals of the
/// facet complements instead.
pub(crate) const DENSE_LIMIT: u32 = 20;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ComplexKind {
    /// No faces at all.
    Void,
    /// Only the empty face.
    Irrelevant,
    NonEmpty,
}

/// A simplicial complex on a ground set, stored by its facets (sorted by
/// bitset value).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Complex {
    ground: GroundSet,
    facets: Vec<u64>,
}

impl Complex {
    /// The complex generated by `faces`; non-maximal entries are dropped.
    pub fn from_faces<I>(ground: GroundSet, faces: I) -> Self
    where
        I: IntoIterator<Item = u64>,
    {
        let faces: Vec<u64> = faces.into_iter().collect();
        debug_assert!(faces.iter().all(|&f| ground.contains(f)));
        Self {
            ground,
            facets: maximal_sets(faces),
        }
    }

    pub(crate) fn from_maximal(ground: GroundSet, mut facets: Vec<u64>) -> Self {
        facets.sort_unstable();
        Self { ground, facets }
    }

    pub fn void(ground: GroundSet) -> Self {
        Self {
            ground,
            facets: Vec::new(),
        }
    }

    pub fn irrelevant(ground: GroundSet) -> Self {
        Self {
            ground,
            facets: vec![0],
        }
    }

    pub fn simplex(ground: GroundSet, vertices: u64) -> Self {
        Self {
            ground,
            facets: vec![vertices],
        }
    }

    pub fn ground(&self) -> GroundSet {
        self.ground
    }

    pub fn facets(&self) -> &[u64] {
        &self.facets
    }

    pub fn kind(&self) -> ComplexKind {
        match self.facets.as_slice() {
            [] => ComplexKind::Void,
            [0] => ComplexKind::Irrelevant,
            _ => ComplexKind::NonEmpty,
        }
    }

    /// `max |F| - 1` over facets; `None` for the void complex.
    pub fn dim(&self) -> Option<i32> {
        self.facets.iter().map(|f| f.count_ones() as i32 - 1).max()
    }

    pub fn contains_face(&self, face: u64) -> bool {
        self.facets.iter().any(|&f| face & !f == 0)
    }

    /// Union of all faces.
    pub fn vertex_mask(&self) -> u64 {
        self.facets.iter().fold(0, |acc, f| acc | f)
    }

    /// Every face, grouped by cardinality (`result[k]` holds the faces with `k`
    /// vertices), each group sorted by bitset value.
    pub fn faces_by_size(&self) -> Vec<Vec<u64>> {
        let Some(dim) = self.dim() else {
            return Vec::new();
        };
        let mut seen = HashSet::new();
        for &facet in &self.facets {
            seen.extend(submasks(facet));
        }
        let mut grouped = vec![Vec::new(); (dim + 2) as usize];
        for face in seen {
            grouped[face.count_ones() as usize].push(face);
        }
        for group in &mut grouped {
            group.sort_unstable();
        }
        grouped
    }

    /// `f[k]` = number of faces with `k` vertices.
    pub fn f_vector(&self) -> Vec<u64> {
        self.faces_by_size()
            .iter()
            .map(|g| g.len() as u64)
            .collect()
    }

    /// Induced subcomplex on the vertex set `mask`.
    pub fn restrict(&self, mask: u64) -> Complex {
        if self.facets.is_empty() {
            return self.clone();
        }
        Complex::from_faces(self.ground, self.facets.iter().map(|f| f & mask))
    }

    /// Stanley–Reisner ideal: generated by the minimal non-faces. The void
    /// complex gives the unit ideal and the full simplex the zero ideal.
    pub fn to_ideal(&self) -> Ideal {
        let len = self.ground.len();
        let gens = if len <= DENSE_LIMIT {
            minimal_nonfaces_dense(len, &self.facets)
        } else {
            // τ is a non-face iff it meets the complement of every facet.
            let complements: Vec<u64> = self
                .facets
                .iter()
                .map(|&f| self.ground.complement(f))
                .collect();
            minimal_transversals(&complements)
        };
        Ideal::from_minimal(self.ground, gens)
    }
}

/// One pass over all `2^len` subsets: mark faces by pushing facet membership
/// down to subsets, then keep the non-faces whose every codimension-one subset
/// is a face.
fn minimal_nonfaces_dense(len: u32, facets: &[u64]) -> Vec<u64> {
    let size = 1usize << len;
    let mut is_face = vec![false; size];
    for &f in facets {
        is_face[f as usize] = true;
    }
    for bit in 0..len {
        let b = 1usize << bit;
        for mask in 0..size {
            if mask & b == 0 && is_face[mask | b] {
                is_face[mask] = true;
            }
        }
    }
    (0..size)
        .filter(|&mask| !is_face[mask] && iter_bits(mask as u64).all(|v| is_face[mask ^ (1 << v)]))
        .map(|mask| mask as u64)
        .collect()
}

/// Facets of the Stanley–Reisner complex of the ideal generated by `gens`:
/// the maximal vertex sets containing no generator. Depth-first search over
/// the vertices, branching on include/exclude.
pub(crate) fn maximal_independent_sets(ground: GroundSet, gens: &[u64]) -> Vec<u64> {
    let len = ground.len();
    let mut containing: Vec<Vec<u64>> = vec![Vec::new(); len as usize];
    for &g in gens {
        for v in iter_bits(g) {
            containing[v as usize].push(g);
        }
    }
    let mut search = Search {
        len,
        full: ground.full_mask(),
        containing: &containing,
        out: Vec::new(),
    };
    search.visit(0, 0, 0);
    search.out
}

struct Search<'a> {
    len: u32,
    full: u64,
    containing: &'a [Vec<u64>],
    out: Vec<u64>,
}

impl Search<'_> {
    fn visit(&mut self, vertex: u32, face: u64, excluded: u64) {
        if vertex == self.len {
            let maximal = iter_bits(self.full & !face).all(|v| {
                self.containing[v as usize]
                    .iter()
                    .any(|&g| g & !(face | (1 << v)) == 0)
            });
            if maximal {
                self.out.push(face);
            }
            return;
        }
        let bit = 1u64 << vertex;
        let candidates = &self.containing[vertex as usize];
        if !candidates.iter().any(|&g| g & !(face | bit) == 0) {
            self.visit(vertex + 1, face | bit, excluded);
        }
        // Excluding `vertex` only pays off if some generator through it can
        // still be completed by the final face.
        if candidates.iter().any(|&g| g & excluded == 0) {
            self.visit(vertex + 1, face, excluded | bit);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(n: u32) -> GroundSet {
        GroundSet::new(n, 0).unwrap()
    }

    #[test]
    fn complex_to_ideal_examples() {
        let three_points = Complex::from_faces(g(3), [0b001, 0b010, 0b100]);
        assert_eq!(three_points.to_ideal().format_gens(), "x1*x2, x1*x3, x2*x3");
        assert_eq!(
            Complex::simplex(g(3), 0b111).to_ideal().kind(),
            super::super::IdealKind::Zero
        );
        assert_eq!(Complex::irrelevant(g(2)).to_ideal().format_gens(), "x1, x2");
        assert_eq!(
            Complex::void(g(2)).to_ideal().kind(),
            super::super::IdealKind::Unit
        );
    }

    #[test]
    fn kinds_and_dims() {
        assert_eq!(Complex::void(g(2)).kind(), ComplexKind::Void);
        assert_eq!(Complex::void(g(2)).dim(), None);
        assert_eq!(Complex::irrelevant(g(2)).dim(), Some(-1));
        assert_eq!(Complex::from_faces(g(3), [0, 0b11]).dim(), Some(1));
    }

    #[test]
    fn faces_and_f_vector() {
        let c = Complex::from_faces(g(3), [0b011, 0b110]);
        assert_eq!(c.f_vector(), vec![1, 3, 2]);
        assert_eq!(c.faces_by_size()[1], vec![0b001, 0b010, 0b100]);
        assert!(Complex::void(g(2)).faces_by_size().is_empty());
    }

    #[test]
    fn dense_and_sparse_nonfaces_agree() {
        let ground = GroundSet::new(5, 3).unwrap();
        let facets = [0b0001_0111u64, 0b1110_0001, 0b0101_1010, 0b1000_1100];
        let mut dense = minimal_nonfaces_dense(8, &maximal_sets(facets.to_vec()));
        let complements: Vec<u64> = facets.iter().map(|&f| ground.complement(f)).collect();
        let mut sparse = minimal_transversals(&complements);
        dense.sort_unstable();
        sparse.sort_unstable();
        assert_eq!(dense, sparse);
    }

    #[test]
    fn sparse_route_on_wide_ground() {
        // 30 vertices: facets of I_2 on x1..x30 are the single vertices.
        let ground = GroundSet::new(30, 0).unwrap();
        let c = Complex::from_faces(ground, (0..30).map(|v| 1u64 << v));
        let ideal = c.to_ideal();
        assert_eq!(ideal.len(), 30 * 29 / 2);
        assert!(ideal.supports().iter().all(|s| s.count_ones() == 2));
    }

    #[test]
    fn restriction() {
        let c = Complex::from_faces(g(3), [0b011, 0b110]);
        assert_eq!(c.restrict(0b101).facets(), &[0b001, 0b100]);
    }
}
