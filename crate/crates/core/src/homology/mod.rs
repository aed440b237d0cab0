//! Reduced simplicial homology over exact fields.
//!
//! Chain groups are augmented (`C_{-1} = K`). The basis of `C_j` is the list
//! of `(j+1)`-element faces sorted by bitset value, and the boundary of a face
//! `{v_0 < .. < v_j}` is `Σ (-1)^k (face \ v_k)`.

mod rank;

use std::collections::HashMap;

pub use rank::{matrix_rank, Field, SparseMatrix};

use crate::ideal::{Complex, ComplexKind};
use crate::{Error, Result};

/// `link_D(f) = { g : g ∩ f = ∅, g ∪ f ∈ D }`.
pub fn link(complex: &Complex, face: u64) -> Result<Complex> {
    if !complex.contains_face(face) {
        return Err(Error::NotAFace(face));
    }
    Ok(Complex::from_faces(
        complex.ground(),
        complex
            .facets()
            .iter()
            .filter(|&&f| face & !f == 0)
            .map(|&f| f & !face),
    ))
}

/// The augmented chain complex of a non-void simplicial complex.
#[derive(Clone, Debug)]
pub struct ChainComplex {
    /// `faces[k]` = faces with `k` vertices, i.e. the basis of `C_{k-1}`.
    faces: Vec<Vec<u64>>,
    /// `boundaries[k]` is the matrix of `C_{k-1} -> C_{k-2}`; entry 0 is unused.
    boundaries: Vec<SparseMatrix>,
}

impl ChainComplex {
    pub fn new(complex: &Complex) -> Result<Self> {
        if complex.kind() == ComplexKind::Void {
            return Err(Error::VoidComplex);
        }
        let faces = complex.faces_by_size();
        let mut boundaries = vec![SparseMatrix::zeros(0, faces[0].len())];
        for k in 1..faces.len() {
            let index: HashMap<u64, usize> = faces[k - 1]
                .iter()
                .enumerate()
                .map(|(i, &f)| (f, i))
                .collect();
            let mut matrix = SparseMatrix::zeros(faces[k - 1].len(), 0);
            for &face in &faces[k] {
                let mut column = Vec::with_capacity(k);
                let mut rest = face;
                let mut position = 0;
                while rest != 0 {
                    let bit = rest & rest.wrapping_neg();
                    rest ^= bit;
                    let sign = if position % 2 == 0 { 1 } else { -1 };
                    column.push((index[&(face ^ bit)], sign));
                    position += 1;
                }
                column.sort_unstable_by_key(|&(r, _)| r);
                matrix.push_column(column);
            }
            boundaries.push(matrix);
        }
        Ok(Self { faces, boundaries })
    }

    /// Largest `j` with `C_j != 0`.
    pub fn top_dim(&self) -> i32 {
        self.faces.len() as i32 - 2
    }

    /// `dims()[j + 1] = dim C_j` for `j = -1 ..= top_dim`.
    pub fn dims(&self) -> Vec<usize> {
        self.faces.iter().map(|f| f.len()).collect()
    }

    /// Basis of `C_j`.
    pub fn basis(&self, j: i32) -> &[u64] {
        &self.faces[(j + 1) as usize]
    }

    /// Matrix of `∂_j : C_j -> C_{j-1}` for `0 <= j <= top_dim`.
    pub fn boundary(&self, j: i32) -> &SparseMatrix {
        assert!(
            j >= 0 && j <= self.top_dim(),
            "no boundary map in degree {j}"
        );
        &self.boundaries[(j + 1) as usize]
    }

    /// Checks `∂_{j-1} ∘ ∂_j = 0` for every `j`.
    pub fn is_complex(&self) -> bool {
        (1..=self.top_dim()).all(|j| self.boundary(j - 1).mul(self.boundary(j)).is_zero())
    }

    /// `[dim H̃_{-1}, dim H̃_0, .., dim H̃_{top_dim}]`.
    pub fn reduced_homology(&self, field: Field) -> Vec<u64> {
        let dims = self.dims();
        // ranks[k] = rank of the map out of C_{k-1}; nothing leaves C_{-1}.
        let mut ranks = vec![0usize; dims.len() + 1];
        for (k, boundary) in self.boundaries.iter().enumerate().take(dims.len()).skip(1) {
            ranks[k] = matrix_rank(boundary, field);
        }
        (0..dims.len())
            .map(|k| (dims[k] - ranks[k] - ranks[k + 1]) as u64)
            .collect()
    }
}

/// Reduced homology dimensions `[H̃_{-1}, H̃_0, .., H̃_{dim D}]` over `field`.
/// The irrelevant complex `{∅}` gives `[1]`; the void complex is an error.
pub fn reduced_homology_dims(complex: &Complex, field: Field) -> Result<Vec<u64>> {
    Ok(ChainComplex::new(complex)?.reduced_homology(field))
}
