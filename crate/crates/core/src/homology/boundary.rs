use std::collections::HashMap;

use super::integer::Integer;
use super::snf::{IntMatrix, SparseMatrix};
use crate::complex::{Simplex, SimplicialComplex, VertexId};
use crate::error::{Error, Result};

/// Faces of every dimension in lexicographic order, with a reverse index.
pub struct FaceIndex {
    faces: Vec<Vec<Simplex>>,
    index: Vec<HashMap<Simplex, usize>>,
}

impl FaceIndex {
    pub fn new(k: &SimplicialComplex) -> Self {
        let faces: Vec<Vec<Simplex>> =
            (0..=k.dim()).map(|d| k.faces(d).expect("dimension in range")).collect();
        let index = faces
            .iter()
            .map(|fs| fs.iter().cloned().enumerate().map(|(i, f)| (f, i)).collect())
            .collect();
        Self { faces, index }
    }

    pub fn faces(&self, k: usize) -> &[Simplex] {
        &self.faces[k]
    }

    pub fn position(&self, face: &Simplex) -> Option<usize> {
        self.index.get(face.dim())?.get(face).copied()
    }

    pub fn dim(&self) -> usize {
        self.faces.len() - 1
    }
}

/// `∂_k` with rows indexed by `(k-1)`-faces and columns by `k`-faces, both in
/// lexicographic order. The column of `[v_0 ... v_k]` has `(-1)^i` at the face
/// omitting `v_i`.
#[derive(Clone, Debug)]
pub struct BoundaryMatrix {
    pub k: usize,
    pub rows: usize,
    pub columns: Vec<Vec<(usize, i8)>>,
}

impl BoundaryMatrix {
    pub fn cols(&self) -> usize {
        self.columns.len()
    }

    pub fn to_dense(&self) -> IntMatrix {
        let mut m = IntMatrix::zeros(self.rows, self.cols());
        for (j, col) in self.columns.iter().enumerate() {
            for &(i, v) in col {
                m.set(i, j, Integer::from(v as i64));
            }
        }
        m
    }

    pub(crate) fn to_sparse(&self) -> SparseMatrix {
        SparseMatrix {
            rows: self.rows,
            columns: self
                .columns
                .iter()
                .map(|c| c.iter().map(|&(i, v)| (i, Integer::from(v as i64))).collect())
                .collect(),
        }
    }

    /// `self * chain` for a chain given on the column basis.
    pub fn apply(&self, chain: &[Integer]) -> Vec<Integer> {
        assert_eq!(chain.len(), self.cols());
        let mut out = vec![Integer::zero(); self.rows];
        for (j, c) in chain.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for &(i, v) in &self.columns[j] {
                out[i] = if v > 0 { &out[i] + c } else { &out[i] - c };
            }
        }
        out
    }

    /// `self * other` (i.e. `∂_{k} ∘ ∂_{k+1}` when `other` is one degree up).
    pub fn compose(&self, other: &BoundaryMatrix) -> IntMatrix {
        assert_eq!(self.cols(), other.rows);
        let mut out = IntMatrix::zeros(self.rows, other.cols());
        for (j, col) in other.columns.iter().enumerate() {
            let mut acc: HashMap<usize, i64> = HashMap::new();
            for &(mid, w) in col {
                for &(i, v) in &self.columns[mid] {
                    *acc.entry(i).or_default() += (v as i64) * (w as i64);
                }
            }
            for (i, v) in acc {
                out.set(i, j, Integer::from(v));
            }
        }
        out
    }
}

pub fn boundary_matrix(complex: &SimplicialComplex, k: usize) -> Result<BoundaryMatrix> {
    if k == 0 || k > complex.dim() {
        return Err(Error::DimensionOutOfRange { k, dim: complex.dim() });
    }
    let idx = FaceIndex::new(complex);
    Ok(boundary_from_index(&idx, k))
}

pub(crate) fn boundary_from_index(idx: &FaceIndex, k: usize) -> BoundaryMatrix {
    let lower: &HashMap<Simplex, usize> = &idx.index[k - 1];
    let columns = idx.faces[k]
        .iter()
        .map(|f| {
            let mut col: Vec<(usize, i8)> = (0..f.len())
                .map(|pos| {
                    let face: Vec<VertexId> = f.omit(pos);
                    let row = lower[&Simplex::from_sorted(face)];
                    (row, if pos % 2 == 0 { 1 } else { -1 })
                })
                .collect();
            col.sort_unstable();
            col
        })
        .collect();
    BoundaryMatrix { k, rows: idx.faces[k - 1].len(), columns }
}
