//! Smith normal form over the integers.
//!
//! The dense routine pivots on the nonzero entry of least absolute value
//! (first in row-major order on ties) and can record the unimodular
//! transforms `P`, `Q` with `P * M * Q = D`. The sparse routine strips unit
//! pivots from boundary matrices first and hands the residual block to the
//! dense routine; invariant factors do not depend on the pivot sequence.

use num_bigint::BigInt;

use super::integer::Integer;

/// Dense row-major integer matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Integer>,
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self { rows, cols, data: vec![Integer::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, Integer::one());
        }
        m
    }

    pub fn from_rows(rows: &[Vec<i64>]) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged matrix");
        let data = rows.iter().flat_map(|row| row.iter().map(|&x| Integer::from(x))).collect();
        Self { rows: r, cols: c, data }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Integer {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Integer) {
        self.data[i * self.cols + j] = v;
    }

    pub fn mul(&self, other: &IntMatrix) -> IntMatrix {
        assert_eq!(self.cols, other.rows, "shape mismatch");
        let mut out = IntMatrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if !b.is_zero() {
                        let v = out.get(i, j) + &(a * b);
                        out.set(i, j, v);
                    }
                }
            }
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Integer::is_zero)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for i in 0..self.rows {
            self.data.swap(i * self.cols + a, i * self.cols + b);
        }
    }

    /// row[dst] -= factor * row[src]
    fn row_sub(&mut self, dst: usize, src: usize, factor: &Integer) {
        for j in 0..self.cols {
            let s = self.get(src, j);
            if !s.is_zero() {
                let v = self.get(dst, j).sub_mul(factor, s);
                self.set(dst, j, v);
            }
        }
    }

    /// col[dst] -= factor * col[src]
    fn col_sub(&mut self, dst: usize, src: usize, factor: &Integer) {
        for i in 0..self.rows {
            let s = self.get(i, src);
            if !s.is_zero() {
                let v = self.get(i, dst).sub_mul(factor, s);
                self.set(i, dst, v);
            }
        }
    }

    fn negate_row(&mut self, r: usize) {
        for j in 0..self.cols {
            let v = -self.get(r, j);
            self.set(r, j, v);
        }
    }
}

#[derive(Clone, Debug)]
pub struct SnfResult {
    /// Nonzero diagonal entries `d_1 | d_2 | ...`, all positive.
    pub invariant_factors: Vec<BigInt>,
    pub rank: usize,
    /// `(P, Q)` with `P * M * Q` diagonal, when requested.
    pub transforms: Option<(IntMatrix, IntMatrix)>,
}

impl SnfResult {
    /// Factors larger than one; these are the torsion coefficients.
    pub fn torsion(&self) -> Vec<BigInt> {
        self.invariant_factors.iter().filter(|d| **d > BigInt::from(1)).cloned().collect()
    }
}

pub fn smith_normal_form(m: &IntMatrix) -> SnfResult {
    dense_snf(m, true)
}

pub(crate) fn dense_snf(m: &IntMatrix, track: bool) -> SnfResult {
    let mut a = m.clone();
    let (r, c) = (a.rows, a.cols);
    let mut p = track.then(|| IntMatrix::identity(r));
    let mut q = track.then(|| IntMatrix::identity(c));
    let mut t = 0;
    while t < r.min(c) {
        let Some((pi, pj)) = min_abs_entry(&a, t) else { break };
        place_pivot(&mut a, &mut p, &mut q, t, pi, pj);
        loop {
            let mut clean = true;
            let pivot = a.get(t, t).clone();
            for i in t + 1..r {
                if !a.get(i, t).is_zero() {
                    let f = a.get(i, t).div_trunc(&pivot);
                    a.row_sub(i, t, &f);
                    if let Some(p) = p.as_mut() {
                        p.row_sub(i, t, &f);
                    }
                    clean &= a.get(i, t).is_zero();
                }
            }
            for j in t + 1..c {
                if !a.get(t, j).is_zero() {
                    let f = a.get(t, j).div_trunc(&pivot);
                    a.col_sub(j, t, &f);
                    if let Some(q) = q.as_mut() {
                        q.col_sub(j, t, &f);
                    }
                    clean &= a.get(t, j).is_zero();
                }
            }
            if !clean {
                let (pi, pj) = min_abs_entry(&a, t).expect("nonzero entries remain");
                place_pivot(&mut a, &mut p, &mut q, t, pi, pj);
                continue;
            }
            // divisibility: pull an offending row into row t and reduce again
            let offending = (t + 1..r).find(|&i| (t + 1..c).any(|j| !a.get(i, j).rem_trunc(&pivot).is_zero()));
            match offending {
                Some(i) => {
                    let minus_one = Integer::from(-1);
                    a.row_sub(t, i, &minus_one);
                    if let Some(p) = p.as_mut() {
                        p.row_sub(t, i, &minus_one);
                    }
                }
                None => break,
            }
        }
        if a.get(t, t).is_negative() {
            a.negate_row(t);
            if let Some(p) = p.as_mut() {
                p.negate_row(t);
            }
        }
        t += 1;
    }
    let invariant_factors: Vec<BigInt> = (0..t).map(|i| a.get(i, i).to_bigint()).collect();
    SnfResult { rank: invariant_factors.len(), invariant_factors, transforms: p.zip(q) }
}

/// Least absolute value among `a[i][j]`, `i, j >= t`; row-major first on ties.
fn min_abs_entry(a: &IntMatrix, t: usize) -> Option<(usize, usize)> {
    let mut best: Option<(usize, usize)> = None;
    for i in t..a.rows {
        for j in t..a.cols {
            let v = a.get(i, j);
            if v.is_zero() {
                continue;
            }
            if best.is_none_or(|(bi, bj)| v.cmp_abs(a.get(bi, bj)).is_lt()) {
                best = Some((i, j));
                if v.is_unit() {
                    return best;
                }
            }
        }
    }
    best
}

fn place_pivot(
    a: &mut IntMatrix,
    p: &mut Option<IntMatrix>,
    q: &mut Option<IntMatrix>,
    t: usize,
    i: usize,
    j: usize,
) {
    a.swap_rows(t, i);
    a.swap_cols(t, j);
    if let Some(p) = p.as_mut() {
        p.swap_rows(t, i);
    }
    if let Some(q) = q.as_mut() {
        q.swap_cols(t, j);
    }
}

/// Sparse integer matrix given by columns of `(row, value)` entries.
#[derive(Clone, Debug, Default)]
pub struct SparseMatrix {
    pub rows: usize,
    pub columns: Vec<Vec<(usize, Integer)>>,
}

/// Rank and invariant factors of a sparse matrix.
///
/// Unit entries are eliminated first: row operations clear the pivot column,
/// after which pivot row and column drop out. Rows holding a single entry go
/// first (no fill-in); otherwise the column with the fewest entries is taken,
/// pivoting on its shortest row. When no unit entry is left the remaining
/// block goes through [`dense_snf`].
pub(crate) fn sparse_invariant_factors(m: &SparseMatrix) -> (usize, Vec<BigInt>) {
    use std::cmp::Reverse;
    use std::collections::{BinaryHeap, HashSet};

    let ncols = m.columns.len();
    let mut rows: Vec<Vec<(usize, Integer)>> = vec![Vec::new(); m.rows];
    let mut cols: Vec<HashSet<usize>> = vec![HashSet::new(); ncols];
    for (j, col) in m.columns.iter().enumerate() {
        for (i, v) in col {
            if !v.is_zero() {
                rows[*i].push((j, v.clone()));
                cols[j].insert(*i);
            }
        }
    }
    let mut heap: BinaryHeap<Reverse<(usize, usize)>> =
        (0..ncols).filter(|&j| !cols[j].is_empty()).map(|j| Reverse((cols[j].len(), j))).collect();
    let mut singles: Vec<usize> = (0..m.rows).filter(|&i| rows[i].len() == 1).collect();
    let mut unit_rank = 0usize;
    loop {
        let pivot = if let Some(i) = singles.pop() {
            match rows[i].as_slice() {
                [(j, v)] if v.is_unit() => Some((i, *j)),
                _ => continue,
            }
        } else if let Some(Reverse((count, j))) = heap.pop() {
            if cols[j].len() != count || count == 0 {
                continue;
            }
            let best = cols[j]
                .iter()
                .copied()
                .filter(|&i| entry(&rows[i], j).is_some_and(Integer::is_unit))
                .min_by_key(|&i| (rows[i].len(), i));
            match best {
                Some(i) => Some((i, j)),
                // revisited when the column changes
                None => continue,
            }
        } else {
            None
        };
        let Some((p, j)) = pivot else { break };
        let unit = entry(&rows[p], j).cloned().expect("pivot entry");
        let prow = std::mem::take(&mut rows[p]);
        for (c, _) in &prow {
            cols[*c].remove(&p);
        }
        let others: Vec<usize> = cols[j].iter().copied().collect();
        for i in others {
            let a = entry(&rows[i], j).cloned().expect("column entry");
            // unit pivot: a / unit = a * unit
            let factor = &a * &unit;
            let merged = merge_sub(&rows[i], &prow, &factor);
            let mut touched: Vec<usize> = Vec::new();
            for (c, _) in &prow {
                let had = cols[*c].contains(&i);
                let has = entry(&merged, *c).is_some();
                if had && !has {
                    cols[*c].remove(&i);
                } else if has && !had {
                    cols[*c].insert(i);
                }
                touched.push(*c);
            }
            rows[i] = merged;
            if rows[i].len() == 1 {
                singles.push(i);
            }
            for c in touched {
                if c != j && !cols[c].is_empty() {
                    heap.push(Reverse((cols[c].len(), c)));
                }
            }
        }
        debug_assert!(cols[j].is_empty());
        for (c, _) in &prow {
            if !cols[*c].is_empty() {
                heap.push(Reverse((cols[*c].len(), *c)));
            }
        }
        unit_rank += 1;
    }
    // residual block
    let res_rows: Vec<usize> = (0..m.rows).filter(|&i| !rows[i].is_empty()).collect();
    let mut res_cols: Vec<usize> = res_rows.iter().flat_map(|&i| rows[i].iter().map(|(c, _)| *c)).collect();
    res_cols.sort_unstable();
    res_cols.dedup();
    let mut factors: Vec<BigInt> = vec![BigInt::from(1); unit_rank];
    if !res_rows.is_empty() {
        let mut dense = IntMatrix::zeros(res_rows.len(), res_cols.len());
        for (ri, &i) in res_rows.iter().enumerate() {
            for (c, v) in &rows[i] {
                let cj = res_cols.binary_search(c).expect("column present");
                dense.set(ri, cj, v.clone());
            }
        }
        let snf = dense_snf(&dense, false);
        factors.extend(snf.invariant_factors);
    }
    (factors.len(), factors)
}

fn entry(row: &[(usize, Integer)], col: usize) -> Option<&Integer> {
    row.binary_search_by_key(&col, |(c, _)| *c).ok().map(|k| &row[k].1)
}

/// `a - factor * b` for sorted sparse rows.
fn merge_sub(a: &[(usize, Integer)], b: &[(usize, Integer)], factor: &Integer) -> Vec<(usize, Integer)> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut k) = (0, 0);
    while i < a.len() || k < b.len() {
        let take_a = k >= b.len() || (i < a.len() && a[i].0 < b[k].0);
        let take_b = i >= a.len() || (k < b.len() && b[k].0 < a[i].0);
        if take_a {
            out.push(a[i].clone());
            i += 1;
        } else if take_b {
            out.push((b[k].0, -&(factor * &b[k].1)));
            k += 1;
        } else {
            let v = a[i].1.sub_mul(factor, &b[k].1);
            if !v.is_zero() {
                out.push((a[i].0, v));
            }
            i += 1;
            k += 1;
        }
    }
    out
}
