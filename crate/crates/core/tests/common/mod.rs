//! Helpers shared by integration tests.

#![allow(dead_code)]

use num_rational::BigRational;
use num_traits::{One, Zero};

use simplimap::complex::Simplex;
use simplimap::realization::PolytopeRealization;

type Q = BigRational;

/// Solution of the square system `rows · u = 1`, if unique.
fn hyperplane(rows: Vec<Vec<Q>>) -> Option<Vec<Q>> {
    let d = rows.len();
    let mut a: Vec<Vec<Q>> = rows
        .into_iter()
        .map(|mut r| {
            r.push(Q::one());
            r
        })
        .collect();
    for col in 0..d {
        let piv = (col..d).find(|&i| !a[i][col].is_zero())?;
        a.swap(col, piv);
        let inv = a[col][col].clone().recip();
        for x in a[col].iter_mut() {
            *x *= &inv;
        }
        let p = a[col].clone();
        for (i, row) in a.iter_mut().enumerate() {
            if i != col && !row[col].is_zero() {
                let f = row[col].clone();
                for (x, y) in row.iter_mut().zip(&p) {
                    *x -= &f * y;
                }
            }
        }
    }
    Some(a.into_iter().map(|mut r| r.pop().unwrap()).collect())
}

/// Every vertex subset of size `ambient_dim` spanning a hyperplane with all
/// other points strictly beneath it. For a simplicial polytope with the
/// origin inside these are exactly its facets.
pub fn hull_facets_brute_force(r: &PolytopeRealization) -> Vec<Simplex> {
    let n = r.num_vertices();
    let d = r.ambient_dim;
    let mut out = Vec::new();
    let mut idx: Vec<usize> = (0..d).collect();
    loop {
        let rows = idx.iter().map(|&i| r.coordinates[i].clone()).collect();
        if let Some(u) = hyperplane(rows) {
            let ok = (0..n).filter(|w| !idx.contains(w)).all(|w| {
                let s = u.iter().zip(&r.coordinates[w]).fold(Q::zero(), |acc, (a, b)| acc + a * b);
                s < Q::one()
            });
            if ok {
                out.push(Simplex::new(idx.clone()).unwrap());
            }
        }
        let mut i = d;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            if idx[i] < n - d + i {
                break;
            }
        }
        idx[i] += 1;
        for j in i + 1..d {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

/// Determinant by cofactor expansion along the first row.
pub fn cofactor_det(m: &[Vec<i64>]) -> i128 {
    let n = m.len();
    if n == 0 {
        return 1;
    }
    if n == 1 {
        return m[0][0] as i128;
    }
    let mut total = 0i128;
    for c in 0..n {
        if m[0][c] == 0 {
            continue;
        }
        let minor: Vec<Vec<i64>> = m[1..]
            .iter()
            .map(|row| row.iter().enumerate().filter(|&(j, _)| j != c).map(|(_, &x)| x).collect())
            .collect();
        let sign = if c % 2 == 0 { 1 } else { -1 };
        total += sign * m[0][c] as i128 * cofactor_det(&minor);
    }
    total
}
