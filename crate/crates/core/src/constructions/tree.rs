use num_bigint::BigUint;
use serde::{Deserialize, Serialize};

use crate::complex::{cycle, join_oriented, simplex_boundary, FVector, OrientedComplex, Simplex};
use crate::error::{Error, Result};

/// Join expression over standard spheres.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "op", rename_all = "snake_case")]
pub enum JoinTree {
    Cycle { m: usize },
    SimplexBoundary { n: usize },
    Join { left: Box<JoinTree>, right: Box<JoinTree> },
}

impl JoinTree {
    pub fn join(left: JoinTree, right: JoinTree) -> JoinTree {
        JoinTree::Join { left: Box::new(left), right: Box::new(right) }
    }

    /// Left-nested join of all parts.
    pub fn join_all(parts: impl IntoIterator<Item = JoinTree>) -> Option<JoinTree> {
        parts.into_iter().reduce(JoinTree::join)
    }

    pub fn dim(&self) -> usize {
        match self {
            JoinTree::Cycle { .. } => 1,
            JoinTree::SimplexBoundary { n } => *n,
            JoinTree::Join { left, right } => left.dim() + right.dim() + 1,
        }
    }

    pub fn num_vertices(&self) -> usize {
        match self {
            JoinTree::Cycle { m } => *m,
            JoinTree::SimplexBoundary { n } => n + 2,
            JoinTree::Join { left, right } => left.num_vertices() + right.num_vertices(),
        }
    }

    pub fn build(&self) -> Result<OrientedComplex> {
        Ok(self.build_raw()?.with_labels(self.labels()))
    }

    fn build_raw(&self) -> Result<OrientedComplex> {
        Ok(match self {
            JoinTree::Cycle { m } => cycle(*m)?,
            JoinTree::SimplexBoundary { n } => simplex_boundary(*n),
            JoinTree::Join { left, right } => join_oriented(&left.build_raw()?, &right.build_raw()?),
        })
    }

    /// Vertex labels of the built complex: `v{i}` on cycles and `c{i}` on
    /// simplex boundaries, suffixed `_{leaf}` when there are several leaves.
    pub fn labels(&self) -> Vec<String> {
        let mut leaves = Vec::new();
        self.collect_leaves(&mut leaves);
        let tag = leaves.len() > 1;
        let mut out = Vec::with_capacity(self.num_vertices());
        for (leaf, t) in leaves.into_iter().enumerate() {
            let (prefix, count) = match t {
                JoinTree::Cycle { m } => ("v", *m),
                JoinTree::SimplexBoundary { n } => ("c", n + 2),
                JoinTree::Join { .. } => unreachable!("leaves only"),
            };
            for i in 0..count {
                out.push(if tag { format!("{prefix}{i}_{leaf}") } else { format!("{prefix}{i}") });
            }
        }
        out
    }

    fn collect_leaves<'a>(&'a self, out: &mut Vec<&'a JoinTree>) {
        match self {
            JoinTree::Join { left, right } => {
                left.collect_leaves(out);
                right.collect_leaves(out);
            }
            leaf => out.push(leaf),
        }
    }

    /// f-vector from f-polynomials of the leaves.
    pub fn f_vector(&self) -> FVector {
        match self {
            JoinTree::Cycle { m } => FVector::from_u64s(&[*m as u64, *m as u64]),
            JoinTree::SimplexBoundary { n } => FVector::new(
                (0..=*n).map(|k| binomial(n + 2, k + 1)).collect(),
            ),
            JoinTree::Join { left, right } => left.f_vector().join_product(&right.f_vector()),
        }
    }
}

/// A join of standard spheres followed by central subdivisions, each facet
/// given in the vertex ids of the complex built so far.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConstructionTree {
    pub base: JoinTree,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub subdivisions: Vec<Simplex>,
}

impl ConstructionTree {
    pub fn new(base: JoinTree) -> Self {
        Self { base, subdivisions: Vec::new() }
    }

    pub fn dim(&self) -> usize {
        self.base.dim()
    }

    pub fn num_vertices(&self) -> usize {
        self.base.num_vertices() + self.subdivisions.len()
    }

    pub fn build(&self) -> Result<OrientedComplex> {
        let mut k = self.base.build()?;
        for f in &self.subdivisions {
            k = k.central_subdivision(f)?.0;
        }
        Ok(k)
    }

    /// Each central subdivision of an n-facet adds `C(n+1, k)` faces in
    /// dimension `k < n` and `n` facets.
    pub fn f_vector(&self) -> FVector {
        let base = self.base.f_vector();
        if self.subdivisions.is_empty() {
            return base;
        }
        let n = self.dim();
        let s = BigUint::from(self.subdivisions.len());
        let counts = base
            .counts()
            .iter()
            .enumerate()
            .map(|(k, c)| {
                let per = if k < n { binomial(n + 1, k) } else { BigUint::from(n) };
                c + &per * &s
            })
            .collect();
        FVector::new(counts)
    }

    pub fn num_facets(&self) -> BigUint {
        self.f_vector().num_facets()
    }

    pub fn check_dims(&self) -> Result<()> {
        let n = self.dim();
        match self.subdivisions.iter().find(|f| f.len() != n + 1) {
            Some(f) => Err(Error::Construction(format!("subdivision facet {f} has wrong dimension"))),
            None => Ok(()),
        }
    }
}

pub(crate) fn binomial(n: usize, k: usize) -> BigUint {
    if k > n {
        return BigUint::default();
    }
    let k = k.min(n - k);
    let mut acc = BigUint::from(1u32);
    for i in 0..k {
        acc = acc * BigUint::from(n - i) / BigUint::from(i + 1);
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tree_f_vectors_match_enumeration() {
        let t = JoinTree::join(
            JoinTree::join(JoinTree::Cycle { m: 4 }, JoinTree::Cycle { m: 3 }),
            JoinTree::SimplexBoundary { n: 0 },
        );
        let k = t.build().unwrap();
        assert_eq!(t.f_vector(), k.base().f_vector());
        assert_eq!(t.num_vertices(), k.num_vertices());
        assert_eq!(t.dim(), 4);
        assert_eq!(k.base().labels()[..2], ["v0_0", "v1_0"]);
        assert_eq!(k.base().labels()[4..], ["v0_1", "v1_1", "v2_1", "c0_2", "c1_2"]);
        let mut ct = ConstructionTree::new(t);
        ct.subdivisions.push(k.facets()[3].clone());
        let k2 = ct.build().unwrap();
        ct.subdivisions.push(k2.facets()[0].clone());
        let k3 = ct.build().unwrap();
        assert_eq!(ct.f_vector(), k3.base().f_vector());
        assert_eq!(ct.num_vertices(), k3.num_vertices());
    }

    #[test]
    fn binomials() {
        assert_eq!(binomial(5, 2), BigUint::from(10u32));
        assert_eq!(binomial(5, 0), BigUint::from(1u32));
        assert_eq!(binomial(3, 4), BigUint::default());
    }
}
