use num_bigint::BigUint;
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use super::{ConstructionTree, JoinTree};
use crate::complex::{FVector, SimplicialComplex};
use crate::error::{Error, Result};

/// Complexes with more facets than this are described by their construction
/// tree only.
pub const FACET_BUDGET: usize = 1_000_000;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RatioEntry {
    pub i: usize,
    pub j: usize,
    #[serde(with = "crate::rational::one")]
    pub value: BigRational,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FVectorReport {
    pub n: usize,
    #[serde(rename = "C", with = "crate::rational::one")]
    pub c: BigRational,
    pub h: usize,
    pub k: usize,
    /// The even case joins the circles with a 0-sphere.
    pub joined_with_s0: bool,
    pub fvec: FVector,
    pub ratios: Vec<RatioEntry>,
    #[serde(with = "crate::rational::one")]
    pub min_ratio: BigRational,
}

#[derive(Clone, Debug)]
pub struct FVectorSphere {
    pub tree: ConstructionTree,
    /// Present when the facet count is within budget.
    pub complex: Option<SimplicialComplex>,
    pub report: FVectorReport,
}

pub fn fvector_sphere(n: usize, c: &BigRational) -> Result<FVectorSphere> {
    fvector_sphere_with_budget(n, c, FACET_BUDGET)
}

/// Join of `h = ⌊(n+1)/2⌋` copies of `cycle(k)` (with a 0-sphere when `n` is
/// even) for the least `k ≥ 3` making `f_j / f_i > c` for all
/// `i < ⌊(n-1)/2⌋` and `i < j ≤ n`. Only f-polynomials are used in the
/// search.
pub fn fvector_sphere_with_budget(n: usize, c: &BigRational, budget: usize) -> Result<FVectorSphere> {
    if n < 3 {
        return Err(Error::Construction(format!("dimension must be at least 3, got {n}")));
    }
    if !c.is_positive() {
        return Err(Error::Construction("ratio threshold must be positive".into()));
    }
    let h = n.div_ceil(2);
    let even = n.is_multiple_of(2);
    let mut k = 3;
    let (tree, fvec, ratios) = loop {
        let tree = ConstructionTree::new(tree_for(h, k, even));
        let fvec = tree.f_vector();
        let ratios = required_ratios(n, &fvec);
        if ratios.iter().all(|r| &r.value > c) {
            break (tree, fvec, ratios);
        }
        k += 1;
    };
    let min_ratio = ratios.iter().map(|r| r.value.clone()).min().unwrap_or_else(BigRational::zero);
    let complex = if fvec.num_facets() <= BigUint::from(budget) {
        Some(tree.build()?.into_base())
    } else {
        None
    };
    let report = FVectorReport { n, c: c.clone(), h, k, joined_with_s0: even, fvec, ratios, min_ratio };
    Ok(FVectorSphere { tree, complex, report })
}

fn tree_for(h: usize, k: usize, even: bool) -> JoinTree {
    let leaves = (0..h)
        .map(|_| JoinTree::Cycle { m: k })
        .chain(even.then_some(JoinTree::SimplexBoundary { n: 0 }));
    JoinTree::join_all(leaves).expect("h ≥ 1")
}

fn required_ratios(n: usize, f: &FVector) -> Vec<RatioEntry> {
    let imax = (n - 1) / 2;
    let mut out = Vec::new();
    for i in 0..imax {
        for j in i + 1..=n {
            let value = BigRational::new(f.get(j).into(), f.get(i).into());
            out.push(RatioEntry { i, j, value });
        }
    }
    out
}
