use serde::{Deserialize, Serialize};

use super::{FacetLookup, SimplicialMap};
use crate::complex::Simplex;
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TargetFacetCount {
    pub facet: Simplex,
    pub positive: u64,
    pub negative: u64,
}

impl TargetFacetCount {
    pub fn signed(&self) -> i64 {
        self.positive as i64 - self.negative as i64
    }
}

/// Signed preimage counts over every target facet.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DegreeReport {
    pub degree: i64,
    pub per_target_facet: Vec<TargetFacetCount>,
    /// Source facets with a degenerate image; they contribute nothing.
    pub degenerate: u64,
    /// All target facets see the same signed count.
    pub consistent: bool,
}

impl DegreeReport {
    pub fn positive_total(&self) -> u64 {
        self.per_target_facet.iter().map(|c| c.positive).sum()
    }

    pub fn negative_total(&self) -> u64 {
        self.per_target_facet.iter().map(|c| c.negative).sum()
    }
}

/// Degree as positive minus negative preimages, evaluated at every target
/// facet. A mismatch between target facets is reported through
/// `consistent = false` rather than an error.
pub fn degree(f: &SimplicialMap) -> Result<DegreeReport> {
    let (sd, td) = (f.source().dim(), f.target().dim());
    if sd != td {
        return Err(Error::DimensionMismatch { source_dim: sd, target_dim: td });
    }
    let valid = f.validate();
    if !valid.passed {
        return Err(Error::InvalidMap(valid.detail));
    }
    let lookup = FacetLookup::new(f.target());
    let mut pos = vec![0u64; f.target().num_facets()];
    let mut neg = vec![0u64; f.target().num_facets()];
    let mut degenerate = 0u64;
    for i in 0..f.source().num_facets() {
        match lookup.sign_of(f, i)? {
            (1, Some(t)) => pos[t] += 1,
            (-1, Some(t)) => neg[t] += 1,
            _ => degenerate += 1,
        }
    }
    let per_target_facet: Vec<TargetFacetCount> = f
        .target()
        .facets()
        .iter()
        .enumerate()
        .map(|(t, facet)| TargetFacetCount { facet: facet.clone(), positive: pos[t], negative: neg[t] })
        .collect();
    let first = per_target_facet.first().map_or(0, TargetFacetCount::signed);
    let consistent = per_target_facet.iter().all(|c| c.signed() == first);
    Ok(DegreeReport { degree: first, per_target_facet, degenerate, consistent })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::simplex_boundary;
    use crate::map::{constant_map, identity, wrap_map};

    #[test]
    fn identity_and_constant() {
        for n in 0..5 {
            let b = simplex_boundary(n);
            let r = degree(&identity(&b)).unwrap();
            assert_eq!(r.degree, 1);
            assert!(r.consistent);
        }
        let b3 = simplex_boundary(3);
        let r = degree(&constant_map(&b3, &b3, 0).unwrap()).unwrap();
        assert_eq!(r.degree, 0);
        assert_eq!(r.degenerate, 5);
        assert!(r.consistent);
    }

    #[test]
    fn wrap_counts_every_edge() {
        let r = degree(&wrap_map(9, 3).unwrap()).unwrap();
        assert_eq!(r.degree, 3);
        assert!(r.consistent);
        assert_eq!(r.per_target_facet.len(), 3);
        assert!(r.per_target_facet.iter().all(|c| c.positive == 3 && c.negative == 0));
    }
}
