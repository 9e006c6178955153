//! Simplicial maps between oriented complexes and their signed-count degree.

mod degree;
mod standard;

use std::collections::HashMap;

pub use degree::{degree, DegreeReport, TargetFacetCount};
pub use standard::{
    collapse_map, collapse_map_logged, constant_map, identity, reflect, transposition, wrap_map,
};

use crate::complex::{join_oriented, permutation_sign, Check, OrientedComplex, Simplex, VertexId};
use crate::error::{Error, Result};

/// A vertex assignment from `source` to `target`.
///
/// Construction only checks the shape of the assignment; whether images of
/// faces are faces is reported by [`SimplicialMap::validate`].
#[derive(Clone, Debug)]
pub struct SimplicialMap {
    source: OrientedComplex,
    target: OrientedComplex,
    assignment: Vec<VertexId>,
}

impl SimplicialMap {
    pub fn new(source: OrientedComplex, target: OrientedComplex, assignment: Vec<VertexId>) -> Result<Self> {
        if assignment.len() != source.num_vertices() {
            return Err(Error::InvalidMap(format!(
                "assignment has {} entries for {} source vertices",
                assignment.len(),
                source.num_vertices()
            )));
        }
        if let Some((v, &w)) = assignment.iter().enumerate().find(|(_, &w)| w >= target.num_vertices()) {
            return Err(Error::InvalidMap(format!(
                "vertex {v} maps to {w}, but the target has {} vertices",
                target.num_vertices()
            )));
        }
        Ok(Self { source, target, assignment })
    }

    pub(crate) fn from_parts_unchecked(
        source: OrientedComplex,
        target: OrientedComplex,
        assignment: Vec<VertexId>,
    ) -> Self {
        Self { source, target, assignment }
    }

    pub fn source(&self) -> &OrientedComplex {
        &self.source
    }

    pub fn target(&self) -> &OrientedComplex {
        &self.target
    }

    pub fn assignment(&self) -> &[VertexId] {
        &self.assignment
    }

    pub fn image_of(&self, v: VertexId) -> VertexId {
        self.assignment[v]
    }

    pub fn into_parts(self) -> (OrientedComplex, OrientedComplex, Vec<VertexId>) {
        (self.source, self.target, self.assignment)
    }

    /// Image of every source facet must be a face of the target. It suffices
    /// to test facets since faces are closed under subsets.
    pub fn validate(&self) -> Check {
        let lookup = FacetLookup::new(&self.target);
        for f in self.source.facets() {
            let mut img: Vec<VertexId> = f.vertices().iter().map(|&v| self.assignment[v]).collect();
            img.sort_unstable();
            img.dedup();
            if !lookup.is_face(&self.target, &img) {
                return Check::fail(format!(
                    "facet {f} maps onto {}, which is not a face of the target",
                    crate::complex::fmt_vertices(&img)
                ));
            }
        }
        Check::pass(format!("all {} source facets map onto target faces", self.source.num_facets()))
    }

    /// Sign of source facet `facet_index`: 0 when its image is degenerate,
    /// otherwise source sign times target sign times the parity of the
    /// induced vertex ordering.
    pub fn facet_sign(&self, facet_index: usize) -> Result<i8> {
        if self.source.dim() != self.target.dim() {
            return Err(Error::DimensionMismatch {
                source_dim: self.source.dim(),
                target_dim: self.target.dim(),
            });
        }
        let lookup = FacetLookup::new(&self.target);
        lookup.sign_of(self, facet_index).map(|(s, _)| s)
    }

    /// `other ∘ self`.
    pub fn then(&self, other: &SimplicialMap) -> Result<SimplicialMap> {
        compose(self, other)
    }

    /// `self ∘ automorphism`; used to flip the degree by an orientation
    /// reversing automorphism of the source.
    pub fn precompose(&self, automorphism: &SimplicialMap) -> Result<SimplicialMap> {
        compose(automorphism, self)
    }
}

/// Composition `g ∘ f` (apply `f` first). The target of `f` and the source of
/// `g` must be the same oriented complex up to facet order.
pub fn compose(f: &SimplicialMap, g: &SimplicialMap) -> Result<SimplicialMap> {
    if !f.target.same_oriented(&g.source) {
        return Err(Error::ComplexMismatch(
            "target of the first map differs from the source of the second".into(),
        ));
    }
    let assignment = f.assignment.iter().map(|&v| g.assignment[v]).collect();
    Ok(SimplicialMap { source: f.source.clone(), target: g.target.clone(), assignment })
}

/// `f ⋆ g : K ⋆ L -> K' ⋆ L'`, acting as `f` on the first factor and `g` on
/// the second.
pub fn join_maps(f: &SimplicialMap, g: &SimplicialMap) -> SimplicialMap {
    let source = join_oriented(&f.source, &g.source);
    let target = join_oriented(&f.target, &g.target);
    let offset = f.target.num_vertices();
    let mut assignment = f.assignment.clone();
    assignment.extend(g.assignment.iter().map(|&w| w + offset));
    SimplicialMap { source, target, assignment }
}

/// Target facet index by vertex set.
pub(crate) struct FacetLookup {
    index: HashMap<Simplex, usize>,
}

impl FacetLookup {
    pub(crate) fn new(target: &OrientedComplex) -> Self {
        let index = target.facets().iter().cloned().enumerate().map(|(i, f)| (f, i)).collect();
        Self { index }
    }

    pub(crate) fn get(&self, sorted: &[VertexId]) -> Option<usize> {
        if sorted.is_empty() {
            return None;
        }
        self.index.get(&Simplex::from_sorted(sorted.to_vec())).copied()
    }

    fn is_face(&self, target: &OrientedComplex, sorted: &[VertexId]) -> bool {
        if sorted.len() == target.dim() + 1 {
            return self.get(sorted).is_some();
        }
        target.facets().iter().any(|f| sorted.iter().all(|&v| f.contains(v)))
    }

    /// Sign and image facet index (`None` when degenerate) of a source facet.
    pub(crate) fn sign_of(&self, map: &SimplicialMap, facet_index: usize) -> Result<(i8, Option<usize>)> {
        let f = &map.source.facets()[facet_index];
        let img: Vec<VertexId> = f.vertices().iter().map(|&v| map.assignment[v]).collect();
        let parity = permutation_sign(&img);
        if parity == 0 {
            return Ok((0, None));
        }
        let mut sorted = img;
        sorted.sort_unstable();
        let ti = self.get(&sorted).ok_or_else(|| {
            Error::InvalidMap(format!("image of facet {f} is not a target facet"))
        })?;
        Ok((parity * map.source.sign(facet_index) * map.target.sign(ti), Some(ti)))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::{cycle, simplex_boundary};

    #[test]
    fn validate_examples() {
        let b3 = simplex_boundary(3);
        assert!(identity(&b3).validate().passed);
        assert!(constant_map(&b3, &b3, 0).unwrap().validate().passed);
        let c4 = cycle(4).unwrap();
        // edge {0,1} is sent onto {0,2}, not an edge of the square
        let bad = SimplicialMap::new(c4.clone(), c4.clone(), vec![0, 2, 2, 3]).unwrap();
        let check = bad.validate();
        assert!(!check.passed);
        assert!(check.detail.contains("[0 1]"), "{}", check.detail);
    }

    #[test]
    fn shape_errors() {
        let c4 = cycle(4).unwrap();
        assert!(SimplicialMap::new(c4.clone(), c4.clone(), vec![0, 1, 2]).is_err());
        assert!(SimplicialMap::new(c4.clone(), c4.clone(), vec![0, 1, 2, 7]).is_err());
    }

    #[test]
    fn facet_signs() {
        let b2 = simplex_boundary(2);
        let id = identity(&b2);
        for i in 0..b2.num_facets() {
            assert_eq!(id.facet_sign(i).unwrap(), 1);
        }
        let r = reflect(3).unwrap();
        for i in 0..3 {
            assert_eq!(r.facet_sign(i).unwrap(), -1);
        }
        let c = constant_map(&b2, &b2, 1).unwrap();
        assert_eq!(c.facet_sign(0).unwrap(), 0);
        let mixed = SimplicialMap::new(b2.clone(), simplex_boundary(1), vec![0, 1, 2, 0]).unwrap();
        assert!(matches!(mixed.facet_sign(0), Err(Error::DimensionMismatch { .. })));
    }

    #[test]
    fn composition() {
        let w = wrap_map(9, 3).unwrap();
        let id3 = wrap_map(3, 3).unwrap();
        let c = compose(&w, &id3).unwrap();
        assert_eq!(c.assignment(), w.assignment());
        assert_eq!(degree(&c).unwrap().degree, 3);
        let big = compose(&wrap_map(12, 6).unwrap(), &wrap_map(6, 3).unwrap()).unwrap();
        assert_eq!(degree(&big).unwrap().degree, 4);
        assert!(matches!(compose(&w, &w), Err(Error::ComplexMismatch(_))));
        let left = compose(&identity(w.source()), &w).unwrap();
        assert_eq!(left.assignment(), w.assignment());
    }

    #[test]
    fn joins_multiply() {
        let w = wrap_map(6, 3).unwrap();
        assert_eq!(degree(&join_maps(&w, &w)).unwrap().degree, 4);
        let c3 = cycle(3).unwrap();
        let c4 = cycle(4).unwrap();
        let jid = join_maps(&identity(&c3), &identity(&c4));
        assert_eq!(jid.assignment(), (0..7).collect::<Vec<_>>().as_slice());
        assert_eq!(degree(&jid).unwrap().degree, 1);
        let neg = join_maps(&wrap_map(9, 3).unwrap(), &reflect(3).unwrap());
        let rep = degree(&neg).unwrap();
        assert!(rep.consistent);
        assert_eq!(rep.degree, -3);
        assert_eq!(degree(&join_maps(&reflect(3).unwrap(), &identity(&c3))).unwrap().degree, -1);
    }
}
