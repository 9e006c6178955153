use super::{degree, SimplicialMap};
use crate::complex::{cycle, join_oriented, simplex_boundary, OrientedComplex, VertexId};
use crate::error::{Error, Result};

pub fn identity(k: &OrientedComplex) -> SimplicialMap {
    SimplicialMap::from_parts_unchecked(k.clone(), k.clone(), (0..k.num_vertices()).collect())
}

/// Every vertex of `source` to the target vertex `v`.
pub fn constant_map(source: &OrientedComplex, target: &OrientedComplex, v: VertexId) -> Result<SimplicialMap> {
    SimplicialMap::new(source.clone(), target.clone(), vec![v; source.num_vertices()])
}

/// `cycle(len) -> cycle(m)`, `i -> i mod m`; every edge is positive.
pub fn wrap_map(len: usize, m: usize) -> Result<SimplicialMap> {
    if m < 3 {
        return Err(Error::CycleTooShort(m));
    }
    if len == 0 || !len.is_multiple_of(m) {
        return Err(Error::NotAMultiple { source_len: len, target_len: m });
    }
    let source = cycle(len)?;
    let target = cycle(m)?;
    Ok(SimplicialMap::from_parts_unchecked(source, target, (0..len).map(|i| i % m).collect()))
}

/// `i -> -i mod m` on `cycle(m)`, degree -1.
pub fn reflect(m: usize) -> Result<SimplicialMap> {
    let c = cycle(m)?;
    Ok(SimplicialMap::from_parts_unchecked(c.clone(), c, (0..m).map(|i| (m - i) % m).collect()))
}

/// Automorphism of `k` exchanging vertices `a` and `b`; fails when the swap
/// does not preserve the facet set.
pub fn transposition(k: &OrientedComplex, a: VertexId, b: VertexId) -> Result<SimplicialMap> {
    let mut assignment: Vec<VertexId> = (0..k.num_vertices()).collect();
    if a >= assignment.len() || b >= assignment.len() {
        return Err(Error::InvalidMap(format!("transposition ({a} {b}) out of range")));
    }
    assignment.swap(a, b);
    let map = SimplicialMap::from_parts_unchecked(k.clone(), k.clone(), assignment);
    let valid = map.validate();
    if !valid.passed {
        return Err(Error::InvalidMap(format!("({a} {b}) is not an automorphism: {}", valid.detail)));
    }
    Ok(map)
}

/// Degree-one map `∂Δ^{k+1} ⋆ ∂Δ^{m+1} -> ∂Δ^{k+m+2}`: `a_i -> c_i` and
/// `b_j -> c_{k+1+j}`, so `a_{k+1}` and `b_0` share their image. When the
/// signed count comes out as -1 the source vertices `a_0, a_1` are swapped
/// first; the swap, if any, is returned alongside.
pub fn collapse_map_logged(k: usize, m: usize) -> (SimplicialMap, Option<(VertexId, VertexId)>) {
    let a = simplex_boundary(k);
    let b = simplex_boundary(m);
    let labels = (0..k + 2).map(|i| format!("a{i}")).chain((0..m + 2).map(|j| format!("b{j}"))).collect();
    let source = join_oriented(&a, &b).with_labels(labels);
    let target = simplex_boundary(k + m + 1);
    let assignment: Vec<VertexId> = (0..k + 2).chain((0..m + 2).map(|j| k + 1 + j)).collect();
    let map = SimplicialMap::from_parts_unchecked(source, target, assignment);
    let d = degree(&map).expect("collapse map is a valid map of equal dimensions").degree;
    debug_assert!(d == 1 || d == -1);
    if d == 1 {
        return (map, None);
    }
    let swap = transposition(map.source(), 0, 1).expect("a_0, a_1 swap is an automorphism");
    (map.precompose(&swap).expect("automorphism composes"), Some((0, 1)))
}

pub fn collapse_map(k: usize, m: usize) -> SimplicialMap {
    collapse_map_logged(k, m).0
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::Simplex;

    #[test]
    fn wrap_errors() {
        assert!(matches!(wrap_map(8, 3), Err(Error::NotAMultiple { .. })));
        assert!(matches!(wrap_map(4, 2), Err(Error::CycleTooShort(2))));
        let id = wrap_map(3, 3).unwrap();
        assert_eq!(id.assignment(), &[0, 1, 2]);
        assert_eq!(degree(&id).unwrap().degree, 1);
    }

    #[test]
    fn reflect_involution() {
        let r = reflect(5).unwrap();
        let rr = r.then(&r).unwrap();
        assert_eq!(rr.assignment(), &[0, 1, 2, 3, 4]);
        assert_eq!(degree(&reflect(3).unwrap()).unwrap().degree, -1);
    }

    #[test]
    fn collapse_one_one() {
        let f = collapse_map(1, 1);
        let r = degree(&f).unwrap();
        assert_eq!(r.degree, 1);
        assert!(r.consistent);
        let target_facet = Simplex::new(vec![0, 1, 3, 4]).unwrap();
        let count = r.per_target_facet.iter().find(|c| c.facet == target_facet).unwrap();
        assert_eq!(count.positive + count.negative, 1);
        assert_eq!(f.source().num_vertices(), 6);
        assert_eq!(f.source().base().label(3), "b0");
    }

    #[test]
    fn collapse_small_cases() {
        for (k, m) in [(1, 0), (0, 0), (0, 2), (3, 1), (2, 2)] {
            let f = collapse_map(k, m);
            assert_eq!(f.target().dim(), k + m + 1);
            let r = degree(&f).unwrap();
            assert_eq!(r.degree, 1, "k={k} m={m}");
            assert!(r.consistent);
        }
    }

    #[test]
    fn transposition_checks_automorphism() {
        let c4 = cycle(4).unwrap();
        assert!(transposition(&c4, 0, 2).is_ok());
        assert!(transposition(&c4, 0, 1).is_err());
    }
}
