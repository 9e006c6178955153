use std::collections::VecDeque;

use super::{fmt_vertices, Check, Simplex, SimplicialComplex, VertexId};
use crate::error::{Error, Result};

/// A complex with one sign per facet, relative to the facet's sorted vertex
/// order. The facet with sign `s` and sorted vertices `v_0 < ... < v_n`
/// induces the sign `s * (-1)^i` on its ridge omitting `v_i`; coherence means
/// the two facets at every ridge induce opposite signs.
#[derive(Clone, Debug)]
pub struct OrientedComplex {
    base: SimplicialComplex,
    signs: Vec<i8>,
}

impl OrientedComplex {
    /// Checks sign count, sign values and coherence.
    pub fn new(base: SimplicialComplex, signs: Vec<i8>) -> Result<Self> {
        if signs.len() != base.num_facets() {
            return Err(Error::InvalidComplex(format!(
                "{} signs for {} facets",
                signs.len(),
                base.num_facets()
            )));
        }
        if let Some(s) = signs.iter().find(|&&s| s != 1 && s != -1) {
            return Err(Error::InvalidComplex(format!("facet sign {s} is not +1 or -1")));
        }
        let out = Self { base, signs };
        let coherence = out.check_coherent();
        if !coherence.passed {
            return Err(Error::NonOrientable(coherence.detail));
        }
        Ok(out)
    }

    pub fn base(&self) -> &SimplicialComplex {
        &self.base
    }

    pub fn into_base(self) -> SimplicialComplex {
        self.base
    }

    pub fn signs(&self) -> &[i8] {
        &self.signs
    }

    pub fn sign(&self, facet_index: usize) -> i8 {
        self.signs[facet_index]
    }

    pub fn dim(&self) -> usize {
        self.base.dim()
    }

    pub fn num_vertices(&self) -> usize {
        self.base.num_vertices()
    }

    pub fn num_facets(&self) -> usize {
        self.base.num_facets()
    }

    pub fn facets(&self) -> &[Simplex] {
        self.base.facets()
    }

    /// Global orientation reversal.
    pub fn reversed(&self) -> OrientedComplex {
        Self { base: self.base.clone(), signs: self.signs.iter().map(|s| -s).collect() }
    }

    pub fn with_labels(self, labels: Vec<String>) -> Self {
        Self { base: self.base.with_labels(labels), signs: self.signs }
    }

    /// Facets sorted lexicographically; signs follow their facets.
    pub fn canonical(&self) -> OrientedComplex {
        let mut order: Vec<usize> = (0..self.num_facets()).collect();
        order.sort_by(|&a, &b| self.base.facets()[a].cmp(&self.base.facets()[b]));
        let facets = order.iter().map(|&i| self.base.facets()[i].clone()).collect();
        let signs = order.iter().map(|&i| self.signs[i]).collect();
        Self {
            base: SimplicialComplex::from_parts_unchecked(self.dim(), self.base.labels().to_vec(), facets),
            signs,
        }
    }

    /// Same complex and same sign on every facet; labels and facet order ignored.
    pub fn same_oriented(&self, other: &OrientedComplex) -> bool {
        if !self.base.same_complex(&other.base) {
            return false;
        }
        let a = self.canonical();
        let b = other.canonical();
        a.signs == b.signs
    }

    /// Coherence check over all ridges shared by exactly two facets.
    pub fn check_coherent(&self) -> Check {
        let incidence = self.base.ridge_incidence();
        let mut offending: Option<&Vec<VertexId>> = None;
        for (ridge, inc) in &incidence {
            if inc.len() != 2 {
                continue;
            }
            let induced = |(fi, pos): (usize, usize)| self.signs[fi] * if pos % 2 == 0 { 1 } else { -1 };
            if induced(inc[0]) == induced(inc[1]) && offending.is_none_or(|o| ridge < o) {
                offending = Some(ridge);
            }
        }
        match offending {
            Some(r) => Check::fail(format!("facets at ridge {} induce the same orientation", fmt_vertices(r))),
            None => Check::pass("coherent"),
        }
    }

    /// Sign of `facet` given as an ordered vertex tuple; `None` if it is not a facet.
    pub fn oriented_sign_of(&self, ordered: &[VertexId]) -> Option<i8> {
        let par = super::permutation_sign(ordered);
        if par == 0 {
            return None;
        }
        let mut sorted = ordered.to_vec();
        sorted.sort_unstable();
        let s = Simplex::from_sorted(sorted);
        self.base.facet_index(&s).map(|i| par * self.signs[i])
    }

    /// Central subdivision of one facet: the facet is replaced, in place, by
    /// the cone from a new last vertex over its boundary. Cone facets take the
    /// signs forced by their ridges with the rest of the complex. Points have
    /// no boundary to cone over, so dimension 0 is rejected.
    pub fn central_subdivision(&self, facet: &Simplex) -> Result<(OrientedComplex, VertexId)> {
        let idx = self
            .base
            .facet_index(facet)
            .ok_or_else(|| Error::FacetNotFound(facet.vertices().to_vec()))?;
        self.central_subdivision_at(idx)
    }

    pub fn central_subdivision_at(&self, idx: usize) -> Result<(OrientedComplex, VertexId)> {
        let n = self.dim();
        if n == 0 {
            return Err(Error::InvalidComplex("central subdivision needs dimension at least 1".into()));
        }
        if idx >= self.num_facets() {
            return Err(Error::InvalidComplex(format!("facet index {idx} out of range")));
        }
        let apex = self.num_vertices();
        let old = &self.base.facets()[idx];
        let s = self.signs[idx];
        let mut facets = Vec::with_capacity(self.num_facets() + n);
        let mut signs = Vec::with_capacity(self.num_facets() + n);
        facets.extend_from_slice(&self.base.facets()[..idx]);
        signs.extend_from_slice(&self.signs[..idx]);
        for pos in 0..old.len() {
            let mut v = old.omit(pos);
            v.push(apex);
            facets.push(Simplex::from_sorted(v));
            // the cone facet omits the apex (last position n) on this ridge
            let flip = if (pos + n).is_multiple_of(2) { 1 } else { -1 };
            signs.push(s * flip);
        }
        facets.extend_from_slice(&self.base.facets()[idx + 1..]);
        signs.extend_from_slice(&self.signs[idx + 1..]);
        let mut labels = self.base.labels().to_vec();
        labels.push(format!("z{apex}"));
        let base = SimplicialComplex::from_parts_unchecked(n, labels, facets);
        Ok((Self { base, signs }, apex))
    }
}

/// Join with the orientation product rule: the joined facet lists the first
/// factor's vertices before the second's, which is already sorted order after
/// re-indexing, so its sign is the product of the factor signs.
pub fn join_oriented(a: &OrientedComplex, b: &OrientedComplex) -> OrientedComplex {
    let base = a.base.join(&b.base);
    let mut signs = Vec::with_capacity(base.num_facets());
    for &sa in &a.signs {
        for &sb in &b.signs {
            signs.push(sa * sb);
        }
    }
    OrientedComplex { base, signs }
}

/// Boundary of the `(n+1)`-simplex on `c_0..c_{n+1}`; the facet omitting
/// `c_i` comes `i`-th and carries sign `(-1)^i`.
pub fn simplex_boundary(n: usize) -> OrientedComplex {
    let facets: Vec<Simplex> = (0..n + 2)
        .map(|i| Simplex::from_sorted((0..n + 2).filter(|&j| j != i).collect()))
        .collect();
    let signs = (0..n + 2).map(|i| if i % 2 == 0 { 1 } else { -1 }).collect();
    let labels = (0..n + 2).map(|i| format!("c{i}")).collect();
    OrientedComplex { base: SimplicialComplex::from_parts_unchecked(n, labels, facets), signs }
}

/// The m-gon, edges directed `i -> i+1 mod m`.
pub fn cycle(m: usize) -> Result<OrientedComplex> {
    if m < 3 {
        return Err(Error::CycleTooShort(m));
    }
    let mut facets = Vec::with_capacity(m);
    let mut signs = Vec::with_capacity(m);
    for i in 0..m {
        let j = (i + 1) % m;
        facets.push(Simplex::from_sorted(vec![i.min(j), i.max(j)]));
        signs.push(if i < j { 1 } else { -1 });
    }
    let labels = (0..m).map(|i| format!("v{i}")).collect();
    Ok(OrientedComplex { base: SimplicialComplex::from_parts_unchecked(1, labels, facets), signs })
}

/// Coherent orientation by breadth-first flipping across ridges; the first
/// stored facet gets `+1`.
pub fn orient(k: &SimplicialComplex) -> Result<OrientedComplex> {
    let pm = k.is_closed_pseudomanifold();
    if !pm.passed {
        return Err(Error::NotPseudomanifold(pm.detail));
    }
    let incidence = k.ridge_incidence();
    // per facet: (ridge position, neighbour facet, neighbour's position)
    let mut adj: Vec<Vec<(usize, usize, usize)>> = vec![Vec::with_capacity(k.dim() + 1); k.num_facets()];
    for inc in incidence.values() {
        let (fa, pa) = inc[0];
        let (fb, pb) = inc[1];
        adj[fa].push((pa, fb, pb));
        adj[fb].push((pb, fa, pa));
    }
    let mut signs = vec![0i8; k.num_facets()];
    signs[0] = 1;
    let mut queue = VecDeque::from([0usize]);
    while let Some(f) = queue.pop_front() {
        for &(pf, g, pg) in &adj[f] {
            let induced_f = signs[f] * parity(pf);
            let want = -induced_f * parity(pg);
            if signs[g] == 0 {
                signs[g] = want;
                queue.push_back(g);
            } else if signs[g] != want {
                let ridge = k.facets()[f].omit(pf);
                return Err(Error::NonOrientable(format!(
                    "orientation conflict across ridge {}",
                    fmt_vertices(&ridge)
                )));
            }
        }
    }
    Ok(OrientedComplex { base: k.clone(), signs })
}

fn parity(pos: usize) -> i8 {
    if pos.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(v: &[usize]) -> Simplex {
        Simplex::new(v.to_vec()).unwrap()
    }

    /// The 6-vertex real projective plane.
    pub(crate) fn rp2() -> SimplicialComplex {
        let f = [
            [0, 1, 2],
            [0, 2, 3],
            [0, 3, 4],
            [0, 4, 5],
            [0, 1, 5],
            [1, 2, 4],
            [2, 3, 5],
            [1, 3, 4],
            [1, 3, 5],
            [2, 4, 5],
        ];
        SimplicialComplex::from_facets(2, 6, f.iter().map(|x| s(x)).collect()).unwrap()
    }

    #[test]
    fn simplex_boundary_basics() {
        let b3 = simplex_boundary(3);
        assert_eq!(b3.num_vertices(), 5);
        assert_eq!(b3.num_facets(), 5);
        assert_eq!(b3.base().f_vector().to_u64s().unwrap(), vec![5, 10, 10, 5]);
        assert!(b3.check_coherent().passed);
        let b0 = simplex_boundary(0);
        assert_eq!(b0.num_vertices(), 2);
        assert_eq!(b0.signs(), &[1, -1]);
        assert_eq!(simplex_boundary(2).base().euler_characteristic(), 2);
        assert_eq!(simplex_boundary(3).base().euler_characteristic(), 0);
    }

    #[test]
    fn cycles() {
        assert_eq!(cycle(3).unwrap().base().f_vector().to_u64s().unwrap(), vec![3, 3]);
        let c9 = cycle(9).unwrap();
        assert_eq!((c9.num_vertices(), c9.num_facets()), (9, 9));
        assert_eq!(c9.base().euler_characteristic(), 0);
        assert!(c9.check_coherent().passed);
        assert!(matches!(cycle(2), Err(Error::CycleTooShort(2))));
        // the 3-cycle and the boundary of a triangle agree, signs included
        assert!(cycle(3).unwrap().same_oriented(&simplex_boundary(1)));
    }

    #[test]
    fn orient_reproduces_boundary_pattern() {
        for n in 0..5 {
            let b = simplex_boundary(n);
            let o = orient(b.base()).unwrap();
            let flip = o.sign(0) * b.sign(0);
            assert!(o.signs().iter().zip(b.signs()).all(|(x, y)| *x == flip * *y));
        }
    }

    #[test]
    fn orient_join_and_reorient() {
        let k = cycle(3).unwrap().base().join(cycle(4).unwrap().base());
        let o = orient(&k).unwrap();
        assert!(o.check_coherent().passed);
        assert_eq!(o.sign(0), 1);
        let again = orient(o.base()).unwrap();
        assert_eq!(again.signs(), o.signs());
    }

    #[test]
    fn rp2_is_rejected() {
        let k = rp2();
        assert!(k.is_closed_pseudomanifold().passed);
        assert_eq!(k.euler_characteristic(), 1);
        assert!(matches!(orient(&k), Err(Error::NonOrientable(_))));
    }

    #[test]
    fn orient_requires_closed() {
        assert!(matches!(orient(&super::super::single_simplex(2)), Err(Error::NotPseudomanifold(_))));
    }

    #[test]
    fn join_oriented_is_coherent() {
        let j = join_oriented(&cycle(3).unwrap(), &cycle(3).unwrap());
        assert_eq!(j.num_facets(), 9);
        assert_eq!(j.base().f_vector().to_u64s().unwrap(), vec![6, 15, 18, 9]);
        assert!(j.check_coherent().passed);
        let j2 = join_oriented(&simplex_boundary(2), &simplex_boundary(0));
        assert!(j2.check_coherent().passed);
    }

    #[test]
    fn subdivision_counts() {
        let b2 = simplex_boundary(2);
        let (sub, apex) = b2.central_subdivision(&b2.facets()[1].clone()).unwrap();
        assert_eq!(apex, 4);
        assert_eq!((sub.num_vertices(), sub.num_facets()), (5, 6));
        assert!(sub.check_coherent().passed);
        assert_eq!(sub.base().euler_characteristic(), 2);
        let b3 = simplex_boundary(3);
        let (sub3, _) = b3.central_subdivision(&b3.facets()[0].clone()).unwrap();
        assert_eq!((sub3.num_vertices(), sub3.num_facets()), (6, 8));
        assert!(sub3.check_coherent().passed);
        assert!(matches!(
            b3.central_subdivision(&s(&[0, 1, 2, 9])),
            Err(Error::FacetNotFound(_))
        ));
        let s0 = simplex_boundary(0);
        assert!(s0.central_subdivision(&s(&[1])).is_err());
    }

    #[test]
    fn bad_signs_rejected() {
        let c = cycle(4).unwrap();
        let mut signs = c.signs().to_vec();
        signs[1] = -signs[1];
        assert!(matches!(OrientedComplex::new(c.base().clone(), signs), Err(Error::NonOrientable(_))));
        assert!(OrientedComplex::new(c.base().clone(), vec![1, 1]).is_err());
    }
}
