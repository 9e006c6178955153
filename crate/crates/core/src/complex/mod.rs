//! Pure simplicial complexes stored by their facets.
//!
//! Lower-dimensional faces are derived on demand. Vertex ids are dense and
//! 0-based; labels are carried along for provenance only and never take part
//! in equality checks.

mod fvector;
mod orientation;
mod simplex;

use std::collections::{BTreeSet, HashMap, HashSet};

pub use fvector::{f_polynomial_product, FVector};
pub use orientation::{cycle, join_oriented, orient, simplex_boundary, OrientedComplex};
pub use simplex::{permutation_sign, Simplex, VertexId};
pub(crate) use simplex::for_each_subset;

use crate::error::{Error, Result};

/// Outcome of a structural check: `passed` plus a human-readable reason.
#[derive(Clone, Debug, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
pub struct Check {
    pub passed: bool,
    pub detail: String,
}

impl Check {
    pub fn pass(detail: impl Into<String>) -> Self {
        Self { passed: true, detail: detail.into() }
    }

    pub fn fail(detail: impl Into<String>) -> Self {
        Self { passed: false, detail: detail.into() }
    }
}

#[derive(Clone, Debug)]
pub struct SimplicialComplex {
    dim: usize,
    labels: Vec<String>,
    facets: Vec<Simplex>,
}

impl SimplicialComplex {
    /// Builds a pure complex; every listed vertex must occur in some facet.
    pub fn new(dim: usize, labels: Vec<String>, facets: Vec<Simplex>) -> Result<Self> {
        let n = labels.len();
        let mut seen = HashSet::with_capacity(facets.len());
        let mut used = vec![false; n];
        for f in &facets {
            if f.len() != dim + 1 {
                return Err(Error::InvalidComplex(format!(
                    "facet {f} has {} vertices, expected {}",
                    f.len(),
                    dim + 1
                )));
            }
            for &v in f.vertices() {
                if v >= n {
                    return Err(Error::InvalidComplex(format!(
                        "facet {f} uses vertex {v} but the complex has {n} vertices"
                    )));
                }
                used[v] = true;
            }
            if !seen.insert(f) {
                return Err(Error::InvalidComplex(format!("facet {f} listed twice")));
            }
        }
        if let Some(v) = used.iter().position(|u| !u) {
            return Err(Error::InvalidComplex(format!("vertex {v} lies in no facet")));
        }
        Ok(Self { dim, labels, facets })
    }

    /// Same as [`SimplicialComplex::new`] with labels `v0, v1, ...`.
    pub fn from_facets(dim: usize, num_vertices: usize, facets: Vec<Simplex>) -> Result<Self> {
        let labels = (0..num_vertices).map(|i| format!("v{i}")).collect();
        Self::new(dim, labels, facets)
    }

    pub(crate) fn from_parts_unchecked(dim: usize, labels: Vec<String>, facets: Vec<Simplex>) -> Self {
        Self { dim, labels, facets }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn num_vertices(&self) -> usize {
        self.labels.len()
    }

    pub fn num_facets(&self) -> usize {
        self.facets.len()
    }

    pub fn facets(&self) -> &[Simplex] {
        &self.facets
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, v: VertexId) -> &str {
        &self.labels[v]
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Self {
        assert_eq!(labels.len(), self.labels.len());
        self.labels = labels;
        self
    }

    pub fn facet_index(&self, facet: &Simplex) -> Option<usize> {
        self.facets.iter().position(|f| f == facet)
    }

    /// Facet list in lexicographic order.
    pub fn canonical(&self) -> SimplicialComplex {
        let mut facets = self.facets.clone();
        facets.sort();
        Self { dim: self.dim, labels: self.labels.clone(), facets }
    }

    /// Equality of the underlying complexes, ignoring facet order and labels.
    pub fn same_complex(&self, other: &SimplicialComplex) -> bool {
        if self.dim != other.dim
            || self.num_vertices() != other.num_vertices()
            || self.num_facets() != other.num_facets()
        {
            return false;
        }
        let mut a: Vec<&Simplex> = self.facets.iter().collect();
        let mut b: Vec<&Simplex> = other.facets.iter().collect();
        a.sort();
        b.sort();
        a == b
    }

    /// All `k`-faces, deduplicated, in lexicographic order.
    pub fn faces(&self, k: usize) -> Result<Vec<Simplex>> {
        if k > self.dim {
            return Err(Error::DimensionOutOfRange { k, dim: self.dim });
        }
        if k == self.dim {
            let mut out = self.facets.clone();
            out.sort();
            return Ok(out);
        }
        let mut set: BTreeSet<Vec<VertexId>> = BTreeSet::new();
        for f in &self.facets {
            for_each_subset(f.vertices(), k + 1, |s| {
                if !set.contains(s) {
                    set.insert(s.to_vec());
                }
            });
        }
        Ok(set.into_iter().map(Simplex::from_sorted).collect())
    }

    /// f-vector by full face enumeration.
    pub fn f_vector(&self) -> FVector {
        let counts: Vec<u64> = (0..=self.dim)
            .map(|k| if k == self.dim { self.facets.len() } else { self.count_faces(k) } as u64)
            .collect();
        FVector::from_u64s(&counts)
    }

    fn count_faces(&self, k: usize) -> usize {
        let mut set: HashSet<Vec<VertexId>> = HashSet::new();
        for f in &self.facets {
            for_each_subset(f.vertices(), k + 1, |s| {
                if !set.contains(s) {
                    set.insert(s.to_vec());
                }
            });
        }
        set.len()
    }

    pub fn euler_characteristic(&self) -> i64 {
        (0..=self.dim)
            .map(|k| {
                let c = if k == self.dim { self.facets.len() } else { self.count_faces(k) } as i64;
                if k % 2 == 0 {
                    c
                } else {
                    -c
                }
            })
            .sum()
    }

    /// For every ridge, the facets containing it together with the position of
    /// the omitted vertex inside each facet.
    pub(crate) fn ridge_incidence(&self) -> HashMap<Vec<VertexId>, Vec<(usize, usize)>> {
        let mut map: HashMap<Vec<VertexId>, Vec<(usize, usize)>> =
            HashMap::with_capacity(self.facets.len() * (self.dim + 1) / 2 + 1);
        for (fi, f) in self.facets.iter().enumerate() {
            for pos in 0..f.len() {
                map.entry(f.omit(pos)).or_default().push((fi, pos));
            }
        }
        map
    }

    /// Every ridge in exactly two facets and a connected facet adjacency graph.
    pub fn is_closed_pseudomanifold(&self) -> Check {
        if self.facets.is_empty() {
            return Check::fail("complex has no facets");
        }
        let incidence = self.ridge_incidence();
        let mut bad: Vec<(&Vec<VertexId>, usize)> =
            incidence.iter().filter(|(_, v)| v.len() != 2).map(|(r, v)| (r, v.len())).collect();
        if !bad.is_empty() {
            bad.sort();
            let (ridge, count) = bad[0];
            return Check::fail(format!(
                "ridge {} lies in {count} facet(s); {} ridge(s) violate the two-facet rule",
                fmt_vertices(ridge),
                bad.len()
            ));
        }
        let mut uf = UnionFind::new(self.facets.len());
        for v in incidence.values() {
            uf.union(v[0].0, v[1].0);
        }
        let components = uf.components();
        if components != 1 {
            return Check::fail(format!("facet adjacency graph has {components} components"));
        }
        Check::pass(format!(
            "{} facets, {} ridges, all ridges in exactly two facets, connected",
            self.facets.len(),
            incidence.len()
        ))
    }

    /// Disjoint union of vertex sets with `other` re-indexed after `self`.
    pub fn join(&self, other: &SimplicialComplex) -> SimplicialComplex {
        let offset = self.num_vertices();
        let mut labels = self.labels.clone();
        labels.extend(other.labels.iter().cloned());
        let mut facets = Vec::with_capacity(self.facets.len() * other.facets.len());
        for a in &self.facets {
            for b in &other.facets {
                let mut v = Vec::with_capacity(a.len() + b.len());
                v.extend_from_slice(a.vertices());
                v.extend(b.vertices().iter().map(|&x| x + offset));
                facets.push(Simplex::from_sorted(v));
            }
        }
        SimplicialComplex { dim: self.dim + other.dim + 1, labels, facets }
    }

    /// Link of `v`: facets through `v` with `v` removed, vertices renumbered
    /// densely in increasing order of their original ids. Also returns the
    /// original id of every link vertex.
    pub fn vertex_link(&self, v: VertexId) -> Result<(SimplicialComplex, Vec<VertexId>)> {
        if v >= self.num_vertices() {
            return Err(Error::InvalidComplex(format!("vertex {v} out of range")));
        }
        if self.dim == 0 {
            return Err(Error::InvalidComplex("links of a 0-dimensional complex are empty".into()));
        }
        let star: Vec<&Simplex> = self.facets.iter().filter(|f| f.contains(v)).collect();
        let mut verts: Vec<VertexId> =
            star.iter().flat_map(|f| f.vertices().iter().copied()).filter(|&x| x != v).collect();
        verts.sort_unstable();
        verts.dedup();
        let index: HashMap<VertexId, usize> = verts.iter().enumerate().map(|(i, &x)| (x, i)).collect();
        let facets = star
            .iter()
            .map(|f| {
                let pos = f.position(v).expect("star facet contains v");
                Simplex::from_sorted(f.omit(pos).iter().map(|x| index[x]).collect())
            })
            .collect();
        let labels = verts.iter().map(|&x| self.labels[x].clone()).collect();
        Ok((SimplicialComplex { dim: self.dim - 1, labels, facets }, verts))
    }
}

/// One `dim`-simplex with all of its faces; has boundary, so it is not closed.
pub fn single_simplex(dim: usize) -> SimplicialComplex {
    SimplicialComplex::from_facets(dim, dim + 1, vec![Simplex::from_sorted((0..=dim).collect())])
        .expect("a single simplex is a valid complex")
}

pub(crate) fn fmt_vertices(v: &[VertexId]) -> String {
    let parts: Vec<String> = v.iter().map(|x| x.to_string()).collect();
    format!("[{}]", parts.join(" "))
}

struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        Self { parent: (0..n).collect() }
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.parent[ra.max(rb)] = ra.min(rb);
        }
    }

    fn components(&mut self) -> usize {
        (0..self.parent.len()).filter(|&i| self.find(i) == i).count()
    }
}
