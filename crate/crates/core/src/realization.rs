//! Exact rational convex-polytope realizations with per-facet supporting
//! hyperplane certificates.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::complex::{fmt_vertices, SimplicialComplex, Simplex, VertexId};
use crate::constructions::{ConstructionTree, JoinTree};
use crate::error::{Error, Result};

type Q = BigRational;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolytopeRealization {
    pub ambient_dim: usize,
    #[serde(with = "crate::rational::matrix")]
    pub coordinates: Vec<Vec<BigRational>>,
}

impl PolytopeRealization {
    pub fn num_vertices(&self) -> usize {
        self.coordinates.len()
    }
}

/// Supporting hyperplane `⟨normal, x⟩ = 1` of one facet.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FacetNormal {
    pub facet: Simplex,
    #[serde(with = "crate::rational::vec")]
    pub normal: Vec<BigRational>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SupportCertificate {
    pub facets: Vec<FacetNormal>,
}

impl SupportCertificate {
    pub fn normal_of(&self, facet: &Simplex) -> Option<&[BigRational]> {
        self.facets.iter().find(|f| &f.facet == facet).map(|f| f.normal.as_slice())
    }
}

fn int(v: i64) -> Q {
    Q::from_integer(BigInt::from(v))
}

fn dot(a: &[Q], b: &[Q]) -> Q {
    a.iter().zip(b).fold(Q::zero(), |acc, (x, y)| acc + x * y)
}

/// Point of the unit circle for parameter index `j` of `k`, walking the
/// circle counterclockwise from `(1, 0)` as `s = 4j/k` runs over `[0, 4)`.
/// Each quarter of the circle takes a unit interval of `s`, mapped to a
/// tangent-half-angle parameter `t`.
fn circle_point(j: usize, k: usize) -> [Q; 2] {
    let s = Q::new(BigInt::from(4 * j), BigInt::from(k));
    let one = Q::one();
    let two = int(2);
    let t = if s <= one {
        Some(s)
    } else if s < two {
        Some((&two - &s).recip())
    } else if s == two {
        None
    } else if s <= int(3) {
        Some(-(&s - &two).recip())
    } else {
        Some(-(int(4) - &s))
    };
    match t {
        None => [-Q::one(), Q::zero()],
        Some(t) => {
            let t2 = &t * &t;
            let den = &one + &t2;
            [(&one - &t2) / &den, (&two * &t) / &den]
        }
    }
}

/// `k` rational points on the unit circle in the vertex order of `cycle(k)`.
pub fn realize_cycle(k: usize) -> Result<PolytopeRealization> {
    if k < 3 {
        return Err(Error::CycleTooShort(k));
    }
    let coordinates = (0..k).map(|j| circle_point(j, k).to_vec()).collect();
    Ok(PolytopeRealization { ambient_dim: 2, coordinates })
}

/// `e_1, …, e_{n+1}, -(1, …, 1)`, in the vertex order of `simplex_boundary(n)`.
pub fn realize_simplex_boundary(n: usize) -> PolytopeRealization {
    let d = n + 1;
    let mut coordinates: Vec<Vec<Q>> = (0..d)
        .map(|i| (0..d).map(|j| if i == j { Q::one() } else { Q::zero() }).collect())
        .collect();
    coordinates.push(vec![-Q::one(); d]);
    PolytopeRealization { ambient_dim: d, coordinates }
}

/// A-vertices at `(x, 0)`, B-vertices at `(0, y)`.
pub fn realize_join(a: &PolytopeRealization, b: &PolytopeRealization) -> PolytopeRealization {
    let dim = a.ambient_dim + b.ambient_dim;
    let mut coordinates = Vec::with_capacity(a.num_vertices() + b.num_vertices());
    for x in &a.coordinates {
        let mut p = x.clone();
        p.resize(dim, Q::zero());
        coordinates.push(p);
    }
    for y in &b.coordinates {
        let mut p = vec![Q::zero(); a.ambient_dim];
        p.extend(y.iter().cloned());
        coordinates.push(p);
    }
    PolytopeRealization { ambient_dim: dim, coordinates }
}

pub fn realize_join_tree(t: &JoinTree) -> Result<PolytopeRealization> {
    Ok(match t {
        JoinTree::Cycle { m } => realize_cycle(*m)?,
        JoinTree::SimplexBoundary { n } => realize_simplex_boundary(*n),
        JoinTree::Join { left, right } => realize_join(&realize_join_tree(left)?, &realize_join_tree(right)?),
    })
}

/// Realizes a construction tree: the join of standard polytopes, then for
/// each central subdivision a new point just beyond the subdivided facet and
/// beneath all others.
pub fn realize_construction(tree: &ConstructionTree) -> Result<PolytopeRealization> {
    let mut r = realize_join_tree(&tree.base)?;
    if tree.subdivisions.is_empty() {
        return Ok(r);
    }
    let mut k = tree.base.build()?;
    let mut normals: HashMap<Simplex, Vec<Q>> = verify_polytope(&r, k.base())?
        .facets
        .into_iter()
        .map(|f| (f.facet, f.normal))
        .collect();
    for facet in &tree.subdivisions {
        let nf = normals
            .remove(facet)
            .ok_or_else(|| Error::Realization(format!("facet {facet} is not a facet of the realization")))?;
        let p = beyond_point(&r, facet, &normals)?;
        let (next, apex) = k.central_subdivision(facet)?;
        r.coordinates.push(p);
        debug_assert_eq!(apex + 1, r.num_vertices());
        for pos in 0..facet.len() {
            let mut v = facet.omit(pos);
            v.push(apex);
            let cone = Simplex::new(v)?;
            let u = solve_normal(&r, &cone)?;
            normals.insert(cone, u);
        }
        drop(nf);
        k = next;
    }
    Ok(r)
}

/// `(1 + ε)` times the barycenter of `facet`, with `ε = 2^-m` small enough
/// that the point stays strictly beneath every other facet hyperplane.
fn beyond_point(r: &PolytopeRealization, facet: &Simplex, others: &HashMap<Simplex, Vec<Q>>) -> Result<Vec<Q>> {
    let dim = r.ambient_dim;
    let mut b = vec![Q::zero(); dim];
    for &v in facet.vertices() {
        for (bi, x) in b.iter_mut().zip(&r.coordinates[v]) {
            *bi += x;
        }
    }
    let len = int(facet.len() as i64);
    for bi in &mut b {
        *bi /= &len;
    }
    // sorted for a schedule-independent choice of ε
    let mut keys: Vec<&Simplex> = others.keys().collect();
    keys.sort();
    let mut limit: Option<Q> = None;
    for g in keys {
        let s = dot(&others[g], &b);
        if s >= Q::one() {
            return Err(Error::Realization(format!("barycenter of {facet} is not beneath facet {g}")));
        }
        if s.is_positive() {
            let l = s.recip() - Q::one();
            if limit.as_ref().is_none_or(|m| &l < m) {
                limit = Some(l);
            }
        }
    }
    let mut eps = Q::one();
    if let Some(l) = limit {
        while eps >= l {
            eps /= int(2);
        }
    }
    let scale = Q::one() + eps;
    Ok(b.into_iter().map(|x| x * &scale).collect())
}

/// Solves `⟨u, x_v⟩ = 1` for the vertices `v` of `facet`.
fn solve_normal(r: &PolytopeRealization, facet: &Simplex) -> Result<Vec<Q>> {
    let d = r.ambient_dim;
    if facet.len() != d {
        return Err(Error::Realization(format!(
            "facet {facet} has {} vertices in ambient dimension {d}",
            facet.len()
        )));
    }
    let mut a: Vec<Vec<Q>> = facet
        .vertices()
        .iter()
        .map(|&v| {
            let mut row = r.coordinates[v].clone();
            row.push(Q::one());
            row
        })
        .collect();
    for col in 0..d {
        let piv = (col..d).find(|&i| !a[i][col].is_zero()).ok_or_else(|| {
            Error::Realization(format!("facet {facet} spans no hyperplane missing the origin"))
        })?;
        a.swap(col, piv);
        let inv = a[col][col].recip();
        for x in a[col].iter_mut() {
            *x *= &inv;
        }
        let pivot_row = a[col].clone();
        for (i, row) in a.iter_mut().enumerate() {
            if i != col && !row[col].is_zero() {
                let f = row[col].clone();
                for (x, p) in row.iter_mut().zip(&pivot_row) {
                    *x -= &f * p;
                }
            }
        }
    }
    Ok(a.into_iter().map(|mut row| row.pop().expect("augmented column")).collect())
}

/// For every facet, the hyperplane through its vertices with all other
/// vertices strictly on the origin's side. Fails naming the first facet or
/// vertex that breaks this.
pub fn verify_polytope(r: &PolytopeRealization, k: &SimplicialComplex) -> Result<SupportCertificate> {
    if k.dim() + 1 != r.ambient_dim {
        return Err(Error::Realization(format!(
            "complex of dimension {} needs ambient dimension {}, got {}",
            k.dim(),
            k.dim() + 1,
            r.ambient_dim
        )));
    }
    if r.num_vertices() != k.num_vertices() {
        return Err(Error::Realization(format!(
            "{} points for {} vertices",
            r.num_vertices(),
            k.num_vertices()
        )));
    }
    if let Some((v, p)) = r.coordinates.iter().enumerate().find(|(_, p)| p.len() != r.ambient_dim) {
        return Err(Error::Realization(format!("vertex {v} has {} coordinates", p.len())));
    }
    let mut seen: HashMap<&[Q], VertexId> = HashMap::new();
    for (v, p) in r.coordinates.iter().enumerate() {
        if let Some(w) = seen.insert(p.as_slice(), v) {
            return Err(Error::Realization(format!("vertices {w} and {v} coincide")));
        }
    }
    let mut facets = Vec::with_capacity(k.num_facets());
    for f in k.facets() {
        let u = solve_normal(r, f)?;
        for (w, p) in r.coordinates.iter().enumerate() {
            if f.contains(w) {
                continue;
            }
            let s = dot(&u, p);
            if s >= Q::one() {
                return Err(Error::Realization(format!(
                    "vertex {w} lies on or beyond the hyperplane of facet {} (value {})",
                    fmt_vertices(f.vertices()),
                    crate::rational::format_rational(&s)
                )));
            }
        }
        facets.push(FacetNormal { facet: f.clone(), normal: u });
    }
    Ok(SupportCertificate { facets })
}
