//! Constructors for spheres with maps of prescribed degree onto the boundary
//! of a simplex, each returned with a certificate.

mod fvector_sphere;
mod planner;
mod shift;
mod tree;

pub use fvector_sphere::{
    fvector_sphere, fvector_sphere_with_budget, FVectorReport, FVectorSphere, RatioEntry, FACET_BUDGET,
};
pub use planner::{base_map, construct, multi_circle_map, paper_bound};
pub use shift::degree_shift;
pub use tree::{ConstructionTree, JoinTree};

use serde::{Deserialize, Serialize};

use crate::complex::{Check, Simplex, VertexId};
use crate::error::{Error, Result};
use crate::homology::{degree_via_homology, homology, verify_sphere_evidence, HomologyGroups, SphereEvidence};
use crate::map::{degree, SimplicialMap};

/// Largest source complex on which homology and link evidence are computed.
pub const HOMOLOGY_FACET_CAP: usize = 20_000;

/// One step of how a construction was put together.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "step", rename_all = "snake_case")]
pub enum ConstructionStep {
    /// Degree-0 or degree-±1 map on the boundary of the simplex itself.
    Seed { map: String },
    /// Cycle factors `k_i`; the cycles have `3 k_i` vertices.
    Factors { factors: Vec<usize> },
    /// Join with the identity on a simplex boundary of this dimension.
    Pad { dim: usize },
    Collapse { k: usize, m: usize, swap: Option<(VertexId, VertexId)> },
    /// Orientation reversal of the first cycle factor.
    Reflect { cycle_len: usize },
    Transposition { a: VertexId, b: VertexId },
    /// Central subdivision of `facet` (sign before subdivision) with the new
    /// vertex `apex` sent to `image`.
    Subdivide { facet: Simplex, sign: i8, apex: VertexId, image: VertexId },
    /// A requested ±1 degree change, realized by the following subdivisions.
    Shift { delta: i8, cost: usize },
    Note { text: String },
}

/// Checks run on the map and its source.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CertificateChecks {
    pub map_valid: Check,
    pub pseudomanifold: Check,
    pub orientation: Check,
    pub tree_consistent: Check,
    /// `None` when the source exceeds [`HOMOLOGY_FACET_CAP`].
    pub homology: Option<HomologyGroups>,
    pub sphere_evidence: Option<SphereEvidence>,
}

/// A map together with everything needed to audit it.
#[derive(Clone, Debug)]
pub struct CertifiedConstruction {
    pub map: SimplicialMap,
    pub source_tree: ConstructionTree,
    pub n: usize,
    pub d: i64,
    pub vertex_count: usize,
    pub paper_bound: usize,
    pub degree_signed: i64,
    /// Every target facet has the same signed preimage count.
    pub degree_consistent: bool,
    pub degree_homology: Option<i64>,
    pub checks: CertificateChecks,
    pub construction_log: Vec<ConstructionStep>,
    pub verified: bool,
}

impl CertifiedConstruction {
    /// Vertex count over `|d|`; `None` for `d = 0`.
    pub fn ratio(&self) -> Option<f64> {
        (self.d != 0).then(|| self.vertex_count as f64 / self.d.unsigned_abs() as f64)
    }

    pub fn homology_checked(&self) -> bool {
        self.degree_homology.is_some()
    }
}

/// Runs every check on `map` and packages the result. Checks that fail are
/// recorded and clear `verified`; only malformed input is an error.
pub fn certify(
    map: SimplicialMap,
    source_tree: ConstructionTree,
    d: i64,
    paper_bound: usize,
    construction_log: Vec<ConstructionStep>,
) -> Result<CertifiedConstruction> {
    let n = map.source().dim();
    let map_valid = map.validate();
    if !map_valid.passed {
        return Err(Error::InvalidMap(map_valid.detail));
    }
    let report = degree(&map)?;
    let source = map.source().base();
    let pseudomanifold = source.is_closed_pseudomanifold();
    let orientation = map.source().check_coherent();
    let tree_consistent = if source_tree.num_vertices() != source.num_vertices() {
        Check::fail(format!(
            "tree has {} vertices, complex has {}",
            source_tree.num_vertices(),
            source.num_vertices()
        ))
    } else if source_tree.num_facets() != num_bigint::BigUint::from(source.num_facets()) {
        Check::fail(format!(
            "tree has {} facets, complex has {}",
            source_tree.num_facets(),
            source.num_facets()
        ))
    } else {
        Check::pass("vertex and facet counts agree with the construction tree")
    };
    let small = source.num_facets() <= HOMOLOGY_FACET_CAP;
    let (degree_homology, hom, evidence) = if small && pseudomanifold.passed && orientation.passed {
        (Some(degree_via_homology(&map)?), Some(homology(source)), Some(verify_sphere_evidence(source, 1)))
    } else {
        (None, None, None)
    };
    let vertex_count = source.num_vertices();
    let verified = pseudomanifold.passed
        && orientation.passed
        && tree_consistent.passed
        && report.consistent
        && report.degree == d
        && degree_homology.is_none_or(|h| h == d)
        && hom.as_ref().is_none_or(HomologyGroups::is_sphere)
        && evidence.as_ref().is_none_or(SphereEvidence::passed)
        && vertex_count <= paper_bound;
    Ok(CertifiedConstruction {
        n,
        d,
        vertex_count,
        paper_bound,
        degree_signed: report.degree,
        degree_consistent: report.consistent,
        degree_homology,
        checks: CertificateChecks {
            map_valid,
            pseudomanifold,
            orientation,
            tree_consistent,
            homology: hom,
            sphere_evidence: evidence,
        },
        construction_log,
        verified,
        map,
        source_tree,
    })
}
