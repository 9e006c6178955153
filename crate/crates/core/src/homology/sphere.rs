use serde::{Deserialize, Serialize};

use super::homology;
use crate::complex::{orient, SimplicialComplex};

/// Checks on one complex of the link tree.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EvidenceEntry {
    /// `"K"` for the complex itself, `"K/lk(3)/lk(7)"` for iterated links
    /// (vertex ids of the respective parent complex).
    pub path: String,
    pub dim: usize,
    pub pseudomanifold: bool,
    pub orientable: bool,
    pub homology_sphere: bool,
    pub detail: String,
}

impl EvidenceEntry {
    pub fn passed(&self) -> bool {
        self.pseudomanifold && self.orientable && self.homology_sphere
    }
}

/// Pseudomanifold, orientability and sphere homology for a complex and for
/// its iterated vertex links down to `depth`. This is evidence, not a
/// recognition algorithm.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SphereEvidence {
    pub depth: usize,
    pub checked: usize,
    pub failures: Vec<EvidenceEntry>,
}

impl SphereEvidence {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

pub fn verify_sphere_evidence(k: &SimplicialComplex, depth: usize) -> SphereEvidence {
    let mut out = SphereEvidence { depth, checked: 0, failures: Vec::new() };
    visit(k, "K".to_string(), depth, &mut out);
    out
}

fn visit(k: &SimplicialComplex, path: String, depth: usize, out: &mut SphereEvidence) {
    let entry = check_one(k, path.clone());
    out.checked += 1;
    let ok = entry.passed();
    if !ok {
        out.failures.push(entry);
    }
    if depth == 0 || k.dim() == 0 {
        return;
    }
    for v in 0..k.num_vertices() {
        match k.vertex_link(v) {
            Ok((link, _)) => visit(&link, format!("{path}/lk({v})"), depth - 1, out),
            Err(e) => out.failures.push(EvidenceEntry {
                path: format!("{path}/lk({v})"),
                dim: k.dim() - 1,
                pseudomanifold: false,
                orientable: false,
                homology_sphere: false,
                detail: e.to_string(),
            }),
        }
    }
}

fn check_one(k: &SimplicialComplex, path: String) -> EvidenceEntry {
    let pm = k.is_closed_pseudomanifold();
    let (orientable, odetail) = if pm.passed {
        match orient(k) {
            Ok(_) => (true, String::new()),
            Err(e) => (false, e.to_string()),
        }
    } else {
        (false, "skipped".into())
    };
    let h = homology(k);
    let sphere = h.is_sphere();
    let detail = if pm.passed && orientable && sphere {
        format!("homology {h}")
    } else {
        format!("pseudomanifold: {}; orientation: {odetail}; homology {h}", pm.detail)
    };
    EvidenceEntry {
        path,
        dim: k.dim(),
        pseudomanifold: pm.passed,
        orientable,
        homology_sphere: sphere,
        detail,
    }
}
