use std::path::Path;

use serde::Serialize;

use super::{to_json_pretty, CertificateFile, MapFile};
use crate::complex::{orient, OrientedComplex, SimplicialComplex};
use crate::constructions::certify;
use crate::error::{Error, Result};
use crate::homology::{degree_via_homology, verify_sphere_evidence};
use crate::map::{degree, SimplicialMap};
use crate::realization::{verify_polytope, PolytopeRealization};

#[derive(Clone, Debug, Default)]
pub struct VerifyOptions {
    pub homology: bool,
    /// Link depth for sphere evidence; `0` checks the complex alone.
    pub links: usize,
    pub realization: Option<PolytopeRealization>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckRow {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct VerifyReport {
    pub rows: Vec<CheckRow>,
}

impl VerifyReport {
    fn push(&mut self, name: impl Into<String>, passed: bool, detail: impl Into<String>) {
        self.rows.push(CheckRow { name: name.into(), passed, detail: detail.into() });
    }

    pub fn passed(&self) -> bool {
        self.rows.iter().all(|r| r.passed)
    }

    pub fn table(&self) -> String {
        let width = self.rows.iter().map(|r| r.name.len()).max().unwrap_or(0);
        let mut out = String::new();
        for r in &self.rows {
            let mark = if r.passed { "pass" } else { "FAIL" };
            out.push_str(&format!("{:<width$}  {mark}  {}\n", r.name, r.detail));
        }
        out
    }
}

fn complex_rows(k: &SimplicialComplex, signs: Option<&[i8]>, opts: &VerifyOptions, out: &mut VerifyReport) {
    let pm = k.is_closed_pseudomanifold();
    out.push("closed pseudomanifold", pm.passed, pm.detail);
    match signs {
        Some(s) => match OrientedComplex::new(k.clone(), s.to_vec()) {
            Ok(_) => out.push("orientation", true, "stored orientation is coherent"),
            Err(e) => out.push("orientation", false, e.to_string()),
        },
        None => match orient(k) {
            Ok(_) => out.push("orientation", true, "orientable"),
            Err(e) => out.push("orientation", false, e.to_string()),
        },
    }
    let ev = verify_sphere_evidence(k, opts.links);
    let detail = match ev.failures.first() {
        None => format!("{} complexes checked", ev.checked),
        Some(f) => format!("{} of {} failed, first {}: {}", ev.failures.len(), ev.checked, f.path, f.detail),
    };
    out.push(format!("sphere evidence (depth {})", opts.links), ev.passed(), detail);
    if let Some(r) = &opts.realization {
        match verify_polytope(r, k) {
            Ok(c) => out.push("polytope realization", true, format!("{} facets supported", c.facets.len())),
            Err(e) => out.push("polytope realization", false, e.to_string()),
        }
    }
}

/// Checks a complex; with `signs` the stored orientation is tested for
/// coherence, without them the complex is oriented from scratch.
pub fn verify_complex(k: &SimplicialComplex, signs: Option<&[i8]>, opts: &VerifyOptions) -> VerifyReport {
    let mut out = VerifyReport::default();
    complex_rows(k, signs, opts, &mut out);
    out
}

pub fn verify_map(f: &SimplicialMap, opts: &VerifyOptions) -> VerifyReport {
    let mut out = VerifyReport::default();
    let v = f.validate();
    out.push("simplicial map", v.passed, v.detail);
    if !v.passed {
        return out;
    }
    let signed = match degree(f) {
        Ok(r) => {
            let detail = if r.consistent {
                format!("degree {} at all {} target facets", r.degree, r.per_target_facet.len())
            } else {
                let counts: Vec<String> = r.per_target_facet.iter().map(|c| c.signed().to_string()).collect();
                format!("counts differ between target facets: {}", counts.join(" "))
            };
            out.push("degree (signed count)", r.consistent, detail);
            Some(r.degree)
        }
        Err(e) => {
            out.push("degree (signed count)", false, e.to_string());
            None
        }
    };
    if opts.homology {
        match degree_via_homology(f) {
            Ok(h) => out.push(
                "degree (homology)",
                Some(h) == signed,
                format!("degree {h}"),
            ),
            Err(e) => out.push("degree (homology)", false, e.to_string()),
        }
    }
    complex_rows(f.source().base(), Some(f.source().signs()), opts, &mut out);
    out
}

/// Re-runs the construction checks on the referenced map and compares the
/// regenerated certificate with the stored one.
pub fn verify_certificate(cert: &CertificateFile, cert_dir: &Path, opts: &VerifyOptions) -> Result<VerifyReport> {
    cert.check_format()?;
    let name = cert
        .map_file
        .as_ref()
        .ok_or_else(|| Error::Format("certificate does not reference a map file".into()))?;
    let mf: MapFile = super::read_json(&cert_dir.join(name))?;
    let f = mf.to_map(Some(cert_dir))?;
    let opts = VerifyOptions { homology: opts.homology || cert.degree_homology.is_some(), ..opts.clone() };
    let mut out = verify_map(&f, &opts);
    let again = certify(f, cert.source_tree.clone(), cert.d, cert.paper_bound, cert.construction_log.clone())?;
    let mut regenerated = CertificateFile::from_construction(&again, cert.map_file.clone());
    regenerated.realization_file = cert.realization_file.clone();
    regenerated.realization_verified = cert.realization_verified;
    let same = to_json_pretty(&regenerated)? == to_json_pretty(cert)?;
    out.push(
        "certificate reproduced",
        same,
        if same {
            format!("degree {} on {} vertices", again.degree_signed, again.vertex_count)
        } else {
            "regenerated certificate differs from the stored one".to_string()
        },
    );
    out.push("certificate verified flag", cert.verified, format!("stored verified = {}", cert.verified));
    Ok(out)
}
