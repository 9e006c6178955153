//! Versioned JSON formats for complexes, maps, certificates, f-vector reports
//! and realizations, plus the checks behind the `verify` command.
//!
//! Facets are written in lexicographic order; numbers are decimal integers or
//! `"p/q"` strings.

mod verify;

pub use verify::{verify_certificate, verify_complex, verify_map, CheckRow, VerifyOptions, VerifyReport};

use std::fs;
use std::path::{Path, PathBuf};

use num_bigint::BigInt;
use num_rational::BigRational;
use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};

use crate::complex::{orient, FVector, OrientedComplex, Simplex, SimplicialComplex, VertexId};
use crate::constructions::{
    CertificateChecks, CertifiedConstruction, ConstructionStep, ConstructionTree, FVectorReport,
};
use crate::error::{Error, Result};
use crate::map::SimplicialMap;
use crate::realization::PolytopeRealization;

pub const FORMAT_VERSION: u32 = 1;
pub const COMPLEX_FORMAT: &str = "simplimap-complex";
pub const MAP_FORMAT: &str = "simplimap-map";
pub const CERTIFICATE_FORMAT: &str = "simplimap-certificate";
pub const FVECTOR_FORMAT: &str = "simplimap-fvector-report";
pub const REALIZATION_FORMAT: &str = "simplimap-realization";

const DETERMINISM: &str = "no randomness, clocks or environment input; identical flags give identical files";

fn check_header(format: &str, version: u32, want: &str) -> Result<()> {
    if format != want {
        return Err(Error::Format(format!("expected format {want:?}, found {format:?}")));
    }
    if version != FORMAT_VERSION {
        return Err(Error::Format(format!("unsupported format_version {version}")));
    }
    Ok(())
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComplexFile {
    pub format: String,
    pub format_version: u32,
    pub dimension: usize,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub labels: Vec<String>,
    /// Omitted when the complex is only described by its construction.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub facets: Option<Vec<Vec<VertexId>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub orientation: Option<Vec<i8>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub construction: Option<ConstructionTree>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub f_vector: Option<FVector>,
}

impl ComplexFile {
    fn header(dimension: usize) -> Self {
        Self {
            format: COMPLEX_FORMAT.into(),
            format_version: FORMAT_VERSION,
            dimension,
            labels: Vec::new(),
            facets: None,
            orientation: None,
            construction: None,
            f_vector: None,
        }
    }

    pub fn from_complex(k: &SimplicialComplex) -> Self {
        let c = k.canonical();
        Self {
            labels: c.labels().to_vec(),
            facets: Some(c.facets().iter().map(|f| f.vertices().to_vec()).collect()),
            ..Self::header(k.dim())
        }
    }

    pub fn from_oriented(k: &OrientedComplex) -> Self {
        let c = k.canonical();
        Self { orientation: Some(c.signs().to_vec()), ..Self::from_complex(c.base()) }
    }

    /// Description by construction tree and f-vector only.
    pub fn tree_only(tree: &ConstructionTree) -> Self {
        Self { construction: Some(tree.clone()), f_vector: Some(tree.f_vector()), ..Self::header(tree.dim()) }
    }

    pub fn with_construction(mut self, tree: &ConstructionTree) -> Self {
        self.construction = Some(tree.clone());
        self
    }

    /// The complex, from its facet list or else by building its tree.
    pub fn to_complex(&self) -> Result<SimplicialComplex> {
        check_header(&self.format, self.format_version, COMPLEX_FORMAT)?;
        match (&self.facets, &self.construction) {
            (Some(facets), _) => {
                let facets = facets.iter().cloned().map(Simplex::new).collect::<Result<Vec<_>>>()?;
                if self.labels.is_empty() {
                    let nv = facets.iter().flat_map(|f| f.vertices().iter().copied()).max().map_or(0, |m| m + 1);
                    SimplicialComplex::from_facets(self.dimension, nv, facets)
                } else {
                    SimplicialComplex::new(self.dimension, self.labels.clone(), facets)
                }
            }
            (None, Some(tree)) => {
                let k = tree.build()?.into_base();
                if k.dim() != self.dimension {
                    return Err(Error::Format("construction dimension differs from the header".into()));
                }
                Ok(k)
            }
            (None, None) => Err(Error::Format("complex file has neither facets nor construction".into())),
        }
    }

    /// Stored orientation when present, otherwise a computed one.
    pub fn to_oriented(&self) -> Result<OrientedComplex> {
        let k = self.to_complex()?;
        match (&self.orientation, &self.facets) {
            (Some(signs), Some(_)) => OrientedComplex::new(k, signs.clone()),
            _ if self.facets.is_none() => Ok(self.construction.as_ref().expect("checked above").build()?),
            _ => orient(&k),
        }
    }
}

/// A complex given inline or by a path relative to the referring file.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum ComplexSource {
    File { file: String },
    Inline(Box<ComplexFile>),
}

impl ComplexSource {
    fn resolve(&self, base_dir: Option<&Path>) -> Result<OrientedComplex> {
        match self {
            ComplexSource::Inline(c) => c.to_oriented(),
            ComplexSource::File { file } => {
                let path = base_dir.map_or_else(|| PathBuf::from(file), |d| d.join(file));
                read_json::<ComplexFile>(&path)?.to_oriented()
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MapFile {
    pub format: String,
    pub format_version: u32,
    pub source: ComplexSource,
    pub target: ComplexSource,
    pub assignment: Vec<VertexId>,
}

impl MapFile {
    pub fn from_map(f: &SimplicialMap, source_tree: Option<&ConstructionTree>) -> Self {
        let mut source = ComplexFile::from_oriented(f.source());
        source.construction = source_tree.cloned();
        Self {
            format: MAP_FORMAT.into(),
            format_version: FORMAT_VERSION,
            source: ComplexSource::Inline(Box::new(source)),
            target: ComplexSource::Inline(Box::new(ComplexFile::from_oriented(f.target()))),
            assignment: f.assignment().to_vec(),
        }
    }

    /// `base_dir` resolves file references.
    pub fn to_map(&self, base_dir: Option<&Path>) -> Result<SimplicialMap> {
        check_header(&self.format, self.format_version, MAP_FORMAT)?;
        let source = self.source.resolve(base_dir)?;
        let target = self.target.resolve(base_dir)?;
        SimplicialMap::new(source, target, self.assignment.clone())
    }

    pub fn source_tree(&self) -> Option<&ConstructionTree> {
        match &self.source {
            ComplexSource::Inline(c) => c.construction.as_ref(),
            ComplexSource::File { .. } => None,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CertificateFile {
    pub format: String,
    pub format_version: u32,
    pub tool: String,
    pub tool_version: String,
    pub determinism: String,
    /// Map file, relative to the certificate.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub map_file: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub realization_file: Option<String>,
    pub n: usize,
    pub d: i64,
    pub vertex_count: usize,
    pub paper_bound: usize,
    /// `vertex_count / |d|`, absent for `d = 0`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub achieved_ratio: Option<String>,
    pub degree_signed: i64,
    pub degree_consistent: bool,
    pub degree_homology: Option<i64>,
    pub checks: CertificateChecks,
    pub construction_log: Vec<ConstructionStep>,
    pub source_tree: ConstructionTree,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub realization_verified: Option<bool>,
    pub verified: bool,
}

impl CertificateFile {
    pub fn from_construction(c: &CertifiedConstruction, map_file: Option<String>) -> Self {
        let achieved_ratio = (c.d != 0).then(|| {
            crate::rational::format_rational(&BigRational::new(
                BigInt::from(c.vertex_count),
                BigInt::from(c.d.unsigned_abs()),
            ))
        });
        Self {
            format: CERTIFICATE_FORMAT.into(),
            format_version: FORMAT_VERSION,
            tool: env!("CARGO_PKG_NAME").into(),
            tool_version: env!("CARGO_PKG_VERSION").into(),
            determinism: DETERMINISM.into(),
            map_file,
            realization_file: None,
            n: c.n,
            d: c.d,
            vertex_count: c.vertex_count,
            paper_bound: c.paper_bound,
            achieved_ratio,
            degree_signed: c.degree_signed,
            degree_consistent: c.degree_consistent,
            degree_homology: c.degree_homology,
            checks: c.checks.clone(),
            construction_log: c.construction_log.clone(),
            source_tree: c.source_tree.clone(),
            realization_verified: None,
            verified: c.verified,
        }
    }

    pub fn check_format(&self) -> Result<()> {
        check_header(&self.format, self.format_version, CERTIFICATE_FORMAT)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FVectorReportFile {
    pub format: String,
    pub format_version: u32,
    #[serde(flatten)]
    pub report: FVectorReport,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub complex_file: Option<String>,
    pub materialized: bool,
}

impl FVectorReportFile {
    pub fn new(report: &FVectorReport, complex_file: Option<String>, materialized: bool) -> Self {
        Self {
            format: FVECTOR_FORMAT.into(),
            format_version: FORMAT_VERSION,
            report: report.clone(),
            complex_file,
            materialized,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RealizationFile {
    pub format: String,
    pub format_version: u32,
    #[serde(flatten)]
    pub realization: PolytopeRealization,
}

impl RealizationFile {
    pub fn new(r: &PolytopeRealization) -> Self {
        Self { format: REALIZATION_FORMAT.into(), format_version: FORMAT_VERSION, realization: r.clone() }
    }

    pub fn into_realization(self) -> Result<PolytopeRealization> {
        check_header(&self.format, self.format_version, REALIZATION_FORMAT)?;
        Ok(self.realization)
    }
}

/// Kind of a JSON document, read from its `format` field.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FileKind {
    Complex,
    Map,
    Certificate,
    FVectorReport,
    Realization,
}

pub fn detect_kind(text: &str) -> Result<FileKind> {
    #[derive(Deserialize)]
    struct Header {
        format: String,
    }
    let h: Header = serde_json::from_str(text)?;
    Ok(match h.format.as_str() {
        COMPLEX_FORMAT => FileKind::Complex,
        MAP_FORMAT => FileKind::Map,
        CERTIFICATE_FORMAT => FileKind::Certificate,
        FVECTOR_FORMAT => FileKind::FVectorReport,
        REALIZATION_FORMAT => FileKind::Realization,
        other => return Err(Error::Format(format!("unknown format {other:?}"))),
    })
}

/// Compact JSON with a trailing newline.
pub fn to_json<T: Serialize>(v: &T) -> Result<String> {
    let mut s = serde_json::to_string(v)?;
    s.push('\n');
    Ok(s)
}

/// Indented JSON with a trailing newline.
pub fn to_json_pretty<T: Serialize>(v: &T) -> Result<String> {
    let mut s = serde_json::to_string_pretty(v)?;
    s.push('\n');
    Ok(s)
}

pub fn read_json<T: DeserializeOwned>(path: &Path) -> Result<T> {
    let text = fs::read_to_string(path)?;
    Ok(serde_json::from_str(&text)?)
}

/// Plain facet list: one facet per line, vertex ids separated by spaces, in
/// lexicographic order.
pub fn export_facets(k: &SimplicialComplex) -> String {
    let mut out = String::new();
    for f in k.canonical().facets() {
        let line: Vec<String> = f.vertices().iter().map(|v| v.to_string()).collect();
        out.push_str(&line.join(" "));
        out.push('\n');
    }
    out
}
