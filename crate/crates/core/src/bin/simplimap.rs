use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use num_traits::ToPrimitive;

use simplimap::constructions::{construct, fvector_sphere, HOMOLOGY_FACET_CAP};
use simplimap::io::{
    detect_kind, export_facets, to_json, to_json_pretty, verify_certificate, verify_complex, verify_map,
    CertificateFile, CheckRow, ComplexFile, FVectorReportFile, FileKind, MapFile, RealizationFile, VerifyOptions,
    VerifyReport,
};
use simplimap::rational::{format_rational, parse_rational};
use simplimap::realization::{realize_construction, verify_polytope};
use simplimap::Error;

// stdout may be a closed pipe (`| head`); output errors are not failures
macro_rules! out {
    ($($t:tt)*) => {{
        use std::io::Write as _;
        let _ = write!(std::io::stdout(), $($t)*);
    }};
}

macro_rules! outln {
    ($($t:tt)*) => {{
        use std::io::Write as _;
        let _ = writeln!(std::io::stdout(), $($t)*);
    }};
}

const EXIT_USAGE: u8 = 2;
const EXIT_VERIFY: u8 = 3;
const EXIT_IO: u8 = 4;

#[derive(Parser)]
#[command(name = "simplimap", version, about = "Spheres with simplicial maps of prescribed degree, with certificates")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build a degree-d map from an n-sphere onto the boundary of the (n+1)-simplex.
    Construct {
        #[arg(long)]
        dim: usize,
        #[arg(long, allow_negative_numbers = true)]
        degree: i64,
        #[arg(long, default_value = "map.json")]
        out: PathBuf,
        /// Also write and check an exact polytope realization of the source.
        #[arg(long)]
        realize: bool,
    },
    /// Sphere whose f-vector ratios f_j/f_i all exceed the given threshold.
    Fvector {
        #[arg(long)]
        dim: usize,
        /// Rational threshold, e.g. 100, 5/2 or 0.75.
        #[arg(long)]
        ratio: String,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Check a map, complex, certificate or f-vector report file.
    Verify {
        file: PathBuf,
        #[arg(long)]
        homology: bool,
        #[arg(long, default_value_t = 0)]
        links: usize,
        #[arg(long)]
        realization: Option<PathBuf>,
    },
    /// Write a complex in a plain interchange format.
    Export {
        #[arg(long, value_enum)]
        format: ExportFormat,
        file: PathBuf,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum ExportFormat {
    Facets,
}

struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn usage(message: impl Into<String>) -> Self {
        Self { code: EXIT_USAGE, message: message.into() }
    }

    fn verify(message: impl Into<String>) -> Self {
        Self { code: EXIT_VERIFY, message: message.into() }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::Io(_) => EXIT_IO,
            Error::Json(_) | Error::Format(_) => EXIT_USAGE,
            _ => EXIT_VERIFY,
        };
        Self { code, message: e.to_string() }
    }
}

type Outcome = Result<(), Failure>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Construct { dim, degree, out, realize } => cmd_construct(dim, degree, &out, realize),
        Command::Fvector { dim, ratio, out } => cmd_fvector(dim, &ratio, out.as_deref()),
        Command::Verify { file, homology, links, realization } => {
            cmd_verify(&file, homology, links, realization.as_deref())
        }
        Command::Export { format: ExportFormat::Facets, file } => cmd_export(&file),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}

fn write(path: &Path, text: &str) -> Outcome {
    fs::write(path, text).map_err(|e| Failure { code: EXIT_IO, message: format!("{}: {e}", path.display()) })
}

fn read(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| Failure { code: EXIT_IO, message: format!("{}: {e}", path.display()) })
}

/// `dir/stem.json` -> `dir/stem<suffix>`.
fn sibling(path: &Path, suffix: &str) -> PathBuf {
    let stem = path.file_stem().map_or_else(|| "out".into(), |s| s.to_string_lossy().into_owned());
    path.with_file_name(format!("{stem}{suffix}"))
}

fn file_name(path: &Path) -> String {
    path.file_name().map_or_else(String::new, |s| s.to_string_lossy().into_owned())
}

fn parent(path: &Path) -> &Path {
    path.parent().filter(|p| !p.as_os_str().is_empty()).unwrap_or(Path::new("."))
}

fn cmd_construct(n: usize, d: i64, out: &Path, realize: bool) -> Outcome {
    if n == 0 {
        return Err(Failure::usage("--dim must be at least 1"));
    }
    let c = construct(n, d)?;
    let mut cert = CertificateFile::from_construction(&c, Some(file_name(out)));
    write(out, &to_json(&MapFile::from_map(&c.map, Some(&c.source_tree)))?)?;
    let mut realized_ok = true;
    if realize {
        if c.map.source().num_facets() > HOMOLOGY_FACET_CAP {
            outln!("realization skipped: source has more than {HOMOLOGY_FACET_CAP} facets");
        } else {
            let coords = sibling(out, ".coords.json");
            let r = realize_construction(&c.source_tree)?;
            realized_ok = match verify_polytope(&r, c.map.source().base()) {
                Ok(s) => {
                    outln!("realization: {} facets supported in dimension {}", s.facets.len(), r.ambient_dim);
                    true
                }
                Err(e) => {
                    outln!("realization: FAIL {e}");
                    false
                }
            };
            write(&coords, &to_json(&RealizationFile::new(&r))?)?;
            cert.realization_file = Some(file_name(&coords));
            cert.realization_verified = Some(realized_ok);
        }
    }
    let cert_path = sibling(out, ".cert.json");
    write(&cert_path, &to_json_pretty(&cert)?)?;
    outln!("vertices: {}", c.vertex_count);
    outln!("guaranteed bound: {}", c.paper_bound);
    match c.degree_homology {
        Some(h) => outln!("degree: {} (signed count), {h} (homology)", c.degree_signed),
        None => outln!("degree: {} (signed count), homology skipped above {HOMOLOGY_FACET_CAP} facets", c.degree_signed),
    }
    match (&cert.achieved_ratio, c.ratio()) {
        (Some(q), Some(x)) => outln!("ratio: {q} = {x:.6}"),
        _ => outln!("ratio: undefined for degree 0"),
    }
    outln!("verified: {}", if c.verified && realized_ok { "yes" } else { "no" });
    outln!("wrote {} and {}", out.display(), cert_path.display());
    if c.verified && realized_ok {
        Ok(())
    } else {
        Err(Failure::verify("certificate did not verify"))
    }
}

fn cmd_fvector(n: usize, ratio: &str, out: Option<&Path>) -> Outcome {
    let c = parse_rational(ratio).map_err(|e| Failure::usage(e.to_string()))?;
    if n < 3 {
        return Err(Failure::usage("--dim must be at least 3"));
    }
    if c <= num_rational::BigRational::from_integer(0.into()) {
        return Err(Failure::usage("--ratio must be positive"));
    }
    let s = fvector_sphere(n, &c)?;
    let r = &s.report;
    outln!("h: {}", r.h);
    outln!("k: {}", r.k);
    if r.joined_with_s0 {
        outln!("joined with S0: yes");
    }
    outln!("f-vector: {}", r.fvec);
    let approx = r.min_ratio.to_f64().map_or_else(String::new, |x| format!(" = {x:.4}"));
    outln!("minimal ratio: {}{approx}", format_rational(&r.min_ratio));
    match out {
        Some(path) => {
            let file = match &s.complex {
                Some(k) => {
                    let mut f = ComplexFile::from_complex(k).with_construction(&s.tree);
                    f.f_vector = Some(r.fvec.clone());
                    f
                }
                None => ComplexFile::tree_only(&s.tree),
            };
            write(path, &to_json(&file)?)?;
            let report_path = sibling(path, ".report.json");
            let report = FVectorReportFile::new(r, Some(file_name(path)), s.complex.is_some());
            write(&report_path, &to_json_pretty(&report)?)?;
            if s.complex.is_none() {
                outln!("complex exceeds the facet budget; wrote its construction tree only");
            }
            outln!("wrote {} and {}", path.display(), report_path.display());
        }
        None => out!("{}", to_json_pretty(&FVectorReportFile::new(r, None, s.complex.is_some()))?),
    }
    Ok(())
}

fn load_failure(e: Error) -> Failure {
    let f = Failure::from(e);
    Failure { message: format!("cannot load input: {}", f.message), ..f }
}

fn cmd_verify(path: &Path, homology: bool, links: usize, realization: Option<&Path>) -> Outcome {
    let text = read(path)?;
    let kind = detect_kind(&text)?;
    let realization = match realization {
        Some(p) => {
            let rf: RealizationFile = serde_json::from_str(&read(p)?).map_err(Error::from)?;
            Some(rf.into_realization()?)
        }
        None => None,
    };
    let opts = VerifyOptions { homology, links, realization };
    let dir = parent(path);
    let report = match kind {
        FileKind::Map => {
            let mf: MapFile = serde_json::from_str(&text).map_err(Error::from)?;
            verify_map(&mf.to_map(Some(dir)).map_err(load_failure)?, &opts)
        }
        FileKind::Complex => {
            let cf: ComplexFile = serde_json::from_str(&text).map_err(Error::from)?;
            complex_report(&cf, &opts)?
        }
        FileKind::Certificate => {
            let cert: CertificateFile = serde_json::from_str(&text).map_err(Error::from)?;
            verify_certificate(&cert, dir, &opts).map_err(load_failure)?
        }
        FileKind::FVectorReport => {
            let rf: FVectorReportFile = serde_json::from_str(&text).map_err(Error::from)?;
            let again = fvector_sphere(rf.report.n, &rf.report.c)?;
            let mut rep = VerifyReport::default();
            let same = again.report == rf.report;
            let rows = &mut rep.rows;
            rows.push(CheckRow {
                name: "report reproduced".into(),
                passed: same,
                detail: format!("k = {}, minimal ratio {}", again.report.k, format_rational(&again.report.min_ratio)),
            });
            let above = rf.report.ratios.iter().all(|r| r.value > rf.report.c);
            rows.push(CheckRow {
                name: "ratios exceed threshold".into(),
                passed: above,
                detail: format!("{} ratios", rf.report.ratios.len()),
            });
            rep
        }
        FileKind::Realization => return Err(Failure::usage("pass realization files with --realization")),
    };
    out!("{}", report.table());
    if report.passed() {
        outln!("all checks passed");
        Ok(())
    } else {
        Err(Failure::verify("some checks failed"))
    }
}

fn complex_report(cf: &ComplexFile, opts: &VerifyOptions) -> Result<VerifyReport, Failure> {
    let k = cf.to_complex().map_err(load_failure)?;
    let signs = cf.orientation.as_deref().filter(|_| cf.facets.is_some());
    Ok(verify_complex(&k, signs, opts))
}

fn cmd_export(path: &Path) -> Outcome {
    let text = read(path)?;
    let k = match detect_kind(&text)? {
        FileKind::Complex => serde_json::from_str::<ComplexFile>(&text).map_err(Error::from)?.to_complex()?,
        FileKind::Map => {
            let mf: MapFile = serde_json::from_str(&text).map_err(Error::from)?;
            mf.to_map(Some(parent(path)))?.source().base().clone()
        }
        _ => return Err(Failure::usage("export needs a complex or map file")),
    };
    out!("{}", export_facets(&k));
    Ok(())
}
