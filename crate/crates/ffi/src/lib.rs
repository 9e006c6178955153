//! C interface: opaque handles, status codes and a per-thread error message.
//!
//! Every function returns an [`SmStatus`]; results go through out-pointers.
//! Handles are released with the matching `*_free` function and strings
//! returned by the library with [`sm_string_free`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use simplimap::complex::SimplicialComplex;
use simplimap::constructions::{construct, CertifiedConstruction};
use simplimap::homology::{degree_via_homology, verify_sphere_evidence};
use simplimap::io::{export_facets, to_json, to_json_pretty, CertificateFile, ComplexFile, MapFile};
use simplimap::map::{degree, SimplicialMap};
use simplimap::Error;

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SmStatus {
    Ok = 0,
    NullArgument = 1,
    InvalidUtf8 = 2,
    Parse = 3,
    InvalidInput = 4,
    CheckFailed = 5,
    Internal = 6,
}

/// A certified construction.
pub struct SmConstruction(CertifiedConstruction);

/// A simplicial map between oriented complexes.
pub struct SmMap(SimplicialMap);

/// A pure simplicial complex.
pub struct SmComplex(SimplicialComplex);

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: impl Into<String>) {
    let msg = msg.into().replace('\0', " ");
    LAST_ERROR.with(|e| *e.borrow_mut() = CString::new(msg).ok());
}

fn status_of(e: &Error) -> SmStatus {
    match e {
        Error::Json(_) | Error::Format(_) => SmStatus::Parse,
        Error::Io(_) => SmStatus::Internal,
        _ => SmStatus::InvalidInput,
    }
}

fn guard(f: impl FnOnce() -> Result<(), SmStatus>) -> SmStatus {
    LAST_ERROR.with(|e| *e.borrow_mut() = None);
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => SmStatus::Ok,
        Ok(Err(s)) => s,
        Err(_) => {
            set_error("internal panic");
            SmStatus::Internal
        }
    }
}

fn fail(e: Error) -> SmStatus {
    set_error(e.to_string());
    status_of(&e)
}

unsafe fn str_arg<'a>(p: *const c_char) -> Result<&'a str, SmStatus> {
    if p.is_null() {
        set_error("null string argument");
        return Err(SmStatus::NullArgument);
    }
    CStr::from_ptr(p).to_str().map_err(|_| {
        set_error("argument is not valid UTF-8");
        SmStatus::InvalidUtf8
    })
}

unsafe fn handle<'a, T>(p: *const T) -> Result<&'a T, SmStatus> {
    p.as_ref().ok_or_else(|| {
        set_error("null handle");
        SmStatus::NullArgument
    })
}

unsafe fn put<T>(out: *mut T, v: T) -> Result<(), SmStatus> {
    if out.is_null() {
        set_error("null output pointer");
        return Err(SmStatus::NullArgument);
    }
    out.write(v);
    Ok(())
}

unsafe fn put_string(out: *mut *mut c_char, s: String) -> Result<(), SmStatus> {
    let c = CString::new(s).map_err(|_| {
        set_error("output contains a NUL byte");
        SmStatus::Internal
    })?;
    put(out, c.into_raw())
}

/// Library version as a static NUL-terminated string.
#[no_mangle]
pub extern "C" fn sm_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}

/// Message of the last failed call on this thread, or NULL. Valid until the
/// next library call on the same thread.
#[no_mangle]
pub extern "C" fn sm_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

/// # Safety
/// `s` must be NULL or a string returned by this library.
#[no_mangle]
pub unsafe extern "C" fn sm_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Builds and certifies a degree-`d` map from an `n`-sphere onto the boundary
/// of the `(n+1)`-simplex.
///
/// # Safety
/// `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn sm_construct(n: usize, d: i64, out: *mut *mut SmConstruction) -> SmStatus {
    guard(|| {
        let c = construct(n, d).map_err(fail)?;
        put(out, Box::into_raw(Box::new(SmConstruction(c))))
    })
}

/// # Safety
/// `c` must be NULL or a handle from [`sm_construct`], not used afterwards.
#[no_mangle]
pub unsafe extern "C" fn sm_construction_free(c: *mut SmConstruction) {
    if !c.is_null() {
        drop(Box::from_raw(c));
    }
}

/// # Safety
/// `c` must be a live construction handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn sm_construction_vertex_count(c: *const SmConstruction, out: *mut usize) -> SmStatus {
    guard(|| put(out, handle(c)?.0.vertex_count))
}

/// # Safety
/// `c` must be a live construction handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn sm_construction_paper_bound(c: *const SmConstruction, out: *mut usize) -> SmStatus {
    guard(|| put(out, handle(c)?.0.paper_bound))
}

/// Degree by signed facet count.
///
/// # Safety
/// `c` must be a live construction handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn sm_construction_degree(c: *const SmConstruction, out: *mut i64) -> SmStatus {
    guard(|| put(out, handle(c)?.0.degree_signed))
}

/// # Safety
/// `c` must be a live construction handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn sm_construction_verified(c: *const SmConstruction, out: *mut bool) -> SmStatus {
    guard(|| put(out, handle(c)?.0.verified))
}

/// Map file JSON; free with [`sm_string_free`].
///
/// # Safety
/// `c` must be a live construction handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn sm_construction_map_json(c: *const SmConstruction, out: *mut *mut c_char) -> SmStatus {
    guard(|| {
        let c = &handle(c)?.0;
        put_string(out, to_json(&MapFile::from_map(&c.map, Some(&c.source_tree))).map_err(fail)?)
    })
}

/// Certificate JSON without a map file reference; free with
/// [`sm_string_free`].
///
/// # Safety
/// `c` must be a live construction handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn sm_construction_certificate_json(
    c: *const SmConstruction,
    out: *mut *mut c_char,
) -> SmStatus {
    guard(|| {
        let cert = CertificateFile::from_construction(&handle(c)?.0, None);
        put_string(out, to_json_pretty(&cert).map_err(fail)?)
    })
}

/// Parses a map file with inline complexes.
///
/// # Safety
/// `json` must be a NUL-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn sm_map_from_json(json: *const c_char, out: *mut *mut SmMap) -> SmStatus {
    guard(|| {
        let mf: MapFile = serde_json::from_str(str_arg(json)?).map_err(|e| fail(e.into()))?;
        let m = mf.to_map(None).map_err(fail)?;
        put(out, Box::into_raw(Box::new(SmMap(m))))
    })
}

/// # Safety
/// `m` must be NULL or a handle from [`sm_map_from_json`], not used afterwards.
#[no_mangle]
pub unsafe extern "C" fn sm_map_free(m: *mut SmMap) {
    if !m.is_null() {
        drop(Box::from_raw(m));
    }
}

/// Signed-count degree; [`SmStatus::CheckFailed`] when the map is not
/// simplicial or target facets disagree.
///
/// # Safety
/// `m` must be a live map handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn sm_map_degree(m: *const SmMap, out: *mut i64) -> SmStatus {
    guard(|| {
        let r = degree(&handle(m)?.0).map_err(|e| {
            set_error(e.to_string());
            SmStatus::CheckFailed
        })?;
        if !r.consistent {
            set_error("signed counts differ between target facets");
            return Err(SmStatus::CheckFailed);
        }
        put(out, r.degree)
    })
}

/// Degree from the induced map on top homology.
///
/// # Safety
/// `m` must be a live map handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn sm_map_degree_homology(m: *const SmMap, out: *mut i64) -> SmStatus {
    guard(|| {
        let d = degree_via_homology(&handle(m)?.0).map_err(|e| {
            set_error(e.to_string());
            SmStatus::CheckFailed
        })?;
        put(out, d)
    })
}

/// Parses a complex file (facets or construction tree).
///
/// # Safety
/// `json` must be a NUL-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn sm_complex_from_json(json: *const c_char, out: *mut *mut SmComplex) -> SmStatus {
    guard(|| {
        let cf: ComplexFile = serde_json::from_str(str_arg(json)?).map_err(|e| fail(e.into()))?;
        let k = cf.to_complex().map_err(fail)?;
        put(out, Box::into_raw(Box::new(SmComplex(k))))
    })
}

/// # Safety
/// `k` must be NULL or a handle from [`sm_complex_from_json`], not used
/// afterwards.
#[no_mangle]
pub unsafe extern "C" fn sm_complex_free(k: *mut SmComplex) {
    if !k.is_null() {
        drop(Box::from_raw(k));
    }
}

/// # Safety
/// `k` must be a live complex handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn sm_complex_dim(k: *const SmComplex, out: *mut usize) -> SmStatus {
    guard(|| put(out, handle(k)?.0.dim()))
}

/// # Safety
/// `k` must be a live complex handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn sm_complex_num_vertices(k: *const SmComplex, out: *mut usize) -> SmStatus {
    guard(|| put(out, handle(k)?.0.num_vertices()))
}

/// # Safety
/// `k` must be a live complex handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn sm_complex_num_facets(k: *const SmComplex, out: *mut usize) -> SmStatus {
    guard(|| put(out, handle(k)?.0.num_facets()))
}

/// Pseudomanifold, orientability and sphere homology of the complex and its
/// vertex links down to `depth`; `*out` is true when all pass.
///
/// # Safety
/// `k` must be a live complex handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn sm_complex_sphere_evidence(k: *const SmComplex, depth: usize, out: *mut bool) -> SmStatus {
    guard(|| {
        let ev = verify_sphere_evidence(&handle(k)?.0, depth);
        if let Some(f) = ev.failures.first() {
            set_error(format!("{}: {}", f.path, f.detail));
        }
        put(out, ev.passed())
    })
}

/// Facet list, one facet per line; free with [`sm_string_free`].
///
/// # Safety
/// `k` must be a live complex handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn sm_complex_facets_text(k: *const SmComplex, out: *mut *mut c_char) -> SmStatus {
    guard(|| put_string(out, export_facets(&handle(k)?.0)))
}
