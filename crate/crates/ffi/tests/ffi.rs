use std::ffi::{CStr, CString};
use std::path::PathBuf;
use std::process::Command;
use std::ptr;

use simplimap_ffi::*;

fn last_error() -> String {
    let p = sm_last_error();
    assert!(!p.is_null());
    unsafe { CStr::from_ptr(p) }.to_string_lossy().into_owned()
}

#[test]
fn construct_and_query() {
    unsafe {
        let mut c = ptr::null_mut();
        assert_eq!(sm_construct(3, 12, &mut c), SmStatus::Ok);
        let (mut v, mut b, mut d, mut ok) = (0usize, 0usize, 0i64, false);
        assert_eq!(sm_construction_vertex_count(c, &mut v), SmStatus::Ok);
        assert_eq!(sm_construction_paper_bound(c, &mut b), SmStatus::Ok);
        assert_eq!(sm_construction_degree(c, &mut d), SmStatus::Ok);
        assert_eq!(sm_construction_verified(c, &mut ok), SmStatus::Ok);
        assert_eq!((v, b, d, ok), (21, 21, 12, true));

        let mut cert = ptr::null_mut();
        assert_eq!(sm_construction_certificate_json(c, &mut cert), SmStatus::Ok);
        let text = CStr::from_ptr(cert).to_str().unwrap().to_owned();
        assert!(text.contains("\"verified\": true"));
        sm_string_free(cert);

        let mut json = ptr::null_mut();
        assert_eq!(sm_construction_map_json(c, &mut json), SmStatus::Ok);
        let mut m = ptr::null_mut();
        assert_eq!(sm_map_from_json(json, &mut m), SmStatus::Ok);
        let (mut d1, mut d2) = (0i64, 0i64);
        assert_eq!(sm_map_degree(m, &mut d1), SmStatus::Ok);
        assert_eq!(sm_map_degree_homology(m, &mut d2), SmStatus::Ok);
        assert_eq!((d1, d2), (12, 12));
        sm_map_free(m);
        sm_string_free(json);
        sm_construction_free(c);
    }
}

#[test]
fn complex_handle() {
    let file = simplimap::io::ComplexFile::from_oriented(&simplimap::complex::simplex_boundary(2));
    let json = CString::new(simplimap::io::to_json(&file).unwrap()).unwrap();
    unsafe {
        let mut k = ptr::null_mut();
        assert_eq!(sm_complex_from_json(json.as_ptr(), &mut k), SmStatus::Ok);
        let (mut dim, mut nv, mut nf, mut sphere) = (0, 0, 0, false);
        assert_eq!(sm_complex_dim(k, &mut dim), SmStatus::Ok);
        assert_eq!(sm_complex_num_vertices(k, &mut nv), SmStatus::Ok);
        assert_eq!(sm_complex_num_facets(k, &mut nf), SmStatus::Ok);
        assert_eq!(sm_complex_sphere_evidence(k, 1, &mut sphere), SmStatus::Ok);
        assert_eq!((dim, nv, nf, sphere), (2, 4, 4, true));
        let mut text = ptr::null_mut();
        assert_eq!(sm_complex_facets_text(k, &mut text), SmStatus::Ok);
        assert_eq!(CStr::from_ptr(text).to_str().unwrap().lines().count(), 4);
        sm_string_free(text);
        sm_complex_free(k);
    }
}

#[test]
fn error_codes() {
    unsafe {
        let mut c = ptr::null_mut();
        assert_eq!(sm_construct(0, 3, &mut c), SmStatus::InvalidInput);
        assert!(last_error().contains("dimension"));
        assert_eq!(sm_construct(1, 3, ptr::null_mut()), SmStatus::NullArgument);

        let mut k = ptr::null_mut();
        let bad = CString::new("{not json").unwrap();
        assert_eq!(sm_complex_from_json(bad.as_ptr(), &mut k), SmStatus::Parse);
        assert_eq!(sm_complex_from_json(ptr::null(), &mut k), SmStatus::NullArgument);
        let bytes = [0xffu8, 0];
        assert_eq!(sm_complex_from_json(bytes.as_ptr().cast(), &mut k), SmStatus::InvalidUtf8);

        let mut n = 0usize;
        assert_eq!(sm_complex_dim(ptr::null(), &mut n), SmStatus::NullArgument);

        assert_eq!(sm_construct(1, 2, &mut c), SmStatus::Ok);
        assert!(sm_last_error().is_null());
        sm_construction_free(c);
        sm_construction_free(ptr::null_mut());
        sm_string_free(ptr::null_mut());
    }
}

#[test]
fn corrupted_map_fails_check() {
    // into a simplex boundary every assignment is simplicial, so use a square
    let sq = simplimap::complex::cycle(4).unwrap();
    let mut mf = simplimap::io::MapFile::from_map(&simplimap::map::identity(&sq), None);
    mf.assignment[1] = 2;
    let json = CString::new(simplimap::io::to_json(&mf).unwrap()).unwrap();
    unsafe {
        let mut m = ptr::null_mut();
        assert_eq!(sm_map_from_json(json.as_ptr(), &mut m), SmStatus::Ok);
        let mut d = 0i64;
        assert_eq!(sm_map_degree(m, &mut d), SmStatus::CheckFailed);
        assert!(last_error().contains("facet"));
        sm_map_free(m);
    }
}

#[test]
fn version_string() {
    let v = unsafe { CStr::from_ptr(sm_version()) };
    assert_eq!(v.to_str().unwrap(), env!("CARGO_PKG_VERSION"));
}

/// Compiles the C smoke program against the generated header and the static
/// library.
#[test]
fn c_program_links_and_runs() {
    let manifest = PathBuf::from(env!("CARGO_MANIFEST_DIR"));
    let exe = std::env::current_exe().unwrap();
    let profile_dir = exe.parent().and_then(|p| p.parent()).unwrap().to_path_buf();
    let lib = profile_dir.join("libsimplimap_ffi.a");
    assert!(lib.exists(), "missing {}", lib.display());
    let out = std::env::temp_dir().join(format!("simplimap_smoke_{}", std::process::id()));
    let status = Command::new("cc")
        .arg(manifest.join("tests/c/smoke.c"))
        .arg("-I")
        .arg(manifest.join("include"))
        .arg(&lib)
        .args(["-lpthread", "-ldl", "-lm", "-o"])
        .arg(&out)
        .status()
        .expect("C compiler");
    assert!(status.success());
    let run = Command::new(&out).output().unwrap();
    let _ = std::fs::remove_file(&out);
    assert!(run.status.success(), "{}", String::from_utf8_lossy(&run.stderr));
    let text = String::from_utf8(run.stdout).unwrap();
    assert!(text.starts_with("vertices=21 degree=12 homology=12 verified=1"), "{text}");
}
