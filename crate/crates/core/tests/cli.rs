use std::fs;
use std::path::Path;
use std::process::{Command, Output};

use simplimap::complex::{cycle, join_oriented, simplex_boundary};
use simplimap::io::{to_json, ComplexFile, MapFile};
use simplimap::map::identity;

fn run(dir: &Path, args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_simplimap")).current_dir(dir).args(args).output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

#[test]
fn construct_then_verify() {
    let dir = tempfile::tempdir().unwrap();
    let o = run(dir.path(), &["construct", "--dim", "3", "--degree", "12", "--out", "m.json", "--realize"]);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    let text = stdout(&o);
    assert!(text.contains("vertices: 21"), "{text}");
    assert!(text.contains("guaranteed bound: 21"));
    assert!(text.contains("ratio: 7/4"));
    for f in ["m.json", "m.cert.json", "m.coords.json"] {
        assert!(dir.path().join(f).exists(), "{f}");
    }
    let o = run(dir.path(), &["verify", "m.cert.json", "--links", "1", "--realization", "m.coords.json"]);
    assert!(o.status.success(), "{}", stdout(&o));
    assert!(stdout(&o).contains("certificate reproduced"));
    let o = run(dir.path(), &["verify", "m.json", "--homology"]);
    assert!(o.status.success());
    assert!(stdout(&o).contains("degree 12"));
}

#[test]
fn small_cases() {
    let dir = tempfile::tempdir().unwrap();
    let o = run(dir.path(), &["construct", "--dim", "1", "--degree", "5"]);
    assert!(o.status.success());
    assert!(stdout(&o).contains("vertices: 15"));
    assert!(dir.path().join("map.json").exists());
    let o = run(dir.path(), &["construct", "--dim", "4", "--degree", "0", "--out", "z.json"]);
    assert!(o.status.success());
    assert!(stdout(&o).contains("vertices: 6"));
    let o = run(dir.path(), &["construct", "--dim", "2", "--degree", "-3", "--out", "n.json"]);
    assert!(o.status.success());
    assert!(stdout(&o).contains("degree: -3"));
}

#[test]
fn deterministic_files() {
    let a = tempfile::tempdir().unwrap();
    let b = tempfile::tempdir().unwrap();
    for d in [&a, &b] {
        assert!(run(d.path(), &["construct", "--dim", "3", "--degree", "7", "--out", "x.json", "--realize"]).status.success());
    }
    for f in ["x.json", "x.cert.json", "x.coords.json"] {
        assert_eq!(fs::read(a.path().join(f)).unwrap(), fs::read(b.path().join(f)).unwrap(), "{f}");
    }
}

#[test]
fn corrupted_map_names_facet() {
    let dir = tempfile::tempdir().unwrap();
    let sq = cycle(4).unwrap();
    let mut mf = MapFile::from_map(&identity(&sq), None);
    mf.assignment[1] = 2;
    fs::write(dir.path().join("bad.json"), to_json(&mf).unwrap()).unwrap();
    let o = run(dir.path(), &["verify", "bad.json"]);
    assert_eq!(o.status.code(), Some(3));
    assert!(stdout(&o).contains("FAIL  facet [0 1] maps onto [0 2]"), "{}", stdout(&o));
}

#[test]
fn out_of_range_assignment_is_a_verification_failure() {
    let dir = tempfile::tempdir().unwrap();
    assert!(run(dir.path(), &["construct", "--dim", "3", "--degree", "4", "--out", "m.json"]).status.success());
    let path = dir.path().join("m.json");
    let mut mf: MapFile = serde_json::from_str(&fs::read_to_string(&path).unwrap()).unwrap();
    mf.assignment[0] = 9;
    fs::write(&path, to_json(&mf).unwrap()).unwrap();
    let o = run(dir.path(), &["verify", "m.json"]);
    assert_eq!(o.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&o.stderr).contains("vertex 0 maps to 9"));
    let o = run(dir.path(), &["verify", "m.cert.json"]);
    assert_eq!(o.status.code(), Some(3));
}

#[test]
fn changed_assignment_breaks_certificate() {
    let dir = tempfile::tempdir().unwrap();
    assert!(run(dir.path(), &["construct", "--dim", "3", "--degree", "4", "--out", "m.json"]).status.success());
    let path = dir.path().join("m.json");
    let mut mf: MapFile = serde_json::from_str(&fs::read_to_string(&path).unwrap()).unwrap();
    mf.assignment[0] = (mf.assignment[0] + 1) % 5;
    fs::write(&path, to_json(&mf).unwrap()).unwrap();
    let o = run(dir.path(), &["verify", "m.cert.json"]);
    assert_eq!(o.status.code(), Some(3));
    assert!(stdout(&o).contains("certificate reproduced"));
}

#[test]
fn missing_facet_names_ridge() {
    let dir = tempfile::tempdir().unwrap();
    let mut cf = ComplexFile::from_oriented(&simplex_boundary(2));
    cf.facets.as_mut().unwrap().remove(0);
    cf.orientation.as_mut().unwrap().remove(0);
    fs::write(dir.path().join("k.json"), to_json(&cf).unwrap()).unwrap();
    let o = run(dir.path(), &["verify", "k.json"]);
    assert_eq!(o.status.code(), Some(3));
    assert!(stdout(&o).contains("ridge [0 1] lies in 1 facet"), "{}", stdout(&o));
}

#[test]
fn fvector_command() {
    let dir = tempfile::tempdir().unwrap();
    let o = run(dir.path(), &["fvector", "--dim", "3", "--ratio", "1", "--out", "k.json"]);
    assert!(o.status.success());
    let text = stdout(&o);
    assert!(text.contains("k: 3") && text.contains("f-vector: (6,15,18,9)"), "{text}");
    assert!(run(dir.path(), &["verify", "k.report.json"]).status.success());
    assert!(run(dir.path(), &["verify", "k.json", "--links", "1"]).status.success());
    let o = run(dir.path(), &["fvector", "--dim", "4", "--ratio", "10"]);
    assert!(stdout(&o).contains("joined with S0: yes"));
    let o = run(dir.path(), &["fvector", "--dim", "5", "--ratio", "100", "--out", "big.json"]);
    assert!(stdout(&o).contains("construction tree only"));
    let cf: ComplexFile = serde_json::from_str(&fs::read_to_string(dir.path().join("big.json")).unwrap()).unwrap();
    assert!(cf.facets.is_none() && cf.construction.is_some());
}

#[test]
fn export_facets() {
    let dir = tempfile::tempdir().unwrap();
    let k = join_oriented(&cycle(3).unwrap(), &cycle(3).unwrap());
    fs::write(dir.path().join("j.json"), to_json(&ComplexFile::from_oriented(&k)).unwrap()).unwrap();
    let a = run(dir.path(), &["export", "--format", "facets", "j.json"]);
    let b = run(dir.path(), &["export", "--format", "facets", "j.json"]);
    assert_eq!(stdout(&a).lines().count(), 9);
    assert_eq!(a.stdout, b.stdout);
    fs::write(dir.path().join("s.json"), to_json(&ComplexFile::from_oriented(&simplex_boundary(2))).unwrap()).unwrap();
    assert_eq!(stdout(&run(dir.path(), &["export", "--format", "facets", "s.json"])), "0 1 2\n0 1 3\n0 2 3\n1 2 3\n");
}

#[test]
fn exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    assert_eq!(run(dir.path(), &["construct", "--dim", "3"]).status.code(), Some(2));
    assert_eq!(run(dir.path(), &["fvector", "--dim", "3", "--ratio", "x"]).status.code(), Some(2));
    assert_eq!(run(dir.path(), &["fvector", "--dim", "2", "--ratio", "1"]).status.code(), Some(2));
    assert_eq!(run(dir.path(), &["verify", "missing.json"]).status.code(), Some(4));
    fs::write(dir.path().join("junk.json"), "{").unwrap();
    assert_eq!(run(dir.path(), &["verify", "junk.json"]).status.code(), Some(2));
    let o = run(dir.path(), &["construct", "--dim", "1", "--degree", "2", "--out", "no/such/dir/m.json"]);
    assert_eq!(o.status.code(), Some(4));
}
