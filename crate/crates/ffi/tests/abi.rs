use std::ffi::{CStr, CString};
use std::path::PathBuf;
use std::process::Command;
use std::ptr;

use commutator_ffi::*;

fn c(s: &str) -> CString {
    CString::new(s).unwrap()
}

unsafe fn take(s: *mut std::ffi::c_char) -> String {
    let out = CStr::from_ptr(s).to_str().unwrap().to_owned();
    comm_string_free(s);
    out
}

unsafe fn bundled(name: &str) -> *mut CommAlgebra {
    let mut a = ptr::null_mut();
    assert_eq!(comm_algebra_bundled(c(name).as_ptr(), &mut a), CommStatus::Ok);
    a
}

#[test]
fn lattice_through_handles() {
    unsafe {
        let a = bundled("z2s2");
        assert_eq!(comm_algebra_size(a), 4);
        let mut l = ptr::null_mut();
        assert_eq!(comm_con_lattice(a, 1000, &mut l), CommStatus::Ok);
        assert_eq!(comm_lattice_len(l), 5);
        let mut s = ptr::null_mut();
        assert_eq!(comm_lattice_get(l, 3, &mut s), CommStatus::Ok);
        assert_eq!(take(s), "0,2|1,3");
        assert_eq!(comm_lattice_get(l, 9, &mut s), CommStatus::Argument);
        assert!(!comm_last_error().is_null());
        comm_lattice_free(l);
        comm_algebra_free(a);
    }
}

#[test]
fn centrality_and_commutator() {
    unsafe {
        let a = bundled("z2s2");
        let (beta, delta, theta) = (c("0,1|2,3"), c("0,2|1|3"), c("0,2|1,3"));
        let mut holds = false;
        assert_eq!(comm_centralizes(a, theta.as_ptr(), theta.as_ptr(), delta.as_ptr(), &mut holds), CommStatus::Ok);
        assert!(holds);
        assert_eq!(comm_centralizes(a, beta.as_ptr(), theta.as_ptr(), delta.as_ptr(), &mut holds), CommStatus::Ok);
        assert!(!holds);
        let mut s = ptr::null_mut();
        assert_eq!(comm_commutator(a, theta.as_ptr(), theta.as_ptr(), &mut s), CommStatus::Ok);
        assert_eq!(take(s), "0|1|2|3");
        let mut j = ptr::null_mut();
        assert_eq!(comm_check_all_json(a, 1000, &mut j), CommStatus::Ok);
        let v: serde_json::Value = serde_json::from_str(&take(j)).unwrap();
        assert_eq!(v["reports"].as_array().unwrap().len(), 11);
        comm_algebra_free(a);
    }
}

#[test]
fn errors_map_to_codes() {
    unsafe {
        let mut a = ptr::null_mut();
        assert_eq!(comm_algebra_from_json(c("{not json").as_ptr(), &mut a), CommStatus::Parse);
        let bad = c(r#"{"name":"x","size":2,"operations":[{"name":"f","arity":1,"table":[0,5]}]}"#);
        assert_eq!(comm_algebra_from_json(bad.as_ptr(), &mut a), CommStatus::Validation);
        assert_eq!(comm_algebra_from_json(ptr::null(), &mut a), CommStatus::NullPointer);
        let msg = CStr::from_ptr(comm_last_error()).to_str().unwrap();
        assert!(msg.contains("null"));
        assert_eq!(comm_algebra_from_file(c("/nonexistent.alg").as_ptr(), &mut a), CommStatus::Io);
        let z = bundled("z4");
        let mut s = ptr::null_mut();
        let p = c("0,1|2|3");
        assert_eq!(comm_commutator(z, p.as_ptr(), p.as_ptr(), &mut s), CommStatus::Argument);
        let wrong = c("0|1");
        assert_eq!(comm_commutator(z, wrong.as_ptr(), wrong.as_ptr(), &mut s), CommStatus::Argument);
        comm_algebra_free(z);
        comm_algebra_free(ptr::null_mut());
        assert_eq!(comm_algebra_size(ptr::null()), 0);
    }
}

#[test]
fn header_compiles_as_c() {
    let header = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("include/commutator.h");
    let text = std::fs::read_to_string(&header).unwrap();
    for f in ["comm_algebra_from_json", "comm_centralizes", "comm_last_error", "comm_string_free"] {
        assert!(text.contains(f), "{f}");
    }
    let dir = tempfile::tempdir().unwrap();
    let src = dir.path().join("t.c");
    std::fs::write(&src, "#include \"commutator.h\"\nint main(void) { return COMM_STATUS_OK; }\n").unwrap();
    let Ok(status) = Command::new("cc")
        .arg("-fsyntax-only")
        .arg("-Wall")
        .arg("-Werror")
        .arg(format!("-I{}", header.parent().unwrap().display()))
        .arg(&src)
        .status()
    else {
        eprintln!("no C compiler; skipped");
        return;
    };
    assert!(status.success());
}

#[test]
fn c_program_links_and_runs() {
    let exe = std::env::current_exe().unwrap();
    let lib = exe.parent().and_then(|d| d.parent()).unwrap().join("libcommutator_ffi.a");
    if !lib.exists() {
        eprintln!("static library not built; skipped");
        return;
    }
    let include = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("include");
    let dir = tempfile::tempdir().unwrap();
    let src = dir.path().join("main.c");
    std::fs::write(
        &src,
        r#"#include <stdio.h>
#include <string.h>
#include "commutator.h"
int main(void) {
    CommAlgebra *a = NULL;
    CommLattice *l = NULL;
    char *s = NULL;
    bool holds = false;
    if (comm_algebra_bundled("z2s2", &a) != COMM_STATUS_OK) return 10;
    if (comm_con_lattice(a, 1000, &l) != COMM_STATUS_OK) return 11;
    if (comm_lattice_len(l) != 5) return 12;
    if (comm_centralizes(a, "0,2|1,3", "0,2|1,3", "0,2|1|3", &holds) != COMM_STATUS_OK || !holds) return 13;
    if (comm_commutator(a, "0,1,2,3", "0,2|1,3", &s) != COMM_STATUS_OK) return 14;
    printf("%s\n", s);
    comm_string_free(s);
    if (comm_centralizes(a, "0|1", "0|1", "0|1", &holds) != COMM_STATUS_ARGUMENT) return 15;
    if (strlen(comm_last_error()) == 0) return 16;
    comm_lattice_free(l);
    comm_algebra_free(a);
    return 0;
}
"#,
    )
    .unwrap();
    let bin = dir.path().join("main");
    let Ok(status) = Command::new("cc")
        .arg(&src)
        .arg(format!("-I{}", include.display()))
        .arg(&lib)
        .args(["-lpthread", "-ldl", "-lm", "-o"])
        .arg(&bin)
        .status()
    else {
        eprintln!("no C compiler; skipped");
        return;
    };
    assert!(status.success());
    let out = Command::new(&bin).output().unwrap();
    assert!(out.status.success(), "exit {:?}", out.status.code());
    assert_eq!(String::from_utf8_lossy(&out.stdout).trim(), "0|1|2|3");
}
