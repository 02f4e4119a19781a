use std::ffi::{c_char, CStr, CString};
use std::path::{Path, PathBuf};
use std::process::Command;
use std::ptr;

use chromsym_ffi::*;

fn take_string(p: *mut c_char) -> String {
    assert!(!p.is_null());
    let s = unsafe { CStr::from_ptr(p) }.to_string_lossy().into_owned();
    unsafe { cs_string_free(p) };
    s
}

fn last_error() -> String {
    unsafe { CStr::from_ptr(cs_last_error_message()) }.to_string_lossy().into_owned()
}

fn parse_graph(text: &str) -> *mut CsGraph {
    let text = CString::new(text).unwrap();
    let mut g = ptr::null_mut();
    assert_eq!(unsafe { cs_graph_parse(text.as_ptr(), &mut g) }, CsStatus::Ok);
    g
}

fn parse_expr(text: &str) -> *mut CsExpr {
    let text = CString::new(text).unwrap();
    let mut e = ptr::null_mut();
    assert_eq!(unsafe { cs_expr_parse(text.as_ptr(), &mut e) }, CsStatus::Ok);
    e
}

fn csf_text(e: *const CsExpr, basis: CsBasis) -> String {
    let mut f = ptr::null_mut();
    assert_eq!(unsafe { cs_csf_expr(e, basis as u32, &mut f) }, CsStatus::Ok);
    let mut out = ptr::null_mut();
    assert_eq!(unsafe { cs_symfunc_to_text(f, &mut out) }, CsStatus::Ok);
    unsafe { cs_symfunc_free(f) };
    take_string(out)
}

#[test]
fn complete_graph_in_e_basis() {
    let e = parse_expr("K4");
    assert_eq!(csf_text(e, CsBasis::E), "24 * e[4]\n");
    unsafe { cs_expr_free(e) };
}

#[test]
fn path_in_augmented_monomials() {
    let e = parse_expr("J(K1,E2)");
    assert_eq!(csf_text(e, CsBasis::MTilde), "1 * mt[1,1,1]\n1 * mt[2,1]\n");
    unsafe { cs_expr_free(e) };
}

#[test]
fn ten_vertex_pair_is_equal_but_not_isomorphic() {
    let a = parse_expr("J(U(K2,K1),U(K6,K1))");
    let b = parse_expr("J(U(K4,K2),K4)");
    let (mut fa, mut fb) = (ptr::null_mut(), ptr::null_mut());
    unsafe {
        assert_eq!(cs_csf_expr(a, CsBasis::MTilde as u32, &mut fa), CsStatus::Ok);
        assert_eq!(cs_csf_expr(b, CsBasis::E as u32, &mut fb), CsStatus::Ok);
        assert!(cs_symfunc_equal(fa, fb));
    }
    let (mut ca, mut cb) = (ptr::null_mut(), ptr::null_mut());
    unsafe {
        assert_eq!(cs_expr_canonical_string(a, false, &mut ca), CsStatus::Ok);
        assert_eq!(cs_expr_canonical_string(b, false, &mut cb), CsStatus::Ok);
    }
    assert_ne!(take_string(ca), take_string(cb));
    unsafe {
        cs_symfunc_free(fa);
        cs_symfunc_free(fb);
        cs_expr_free(a);
        cs_expr_free(b);
    }
}

#[test]
fn graph_and_cotree_routes_agree() {
    let g = parse_graph("n=4; edges=0-1,0-2,0-3");
    let mut e = ptr::null_mut();
    assert_eq!(unsafe { cs_expr_from_graph(g, &mut e) }, CsStatus::Ok);
    let mut sugared = ptr::null_mut();
    assert_eq!(unsafe { cs_expr_canonical_string(e, true, &mut sugared) }, CsStatus::Ok);
    assert_eq!(take_string(sugared), "J(K1,E3)");

    let (mut x, mut y, mut p) = (ptr::null_mut(), ptr::null_mut(), ptr::null_mut());
    unsafe {
        assert_eq!(cs_csf_graph(g, CsBasis::M as u32, &mut x), CsStatus::Ok);
        assert_eq!(cs_csf_expr(e, CsBasis::MTilde as u32, &mut y), CsStatus::Ok);
        assert_eq!(cs_csf_graph(g, CsBasis::P as u32, &mut p), CsStatus::Ok);
        assert!(cs_symfunc_equal(x, y));
        assert!(cs_symfunc_equal(x, p));
        let mut positive = true;
        assert_eq!(cs_symfunc_is_e_positive(x, &mut positive), CsStatus::Ok);
        assert!(!positive, "the claw is not e-positive");
        let mut json = ptr::null_mut();
        assert_eq!(cs_symfunc_to_json(y, &mut json), CsStatus::Ok);
        assert!(take_string(json).starts_with(r#"{"basis":"mt","terms":["#));
        for f in [x, y, p] {
            cs_symfunc_free(f);
        }
        cs_expr_free(e);
        cs_graph_free(g);
    }
}

#[test]
fn classify_and_chromatic_values() {
    let g = parse_graph("n=4; edges=0-1,1-2,2-3,3-0");
    let mut flags = CsClassFlags::default();
    assert_eq!(unsafe { cs_graph_classify(g, &mut flags) }, CsStatus::Ok);
    assert!(flags.cograph && !flags.trivially_perfect && !flags.threshold);
    let mut value = 0i64;
    assert_eq!(unsafe { cs_graph_chromatic_eval(g, 3, &mut value) }, CsStatus::Ok);
    assert_eq!(value, 18);
    assert_eq!(unsafe { cs_graph_chromatic_eval(g, 2, &mut value) }, CsStatus::Ok);
    assert_eq!(value, 2);
    assert_eq!(unsafe { cs_graph_vertex_count(g) }, 4);
    let mut text = ptr::null_mut();
    assert_eq!(unsafe { cs_graph_to_string(g, &mut text) }, CsStatus::Ok);
    assert_eq!(take_string(text), "n=4; edges=0-1,0-3,1-2,2-3");
    unsafe { cs_graph_free(g) };
}

#[test]
fn failures_set_status_and_message() {
    let bad = CString::new("U(K1)").unwrap();
    let mut e = ptr::null_mut();
    assert_eq!(unsafe { cs_expr_parse(bad.as_ptr(), &mut e) }, CsStatus::ParseError);
    assert!(e.is_null());
    assert!(last_error().contains("offset 4"), "{}", last_error());

    let g = parse_graph("n=13; edges=");
    let mut f = ptr::null_mut();
    assert_eq!(unsafe { cs_csf_graph(g, CsBasis::MTilde as u32, &mut f) }, CsStatus::GuardExceeded);
    assert_eq!(unsafe { cs_csf_graph(g, 17, &mut f) }, CsStatus::InvalidArgument);
    assert!(f.is_null());
    unsafe { cs_graph_free(g) };

    let invalid = [0xffu8, 0];
    let mut g = ptr::null_mut();
    assert_eq!(
        unsafe { cs_graph_parse(invalid.as_ptr() as *const c_char, &mut g) },
        CsStatus::InvalidUtf8
    );
    unsafe {
        cs_graph_free(ptr::null_mut());
        cs_expr_free(ptr::null_mut());
        cs_symfunc_free(ptr::null_mut());
        cs_string_free(ptr::null_mut());
    }
}

fn header() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("include/chromsym.h")
}

#[test]
fn header_declares_the_api() {
    let text = std::fs::read_to_string(header()).expect("build script writes the header");
    for name in [
        "typedef struct CsGraph CsGraph;",
        "CS_STATUS_NOT_A_COGRAPH = 4",
        "CS_BASIS_E = 3",
        "cs_graph_parse(",
        "cs_expr_canonical_string(",
        "cs_csf_graph(",
        "cs_symfunc_equal(",
        "cs_last_error_message(",
        "cs_string_free(",
    ] {
        assert!(text.contains(name), "header lacks {name}");
    }
}

/// The static library sits next to the `deps` directory of this test binary.
fn static_lib() -> Option<PathBuf> {
    let exe = std::env::current_exe().ok()?;
    let profile_dir = exe.parent()?.parent()?;
    let lib = profile_dir.join("libchromsym_ffi.a");
    lib.exists().then_some(lib)
}

#[test]
fn c_program_links_against_the_static_library() {
    let Some(lib) = static_lib() else {
        panic!("libchromsym_ffi.a not found next to the test binary");
    };
    if Command::new("cc").arg("--version").output().is_err() {
        eprintln!("no C compiler on PATH; skipping the link check");
        return;
    }
    let dir = std::env::temp_dir().join(format!("chromsym-ffi-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let source = dir.join("smoke.c");
    std::fs::write(
        &source,
        r#"#include <stdio.h>
#include <string.h>
#include "chromsym.h"

int main(void) {
    CsExpr *e = NULL;
    CsSymFunc *f = NULL;
    char *text = NULL;
    if (cs_expr_parse("K4", &e) != CS_STATUS_OK) return 1;
    if (cs_csf_expr(e, CS_BASIS_E, &f) != CS_STATUS_OK) return 2;
    if (cs_symfunc_to_text(f, &text) != CS_STATUS_OK) return 3;
    int ok = strcmp(text, "24 * e[4]\n") == 0;
    cs_string_free(text);
    cs_symfunc_free(f);
    cs_expr_free(e);
    if (cs_expr_parse("U(", &e) != CS_STATUS_PARSE_ERROR) return 4;
    if (strlen(cs_last_error_message()) == 0) return 5;
    return ok ? 0 : 6;
}
"#,
    )
    .unwrap();
    let binary = dir.join("smoke");
    let status = Command::new("cc")
        .arg(&source)
        .arg("-I")
        .arg(header().parent().unwrap())
        .arg(&lib)
        .args(["-lpthread", "-ldl", "-lm", "-o"])
        .arg(&binary)
        .status()
        .unwrap();
    assert!(status.success(), "C compilation failed");
    let run = Command::new(&binary).status().unwrap();
    assert_eq!(run.code(), Some(0));
    let _ = std::fs::remove_dir_all(&dir);
}
