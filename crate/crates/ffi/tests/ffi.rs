use std::ffi::{c_char, CStr, CString};
use std::path::PathBuf;
use std::process::Command;
use std::ptr;

use rwl_ffi::*;

fn take(s: *mut c_char) -> String {
    assert!(!s.is_null());
    let out = unsafe { CStr::from_ptr(s) }.to_str().unwrap().to_string();
    unsafe { rwl_string_free(s) };
    out
}

fn last_error() -> String {
    unsafe { CStr::from_ptr(rwl_last_error_message()) }.to_str().unwrap().to_string()
}

fn family(kind: &str, m: usize, n: usize) -> *mut RwlGraph {
    let kind = CString::new(kind).unwrap();
    let mut g = ptr::null_mut();
    assert_eq!(unsafe { rwl_graph_family(kind.as_ptr(), m, n, &mut g) }, RwlStatus::Ok);
    g
}

#[test]
fn counts_through_handles() {
    let g = family("king", 2, 3);
    unsafe {
        assert_eq!(rwl_graph_order(g), 6);
        assert_eq!(rwl_graph_edge_count(g), 11);
        assert!(rwl_graph_is_connected(g));
        let mut out = ptr::null_mut();
        assert_eq!(rwl_count_dp(g, &mut out), RwlStatus::Ok);
        assert_eq!(take(out), "480");
        assert_eq!(rwl_count_walk(g, &mut out), RwlStatus::Ok);
        assert_eq!(take(out), "480");
        assert_eq!(rwl_count_started_at(g, 0, &mut out), RwlStatus::Ok);
        let a: u64 = take(out).parse().unwrap();
        assert_eq!(rwl_count_started_at(g, 3, &mut out), RwlStatus::Ok);
        let b: u64 = take(out).parse().unwrap();
        // first column of king(2,3): (2n)!/n! = 120
        assert_eq!(a + b, 120);
        rwl_graph_free(g);
    }
}

#[test]
fn parse_and_errors() {
    let text = CString::new("# triangle\n3 3\n0 1\n1 2\n0 2\n").unwrap();
    let mut g = ptr::null_mut();
    unsafe {
        assert_eq!(rwl_graph_parse(text.as_ptr(), &mut g), RwlStatus::Ok);
        let mut out = ptr::null_mut();
        assert_eq!(rwl_count_dp(g, &mut out), RwlStatus::Ok);
        assert_eq!(take(out), "6");
        assert_eq!(rwl_count_started_at(g, 7, &mut out), RwlStatus::InvalidArgument);
        rwl_graph_free(g);

        let bad = CString::new("2 1\n0 5\n").unwrap();
        assert_eq!(rwl_graph_parse(bad.as_ptr(), &mut g), RwlStatus::ParseError);
        assert!(last_error().contains("line 2"), "{}", last_error());
        assert_eq!(rwl_graph_parse(ptr::null(), &mut g), RwlStatus::NullPointer);
        assert_eq!(rwl_graph_parse(text.as_ptr(), ptr::null_mut()), RwlStatus::NullPointer);
        let invalid = [0xffu8, 0];
        assert_eq!(rwl_graph_parse(invalid.as_ptr().cast(), &mut g), RwlStatus::InvalidUtf8);

        let kind = CString::new("path").unwrap();
        assert_eq!(rwl_graph_family(kind.as_ptr(), 2, 3, &mut g), RwlStatus::InvalidArgument);
        let kind = CString::new("hexagon").unwrap();
        assert_eq!(rwl_graph_family(kind.as_ptr(), 0, 3, &mut g), RwlStatus::InvalidArgument);
        assert_eq!(rwl_count_dp(ptr::null(), &mut out), RwlStatus::NullPointer);
    }
    let big = family("path", 0, 11);
    let mut out = ptr::null_mut();
    assert_eq!(unsafe { rwl_count_walk(big, &mut out) }, RwlStatus::TooLarge);
    assert!(!last_error().is_empty());
    unsafe { rwl_graph_free(big) };
}

#[test]
fn formulas_and_checks() {
    let mut out = ptr::null_mut();
    let name = CString::new("grid2").unwrap();
    unsafe {
        assert_eq!(rwl_formula(name.as_ptr(), 3, &mut out), RwlStatus::Ok);
        assert_eq!(take(out), "208");
        let name = CString::new("bala-lhs").unwrap();
        assert_eq!(rwl_formula(name.as_ptr(), 3, &mut out), RwlStatus::Ok);
        assert_eq!(take(out), "11/3");
        let name = CString::new("cycle").unwrap();
        assert_eq!(rwl_formula(name.as_ptr(), 2, &mut out), RwlStatus::InvalidArgument);

        for (claim, n) in [("eq003", 50), ("lemma37", 5), ("egf-gg2", 10), ("asymptotic", 64), ("oracle-equivalence", 5)] {
            let c = CString::new(claim).unwrap();
            assert_eq!(rwl_verify(c.as_ptr(), n, &mut out), RwlStatus::Ok, "{claim}: {}", last_error());
            let json: serde_json::Value = serde_json::from_str(&take(out)).unwrap();
            assert_eq!(json["status"], "pass");
            assert_eq!(json["claim"], claim);
        }
        let c = CString::new("no-such-claim").unwrap();
        assert_eq!(rwl_verify(c.as_ptr(), 5, &mut out), RwlStatus::InvalidArgument);
        let c = CString::new("oracle-equivalence").unwrap();
        assert_eq!(rwl_verify(c.as_ptr(), 12, &mut out), RwlStatus::TooLarge);
    }
}

#[test]
fn status_names() {
    let name = |s| unsafe { CStr::from_ptr(rwl_status_name(s)) }.to_str().unwrap();
    assert_eq!(name(RwlStatus::Ok), "RWL_STATUS_OK");
    assert_eq!(name(RwlStatus::VerificationFailed), "RWL_STATUS_VERIFICATION_FAILED");
}

#[test]
fn header_declares_exports() {
    let header = std::fs::read_to_string(concat!(env!("CARGO_MANIFEST_DIR"), "/include/rwl.h")).unwrap();
    for f in ["rwl_graph_parse", "rwl_graph_family", "rwl_count_dp", "rwl_verify", "rwl_string_free", "RWL_STATUS_TOO_LARGE"] {
        assert!(header.contains(f), "{f} missing from header");
    }
}

/// Builds and runs a small C program against the static library when a C
/// compiler is available.
#[test]
fn c_program_links_against_static_library() {
    let deps = std::env::current_exe().unwrap().parent().unwrap().to_path_buf();
    let lib_dir: PathBuf = deps.parent().unwrap().to_path_buf();
    if !lib_dir.join("librwl_ffi.a").exists() || Command::new("cc").arg("--version").output().is_err() {
        eprintln!("skipping: no static library or C compiler");
        return;
    }
    let dir = tempfile::tempdir().unwrap();
    let src = dir.path().join("main.c");
    std::fs::write(
        &src,
        r#"#include <stdio.h>
#include "rwl.h"
int main(void) {
    RwlGraph *g = NULL;
    char *out = NULL;
    if (rwl_graph_family("grid", 2, 4, &g) != RWL_STATUS_OK) return 1;
    if (rwl_count_dp(g, &out) != RWL_STATUS_OK) return 2;
    printf("%s\n", out);
    rwl_string_free(out);
    rwl_graph_free(g);
    if (rwl_graph_parse("1 0\n0 1\n", &g) != RWL_STATUS_PARSE_ERROR) return 3;
    printf("%s\n", rwl_status_name(RWL_STATUS_PARSE_ERROR));
    return 0;
}
"#,
    )
    .unwrap();
    let exe = dir.path().join("main");
    let status = Command::new("cc")
        .arg(&src)
        .arg("-I")
        .arg(concat!(env!("CARGO_MANIFEST_DIR"), "/include"))
        .arg(lib_dir.join("librwl_ffi.a"))
        .args(["-lpthread", "-ldl", "-lm", "-o"])
        .arg(&exe)
        .status()
        .unwrap();
    assert!(status.success());
    let out = Command::new(&exe).output().unwrap();
    assert!(out.status.success(), "exit {:?}", out.status);
    assert_eq!(String::from_utf8(out.stdout).unwrap(), "3584\nRWL_STATUS_PARSE_ERROR\n");
}
