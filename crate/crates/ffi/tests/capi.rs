use std::ffi::{CStr, CString};
use std::path::PathBuf;
use std::process::Command;
use std::ptr;

use pi_forge_ffi::*;

fn cstr(s: &str) -> CString {
    CString::new(s).unwrap()
}

fn algebra(name: &str) -> *mut PfAlgebra {
    let mut out = ptr::null_mut();
    assert_eq!(unsafe { pf_algebra_builtin(cstr(name).as_ptr(), &mut out) }, PfStatus::Ok);
    assert!(!out.is_null());
    out
}

fn last_error() -> Option<String> {
    let p = pf_last_error_message();
    if p.is_null() {
        return None;
    }
    let s = unsafe { CStr::from_ptr(p) }.to_string_lossy().into_owned();
    unsafe { pf_string_free(p) };
    Some(s)
}

#[test]
fn builtin_lifecycle() {
    for name in ["A1", "A2", "A3", "A-star", "A1-star", "A-trivial"] {
        let alg = algebra(name);
        let mut dim = 0;
        assert_eq!(unsafe { pf_algebra_dim(alg, &mut dim) }, PfStatus::Ok);
        assert_eq!(dim, 5);
        unsafe { pf_algebra_free(alg) };
    }
    unsafe { pf_algebra_free(ptr::null_mut()) };
}

#[test]
fn null_and_unknown_inputs() {
    let mut out = ptr::null_mut();
    assert_eq!(unsafe { pf_algebra_builtin(ptr::null(), &mut out) }, PfStatus::NullPointer);
    assert!(last_error().unwrap().contains("name"));
    assert_eq!(unsafe { pf_algebra_builtin(cstr("A1").as_ptr(), ptr::null_mut()) }, PfStatus::NullPointer);
    assert_eq!(unsafe { pf_algebra_builtin(cstr("B7").as_ptr(), &mut out) }, PfStatus::UnknownAlgebra);
    assert!(out.is_null());
    let mut dim = 0;
    assert_eq!(unsafe { pf_algebra_dim(ptr::null(), &mut dim) }, PfStatus::NullPointer);
    let bad = [0xffu8, 0];
    assert_eq!(unsafe { pf_algebra_builtin(bad.as_ptr().cast(), &mut out) }, PfStatus::InvalidUtf8);
}

#[test]
fn json_round_trip() {
    let json = cstr(&pi_forge::algebra::builtin("A1-star").unwrap().to_json());
    let mut out = ptr::null_mut();
    assert_eq!(unsafe { pf_algebra_from_json(json.as_ptr(), &mut out) }, PfStatus::Ok);
    let mut holds = -1;
    assert_eq!(unsafe { pf_is_identity(out, cstr("ym1").as_ptr(), &mut holds) }, PfStatus::Ok);
    assert_eq!(holds, 1);
    assert_eq!(unsafe { pf_is_identity(out, cstr("zp1 zp2").as_ptr(), &mut holds) }, PfStatus::Ok);
    assert_eq!(holds, 0);
    unsafe { pf_algebra_free(out) };

    let broken = pi_forge::algebra::base_algebra().with_structure_constant(3, 2, 4, pi_forge::Rational::int(1));
    let json = cstr(&broken.to_json());
    assert_eq!(unsafe { pf_algebra_from_json(json.as_ptr(), &mut out) }, PfStatus::InvalidSpec);
    assert_eq!(unsafe { pf_algebra_from_json(cstr("{").as_ptr(), &mut out) }, PfStatus::InvalidSpec);
}

#[test]
fn identities_and_errors() {
    let alg = algebra("A1");
    let mut holds = -1;
    assert_eq!(unsafe { pf_is_identity(alg, cstr("z1 z2 z3").as_ptr(), &mut holds) }, PfStatus::Ok);
    assert_eq!(holds, 1);
    assert_eq!(unsafe { pf_is_identity(alg, cstr("[y1, y2]").as_ptr(), &mut holds) }, PfStatus::Ok);
    assert_eq!(holds, 1);
    assert_eq!(unsafe { pf_is_identity(alg, cstr("z1 z2").as_ptr(), &mut holds) }, PfStatus::Ok);
    assert_eq!(holds, 0);
    assert_eq!(unsafe { pf_is_identity(alg, cstr("z1 * (").as_ptr(), &mut holds) }, PfStatus::Parse);
    assert!(last_error().is_some());
    assert_eq!(unsafe { pf_is_identity(alg, cstr("x1 x2").as_ptr(), &mut holds) }, PfStatus::Parse);
    unsafe { pf_algebra_free(alg) };
}

#[test]
fn quotient_dimensions() {
    let alg = algebra("A1");
    let mut dim = 0;
    for (counts, want) in [([3usize, 0], 1), ([3, 1], 8), ([2, 2], 8), ([1, 3], 0)] {
        assert_eq!(unsafe { pf_quotient_dim(alg, counts.as_ptr(), 2, &mut dim) }, PfStatus::Ok);
        assert_eq!(dim, want, "{counts:?}");
    }
    let wrong = [1usize, 1, 1];
    assert_eq!(unsafe { pf_quotient_dim(alg, wrong.as_ptr(), 3, &mut dim) }, PfStatus::Mode);
    assert_eq!(unsafe { pf_quotient_dim(alg, ptr::null(), 2, &mut dim) }, PfStatus::NullPointer);
    let big = [9usize, 0];
    assert_eq!(unsafe { pf_quotient_dim(alg, big.as_ptr(), 2, &mut dim) }, PfStatus::DegreeCap);
    unsafe { pf_algebra_free(alg) };
}

#[test]
fn multiplicities() {
    let alg = algebra("A1");
    let mut m = 0;
    assert_eq!(unsafe { pf_multiplicity(alg, cstr("(3,1)|(1)").as_ptr(), &mut m) }, PfStatus::Ok);
    assert_eq!(m, 3);
    assert_eq!(unsafe { pf_multiplicity(alg, cstr("(2,1)|()").as_ptr(), &mut m) }, PfStatus::Ok);
    assert_eq!(m, 0);
    assert_eq!(unsafe { pf_multiplicity(alg, cstr("(2,x)|(1)").as_ptr(), &mut m) }, PfStatus::Parse);
    assert_eq!(unsafe { pf_multiplicity(alg, cstr("(1,2)|(1)").as_ptr(), &mut m) }, PfStatus::Precondition);
    unsafe { pf_algebra_free(alg) };
}

#[test]
fn bundled_verification() {
    let (mut passed, mut through) = (-1, 0);
    assert_eq!(unsafe { pf_verify_bundled(cstr("thA1").as_ptr(), 4, &mut passed, &mut through) }, PfStatus::Ok);
    assert_eq!((passed, through), (1, 4));
    assert_eq!(unsafe { pf_verify_bundled(cstr("missing").as_ptr(), 4, &mut passed, &mut through) }, PfStatus::InvalidSpec);
    assert_eq!(unsafe { pf_verify_bundled(cstr("thA1").as_ptr(), 40, &mut passed, &mut through) }, PfStatus::DegreeCap);
}

#[test]
fn errors_are_per_thread() {
    let mut out = ptr::null_mut();
    assert_eq!(unsafe { pf_algebra_builtin(cstr("B7").as_ptr(), &mut out) }, PfStatus::UnknownAlgebra);
    assert!(std::thread::spawn(last_error).join().unwrap().is_none());
    assert!(last_error().unwrap().contains("B7"));
}

/// Compiles `tests/c/smoke.c` against the generated header and the static
/// library, then runs it. Skipped when no C compiler is available.
#[test]
fn c_smoke_program() {
    let cc = std::env::var("CC").unwrap_or_else(|_| "cc".into());
    if Command::new(&cc).arg("--version").output().is_err() {
        eprintln!("no C compiler ({cc}); skipping");
        return;
    }
    let manifest = PathBuf::from(env!("CARGO_MANIFEST_DIR"));
    let deps = std::env::current_exe().unwrap().parent().unwrap().to_path_buf();
    let lib = deps.join("libpi_forge_ffi.a");
    assert!(lib.exists(), "static library not found at {}", lib.display());
    let exe = PathBuf::from(env!("CARGO_TARGET_TMPDIR")).join("pf_smoke");
    let status = Command::new(&cc)
        .arg("-std=c11")
        .arg("-Wall")
        .arg("-Werror")
        .arg("-I")
        .arg(manifest.join("include"))
        .arg(manifest.join("tests/c/smoke.c"))
        .arg(&lib)
        .args(["-lpthread", "-ldl", "-lm", "-o"])
        .arg(&exe)
        .status()
        .unwrap();
    assert!(status.success(), "C compile failed");
    let run = Command::new(&exe).output().unwrap();
    assert!(run.status.success(), "{}", String::from_utf8_lossy(&run.stderr));
    assert_eq!(String::from_utf8_lossy(&run.stdout).trim(), "ok");
}
