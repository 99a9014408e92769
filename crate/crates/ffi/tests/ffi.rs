use std::ffi::{c_char, CStr, CString};
use std::path::PathBuf;
use std::process::Command;
use std::ptr;

use wrtcone_ffi::*;

fn cstr(s: &str) -> CString {
    CString::new(s).unwrap()
}

unsafe fn text(p: *const c_char) -> String {
    CStr::from_ptr(p).to_str().unwrap().to_string()
}

const QUADRANT: &str = r#"{"version": 1, "objects": {
    "q": {"kind": "convex", "dim": 2, "ineqs": [{"a": [-1, 0], "b": 0}, {"a": [0, -1], "b": 0}]},
    "h": {"kind": "convex", "dim": 2, "ineqs": [{"a": [-1, 0], "b": 0}]}},
    "queries": [{"op": "normal-cone", "kind": "limiting", "omega": "q", "wrt": "h", "point": [0, 0]}]}"#;

#[test]
fn preset_through_handles() {
    unsafe {
        let mut report = ptr::null_mut();
        let id = cstr("final-ex2-mpec");
        assert_eq!(wrt_preset_run(id.as_ptr(), 0, &mut report), WrtStatus::Unknown);
        assert_eq!(wrt_report_exit_code(report), 2);
        let json = text(wrt_report_json(report));
        let lib = wrtcone::cli::run_preset("final-ex2-mpec", &Default::default()).unwrap().text();
        assert_eq!(json, lib);
        wrt_report_free(report);
    }
}

#[test]
fn problem_and_cone_handles() {
    unsafe {
        let src = cstr(QUADRANT);
        let mut problem = ptr::null_mut();
        assert_eq!(wrt_problem_parse(src.as_ptr(), &mut problem), WrtStatus::Ok);
        assert_eq!(wrt_problem_query_count(problem), 1);

        let mut report = ptr::null_mut();
        assert_eq!(wrt_problem_run(problem, WRT_FLAG_CROSS_CHECK, &mut report), WrtStatus::Ok);
        wrt_report_free(report);

        let (q, h) = (cstr("q"), cstr("h"));
        let coords = [cstr("0"), cstr("0")];
        let ptrs: Vec<*const c_char> = coords.iter().map(|c| c.as_ptr()).collect();
        let mut cones = ptr::null_mut();
        let st = wrt_normal_cone(problem, q.as_ptr(), h.as_ptr(), ptrs.as_ptr(), 2, WrtConeKind::Limiting, &mut cones);
        assert_eq!(st, WrtStatus::Ok);
        assert_eq!(wrt_cone_union_part_count(cones), 1);
        let member = [cstr("0"), cstr("-3")];
        let outside = [cstr("-1"), cstr("0")];
        let m: Vec<*const c_char> = member.iter().map(|c| c.as_ptr()).collect();
        let o: Vec<*const c_char> = outside.iter().map(|c| c.as_ptr()).collect();
        assert_eq!(wrt_cone_union_contains(cones, m.as_ptr(), 2), 1);
        assert_eq!(wrt_cone_union_contains(cones, o.as_ptr(), 2), 0);
        assert!(wrt_cone_union_contains(cones, o.as_ptr(), 3) < 0);
        assert!(text(wrt_cone_union_json(cones)).contains("\"rays\""));
        wrt_cone_union_free(cones);
        wrt_problem_free(problem);
    }
}

#[test]
fn errors_set_codes_and_messages() {
    unsafe {
        let mut problem = ptr::null_mut();
        let bad = cstr(r#"{"version": 1, "objects": {}, "queries": [], "x": 0}"#);
        assert_eq!(wrt_problem_parse(bad.as_ptr(), &mut problem), WrtStatus::InputError);
        assert!(problem.is_null());
        assert!(text(wrt_last_error()).contains("unknown field"));
        assert_eq!(wrt_problem_parse(ptr::null(), &mut problem), WrtStatus::NullArgument);
        let mut report = ptr::null_mut();
        assert_eq!(wrt_problem_run(ptr::null(), 0, &mut report), WrtStatus::NullArgument);
        let src = cstr(QUADRANT);
        assert_eq!(wrt_problem_parse(src.as_ptr(), &mut problem), WrtStatus::Ok);
        assert!(wrt_last_error().is_null());
        let coords = [cstr("1/0"), cstr("0")];
        let ptrs: Vec<*const c_char> = coords.iter().map(|c| c.as_ptr()).collect();
        let mut cones = ptr::null_mut();
        let q = cstr("q");
        let st = wrt_normal_cone(problem, q.as_ptr(), ptr::null(), ptrs.as_ptr(), 2, WrtConeKind::Frechet, &mut cones);
        assert_eq!(st, WrtStatus::InputError);
        assert!(text(wrt_last_error()).contains("1/0"));
        wrt_problem_free(problem);
        wrt_problem_free(ptr::null_mut());
        wrt_report_free(ptr::null_mut());
        wrt_cone_union_free(ptr::null_mut());
    }
}

#[test]
fn header_declares_the_interface() {
    let header = std::fs::read_to_string(concat!(env!("CARGO_MANIFEST_DIR"), "/include/wrtcone.h")).unwrap();
    for name in [
        "wrt_last_error",
        "wrt_problem_parse",
        "wrt_problem_run",
        "wrt_preset_run",
        "wrt_report_json",
        "wrt_normal_cone",
        "wrt_cone_union_contains",
        "typedef struct WrtProblem WrtProblem",
        "WRT_STATUS_INPUT_ERROR = 3",
    ] {
        assert!(header.contains(name), "{name}");
    }
}

/// Compiles the C smoke program against the header and the shared library.
#[test]
fn c_program_links_and_runs() {
    let Ok(cc) = Command::new("cc").arg("--version").output() else {
        eprintln!("no C compiler; skipping");
        return;
    };
    assert!(cc.status.success());
    let exe = std::env::current_exe().unwrap();
    let libdir: PathBuf = exe.parent().unwrap().parent().unwrap().to_path_buf();
    let lib = libdir.join(if cfg!(target_os = "macos") { "libwrtcone_ffi.dylib" } else { "libwrtcone_ffi.so" });
    assert!(lib.exists(), "{} not built", lib.display());
    let dir = env!("CARGO_MANIFEST_DIR");
    let out = tempfile_path();
    let status = Command::new("cc")
        .args([&format!("{dir}/tests/smoke.c"), "-I", &format!("{dir}/include"), "-L"])
        .arg(&libdir)
        .args(["-lwrtcone_ffi", "-o"])
        .arg(&out)
        .status()
        .unwrap();
    assert!(status.success());
    let run = Command::new(&out).env("LD_LIBRARY_PATH", &libdir).env("DYLD_LIBRARY_PATH", &libdir).output().unwrap();
    let _ = std::fs::remove_file(&out);
    assert_eq!(run.status.code(), Some(0), "{}", String::from_utf8_lossy(&run.stdout));
    assert_eq!(String::from_utf8_lossy(&run.stdout).trim(), "ok");
}

fn tempfile_path() -> PathBuf {
    std::env::temp_dir().join(format!("wrtcone-smoke-{}", std::process::id()))
}
