//! C interface: opaque handles, integer status codes and a thread-local error message.
//!
//! Strings crossing the boundary are NUL-terminated UTF-8. Every handle returned
//! through an out-pointer is owned by the caller and released with its `_free`.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use wrtcone::cli::problem::{cone_kind, parse_problem, ProblemFile, Workspace};
use wrtcone::cli::report::Format;
use wrtcone::cli::{run_preset, run_problem, QualMode, RunOptions, RunReport};
use wrtcone::cones::ConeRequest;
use wrtcone::exactgeom::{parse_rat, ConeUnion, RVec};
use wrtcone::Error;

/// Status codes; the first four match the command-line exit codes.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum WrtStatus {
    Ok = 0,
    Fail = 1,
    Unknown = 2,
    InputError = 3,
    NullArgument = 4,
    InvalidUtf8 = 5,
    Panic = 6,
}

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum WrtConeKind {
    Proximal = 0,
    Frechet = 1,
    Limiting = 2,
}

/// Rules whose hypotheses are not all Holds report Unknown.
pub const WRT_FLAG_STRICT: u32 = 1;
/// Cross-check with the sampling oracle.
pub const WRT_FLAG_CROSS_CHECK: u32 = 2;
/// Add decimal approximations to the report.
pub const WRT_FLAG_DECIMAL: u32 = 4;

/// A parsed problem file with its objects built.
pub struct WrtProblem {
    file: ProblemFile,
    workspace: Workspace,
}

/// A finished report.
pub struct WrtReport {
    report: RunReport,
    json: CString,
}

/// A union of polyhedral cones.
pub struct WrtConeUnion {
    cones: ConeUnion,
    json: CString,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: &str) {
    let c = CString::new(msg.replace('\0', " ")).expect("NUL bytes removed");
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(c));
}

fn clear_error() {
    LAST_ERROR.with(|e| *e.borrow_mut() = None);
}

fn fail(status: WrtStatus, msg: &str) -> WrtStatus {
    set_error(msg);
    status
}

fn from_error(e: &Error) -> WrtStatus {
    fail(WrtStatus::InputError, &e.to_string())
}

/// Runs `f`, turning panics into `WrtStatus::Panic`.
fn guard(f: impl FnOnce() -> WrtStatus) -> WrtStatus {
    clear_error();
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(s) => s,
        Err(p) => {
            let msg = p
                .downcast_ref::<&str>()
                .map(|s| s.to_string())
                .or_else(|| p.downcast_ref::<String>().cloned())
                .unwrap_or_else(|| "internal panic".into());
            fail(WrtStatus::Panic, &msg)
        }
    }
}

unsafe fn read_str<'a>(s: *const c_char) -> Result<&'a str, WrtStatus> {
    if s.is_null() {
        return Err(fail(WrtStatus::NullArgument, "null string argument"));
    }
    CStr::from_ptr(s).to_str().map_err(|_| fail(WrtStatus::InvalidUtf8, "string argument is not UTF-8"))
}

fn options(flags: u32) -> RunOptions {
    RunOptions {
        quals: if flags & WRT_FLAG_STRICT != 0 { QualMode::Strict } else { QualMode::Diagnostic },
        cross_check: flags & WRT_FLAG_CROSS_CHECK != 0,
        format: Format { decimal: flags & WRT_FLAG_DECIMAL != 0 },
        ..RunOptions::default()
    }
}

fn status_of(r: &RunReport) -> WrtStatus {
    match r.exit_code() {
        0 => WrtStatus::Ok,
        1 => WrtStatus::Fail,
        _ => WrtStatus::Unknown,
    }
}

unsafe fn emit_report(result: wrtcone::Result<RunReport>, out: *mut *mut WrtReport) -> WrtStatus {
    match result {
        Ok(report) => {
            let json = CString::new(report.text()).expect("JSON has no NUL bytes");
            let status = status_of(&report);
            *out = Box::into_raw(Box::new(WrtReport { report, json }));
            status
        }
        Err(e) => from_error(&e),
    }
}

/// Message of the last failed call on this thread, or null. Valid until the next call.
#[no_mangle]
pub extern "C" fn wrt_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

/// Parse a problem file and build its objects.
///
/// # Safety
/// `json` must be a valid NUL-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn wrt_problem_parse(json: *const c_char, out: *mut *mut WrtProblem) -> WrtStatus {
    guard(|| {
        if out.is_null() {
            return fail(WrtStatus::NullArgument, "null out pointer");
        }
        *out = ptr::null_mut();
        let text = match read_str(json) {
            Ok(t) => t,
            Err(s) => return s,
        };
        let file = match parse_problem(text) {
            Ok(f) => f,
            Err(e) => return from_error(&e),
        };
        match Workspace::build(&file) {
            Ok(workspace) => {
                *out = Box::into_raw(Box::new(WrtProblem { file, workspace }));
                WrtStatus::Ok
            }
            Err(e) => from_error(&e),
        }
    })
}

/// # Safety
/// `problem` must come from `wrt_problem_parse` and not be freed twice.
#[no_mangle]
pub unsafe extern "C" fn wrt_problem_free(problem: *mut WrtProblem) {
    if !problem.is_null() {
        drop(Box::from_raw(problem));
    }
}

/// Number of queries in the file, 0 for a null handle.
///
/// # Safety
/// `problem` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn wrt_problem_query_count(problem: *const WrtProblem) -> usize {
    problem.as_ref().map_or(0, |p| p.file.queries.len())
}

/// Run every query; the status is the aggregate outcome.
///
/// # Safety
/// `problem` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn wrt_problem_run(
    problem: *const WrtProblem,
    flags: u32,
    out: *mut *mut WrtReport,
) -> WrtStatus {
    guard(|| {
        if out.is_null() {
            return fail(WrtStatus::NullArgument, "null out pointer");
        }
        *out = ptr::null_mut();
        let Some(p) = problem.as_ref() else {
            return fail(WrtStatus::NullArgument, "null problem");
        };
        emit_report(run_problem(&p.file, "ffi", None, None, &options(flags)), out)
    })
}

/// Run a bundled example by id.
///
/// # Safety
/// `id` must be a valid NUL-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn wrt_preset_run(id: *const c_char, flags: u32, out: *mut *mut WrtReport) -> WrtStatus {
    guard(|| {
        if out.is_null() {
            return fail(WrtStatus::NullArgument, "null out pointer");
        }
        *out = ptr::null_mut();
        match read_str(id) {
            Ok(id) => emit_report(run_preset(id, &options(flags)), out),
            Err(s) => s,
        }
    })
}

/// The report as JSON, owned by the handle.
///
/// # Safety
/// `report` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn wrt_report_json(report: *const WrtReport) -> *const c_char {
    report.as_ref().map_or(ptr::null(), |r| r.json.as_ptr())
}

/// Exit code the command line would return for this report, or -1 for null.
///
/// # Safety
/// `report` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn wrt_report_exit_code(report: *const WrtReport) -> i32 {
    report.as_ref().map_or(-1, |r| r.report.exit_code())
}

/// # Safety
/// `report` must come from a run function and not be freed twice.
#[no_mangle]
pub unsafe extern "C" fn wrt_report_free(report: *mut WrtReport) {
    if !report.is_null() {
        drop(Box::from_raw(report));
    }
}

unsafe fn read_point(coords: *const *const c_char, dim: usize) -> Result<RVec, WrtStatus> {
    if coords.is_null() && dim > 0 {
        return Err(fail(WrtStatus::NullArgument, "null point"));
    }
    let mut v = Vec::with_capacity(dim);
    for i in 0..dim {
        let s = read_str(*coords.add(i))?;
        v.push(parse_rat(s).map_err(|e| from_error(&e))?);
    }
    Ok(RVec::new(v))
}

/// Normal cone of the named set relative to the named convex set (whole space when
/// `wrt` is null) at a point given as `dim` rational strings.
///
/// # Safety
/// Strings must be NUL-terminated, `coords` must hold `dim` of them, `out` must be valid.
#[no_mangle]
pub unsafe extern "C" fn wrt_normal_cone(
    problem: *const WrtProblem,
    omega: *const c_char,
    wrt: *const c_char,
    coords: *const *const c_char,
    dim: usize,
    kind: WrtConeKind,
    out: *mut *mut WrtConeUnion,
) -> WrtStatus {
    guard(|| {
        if out.is_null() {
            return fail(WrtStatus::NullArgument, "null out pointer");
        }
        *out = ptr::null_mut();
        let Some(p) = problem.as_ref() else {
            return fail(WrtStatus::NullArgument, "null problem");
        };
        let run = || -> Result<ConeUnion, WrtStatus> {
            let omega = p.workspace.set(read_str(omega)?).map_err(|e| from_error(&e))?;
            let wrt_name = if wrt.is_null() { None } else { Some(read_str(wrt)?.to_string()) };
            let wrt = p.workspace.convex_or_whole(&wrt_name, omega.dim()).map_err(|e| from_error(&e))?;
            let point = read_point(coords, dim)?;
            let kind_name = match kind {
                WrtConeKind::Proximal => "proximal",
                WrtConeKind::Frechet => "frechet",
                WrtConeKind::Limiting => "limiting",
            };
            let kind = cone_kind(kind_name).expect("known kind");
            ConeRequest { omega, wrt, point, kind }.evaluate().map_err(|e| from_error(&e))
        };
        match run() {
            Ok(cones) => {
                let text = cone_json(&cones);
                *out = Box::into_raw(Box::new(WrtConeUnion { cones, json: text }));
                WrtStatus::Ok
            }
            Err(s) => s,
        }
    })
}

fn cone_json(c: &ConeUnion) -> CString {
    CString::new(Format::default().cone_union(c).to_string()).expect("JSON has no NUL bytes")
}

/// Number of canonical parts; 0 means the point was outside the set.
///
/// # Safety
/// `cones` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn wrt_cone_union_part_count(cones: *const WrtConeUnion) -> usize {
    cones.as_ref().map_or(0, |c| c.cones.canonical().parts().len())
}

/// 1 if the vector lies in the union, 0 if not, negative on error.
///
/// # Safety
/// `cones` must be a live handle and `coords` must hold `dim` NUL-terminated strings.
#[no_mangle]
pub unsafe extern "C" fn wrt_cone_union_contains(
    cones: *const WrtConeUnion,
    coords: *const *const c_char,
    dim: usize,
) -> i32 {
    let mut answer = -1;
    let status = guard(|| {
        let Some(c) = cones.as_ref() else {
            return fail(WrtStatus::NullArgument, "null cone union");
        };
        if dim != c.cones.dim() {
            return fail(
                WrtStatus::InputError,
                &format!("dimension mismatch: expected {}, found {dim}", c.cones.dim()),
            );
        }
        match read_point(coords, dim) {
            Ok(v) => {
                answer = i32::from(c.cones.contains(&v));
                WrtStatus::Ok
            }
            Err(s) => s,
        }
    });
    if status == WrtStatus::Ok {
        answer
    } else {
        -(status as i32)
    }
}

/// The union as JSON, owned by the handle.
///
/// # Safety
/// `cones` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn wrt_cone_union_json(cones: *const WrtConeUnion) -> *const c_char {
    cones.as_ref().map_or(ptr::null(), |c| c.json.as_ptr())
}

/// # Safety
/// `cones` must come from `wrt_normal_cone` and not be freed twice.
#[no_mangle]
pub unsafe extern "C" fn wrt_cone_union_free(cones: *mut WrtConeUnion) {
    if !cones.is_null() {
        drop(Box::from_raw(cones));
    }
}
