//! C ABI for the exact cover toolkit.
//!
//! The interface follows the usual FFI conventions: instances are opaque
//! handles created and destroyed by this library, fallible calls return an
//! [`XcStatus`] code with a thread-local message behind [`xc_last_error`],
//! and solutions stream through a caller-supplied callback. The header is
//! generated into `include/xcover.h` at build time.
//!
//! Strings are UTF-8; label arrays are NUL-terminated C strings. Row ids
//! are 1-based, matching the Rust API and the `SOLUTION` report format.

use std::cell::RefCell;
use std::ffi::{c_char, c_void, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;
use std::slice;
use std::time::Duration;

use xcover::io::{instance_to_string, read_instance_str};
use xcover::solve::{solve, EngineKind, HaltReason, SearchLimits};
use xcover::{check_solution, Instance, RowId};

/// Opaque exact cover instance.
pub struct XcInstance(Instance);

/// Result code of a fallible call. Anything but `Ok` leaves a message in
/// [`xc_last_error`].
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum XcStatus {
    Ok = 0,
    /// A required pointer argument was null.
    NullArgument = 1,
    /// Input text was not valid UTF-8.
    Utf8 = 2,
    /// The instance rejected the operation (duplicate column, empty row, ...).
    Model = 3,
    /// Instance text did not parse.
    Parse = 4,
    /// A row id was out of range.
    UnknownRow = 5,
    /// The library panicked; state may be inconsistent.
    Internal = 6,
}

/// Search engine selector.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum XcEngine {
    Naive = 0,
    Dlx = 1,
}

/// Why a search stopped.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum XcHalt {
    Exhausted = 0,
    SolutionLimit = 1,
    UpdateLimit = 2,
    TimeLimit = 3,
}

/// Search bounds; zero means unbounded.
#[repr(C)]
#[derive(Debug, Clone, Copy)]
pub struct XcLimits {
    pub max_solutions: u64,
    pub max_updates: u64,
    pub time_budget_seconds: f64,
}

/// Deterministic search counters (wall time excepted).
#[repr(C)]
#[derive(Debug, Clone, Copy)]
pub struct XcStats {
    pub solutions: u64,
    pub total_updates: u64,
    pub max_depth: u64,
    pub wall_seconds: f64,
    pub halted_by: XcHalt,
}

/// Receives one solution: `rows` points at `len` selected row ids in
/// selection order. The pointer is only valid during the call.
pub type XcSolutionCallback =
    Option<unsafe extern "C" fn(rows: *const u32, len: usize, user: *mut c_void)>;

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_error(message: impl Into<Vec<u8>>) {
    let text = CString::new(message).unwrap_or_default();
    LAST_ERROR.with(|slot| *slot.borrow_mut() = text);
}

fn fail(status: XcStatus, message: impl Into<Vec<u8>>) -> XcStatus {
    set_error(message);
    status
}

/// Message of the last failing call on this thread; empty string if none.
/// Valid until the next failing call on the same thread.
#[no_mangle]
pub extern "C" fn xc_last_error() -> *const c_char {
    LAST_ERROR.with(|slot| slot.borrow().as_ptr())
}

/// Creates an empty instance. Free with [`xc_instance_free`].
#[no_mangle]
pub extern "C" fn xc_instance_new() -> *mut XcInstance {
    Box::into_raw(Box::new(XcInstance(Instance::new())))
}

/// Frees an instance; a null pointer is ignored.
///
/// # Safety
/// `instance` must have come from this library and not be freed twice.
#[no_mangle]
pub unsafe extern "C" fn xc_instance_free(instance: *mut XcInstance) {
    if !instance.is_null() {
        drop(Box::from_raw(instance));
    }
}

unsafe fn collect_labels<'a>(
    labels: *const *const c_char,
    count: usize,
) -> Result<Vec<&'a str>, XcStatus> {
    if labels.is_null() && count > 0 {
        return Err(fail(XcStatus::NullArgument, "labels is null"));
    }
    let raw = slice::from_raw_parts(labels, count);
    let mut out = Vec::with_capacity(count);
    for &ptr in raw {
        if ptr.is_null() {
            return Err(fail(XcStatus::NullArgument, "label is null"));
        }
        match CStr::from_ptr(ptr).to_str() {
            Ok(label) => out.push(label),
            Err(_) => return Err(fail(XcStatus::Utf8, "label is not valid UTF-8")),
        }
    }
    Ok(out)
}

/// Parses instance text (UTF-8, not NUL-terminated) into a new instance.
///
/// # Safety
/// `text` must point at `len` readable bytes; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn xc_instance_parse(
    text: *const c_char,
    len: usize,
    out: *mut *mut XcInstance,
) -> XcStatus {
    if text.is_null() || out.is_null() {
        return fail(XcStatus::NullArgument, "text or out is null");
    }
    let bytes = slice::from_raw_parts(text as *const u8, len);
    let Ok(text) = std::str::from_utf8(bytes) else {
        return fail(XcStatus::Utf8, "instance text is not valid UTF-8");
    };
    match read_instance_str(text) {
        Ok(instance) => {
            *out = Box::into_raw(Box::new(XcInstance(instance)));
            XcStatus::Ok
        }
        Err(e) => fail(XcStatus::Parse, e.to_string()),
    }
}

/// Registers at-most-once columns; see the Rust API for ordering rules.
///
/// # Safety
/// `labels` must point at `count` NUL-terminated strings.
#[no_mangle]
pub unsafe extern "C" fn xc_instance_declare_secondary(
    instance: *mut XcInstance,
    labels: *const *const c_char,
    count: usize,
) -> XcStatus {
    let Some(instance) = instance.as_mut() else {
        return fail(XcStatus::NullArgument, "instance is null");
    };
    let labels = match collect_labels(labels, count) {
        Ok(labels) => labels,
        Err(status) => return status,
    };
    match instance.0.declare_secondary(labels) {
        Ok(()) => XcStatus::Ok,
        Err(e) => fail(XcStatus::Model, e.to_string()),
    }
}

/// Appends a row; writes its 1-based id to `row_id` when non-null.
///
/// # Safety
/// `labels` must point at `count` NUL-terminated strings.
#[no_mangle]
pub unsafe extern "C" fn xc_instance_add_row(
    instance: *mut XcInstance,
    labels: *const *const c_char,
    count: usize,
    row_id: *mut u32,
) -> XcStatus {
    let Some(instance) = instance.as_mut() else {
        return fail(XcStatus::NullArgument, "instance is null");
    };
    let labels = match collect_labels(labels, count) {
        Ok(labels) => labels,
        Err(status) => return status,
    };
    match instance.0.add_row(labels) {
        Ok(id) => {
            if !row_id.is_null() {
                *row_id = id.get();
            }
            XcStatus::Ok
        }
        Err(e) => fail(XcStatus::Model, e.to_string()),
    }
}

/// Number of rows; 0 for a null instance.
///
/// # Safety
/// `instance` must be a live handle or null.
#[no_mangle]
pub unsafe extern "C" fn xc_instance_row_count(instance: *const XcInstance) -> usize {
    instance.as_ref().map_or(0, |i| i.0.row_count())
}

/// Number of columns; 0 for a null instance.
///
/// # Safety
/// `instance` must be a live handle or null.
#[no_mangle]
pub unsafe extern "C" fn xc_instance_column_count(instance: *const XcInstance) -> usize {
    instance.as_ref().map_or(0, |i| i.0.column_count())
}

/// Number of (row, column) incidences; 0 for a null instance.
///
/// # Safety
/// `instance` must be a live handle or null.
#[no_mangle]
pub unsafe extern "C" fn xc_instance_node_count(instance: *const XcInstance) -> u64 {
    instance.as_ref().map_or(0, |i| i.0.node_count())
}

/// Serializes the instance to the text format. Free the returned string
/// with [`xc_string_free`]; null on a null instance.
///
/// # Safety
/// `instance` must be a live handle or null.
#[no_mangle]
pub unsafe extern "C" fn xc_instance_to_text(instance: *const XcInstance) -> *mut c_char {
    match instance.as_ref() {
        Some(instance) => CString::new(instance_to_string(&instance.0))
            .expect("instance text has no NUL bytes")
            .into_raw(),
        None => ptr::null_mut(),
    }
}

/// Frees a string returned by this library; a null pointer is ignored.
///
/// # Safety
/// `text` must have come from this library and not be freed twice.
#[no_mangle]
pub unsafe extern "C" fn xc_string_free(text: *mut c_char) {
    if !text.is_null() {
        drop(CString::from_raw(text));
    }
}

fn engine_kind(engine: XcEngine) -> EngineKind {
    match engine {
        XcEngine::Naive => EngineKind::Naive,
        XcEngine::Dlx => EngineKind::Dlx,
    }
}

fn search_limits(limits: Option<&XcLimits>) -> SearchLimits {
    let Some(limits) = limits else {
        return SearchLimits::default();
    };
    let positive = |n: u64| if n == 0 { None } else { Some(n) };
    SearchLimits {
        max_solutions: positive(limits.max_solutions),
        max_updates: positive(limits.max_updates),
        time_budget: if limits.time_budget_seconds > 0.0 {
            Some(Duration::from_secs_f64(limits.time_budget_seconds))
        } else {
            None
        },
    }
}

fn halt_code(reason: HaltReason) -> XcHalt {
    match reason {
        HaltReason::Exhausted => XcHalt::Exhausted,
        HaltReason::SolutionLimit => XcHalt::SolutionLimit,
        HaltReason::UpdateLimit => XcHalt::UpdateLimit,
        HaltReason::TimeLimit => XcHalt::TimeLimit,
    }
}

/// Runs Algorithm X; `callback` (when non-null) receives each solution,
/// `stats` (when non-null) receives the counters. `limits` may be null
/// for an unbounded search.
///
/// # Safety
/// All pointers must be valid for the duration of the call; the callback
/// must not call back into this instance.
#[no_mangle]
pub unsafe extern "C" fn xc_solve(
    instance: *const XcInstance,
    engine: XcEngine,
    limits: *const XcLimits,
    callback: XcSolutionCallback,
    user: *mut c_void,
    stats: *mut XcStats,
) -> XcStatus {
    let Some(instance) = instance.as_ref() else {
        return fail(XcStatus::NullArgument, "instance is null");
    };
    let search = search_limits(limits.as_ref());
    let mut ids = Vec::new();
    let outcome = catch_unwind(AssertUnwindSafe(|| {
        solve(&instance.0, engine_kind(engine), &search, |rows| {
            if let Some(callback) = callback {
                ids.clear();
                ids.extend(rows.iter().map(|id| id.get()));
                callback(ids.as_ptr(), ids.len(), user);
            }
        })
    }));
    match outcome {
        Ok(result) => {
            if !stats.is_null() {
                *stats = XcStats {
                    solutions: result.solutions_found,
                    total_updates: result.total_updates,
                    max_depth: result.max_depth as u64,
                    wall_seconds: result.wall_time.as_secs_f64(),
                    halted_by: halt_code(result.halted_by),
                };
            }
            XcStatus::Ok
        }
        Err(_) => fail(XcStatus::Internal, "solver panicked"),
    }
}

/// Counts all solutions with the given engine.
///
/// # Safety
/// `instance` must be a live handle or null; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn xc_count(
    instance: *const XcInstance,
    engine: XcEngine,
    out: *mut u64,
) -> XcStatus {
    if out.is_null() {
        return fail(XcStatus::NullArgument, "out is null");
    }
    let mut stats = XcStats {
        solutions: 0,
        total_updates: 0,
        max_depth: 0,
        wall_seconds: 0.0,
        halted_by: XcHalt::Exhausted,
    };
    let status = xc_solve(instance, engine, ptr::null(), None, ptr::null_mut(), &mut stats);
    if status == XcStatus::Ok {
        *out = stats.solutions;
    }
    status
}

/// Writes 1 to `out` iff `rows` (1-based ids) is an exact cover.
///
/// # Safety
/// `rows` must point at `len` ids; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn xc_check_solution(
    instance: *const XcInstance,
    rows: *const u32,
    len: usize,
    out: *mut i32,
) -> XcStatus {
    let Some(instance) = instance.as_ref() else {
        return fail(XcStatus::NullArgument, "instance is null");
    };
    if (rows.is_null() && len > 0) || out.is_null() {
        return fail(XcStatus::NullArgument, "rows or out is null");
    }
    let raw = slice::from_raw_parts(rows, len);
    if raw.contains(&0) {
        return fail(XcStatus::UnknownRow, "row ids are 1-based; 0 is invalid");
    }
    let ids: Vec<RowId> = raw.iter().map(|&id| RowId::new(id)).collect();
    match check_solution(&instance.0, &ids) {
        Ok(valid) => {
            *out = valid as i32;
            XcStatus::Ok
        }
        Err(e) => fail(XcStatus::UnknownRow, e.to_string()),
    }
}
