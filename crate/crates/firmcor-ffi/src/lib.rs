//! C interface to firmcor.
//!
//! Instances are opaque handles. Every call returns a [`FirmcorStatus`]; on
//! failure [`firmcor_last_error`] describes the problem for the calling
//! thread. Strings handed out by the library are freed with
//! [`firmcor_string_free`].

use firmcor::instances::{self, InstanceBundle};
use firmcor::Error;
use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

/// Result codes shared by every function.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FirmcorStatus {
    Ok = 0,
    /// A required pointer argument was null.
    NullArgument = 1,
    /// A string argument was not valid UTF-8.
    InvalidUtf8 = 2,
    /// The instance text could not be parsed or failed validation.
    InvalidInput = 3,
    /// No bundled instance has the given name.
    UnknownInstance = 4,
    /// The command name is not recognised.
    UnknownCommand = 5,
    /// The computation stopped on a structural error.
    ComputationFailed = 6,
    /// A panic was caught at the boundary.
    Internal = 7,
}

/// An instance bundle owned by the library.
pub struct FirmcorInstance {
    bundle: InstanceBundle,
}

const COMMANDS: [&str; 6] = ["validate", "comatrix", "galois", "flat", "descent", "dual"];

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: &str) {
    let c = CString::new(msg.replace('\0', " ")).expect("no interior nul");
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(c));
}

fn fail(status: FirmcorStatus, msg: &str) -> FirmcorStatus {
    set_error(msg);
    status
}

fn status_of(e: &Error) -> FirmcorStatus {
    match e {
        Error::UnknownInstance(_) => FirmcorStatus::UnknownInstance,
        e if firmcor::cli::is_input_error(e) => FirmcorStatus::InvalidInput,
        _ => FirmcorStatus::ComputationFailed,
    }
}

/// Reads a borrowed C string argument.
unsafe fn arg<'a>(s: *const c_char, what: &str) -> Result<&'a str, FirmcorStatus> {
    if s.is_null() {
        return Err(fail(FirmcorStatus::NullArgument, &format!("{what} is null")));
    }
    CStr::from_ptr(s).to_str().map_err(|_| fail(FirmcorStatus::InvalidUtf8, &format!("{what} is not UTF-8")))
}

fn guarded(f: impl FnOnce() -> FirmcorStatus) -> FirmcorStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(s) => s,
        Err(_) => fail(FirmcorStatus::Internal, "internal error"),
    }
}

fn hand_out(s: String) -> *mut c_char {
    CString::new(s.replace('\0', " ")).expect("no interior nul").into_raw()
}

unsafe fn store(out: *mut *mut FirmcorInstance, bundle: InstanceBundle) {
    *out = Box::into_raw(Box::new(FirmcorInstance { bundle }));
}

/// Loads a bundled instance by name into `*out`.
///
/// # Safety
/// `name` must be a nul-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn firmcor_instance_bundled(name: *const c_char, out: *mut *mut FirmcorInstance) -> FirmcorStatus {
    guarded(|| {
        if out.is_null() {
            return fail(FirmcorStatus::NullArgument, "out is null");
        }
        let name = match arg(name, "name") {
            Ok(n) => n,
            Err(s) => return s,
        };
        match instances::by_name(name) {
            Ok(b) => {
                store(out, b);
                FirmcorStatus::Ok
            }
            Err(e) => fail(status_of(&e), &e.to_string()),
        }
    })
}

/// Parses and validates a `firmcor-1` JSON document into `*out`.
///
/// # Safety
/// `text` must be a nul-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn firmcor_instance_from_json(text: *const c_char, out: *mut *mut FirmcorInstance) -> FirmcorStatus {
    guarded(|| {
        if out.is_null() {
            return fail(FirmcorStatus::NullArgument, "out is null");
        }
        let text = match arg(text, "text") {
            Ok(t) => t,
            Err(s) => return s,
        };
        match instances::parse(text) {
            Ok(b) => {
                store(out, b);
                FirmcorStatus::Ok
            }
            Err(e) => fail(status_of(&e), &e.to_string()),
        }
    })
}

/// Frees an instance. Null is ignored.
///
/// # Safety
/// `inst` must come from this library and not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn firmcor_instance_free(inst: *mut FirmcorInstance) {
    if !inst.is_null() {
        drop(Box::from_raw(inst));
    }
}

/// Canonical JSON text of the instance, into `*out`.
///
/// # Safety
/// `inst` must be a live instance and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn firmcor_instance_to_json(inst: *const FirmcorInstance, out: *mut *mut c_char) -> FirmcorStatus {
    guarded(|| {
        if inst.is_null() || out.is_null() {
            return fail(FirmcorStatus::NullArgument, "instance or out is null");
        }
        *out = hand_out(instances::save_string(&(*inst).bundle));
        FirmcorStatus::Ok
    })
}

/// Runs `command` on the instance and writes the JSON report to `*report`
/// and whether every check passed to `*passed`. A failed check is not an
/// error: the status is `Ok` and `*passed` is false.
///
/// # Safety
/// `inst` must be a live instance, `command` a nul-terminated string and
/// `report` and `passed` valid pointers.
#[no_mangle]
pub unsafe extern "C" fn firmcor_run(
    inst: *const FirmcorInstance,
    command: *const c_char,
    report: *mut *mut c_char,
    passed: *mut bool,
) -> FirmcorStatus {
    guarded(|| {
        if inst.is_null() || report.is_null() || passed.is_null() {
            return fail(FirmcorStatus::NullArgument, "instance, report or passed is null");
        }
        let command = match arg(command, "command") {
            Ok(c) => c,
            Err(s) => return s,
        };
        if !COMMANDS.contains(&command) {
            return fail(FirmcorStatus::UnknownCommand, &format!("unknown command {command:?}"));
        }
        match firmcor::cli::verdict_for(command, &(*inst).bundle) {
            Ok(v) => {
                *passed = v.passed;
                *report = hand_out(serde_json::to_string(&v).expect("serializable"));
                FirmcorStatus::Ok
            }
            Err(e) => fail(status_of(&e), &e.to_string()),
        }
    })
}

/// Frees a string returned by the library. Null is ignored.
///
/// # Safety
/// `s` must come from this library and not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn firmcor_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Message for the last failed call on this thread, or null. The pointer
/// stays valid until the next failing call on the same thread.
#[no_mangle]
pub extern "C" fn firmcor_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

/// Library version as a static string.
#[no_mangle]
pub extern "C" fn firmcor_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}
