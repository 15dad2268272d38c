use firmcor_ffi::*;
use std::ffi::{c_char, CStr, CString};
use std::path::Path;
use std::process::Command;
use std::ptr;

fn last_error() -> String {
    let p = firmcor_last_error();
    assert!(!p.is_null());
    unsafe { CStr::from_ptr(p) }.to_str().unwrap().to_string()
}

fn bundled(name: &str) -> *mut FirmcorInstance {
    let name = CString::new(name).unwrap();
    let mut inst = ptr::null_mut();
    assert_eq!(unsafe { firmcor_instance_bundled(name.as_ptr(), &mut inst) }, FirmcorStatus::Ok);
    inst
}

fn run(inst: *const FirmcorInstance, cmd: &str) -> (FirmcorStatus, Option<serde_json::Value>, bool) {
    let cmd = CString::new(cmd).unwrap();
    let mut report: *mut c_char = ptr::null_mut();
    let mut passed = false;
    let status = unsafe { firmcor_run(inst, cmd.as_ptr(), &mut report, &mut passed) };
    if report.is_null() {
        return (status, None, passed);
    }
    let v = serde_json::from_str(unsafe { CStr::from_ptr(report) }.to_str().unwrap()).unwrap();
    unsafe { firmcor_string_free(report) };
    (status, Some(v), passed)
}

#[test]
fn commands_report_through_json() {
    let inst = bundled("projection-f2xf2");
    let (s, v, passed) = run(inst, "galois");
    assert_eq!(s, FirmcorStatus::Ok);
    assert!(passed);
    assert_eq!(v.unwrap()["command"], "galois");
    // a failed check is a result, not an error
    let (s, v, passed) = run(inst, "flat");
    assert_eq!(s, FirmcorStatus::Ok);
    assert!(!passed);
    assert!(!v.unwrap()["witnesses"].as_array().unwrap().is_empty());
    unsafe { firmcor_instance_free(inst) };
}

#[test]
fn errors_set_status_and_message() {
    let mut inst = ptr::null_mut();
    let name = CString::new("no-such-instance").unwrap();
    assert_eq!(unsafe { firmcor_instance_bundled(name.as_ptr(), &mut inst) }, FirmcorStatus::UnknownInstance);
    assert!(inst.is_null());
    assert!(last_error().contains("no-such-instance"));

    assert_eq!(unsafe { firmcor_instance_bundled(ptr::null(), &mut inst) }, FirmcorStatus::NullArgument);

    let bad = CString::new("{\"format\":\"firmcor-1\"").unwrap();
    assert_eq!(unsafe { firmcor_instance_from_json(bad.as_ptr(), &mut inst) }, FirmcorStatus::InvalidInput);
    assert!(last_error().contains("parse error"));

    let inst = bundled("trivial");
    let (s, v, _) = run(inst, "frobnicate");
    assert_eq!(s, FirmcorStatus::UnknownCommand);
    assert!(v.is_none());
    assert!(last_error().contains("frobnicate"));
    unsafe { firmcor_instance_free(inst) };

    let bytes = [0xffu8, 0xfe, 0];
    let mut inst = ptr::null_mut();
    assert_eq!(
        unsafe { firmcor_instance_from_json(bytes.as_ptr().cast(), &mut inst) },
        FirmcorStatus::InvalidUtf8
    );
}

#[test]
fn json_round_trip_through_handles() {
    let inst = bundled("sweedler-f4-f2");
    let mut text: *mut c_char = ptr::null_mut();
    assert_eq!(unsafe { firmcor_instance_to_json(inst, &mut text) }, FirmcorStatus::Ok);
    let mut copy = ptr::null_mut();
    assert_eq!(unsafe { firmcor_instance_from_json(text, &mut copy) }, FirmcorStatus::Ok);
    let mut again: *mut c_char = ptr::null_mut();
    assert_eq!(unsafe { firmcor_instance_to_json(copy, &mut again) }, FirmcorStatus::Ok);
    assert_eq!(unsafe { CStr::from_ptr(text) }, unsafe { CStr::from_ptr(again) });
    let (s, _, passed) = run(copy, "validate");
    assert_eq!(s, FirmcorStatus::Ok);
    assert!(passed);
    unsafe {
        firmcor_string_free(text);
        firmcor_string_free(again);
        firmcor_instance_free(copy);
        firmcor_instance_free(inst);
        firmcor_instance_free(ptr::null_mut());
        firmcor_string_free(ptr::null_mut());
    }
}

#[test]
fn version_matches_the_crate() {
    let v = unsafe { CStr::from_ptr(firmcor_version()) }.to_str().unwrap();
    assert_eq!(v, env!("CARGO_PKG_VERSION"));
}

#[test]
fn header_compiles_as_c() {
    let header = Path::new(env!("CARGO_MANIFEST_DIR")).join("include/firmcor.h");
    let text = std::fs::read_to_string(&header).unwrap();
    for name in ["firmcor_instance_bundled", "firmcor_run", "firmcor_last_error", "FIRMCOR_STATUS_UNKNOWN_COMMAND"] {
        assert!(text.contains(name), "{name} missing from header");
    }
    let dir = tempfile::tempdir().unwrap();
    let src = dir.path().join("use.c");
    std::fs::write(
        &src,
        "#include \"firmcor.h\"\nint main(void) { FirmcorInstance *i = 0; bool ok; char *r;\n\
         return firmcor_run(i, \"validate\", &r, &ok) == FIRMCOR_STATUS_OK; }\n",
    )
    .unwrap();
    let Ok(out) = Command::new("cc")
        .args(["-std=c99", "-Wall", "-Werror", "-fsyntax-only", "-I"])
        .arg(header.parent().unwrap())
        .arg(&src)
        .output()
    else {
        eprintln!("no C compiler; skipping the compile step");
        return;
    };
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
}
