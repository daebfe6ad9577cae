//! C interface to `hopfq`.
//!
//! Objects are opaque handles created by `hopfq_*_parse`/`load`/`build`
//! functions and released with the matching `_free`. Every fallible call
//! returns a [`HopfqStatus`]; on failure a message is available from
//! [`hopfq_last_error`] on the same thread. Strings returned through `char **`
//! out-parameters are owned by the caller and must be released with
//! [`hopfq_string_free`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::path::Path;
use std::ptr;

use hopfq::cli::structure_suite;
use hopfq::exactla::FieldDesc;
use hopfq::formats::{
    load_cosmash, load_dimodule, load_smash, load_structure, parse_cayley, parse_structure, write_structure,
    ReportDocument, StructureFile, StructureKind,
};
use hopfq::longdimod::{check_d_equation, check_long_dimodule, d_map};
use hopfq::loops::loop_algebra;
use hopfq::report::VerificationReport;
use hopfq::smash::{build_smash_coproduct, build_smash_product};
use hopfq::Error;

/// Result codes shared by every entry point.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum HopfqStatus {
    Ok = 0,
    /// The call succeeded and produced a report in which some law fails.
    LawFailed = 1,
    ParseError = 2,
    IoError = 3,
    InvalidArgument = 4,
    NullPointer = 5,
    /// A construction rejected its input; the report, if any, names the laws.
    ConstructionFailed = 6,
    Panic = 7,
}

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum HopfqKind {
    Quasigroup = 0,
    Coquasigroup = 1,
}

/// A Hopf quasigroup or coquasigroup.
pub struct HopfqStructure {
    inner: StructureFile,
}

/// The outcome of a verification.
pub struct HopfqReport {
    doc: ReportDocument,
    report: VerificationReport,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: impl Into<String>) {
    let msg = msg.into().replace('\0', " ");
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(CString::new(msg).expect("nul bytes removed")));
}

fn status_of(e: &Error) -> HopfqStatus {
    match e {
        Error::Parse { .. } | Error::MalformedTable(_) | Error::InvalidField(_) => HopfqStatus::ParseError,
        Error::Io { .. } => HopfqStatus::IoError,
        Error::NotIpLoop(_)
        | Error::PreconditionFailed(_)
        | Error::InvalidInput(_)
        | Error::HypothesisNotMet(_) => HopfqStatus::ConstructionFailed,
        _ => HopfqStatus::InvalidArgument,
    }
}

fn fail(e: Error) -> HopfqStatus {
    let s = status_of(&e);
    set_error(e.to_string());
    s
}

/// Runs `f`, converting panics into [`HopfqStatus::Panic`].
fn guard(f: impl FnOnce() -> HopfqStatus) -> HopfqStatus {
    match std::panic::catch_unwind(std::panic::AssertUnwindSafe(f)) {
        Ok(s) => s,
        Err(p) => {
            let msg = p
                .downcast_ref::<&str>()
                .map(|s| s.to_string())
                .or_else(|| p.downcast_ref::<String>().cloned())
                .unwrap_or_else(|| "panic".into());
            set_error(format!("internal error: {msg}"));
            HopfqStatus::Panic
        }
    }
}

unsafe fn str_arg<'a>(p: *const c_char, what: &str) -> Result<&'a str, HopfqStatus> {
    if p.is_null() {
        set_error(format!("{what} is null"));
        return Err(HopfqStatus::NullPointer);
    }
    CStr::from_ptr(p).to_str().map_err(|_| {
        set_error(format!("{what} is not UTF-8"));
        HopfqStatus::InvalidArgument
    })
}

unsafe fn put<T>(out: *mut *mut T, v: T) {
    *out = Box::into_raw(Box::new(v));
}

fn to_c(s: String) -> *mut c_char {
    CString::new(s.replace('\0', " ")).expect("nul bytes removed").into_raw()
}

macro_rules! try_arg {
    ($e:expr) => {
        match $e {
            Ok(v) => v,
            Err(s) => return s,
        }
    };
}

macro_rules! nonnull {
    ($($p:ident),+) => {
        $(if $p.is_null() {
            set_error(concat!(stringify!($p), " is null"));
            return HopfqStatus::NullPointer;
        })+
    };
}

fn kind_of(k: StructureKind) -> HopfqKind {
    match k {
        StructureKind::Quasigroup => HopfqKind::Quasigroup,
        StructureKind::Coquasigroup => HopfqKind::Coquasigroup,
    }
}

fn report_handle(command: &str, subject: &str, report: VerificationReport) -> HopfqReport {
    HopfqReport { doc: ReportDocument::new(command, subject, &report), report }
}

/// The last error message on this thread, or null. Valid until the next call
/// into this library on the same thread; do not free.
#[no_mangle]
pub extern "C" fn hopfq_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |s| s.as_ptr()))
}

/// Releases a string returned by this library. Null is ignored.
///
/// # Safety
/// `s` must come from this library and not have been freed.
#[no_mangle]
pub unsafe extern "C" fn hopfq_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Library version as a static string.
#[no_mangle]
pub extern "C" fn hopfq_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}

/// Parses a structure file from text.
///
/// # Safety
/// `text` must be a valid C string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn hopfq_structure_parse(text: *const c_char, out: *mut *mut HopfqStructure) -> HopfqStatus {
    guard(|| {
        nonnull!(out);
        let text = try_arg!(str_arg(text, "text"));
        match parse_structure(text) {
            Ok(f) => {
                put(out, HopfqStructure { inner: f });
                HopfqStatus::Ok
            }
            Err(e) => fail(e),
        }
    })
}

/// Loads a structure file from disk.
///
/// # Safety
/// `path` must be a valid C string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn hopfq_structure_load(path: *const c_char, out: *mut *mut HopfqStructure) -> HopfqStatus {
    guard(|| {
        nonnull!(out);
        let path = try_arg!(str_arg(path, "path"));
        match load_structure(Path::new(path)) {
            Ok(f) => {
                put(out, HopfqStructure { inner: f });
                HopfqStatus::Ok
            }
            Err(e) => fail(e),
        }
    })
}

/// Builds the loop algebra of a Cayley table given as text, over `field`
/// (`"Q"` or `"F <p>"`).
///
/// # Safety
/// `cayley` and `field` must be valid C strings and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn hopfq_loop_algebra(
    cayley: *const c_char,
    field: *const c_char,
    out: *mut *mut HopfqStructure,
) -> HopfqStatus {
    guard(|| {
        nonnull!(out);
        let text = try_arg!(str_arg(cayley, "cayley"));
        let field = try_arg!(str_arg(field, "field"));
        let result = FieldDesc::parse(field).and_then(|f| loop_algebra(&parse_cayley(text)?, f));
        match result {
            Ok(h) => {
                put(out, HopfqStructure { inner: StructureFile { kind: StructureKind::Quasigroup, data: (*h).clone() } });
                HopfqStatus::Ok
            }
            Err(e) => fail(e),
        }
    })
}

/// Builds the smash product of a `smash` bundle file.
///
/// # Safety
/// `bundle` must be a valid C string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn hopfq_smash_build(bundle: *const c_char, out: *mut *mut HopfqStructure) -> HopfqStatus {
    guard(|| {
        nonnull!(out);
        let path = try_arg!(str_arg(bundle, "bundle"));
        match load_smash(Path::new(path)).and_then(|i| build_smash_product(&i)) {
            Ok(h) => {
                put(out, HopfqStructure { inner: StructureFile { kind: StructureKind::Quasigroup, data: (*h).clone() } });
                HopfqStatus::Ok
            }
            Err(e) => fail(e),
        }
    })
}

/// Builds the smash coproduct of a `cosmash` bundle file.
///
/// # Safety
/// `bundle` must be a valid C string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn hopfq_cosmash_build(bundle: *const c_char, out: *mut *mut HopfqStructure) -> HopfqStatus {
    guard(|| {
        nonnull!(out);
        let path = try_arg!(str_arg(bundle, "bundle"));
        match load_cosmash(Path::new(path)).and_then(|i| build_smash_coproduct(&i)) {
            Ok(h) => {
                put(
                    out,
                    HopfqStructure { inner: StructureFile { kind: StructureKind::Coquasigroup, data: (*h).clone() } },
                );
                HopfqStatus::Ok
            }
            Err(e) => fail(e),
        }
    })
}

/// Releases a structure. Null is ignored.
///
/// # Safety
/// `s` must come from this library and not have been freed.
#[no_mangle]
pub unsafe extern "C" fn hopfq_structure_free(s: *mut HopfqStructure) {
    if !s.is_null() {
        drop(Box::from_raw(s));
    }
}

/// Dimension of the underlying space, or 0 for null.
///
/// # Safety
/// `s` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn hopfq_structure_dim(s: *const HopfqStructure) -> usize {
    s.as_ref().map_or(0, |s| s.inner.data.dim())
}

/// Declared kind of a structure.
///
/// # Safety
/// `s` must be a live handle.
#[no_mangle]
pub unsafe extern "C" fn hopfq_structure_kind(s: *const HopfqStructure, out: *mut HopfqKind) -> HopfqStatus {
    nonnull!(s, out);
    *out = kind_of((*s).inner.kind);
    HopfqStatus::Ok
}

/// The dual structure, of the opposite kind.
///
/// # Safety
/// `s` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn hopfq_structure_dual(s: *const HopfqStructure, out: *mut *mut HopfqStructure) -> HopfqStatus {
    guard(|| {
        nonnull!(s, out);
        let f = &(*s).inner;
        let kind = match f.kind {
            StructureKind::Quasigroup => StructureKind::Coquasigroup,
            StructureKind::Coquasigroup => StructureKind::Quasigroup,
        };
        put(out, HopfqStructure { inner: StructureFile { kind, data: f.data.dual() } });
        HopfqStatus::Ok
    })
}

/// Writes the structure in the text format. Free the result with
/// [`hopfq_string_free`].
///
/// # Safety
/// `s` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn hopfq_structure_serialize(s: *const HopfqStructure, out: *mut *mut c_char) -> HopfqStatus {
    guard(|| {
        nonnull!(s, out);
        let f = &(*s).inner;
        *out = to_c(write_structure(f.kind, &f.data));
        HopfqStatus::Ok
    })
}

/// Runs the full suite for the structure's kind. Returns `Ok` when every law
/// passes and `LawFailed` otherwise; the report is produced in both cases.
///
/// # Safety
/// `s` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn hopfq_verify(s: *const HopfqStructure, out: *mut *mut HopfqReport) -> HopfqStatus {
    guard(|| {
        nonnull!(s, out);
        let f = &(*s).inner;
        let r = report_handle("verify", f.kind.header(), structure_suite(&f.data, f.kind));
        let pass = r.report.all_pass();
        put(out, r);
        if pass {
            HopfqStatus::Ok
        } else {
            HopfqStatus::LawFailed
        }
    })
}

/// Checks the dimodule laws and the D-equation for a `dimodule` bundle.
/// `is_identity` receives whether the induced map is the identity.
///
/// # Safety
/// `bundle` must be a valid C string; `out` and `is_identity` valid pointers.
#[no_mangle]
pub unsafe extern "C" fn hopfq_dequation(
    bundle: *const c_char,
    is_identity: *mut bool,
    out: *mut *mut HopfqReport,
) -> HopfqStatus {
    guard(|| {
        nonnull!(out, is_identity);
        let path = try_arg!(str_arg(bundle, "bundle"));
        let d = match load_dimodule(Path::new(path)) {
            Ok(d) => d,
            Err(e) => return fail(e),
        };
        let mut report = check_long_dimodule(&d);
        let r = d_map(&d);
        report.extend(check_d_equation(&r));
        *is_identity = r.is_identity();
        let h = report_handle("dequation", path, report);
        let pass = h.report.all_pass();
        put(out, h);
        if pass {
            HopfqStatus::Ok
        } else {
            HopfqStatus::LawFailed
        }
    })
}

/// Releases a report. Null is ignored.
///
/// # Safety
/// `r` must come from this library and not have been freed.
#[no_mangle]
pub unsafe extern "C" fn hopfq_report_free(r: *mut HopfqReport) {
    if !r.is_null() {
        drop(Box::from_raw(r));
    }
}

/// Whether every non-informational law passed. False for null.
///
/// # Safety
/// `r` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn hopfq_report_all_pass(r: *const HopfqReport) -> bool {
    r.as_ref().is_some_and(|r| r.report.all_pass())
}

/// Number of laws in the report, or 0 for null.
///
/// # Safety
/// `r` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn hopfq_report_law_count(r: *const HopfqReport) -> usize {
    r.as_ref().map_or(0, |r| r.report.entries().len())
}

/// Number of non-informational laws that failed, or 0 for null.
///
/// # Safety
/// `r` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn hopfq_report_failed_count(r: *const HopfqReport) -> usize {
    r.as_ref().map_or(0, |r| r.report.failed_ids().len())
}

/// Writes the JSON report document. Free the result with [`hopfq_string_free`].
///
/// # Safety
/// `r` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn hopfq_report_json(r: *const HopfqReport, out: *mut *mut c_char) -> HopfqStatus {
    guard(|| {
        nonnull!(r, out);
        *out = to_c((*r).doc.to_json());
        HopfqStatus::Ok
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn errors_map_to_statuses() {
        assert_eq!(status_of(&Error::MalformedTable("x".into())), HopfqStatus::ParseError);
        assert_eq!(status_of(&Error::HMismatch), HopfqStatus::InvalidArgument);
        assert_eq!(status_of(&Error::InvalidInput(Box::default())), HopfqStatus::ConstructionFailed);
    }

    #[test]
    fn panics_are_contained() {
        assert_eq!(guard(|| panic!("boom")), HopfqStatus::Panic);
        let msg = unsafe { CStr::from_ptr(hopfq_last_error()) };
        assert!(msg.to_str().unwrap().contains("boom"));
    }
}
