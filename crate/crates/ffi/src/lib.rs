//! C ABI over `commutator-core`.
//!
//! Handles are opaque and owned by the caller: every `*_new`/`*_from_*`
//! result must be released with the matching `*_free`. Strings returned
//! through out-parameters are released with `comm_string_free`. Partitions
//! are passed as text such as `"0,2|1|3"`. On failure a function returns a
//! nonzero `CommStatus` and `comm_last_error` describes it.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::path::Path;
use std::ptr;

use commutator_core::centrality::{centralizes_delta, commutator};
use commutator_core::congruence::{con_lattice, CongruenceLattice};
use commutator_core::io::{parse_algebra, parse_algebra_str, resolve_input};
use commutator_core::properties::check_all;
use commutator_core::{Error, FiniteAlgebra, Partition};

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CommStatus {
    Ok = 0,
    Argument = 1,
    Precondition = 2,
    Budget = 3,
    Parse = 4,
    Validation = 5,
    Io = 6,
    NullPointer = 7,
    Utf8 = 8,
    Panic = 9,
}

/// An algebra handle.
pub struct CommAlgebra {
    inner: FiniteAlgebra,
}

/// A congruence lattice handle.
pub struct CommLattice {
    inner: CongruenceLattice,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: String) {
    let c = CString::new(msg.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(c));
}

fn fail(e: Error) -> CommStatus {
    let status = match &e {
        Error::Argument(_) => CommStatus::Argument,
        Error::Precondition(_) => CommStatus::Precondition,
        Error::Budget { .. } => CommStatus::Budget,
        Error::Parse(_) => CommStatus::Parse,
        Error::Validation(_) => CommStatus::Validation,
        Error::Io(_) => CommStatus::Io,
    };
    set_error(e.to_string());
    status
}

enum Failure {
    Core(Error),
    Null,
    Utf8,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Core(e)
    }
}

fn guard(f: impl FnOnce() -> Result<(), Failure>) -> CommStatus {
    LAST_ERROR.with(|e| *e.borrow_mut() = None);
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => CommStatus::Ok,
        Ok(Err(Failure::Core(e))) => fail(e),
        Ok(Err(Failure::Null)) => {
            set_error("null pointer argument".into());
            CommStatus::NullPointer
        }
        Ok(Err(Failure::Utf8)) => {
            set_error("string argument is not UTF-8".into());
            CommStatus::Utf8
        }
        Err(_) => {
            set_error("internal panic".into());
            CommStatus::Panic
        }
    }
}

unsafe fn text<'a>(p: *const c_char) -> Result<&'a str, Failure> {
    if p.is_null() {
        return Err(Failure::Null);
    }
    CStr::from_ptr(p).to_str().map_err(|_| Failure::Utf8)
}

unsafe fn algebra<'a>(p: *const CommAlgebra) -> Result<&'a FiniteAlgebra, Failure> {
    p.as_ref().map(|a| &a.inner).ok_or(Failure::Null)
}

unsafe fn partition(p: *const c_char) -> Result<Partition, Failure> {
    Ok(text(p)?.parse::<Partition>()?)
}

unsafe fn put<T>(out: *mut T, v: T) -> Result<(), Failure> {
    if out.is_null() {
        return Err(Failure::Null);
    }
    out.write(v);
    Ok(())
}

fn owned(s: String) -> *mut c_char {
    CString::new(s.replace('\0', " ")).unwrap_or_default().into_raw()
}

/// Message for the last failed call on this thread, or null. Valid until the
/// next call into this library on the same thread.
#[no_mangle]
pub extern "C" fn comm_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

/// # Safety
/// `s` must be null or a string returned by this library.
#[no_mangle]
pub unsafe extern "C" fn comm_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// # Safety
/// `json` must be a NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn comm_algebra_from_json(json: *const c_char, out: *mut *mut CommAlgebra) -> CommStatus {
    guard(|| {
        let a = parse_algebra_str(text(json)?, "<json>")?;
        put(out, Box::into_raw(Box::new(CommAlgebra { inner: a })))
    })
}

/// # Safety
/// `path` must be a NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn comm_algebra_from_file(path: *const c_char, out: *mut *mut CommAlgebra) -> CommStatus {
    guard(|| {
        let a = parse_algebra(Path::new(text(path)?))?;
        put(out, Box::into_raw(Box::new(CommAlgebra { inner: a })))
    })
}

/// A bundled fixture by name, e.g. `"z2s2"`.
///
/// # Safety
/// `name` must be a NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn comm_algebra_bundled(name: *const c_char, out: *mut *mut CommAlgebra) -> CommStatus {
    guard(|| {
        let name = text(name)?;
        let srcs = resolve_input(name, None)?;
        let [src] = srcs.as_slice() else {
            return Err(Error::Argument(format!("{name} is not a single algebra")).into());
        };
        let a = src.load()?;
        put(out, Box::into_raw(Box::new(CommAlgebra { inner: a })))
    })
}

/// # Safety
/// `alg` must be null or a handle from this library not yet freed.
#[no_mangle]
pub unsafe extern "C" fn comm_algebra_free(alg: *mut CommAlgebra) {
    if !alg.is_null() {
        drop(Box::from_raw(alg));
    }
}

/// Universe size, or 0 for a null handle.
///
/// # Safety
/// `alg` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn comm_algebra_size(alg: *const CommAlgebra) -> usize {
    alg.as_ref().map_or(0, |a| a.inner.size())
}

/// # Safety
/// `alg` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn comm_con_lattice(alg: *const CommAlgebra, budget: usize, out: *mut *mut CommLattice) -> CommStatus {
    guard(|| {
        let l = con_lattice(algebra(alg)?, budget)?;
        put(out, Box::into_raw(Box::new(CommLattice { inner: l })))
    })
}

/// # Safety
/// `lat` must be null or a handle from this library not yet freed.
#[no_mangle]
pub unsafe extern "C" fn comm_lattice_free(lat: *mut CommLattice) {
    if !lat.is_null() {
        drop(Box::from_raw(lat));
    }
}

/// Number of congruences, or 0 for a null handle.
///
/// # Safety
/// `lat` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn comm_lattice_len(lat: *const CommLattice) -> usize {
    lat.as_ref().map_or(0, |l| l.inner.len())
}

/// The `i`-th congruence as partition text; index 0 is the equality relation.
///
/// # Safety
/// `lat` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn comm_lattice_get(lat: *const CommLattice, i: usize, out: *mut *mut c_char) -> CommStatus {
    guard(|| {
        let l = lat.as_ref().ok_or(Failure::Null)?;
        if i >= l.inner.len() {
            return Err(Error::Argument(format!("index {i} out of range")).into());
        }
        put(out, owned(l.inner.get(i).to_string()))
    })
}

/// `C(alpha,beta;delta)`.
///
/// # Safety
/// `alg` must be a live handle; the partitions NUL-terminated strings; `out` writable.
#[no_mangle]
pub unsafe extern "C" fn comm_centralizes(
    alg: *const CommAlgebra,
    alpha: *const c_char,
    beta: *const c_char,
    delta: *const c_char,
    out: *mut bool,
) -> CommStatus {
    guard(|| {
        let holds = centralizes_delta(algebra(alg)?, &partition(alpha)?, &partition(beta)?, &partition(delta)?)?;
        put(out, holds)
    })
}

/// `[alpha,beta]` as partition text.
///
/// # Safety
/// `alg` must be a live handle; the partitions NUL-terminated strings; `out` writable.
#[no_mangle]
pub unsafe extern "C" fn comm_commutator(
    alg: *const CommAlgebra,
    alpha: *const c_char,
    beta: *const c_char,
    out: *mut *mut c_char,
) -> CommStatus {
    guard(|| {
        let c = commutator(algebra(alg)?, &partition(alpha)?, &partition(beta)?)?;
        put(out, owned(c.to_string()))
    })
}

/// The ten properties and the quasi-identity as one JSON document.
///
/// # Safety
/// `alg` must be a live handle; `out` writable.
#[no_mangle]
pub unsafe extern "C" fn comm_check_all_json(
    alg: *const CommAlgebra,
    lattice_budget: usize,
    out: *mut *mut c_char,
) -> CommStatus {
    guard(|| {
        let r = check_all(algebra(alg)?, lattice_budget)?;
        let s = serde_json::to_string(&r).map_err(|e| Error::Io(e.to_string()))?;
        put(out, owned(s))
    })
}
