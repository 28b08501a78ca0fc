//! C interface to `superq`.
//!
//! Objects live behind opaque handles that the caller frees with the
//! matching `*_free` function. Every fallible call returns a
//! [`SuperqStatus`]; the message of the last failure on the calling thread is
//! available from [`superq_last_error`]. Strings returned through `char **`
//! are owned by the caller and released with [`superq_string_free`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};

use superq::quotient::{omega_labels, rho, tensor_direct, tensor_quotient, QuotientObject};
use superq::weights::build_diagram;
use superq::{Error, IndecompLabel, Weight};

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SuperqStatus {
    Ok = 0,
    NullPointer = 1,
    Parse = 2,
    InvalidWeight = 3,
    InvalidLabel = 4,
    Negligible = 5,
    RankMismatch = 6,
    Unsupported = 7,
    Overflow = 8,
    Internal = 9,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SuperqMethod {
    /// Explicit bottom/roof rules.
    Direct = 0,
    /// Through the equivalence with Gl(m-1) x Gl(1) x Gl(1).
    Quotient = 1,
}

/// An indecomposable module of an atypical block.
pub struct SuperqLabel(IndecompLabel);

/// An object of the semisimple quotient: a multiset of non-negligible labels.
pub struct SuperqObject(QuotientObject);

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_error(msg: &str) {
    let c = CString::new(msg.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = c);
}

fn status_of(e: &Error) -> SuperqStatus {
    match e {
        Error::Parse(_) => SuperqStatus::Parse,
        Error::InvalidWeight(_) | Error::Typical => SuperqStatus::InvalidWeight,
        Error::InvalidLabel(_) | Error::InvalidDiagram(_) => SuperqStatus::InvalidLabel,
        Error::Negligible => SuperqStatus::Negligible,
        Error::RankMismatch(..) => SuperqStatus::RankMismatch,
        Error::UnsupportedRank(_) | Error::Unsupported(_) | Error::BipartitionTooLong(..) | Error::DimensionBound { .. } => {
            SuperqStatus::Unsupported
        }
        Error::Oracle(_) | Error::Identification(_) => SuperqStatus::Internal,
    }
}

/// Runs `f`, turning errors and panics into a status code.
fn guard(f: impl FnOnce() -> Result<(), (SuperqStatus, String)>) -> SuperqStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => SuperqStatus::Ok,
        Ok(Err((s, msg))) => {
            set_error(&msg);
            s
        }
        Err(_) => {
            set_error("internal panic");
            SuperqStatus::Internal
        }
    }
}

fn lib(e: Error) -> (SuperqStatus, String) {
    (status_of(&e), e.to_string())
}

fn null(what: &str) -> (SuperqStatus, String) {
    (SuperqStatus::NullPointer, format!("{what} is null"))
}

unsafe fn read_str<'a>(s: *const c_char, what: &str) -> Result<&'a str, (SuperqStatus, String)> {
    if s.is_null() {
        return Err(null(what));
    }
    CStr::from_ptr(s)
        .to_str()
        .map_err(|_| (SuperqStatus::Parse, format!("{what} is not UTF-8")))
}

unsafe fn write_string(out: *mut *mut c_char, s: String) -> Result<(), (SuperqStatus, String)> {
    let c = CString::new(s).map_err(|_| (SuperqStatus::Internal, "string contains NUL".into()))?;
    *out = c.into_raw();
    Ok(())
}

unsafe fn deref<'a, T>(p: *const T, what: &str) -> Result<&'a T, (SuperqStatus, String)> {
    p.as_ref().ok_or_else(|| null(what))
}

fn json<T: serde::Serialize>(v: &T) -> String {
    serde_json::to_string(v).expect("serializable")
}

/// Message of the last failed call on this thread; empty if none. The
/// pointer stays valid until the next failing call on the same thread.
#[no_mangle]
pub extern "C" fn superq_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}

/// Library version as a static NUL-terminated string.
#[no_mangle]
pub extern "C" fn superq_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr() as *const c_char
}

/// # Safety
/// `s` must come from this library or be null.
#[no_mangle]
pub unsafe extern "C" fn superq_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Parses `irr@v/block=c1,...`, `roof@lo:hi/block=...`, ... or a highest
/// weight `a1,...,am/b` (its simple module).
///
/// # Safety
/// `text` must be a NUL-terminated string and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn superq_label_parse(text: *const c_char, out: *mut *mut SuperqLabel) -> SuperqStatus {
    guard(|| {
        if out.is_null() {
            return Err(null("out"));
        }
        let s = read_str(text, "text")?;
        let x = if s.contains('@') {
            s.parse::<IndecompLabel>()
        } else {
            s.parse::<Weight>().and_then(|w| IndecompLabel::irr(&w))
        }
        .map_err(lib)?;
        *out = Box::into_raw(Box::new(SuperqLabel(x)));
        Ok(())
    })
}

/// # Safety
/// `x` must come from [`superq_label_parse`] or be null.
#[no_mangle]
pub unsafe extern "C" fn superq_label_free(x: *mut SuperqLabel) {
    if !x.is_null() {
        drop(Box::from_raw(x));
    }
}

/// Rank `m` of the ambient Gl(m|1).
///
/// # Safety
/// `x` must be a live label.
#[no_mangle]
pub unsafe extern "C" fn superq_label_rank(x: *const SuperqLabel, out: *mut usize) -> SuperqStatus {
    guard(|| {
        let x = deref(x, "label")?;
        *out.as_mut().ok_or_else(|| null("out"))? = x.0.m();
        Ok(())
    })
}

/// # Safety
/// `x` must be a live label and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn superq_label_to_string(x: *const SuperqLabel, out: *mut *mut c_char) -> SuperqStatus {
    guard(|| {
        let x = deref(x, "label")?;
        if out.is_null() {
            return Err(null("out"));
        }
        write_string(out, x.0.to_string())
    })
}

/// The image `{d, b, core, parity}` of a non-negligible label, as JSON.
///
/// # Safety
/// `x` must be a live label and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn superq_label_rho_json(x: *const SuperqLabel, out: *mut *mut c_char) -> SuperqStatus {
    guard(|| {
        let x = deref(x, "label")?;
        if out.is_null() {
            return Err(null("out"));
        }
        let t = rho(&x.0).map_err(lib)?;
        write_string(out, json(&t))
    })
}

/// Image of a label in the quotient; negligible labels give the zero object.
///
/// # Safety
/// `x` must be a live label and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn superq_object_from_label(x: *const SuperqLabel, out: *mut *mut SuperqObject) -> SuperqStatus {
    guard(|| {
        let x = deref(x, "label")?;
        if out.is_null() {
            return Err(null("out"));
        }
        *out = Box::into_raw(Box::new(SuperqObject(omega_labels([(&x.0, &1)]))));
        Ok(())
    })
}

/// The unit object of Gl(m|1).
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn superq_object_unit(m: usize, out: *mut *mut SuperqObject) -> SuperqStatus {
    guard(|| {
        if out.is_null() {
            return Err(null("out"));
        }
        if m < 2 {
            return Err(lib(Error::UnsupportedRank(m)));
        }
        *out = Box::into_raw(Box::new(SuperqObject(QuotientObject::unit(m))));
        Ok(())
    })
}

/// # Safety
/// `x` must come from this library or be null.
#[no_mangle]
pub unsafe extern "C" fn superq_object_free(x: *mut SuperqObject) {
    if !x.is_null() {
        drop(Box::from_raw(x));
    }
}

/// # Safety
/// `a`, `b` must be live objects and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn superq_object_tensor(
    a: *const SuperqObject,
    b: *const SuperqObject,
    method: SuperqMethod,
    out: *mut *mut SuperqObject,
) -> SuperqStatus {
    guard(|| {
        let (a, b) = (deref(a, "a")?, deref(b, "b")?);
        if out.is_null() {
            return Err(null("out"));
        }
        let r = match method {
            SuperqMethod::Direct => tensor_direct(&a.0, &b.0),
            SuperqMethod::Quotient => tensor_quotient(&a.0, &b.0),
        }
        .map_err(lib)?;
        *out = Box::into_raw(Box::new(SuperqObject(r)));
        Ok(())
    })
}

/// Number of simple summands counted with multiplicity.
///
/// # Safety
/// `x` must be a live object and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn superq_object_length(x: *const SuperqObject, out: *mut u64) -> SuperqStatus {
    guard(|| {
        let x = deref(x, "object")?;
        *out.as_mut().ok_or_else(|| null("out"))? = x.0.total_multiplicity();
        Ok(())
    })
}

/// # Safety
/// `x` must be a live object and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn superq_object_superdimension(x: *const SuperqObject, out: *mut i64) -> SuperqStatus {
    guard(|| {
        let x = deref(x, "object")?;
        let out = out.as_mut().ok_or_else(|| null("out"))?;
        let s = x.0.superdimension();
        *out = i64::try_from(&s).map_err(|_| (SuperqStatus::Overflow, format!("superdimension {s} overflows")))?;
        Ok(())
    })
}

/// # Safety
/// `a`, `b` must be live objects and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn superq_object_equal(
    a: *const SuperqObject,
    b: *const SuperqObject,
    out: *mut bool,
) -> SuperqStatus {
    guard(|| {
        let (a, b) = (deref(a, "a")?, deref(b, "b")?);
        *out.as_mut().ok_or_else(|| null("out"))? = a.0 == b.0;
        Ok(())
    })
}

/// JSON array of `[label, multiplicity]` pairs.
///
/// # Safety
/// `x` must be a live object and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn superq_object_to_json(x: *const SuperqObject, out: *mut *mut c_char) -> SuperqStatus {
    guard(|| {
        let x = deref(x, "object")?;
        if out.is_null() {
            return Err(null("out"));
        }
        write_string(out, json(&x.0))
    })
}

/// Weight diagram of `a1,...,am/b` as a JSON array of `[position, mark]`.
///
/// # Safety
/// `weight` must be a NUL-terminated string and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn superq_diagram_json(weight: *const c_char, out: *mut *mut c_char) -> SuperqStatus {
    guard(|| {
        let w: Weight = read_str(weight, "weight")?.parse().map_err(lib)?;
        if out.is_null() {
            return Err(null("out"));
        }
        write_string(out, json(&build_diagram(&w)))
    })
}
