//! C interface to `pa-core`.
//!
//! Every fallible function returns a [`PaStatus`] and writes its result
//! through an out-pointer. Handles are opaque and must be released with the
//! matching `*_free` function. Strings handed out by the library are
//! released with [`pa_string_free`]; strings written into caller buffers are
//! NUL-terminated and report the required size (including the NUL) through
//! `written`, also when the buffer is too small.

use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use num_bigint::BigUint;
use pa_core::cli::{run_suite, Suite, SuiteOptions};
use pa_core::exactarith::Quad5;
use pa_core::partitions::{conjugate, is_pa, is_postar, Partition};
use pa_core::Error;

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PaStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidArgument = 2,
    Domain = 3,
    BufferTooSmall = 4,
    Computation = 5,
    VerificationFailed = 6,
    Panic = 7,
}

impl From<&Error> for PaStatus {
    fn from(e: &Error) -> Self {
        match e {
            Error::Domain(_) | Error::NoCase { .. } | Error::ResourceLimit { .. } => {
                PaStatus::Domain
            }
            Error::Parse { .. } | Error::GridNotIncreasing => PaStatus::InvalidArgument,
            _ => PaStatus::Computation,
        }
    }
}

/// Which sequence [`pa_sequence_value`] reads.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PaSequenceKind {
    Pa = 0,
    PaO = 1,
}

/// `(a + b sqrt5) / den` with machine-integer parts.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PaQuad5 {
    pub a: i64,
    pub b: i64,
    pub den: i64,
}

/// Opaque partition handle.
pub struct PaPartition(Partition);

/// Opaque handle holding `pa(n)` and `pa_o(n)` for `1 <= n <= len`.
pub struct PaSequence {
    pa: Vec<BigUint>,
    pa_o: Vec<BigUint>,
}

/// Largest `max_n` accepted by [`pa_sequence_new`].
pub const PA_SEQUENCE_MAX_N: usize = 5000;

fn guard(f: impl FnOnce() -> PaStatus) -> PaStatus {
    catch_unwind(AssertUnwindSafe(f)).unwrap_or(PaStatus::Panic)
}

unsafe fn write_str(text: &str, buf: *mut c_char, buf_len: usize, written: *mut usize) -> PaStatus {
    let needed = text.len() + 1;
    if !written.is_null() {
        *written = needed;
    }
    if buf.is_null() || buf_len < needed {
        return PaStatus::BufferTooSmall;
    }
    ptr::copy_nonoverlapping(text.as_ptr(), buf as *mut u8, text.len());
    *buf.add(text.len()) = 0;
    PaStatus::Ok
}

fn boxed<T>(value: T, out: *mut *mut T) -> PaStatus {
    unsafe { *out = Box::into_raw(Box::new(value)) };
    PaStatus::Ok
}

/// Static description of a status code.
#[no_mangle]
pub extern "C" fn pa_status_message(status: PaStatus) -> *const c_char {
    let s: &'static CStr = match status {
        PaStatus::Ok => c"ok",
        PaStatus::NullPointer => c"null pointer argument",
        PaStatus::InvalidArgument => c"invalid argument",
        PaStatus::Domain => c"argument outside the domain of the operation",
        PaStatus::BufferTooSmall => c"output buffer too small",
        PaStatus::Computation => c"computation failed",
        PaStatus::VerificationFailed => c"verification failed",
        PaStatus::Panic => c"internal error",
    };
    s.as_ptr()
}

/// Builds a partition from `len` positive parts in any order.
///
/// # Safety
/// `parts` must point to `len` readable values (or be null with `len == 0`);
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn pa_partition_new(
    parts: *const u64,
    len: usize,
    out: *mut *mut PaPartition,
) -> PaStatus {
    guard(|| {
        if out.is_null() || (parts.is_null() && len > 0) {
            return PaStatus::NullPointer;
        }
        let v = if len == 0 {
            Vec::new()
        } else {
            std::slice::from_raw_parts(parts, len).to_vec()
        };
        match Partition::from_unsorted(v) {
            Ok(p) => boxed(PaPartition(p), out),
            Err(e) => PaStatus::from(&e),
        }
    })
}

/// # Safety
/// `p` must be null or a handle from this library not yet freed.
#[no_mangle]
pub unsafe extern "C" fn pa_partition_free(p: *mut PaPartition) {
    if !p.is_null() {
        drop(Box::from_raw(p));
    }
}

/// Number of parts, 0 for a null handle.
///
/// # Safety
/// `p` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn pa_partition_len(p: *const PaPartition) -> usize {
    p.as_ref().map_or(0, |p| p.0.len())
}

/// Sum of the parts, 0 for a null handle.
///
/// # Safety
/// `p` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn pa_partition_n(p: *const PaPartition) -> u64 {
    p.as_ref().map_or(0, |p| p.0.n())
}

/// Copies the parts, largest first, into `buf`.
///
/// # Safety
/// `p` must be a live handle, `buf` writable for `cap` values, `written`
/// null or writable.
#[no_mangle]
pub unsafe extern "C" fn pa_partition_parts(
    p: *const PaPartition,
    buf: *mut u64,
    cap: usize,
    written: *mut usize,
) -> PaStatus {
    guard(|| {
        let Some(p) = p.as_ref() else {
            return PaStatus::NullPointer;
        };
        let parts = p.0.parts();
        if !written.is_null() {
            *written = parts.len();
        }
        if parts.len() > cap || (buf.is_null() && !parts.is_empty()) {
            return PaStatus::BufferTooSmall;
        }
        if !parts.is_empty() {
            ptr::copy_nonoverlapping(parts.as_ptr(), buf, parts.len());
        }
        PaStatus::Ok
    })
}

/// # Safety
/// `p` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn pa_partition_is_pa(p: *const PaPartition, out: *mut bool) -> PaStatus {
    guard(|| match (p.as_ref(), out.is_null()) {
        (Some(p), false) => {
            *out = is_pa(&p.0);
            PaStatus::Ok
        }
        _ => PaStatus::NullPointer,
    })
}

/// Whether every distinct part except the largest has odd multiplicity.
///
/// # Safety
/// `p` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn pa_partition_is_postar(p: *const PaPartition, out: *mut bool) -> PaStatus {
    guard(|| match (p.as_ref(), out.is_null()) {
        (Some(p), false) => {
            *out = is_postar(&p.0);
            PaStatus::Ok
        }
        _ => PaStatus::NullPointer,
    })
}

/// Conjugate partition as a new handle.
///
/// # Safety
/// `p` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn pa_partition_conjugate(
    p: *const PaPartition,
    out: *mut *mut PaPartition,
) -> PaStatus {
    guard(|| match (p.as_ref(), out.is_null()) {
        (Some(p), false) => boxed(PaPartition(conjugate(&p.0)), out),
        _ => PaStatus::NullPointer,
    })
}

/// Image of a PA partition of `n` under the injection into `PA(n+1)`.
/// Returns `PA_STATUS_DOMAIN` for partitions that are not PA.
///
/// # Safety
/// `p` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn pa_partition_phi(
    p: *const PaPartition,
    out: *mut *mut PaPartition,
) -> PaStatus {
    guard(|| match (p.as_ref(), out.is_null()) {
        (Some(p), false) => match pa_core::monotone::phi(&p.0) {
            Ok(img) => boxed(PaPartition(img), out),
            Err(e) => PaStatus::from(&e),
        },
        _ => PaStatus::NullPointer,
    })
}

/// Computes `pa(n)` and `pa_o(n)` for `1 <= n <= max_n`.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn pa_sequence_new(max_n: usize, out: *mut *mut PaSequence) -> PaStatus {
    guard(|| {
        if out.is_null() {
            return PaStatus::NullPointer;
        }
        if max_n == 0 || max_n > PA_SEQUENCE_MAX_N {
            return PaStatus::InvalidArgument;
        }
        let pa = match pa_core::genfunc::series_g1(max_n) {
            Ok(r) => r.coefficients,
            Err(e) => return PaStatus::from(&e),
        };
        let pa_o = match pa_core::genfunc::series_pa_o(max_n) {
            Ok(r) => r.coefficients,
            Err(e) => return PaStatus::from(&e),
        };
        boxed(PaSequence { pa, pa_o }, out)
    })
}

/// # Safety
/// `s` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn pa_sequence_free(s: *mut PaSequence) {
    if !s.is_null() {
        drop(Box::from_raw(s));
    }
}

/// Largest available `n`, 0 for a null handle.
///
/// # Safety
/// `s` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn pa_sequence_len(s: *const PaSequence) -> usize {
    s.as_ref().map_or(0, |s| s.pa.len())
}

/// Writes the decimal value of `pa(n)` or `pa_o(n)` into `buf`.
///
/// # Safety
/// `s` must be a live handle, `buf` writable for `buf_len` bytes, `written`
/// null or writable.
#[no_mangle]
pub unsafe extern "C" fn pa_sequence_value(
    s: *const PaSequence,
    kind: PaSequenceKind,
    n: usize,
    buf: *mut c_char,
    buf_len: usize,
    written: *mut usize,
) -> PaStatus {
    guard(|| {
        let Some(s) = s.as_ref() else {
            return PaStatus::NullPointer;
        };
        let values = match kind {
            PaSequenceKind::Pa => &s.pa,
            PaSequenceKind::PaO => &s.pa_o,
        };
        if n == 0 || n > values.len() {
            return PaStatus::InvalidArgument;
        }
        write_str(&values[n - 1].to_string(), buf, buf_len, written)
    })
}

fn quad(q: &PaQuad5) -> Result<Quad5, PaStatus> {
    if q.den == 0 {
        return Err(PaStatus::InvalidArgument);
    }
    Ok(Quad5::from_ratio(q.a, q.b, q.den))
}

/// Checks Heine's second transformation with `z = q` for parameters
/// `a, b, c` as an identity of series modulo `q^(order+1)`.
///
/// # Safety
/// All pointers must be valid.
#[no_mangle]
pub unsafe extern "C" fn pa_heine_check(
    a: *const PaQuad5,
    b: *const PaQuad5,
    c: *const PaQuad5,
    order: usize,
    out: *mut bool,
) -> PaStatus {
    guard(|| {
        let (Some(a), Some(b), Some(c)) = (a.as_ref(), b.as_ref(), c.as_ref()) else {
            return PaStatus::NullPointer;
        };
        if out.is_null() {
            return PaStatus::NullPointer;
        }
        let parsed = (|| Ok::<_, PaStatus>((quad(a)?, quad(b)?, quad(c)?)))();
        let (a, b, c) = match parsed {
            Ok(t) => t,
            Err(s) => return s,
        };
        match pa_core::genfunc::heine_check(&a, &b, &c, order) {
            Ok(v) => {
                *out = v;
                PaStatus::Ok
            }
            Err(e) => PaStatus::from(&e),
        }
    })
}

/// `A = pi^2/12 + 2 log^2(phi)` with `digits` decimal places, `digits >= 15`.
///
/// # Safety
/// `buf` writable for `buf_len` bytes, `written` null or writable.
#[no_mangle]
pub unsafe extern "C" fn pa_constant_a(
    digits: usize,
    buf: *mut c_char,
    buf_len: usize,
    written: *mut usize,
) -> PaStatus {
    guard(|| {
        if !(15..=10_000).contains(&digits) {
            return PaStatus::InvalidArgument;
        }
        let text = pa_core::asympt::constant_a(digits).to_decimal_string(digits);
        write_str(&text, buf, buf_len, written)
    })
}

/// `log(sqrt(A)/(2 pi n)) + 2 sqrt(A n)`.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn pa_ingham_log_estimate(n: u64, out: *mut f64) -> PaStatus {
    guard(|| {
        if out.is_null() {
            return PaStatus::NullPointer;
        }
        if n == 0 {
            return PaStatus::InvalidArgument;
        }
        *out = pa_core::asympt::ingham_estimate(n);
        PaStatus::Ok
    })
}

/// Runs a verification suite with default parameters and hands back its
/// JSON report, to be released with [`pa_string_free`]. Returns
/// `PA_STATUS_VERIFICATION_FAILED` (with the report still written) when a
/// check fails.
///
/// # Safety
/// `suite` must be a NUL-terminated string and `out_json` writable.
#[no_mangle]
pub unsafe extern "C" fn pa_verify_suite_json(
    suite: *const c_char,
    out_json: *mut *mut c_char,
) -> PaStatus {
    guard(|| {
        if suite.is_null() || out_json.is_null() {
            return PaStatus::NullPointer;
        }
        let Some(suite) = CStr::from_ptr(suite)
            .to_str()
            .ok()
            .and_then(Suite::from_name)
        else {
            return PaStatus::InvalidArgument;
        };
        let report = run_suite(suite, SuiteOptions::default());
        let json = CString::new(report.to_json()).expect("JSON has no NUL bytes");
        *out_json = json.into_raw();
        if report.passed() {
            PaStatus::Ok
        } else {
            PaStatus::VerificationFailed
        }
    })
}

/// # Safety
/// `s` must be null or a string returned by this library, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn pa_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}
