//! C ABI over `stsflow`.
//!
//! Objects cross the boundary as opaque handles owned by the caller and
//! released with the matching `*_free` function. Every fallible call returns
//! a [`StsfStatus`]; on failure the message is available from
//! [`stsf_last_error_message`] on the same thread.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use stsflow::designs::{assmuss_mattson, binary_rank, bose, hamming_sts, read_sts};
use stsflow::flows::{am_five_flow, min_flow_search};
use stsflow::johnson_min::m1_jn3;
use stsflow::{Error, FlowCertificate, SteinerTripleSystem, TauAssignment};

/// Result code of every fallible call.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum StsfStatus {
    Ok = 0,
    /// Null pointer, bad parameter or failed precondition.
    InvalidArgument = 1,
    /// The requested object does not exist (no flow, no covering function).
    Infeasible = 2,
    /// Input is not a valid system or certificate.
    Validation = 3,
    Io = 4,
    /// Broken invariant or a panic inside the library.
    Internal = 5,
}

/// A Steiner triple system.
pub struct StsfSts(SteinerTripleSystem);

/// A verified flow certificate.
pub struct StsfFlowCert(FlowCertificate);

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: impl Into<String>) {
    let msg = msg.into().replace('\0', " ");
    LAST_ERROR.with(|e| *e.borrow_mut() = CString::new(msg).ok());
}

fn status_of(err: &Error) -> StsfStatus {
    match err {
        Error::Precondition(_) | Error::Dimension { .. } | Error::NonzeroSum(_) | Error::Degenerate => {
            StsfStatus::InvalidArgument
        }
        Error::CoveringInfeasible { .. }
        | Error::SmallCoveringClass { .. }
        | Error::SubstructureAbsent(_)
        | Error::NotCompletelyRegular { .. } => StsfStatus::Infeasible,
        Error::Validation(_)
        | Error::Parse { .. }
        | Error::ZeroEntry { .. }
        | Error::NonzeroPointSum { .. }
        | Error::Json(_) => StsfStatus::Validation,
        Error::Io(_) => StsfStatus::Io,
        Error::Invariant(_) => StsfStatus::Internal,
    }
}

fn guard(f: impl FnOnce() -> Result<(), (StsfStatus, String)>) -> StsfStatus {
    LAST_ERROR.with(|e| *e.borrow_mut() = None);
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => StsfStatus::Ok,
        Ok(Err((status, msg))) => {
            set_error(msg);
            status
        }
        Err(payload) => {
            let msg = payload
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| payload.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_else(|| "panic".into());
            set_error(format!("panic: {msg}"));
            StsfStatus::Internal
        }
    }
}

fn lib<T>(r: stsflow::Result<T>) -> Result<T, (StsfStatus, String)> {
    r.map_err(|e| (status_of(&e), e.to_string()))
}

fn invalid(msg: &str) -> (StsfStatus, String) {
    (StsfStatus::InvalidArgument, msg.to_string())
}

unsafe fn str_arg<'a>(p: *const c_char, name: &str) -> Result<&'a str, (StsfStatus, String)> {
    if p.is_null() {
        return Err(invalid(&format!("{name} is null")));
    }
    CStr::from_ptr(p).to_str().map_err(|_| invalid(&format!("{name} is not UTF-8")))
}

unsafe fn out_arg<'a, T>(p: *mut *mut T) -> Result<&'a mut *mut T, (StsfStatus, String)> {
    match p.as_mut() {
        Some(slot) => {
            *slot = ptr::null_mut();
            Ok(slot)
        }
        None => Err(invalid("output pointer is null")),
    }
}

unsafe fn sts_arg<'a>(h: *const StsfSts) -> Result<&'a SteinerTripleSystem, (StsfStatus, String)> {
    h.as_ref().map(|h| &h.0).ok_or_else(|| invalid("system handle is null"))
}

unsafe fn cert_arg<'a>(h: *const StsfFlowCert) -> Result<&'a FlowCertificate, (StsfStatus, String)> {
    h.as_ref().map(|h| &h.0).ok_or_else(|| invalid("certificate handle is null"))
}

fn tau_for(spec: &str, base: &SteinerTripleSystem) -> Result<TauAssignment, (StsfStatus, String)> {
    lib(TauAssignment::parse(spec, base.block_count()))
}

fn boxed<T>(x: T) -> *mut T {
    Box::into_raw(Box::new(x))
}

/// Message of the last failed call on this thread, or null.
///
/// The pointer stays valid until the next call into the library on this thread.
#[no_mangle]
pub extern "C" fn stsf_last_error_message() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |s| s.as_ptr()))
}

/// Bose construction of order `3m`, `m` odd.
///
/// # Safety
/// `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn stsf_sts_bose(m: u32, out: *mut *mut StsfSts) -> StsfStatus {
    guard(|| {
        let slot = out_arg(out)?;
        *slot = boxed(StsfSts(lib(bose(m))?));
        Ok(())
    })
}

/// Projective system of order `2^r − 1`.
///
/// # Safety
/// `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn stsf_sts_hamming(r: u32, out: *mut *mut StsfSts) -> StsfStatus {
    guard(|| {
        let slot = out_arg(out)?;
        *slot = boxed(StsfSts(lib(hamming_sts(r))?));
        Ok(())
    })
}

/// Validates `count` triples on points `1..=n`, read as `3·count` consecutive values.
///
/// # Safety
/// `triples` must point to `3·count` readable values and `out` must be valid.
#[no_mangle]
pub unsafe extern "C" fn stsf_sts_from_triples(
    n: u32,
    triples: *const u32,
    count: usize,
    out: *mut *mut StsfSts,
) -> StsfStatus {
    guard(|| {
        let slot = out_arg(out)?;
        if triples.is_null() && count > 0 {
            return Err(invalid("triples is null"));
        }
        let flat = if count == 0 { &[][..] } else { std::slice::from_raw_parts(triples, 3 * count) };
        let raw: Vec<[u32; 3]> = flat.chunks_exact(3).map(|c| [c[0], c[1], c[2]]).collect();
        *slot = boxed(StsfSts(lib(SteinerTripleSystem::new(n, &raw))?));
        Ok(())
    })
}

/// Reads a system from a text file.
///
/// # Safety
/// `path` must be a NUL-terminated string and `out` must be valid.
#[no_mangle]
pub unsafe extern "C" fn stsf_sts_read(path: *const c_char, out: *mut *mut StsfSts) -> StsfStatus {
    guard(|| {
        let slot = out_arg(out)?;
        let path = str_arg(path, "path")?;
        *slot = boxed(StsfSts(lib(read_sts(path))?));
        Ok(())
    })
}

/// Doubles `base` to order `2n+1`; `tau` is `zero`, `one` or `seed:N`.
///
/// # Safety
/// `base` must be a live handle, `tau` a NUL-terminated string, `out` valid.
#[no_mangle]
pub unsafe extern "C" fn stsf_sts_assmuss_mattson(
    base: *const StsfSts,
    tau: *const c_char,
    out: *mut *mut StsfSts,
) -> StsfStatus {
    guard(|| {
        let slot = out_arg(out)?;
        let base = sts_arg(base)?;
        let tau = tau_for(str_arg(tau, "tau")?, base)?;
        *slot = boxed(StsfSts(lib(assmuss_mattson(base, &tau))?));
        Ok(())
    })
}

/// Number of points, 0 for a null handle.
///
/// # Safety
/// `sts` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn stsf_sts_order(sts: *const StsfSts) -> u32 {
    sts.as_ref().map_or(0, |h| h.0.order())
}

/// Number of blocks, 0 for a null handle.
///
/// # Safety
/// `sts` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn stsf_sts_block_count(sts: *const StsfSts) -> usize {
    sts.as_ref().map_or(0, |h| h.0.block_count())
}

/// Writes the three points of block `index` to `out[0..3]`.
///
/// # Safety
/// `sts` must be a live handle and `out` must have room for three values.
#[no_mangle]
pub unsafe extern "C" fn stsf_sts_block(sts: *const StsfSts, index: usize, out: *mut u32) -> StsfStatus {
    guard(|| {
        let sts = sts_arg(sts)?;
        if out.is_null() {
            return Err(invalid("output pointer is null"));
        }
        let t = sts.blocks().get(index).ok_or_else(|| invalid(&format!("block {index} out of range")))?;
        std::slice::from_raw_parts_mut(out, 3).copy_from_slice(&t.points());
        Ok(())
    })
}

/// Rank over GF(2) of the block-point incidence matrix.
///
/// # Safety
/// `sts` must be a live handle and `out` valid.
#[no_mangle]
pub unsafe extern "C" fn stsf_sts_binary_rank(sts: *const StsfSts, out: *mut usize) -> StsfStatus {
    guard(|| {
        let sts = sts_arg(sts)?;
        let out = out.as_mut().ok_or_else(|| invalid("output pointer is null"))?;
        *out = binary_rank(sts);
        Ok(())
    })
}

/// Releases a system. Null is ignored.
///
/// # Safety
/// `sts` must be null or a handle not yet freed.
#[no_mangle]
pub unsafe extern "C" fn stsf_sts_free(sts: *mut StsfSts) {
    if !sts.is_null() {
        drop(Box::from_raw(sts));
    }
}

/// Zero-sum flow of value at most 5 on the doubling of `base` by `tau`.
///
/// # Safety
/// `base` must be a live handle, `tau` a NUL-terminated string, `out` valid.
#[no_mangle]
pub unsafe extern "C" fn stsf_flow_am_five(
    base: *const StsfSts,
    tau: *const c_char,
    out: *mut *mut StsfFlowCert,
) -> StsfStatus {
    guard(|| {
        let slot = out_arg(out)?;
        let base = sts_arg(base)?;
        let tau = tau_for(str_arg(tau, "tau")?, base)?;
        *slot = boxed(StsfFlowCert(lib(am_five_flow(base, &tau))?.certificate));
        Ok(())
    })
}

/// Smallest-value flow up to `max_value`. Returns `INFEASIBLE` with `*out`
/// null when there is none.
///
/// # Safety
/// `sts` must be a live handle and `out` valid.
#[no_mangle]
pub unsafe extern "C" fn stsf_flow_search(
    sts: *const StsfSts,
    max_value: i64,
    out: *mut *mut StsfFlowCert,
) -> StsfStatus {
    guard(|| {
        let slot = out_arg(out)?;
        let sts = sts_arg(sts)?;
        match lib(min_flow_search(sts, max_value))? {
            Some(c) => {
                *slot = boxed(StsfFlowCert(c));
                Ok(())
            }
            None => Err((StsfStatus::Infeasible, format!("no flow of value at most {max_value}"))),
        }
    })
}

/// Parses and re-verifies a JSON certificate.
///
/// # Safety
/// `json` must be a NUL-terminated string and `out` valid.
#[no_mangle]
pub unsafe extern "C" fn stsf_cert_from_json(json: *const c_char, out: *mut *mut StsfFlowCert) -> StsfStatus {
    guard(|| {
        let slot = out_arg(out)?;
        let text = str_arg(json, "json")?;
        *slot = boxed(StsfFlowCert(lib(FlowCertificate::from_json(text))?));
        Ok(())
    })
}

/// `‖v‖∞ + 1`, 0 for a null handle.
///
/// # Safety
/// `cert` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn stsf_cert_value(cert: *const StsfFlowCert) -> i64 {
    cert.as_ref().map_or(0, |h| h.0.value())
}

/// Length of the flow vector, 0 for a null handle.
///
/// # Safety
/// `cert` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn stsf_cert_len(cert: *const StsfFlowCert) -> usize {
    cert.as_ref().map_or(0, |h| h.0.v().len())
}

/// Copies the flow vector into `buf`, which must hold `len` values with
/// `len` equal to [`stsf_cert_len`].
///
/// # Safety
/// `cert` must be a live handle and `buf` must have room for `len` values.
#[no_mangle]
pub unsafe extern "C" fn stsf_cert_entries(cert: *const StsfFlowCert, buf: *mut i64, len: usize) -> StsfStatus {
    guard(|| {
        let v = cert_arg(cert)?.v();
        if buf.is_null() {
            return Err(invalid("buffer is null"));
        }
        if len != v.len() {
            return Err(invalid(&format!("buffer holds {len} values, flow has {}", v.len())));
        }
        std::slice::from_raw_parts_mut(buf, len).copy_from_slice(v);
        Ok(())
    })
}

/// The system the certificate is about, as a new handle.
///
/// # Safety
/// `cert` must be a live handle and `out` valid.
#[no_mangle]
pub unsafe extern "C" fn stsf_cert_sts(cert: *const StsfFlowCert, out: *mut *mut StsfSts) -> StsfStatus {
    guard(|| {
        let slot = out_arg(out)?;
        *slot = boxed(StsfSts(cert_arg(cert)?.sts().clone()));
        Ok(())
    })
}

/// Serializes a certificate. Release the string with [`stsf_string_free`].
///
/// # Safety
/// `cert` must be a live handle and `out` valid.
#[no_mangle]
pub unsafe extern "C" fn stsf_cert_to_json(cert: *const StsfFlowCert, out: *mut *mut c_char) -> StsfStatus {
    guard(|| {
        let slot = out_arg(out)?;
        let text = cert_arg(cert)?.to_json();
        *slot = CString::new(text).map_err(|e| (StsfStatus::Internal, e.to_string()))?.into_raw();
        Ok(())
    })
}

/// Releases a certificate. Null is ignored.
///
/// # Safety
/// `cert` must be null or a handle not yet freed.
#[no_mangle]
pub unsafe extern "C" fn stsf_cert_free(cert: *mut StsfFlowCert) {
    if !cert.is_null() {
        drop(Box::from_raw(cert));
    }
}

/// Releases a string returned by this library. Null is ignored.
///
/// # Safety
/// `s` must be null or a string from this library not yet freed.
#[no_mangle]
pub unsafe extern "C" fn stsf_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Smallest `‖Wᵀu‖∞ + 1` over nowhere-zero first eigenvectors of `J(n,3)`, `n > 63`.
///
/// # Safety
/// `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn stsf_johnson_m1_jn3(n: u64, out: *mut u64) -> StsfStatus {
    guard(|| {
        let out = out.as_mut().ok_or_else(|| invalid("output pointer is null"))?;
        *out = lib(m1_jn3(n))?;
        Ok(())
    })
}
