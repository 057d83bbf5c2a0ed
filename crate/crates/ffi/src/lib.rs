//! C ABI over the tiling library.
//!
//! Handles are opaque pointers owning a tiled set; structured data crosses
//! the boundary as JSON in the same wire formats the command line reads and
//! writes. Every fallible function returns a status code, with zero for
//! success, and on failure stores a witness message in thread-local
//! storage, readable through [`mt_last_error_message`] until the next
//! failure on the same thread. Strings handed out through out-parameters
//! are NUL-terminated UTF-8 owned by the caller, to be released with
//! [`mt_string_free`]. Entry points catch panics, so no unwinding crosses
//! the boundary.
//!
//! The companion header `include/morsetiles.h` is regenerated by the build
//! script whenever this file changes.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};

use morsetiles::{
    analyze, boundary_simplex_shelling, boundary_triangle_fan, capped_cylinder_tiling,
    closed_simplex_tiling, handle_tiling, octahedron_tiling, product_shelling, product_tiling,
    sphere_torus_tiling, tiling_from_json, tiling_to_json, verify_shelling, verify_tiling,
    CliReport, Error, TiledSet,
};
use morsetiles::FormulaComparison;

/// A tiled simplicial complex with its tiles in claimed shelling order.
///
/// Constructions that measure their h-vector against a closed formula keep
/// the comparison here too, so it reaches the report.
pub struct MtTiling {
    set: TiledSet,
    comparison: Option<FormulaComparison>,
}

/// Status of an ABI call; zero is success.
#[repr(C)]
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum MtStatus {
    Ok = 0,
    /// A required pointer argument was null.
    NullArgument = 1,
    /// A string argument was not valid UTF-8.
    InvalidUtf8 = 2,
    /// The input was read but violates a constructor contract.
    BadInput = 3,
    /// A verification predicate rejected the object; the message names the
    /// first offending face or tile.
    FailedCheck = 4,
    /// A count or coefficient left the integer range.
    Overflow = 5,
    /// The requested dimension is out of the supported range.
    Unsupported = 6,
    /// An internal invariant failed.
    Panic = 7,
}

fn status_of(e: &Error) -> MtStatus {
    match e {
        Error::Overflow => MtStatus::Overflow,
        Error::UnsupportedDimension(_) => MtStatus::Unsupported,
        Error::EmptySimplex
        | Error::DuplicateVertexInSimplex(_)
        | Error::EmptyComplex
        | Error::InvalidComplex(_)
        | Error::InvalidMorseFace(_)
        | Error::NotBasic
        | Error::NotAMorseTile(_)
        | Error::InvalidStaircase(_)
        | Error::InvalidSpec(_)
        | Error::InvalidInput(_) => MtStatus::BadInput,
        _ => MtStatus::FailedCheck,
    }
}

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn fail(status: MtStatus, message: &str) -> MtStatus {
    let sanitized = message.replace('\0', " ");
    LAST_ERROR.with(|slot| {
        *slot.borrow_mut() = CString::new(sanitized).expect("NUL bytes were replaced");
    });
    status
}

fn fail_with(e: &Error) -> MtStatus {
    fail(status_of(e), &e.to_string())
}

fn guarded(f: impl FnOnce() -> MtStatus) -> MtStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(status) => status,
        Err(_) => fail(MtStatus::Panic, "internal panic"),
    }
}

/// Writes a fresh handle through `out`, which was already null-checked.
fn emit(
    out: *mut *mut MtTiling,
    set: TiledSet,
    comparison: Option<FormulaComparison>,
) -> MtStatus {
    unsafe { *out = Box::into_raw(Box::new(MtTiling { set, comparison })) };
    MtStatus::Ok
}

fn emit_string(out: *mut *mut c_char, text: String) -> MtStatus {
    let text = text.replace('\0', " ");
    unsafe {
        *out = CString::new(text)
            .expect("NUL bytes were replaced")
            .into_raw()
    };
    MtStatus::Ok
}

/// Library version as a static string; do not free.
#[no_mangle]
pub extern "C" fn mt_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}

/// Message of the last failure on this thread, empty before any failure.
/// The pointer stays valid until the next failing call on the same thread;
/// do not free.
#[no_mangle]
pub extern "C" fn mt_last_error_message() -> *const c_char {
    LAST_ERROR.with(|slot| slot.borrow().as_ptr())
}

/// Releases a string returned through an out-parameter. Null is ignored.
///
/// # Safety
/// `s` must have come from this library and not have been freed before.
#[no_mangle]
pub unsafe extern "C" fn mt_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(unsafe { CString::from_raw(s) });
    }
}

/// Releases a tiling handle. Null is ignored.
///
/// # Safety
/// `t` must have come from this library and not have been freed before.
#[no_mangle]
pub unsafe extern "C" fn mt_tiling_free(t: *mut MtTiling) {
    if !t.is_null() {
        drop(unsafe { Box::from_raw(t) });
    }
}

macro_rules! out_or_bail {
    ($out:expr) => {
        if $out.is_null() {
            return fail(MtStatus::NullArgument, "out is null");
        }
    };
}

unsafe fn tiling_or_bail<'a>(t: *const MtTiling) -> Result<&'a MtTiling, MtStatus> {
    unsafe { t.as_ref() }.ok_or_else(|| fail(MtStatus::NullArgument, "tiling handle is null"))
}

/// The closed n-simplex as a single closed tile.
///
/// # Safety
/// `out` must be a valid location for a pointer.
#[no_mangle]
pub unsafe extern "C" fn mt_closed_simplex_tiling(n: usize, out: *mut *mut MtTiling) -> MtStatus {
    guarded(|| {
        out_or_bail!(out);
        match closed_simplex_tiling(n) {
            Ok(ts) => emit(out, ts, None),
            Err(e) => fail_with(&e),
        }
    })
}

/// Shelling of the boundary of the (n+1)-simplex, an n-sphere.
///
/// # Safety
/// `out` must be a valid location for a pointer.
#[no_mangle]
pub unsafe extern "C" fn mt_boundary_simplex_shelling(
    n: usize,
    out: *mut *mut MtTiling,
) -> MtStatus {
    guarded(|| {
        out_or_bail!(out);
        emit(out, boundary_simplex_shelling(n), None)
    })
}

/// The boundary of a triangle tiled as a fan: one closed vertex, the rest
/// half-open edges.
///
/// # Safety
/// `out` must be a valid location for a pointer.
#[no_mangle]
pub unsafe extern "C" fn mt_boundary_triangle_fan(out: *mut *mut MtTiling) -> MtStatus {
    guarded(|| {
        out_or_bail!(out);
        emit(out, boundary_triangle_fan(), None)
    })
}

/// Morse shelling of the octahedron with critical tiles of index 0, 1, 2.
///
/// # Safety
/// `out` must be a valid location for a pointer.
#[no_mangle]
pub unsafe extern "C" fn mt_octahedron_tiling(out: *mut *mut MtTiling) -> MtStatus {
    guarded(|| {
        out_or_bail!(out);
        emit(out, octahedron_tiling(), None)
    })
}

/// Morse shelling of a cylinder capped by a disc, with two index-2
/// critical tiles.
///
/// # Safety
/// `out` must be a valid location for a pointer.
#[no_mangle]
pub unsafe extern "C" fn mt_capped_cylinder_tiling(out: *mut *mut MtTiling) -> MtStatus {
    guarded(|| {
        out_or_bail!(out);
        emit(out, capped_cylinder_tiling(), None)
    })
}

/// Morse shelling of the product of an open k-simplex with a closed
/// (n-k)-simplex, the n-dimensional handle of index k.
///
/// # Safety
/// `out` must be a valid location for a pointer.
#[no_mangle]
pub unsafe extern "C" fn mt_handle_tiling(k: usize, n: usize, out: *mut *mut MtTiling) -> MtStatus {
    guarded(|| {
        out_or_bail!(out);
        match handle_tiling(k, n) {
            Ok(ts) => emit(out, ts, None),
            Err(e) => fail_with(&e),
        }
    })
}

/// Shelled primitive triangulation of the product of two closed simplices.
///
/// # Safety
/// `out` must be a valid location for a pointer.
#[no_mangle]
pub unsafe extern "C" fn mt_product_shelling(
    n: usize,
    m: usize,
    out: *mut *mut MtTiling,
) -> MtStatus {
    guarded(|| {
        out_or_bail!(out);
        match product_shelling(n, m) {
            Ok(ts) => emit(out, ts, None),
            Err(e) => fail_with(&e),
        }
    })
}

/// Shelling of the product of an n-sphere with an m-torus, m >= 1, using
/// no critical tile. The handle keeps the h-vector formula comparison; it
/// shows up in the report.
///
/// # Safety
/// `out` must be a valid location for a pointer.
#[no_mangle]
pub unsafe extern "C" fn mt_sphere_torus_tiling(
    n: usize,
    m: usize,
    out: *mut *mut MtTiling,
) -> MtStatus {
    guarded(|| {
        out_or_bail!(out);
        match sphere_torus_tiling(n, m) {
            Ok((ts, comparison)) => emit(out, ts, Some(comparison)),
            Err(e) => fail_with(&e),
        }
    })
}

/// Morse shelling of the product of two tame tilings, critical tiles
/// multiplying pairwise with indices adding.
///
/// # Safety
/// `a` and `b` must be live handles and `out` a valid location for a
/// pointer.
#[no_mangle]
pub unsafe extern "C" fn mt_tiling_product(
    a: *const MtTiling,
    b: *const MtTiling,
    out: *mut *mut MtTiling,
) -> MtStatus {
    guarded(|| {
        out_or_bail!(out);
        let (a, b) = match (unsafe { tiling_or_bail(a) }, unsafe { tiling_or_bail(b) }) {
            (Ok(a), Ok(b)) => (a, b),
            (Err(status), _) | (_, Err(status)) => return status,
        };
        match product_tiling(&a.set, &b.set) {
            Ok(ts) => emit(out, ts, None),
            Err(e) => fail_with(&e),
        }
    })
}

/// Reads a tiling from its JSON wire form and verifies that the tiles tile
/// the complex. The shelling flag is measured from the listed order, not
/// trusted.
///
/// # Safety
/// `json` must be a NUL-terminated string and `out` a valid location for a
/// pointer.
#[no_mangle]
pub unsafe extern "C" fn mt_tiling_from_json(
    json: *const c_char,
    out: *mut *mut MtTiling,
) -> MtStatus {
    guarded(|| {
        out_or_bail!(out);
        if json.is_null() {
            return fail(MtStatus::NullArgument, "json is null");
        }
        let text = match unsafe { CStr::from_ptr(json) }.to_str() {
            Ok(text) => text,
            Err(e) => return fail(MtStatus::InvalidUtf8, &e.to_string()),
        };
        let value = match serde_json::from_str(text) {
            Ok(value) => value,
            Err(e) => return fail(MtStatus::BadInput, &format!("malformed JSON: {e}")),
        };
        let ts = match tiling_from_json(&value) {
            Ok(ts) => ts,
            Err(e) => return fail_with(&e),
        };
        if let Err(e) = verify_tiling(&ts) {
            return fail_with(&e);
        }
        emit(out, ts, None)
    })
}

/// Prints a tiling in its JSON wire form.
///
/// # Safety
/// `t` must be a live handle and `out` a valid location for a pointer.
#[no_mangle]
pub unsafe extern "C" fn mt_tiling_to_json(
    t: *const MtTiling,
    out: *mut *mut c_char,
) -> MtStatus {
    guarded(|| {
        out_or_bail!(out);
        let t = match unsafe { tiling_or_bail(t) } {
            Ok(t) => t,
            Err(status) => return status,
        };
        emit_string(out, tiling_to_json(&t.set).to_string())
    })
}

/// Re-runs the tiling checks, or the full shelling check when
/// `as_shelling` is set. Zero means the property holds; a failed check
/// leaves its witness in the error message.
///
/// # Safety
/// `t` must be a live handle.
#[no_mangle]
pub unsafe extern "C" fn mt_tiling_verify(t: *const MtTiling, as_shelling: bool) -> MtStatus {
    guarded(|| {
        let t = match unsafe { tiling_or_bail(t) } {
            Ok(t) => t,
            Err(status) => return status,
        };
        let outcome = if as_shelling {
            verify_shelling(&t.set)
        } else {
            verify_tiling(&t.set)
        };
        match outcome {
            Ok(()) => MtStatus::Ok,
            Err(e) => fail_with(&e),
        }
    })
}

/// Prints the measured summary as JSON: h- and c-vectors with palindromy
/// flags, Euler characteristic, purity, the critical census and, when the
/// construction carried one, the formula comparison. Pass the hint when
/// the tiled set is a closed manifold of even dimension to have the
/// Dehn-Sommerville check included.
///
/// # Safety
/// `t` must be a live handle and `out` a valid location for a pointer.
#[no_mangle]
pub unsafe extern "C" fn mt_tiling_report_json(
    t: *const MtTiling,
    closed_manifold_hint: bool,
    out: *mut *mut c_char,
) -> MtStatus {
    guarded(|| {
        out_or_bail!(out);
        let t = match unsafe { tiling_or_bail(t) } {
            Ok(t) => t,
            Err(status) => return status,
        };
        let report = analyze(&t.set, closed_manifold_hint);
        let cli = CliReport::new(&report, t.comparison.clone());
        let text = serde_json::to_string(&cli).expect("report fields serialize");
        emit_string(out, text)
    })
}

/// Number of tiles.
///
/// # Safety
/// `t` must be a live handle and `out` a valid location for a usize.
#[no_mangle]
pub unsafe extern "C" fn mt_tiling_tile_count(t: *const MtTiling, out: *mut usize) -> MtStatus {
    guarded(|| {
        out_or_bail!(out);
        let t = match unsafe { tiling_or_bail(t) } {
            Ok(t) => t,
            Err(status) => return status,
        };
        unsafe { *out = t.set.tiles.len() };
        MtStatus::Ok
    })
}

/// Euler characteristic of the underlying complex.
///
/// # Safety
/// `t` must be a live handle and `out` a valid location for an i64.
#[no_mangle]
pub unsafe extern "C" fn mt_tiling_euler(t: *const MtTiling, out: *mut i64) -> MtStatus {
    guarded(|| {
        out_or_bail!(out);
        let t = match unsafe { tiling_or_bail(t) } {
            Ok(t) => t,
            Err(status) => return status,
        };
        match t.set.complex.euler_characteristic() {
            Ok(euler) => {
                unsafe { *out = euler };
                MtStatus::Ok
            }
            Err(e) => fail_with(&e),
        }
    })
}

/// Whether the tile order was verified to be a shelling when the handle
/// was built.
///
/// # Safety
/// `t` must be a live handle and `out` a valid location for a bool.
#[no_mangle]
pub unsafe extern "C" fn mt_tiling_is_shelling(t: *const MtTiling, out: *mut bool) -> MtStatus {
    guarded(|| {
        out_or_bail!(out);
        let t = match unsafe { tiling_or_bail(t) } {
            Ok(t) => t,
            Err(status) => return status,
        };
        unsafe { *out = t.set.is_shelling };
        MtStatus::Ok
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::Value;
    use std::ptr;

    fn message() -> String {
        unsafe { CStr::from_ptr(mt_last_error_message()) }
            .to_str()
            .unwrap()
            .to_owned()
    }

    fn take_string(s: *mut c_char) -> String {
        assert!(!s.is_null());
        let text = unsafe { CStr::from_ptr(s) }.to_str().unwrap().to_owned();
        unsafe { mt_string_free(s) };
        text
    }

    #[test]
    fn product_round_trips_through_json() {
        unsafe {
            let mut h: *mut MtTiling = ptr::null_mut();
            assert_eq!(mt_product_shelling(2, 2, &mut h), MtStatus::Ok);
            let mut count = 0usize;
            assert_eq!(mt_tiling_tile_count(h, &mut count), MtStatus::Ok);
            assert_eq!(count, 6);

            let mut json: *mut c_char = ptr::null_mut();
            assert_eq!(mt_tiling_to_json(h, &mut json), MtStatus::Ok);
            let text = take_string(json);
            let c = CString::new(text).unwrap();
            let mut back: *mut MtTiling = ptr::null_mut();
            assert_eq!(mt_tiling_from_json(c.as_ptr(), &mut back), MtStatus::Ok);

            let mut shelled = false;
            assert_eq!(mt_tiling_is_shelling(back, &mut shelled), MtStatus::Ok);
            assert!(shelled, "the wire order is the shelling order");
            let mut euler = 0i64;
            assert_eq!(mt_tiling_euler(back, &mut euler), MtStatus::Ok);
            assert_eq!(euler, 1);

            mt_tiling_free(h);
            mt_tiling_free(back);
        }
    }

    #[test]
    fn catalog_pieces_multiply() {
        unsafe {
            let mut fan: *mut MtTiling = ptr::null_mut();
            let mut oct: *mut MtTiling = ptr::null_mut();
            assert_eq!(mt_boundary_triangle_fan(&mut fan), MtStatus::Ok);
            assert_eq!(mt_octahedron_tiling(&mut oct), MtStatus::Ok);

            let mut prod: *mut MtTiling = ptr::null_mut();
            assert_eq!(mt_tiling_product(fan, oct, &mut prod), MtStatus::Ok);
            assert_eq!(mt_tiling_verify(prod, false), MtStatus::Ok);

            // the fan is a tiling but no shelling (its first tile is not
            // closed), so the product order fails the stronger check
            let mut shelled = true;
            assert_eq!(mt_tiling_is_shelling(prod, &mut shelled), MtStatus::Ok);
            assert!(!shelled);
            assert_eq!(mt_tiling_verify(prod, true), MtStatus::FailedCheck);
            assert!(message().contains("prefix"));

            // fan has no critical tile, so neither does the product
            let mut json: *mut c_char = ptr::null_mut();
            assert_eq!(mt_tiling_report_json(prod, false, &mut json), MtStatus::Ok);
            let report: Value = serde_json::from_str(&take_string(json)).unwrap();
            assert_eq!(report["critical_tiles"], serde_json::json!([]));
            assert_eq!(report["euler"], serde_json::json!(0));
            assert_eq!(report["pure"], serde_json::json!(true));

            mt_tiling_free(fan);
            mt_tiling_free(oct);
            mt_tiling_free(prod);
        }
    }

    #[test]
    fn reports_carry_census_and_comparison() {
        unsafe {
            let mut oct: *mut MtTiling = ptr::null_mut();
            assert_eq!(mt_octahedron_tiling(&mut oct), MtStatus::Ok);
            let mut json: *mut c_char = ptr::null_mut();
            assert_eq!(mt_tiling_report_json(oct, true, &mut json), MtStatus::Ok);
            let report: Value = serde_json::from_str(&take_string(json)).unwrap();
            assert_eq!(report["h"], serde_json::json!([1, 4, 1, 2]));
            assert_eq!(report["euler"], serde_json::json!(2));
            assert!(report["formula_comparison"].is_null());
            mt_tiling_free(oct);

            let mut torus: *mut MtTiling = ptr::null_mut();
            assert_eq!(mt_sphere_torus_tiling(1, 1, &mut torus), MtStatus::Ok);
            assert_eq!(mt_tiling_report_json(torus, false, &mut json), MtStatus::Ok);
            let report: Value = serde_json::from_str(&take_string(json)).unwrap();
            assert_eq!(report["critical_tiles"], serde_json::json!([]));
            assert!(report["formula_comparison"].is_object());
            mt_tiling_free(torus);
        }
    }

    #[test]
    fn failures_set_status_and_message() {
        unsafe {
            assert_eq!(
                mt_product_shelling(1, 1, ptr::null_mut()),
                MtStatus::NullArgument
            );
            assert_eq!(message(), "out is null");

            let mut h: *mut MtTiling = ptr::null_mut();
            let garbage = CString::new("not json").unwrap();
            assert_eq!(
                mt_tiling_from_json(garbage.as_ptr(), &mut h),
                MtStatus::BadInput
            );
            assert!(message().contains("malformed JSON"));

            let bytes = [0xffu8, 0];
            assert_eq!(
                mt_tiling_from_json(bytes.as_ptr().cast(), &mut h),
                MtStatus::InvalidUtf8
            );

            assert_eq!(mt_tiling_verify(ptr::null(), false), MtStatus::NullArgument);
        }
    }

    #[test]
    fn overlapping_tilings_fail_the_boundary_check() {
        unsafe {
            let mut h: *mut MtTiling = ptr::null_mut();
            assert_eq!(mt_product_shelling(1, 1, &mut h), MtStatus::Ok);
            let mut json: *mut c_char = ptr::null_mut();
            assert_eq!(mt_tiling_to_json(h, &mut json), MtStatus::Ok);
            mt_tiling_free(h);

            let mut wire: Value = serde_json::from_str(&take_string(json)).unwrap();
            let tiles = wire["tiles"].as_array_mut().unwrap();
            let dup = tiles[0].clone();
            tiles.push(dup);
            let c = CString::new(wire.to_string()).unwrap();
            let mut back: *mut MtTiling = ptr::null_mut();
            assert_eq!(
                mt_tiling_from_json(c.as_ptr(), &mut back),
                MtStatus::FailedCheck
            );
            assert!(message().contains("belongs to tiles"));
        }
    }

    #[test]
    fn statics_and_null_frees_are_harmless() {
        unsafe {
            assert!(!mt_version().is_null());
            mt_string_free(ptr::null_mut());
            mt_tiling_free(ptr::null_mut());
        }
    }
}
