//! C ABI over `lapcoef`.
//!
//! Trees cross the boundary as opaque `LcTree` handles. Every fallible call
//! returns an `LcStatus`; on failure a message is kept per thread and can be
//! fetched with `lc_last_error_message`. Strings handed out by this library
//! are NUL-terminated, owned by the caller, and released with
//! `lc_string_free`.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use lapcoef::cli::{cmd_verify, parse_verify_args};
use lapcoef::energy::{coulson_energy_of_subdivision, incidence_energy, lel};
use lapcoef::extremal::subdivision_matching_poly;
use lapcoef::laplacian::coefficients_via_subdivision;
use lapcoef::matchgen::tau_at;
use lapcoef::poly::{format_rational, parse_rational};
use lapcoef::trees::{
    canonical_code, make_broom, make_complete_d_ary_limited, make_greedy, make_path, make_star, RootedTree, Tree,
    DEFAULT_MAX_VERTICES,
};
use lapcoef::Error;

/// Result of every fallible call.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LcStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    InvalidJson = 3,
    InvalidArgument = 4,
    TooLarge = 5,
    /// A numerical routine failed (e.g. quadrature did not converge).
    Numerical = 6,
    /// A verification found violations; the report is still returned.
    Violation = 7,
    Panic = 8,
}

/// Opaque tree handle.
pub struct LcTree {
    inner: Tree,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: impl Into<String>) {
    let msg = msg.into().replace('\0', " ");
    LAST_ERROR.with(|e| *e.borrow_mut() = CString::new(msg).ok());
}

fn fail(status: LcStatus, msg: impl Into<String>) -> LcStatus {
    set_error(msg);
    status
}

fn status_of(e: &Error) -> LcStatus {
    match e {
        Error::TooLarge { .. } => LcStatus::TooLarge,
        Error::Quadrature { .. } => LcStatus::Numerical,
        _ => LcStatus::InvalidArgument,
    }
}

fn guard(f: impl FnOnce() -> LcStatus) -> LcStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(s) => s,
        Err(_) => fail(LcStatus::Panic, "panic inside lapcoef"),
    }
}

unsafe fn read_str<'a>(s: *const c_char) -> Result<&'a str, LcStatus> {
    if s.is_null() {
        return Err(fail(LcStatus::NullPointer, "null string argument"));
    }
    CStr::from_ptr(s)
        .to_str()
        .map_err(|_| fail(LcStatus::InvalidUtf8, "argument is not valid UTF-8"))
}

unsafe fn tree_ref<'a>(t: *const LcTree) -> Result<&'a Tree, LcStatus> {
    t.as_ref()
        .map(|h| &h.inner)
        .ok_or_else(|| fail(LcStatus::NullPointer, "null tree handle"))
}

unsafe fn put_string(out: *mut *mut c_char, s: String) -> LcStatus {
    if out.is_null() {
        return fail(LcStatus::NullPointer, "null output pointer");
    }
    match CString::new(s) {
        Ok(c) => {
            *out = c.into_raw();
            LcStatus::Ok
        }
        Err(_) => fail(LcStatus::Panic, "output contained a NUL byte"),
    }
}

unsafe fn put_tree(out: *mut *mut LcTree, r: Result<Tree, Error>) -> LcStatus {
    if out.is_null() {
        return fail(LcStatus::NullPointer, "null output pointer");
    }
    match r {
        Ok(t) => {
            *out = Box::into_raw(Box::new(LcTree { inner: t }));
            LcStatus::Ok
        }
        Err(e) => fail(status_of(&e), e.to_string()),
    }
}

unsafe fn put_f64(out: *mut f64, v: f64) -> LcStatus {
    if out.is_null() {
        return fail(LcStatus::NullPointer, "null output pointer");
    }
    *out = v;
    LcStatus::Ok
}

fn limited(n: usize) -> Result<usize, Error> {
    if n > DEFAULT_MAX_VERTICES {
        return Err(Error::TooLarge {
            requested: n as u128,
            limit: DEFAULT_MAX_VERTICES,
        });
    }
    Ok(n)
}

/// Message of the last failure on this thread, or NULL. Free with
/// `lc_string_free`.
#[no_mangle]
pub extern "C" fn lc_last_error_message() -> *mut c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null_mut(), |m| m.clone().into_raw()))
}

/// # Safety
/// `s` must be NULL or a string returned by this library, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn lc_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// # Safety
/// `t` must be NULL or a handle returned by this library, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn lc_tree_free(t: *mut LcTree) {
    if !t.is_null() {
        drop(Box::from_raw(t));
    }
}

/// Parse `{"n": .., "edges": [[a, b], ..]}`.
///
/// # Safety
/// `json` must be a NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn lc_tree_from_json(json: *const c_char, out: *mut *mut LcTree) -> LcStatus {
    guard(|| {
        let s = match read_str(json) {
            Ok(s) => s,
            Err(st) => return st,
        };
        match Tree::from_json(s) {
            Ok(t) => put_tree(out, Ok(t)),
            Err(e) => fail(LcStatus::InvalidJson, e.to_string()),
        }
    })
}

/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn lc_tree_path(n: usize, out: *mut *mut LcTree) -> LcStatus {
    guard(|| put_tree(out, limited(n).and_then(make_path)))
}

/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn lc_tree_star(n: usize, out: *mut *mut LcTree) -> LcStatus {
    guard(|| put_tree(out, limited(n).and_then(make_star)))
}

/// Greedy tree of order `n` and maximum degree `dplus1`.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn lc_tree_greedy(n: usize, dplus1: usize, out: *mut *mut LcTree) -> LcStatus {
    guard(|| put_tree(out, limited(n).and_then(|n| make_greedy(n, dplus1))))
}

/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn lc_tree_broom(n: usize, dplus1: usize, out: *mut *mut LcTree) -> LcStatus {
    guard(|| put_tree(out, limited(n).and_then(|n| make_broom(n, dplus1))))
}

/// Complete `d`-ary tree of height `h`, root 0.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn lc_tree_complete_dary(d: usize, h: usize, out: *mut *mut LcTree) -> LcStatus {
    guard(|| {
        put_tree(
            out,
            make_complete_d_ary_limited(d, h, DEFAULT_MAX_VERTICES).map(RootedTree::into_tree),
        )
    })
}

/// Number of vertices, or 0 for a NULL handle.
///
/// # Safety
/// `t` must be NULL or a live handle.
#[no_mangle]
pub unsafe extern "C" fn lc_tree_order(t: *const LcTree) -> usize {
    t.as_ref().map_or(0, |h| h.inner.order())
}

unsafe fn string_of(t: *const LcTree, out: *mut *mut c_char, f: impl FnOnce(&Tree) -> String) -> LcStatus {
    guard(|| match tree_ref(t) {
        Ok(t) => put_string(out, f(t)),
        Err(st) => st,
    })
}

/// Tree JSON.
///
/// # Safety
/// `t` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn lc_tree_to_json(t: *const LcTree, out: *mut *mut c_char) -> LcStatus {
    string_of(t, out, |t| t.to_json())
}

/// Canonical code of the free tree, as hex.
///
/// # Safety
/// `t` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn lc_tree_canonical_code(t: *const LcTree, out: *mut *mut c_char) -> LcStatus {
    string_of(t, out, |t| canonical_code(t).to_hex())
}

/// Laplacian coefficients `[c_0, .., c_n]` as a JSON array of decimal strings.
///
/// # Safety
/// `t` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn lc_tree_coefficients_json(t: *const LcTree, out: *mut *mut c_char) -> LcStatus {
    string_of(t, out, |t| serde_json::to_string(&coefficients_via_subdivision(t)).expect("coefficients serialize"))
}

/// Matching polynomial of the subdivision, coefficients from degree 0, as a
/// JSON array of decimal strings.
///
/// # Safety
/// `t` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn lc_tree_subdivision_matching_json(t: *const LcTree, out: *mut *mut c_char) -> LcStatus {
    string_of(t, out, |t| serde_json::to_string(&subdivision_matching_poly(t)).expect("polynomial serializes"))
}

/// # Safety
/// `t` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn lc_tree_incidence_energy(t: *const LcTree, out: *mut f64) -> LcStatus {
    guard(|| match tree_ref(t) {
        Ok(t) => put_f64(out, incidence_energy(t)),
        Err(st) => st,
    })
}

/// # Safety
/// `t` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn lc_tree_lel(t: *const LcTree, out: *mut f64) -> LcStatus {
    guard(|| match tree_ref(t) {
        Ok(t) => put_f64(out, lel(t)),
        Err(st) => st,
    })
}

/// Energy of the subdivision from the Coulson integral.
///
/// # Safety
/// `t` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn lc_tree_coulson_energy(t: *const LcTree, out: *mut f64) -> LcStatus {
    guard(|| match tree_ref(t) {
        Ok(t) => match coulson_energy_of_subdivision(t) {
            Ok(v) => put_f64(out, v),
            Err(e) => fail(status_of(&e), e.to_string()),
        },
        Err(st) => st,
    })
}

/// `tau(S(T), x)` with `T` rooted at `root`; `x` and the result are "p/q"
/// strings.
///
/// # Safety
/// `t` must be a live handle, `x` a NUL-terminated string, `out` writable.
#[no_mangle]
pub unsafe extern "C" fn lc_tree_tau(
    t: *const LcTree,
    root: usize,
    x: *const c_char,
    out: *mut *mut c_char,
) -> LcStatus {
    guard(|| {
        let (t, x) = match (tree_ref(t), read_str(x)) {
            (Ok(t), Ok(x)) => (t, x),
            (Err(st), _) | (_, Err(st)) => return st,
        };
        let r = parse_rational(x)
            .and_then(|x| RootedTree::new(t.clone(), root).and_then(|rt| tau_at(&rt, &x, true)));
        match r {
            Ok(v) => put_string(out, format_rational(&v)),
            Err(e) => fail(status_of(&e), e.to_string()),
        }
    })
}

/// Run a verification with command-line style arguments, e.g.
/// `"thm37 --n 4..9 --dplus1 3"`, and return the report text.
///
/// Returns `LC_STATUS_VIOLATION` (with the report) when violations are found.
///
/// # Safety
/// `args` must be a NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn lc_verify(args: *const c_char, out: *mut *mut c_char) -> LcStatus {
    guard(|| {
        let args = match read_str(args) {
            Ok(s) => s,
            Err(st) => return st,
        };
        let mut v = match parse_verify_args(args.split_whitespace()) {
            Ok(v) => v,
            Err(e) => return fail(LcStatus::InvalidArgument, e),
        };
        // Output goes back through `out`, never to a file.
        v.out = None;
        let mut buf = Vec::new();
        match cmd_verify(&v, &mut buf) {
            Ok(code) => {
                let st = put_string(out, String::from_utf8(buf).expect("report is UTF-8"));
                if st == LcStatus::Ok && code != 0 {
                    fail(LcStatus::Violation, "verification found violations")
                } else {
                    st
                }
            }
            Err(e) => fail(LcStatus::InvalidArgument, e.to_string()),
        }
    })
}
