//! C ABI for `lscrystal`.
//!
//! Paths are opaque `LscPath` handles owned by the caller and released with
//! `lsc_path_free`. Strings returned through `char **` out-parameters are
//! owned by the caller and released with `lsc_string_free`. Every function
//! returns an `LscStatus`; on failure `lsc_last_error` describes the problem
//! for the calling thread.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use lscrystal::analysis::{decide_connectedness, explore, Check, Connectedness, ExploreConfig, Limits};
use lscrystal::cli::exit_code;
use lscrystal::json::{path_from_json, path_to_json};
use lscrystal::lspath::{shape_orbit, Op};
use lscrystal::{classify, CartanData, Error, LSPath, RootIndex, Weight};
use num_traits::ToPrimitive;

/// Status codes; the nonzero values match the CLI exit codes.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LscStatus {
    Ok = 0,
    Violation = 1,
    BadCartan = 2,
    BadWeight = 3,
    BadPath = 4,
    BadConfig = 5,
    NullArgument = 6,
    Panic = 7,
}

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LscConnectedness {
    Connected = 0,
    InfinitelyManyComponents = 1,
    NotStar = 2,
}

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LscOp {
    E = 0,
    F = 1,
}

/// Opaque LS path handle.
pub struct LscPath(LSPath);

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: impl Into<String>) {
    let msg = msg.into().replace('\0', " ");
    LAST_ERROR.with(|e| *e.borrow_mut() = CString::new(msg).ok());
}

fn status_of(e: &Error) -> LscStatus {
    match exit_code(e) {
        1 => LscStatus::Violation,
        2 => LscStatus::BadCartan,
        3 => LscStatus::BadWeight,
        4 => LscStatus::BadPath,
        _ => LscStatus::BadConfig,
    }
}

struct Fail(LscStatus, String);

impl From<Error> for Fail {
    fn from(e: Error) -> Self {
        Fail(status_of(&e), e.to_string())
    }
}

fn null(what: &str) -> Fail {
    Fail(LscStatus::NullArgument, format!("`{what}` is null"))
}

fn guard(f: impl FnOnce() -> Result<LscStatus, Fail>) -> LscStatus {
    LAST_ERROR.with(|e| *e.borrow_mut() = None);
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(s)) => s,
        Ok(Err(Fail(s, msg))) => {
            set_error(msg);
            s
        }
        Err(p) => {
            let msg = p
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_else(|| "panic".into());
            set_error(format!("internal panic: {msg}"));
            LscStatus::Panic
        }
    }
}

fn give_string(out: *mut *mut c_char, s: String) -> Result<(), Fail> {
    let c = CString::new(s).map_err(|_| Fail(LscStatus::Panic, "interior NUL in output".into()))?;
    unsafe { *out = c.into_raw() };
    Ok(())
}

fn give_path(out: *mut *mut LscPath, p: Option<LSPath>) {
    let raw = p.map_or(ptr::null_mut(), |p| Box::into_raw(Box::new(LscPath(p))));
    unsafe { *out = raw };
}

fn read_str<'a>(s: *const c_char, what: &str) -> Result<&'a str, Fail> {
    if s.is_null() {
        return Err(null(what));
    }
    unsafe { CStr::from_ptr(s) }
        .to_str()
        .map_err(|_| Fail(LscStatus::BadConfig, format!("`{what}` is not UTF-8")))
}

fn path_ref<'a>(p: *const LscPath) -> Result<&'a LSPath, Fail> {
    if p.is_null() {
        return Err(null("path"));
    }
    Ok(unsafe { &(*p).0 })
}

fn root(i: u8) -> Result<RootIndex, Fail> {
    RootIndex::from_u8(i).ok_or_else(|| Fail(LscStatus::BadConfig, format!("root index must be 1 or 2, got {i}")))
}

fn shape(a: i64, b: i64, k: i64, l: i64) -> Result<(CartanData, Weight), Fail> {
    Ok((CartanData::new(a, b)?, Weight::from_i64(k, l)))
}

/// Message for the last failure on this thread, or NULL. Valid until the
/// next `lsc_*` call on the same thread.
#[no_mangle]
pub extern "C" fn lsc_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

/// Library version as a static NUL-terminated string.
#[no_mangle]
pub extern "C" fn lsc_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}

/// Release a string returned by this library. NULL is ignored.
///
/// # Safety
/// `s` must come from an `lsc_*` out-parameter and not be freed twice.
#[no_mangle]
pub unsafe extern "C" fn lsc_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Release a path handle. NULL is ignored.
///
/// # Safety
/// `p` must come from this library and not be freed twice.
#[no_mangle]
pub unsafe extern "C" fn lsc_path_free(p: *mut LscPath) {
    if !p.is_null() {
        drop(Box::from_raw(p));
    }
}

/// Classification of the orbit of `kΛ1 + lΛ2` as a JSON object.
///
/// # Safety
/// `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn lsc_classify(a: i64, b: i64, k: i64, l: i64, out: *mut *mut c_char) -> LscStatus {
    guard(|| {
        if out.is_null() {
            return Err(null("out"));
        }
        let (c, w) = shape(a, b, k, l)?;
        let cls = classify(c, &w)?;
        let v = serde_json::json!({
            "cartan": [a, b],
            "lambda": w,
            "classification": cls,
            "connectedness": decide_connectedness(c, &w),
        });
        give_string(out, v.to_string())?;
        Ok(LscStatus::Ok)
    })
}

/// # Safety
/// `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn lsc_decide_connectedness(
    a: i64,
    b: i64,
    k: i64,
    l: i64,
    out: *mut LscConnectedness,
) -> LscStatus {
    guard(|| {
        if out.is_null() {
            return Err(null("out"));
        }
        let (c, w) = shape(a, b, k, l)?;
        if w.is_zero() {
            return Err(Error::ZeroWeight.into());
        }
        let v = match decide_connectedness(c, &w) {
            Connectedness::Connected => LscConnectedness::Connected,
            Connectedness::InfinitelyManyComponents => LscConnectedness::InfinitelyManyComponents,
            Connectedness::NotStar => LscConnectedness::NotStar,
        };
        *out = v;
        Ok(LscStatus::Ok)
    })
}

/// The straight path `π_λ` for `λ = kΛ1 + lΛ2`.
///
/// # Safety
/// `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn lsc_path_pi_lambda(a: i64, b: i64, k: i64, l: i64, out: *mut *mut LscPath) -> LscStatus {
    guard(|| {
        if out.is_null() {
            return Err(null("out"));
        }
        let (c, w) = shape(a, b, k, l)?;
        let p = LSPath::pi_lambda(shape_orbit(c, w)?)?;
        give_path(out, Some(p));
        Ok(LscStatus::Ok)
    })
}

/// Parse and validate a path JSON record.
///
/// # Safety
/// `json` must be NUL-terminated and `out` valid.
#[no_mangle]
pub unsafe extern "C" fn lsc_path_from_json(json: *const c_char, out: *mut *mut LscPath) -> LscStatus {
    guard(|| {
        if out.is_null() {
            return Err(null("out"));
        }
        let text = read_str(json, "json")?;
        let p = path_from_json(text).map_err(|e| match e {
            Error::Parse(m) => Fail(LscStatus::BadPath, m),
            other => other.into(),
        })?;
        give_path(out, Some(p));
        Ok(LscStatus::Ok)
    })
}

/// # Safety
/// `path` must be a live handle and `out` valid.
#[no_mangle]
pub unsafe extern "C" fn lsc_path_to_json(path: *const LscPath, out: *mut *mut c_char) -> LscStatus {
    guard(|| {
        if out.is_null() {
            return Err(null("out"));
        }
        give_string(out, path_to_json(path_ref(path)?))?;
        Ok(LscStatus::Ok)
    })
}

/// Apply `e_i` or `f_i`. When the operator gives `0`, `*out` is NULL and the
/// status is `Ok`.
///
/// # Safety
/// `path` must be a live handle and `out` valid.
#[no_mangle]
pub unsafe extern "C" fn lsc_path_apply(path: *const LscPath, op: LscOp, i: u8, out: *mut *mut LscPath) -> LscStatus {
    guard(|| {
        if out.is_null() {
            return Err(null("out"));
        }
        let p = path_ref(path)?;
        let op = match op {
            LscOp::E => Op::E,
            LscOp::F => Op::F,
        };
        give_path(out, p.try_apply(op, root(i)?)?);
        Ok(LscStatus::Ok)
    })
}

/// Number of segments.
///
/// # Safety
/// `path` must be a live handle and `out` valid.
#[no_mangle]
pub unsafe extern "C" fn lsc_path_len(path: *const LscPath, out: *mut usize) -> LscStatus {
    guard(|| {
        if out.is_null() {
            return Err(null("out"));
        }
        *out = path_ref(path)?.len();
        Ok(LscStatus::Ok)
    })
}

fn small(n: num_bigint::BigInt) -> Result<i64, Fail> {
    n.to_i64()
        .ok_or_else(|| Fail(LscStatus::BadConfig, format!("{n} does not fit in 64 bits")))
}

/// `ε_i` and `φ_i` of a path.
///
/// # Safety
/// `path` must be a live handle; `eps` and `phi` valid.
#[no_mangle]
pub unsafe extern "C" fn lsc_path_eps_phi(path: *const LscPath, i: u8, eps: *mut i64, phi: *mut i64) -> LscStatus {
    guard(|| {
        if eps.is_null() || phi.is_null() {
            return Err(null("eps/phi"));
        }
        let p = path_ref(path)?;
        let i = root(i)?;
        let (e, f) = (small(p.epsilon(i))?, small(p.phi(i))?);
        *eps = e;
        *phi = f;
        Ok(LscStatus::Ok)
    })
}

/// `wt(π)` as coordinates in the fundamental weights.
///
/// # Safety
/// `path` must be a live handle; `c1` and `c2` valid.
#[no_mangle]
pub unsafe extern "C" fn lsc_path_weight(path: *const LscPath, c1: *mut i64, c2: *mut i64) -> LscStatus {
    guard(|| {
        if c1.is_null() || c2.is_null() {
            return Err(null("c1/c2"));
        }
        let w = path_ref(path)?.weight()?;
        let (x, y) = (small(w.c1)?, small(w.c2)?);
        *c1 = x;
        *c2 = y;
        Ok(LscStatus::Ok)
    })
}

/// Explore the component of `seed` and return the report as JSON.
///
/// `checks` is a comma-separated list of check names, or NULL for the
/// defaults of the seed. `threads = 0` uses the global pool. Returns
/// `Violation` with the report filled in when a check fails.
///
/// # Safety
/// `seed` must be a live handle, `checks` NULL or NUL-terminated, `out` valid.
#[no_mangle]
pub unsafe extern "C" fn lsc_explore(
    seed: *const LscPath,
    max_depth: usize,
    max_nodes: usize,
    checks: *const c_char,
    threads: usize,
    out: *mut *mut c_char,
) -> LscStatus {
    guard(|| {
        if out.is_null() {
            return Err(null("out"));
        }
        let seed = path_ref(seed)?;
        if max_nodes == 0 {
            return Err(Fail(LscStatus::BadConfig, "max_nodes must be positive".into()));
        }
        let checks = if checks.is_null() {
            Check::defaults_for(seed)
        } else {
            read_str(checks, "checks")?
                .split(',')
                .map(str::trim)
                .filter(|s| !s.is_empty())
                .map(str::parse)
                .collect::<Result<Vec<Check>, _>>()?
        };
        let cfg = ExploreConfig {
            limits: Limits { max_depth, max_nodes },
            checks,
            threads: (threads > 0).then_some(threads),
        };
        let ex = explore(seed, &cfg)?;
        let text = serde_json::to_string(&ex.report).map_err(|e| Fail(LscStatus::Panic, e.to_string()))?;
        give_string(out, text)?;
        Ok(if ex.report.passed() {
            LscStatus::Ok
        } else {
            LscStatus::Violation
        })
    })
}
