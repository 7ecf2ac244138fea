//! C ABI over `hamweight`.
//!
//! Objects are opaque handles created by `hw_*_new`-style calls and released
//! with the matching `*_free`. Every fallible call returns an [`HwStatus`];
//! on failure `hw_last_error_message` describes the error for the calling
//! thread. Strings returned through out-pointers are owned by the caller and
//! must be released with [`hw_string_free`].

#![allow(clippy::missing_safety_doc)]

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use hamweight::codes::{HammingCode, DEFAULT_ENUMERATION_GUARD};
use hamweight::error::Error;
use hamweight::gf::{FieldElement, FieldTower};
use hamweight::report;
use hamweight::verify::{applicable_suites, run_suites, Suite, Tally, VerifyConfig};
use hamweight::weightdist::{
    corollary_poly, macwilliams_transform, weights_binary_recurrence, weights_recursive_with, RecursionOptions,
    WeightDistribution,
};

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum HwStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidArgument = 2,
    /// `gcd(m, q-1) != 1` for an operation that requires it.
    GcdPrecondition = 3,
    /// A work bound or size guard was exceeded.
    WorkBound = 4,
    /// An exactness check inside the computation failed.
    Arithmetic = 5,
    /// Value does not fit the requested integer type.
    Overflow = 6,
    Panic = 7,
}

/// Field tower `F_p ⊂ F_q ⊂ F_{q^m}`.
pub struct HwTower(FieldTower);

/// Weight distribution of a linear code.
pub struct HwDistribution(WeightDistribution);

#[repr(C)]
#[derive(Clone, Copy, Debug, Default)]
pub struct HwTowerInfo {
    pub p: u64,
    pub r: u32,
    pub m: u32,
    pub q: u64,
    /// Number of elements of the big field.
    pub size: u64,
    /// `(q^m - 1)/(q - 1)`.
    pub n: u64,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: impl Into<String>) {
    let msg = CString::new(msg.into().replace('\0', " ")).expect("no interior nul");
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(msg));
}

fn status_of(e: &Error) -> HwStatus {
    match e {
        Error::GcdPrecondition { .. } => HwStatus::GcdPrecondition,
        e if e.is_refusal() => HwStatus::WorkBound,
        e if e.is_invalid_input() => HwStatus::InvalidArgument,
        _ => HwStatus::Arithmetic,
    }
}

/// Runs `f`, records any error or panic, and converts it to a status.
fn guarded(f: impl FnOnce() -> Result<(), HwStatus>) -> HwStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => HwStatus::Ok,
        Ok(Err(s)) => s,
        Err(_) => {
            set_error("internal panic");
            HwStatus::Panic
        }
    }
}

fn fail(e: Error) -> HwStatus {
    set_error(e.to_string());
    status_of(&e)
}

unsafe fn deref<'a, T>(p: *const T) -> Result<&'a T, HwStatus> {
    p.as_ref().ok_or_else(|| {
        set_error("null pointer argument");
        HwStatus::NullPointer
    })
}

unsafe fn write<T>(out: *mut T, value: T) -> Result<(), HwStatus> {
    if out.is_null() {
        set_error("null output pointer");
        return Err(HwStatus::NullPointer);
    }
    out.write(value);
    Ok(())
}

fn to_c_string(s: String) -> *mut c_char {
    CString::new(s).expect("no interior nul").into_raw()
}

/// Message for the last failed call on this thread, or null. Valid until the
/// next failing call on the same thread; do not free.
#[no_mangle]
pub extern "C" fn hw_last_error_message() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |s| s.as_ptr()))
}

#[no_mangle]
pub unsafe extern "C" fn hw_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Tower with `q = p^r` and big field `F_{q^m}`.
#[no_mangle]
pub unsafe extern "C" fn hw_tower_new(p: u64, r: u32, m: u32, out: *mut *mut HwTower) -> HwStatus {
    guarded(|| {
        let t = FieldTower::new(p, r, m).map_err(fail)?;
        write(out, Box::into_raw(Box::new(HwTower(t))))
    })
}

/// Tower for the code `H(m, q)`, `q` a prime power.
#[no_mangle]
pub unsafe extern "C" fn hw_tower_for_code(q: u64, m: u32, out: *mut *mut HwTower) -> HwStatus {
    guarded(|| {
        let t = FieldTower::for_code(q, m).map_err(fail)?;
        write(out, Box::into_raw(Box::new(HwTower(t))))
    })
}

#[no_mangle]
pub unsafe extern "C" fn hw_tower_free(t: *mut HwTower) {
    if !t.is_null() {
        drop(Box::from_raw(t));
    }
}

#[no_mangle]
pub unsafe extern "C" fn hw_tower_info(t: *const HwTower, out: *mut HwTowerInfo) -> HwStatus {
    guarded(|| {
        let t = &deref(t)?.0;
        let info = HwTowerInfo { p: t.p() as u64, r: t.r(), m: t.m(), q: t.q(), size: t.size(), n: t.n() };
        write(out, info)
    })
}

/// Packed element `gamma^e`. Elements are base-`p` integers whose least
/// significant digit is the constant coefficient.
#[no_mangle]
pub unsafe extern "C" fn hw_tower_gamma_pow(t: *const HwTower, e: u64, out: *mut u32) -> HwStatus {
    guarded(|| {
        let t = &deref(t)?.0;
        write(out, t.gamma_pow(e).packed())
    })
}

unsafe fn binary_op(
    t: *const HwTower,
    a: u32,
    b: u32,
    out: *mut u32,
    op: impl FnOnce(&FieldTower, FieldElement, FieldElement) -> Result<FieldElement, Error>,
) -> HwStatus {
    guarded(|| {
        let t = &deref(t)?.0;
        let a = t.from_packed(a).map_err(fail)?;
        let b = t.from_packed(b).map_err(fail)?;
        write(out, op(t, a, b).map_err(fail)?.packed())
    })
}

#[no_mangle]
pub unsafe extern "C" fn hw_tower_add(t: *const HwTower, a: u32, b: u32, out: *mut u32) -> HwStatus {
    binary_op(t, a, b, out, |t, a, b| Ok(t.add(a, b)))
}

#[no_mangle]
pub unsafe extern "C" fn hw_tower_mul(t: *const HwTower, a: u32, b: u32, out: *mut u32) -> HwStatus {
    binary_op(t, a, b, out, |t, a, b| Ok(t.mul(a, b)))
}

#[no_mangle]
pub unsafe extern "C" fn hw_tower_inv(t: *const HwTower, a: u32, out: *mut u32) -> HwStatus {
    binary_op(t, a, 0, out, |t, a, _| t.inv(a))
}

/// Relative trace `F_{q^m} → F_q`.
#[no_mangle]
pub unsafe extern "C" fn hw_tower_trace(t: *const HwTower, a: u32, out: *mut u32) -> HwStatus {
    binary_op(t, a, 0, out, |t, a, _| Ok(t.trace_rel(a)))
}

/// Norm `F_{q^m}^* → F_q^*`.
#[no_mangle]
pub unsafe extern "C" fn hw_tower_norm(t: *const HwTower, a: u32, out: *mut u32) -> HwStatus {
    binary_op(t, a, 0, out, |t, a, _| Ok(t.norm(a)))
}

fn emit(out: *mut *mut HwDistribution, d: Result<WeightDistribution, Error>) -> Result<(), HwStatus> {
    let d = d.map_err(fail)?;
    unsafe { write(out, Box::into_raw(Box::new(HwDistribution(d)))) }
}

/// Distribution of `H(m, q)` from the power-moment recursion with default limits.
#[no_mangle]
pub unsafe extern "C" fn hw_weights_recursive(q: u64, m: u32, out: *mut *mut HwDistribution) -> HwStatus {
    guarded(|| emit(out, weights_recursive_with(q, m, &RecursionOptions::default())))
}

/// As [`hw_weights_recursive`] with an explicit length limit; `ignore_gcd`
/// runs outside the coprime case and the result is then unverified.
#[no_mangle]
pub unsafe extern "C" fn hw_weights_recursive_ex(
    q: u64,
    m: u32,
    max_n: u64,
    ignore_gcd: bool,
    out: *mut *mut HwDistribution,
) -> HwStatus {
    guarded(|| emit(out, weights_recursive_with(q, m, &RecursionOptions { max_n, ignore_gcd })))
}

/// Distribution of the binary Hamming code of redundancy `m` from the three-term recurrence.
#[no_mangle]
pub unsafe extern "C" fn hw_weights_binary(m: u32, out: *mut *mut HwDistribution) -> HwStatus {
    guarded(|| emit(out, weights_binary_recurrence(m)))
}

/// Distribution of the dual of `H(m, q)` by enumerating the trace code.
/// `guard` caps the number of codewords visited; 0 means the default.
#[no_mangle]
pub unsafe extern "C" fn hw_dual_distribution(q: u64, m: u32, guard: u64, out: *mut *mut HwDistribution) -> HwStatus {
    let guard = if guard == 0 { DEFAULT_ENUMERATION_GUARD } else { guard as u128 };
    guarded(|| emit(out, HammingCode::new(q, m).and_then(|c| c.enumerate_dual_distribution(guard))))
}

/// Distribution of the dual code.
#[no_mangle]
pub unsafe extern "C" fn hw_macwilliams(d: *const HwDistribution, out: *mut *mut HwDistribution) -> HwStatus {
    guarded(|| {
        let d = &deref(d)?.0;
        emit(out, macwilliams_transform(d))
    })
}

#[no_mangle]
pub unsafe extern "C" fn hw_distribution_free(d: *mut HwDistribution) {
    if !d.is_null() {
        drop(Box::from_raw(d));
    }
}

/// Code length `n`; the distribution has `n + 1` entries. 0 for a null handle.
#[no_mangle]
pub unsafe extern "C" fn hw_distribution_length(d: *const HwDistribution) -> usize {
    d.as_ref().map_or(0, |d| d.0.n())
}

/// Code dimension `k`. 0 for a null handle.
#[no_mangle]
pub unsafe extern "C" fn hw_distribution_dimension(d: *const HwDistribution) -> usize {
    d.as_ref().map_or(0, |d| d.0.k())
}

fn check_weight(d: &WeightDistribution, weight: usize) -> Result<(), HwStatus> {
    if weight > d.n() {
        set_error(format!("weight {weight} exceeds length {}", d.n()));
        return Err(HwStatus::InvalidArgument);
    }
    Ok(())
}

/// Count of codewords of the given weight as a decimal string.
#[no_mangle]
pub unsafe extern "C" fn hw_distribution_count(d: *const HwDistribution, weight: usize, out: *mut *mut c_char) -> HwStatus {
    guarded(|| {
        let d = &deref(d)?.0;
        check_weight(d, weight)?;
        write(out, to_c_string(d.count(weight).to_string()))
    })
}

/// Count of codewords of the given weight; `HW_STATUS_OVERFLOW` if it exceeds 64 bits.
#[no_mangle]
pub unsafe extern "C" fn hw_distribution_count_u64(d: *const HwDistribution, weight: usize, out: *mut u64) -> HwStatus {
    guarded(|| {
        let d = &deref(d)?.0;
        check_weight(d, weight)?;
        let c = d.count(weight);
        let v = u64::try_from(c).map_err(|_| {
            set_error(format!("count {c} does not fit in 64 bits"));
            HwStatus::Overflow
        })?;
        write(out, v)
    })
}

#[no_mangle]
pub unsafe extern "C" fn hw_distribution_equal(a: *const HwDistribution, b: *const HwDistribution, out: *mut bool) -> HwStatus {
    guarded(|| {
        let (a, b) = (&deref(a)?.0, &deref(b)?.0);
        write(out, a == b)
    })
}

/// `C_h` of `H(m, q)` from the closed forms, `3 <= h <= 10`, as a decimal string.
#[no_mangle]
pub unsafe extern "C" fn hw_closed_form_count(h: u32, q: u64, m: u32, out: *mut *mut c_char) -> HwStatus {
    guarded(|| {
        let v = corollary_poly(h, q, m).map_err(fail)?;
        write(out, to_c_string(v.to_string()))
    })
}

/// Runs a verification suite by name (`"all"` or null for every applicable
/// suite) and returns the reports as a JSON array. `work_bound` of 0 means the
/// default. `passed` is set when every report passed and none was skipped.
#[no_mangle]
pub unsafe extern "C" fn hw_verify_json(
    q: u64,
    m: u32,
    suite: *const c_char,
    work_bound: u64,
    out: *mut *mut c_char,
    passed: *mut bool,
) -> HwStatus {
    guarded(|| {
        let code = HammingCode::new(q, m).map_err(fail)?;
        let name = if suite.is_null() {
            "all"
        } else {
            CStr::from_ptr(suite).to_str().map_err(|_| {
                set_error("suite name is not UTF-8");
                HwStatus::InvalidArgument
            })?
        };
        let suites = if name.eq_ignore_ascii_case("all") {
            applicable_suites(&code)
        } else {
            vec![Suite::from_name(name).ok_or_else(|| {
                set_error(format!("unknown suite `{name}`"));
                HwStatus::InvalidArgument
            })?]
        };
        let mut cfg = VerifyConfig::default();
        if work_bound != 0 {
            cfg.work_bound = work_bound as u128;
        }
        let reports = run_suites(&code, &suites, &cfg).map_err(fail)?;
        if !passed.is_null() {
            passed.write(Tally::of(&reports).all_pass());
        }
        write(out, to_c_string(report::to_json(&reports)))
    })
}
