//! C ABI for `vincmean`.
//!
//! Objects cross the boundary as opaque handles that the caller frees with
//! the matching `*_free` function. Every fallible call returns a
//! [`VmStatus`]; on failure a description is available from
//! [`vm_last_error_message`] on the same thread. Exact rationals are
//! returned as `"p"` or `"p/q"` strings owned by the caller and released
//! with [`vm_string_free`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use vincmean::{
    expected_series, format_rational, CharacterCombination, CompositeStatistic, Error, IntegerPartition, Permutation,
    VincularPattern, WalkSpec,
};

/// Status codes returned by every fallible function.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum VmStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    ParseError = 3,
    InvalidArgument = 4,
    SizeMismatch = 5,
    OutOfRange = 6,
    Panic = 7,
}

/// A parsed vincular 3-pattern.
pub struct VmPattern(VincularPattern);

/// A statistic: a pattern, `peak`, `des`, `asc`, or a weighted sum of them.
pub struct VmStatistic(CompositeStatistic);

/// A character expansion `Σ a_λ χ^λ` of a class function on `S_n`.
pub struct VmCombination(Vec<(String, String)>, CharacterCombination);

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: impl Into<String>) {
    let msg = msg.into().replace('\0', " ");
    LAST_ERROR.with(|e| *e.borrow_mut() = CString::new(msg).ok());
}

fn status_of(err: &Error) -> VmStatus {
    match err {
        Error::PatternParse { .. } | Error::PartitionParse { .. } | Error::RationalParse(_) | Error::UnknownStatistic(_) => {
            VmStatus::ParseError
        }
        Error::SizeMismatch { .. } => VmStatus::SizeMismatch,
        Error::TooSmall { .. } | Error::SizeCap { .. } | Error::ProductCap { .. } => VmStatus::OutOfRange,
        _ => VmStatus::InvalidArgument,
    }
}

/// Runs `f`, recording any error or panic as the thread's last error.
fn guard(f: impl FnOnce() -> Result<(), VmStatus>) -> VmStatus {
    LAST_ERROR.with(|e| *e.borrow_mut() = None);
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => VmStatus::Ok,
        Ok(Err(s)) => s,
        Err(_) => {
            set_error("internal panic");
            VmStatus::Panic
        }
    }
}

fn fail(err: Error) -> VmStatus {
    set_error(err.to_string());
    status_of(&err)
}

unsafe fn read_str<'a>(s: *const c_char) -> Result<&'a str, VmStatus> {
    if s.is_null() {
        set_error("null string argument");
        return Err(VmStatus::NullPointer);
    }
    CStr::from_ptr(s).to_str().map_err(|_| {
        set_error("string argument is not valid UTF-8");
        VmStatus::InvalidUtf8
    })
}

unsafe fn out_ptr<'a, T>(p: *mut T) -> Result<&'a mut T, VmStatus> {
    p.as_mut().ok_or_else(|| {
        set_error("null output pointer");
        VmStatus::NullPointer
    })
}

unsafe fn in_ref<'a, T>(p: *const T) -> Result<&'a T, VmStatus> {
    p.as_ref().ok_or_else(|| {
        set_error("null handle");
        VmStatus::NullPointer
    })
}

fn owned_string(s: &str) -> *mut c_char {
    CString::new(s).map(CString::into_raw).unwrap_or(ptr::null_mut())
}

/// Message describing the last failure on this thread, or NULL. The pointer
/// stays valid until the next call into this library on the same thread.
#[no_mangle]
pub extern "C" fn vm_last_error_message() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |s| s.as_ptr()))
}

/// Library version as a static NUL-terminated string.
#[no_mangle]
pub extern "C" fn vm_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}

/// Frees a string returned by this library. NULL is ignored.
///
/// # Safety
/// `s` must come from this library and not have been freed already.
#[no_mangle]
pub unsafe extern "C" fn vm_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Parses a pattern such as `"(1-23]"`.
///
/// # Safety
/// `text` must be a NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn vm_pattern_parse(text: *const c_char, out: *mut *mut VmPattern) -> VmStatus {
    guard(|| {
        let out = out_ptr(out)?;
        *out = ptr::null_mut();
        let phi: VincularPattern = read_str(text)?.parse().map_err(fail)?;
        *out = Box::into_raw(Box::new(VmPattern(phi)));
        Ok(())
    })
}

/// # Safety
/// `p` must be NULL or a handle from [`vm_pattern_parse`].
#[no_mangle]
pub unsafe extern "C" fn vm_pattern_free(p: *mut VmPattern) {
    if !p.is_null() {
        drop(Box::from_raw(p));
    }
}

/// Canonical text of a pattern, freed with [`vm_string_free`].
///
/// # Safety
/// `p` must be a valid handle.
#[no_mangle]
pub unsafe extern "C" fn vm_pattern_to_string(p: *const VmPattern) -> *mut c_char {
    match p.as_ref() {
        Some(p) => owned_string(&p.0.to_string()),
        None => ptr::null_mut(),
    }
}

/// Number of occurrences of the pattern in the permutation given by the
/// one-line word `word[0..n]` (values 1..=n).
///
/// # Safety
/// `word` must point to `n` readable values; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn vm_pattern_count(p: *const VmPattern, word: *const usize, n: usize, out: *mut u64) -> VmStatus {
    guard(|| {
        let p = in_ref(p)?;
        let out = out_ptr(out)?;
        if word.is_null() && n > 0 {
            set_error("null permutation word");
            return Err(VmStatus::NullPointer);
        }
        let w = if n == 0 { Vec::new() } else { std::slice::from_raw_parts(word, n).to_vec() };
        let pi = Permutation::new(w).map_err(fail)?;
        *out = p.0.count_occurrences(&pi);
        Ok(())
    })
}

/// Parses a statistic such as `"peak"` or `"2*(1-2-3);-1/2*des"`.
///
/// # Safety
/// `text` must be a NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn vm_statistic_parse(text: *const c_char, out: *mut *mut VmStatistic) -> VmStatus {
    guard(|| {
        let out = out_ptr(out)?;
        *out = ptr::null_mut();
        let s: CompositeStatistic = read_str(text)?.parse().map_err(fail)?;
        *out = Box::into_raw(Box::new(VmStatistic(s)));
        Ok(())
    })
}

/// Wraps a pattern as a statistic. The pattern handle stays owned by the caller.
///
/// # Safety
/// `p` must be a valid handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn vm_statistic_from_pattern(p: *const VmPattern, out: *mut *mut VmStatistic) -> VmStatus {
    guard(|| {
        let p = in_ref(p)?;
        let out = out_ptr(out)?;
        *out = Box::into_raw(Box::new(VmStatistic(CompositeStatistic::from(p.0))));
        Ok(())
    })
}

/// # Safety
/// `s` must be NULL or a statistic handle.
#[no_mangle]
pub unsafe extern "C" fn vm_statistic_free(s: *mut VmStatistic) {
    if !s.is_null() {
        drop(Box::from_raw(s));
    }
}

/// Character coefficients of the statistic's mean over each conjugacy class of `S_n`.
///
/// # Safety
/// `s` must be a valid handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn vm_mean_coefficients(s: *const VmStatistic, n: usize, out: *mut *mut VmCombination) -> VmStatus {
    guard(|| {
        let s = in_ref(s)?;
        let out = out_ptr(out)?;
        *out = ptr::null_mut();
        let comb = s.0.mean(n).map_err(fail)?;
        let terms = comb.iter().map(|(l, a)| (l.to_string(), format_rational(a))).collect();
        *out = Box::into_raw(Box::new(VmCombination(terms, comb)));
        Ok(())
    })
}

/// # Safety
/// `c` must be NULL or a combination handle.
#[no_mangle]
pub unsafe extern "C" fn vm_combination_free(c: *mut VmCombination) {
    if !c.is_null() {
        drop(Box::from_raw(c));
    }
}

/// Number of nonzero terms; 0 for NULL.
///
/// # Safety
/// `c` must be NULL or a valid handle.
#[no_mangle]
pub unsafe extern "C" fn vm_combination_len(c: *const VmCombination) -> usize {
    c.as_ref().map_or(0, |c| c.0.len())
}

/// Term `index` as newly allocated strings: the partition (`"6,1,1"`) and
/// its coefficient (`"p/q"`). Terms are ordered with `(n)` first.
///
/// # Safety
/// `c` must be a valid handle; both output pointers must be writable.
#[no_mangle]
pub unsafe extern "C" fn vm_combination_term(
    c: *const VmCombination,
    index: usize,
    partition: *mut *mut c_char,
    coefficient: *mut *mut c_char,
) -> VmStatus {
    guard(|| {
        let c = in_ref(c)?;
        let partition = out_ptr(partition)?;
        let coefficient = out_ptr(coefficient)?;
        let (l, a) = c.0.get(index).ok_or_else(|| {
            set_error(format!("term index {index} out of range ({} terms)", c.0.len()));
            VmStatus::OutOfRange
        })?;
        *partition = owned_string(l);
        *coefficient = owned_string(a);
        Ok(())
    })
}

/// Value of the combination at the conjugacy class `mu` (e.g. `"2,1^4"`),
/// written to `out` as a newly allocated rational string.
///
/// # Safety
/// `c` must be a valid handle; `mu` a NUL-terminated string; `out` writable.
#[no_mangle]
pub unsafe extern "C" fn vm_combination_evaluate(c: *const VmCombination, mu: *const c_char, out: *mut *mut c_char) -> VmStatus {
    guard(|| {
        let c = in_ref(c)?;
        let out = out_ptr(out)?;
        let mu: IntegerPartition = read_str(mu)?.parse().map_err(fail)?;
        let v = c.1.evaluate(&mu, &mut vincmean::MnEvaluator::new()).map_err(fail)?;
        *out = owned_string(&format_rational(&v));
        Ok(())
    })
}

/// Exact expected value of the statistic after `t` steps drawn uniformly
/// from the conjugacy class `gamma` of `S_n`, as a newly allocated string.
///
/// # Safety
/// `s` must be a valid handle; `gamma` a NUL-terminated string; `out` writable.
#[no_mangle]
pub unsafe extern "C" fn vm_expected_value(
    s: *const VmStatistic,
    n: usize,
    gamma: *const c_char,
    t: u32,
    out: *mut *mut c_char,
) -> VmStatus {
    guard(|| {
        let s = in_ref(s)?;
        let out = out_ptr(out)?;
        *out = ptr::null_mut();
        let gamma: IntegerPartition = read_str(gamma)?.parse().map_err(fail)?;
        if gamma.n() != n {
            return Err(fail(Error::SizeMismatch { expected: n, found: gamma.n() }));
        }
        let comb = s.0.mean(n).map_err(fail)?;
        let v = vincmean::expected_value(&comb, &WalkSpec::new(gamma, t)).map_err(fail)?;
        *out = owned_string(&format_rational(&v));
        Ok(())
    })
}

/// Expected values for `t = 0..=t_max` as doubles written to
/// `values[0..=t_max]`. Use [`vm_expected_value`] for exact results.
///
/// # Safety
/// `values` must have room for `t_max + 1` doubles.
#[no_mangle]
pub unsafe extern "C" fn vm_expected_series_f64(
    s: *const VmStatistic,
    n: usize,
    gamma: *const c_char,
    t_max: u32,
    values: *mut f64,
) -> VmStatus {
    guard(|| {
        let s = in_ref(s)?;
        if values.is_null() {
            set_error("null output buffer");
            return Err(VmStatus::NullPointer);
        }
        let gamma: IntegerPartition = read_str(gamma)?.parse().map_err(fail)?;
        if gamma.n() != n {
            return Err(fail(Error::SizeMismatch { expected: n, found: gamma.n() }));
        }
        let comb = s.0.mean(n).map_err(fail)?;
        let series = expected_series(&comb, &gamma, t_max).map_err(fail)?;
        let dst = std::slice::from_raw_parts_mut(values, series.len());
        for (d, v) in dst.iter_mut().zip(&series) {
            *d = vincmean::rational::to_f64(v);
        }
        Ok(())
    })
}
