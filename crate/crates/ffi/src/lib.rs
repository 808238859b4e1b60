//! C ABI over the `intdef` core.
//!
//! Rings and elements are opaque heap handles released with their `_free`
//! functions. Every fallible call returns an [`IntdefStatus`] and writes its
//! result through an out-pointer; on failure the out-pointer is untouched and
//! [`intdef_last_error_message`] describes the error. Strings returned to the
//! caller are owned by the caller and released with [`intdef_string_free`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use intdef::definitions::{decide_integer_semantic, decide_natural_semantic, definability_environment, DefinitionError};
use intdef::divisibility::{divide_exact, is_power_of, is_unit, DivisibilityError, Side};
use intdef::enumerate::FragmentSpec;
use intdef::formula::{eval_formula, parse_formula, EvalError};
use intdef::parse::{parse_element, parse_scalar, ParseError};
use intdef::ring::{Ring, RingElement, RingError};
use serde_json::json;

/// Status codes returned by every fallible function.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum IntdefStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    Parse = 3,
    ContextMismatch = 4,
    DivisionByZero = 5,
    InvalidArgument = 6,
    Eval = 7,
    Panic = 8,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum IntdefRingKind {
    /// ℤ[x]
    IntPoly = 0,
    /// ℚ[x]
    RatPoly = 1,
    /// ℚ(i)[x]
    GaussPoly = 2,
    /// Quantum plane over ℚ(i); needs `q`.
    QPlane = 3,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum IntdefSide {
    Left = 0,
    Right = 1,
}

/// Opaque ring handle.
pub struct IntdefRing(Ring);

/// Opaque element handle.
pub struct IntdefElement(RingElement);

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

struct Failure(IntdefStatus, String);

impl Failure {
    fn null(what: &str) -> Self {
        Failure(IntdefStatus::NullPointer, format!("{what} is null"))
    }
}

impl From<ParseError> for Failure {
    fn from(e: ParseError) -> Self {
        Failure(IntdefStatus::Parse, e.to_string())
    }
}

impl From<RingError> for Failure {
    fn from(e: RingError) -> Self {
        let status = match e {
            RingError::ContextMismatch => IntdefStatus::ContextMismatch,
            _ => IntdefStatus::InvalidArgument,
        };
        Failure(status, e.to_string())
    }
}

impl From<DivisibilityError> for Failure {
    fn from(e: DivisibilityError) -> Self {
        let status = match &e {
            DivisibilityError::DivisionByZeroElement => IntdefStatus::DivisionByZero,
            DivisibilityError::Ring(RingError::ContextMismatch) => IntdefStatus::ContextMismatch,
            _ => IntdefStatus::InvalidArgument,
        };
        Failure(status, e.to_string())
    }
}

impl From<DefinitionError> for Failure {
    fn from(e: DefinitionError) -> Self {
        Failure(IntdefStatus::Eval, e.to_string())
    }
}

impl From<EvalError> for Failure {
    fn from(e: EvalError) -> Self {
        Failure(IntdefStatus::Eval, e.to_string())
    }
}

fn set_last_error(msg: &str) {
    let c = CString::new(msg.replace('\0', "\\0")).expect("nul bytes removed");
    LAST_ERROR.with(|slot| *slot.borrow_mut() = c);
}

/// Runs `f`, records any error and converts panics into [`IntdefStatus::Panic`].
fn guard(f: impl FnOnce() -> Result<(), Failure>) -> IntdefStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => {
            set_last_error("");
            IntdefStatus::Ok
        }
        Ok(Err(Failure(status, msg))) => {
            set_last_error(&msg);
            status
        }
        Err(payload) => {
            let msg = payload
                .downcast_ref::<&str>()
                .map(|s| s.to_string())
                .or_else(|| payload.downcast_ref::<String>().cloned())
                .unwrap_or_else(|| "panic".into());
            set_last_error(&format!("internal error: {msg}"));
            IntdefStatus::Panic
        }
    }
}

unsafe fn text<'a>(p: *const c_char, what: &str) -> Result<&'a str, Failure> {
    if p.is_null() {
        return Err(Failure::null(what));
    }
    CStr::from_ptr(p)
        .to_str()
        .map_err(|e| Failure(IntdefStatus::InvalidUtf8, format!("{what}: {e}")))
}

unsafe fn deref<'a, T>(p: *const T, what: &str) -> Result<&'a T, Failure> {
    p.as_ref().ok_or_else(|| Failure::null(what))
}

unsafe fn write<T>(out: *mut T, value: T, what: &str) -> Result<(), Failure> {
    if out.is_null() {
        return Err(Failure::null(what));
    }
    out.write(value);
    Ok(())
}

fn boxed(e: RingElement) -> *mut IntdefElement {
    Box::into_raw(Box::new(IntdefElement(e)))
}

fn owned_string(s: String) -> *mut c_char {
    CString::new(s).expect("display output has no nul bytes").into_raw()
}

/// Message for the most recent failed call on this thread, or "" after a
/// success. The pointer stays valid until the next call on the same thread.
#[no_mangle]
pub extern "C" fn intdef_last_error_message() -> *const c_char {
    LAST_ERROR.with(|slot| slot.borrow().as_ptr())
}

/// Creates a ring. `q` is read only for [`IntdefRingKind::QPlane`] and may be
/// null otherwise.
///
/// # Safety
/// `q` must be null or a valid C string; `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn intdef_ring_new(kind: IntdefRingKind, q: *const c_char, out: *mut *mut IntdefRing) -> IntdefStatus {
    guard(|| {
        let ring = match kind {
            IntdefRingKind::IntPoly => Ring::int_poly(),
            IntdefRingKind::RatPoly => Ring::rat_poly(),
            IntdefRingKind::GaussPoly => Ring::gauss_poly(),
            IntdefRingKind::QPlane => Ring::quantum_plane(parse_scalar(text(q, "q")?)?)?,
        };
        write(out, Box::into_raw(Box::new(IntdefRing(ring))), "out")
    })
}

/// # Safety
/// `ring` must be null or a handle from [`intdef_ring_new`] not yet freed.
#[no_mangle]
pub unsafe extern "C" fn intdef_ring_free(ring: *mut IntdefRing) {
    if !ring.is_null() {
        drop(Box::from_raw(ring));
    }
}

/// Writes a description such as `Z[x]` to `out`.
///
/// # Safety
/// `ring` must be a live handle; `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn intdef_ring_to_string(ring: *const IntdefRing, out: *mut *mut c_char) -> IntdefStatus {
    guard(|| write(out, owned_string(deref(ring, "ring")?.0.to_string()), "out"))
}

/// Parses an element such as `3 + x^2` or `(2+y)*(3+x)`.
///
/// # Safety
/// `ring` must be a live handle, `source` a valid C string and `out` valid for writes.
#[no_mangle]
pub unsafe extern "C" fn intdef_element_parse(
    ring: *const IntdefRing,
    source: *const c_char,
    out: *mut *mut IntdefElement,
) -> IntdefStatus {
    guard(|| {
        let ring = &deref(ring, "ring")?.0;
        let e = parse_element(text(source, "source")?, ring)?;
        write(out, boxed(e), "out")
    })
}

/// # Safety
/// `element` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn intdef_element_free(element: *mut IntdefElement) {
    if !element.is_null() {
        drop(Box::from_raw(element));
    }
}

/// Canonical display form of an element.
///
/// # Safety
/// `element` must be a live handle; `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn intdef_element_to_string(element: *const IntdefElement, out: *mut *mut c_char) -> IntdefStatus {
    guard(|| write(out, owned_string(deref(element, "element")?.0.to_string()), "out"))
}

/// Releases a string returned by this library.
///
/// # Safety
/// `s` must be null or a string from this library not yet freed.
#[no_mangle]
pub unsafe extern "C" fn intdef_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

unsafe fn binary(
    a: *const IntdefElement,
    b: *const IntdefElement,
    out: *mut *mut IntdefElement,
    op: fn(&RingElement, &RingElement) -> Result<RingElement, RingError>,
) -> IntdefStatus {
    guard(|| {
        let r = op(&deref(a, "a")?.0, &deref(b, "b")?.0)?;
        write(out, boxed(r), "out")
    })
}

/// # Safety
/// `a`, `b` must be live handles; `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn intdef_element_add(a: *const IntdefElement, b: *const IntdefElement, out: *mut *mut IntdefElement) -> IntdefStatus {
    binary(a, b, out, RingElement::add)
}

/// # Safety
/// `a`, `b` must be live handles; `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn intdef_element_sub(a: *const IntdefElement, b: *const IntdefElement, out: *mut *mut IntdefElement) -> IntdefStatus {
    binary(a, b, out, RingElement::sub)
}

/// `a·b`; the order matters in the quantum plane.
///
/// # Safety
/// `a`, `b` must be live handles; `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn intdef_element_mul(a: *const IntdefElement, b: *const IntdefElement, out: *mut *mut IntdefElement) -> IntdefStatus {
    binary(a, b, out, RingElement::mul)
}

/// # Safety
/// `a` must be a live handle; `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn intdef_element_pow(a: *const IntdefElement, n: u32, out: *mut *mut IntdefElement) -> IntdefStatus {
    guard(|| write(out, boxed(deref(a, "a")?.0.pow(n)), "out"))
}

/// Exact sided division of `g` by `f`. Sets `*divides` and, when it is true,
/// writes the quotient to `quotient`; otherwise `*quotient` is set to null.
///
/// # Safety
/// `g`, `f` must be live handles; `divides` and `quotient` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn intdef_element_divide(
    g: *const IntdefElement,
    f: *const IntdefElement,
    side: IntdefSide,
    divides: *mut bool,
    quotient: *mut *mut IntdefElement,
) -> IntdefStatus {
    guard(|| {
        let side = match side {
            IntdefSide::Left => Side::Left,
            IntdefSide::Right => Side::Right,
        };
        if divides.is_null() || quotient.is_null() {
            return Err(Failure::null("out"));
        }
        let outcome = divide_exact(&deref(g, "g")?.0, &deref(f, "f")?.0, side)?;
        divides.write(outcome.divides());
        quotient.write(outcome.quotient.map_or(ptr::null_mut(), boxed));
        Ok(())
    })
}

/// # Safety
/// `element` must be a live handle; `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn intdef_element_is_unit(element: *const IntdefElement, out: *mut bool) -> IntdefStatus {
    guard(|| write(out, is_unit(&deref(element, "element")?.0), "out"))
}

/// Writes `n` to `out` when `z = p^n` with `1 ≤ n ≤ max_exp`, else 0.
///
/// # Safety
/// `z`, `p` must be live handles; `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn intdef_element_is_power_of(
    z: *const IntdefElement,
    p: *const IntdefElement,
    max_exp: u32,
    out: *mut u32,
) -> IntdefStatus {
    guard(|| {
        let n = is_power_of(&deref(z, "z")?.0, &deref(p, "p")?.0, max_exp)?;
        write(out, n.unwrap_or(0), "out")
    })
}

/// Membership decision with its witness.
#[repr(C)]
#[derive(Debug, Clone, Copy, Default)]
pub struct IntdefDecision {
    pub member: bool,
    /// Integer equal to the element when `member` is true.
    pub witness: i64,
    /// The element is an integer constant beyond the search bound.
    pub bound_too_small: bool,
}

unsafe fn decide(
    t: *const IntdefElement,
    max_exp: u32,
    out: *mut IntdefDecision,
    f: fn(&RingElement, u32) -> Result<intdef::definitions::Decision, DefinitionError>,
) -> IntdefStatus {
    guard(|| {
        let d = f(&deref(t, "t")?.0, max_exp)?;
        let decision = IntdefDecision { member: d.member, witness: d.witness.unwrap_or(0), bound_too_small: d.bound_too_small };
        write(out, decision, "out")
    })
}

/// Is `t` a natural-number constant, searching powers of `x` up to `max_exp`.
///
/// # Safety
/// `t` must be a live handle; `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn intdef_decide_natural(t: *const IntdefElement, max_exp: u32, out: *mut IntdefDecision) -> IntdefStatus {
    decide(t, max_exp, out, decide_natural_semantic)
}

/// Is `t` an integer constant, searching powers of `x` up to `max_exp`.
///
/// # Safety
/// `t` must be a live handle; `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn intdef_decide_integer(t: *const IntdefElement, max_exp: u32, out: *mut IntdefDecision) -> IntdefStatus {
    decide(t, max_exp, out, decide_integer_semantic)
}

/// Evaluates a formula with `p = x`, the sets `A` and `POW` registered, the
/// default fragment of degree (or bidegree `degree × degree`) at most
/// `degree` and height `height`, and `count` parameter bindings
/// `names[k] = values[k]`. Writes a JSON object with keys `formula` and
/// `verdict`.
///
/// # Safety
/// `ring` must be a live handle, `formula` a valid C string, `names` and
/// `values` arrays of `count` valid C strings (either may be null when
/// `count` is 0), and `out` valid for writes.
#[no_mangle]
pub unsafe extern "C" fn intdef_eval_formula(
    ring: *const IntdefRing,
    formula: *const c_char,
    names: *const *const c_char,
    values: *const *const c_char,
    count: usize,
    degree: u32,
    height: u32,
    out: *mut *mut c_char,
) -> IntdefStatus {
    guard(|| {
        let ring = &deref(ring, "ring")?.0;
        let f = parse_formula(text(formula, "formula")?)?;
        let mut env = definability_environment(ring, &ring.x())?;
        let fragment = if ring.is_commutative() {
            FragmentSpec::degree(ring, degree, height)
        } else {
            FragmentSpec::bidegree(ring, degree, degree, height)
        };
        let fragment = fragment.map_err(|e| Failure(IntdefStatus::InvalidArgument, e.to_string()))?;
        env.set_default_fragment(fragment)?;
        if count > 0 && (names.is_null() || values.is_null()) {
            return Err(Failure::null("bindings"));
        }
        for k in 0..count {
            let name = text(*names.add(k), "binding name")?;
            let value = parse_element(text(*values.add(k), "binding value")?, ring)?;
            env.bind(name, value)?;
        }
        let verdict = eval_formula(&f, &env)?;
        let report = json!({"formula": f.to_string(), "verdict": verdict});
        write(out, owned_string(report.to_string()), "out")
    })
}
