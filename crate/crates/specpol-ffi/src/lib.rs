//! C ABI for the specpol library: opaque handles, status codes, flat
//! buffers. Every constructor has a matching `*_free`; all pointers returned
//! through out-parameters are owned by the caller until freed.

use std::cell::RefCell;
use std::ffi::{c_char, CString};

use num_complex::Complex64;
use specpol::engine::{enclosures, second_order_spectrum, sigma, SecondOrderSpectrum};
use specpol::operators::{
    assemble_multiplication, assemble_rank_one, discrete_eigenvalues_rank_one, IntervalSet,
    MomentMatrices, PiecewiseSymbol, RankOneTerm,
};

/// Status code returned by every fallible entry point.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SpecpolStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidArgument = 2,
    NumericalFailure = 3,
    BufferTooSmall = 4,
}

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_error(msg: impl Into<Vec<u8>>) {
    let c = CString::new(msg).unwrap_or_default();
    LAST_ERROR.with(|slot| *slot.borrow_mut() = c);
}

fn fail(status: SpecpolStatus, err: &specpol::Error) -> SpecpolStatus {
    set_error(err.to_string());
    status
}

fn classify(err: &specpol::Error) -> SpecpolStatus {
    match err {
        specpol::Error::EigenSolver { .. }
        | specpol::Error::ConjugatePairing { .. }
        | specpol::Error::NoZeroFound { .. } => SpecpolStatus::NumericalFailure,
        _ => SpecpolStatus::InvalidArgument,
    }
}

/// Message describing the most recent error on this thread. Valid until the
/// next failing call on the same thread; do not free.
#[no_mangle]
pub extern "C" fn specpol_last_error_message() -> *const c_char {
    LAST_ERROR.with(|slot| slot.borrow().as_ptr())
}

/// Two-valued symbol together with the set E where it takes `inside_value`.
pub struct SpecpolSymbol {
    e: IntervalSet,
    symbol: PiecewiseSymbol,
}

/// Moment matrices (A, B) of a model operator on a Fourier window.
pub struct SpecpolMoments {
    inner: MomentMatrices,
}

/// Computed second-order spectrum (2d points, conjugate-closed).
pub struct SpecpolSpectrum {
    inner: SecondOrderSpectrum,
}

/// Builds the symbol taking `inside_value` on E and `outside_value` on the
/// complement. `endpoints` holds `n_intervals` pairs (lo, hi) in radians,
/// each inside (−π, π], sorted and disjoint.
///
/// # Safety
/// `endpoints` must point to `2 * n_intervals` readable doubles and `out`
/// to a writable pointer slot.
#[no_mangle]
pub unsafe extern "C" fn specpol_symbol_two_valued(
    endpoints: *const f64,
    n_intervals: usize,
    inside_value: f64,
    outside_value: f64,
    out: *mut *mut SpecpolSymbol,
) -> SpecpolStatus {
    if out.is_null() || (endpoints.is_null() && n_intervals > 0) {
        return SpecpolStatus::NullPointer;
    }
    let pairs: Vec<(f64, f64)> = (0..n_intervals)
        .map(|i| (*endpoints.add(2 * i), *endpoints.add(2 * i + 1)))
        .collect();
    match IntervalSet::new(pairs) {
        Ok(e) => {
            let symbol = PiecewiseSymbol::two_valued(&e, inside_value, outside_value);
            *out = Box::into_raw(Box::new(SpecpolSymbol { e, symbol }));
            SpecpolStatus::Ok
        }
        Err(err) => fail(SpecpolStatus::InvalidArgument, &err),
    }
}

/// # Safety
/// `symbol` must be a pointer from `specpol_symbol_two_valued`, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn specpol_symbol_free(symbol: *mut SpecpolSymbol) {
    if !symbol.is_null() {
        drop(Box::from_raw(symbol));
    }
}

/// Moment matrices of the multiplication operator on the window −n..n.
///
/// # Safety
/// `symbol` must be a live symbol handle and `out` a writable pointer slot.
#[no_mangle]
pub unsafe extern "C" fn specpol_moments_multiplication(
    symbol: *const SpecpolSymbol,
    n: usize,
    out: *mut *mut SpecpolMoments,
) -> SpecpolStatus {
    if symbol.is_null() || out.is_null() {
        return SpecpolStatus::NullPointer;
    }
    let inner = assemble_multiplication(&(*symbol).symbol, n, "ffi");
    *out = Box::into_raw(Box::new(SpecpolMoments { inner }));
    SpecpolStatus::Ok
}

/// Moment matrices of the operator perturbed by the rank-one term
/// a⟨·, ψ⟩ψ with constant unit-norm ψ.
///
/// # Safety
/// `symbol` must be a live symbol handle and `out` a writable pointer slot.
#[no_mangle]
pub unsafe extern "C" fn specpol_moments_rank_one_constant(
    symbol: *const SpecpolSymbol,
    coupling: f64,
    n: usize,
    out: *mut *mut SpecpolMoments,
) -> SpecpolStatus {
    if symbol.is_null() || out.is_null() {
        return SpecpolStatus::NullPointer;
    }
    let pert = match RankOneTerm::constant(coupling) {
        Ok(p) => p,
        Err(err) => return fail(SpecpolStatus::InvalidArgument, &err),
    };
    match assemble_rank_one(&(*symbol).symbol, &pert, n, "ffi") {
        Ok(inner) => {
            *out = Box::into_raw(Box::new(SpecpolMoments { inner }));
            SpecpolStatus::Ok
        }
        Err(err) => fail(SpecpolStatus::InvalidArgument, &err),
    }
}

/// Same with band-limited ψ given by `len` centered coefficients
/// (`len` odd; unit ℓ² norm; support must fit inside the window).
///
/// # Safety
/// `coeff_re`/`coeff_im` must each point to `len` readable doubles.
#[no_mangle]
pub unsafe extern "C" fn specpol_moments_rank_one(
    symbol: *const SpecpolSymbol,
    coupling: f64,
    coeff_re: *const f64,
    coeff_im: *const f64,
    len: usize,
    n: usize,
    out: *mut *mut SpecpolMoments,
) -> SpecpolStatus {
    if symbol.is_null() || out.is_null() || coeff_re.is_null() || coeff_im.is_null() {
        return SpecpolStatus::NullPointer;
    }
    let coeffs: Vec<Complex64> = (0..len)
        .map(|i| Complex64::new(*coeff_re.add(i), *coeff_im.add(i)))
        .collect();
    let pert = match RankOneTerm::with_coefficients(coupling, coeffs) {
        Ok(p) => p,
        Err(err) => return fail(SpecpolStatus::InvalidArgument, &err),
    };
    match assemble_rank_one(&(*symbol).symbol, &pert, n, "ffi") {
        Ok(inner) => {
            *out = Box::into_raw(Box::new(SpecpolMoments { inner }));
            SpecpolStatus::Ok
        }
        Err(err) => fail(SpecpolStatus::InvalidArgument, &err),
    }
}

/// Matrix dimension d (= 2n+1 for window assemblies); 0 for null.
///
/// # Safety
/// `moments` must be null or a live moments handle.
#[no_mangle]
pub unsafe extern "C" fn specpol_moments_dim(moments: *const SpecpolMoments) -> usize {
    if moments.is_null() {
        0
    } else {
        (*moments).inner.dim()
    }
}

/// # Safety
/// `moments` must be a pointer from a moments constructor, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn specpol_moments_free(moments: *mut SpecpolMoments) {
    if !moments.is_null() {
        drop(Box::from_raw(moments));
    }
}

/// Computes the second-order spectrum (all 2d pencil roots).
///
/// # Safety
/// `moments` must be a live moments handle and `out` a writable pointer slot.
#[no_mangle]
pub unsafe extern "C" fn specpol_spec2(
    moments: *const SpecpolMoments,
    out: *mut *mut SpecpolSpectrum,
) -> SpecpolStatus {
    if moments.is_null() || out.is_null() {
        return SpecpolStatus::NullPointer;
    }
    match second_order_spectrum(&(*moments).inner) {
        Ok(inner) => {
            *out = Box::into_raw(Box::new(SpecpolSpectrum { inner }));
            SpecpolStatus::Ok
        }
        Err(err) => {
            let status = classify(&err);
            fail(status, &err)
        }
    }
}

/// Number of spectrum points (2d).
///
/// # Safety
/// `spectrum` must be null or a live spectrum handle.
#[no_mangle]
pub unsafe extern "C" fn specpol_spec2_len(spectrum: *const SpecpolSpectrum) -> usize {
    if spectrum.is_null() {
        0
    } else {
        (*spectrum).inner.len()
    }
}

/// Copies the points (sorted by re, then im) into caller buffers.
///
/// # Safety
/// `out_re` and `out_im` must each point to at least `capacity` writable
/// doubles; `spectrum` must be a live spectrum handle.
#[no_mangle]
pub unsafe extern "C" fn specpol_spec2_points(
    spectrum: *const SpecpolSpectrum,
    out_re: *mut f64,
    out_im: *mut f64,
    capacity: usize,
) -> SpecpolStatus {
    if spectrum.is_null() || out_re.is_null() || out_im.is_null() {
        return SpecpolStatus::NullPointer;
    }
    let points = (*spectrum).inner.points();
    if capacity < points.len() {
        set_error(format!("need capacity {}, got {capacity}", points.len()));
        return SpecpolStatus::BufferTooSmall;
    }
    for (i, z) in points.iter().enumerate() {
        *out_re.add(i) = z.re;
        *out_im.add(i) = z.im;
    }
    SpecpolStatus::Ok
}

/// # Safety
/// `spectrum` must be a pointer from `specpol_spec2`, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn specpol_spec2_free(spectrum: *mut SpecpolSpectrum) {
    if !spectrum.is_null() {
        drop(Box::from_raw(spectrum));
    }
}

/// Enclosure intervals [Re z − |Im z|, Re z + |Im z|] of the upper-half
/// points, sorted by lower endpoint. Pass a negative `max_half_width` to
/// disable the width filter. Writes up to `capacity` intervals and stores
/// the total available count in `written`.
///
/// # Safety
/// `out_lo`/`out_hi` must point to `capacity` writable doubles each;
/// `written` must be writable.
#[no_mangle]
pub unsafe extern "C" fn specpol_enclosures(
    spectrum: *const SpecpolSpectrum,
    max_half_width: f64,
    out_lo: *mut f64,
    out_hi: *mut f64,
    capacity: usize,
    written: *mut usize,
) -> SpecpolStatus {
    if spectrum.is_null() || out_lo.is_null() || out_hi.is_null() || written.is_null() {
        return SpecpolStatus::NullPointer;
    }
    let cap = if max_half_width < 0.0 { None } else { Some(max_half_width) };
    let list = enclosures(&(*spectrum).inner, cap);
    *written = list.len();
    if capacity < list.len() {
        set_error(format!("need capacity {}, got {capacity}", list.len()));
        return SpecpolStatus::BufferTooSmall;
    }
    for (i, e) in list.iter().enumerate() {
        *out_lo.add(i) = e.lo;
        *out_hi.add(i) = e.hi;
    }
    SpecpolStatus::Ok
}

/// σ(z): smallest singular value of the pencil z²I − 2zA + B.
///
/// # Safety
/// `moments` must be a live moments handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn specpol_sigma(
    moments: *const SpecpolMoments,
    re: f64,
    im: f64,
    out: *mut f64,
) -> SpecpolStatus {
    if moments.is_null() || out.is_null() {
        return SpecpolStatus::NullPointer;
    }
    *out = sigma(&(*moments).inner, Complex64::new(re, im));
    SpecpolStatus::Ok
}

/// Discrete eigenvalues of the ±1-symbol operator perturbed by the constant
/// rank-one term (0, 1 or 2 values). Stores the count in `written`.
///
/// # Safety
/// `out` must point to `capacity` writable doubles; `written` must be
/// writable; `symbol` must be a live symbol handle.
#[no_mangle]
pub unsafe extern "C" fn specpol_discrete_eigenvalues(
    symbol: *const SpecpolSymbol,
    coupling: f64,
    out: *mut f64,
    capacity: usize,
    written: *mut usize,
) -> SpecpolStatus {
    if symbol.is_null() || out.is_null() || written.is_null() {
        return SpecpolStatus::NullPointer;
    }
    let pert = match RankOneTerm::constant(coupling) {
        Ok(p) => p,
        Err(err) => return fail(SpecpolStatus::InvalidArgument, &err),
    };
    let roots = discrete_eigenvalues_rank_one(&(*symbol).e, &pert);
    *written = roots.len();
    if capacity < roots.len() {
        set_error(format!("need capacity {}, got {capacity}", roots.len()));
        return SpecpolStatus::BufferTooSmall;
    }
    for (i, r) in roots.iter().enumerate() {
        *out.add(i) = *r;
    }
    SpecpolStatus::Ok
}
