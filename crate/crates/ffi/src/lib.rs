//! C interface to `flexrcc`.
//!
//! Every function returns a [`FlexrccStatus`]. On failure a message is kept
//! per thread and can be read with [`flexrcc_last_error_message`]. Matrices
//! cross the boundary as 36 doubles in row-major order, wrench first
//! (F, M) and twist first (d, θ), in N, mm and rad.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::path::Path;
use std::ptr;

use flexrcc::analysis::fit_creep;
use flexrcc::mechanism::{center_of_compliance, ideal_fourbar_center, mechanism_stiffness, static_deflection, Mechanism};
use flexrcc::spatial::invert;
use flexrcc::{fixtures, io, Error, MatrixKind, SpatialMatrix6};
use nalgebra::{Matrix6, Vector6};

/// Result code of every entry point.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FlexrccStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidInput = 2,
    Numerical = 3,
    Io = 4,
    Panic = 5,
}

/// Assembled mechanism with its stiffness and compliance at the reference.
pub struct FlexrccMechanism {
    mechanism: Mechanism,
    stiffness: SpatialMatrix6,
    compliance: SpatialMatrix6,
}

/// Fitted relaxation model `F(t) = F_ss + (F0 − F_ss) exp(−t/τ)`.
#[repr(C)]
#[derive(Debug, Clone, Copy, Default, PartialEq)]
pub struct FlexrccCreepFit {
    pub f0: f64,
    pub f_ss: f64,
    /// Infinite when the data show no decay.
    pub tau: f64,
    pub tau_identifiable: bool,
    pub spans_time_constant: bool,
    pub residual_norm: f64,
    pub iterations: usize,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_last_error(message: String) {
    let c = CString::new(message.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|slot| *slot.borrow_mut() = Some(c));
}

fn clear_last_error() {
    LAST_ERROR.with(|slot| *slot.borrow_mut() = None);
}

fn status_of(e: &Error) -> FlexrccStatus {
    match e {
        Error::Io { .. } => FlexrccStatus::Io,
        e if e.is_numerical() => FlexrccStatus::Numerical,
        _ => FlexrccStatus::InvalidInput,
    }
}

enum Failure {
    Null(&'static str),
    Core(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Core(e)
    }
}

fn guard(f: impl FnOnce() -> Result<(), Failure>) -> FlexrccStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => {
            clear_last_error();
            FlexrccStatus::Ok
        }
        Ok(Err(Failure::Null(name))) => {
            set_last_error(format!("null pointer: {name}"));
            FlexrccStatus::NullPointer
        }
        Ok(Err(Failure::Core(e))) => {
            set_last_error(e.to_string());
            status_of(&e)
        }
        Err(payload) => {
            let msg = payload
                .downcast_ref::<&str>()
                .map(|s| s.to_string())
                .or_else(|| payload.downcast_ref::<String>().cloned())
                .unwrap_or_else(|| "unknown panic".to_string());
            set_last_error(format!("panic: {msg}"));
            FlexrccStatus::Panic
        }
    }
}

fn non_null<T>(p: *const T, name: &'static str) -> Result<(), Failure> {
    if p.is_null() {
        Err(Failure::Null(name))
    } else {
        Ok(())
    }
}

unsafe fn read_matrix(p: *const f64, kind: MatrixKind) -> SpatialMatrix6 {
    let s = std::slice::from_raw_parts(p, 36);
    SpatialMatrix6::new(Matrix6::from_row_slice(s), kind)
}

unsafe fn write_matrix(m: &SpatialMatrix6, out: *mut f64) {
    let out = std::slice::from_raw_parts_mut(out, 36);
    for i in 0..6 {
        for j in 0..6 {
            out[6 * i + j] = m.matrix()[(i, j)];
        }
    }
}

fn assemble(mechanism: Mechanism) -> Result<Box<FlexrccMechanism>, Error> {
    let stiffness = mechanism_stiffness(&mechanism)?;
    let compliance = invert(&stiffness)?;
    Ok(Box::new(FlexrccMechanism {
        mechanism,
        stiffness,
        compliance,
    }))
}

/// Library version as a static NUL-terminated string.
#[no_mangle]
pub extern "C" fn flexrcc_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}

/// Message of the last failed call on this thread, or NULL after a success.
/// The pointer stays valid until the next call into the library on this thread.
#[no_mangle]
pub extern "C" fn flexrcc_last_error_message() -> *const c_char {
    LAST_ERROR.with(|slot| slot.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

/// Parses and assembles a mechanism file. On success `*out` owns a handle
/// to be released with [`flexrcc_mechanism_free`].
///
/// # Safety
/// `path` must be a NUL-terminated string and `out` a writable pointer.
#[no_mangle]
pub unsafe extern "C" fn flexrcc_mechanism_load(path: *const c_char, out: *mut *mut FlexrccMechanism) -> FlexrccStatus {
    guard(|| {
        non_null(path, "path")?;
        non_null(out, "out")?;
        *out = ptr::null_mut();
        let path = CStr::from_ptr(path)
            .to_str()
            .map_err(|_| Error::OutOfDomain("path", "not valid UTF-8".to_string()))?;
        let doc = io::parse_mechanism(Path::new(path))?;
        *out = Box::into_raw(assemble(doc.build()?)?);
        Ok(())
    })
}

/// Loads the bundled four-limb example mechanism.
///
/// # Safety
/// `out` must be a writable pointer.
#[no_mangle]
pub unsafe extern "C" fn flexrcc_mechanism_load_small_rcc(out: *mut *mut FlexrccMechanism) -> FlexrccStatus {
    guard(|| {
        non_null(out, "out")?;
        *out = ptr::null_mut();
        *out = Box::into_raw(assemble(fixtures::small_rcc()?.build()?)?);
        Ok(())
    })
}

/// Releases a handle. NULL is ignored.
///
/// # Safety
/// `m` must come from a load function and not have been freed.
#[no_mangle]
pub unsafe extern "C" fn flexrcc_mechanism_free(m: *mut FlexrccMechanism) {
    if !m.is_null() {
        drop(Box::from_raw(m));
    }
}

/// Number of limbs.
///
/// # Safety
/// `m` must be a live handle and `out` a writable pointer.
#[no_mangle]
pub unsafe extern "C" fn flexrcc_mechanism_limb_count(m: *const FlexrccMechanism, out: *mut usize) -> FlexrccStatus {
    guard(|| {
        non_null(m, "mechanism")?;
        non_null(out, "out")?;
        *out = (*m).mechanism.limbs().len();
        Ok(())
    })
}

/// Total number of elements over all limbs.
///
/// # Safety
/// `m` must be a live handle and `out` a writable pointer.
#[no_mangle]
pub unsafe extern "C" fn flexrcc_mechanism_element_count(m: *const FlexrccMechanism, out: *mut usize) -> FlexrccStatus {
    guard(|| {
        non_null(m, "mechanism")?;
        non_null(out, "out")?;
        *out = (*m).mechanism.element_count();
        Ok(())
    })
}

/// Stiffness matrix at the reference point.
///
/// # Safety
/// `m` must be a live handle and `out` must hold 36 doubles.
#[no_mangle]
pub unsafe extern "C" fn flexrcc_mechanism_stiffness(m: *const FlexrccMechanism, out: *mut f64) -> FlexrccStatus {
    guard(|| {
        non_null(m, "mechanism")?;
        non_null(out, "out")?;
        write_matrix(&(*m).stiffness, out);
        Ok(())
    })
}

/// Compliance matrix at the reference point.
///
/// # Safety
/// `m` must be a live handle and `out` must hold 36 doubles.
#[no_mangle]
pub unsafe extern "C" fn flexrcc_mechanism_compliance(m: *const FlexrccMechanism, out: *mut f64) -> FlexrccStatus {
    guard(|| {
        non_null(m, "mechanism")?;
        non_null(out, "out")?;
        write_matrix(&(*m).compliance, out);
        Ok(())
    })
}

/// Height of the z-rotation center from the compliance matrix, mm.
///
/// # Safety
/// `m` must be a live handle and `out` a writable pointer.
#[no_mangle]
pub unsafe extern "C" fn flexrcc_mechanism_rcc_height(m: *const FlexrccMechanism, out: *mut f64) -> FlexrccStatus {
    guard(|| {
        non_null(m, "mechanism")?;
        non_null(out, "out")?;
        *out = center_of_compliance(&(*m).compliance)?;
        Ok(())
    })
}

/// Intersection height of the two leg axes, mm.
///
/// # Safety
/// `m` must be a live handle and `out` a writable pointer.
#[no_mangle]
pub unsafe extern "C" fn flexrcc_mechanism_ideal_center(m: *const FlexrccMechanism, out: *mut f64) -> FlexrccStatus {
    guard(|| {
        non_null(m, "mechanism")?;
        non_null(out, "out")?;
        *out = ideal_fourbar_center(&(*m).mechanism)?;
        Ok(())
    })
}

/// Height `C33 / C53` of the rotation center of a compliance matrix.
///
/// # Safety
/// `compliance` must hold 36 doubles and `out` be writable.
#[no_mangle]
pub unsafe extern "C" fn flexrcc_center_of_compliance(compliance: *const f64, out: *mut f64) -> FlexrccStatus {
    guard(|| {
        non_null(compliance, "compliance")?;
        non_null(out, "out")?;
        *out = center_of_compliance(&read_matrix(compliance, MatrixKind::Compliance))?;
        Ok(())
    })
}

/// Solves `K ξ = F` for the twist under a wrench.
///
/// # Safety
/// `stiffness` must hold 36 doubles, `wrench` 6 and `out` 6 writable doubles.
#[no_mangle]
pub unsafe extern "C" fn flexrcc_static_deflection(
    stiffness: *const f64,
    wrench: *const f64,
    out: *mut f64,
) -> FlexrccStatus {
    guard(|| {
        non_null(stiffness, "stiffness")?;
        non_null(wrench, "wrench")?;
        non_null(out, "out")?;
        let k = read_matrix(stiffness, MatrixKind::Stiffness);
        let w = Vector6::from_column_slice(std::slice::from_raw_parts(wrench, 6));
        let twist = static_deflection(&k, &w)?;
        std::slice::from_raw_parts_mut(out, 6).copy_from_slice(twist.as_slice());
        Ok(())
    })
}

/// Fits the relaxation model to `n` samples of time (s) and force (N).
///
/// # Safety
/// `times` and `forces` must each hold `n` doubles and `out` be writable.
#[no_mangle]
pub unsafe extern "C" fn flexrcc_creep_fit(
    times: *const f64,
    forces: *const f64,
    n: usize,
    out: *mut FlexrccCreepFit,
) -> FlexrccStatus {
    guard(|| {
        non_null(times, "times")?;
        non_null(forces, "forces")?;
        non_null(out, "out")?;
        let t = std::slice::from_raw_parts(times, n);
        let f = std::slice::from_raw_parts(forces, n);
        let samples: Vec<(f64, f64)> = t.iter().copied().zip(f.iter().copied()).collect();
        let fit = fit_creep(&samples)?;
        *out = FlexrccCreepFit {
            f0: fit.model.f0,
            f_ss: fit.model.f_ss,
            tau: fit.model.tau,
            tau_identifiable: fit.tau_identifiable,
            spans_time_constant: fit.spans_time_constant,
            residual_norm: fit.residual_norm,
            iterations: fit.iterations,
        };
        Ok(())
    })
}

/// Saint-Venant torsion constant of a rectangle with the given sides, mm⁴.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn flexrcc_torsion_constant(side_a: f64, side_b: f64, out: *mut f64) -> FlexrccStatus {
    guard(|| {
        non_null(out, "out")?;
        *out = flexrcc::elements::torsion_constant(side_a, side_b)?;
        Ok(())
    })
}
