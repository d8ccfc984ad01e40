//! C ABI over the `monodisk` library.
//!
//! Tilings cross the boundary as opaque `MdTiling` handles owned by the
//! caller and released with [`md_tiling_free`]. Every fallible call returns an
//! [`MdStatus`]; on failure a message for the calling thread is available from
//! [`md_last_error`]. Strings handed out by the library must be released with
//! [`md_string_free`]. Panics never unwind into C: they surface as
//! `MD_STATUS_PANIC`.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use monodisk::combinatorics::{self, CombinatoricsError, GrooveClass};
use monodisk::families::{
    self, build_c, build_ctilde, build_d, build_d31, default_ctilde_groove, s_curve_side, tile_disk_radial,
    CtildeVariant, EdgeWord, FamilyError, Pivot, Tiling, ValidationOptions,
};
use monodisk::geometry::{Path, PathSegment, Point};
use monodisk::io::{self, DocumentError, SvgStyle};
use monodisk::wedge::WedgeError;

/// Result of every fallible call.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MdStatus {
    Ok = 0,
    /// A required pointer argument was NULL.
    NullPointer = 1,
    /// Parameters outside the domain of the requested operation.
    InvalidArgument = 2,
    /// A geometric construction failed.
    Geometry = 3,
    /// A tiling document could not be parsed.
    Document = 4,
    /// A string argument was not valid UTF-8.
    InvalidUtf8 = 5,
    /// The library panicked; the message describes where.
    Panic = 6,
}

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MdFamily {
    /// `n` straight radial sectors.
    Symradial = 0,
    /// `n` sectors bounded by a fixed s-curve.
    Radgen = 1,
    D = 2,
    /// The sporadic twelve-tile member for n = 3.
    D31 = 3,
    C = 4,
    Ctilde = 5,
}

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MdChirality {
    A = 0,
    B = 1,
}

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MdPivot {
    AboutP = 0,
    AboutQ = 1,
}

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MdSvgStyle {
    Stroke = 0,
    /// Fill tiles by orientation.
    Colored = 1,
}

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MdCountFamily {
    C = 0,
    Ctilde = 1,
    D = 2,
    /// Family D with the groove at its critical length (n = 3 only).
    DCritical = 3,
}

/// Parameters for [`md_tiling_build`]. Fields a family does not use are
/// ignored; `word` may be NULL, meaning the all-short word.
#[repr(C)]
#[derive(Clone, Copy, Debug)]
pub struct MdBuildParams {
    pub family: MdFamily,
    pub n: u32,
    pub k: u32,
    pub t: f64,
    pub word: *const c_char,
    pub chirality: MdChirality,
    pub pivot: MdPivot,
}

/// Summary of [`md_tiling_validate`]. Use [`md_tiling_validate_json`] for the
/// individual failure messages.
#[repr(C)]
#[derive(Clone, Copy, Debug, Default, PartialEq)]
pub struct MdReport {
    pub valid: bool,
    pub monohedral: bool,
    pub tile_count: usize,
    pub center_touch_count: usize,
    pub boundary_touch_count: usize,
    pub cyclic_symmetry_order: usize,
    pub has_mirror_symmetry: bool,
    pub area_relative_error: f64,
    pub uncovered_samples: usize,
    pub multiply_covered_samples: usize,
    pub failure_count: usize,
}

/// Opaque tiling handle.
pub struct MdTiling {
    inner: Tiling,
}

struct Failure {
    status: MdStatus,
    message: String,
}

impl Failure {
    fn new(status: MdStatus, message: impl Into<String>) -> Self {
        Failure { status, message: message.into() }
    }
}

impl From<FamilyError> for Failure {
    fn from(e: FamilyError) -> Self {
        let status = match e {
            FamilyError::Geometry(_) | FamilyError::Wedge(WedgeError::Geometry(_)) => MdStatus::Geometry,
            _ => MdStatus::InvalidArgument,
        };
        Failure::new(status, e.to_string())
    }
}

impl From<CombinatoricsError> for Failure {
    fn from(e: CombinatoricsError) -> Self {
        Failure::new(MdStatus::InvalidArgument, e.to_string())
    }
}

impl From<DocumentError> for Failure {
    fn from(e: DocumentError) -> Self {
        Failure::new(MdStatus::Document, e.to_string())
    }
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_last_error(message: &str) {
    let c = CString::new(message.replace('\0', "\\0")).expect("NULs replaced");
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(c));
}

fn guard(f: impl FnOnce() -> Result<(), Failure>) -> MdStatus {
    let outcome = catch_unwind(AssertUnwindSafe(f));
    let failure = match outcome {
        Ok(Ok(())) => {
            LAST_ERROR.with(|e| *e.borrow_mut() = None);
            return MdStatus::Ok;
        }
        Ok(Err(f)) => f,
        Err(payload) => {
            let what = payload
                .downcast_ref::<&str>()
                .map(|s| s.to_string())
                .or_else(|| payload.downcast_ref::<String>().cloned())
                .unwrap_or_else(|| "unknown panic".into());
            Failure::new(MdStatus::Panic, format!("panic: {what}"))
        }
    };
    set_last_error(&failure.message);
    failure.status
}

fn non_null<'a, T>(p: *const T, name: &str) -> Result<&'a T, Failure> {
    // SAFETY: callers promise non-NULL pointers are valid for reads.
    unsafe { p.as_ref() }.ok_or_else(|| Failure::new(MdStatus::NullPointer, format!("{name} is NULL")))
}

fn out_slot<'a, T>(p: *mut T, name: &str) -> Result<&'a mut T, Failure> {
    // SAFETY: callers promise non-NULL out pointers are valid for writes.
    unsafe { p.as_mut() }.ok_or_else(|| Failure::new(MdStatus::NullPointer, format!("{name} is NULL")))
}

fn read_str<'a>(p: *const c_char, name: &str) -> Result<&'a str, Failure> {
    if p.is_null() {
        return Err(Failure::new(MdStatus::NullPointer, format!("{name} is NULL")));
    }
    // SAFETY: non-NULL string arguments must be NUL-terminated.
    unsafe { CStr::from_ptr(p) }
        .to_str()
        .map_err(|e| Failure::new(MdStatus::InvalidUtf8, format!("{name}: {e}")))
}

fn hand_out(s: String) -> *mut c_char {
    CString::new(s).expect("library output has no NUL bytes").into_raw()
}

fn chirality(c: MdChirality) -> families::Chirality {
    match c {
        MdChirality::A => families::Chirality::A,
        MdChirality::B => families::Chirality::B,
    }
}

fn build(params: &MdBuildParams) -> Result<Tiling, Failure> {
    let MdBuildParams { family, n, k, t, .. } = *params;
    if !t.is_finite() {
        return Err(Failure::new(MdStatus::InvalidArgument, format!("t = {t} is not finite")));
    }
    let ch = chirality(params.chirality);
    Ok(match family {
        MdFamily::Symradial => {
            let side = Path::from_segments(Point::ORIGIN, vec![PathSegment::line(Point::ORIGIN, Point::new(1.0, 0.0))]);
            tile_disk_radial(&side, n)?
        }
        MdFamily::Radgen => tile_disk_radial(&s_curve_side(), n)?,
        MdFamily::D => build_d(n, t, ch)?,
        MdFamily::D31 => build_d31(ch)?,
        MdFamily::C => {
            let word = if params.word.is_null() {
                EdgeWord::all_short(n, k)
            } else {
                read_str(params.word, "word")?.parse::<EdgeWord>()?
            };
            build_c(n, k, t, &word, ch)?
        }
        MdFamily::Ctilde => {
            let groove = default_ctilde_groove(n, t)?;
            let pivot = match params.pivot {
                MdPivot::AboutP => Pivot::AboutP,
                MdPivot::AboutQ => Pivot::AboutQ,
            };
            build_ctilde(n, k, &groove, CtildeVariant { pivot, chirality: ch })?
        }
    })
}

fn boxed(t: Tiling) -> *mut MdTiling {
    Box::into_raw(Box::new(MdTiling { inner: t }))
}

/// Library version as a static NUL-terminated string. Do not free.
#[no_mangle]
pub extern "C" fn md_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}

/// Message describing the last failed call on this thread, or NULL if the
/// last call succeeded. Valid until the next library call on this thread.
#[no_mangle]
pub extern "C" fn md_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

/// Releases a string returned by this library. NULL is ignored.
///
/// # Safety
/// `s` must come from this library and not have been freed already.
#[no_mangle]
pub unsafe extern "C" fn md_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Builds a tiling. On success `*out` receives a new handle.
///
/// # Safety
/// `params` and `out` must be valid pointers; `params->word` must be NULL or
/// a NUL-terminated string.
#[no_mangle]
pub unsafe extern "C" fn md_tiling_build(params: *const MdBuildParams, out: *mut *mut MdTiling) -> MdStatus {
    guard(|| {
        let params = non_null(params, "params")?;
        let out = out_slot(out, "out")?;
        *out = boxed(build(params)?);
        Ok(())
    })
}

/// Parses a tiling document of `len` bytes.
///
/// # Safety
/// `json` must be valid for `len` bytes and `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn md_tiling_load(json: *const u8, len: usize, out: *mut *mut MdTiling) -> MdStatus {
    guard(|| {
        let json = non_null(json, "json")?;
        let out = out_slot(out, "out")?;
        let bytes = std::slice::from_raw_parts(json as *const u8, len);
        *out = boxed(io::load(bytes)?);
        Ok(())
    })
}

/// Serializes a tiling to a JSON document; free `*out` with
/// [`md_string_free`].
///
/// # Safety
/// `tiling` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn md_tiling_save(tiling: *const MdTiling, out: *mut *mut c_char) -> MdStatus {
    guard(|| {
        let t = non_null(tiling, "tiling")?;
        let out = out_slot(out, "out")?;
        let text = String::from_utf8(io::save(&t.inner)).expect("JSON is UTF-8");
        *out = hand_out(text);
        Ok(())
    })
}

/// Renders a tiling as SVG; free `*out` with [`md_string_free`].
///
/// # Safety
/// `tiling` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn md_tiling_svg(
    tiling: *const MdTiling,
    style: MdSvgStyle,
    size_px: u32,
    out: *mut *mut c_char,
) -> MdStatus {
    guard(|| {
        let t = non_null(tiling, "tiling")?;
        let out = out_slot(out, "out")?;
        if size_px == 0 {
            return Err(Failure::new(MdStatus::InvalidArgument, "size_px must be positive"));
        }
        let style = match style {
            MdSvgStyle::Stroke => SvgStyle::StrokeOnly,
            MdSvgStyle::Colored => SvgStyle::OrientationColored,
        };
        *out = hand_out(io::to_svg(&t.inner, style, size_px));
        Ok(())
    })
}

/// Number of tiles, or 0 for NULL.
///
/// # Safety
/// `tiling` must be NULL or a live handle.
#[no_mangle]
pub unsafe extern "C" fn md_tiling_tile_count(tiling: *const MdTiling) -> usize {
    tiling.as_ref().map_or(0, |t| t.inner.tile_count())
}

fn options(samples: usize, seed: u64) -> ValidationOptions {
    ValidationOptions { samples, seed }
}

/// Validates a tiling with `samples` Monte Carlo points drawn from `seed`.
///
/// # Safety
/// `tiling` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn md_tiling_validate(
    tiling: *const MdTiling,
    samples: usize,
    seed: u64,
    out: *mut MdReport,
) -> MdStatus {
    guard(|| {
        let t = non_null(tiling, "tiling")?;
        let out = out_slot(out, "out")?;
        let r = families::validate_tiling_with(&t.inner, options(samples, seed));
        *out = MdReport {
            valid: r.valid,
            monohedral: r.monohedral,
            tile_count: r.tile_count,
            center_touch_count: r.center_touch_count,
            boundary_touch_count: r.boundary_touch_count,
            cyclic_symmetry_order: r.cyclic_symmetry_order,
            has_mirror_symmetry: r.has_mirror_symmetry,
            area_relative_error: r.area_relative_error,
            uncovered_samples: r.uncovered_samples,
            multiply_covered_samples: r.multiply_covered_samples,
            failure_count: r.failures.len(),
        };
        Ok(())
    })
}

/// Like [`md_tiling_validate`] but returns the full report as JSON.
///
/// # Safety
/// `tiling` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn md_tiling_validate_json(
    tiling: *const MdTiling,
    samples: usize,
    seed: u64,
    out: *mut *mut c_char,
) -> MdStatus {
    guard(|| {
        let t = non_null(tiling, "tiling")?;
        let out = out_slot(out, "out")?;
        let r = families::validate_tiling_with(&t.inner, options(samples, seed));
        *out = hand_out(r.to_json());
        Ok(())
    })
}

/// Sets `*out` to whether the two tilings agree up to rotation about the
/// disk center.
///
/// # Safety
/// `a` and `b` must be live handles and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn md_tiling_same(a: *const MdTiling, b: *const MdTiling, out: *mut bool) -> MdStatus {
    guard(|| {
        let (a, b) = (non_null(a, "a")?, non_null(b, "b")?);
        *out_slot(out, "out")? = families::same_tiling(&a.inner, &b.inner);
        Ok(())
    })
}

/// Releases a tiling handle. NULL is ignored.
///
/// # Safety
/// `tiling` must come from this library and not have been freed already.
#[no_mangle]
pub unsafe extern "C" fn md_tiling_free(tiling: *mut MdTiling) {
    if !tiling.is_null() {
        drop(Box::from_raw(tiling));
    }
}

/// Counts the members of a family as a decimal string; free `*out` with
/// [`md_string_free`]. `k` is ignored for the D families.
///
/// # Safety
/// `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn md_count(family: MdCountFamily, n: u32, k: u32, out: *mut *mut c_char) -> MdStatus {
    guard(|| {
        let out = out_slot(out, "out")?;
        let count = match family {
            MdCountFamily::C => combinatorics::count_c(n, k)?,
            MdCountFamily::Ctilde => combinatorics::count_ctilde(n, k)?,
            MdCountFamily::D => combinatorics::count_d(n, GrooveClass::Interior)?,
            MdCountFamily::DCritical => combinatorics::count_d(n, GrooveClass::Critical)?,
        };
        *out = hand_out(count.to_string());
        Ok(())
    })
}

/// Number of binary necklaces with `a` beads of one colour and `b` of the
/// other, as a decimal string; free `*out` with [`md_string_free`].
///
/// # Safety
/// `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn md_necklace(a: u32, b: u32, out: *mut *mut c_char) -> MdStatus {
    guard(|| {
        let out = out_slot(out, "out")?;
        *out = hand_out(combinatorics::necklace(a, b)?.to_string());
        Ok(())
    })
}
