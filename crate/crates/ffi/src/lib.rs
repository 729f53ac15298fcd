//! C ABI over `cayley-pst`.
//!
//! Every fallible call returns a [`CpStatus`]; on failure the message is
//! available from [`cp_last_error`] until the next failing call on the same
//! thread. Handles are opaque and must be released with the matching
//! `*_free` function.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::sync::Arc;

use cayley_pst::cayley::{make_connection_set, ConnectionSet, OrientedCayleyGraph};
use cayley_pst::group::{GroupSpec, GroupTable};
use cayley_pst::pst::{check_pst_at, compute_s_e, oracle_for, solve_pst_time};
use cayley_pst::{Error, GroupContext, RunConfig};

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CpStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidArgument = 2,
    SizeLimit = 3,
    Numerical = 4,
    Verification = 5,
    BufferTooSmall = 6,
    Panic = 7,
}

/// Group with its classes and character table.
pub struct CpGroup {
    ctx: Arc<GroupContext>,
}

/// Oriented normal Cayley graph on a [`CpGroup`]; keeps the group alive.
pub struct CpGraph {
    ctx: Arc<GroupContext>,
    conn: ConnectionSet,
}

impl CpGraph {
    fn graph(&self) -> OrientedCayleyGraph<'_> {
        OrientedCayleyGraph::new(&self.ctx.group, &self.ctx.conj, self.conn.clone())
            .expect("connection set was validated on creation")
    }
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: String) {
    let c = CString::new(msg.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(c));
}

fn status_of(err: &Error) -> CpStatus {
    match err {
        Error::SizeLimit { .. } => CpStatus::SizeLimit,
        Error::NumericalFailure(_) => CpStatus::Numerical,
        Error::Inconsistency(_) | Error::InvariantBreach(_) => CpStatus::Verification,
        _ => CpStatus::InvalidArgument,
    }
}

fn guard(f: impl FnOnce() -> Result<(), CpStatus>) -> CpStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => CpStatus::Ok,
        Ok(Err(s)) => s,
        Err(_) => {
            set_error("internal panic".into());
            CpStatus::Panic
        }
    }
}

fn fail(err: Error) -> CpStatus {
    let s = status_of(&err);
    set_error(err.to_string());
    s
}

fn null(what: &str) -> CpStatus {
    set_error(format!("{what} is null"));
    CpStatus::NullPointer
}

unsafe fn read_str<'a>(p: *const c_char, what: &str) -> Result<&'a str, CpStatus> {
    if p.is_null() {
        return Err(null(what));
    }
    CStr::from_ptr(p).to_str().map_err(|_| {
        set_error(format!("{what} is not valid UTF-8"));
        CpStatus::InvalidArgument
    })
}

unsafe fn deref<'a, T>(p: *const T, what: &str) -> Result<&'a T, CpStatus> {
    p.as_ref().ok_or_else(|| null(what))
}

fn check_out<T>(p: *mut T, what: &str) -> Result<(), CpStatus> {
    if p.is_null() {
        Err(null(what))
    } else {
        Ok(())
    }
}

/// Message of the last failed call on this thread, or null. Owned by the
/// library; valid until the next failing call.
#[no_mangle]
pub extern "C" fn cp_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(std::ptr::null(), |c| c.as_ptr()))
}

/// Library version as a static NUL-terminated string.
#[no_mangle]
pub extern "C" fn cp_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}

fn finish_group(group: GroupTable, out: *mut *mut CpGroup) -> Result<(), CpStatus> {
    let ctx = GroupContext::new(group, &RunConfig::default()).map_err(fail)?;
    let h = Box::new(CpGroup { ctx: Arc::new(ctx) });
    unsafe { *out = Box::into_raw(h) };
    Ok(())
}

/// Builds a group from a spec such as `z:8`, `z4^2`, `m2:5` or `wreath:2:z:3`.
///
/// # Safety
/// `spec` must be a NUL-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn cp_group_from_spec(spec: *const c_char, out: *mut *mut CpGroup) -> CpStatus {
    guard(|| {
        check_out(out, "out")?;
        let s = read_str(spec, "spec")?;
        let spec: GroupSpec = s.parse().map_err(fail)?;
        finish_group(spec.build(RunConfig::default().max_order).map_err(fail)?, out)
    })
}

/// Loads a group from its JSON table document.
///
/// # Safety
/// `json` must be a NUL-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn cp_group_from_json(json: *const c_char, out: *mut *mut CpGroup) -> CpStatus {
    guard(|| {
        check_out(out, "out")?;
        let s = read_str(json, "json")?;
        finish_group(GroupTable::from_json(s).map_err(fail)?, out)
    })
}

/// # Safety
/// `g` must come from `cp_group_from_*` and not be used afterwards; null is ignored.
#[no_mangle]
pub unsafe extern "C" fn cp_group_free(g: *mut CpGroup) {
    if !g.is_null() {
        drop(Box::from_raw(g));
    }
}

/// # Safety
/// `g` must be a live group handle or null (returns 0).
#[no_mangle]
pub unsafe extern "C" fn cp_group_order(g: *const CpGroup) -> usize {
    g.as_ref().map_or(0, |g| g.ctx.group.order())
}

/// # Safety
/// `g` must be a live group handle or null (returns 0).
#[no_mangle]
pub unsafe extern "C" fn cp_group_num_classes(g: *const CpGroup) -> usize {
    g.as_ref().map_or(0, |g| g.ctx.conj.num_classes())
}

/// Element index of a label such as `x^4` or `(1,0)`.
///
/// # Safety
/// `g` must be a live group handle, `label` NUL-terminated, `out` valid.
#[no_mangle]
pub unsafe extern "C" fn cp_group_find_label(g: *const CpGroup, label: *const c_char, out: *mut usize) -> CpStatus {
    guard(|| {
        let g = deref(g, "group")?;
        check_out(out, "out")?;
        let s = read_str(label, "label")?;
        let x = g.ctx.group.find_label(s).ok_or_else(|| {
            set_error(format!("no element '{s}'"));
            CpStatus::InvalidArgument
        })?;
        *out = x;
        Ok(())
    })
}

/// Conjugacy class index of an element.
///
/// # Safety
/// `g` must be a live group handle and `out` valid.
#[no_mangle]
pub unsafe extern "C" fn cp_group_class_of(g: *const CpGroup, element: usize, out: *mut usize) -> CpStatus {
    guard(|| {
        let g = deref(g, "group")?;
        check_out(out, "out")?;
        if element >= g.ctx.group.order() {
            set_error(format!("element {element} out of range"));
            return Err(CpStatus::InvalidArgument);
        }
        *out = g.ctx.conj.class_of(element);
        Ok(())
    })
}

/// Cayley graph on the union of the given classes; orientation and
/// normality are validated.
///
/// # Safety
/// `g` must be a live group handle, `classes` must point to `len` indices,
/// and `out` must be valid.
#[no_mangle]
pub unsafe extern "C" fn cp_graph_new(
    g: *const CpGroup,
    classes: *const usize,
    len: usize,
    out: *mut *mut CpGraph,
) -> CpStatus {
    guard(|| {
        let g = deref(g, "group")?;
        check_out(out, "out")?;
        if classes.is_null() && len > 0 {
            return Err(null("classes"));
        }
        let cls = if len == 0 { &[][..] } else { std::slice::from_raw_parts(classes, len) };
        let conn = make_connection_set(&g.ctx.conj, cls).map_err(fail)?;
        *out = Box::into_raw(Box::new(CpGraph { ctx: Arc::clone(&g.ctx), conn }));
        Ok(())
    })
}

/// # Safety
/// `h` must come from `cp_graph_new` and not be used afterwards; null is ignored.
#[no_mangle]
pub unsafe extern "C" fn cp_graph_free(h: *mut CpGraph) {
    if !h.is_null() {
        drop(Box::from_raw(h));
    }
}

/// Character criterion for PST `e -> z` at `tau`.
///
/// # Safety
/// `h` must be a live graph handle; `residual` and `accepted` valid pointers.
#[no_mangle]
pub unsafe extern "C" fn cp_pst_check(
    h: *const CpGraph,
    z: usize,
    tau: f64,
    residual: *mut f64,
    accepted: *mut bool,
) -> CpStatus {
    guard(|| {
        let h = deref(h, "graph")?;
        check_out(residual, "residual")?;
        check_out(accepted, "accepted")?;
        let c = check_pst_at(&h.graph(), &h.ctx.table, z, tau, &RunConfig::default()).map_err(fail)?;
        *residual = c.residual;
        *accepted = c.accepted;
        Ok(())
    })
}

/// Smallest PST time `e -> z`; `found` is false when none exists.
///
/// # Safety
/// `h` must be a live graph handle; `tau` and `found` valid pointers.
#[no_mangle]
pub unsafe extern "C" fn cp_pst_solve(h: *const CpGraph, z: usize, tau: *mut f64, found: *mut bool) -> CpStatus {
    guard(|| {
        let h = deref(h, "graph")?;
        check_out(tau, "tau")?;
        check_out(found, "found")?;
        let o = solve_pst_time(&h.graph(), &h.ctx.table, z, false, &RunConfig::default()).map_err(fail)?;
        *found = o.certificate.is_some();
        *tau = o.certificate.map_or(f64::NAN, |c| c.tau);
        Ok(())
    })
}

/// `S_e`: writes its size and minimal time, and up to `cap` elements into
/// `elements`. Returns `BufferTooSmall` (with `size` set) if `cap < size`.
///
/// # Safety
/// `h` must be a live graph handle; `size`, `tau` valid; `elements` must hold
/// `cap` entries (may be null when `cap == 0`).
#[no_mangle]
pub unsafe extern "C" fn cp_mst(
    h: *const CpGraph,
    size: *mut usize,
    tau: *mut f64,
    elements: *mut usize,
    cap: usize,
) -> CpStatus {
    guard(|| {
        let h = deref(h, "graph")?;
        check_out(size, "size")?;
        check_out(tau, "tau")?;
        let r = compute_s_e(&h.graph(), &h.ctx.table, &RunConfig::default()).map_err(fail)?;
        *size = r.size;
        *tau = r.minimal_time.unwrap_or(f64::NAN);
        if cap < r.s_e.len() {
            set_error(format!("S_e has {} elements, buffer holds {cap}", r.s_e.len()));
            return Err(CpStatus::BufferTooSmall);
        }
        check_out(elements, "elements")?;
        std::slice::from_raw_parts_mut(elements, cap)[..r.s_e.len()].copy_from_slice(&r.s_e);
        Ok(())
    })
}

/// `|U(t)[b][a]|` from the walk matrix.
///
/// # Safety
/// `h` must be a live graph handle and `out` valid.
#[no_mangle]
pub unsafe extern "C" fn cp_fidelity(h: *const CpGraph, a: usize, b: usize, t: f64, out: *mut f64) -> CpStatus {
    guard(|| {
        let h = deref(h, "graph")?;
        check_out(out, "out")?;
        let n = h.ctx.group.order();
        if a >= n || b >= n || !t.is_finite() {
            set_error("vertex out of range or time not finite".into());
            return Err(CpStatus::InvalidArgument);
        }
        let op = oracle_for(&h.graph(), &RunConfig::default()).map_err(fail)?;
        *out = op.fidelity(t, a, b).value;
        Ok(())
    })
}
