//! C ABI for the topoctl kernel.
//!
//! Fallible functions return a [`TopoStatus`]. On failure a message is kept
//! per thread and can be read with [`topo_last_error`]. Handles are opaque
//! and each kind has its own `*_free` function. Strings handed out by the
//! library are released with [`topo_string_free`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use topoctl::deduction::{derive, status, ClosedKb, KnowledgeBase, Status};
use topoctl::generated::coreflection;
use topoctl::{dsl, properties, FinSpace, PointSet, TestClass};

/// Result code of every fallible call.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TopoStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    Parse = 3,
    Topology = 4,
    UnknownProperty = 5,
    UnknownClass = 6,
    Kb = 7,
    BufferTooSmall = 8,
    Panic = 99,
}

/// Value of a property on a space. `Undecided` means the checker refused the
/// space, usually because it is too large.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TopoTruth {
    False = 0,
    True = 1,
    Undecided = 2,
}

/// Status of `P => Q` in a knowledge base.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TopoImplication {
    Implies = 0,
    NotImplies = 1,
    Unknown = 2,
}

/// A finite topological space.
pub struct TopoSpace(FinSpace);

/// A knowledge base with all derivable traits filled in.
pub struct TopoKb(ClosedKb);

struct Failure(TopoStatus, String);

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_last_error(message: Option<String>) {
    let message = message.map(|m| CString::new(m.replace('\0', " ")).unwrap_or_default());
    LAST_ERROR.with(|e| *e.borrow_mut() = message);
}

fn guard(f: impl FnOnce() -> Result<(), Failure>) -> TopoStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => {
            set_last_error(None);
            TopoStatus::Ok
        }
        Ok(Err(Failure(code, message))) => {
            set_last_error(Some(message));
            code
        }
        Err(_) => {
            set_last_error(Some("internal panic".into()));
            TopoStatus::Panic
        }
    }
}

fn null(what: &str) -> Failure {
    Failure(TopoStatus::NullPointer, format!("{what} is null"))
}

unsafe fn text<'a>(p: *const c_char, what: &str) -> Result<&'a str, Failure> {
    if p.is_null() {
        return Err(null(what));
    }
    CStr::from_ptr(p).to_str().map_err(|_| Failure(TopoStatus::InvalidUtf8, format!("{what} is not valid UTF-8")))
}

unsafe fn handle<'a, T>(p: *const T, what: &str) -> Result<&'a T, Failure> {
    p.as_ref().ok_or_else(|| null(what))
}

unsafe fn write<T>(out: *mut T, value: T, what: &str) -> Result<(), Failure> {
    if out.is_null() {
        return Err(null(what));
    }
    out.write(value);
    Ok(())
}

fn c_string(s: String) -> *mut c_char {
    CString::new(s.replace('\0', " ")).unwrap_or_default().into_raw()
}

fn topology(e: impl std::fmt::Display) -> Failure {
    Failure(TopoStatus::Topology, e.to_string())
}

fn kb_error(e: impl std::fmt::Display) -> Failure {
    Failure(TopoStatus::Kb, e.to_string())
}

/// Message of the last failed call on this thread, or null after a
/// successful call. The pointer stays valid until the next call on the same
/// thread.
#[no_mangle]
pub extern "C" fn topo_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |m| m.as_ptr()))
}

/// Library version as a static string.
#[no_mangle]
pub extern "C" fn topo_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}

/// Releases a string returned by this library. Null is ignored.
///
/// # Safety
/// `s` must come from this library and not have been freed already.
#[no_mangle]
pub unsafe extern "C" fn topo_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Builds a space on `n` points from its open sets, given as bitmasks where
/// bit `i` stands for point `i`.
///
/// # Safety
/// `opens` must point to `len` readable values (it may be null when `len` is
/// zero) and `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn topo_space_from_opens(
    n: usize,
    opens: *const u64,
    len: usize,
    out: *mut *mut TopoSpace,
) -> TopoStatus {
    guard(|| {
        let bits: &[u64] = match (opens.is_null(), len) {
            (_, 0) => &[],
            (true, _) => return Err(null("opens")),
            (false, _) => std::slice::from_raw_parts(opens, len),
        };
        let space = FinSpace::new(n, bits.iter().map(|&b| PointSet::from_bits(b))).map_err(topology)?;
        write(out, Box::into_raw(Box::new(TopoSpace(space))), "out")
    })
}

/// Parses a space written in the text format. The text must define exactly
/// one space.
///
/// # Safety
/// `source` must be a NUL-terminated string and `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn topo_space_parse(source: *const c_char, out: *mut *mut TopoSpace) -> TopoStatus {
    guard(|| {
        let source = text(source, "source")?;
        let space = dsl::parse_space(source).map_err(|e| Failure(TopoStatus::Parse, e.to_string()))?;
        write(out, Box::into_raw(Box::new(TopoSpace(space))), "out")
    })
}

/// Releases a space. Null is ignored.
///
/// # Safety
/// `space` must come from this library and not have been freed already.
#[no_mangle]
pub unsafe extern "C" fn topo_space_free(space: *mut TopoSpace) {
    if !space.is_null() {
        drop(Box::from_raw(space));
    }
}

/// Number of points, or zero for null.
///
/// # Safety
/// `space` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn topo_space_points(space: *const TopoSpace) -> usize {
    space.as_ref().map_or(0, |s| s.0.n())
}

/// Number of open sets, or zero for null.
///
/// # Safety
/// `space` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn topo_space_open_count(space: *const TopoSpace) -> usize {
    space.as_ref().map_or(0, |s| s.0.opens().len())
}

/// Copies the open sets, in ascending bitmask order, into `buf`. The total
/// count is always stored in `written`; when it exceeds `cap` nothing is
/// copied and `BufferTooSmall` is returned.
///
/// # Safety
/// `buf` must have room for `cap` values (it may be null when `cap` is zero)
/// and `written` must be writable.
#[no_mangle]
pub unsafe extern "C" fn topo_space_opens(
    space: *const TopoSpace,
    buf: *mut u64,
    cap: usize,
    written: *mut usize,
) -> TopoStatus {
    guard(|| {
        let opens = handle(space, "space")?.0.opens();
        write(written, opens.len(), "written")?;
        if opens.len() > cap {
            return Err(Failure(TopoStatus::BufferTooSmall, format!("{} open sets do not fit in {cap}", opens.len())));
        }
        if !opens.is_empty() && buf.is_null() {
            return Err(null("buf"));
        }
        for (i, u) in opens.iter().enumerate() {
            buf.add(i).write(u.bits());
        }
        Ok(())
    })
}

/// Closure of a set of points.
///
/// # Safety
/// `space` must be a live handle and `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn topo_space_closure(space: *const TopoSpace, set: u64, out: *mut u64) -> TopoStatus {
    guard(|| {
        let space = &handle(space, "space")?.0;
        let set = PointSet::from_bits(set);
        if !set.is_subset(space.points()) {
            return Err(topology(topoctl::TopologyError::OutOfRange { set, n: space.n() }));
        }
        write(out, space.closure(set).bits(), "out")
    })
}

/// Evaluates a named property such as `T0`, `US` or `KC`.
///
/// # Safety
/// `space` must be a live handle, `id` a NUL-terminated string and `out`
/// writable.
#[no_mangle]
pub unsafe extern "C" fn topo_space_property(
    space: *const TopoSpace,
    id: *const c_char,
    out: *mut TopoTruth,
) -> TopoStatus {
    guard(|| {
        let space = &handle(space, "space")?.0;
        let id = text(id, "id")?;
        let checker = properties::checker(id).ok_or_else(|| {
            let hints = properties::suggestions(id);
            let mut message = format!("unknown property {id}");
            if !hints.is_empty() {
                message.push_str(&format!(" (did you mean {}?)", hints.join(", ")));
            }
            Failure(TopoStatus::UnknownProperty, message)
        })?;
        let truth = match (checker.eval)(space) {
            Some(true) => TopoTruth::True,
            Some(false) => TopoTruth::False,
            None => TopoTruth::Undecided,
        };
        write(out, truth, "out")
    })
}

/// Coreflection onto the spaces generated by a built-in test class: `P`
/// (indiscrete pair), `A` (Sierpinski space) or `Sfin` (convergent
/// sequences).
///
/// # Safety
/// `space` must be a live handle, `class` a NUL-terminated string and `out`
/// writable.
#[no_mangle]
pub unsafe extern "C" fn topo_space_coreflect(
    space: *const TopoSpace,
    class: *const c_char,
    out: *mut *mut TopoSpace,
) -> TopoStatus {
    guard(|| {
        let space = &handle(space, "space")?.0;
        let name = text(class, "class")?;
        let class = TestClass::builtin(name).ok_or_else(|| {
            Failure(TopoStatus::UnknownClass, format!("unknown class {name} (expected P, A or Sfin)"))
        })?;
        let finer = coreflection(space, &class);
        write(out, Box::into_raw(Box::new(TopoSpace(finer))), "out")
    })
}

/// Renders a space in the text format under the given name. Free the result
/// with [`topo_string_free`].
///
/// # Safety
/// `space` must be a live handle, `name` a NUL-terminated string and `out`
/// writable.
#[no_mangle]
pub unsafe extern "C" fn topo_space_render(
    space: *const TopoSpace,
    name: *const c_char,
    out: *mut *mut c_char,
) -> TopoStatus {
    guard(|| {
        let space = &handle(space, "space")?.0;
        let name = text(name, "name")?;
        if name.is_empty() || name.contains(char::is_whitespace) {
            return Err(Failure(TopoStatus::Parse, format!("invalid space name {name:?}")));
        }
        write(out, c_string(dsl::render(name, space)), "out")
    })
}

fn closed(kb: KnowledgeBase) -> Result<*mut TopoKb, Failure> {
    let closed = derive(&kb).map_err(kb_error)?;
    Ok(Box::into_raw(Box::new(TopoKb(closed))))
}

/// Loads the knowledge base bundled with the library.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn topo_kb_shipped(out: *mut *mut TopoKb) -> TopoStatus {
    guard(|| {
        if out.is_null() {
            return Err(null("out"));
        }
        write(out, closed(KnowledgeBase::shipped())?, "out")
    })
}

/// Loads a knowledge base from a JSON file.
///
/// # Safety
/// `path` must be a NUL-terminated string and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn topo_kb_load(path: *const c_char, out: *mut *mut TopoKb) -> TopoStatus {
    guard(|| {
        let path = text(path, "path")?;
        if out.is_null() {
            return Err(null("out"));
        }
        let kb = KnowledgeBase::load(path).map_err(kb_error)?;
        write(out, closed(kb)?, "out")
    })
}

/// Releases a knowledge base. Null is ignored.
///
/// # Safety
/// `kb` must come from this library and not have been freed already.
#[no_mangle]
pub unsafe extern "C" fn topo_kb_free(kb: *mut TopoKb) {
    if !kb.is_null() {
        drop(Box::from_raw(kb));
    }
}

/// Decides whether `p => q`. When `witness` is non-null it receives the name
/// of a counterexample space for `NotImplies` and null otherwise; free it
/// with [`topo_string_free`].
///
/// # Safety
/// `kb` must be a live handle, `p` and `q` NUL-terminated strings, `out`
/// writable and `witness` null or writable.
#[no_mangle]
pub unsafe extern "C" fn topo_kb_status(
    kb: *const TopoKb,
    p: *const c_char,
    q: *const c_char,
    out: *mut TopoImplication,
    witness: *mut *mut c_char,
) -> TopoStatus {
    guard(|| {
        let kb = &handle(kb, "kb")?.0;
        let (p, q) = (text(p, "p")?, text(q, "q")?);
        if out.is_null() {
            return Err(null("out"));
        }
        let (verdict, name) = match status(kb, p, q).map_err(kb_error)? {
            Status::Implies(_) => (TopoImplication::Implies, None),
            Status::NotImplies { witness, .. } => (TopoImplication::NotImplies, Some(witness)),
            Status::Unknown => (TopoImplication::Unknown, None),
        };
        if !witness.is_null() {
            witness.write(name.map_or(ptr::null_mut(), c_string));
        }
        write(out, verdict, "out")
    })
}
