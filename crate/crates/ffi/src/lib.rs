//! C ABI over `openpack`.
//!
//! Graphs cross the boundary as opaque `OpGraph` handles owned by the caller
//! and released with [`op_graph_free`]. Every fallible call returns an
//! [`OpStatus`]; on failure a description is available from
//! [`op_last_error_message`] on the same thread. Strings returned by the
//! library are released with [`op_string_free`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use openpack::classifier::{decide_u_with, expected_spectrum_value, recognize_f, Mode, Verdict};
use openpack::generators;
use openpack::io::{self, Format, ReportDocument};
use openpack::packing::{packing_report_with, Limits};
use openpack::{Error, Graph};

/// Opaque graph handle.
pub struct OpGraph(Graph);

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum OpStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    Range = 3,
    Loop = 4,
    Parse = 5,
    CapExceeded = 6,
    IsolatedVertex = 7,
    Disconnected = 8,
    NotASupport = 9,
    NotAStrongSupport = 10,
    Spec = 11,
    InvalidArgument = 12,
    Panic = 100,
}

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum OpFormat {
    EdgeList = 0,
    Graph6 = 1,
}

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum OpMode {
    Auto = 0,
    Structural = 1,
    Brute = 2,
}

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum OpVerdict {
    InU = 0,
    NotInU = 1,
    Undecided = 2,
}

/// Extremes of the maximal open packing sizes.
#[repr(C)]
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct OpPackingReport {
    pub rho_open: usize,
    pub rho_open_lower: usize,
    /// Number of maximal open packings, or 0 when enumeration hit its cutoff.
    pub count: u64,
    pub uniform: bool,
}

/// Girth reported for acyclic graphs.
pub const OP_GIRTH_INFINITE: usize = 0;

/// Order cap meaning "use the library default".
pub const OP_DEFAULT_CAP: usize = 0;

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_last_error(message: String) {
    let c = CString::new(message.replace('\0', " ")).expect("interior NULs removed");
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(c));
}

fn status_of(e: &Error) -> OpStatus {
    match e {
        Error::Range { .. } => OpStatus::Range,
        Error::Loop { .. } => OpStatus::Loop,
        Error::Parse { .. } => OpStatus::Parse,
        Error::AtLine { source, .. } => status_of(source),
        Error::CapExceeded { .. } => OpStatus::CapExceeded,
        Error::IsolatedVertex { .. } => OpStatus::IsolatedVertex,
        Error::Disconnected => OpStatus::Disconnected,
        Error::NotASupport { .. } => OpStatus::NotASupport,
        Error::NotAStrongSupport { .. } => OpStatus::NotAStrongSupport,
        Error::Spec(_) => OpStatus::Spec,
        _ => OpStatus::InvalidArgument,
    }
}

struct Fail(OpStatus, String);

impl From<Error> for Fail {
    fn from(e: Error) -> Self {
        Fail(status_of(&e), e.to_string())
    }
}

fn null(what: &str) -> Fail {
    Fail(OpStatus::NullPointer, format!("{what} is null"))
}

/// Runs `body`, converting errors and panics into a status and clearing the
/// last error on success.
fn guard(body: impl FnOnce() -> Result<(), Fail>) -> OpStatus {
    match catch_unwind(AssertUnwindSafe(body)) {
        Ok(Ok(())) => {
            LAST_ERROR.with(|e| *e.borrow_mut() = None);
            OpStatus::Ok
        }
        Ok(Err(Fail(status, message))) => {
            set_last_error(message);
            status
        }
        Err(payload) => {
            let message = payload
                .downcast_ref::<&str>()
                .map(|s| s.to_string())
                .or_else(|| payload.downcast_ref::<String>().cloned())
                .unwrap_or_else(|| "unknown panic".into());
            set_last_error(format!("panic: {message}"));
            OpStatus::Panic
        }
    }
}

unsafe fn graph_ref<'a>(g: *const OpGraph) -> Result<&'a Graph, Fail> {
    // SAFETY: the caller passes a live handle from this library or null.
    unsafe { g.as_ref() }.map(|h| &h.0).ok_or_else(|| null("graph"))
}

unsafe fn put<T>(out: *mut T, value: T) -> Result<(), Fail> {
    if out.is_null() {
        return Err(null("output pointer"));
    }
    // SAFETY: checked non-null; the caller guarantees it is writable.
    unsafe { out.write(value) };
    Ok(())
}

unsafe fn put_graph(out: *mut *mut OpGraph, g: Graph) -> Result<(), Fail> {
    if out.is_null() {
        return Err(null("output pointer"));
    }
    // SAFETY: as in `put`.
    unsafe { out.write(Box::into_raw(Box::new(OpGraph(g)))) };
    Ok(())
}

unsafe fn put_string(out: *mut *mut c_char, s: String) -> Result<(), Fail> {
    let c = CString::new(s).map_err(|_| Fail(OpStatus::InvalidUtf8, "string contains NUL".into()))?;
    if out.is_null() {
        return Err(null("output pointer"));
    }
    // SAFETY: as in `put`.
    unsafe { out.write(c.into_raw()) };
    Ok(())
}

fn limits(cap: usize) -> Limits {
    if cap == OP_DEFAULT_CAP {
        Limits::default()
    } else {
        Limits { cap, ..Limits::default() }
    }
}

fn format_of(f: OpFormat) -> Format {
    match f {
        OpFormat::EdgeList => Format::EdgeList,
        OpFormat::Graph6 => Format::Graph6,
    }
}

fn mode_of(m: OpMode) -> Mode {
    match m {
        OpMode::Auto => Mode::Auto,
        OpMode::Structural => Mode::Structural,
        OpMode::Brute => Mode::Brute,
    }
}

/// Message for the most recent failure on this thread, or NULL after a
/// successful call. The pointer stays valid until the next library call on
/// this thread.
#[no_mangle]
pub extern "C" fn op_last_error_message() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

/// Library version as a static NUL-terminated string.
#[no_mangle]
pub extern "C" fn op_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}

/// Builds a graph on `n` vertices from `m` edges stored as `2*m` endpoints.
///
/// # Safety
/// `edges` must point to `2*m` readable values (it may be NULL when `m` is 0)
/// and `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn op_graph_new(n: usize, edges: *const usize, m: usize, out: *mut *mut OpGraph) -> OpStatus {
    guard(|| {
        let flat: &[usize] = if m == 0 {
            &[]
        } else if edges.is_null() {
            return Err(null("edges"));
        } else {
            // SAFETY: the caller guarantees 2*m readable values.
            unsafe { std::slice::from_raw_parts(edges, 2 * m) }
        };
        let pairs: Vec<(usize, usize)> = flat.chunks_exact(2).map(|e| (e[0], e[1])).collect();
        unsafe { put_graph(out, Graph::new(n, &pairs)?) }
    })
}

/// Parses an edge list or a graph6 line.
///
/// # Safety
/// `text` must be a NUL-terminated string and `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn op_graph_parse(text: *const c_char, format: OpFormat, out: *mut *mut OpGraph) -> OpStatus {
    guard(|| {
        if text.is_null() {
            return Err(null("text"));
        }
        // SAFETY: the caller guarantees a NUL-terminated string.
        let text = unsafe { CStr::from_ptr(text) }.to_str().map_err(|e| Fail(OpStatus::InvalidUtf8, e.to_string()))?;
        unsafe { put_graph(out, io::parse_graph(text, format_of(format))?) }
    })
}

/// Serializes the graph; release the result with [`op_string_free`].
///
/// # Safety
/// `g` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn op_graph_write(g: *const OpGraph, format: OpFormat, out: *mut *mut c_char) -> OpStatus {
    guard(|| unsafe {
        let g = graph_ref(g)?;
        put_string(out, io::write_graph(g, format_of(format))?)
    })
}

/// Releases a handle. NULL is ignored.
///
/// # Safety
/// `g` must be NULL or a handle not yet freed.
#[no_mangle]
pub unsafe extern "C" fn op_graph_free(g: *mut OpGraph) {
    if !g.is_null() {
        // SAFETY: created by Box::into_raw in this crate and not yet freed.
        drop(unsafe { Box::from_raw(g) });
    }
}

/// Number of vertices; 0 for NULL.
///
/// # Safety
/// `g` must be NULL or a live handle.
#[no_mangle]
pub unsafe extern "C" fn op_graph_order(g: *const OpGraph) -> usize {
    unsafe { graph_ref(g) }.map_or(0, Graph::order)
}

/// Number of edges; 0 for NULL.
///
/// # Safety
/// `g` must be NULL or a live handle.
#[no_mangle]
pub unsafe extern "C" fn op_graph_size(g: *const OpGraph) -> usize {
    unsafe { graph_ref(g) }.map_or(0, Graph::size)
}

/// Length of a shortest cycle, or [`OP_GIRTH_INFINITE`] for forests.
///
/// # Safety
/// `g` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn op_graph_girth(g: *const OpGraph, out: *mut usize) -> OpStatus {
    guard(|| unsafe {
        let g = graph_ref(g)?;
        put(out, g.girth().finite().unwrap_or(OP_GIRTH_INFINITE))
    })
}

/// ρ°, ρ°ₗ and the number of maximal open packings. `cap` bounds the order;
/// pass [`OP_DEFAULT_CAP`] for the default.
///
/// # Safety
/// `g` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn op_packing_report(g: *const OpGraph, cap: usize, out: *mut OpPackingReport) -> OpStatus {
    guard(|| unsafe {
        let r = packing_report_with(graph_ref(g)?, limits(cap))?;
        put(
            out,
            OpPackingReport {
                rho_open: r.rho_open,
                rho_open_lower: r.rho_open_lower,
                count: r.count.unwrap_or(0),
                uniform: r.uniform(),
            },
        )
    })
}

/// Decides whether all maximal open packings have one size.
///
/// # Safety
/// `g` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn op_decide(g: *const OpGraph, mode: OpMode, cap: usize, out: *mut OpVerdict) -> OpStatus {
    guard(|| unsafe {
        let d = decide_u_with(graph_ref(g)?, mode_of(mode), limits(cap))?;
        put(
            out,
            match d.verdict {
                Verdict::InU => OpVerdict::InU,
                Verdict::NotInU => OpVerdict::NotInU,
                Verdict::Undecided => OpVerdict::Undecided,
            },
        )
    })
}

/// Runs the partition recognizer. On acceptance `*accepted` is true and
/// `*predicted` holds the common size of every maximal open packing; on
/// rejection `*condition` holds the index (0 to 6) of the first violated condition.
/// Any output pointer may be NULL.
///
/// # Safety
/// `g` must be a live handle; non-NULL outputs must be writable.
#[no_mangle]
pub unsafe extern "C" fn op_recognize(
    g: *const OpGraph,
    accepted: *mut bool,
    predicted: *mut usize,
    condition: *mut u8,
) -> OpStatus {
    guard(|| unsafe {
        let result = recognize_f(graph_ref(g)?);
        if !accepted.is_null() {
            accepted.write(result.is_ok());
        }
        match result {
            Ok(p) if !predicted.is_null() => predicted.write(expected_spectrum_value(&p)),
            Err(v) if !condition.is_null() => condition.write(v.condition.index()),
            _ => {}
        }
        Ok(())
    })
}

/// Full JSON report: invariants, packing report and diagnosis under `mode`.
/// Release the result with [`op_string_free`].
///
/// # Safety
/// `g` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn op_report_json(
    g: *const OpGraph,
    mode: OpMode,
    cap: usize,
    out: *mut *mut c_char,
) -> OpStatus {
    guard(|| unsafe {
        let g = graph_ref(g)?;
        let limits = limits(cap);
        let doc = ReportDocument::new(g).with_packing(packing_report_with(g, limits)?).with_diagnosis(decide_u_with(
            g,
            mode_of(mode),
            limits,
        )?);
        put_string(out, doc.to_json())
    })
}

/// Releases a string returned by this library. NULL is ignored.
///
/// # Safety
/// `s` must be NULL or a string from this library not yet freed.
#[no_mangle]
pub unsafe extern "C" fn op_string_free(s: *mut c_char) {
    if !s.is_null() {
        // SAFETY: produced by CString::into_raw in this crate.
        drop(unsafe { CString::from_raw(s) });
    }
}

/// Path on `n >= 1` vertices.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn op_gen_path(n: usize, out: *mut *mut OpGraph) -> OpStatus {
    guard(|| unsafe { put_graph(out, generators::gen_path(n)?) })
}

/// Cycle on `n >= 3` vertices.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn op_gen_cycle(n: usize, out: *mut *mut OpGraph) -> OpStatus {
    guard(|| unsafe { put_graph(out, generators::gen_cycle(n)?) })
}

/// Two subdivided stars with `n` legs each, centers adjacent.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn op_gen_t(n: usize, out: *mut *mut OpGraph) -> OpStatus {
    guard(|| unsafe { put_graph(out, generators::gen_t(n)?) })
}

/// Two hubs joined by `n` internally disjoint paths of length 7.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn op_gen_gk(n: usize, out: *mut *mut OpGraph) -> OpStatus {
    guard(|| unsafe { put_graph(out, generators::gen_gk(n)?) })
}

/// Random labeled tree on `n` vertices, reproducible from `seed`.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn op_gen_random_tree(n: usize, seed: u64, out: *mut *mut OpGraph) -> OpStatus {
    guard(|| unsafe { put_graph(out, generators::gen_random_tree(n, seed)?) })
}

/// Attaches a pendant path of length 3 at every vertex of `h`. Vertex `i` of
/// `h` keeps index `i` in the result.
///
/// # Safety
/// `h` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn op_embed_in_u(h: *const OpGraph, out: *mut *mut OpGraph) -> OpStatus {
    guard(|| unsafe { put_graph(out, generators::embed_in_u(graph_ref(h)?)?.0) })
}

/// Random double-star tree with `2..=max_stars` stars.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn op_gen_f_tree(max_stars: usize, seed: u64, out: *mut *mut OpGraph) -> OpStatus {
    guard(|| unsafe {
        if max_stars < 2 {
            return Err(Error::ParameterRange { what: "max_stars", value: max_stars, min: 2 }.into());
        }
        let spec = generators::random_double_star_spec(&mut generators::rng_from_seed(seed), max_stars);
        put_graph(out, generators::gen_f_tree(&spec)?.0)
    })
}
