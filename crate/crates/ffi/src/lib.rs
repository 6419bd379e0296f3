//! C ABI over `rrcode`.
//!
//! Every fallible function returns an [`RrStatus`]. On failure a message is
//! stored per thread and can be read with [`rr_last_error`]. Bit arrays cross
//! the boundary as one `uint8_t` per bit (0 or 1); level arrays as one
//! `uint8_t` per cell, row-major.
//!
//! Functions that produce variable-length output take a buffer, its capacity
//! and an out-parameter for the produced length. When the buffer is too small
//! they return `RR_STATUS_BUFFER_TOO_SMALL` and still write the required
//! length.

#![allow(clippy::missing_safety_doc)]

use std::cell::RefCell;
use std::ffi::{c_char, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;
use std::slice;

use num_bigint::BigUint;
use num_traits::ToPrimitive;

use rrcode::analysis;
use rrcode::{
    Direction, Error, GrayMap, GridLayout, LevelGrid, LocoCode, PatternSet, RllCode, Scheme,
};

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RrStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidArgument = 2,
    /// Input data is not a valid codeword, stream or grid.
    CodecError = 3,
    BufferTooSmall = 4,
    Panic = 5,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RrDirection {
    Horizontal = 0,
    Vertical = 1,
    Both = 2,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RrScheme {
    Uncoded = 0,
    Rr1dWordline = 1,
    Rr1dBitline = 2,
    Rr2d = 3,
    RllInterleaved = 4,
}

/// Opaque LOCO code handle.
pub struct RrLocoCode(LocoCode);

/// Opaque RLL(0,1) block code handle.
pub struct RrRllCode(RllCode);

/// Opaque Gray mapping handle.
pub struct RrGrayMap(GrayMap);

/// Opaque forbidden-pattern set handle.
pub struct RrPatternSet(PatternSet);

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(message: String) {
    let message = CString::new(message.replace('\0', " ")).expect("no interior NUL");
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(message));
}

fn fail(status: RrStatus, message: impl Into<String>) -> RrStatus {
    set_error(message.into());
    status
}

fn status_of(err: Error) -> RrStatus {
    let status = match err {
        Error::InvalidLevelCount { .. }
        | Error::InvalidCodeLength(_)
        | Error::InvalidRllParams { .. }
        | Error::IndexOutOfRange { .. }
        | Error::LevelOutOfRange { .. }
        | Error::Config(_)
        | Error::SizeMismatch { .. } => RrStatus::InvalidArgument,
        _ => RrStatus::CodecError,
    };
    fail(status, err.to_string())
}

/// Runs `f`, converting library errors and panics into status codes.
fn guard(f: impl FnOnce() -> Result<(), RrStatus>) -> RrStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => RrStatus::Ok,
        Ok(Err(status)) => status,
        Err(_) => fail(RrStatus::Panic, "internal panic"),
    }
}

trait IntoStatus<T> {
    fn st(self) -> Result<T, RrStatus>;
}

impl<T> IntoStatus<T> for rrcode::Result<T> {
    fn st(self) -> Result<T, RrStatus> {
        self.map_err(status_of)
    }
}

fn non_null<T>(p: *const T, what: &str) -> Result<(), RrStatus> {
    if p.is_null() {
        Err(fail(RrStatus::NullPointer, format!("{what} is NULL")))
    } else {
        Ok(())
    }
}

unsafe fn input<'a, T>(p: *const T, len: usize, what: &str) -> Result<&'a [T], RrStatus> {
    if len == 0 {
        return Ok(&[]);
    }
    non_null(p, what)?;
    Ok(slice::from_raw_parts(p, len))
}

unsafe fn bits_in(p: *const u8, len: usize, what: &str) -> Result<Vec<bool>, RrStatus> {
    let raw = input(p, len, what)?;
    raw.iter()
        .map(|&b| match b {
            0 => Ok(false),
            1 => Ok(true),
            _ => Err(fail(
                RrStatus::InvalidArgument,
                format!("{what} holds a byte other than 0 or 1"),
            )),
        })
        .collect()
}

unsafe fn handle<'a, T>(p: *const T, what: &str) -> Result<&'a T, RrStatus> {
    non_null(p, what)?;
    Ok(&*p)
}

/// Copies `data` into `out`, recording the produced length first.
unsafe fn write_out<T: Copy>(
    data: &[T],
    out: *mut T,
    cap: usize,
    out_len: *mut usize,
) -> Result<(), RrStatus> {
    non_null(out_len, "out_len")?;
    *out_len = data.len();
    if data.len() > cap {
        return Err(fail(
            RrStatus::BufferTooSmall,
            format!("need {} elements, buffer holds {cap}", data.len()),
        ));
    }
    if !data.is_empty() {
        non_null(out, "out")?;
        ptr::copy_nonoverlapping(data.as_ptr(), out, data.len());
    }
    Ok(())
}

unsafe fn write_bits(
    bits: &[bool],
    out: *mut u8,
    cap: usize,
    out_len: *mut usize,
) -> Result<(), RrStatus> {
    let bytes: Vec<u8> = bits.iter().map(|&b| b as u8).collect();
    write_out(&bytes, out, cap, out_len)
}

unsafe fn put<T>(out: *mut T, value: T) -> Result<(), RrStatus> {
    non_null(out, "out")?;
    *out = value;
    Ok(())
}

fn cells_len(rows: usize, cols: usize) -> Result<usize, RrStatus> {
    rows.checked_mul(cols)
        .ok_or_else(|| fail(RrStatus::InvalidArgument, "rows * cols overflows"))
}

fn new_handle<T>(value: T) -> *mut T {
    Box::into_raw(Box::new(value))
}

unsafe fn free_handle<T>(p: *mut T) {
    if !p.is_null() {
        drop(Box::from_raw(p));
    }
}

/// Message of the last failure on this thread, or NULL. The pointer stays
/// valid until the next failing call on the same thread.
#[no_mangle]
pub extern "C" fn rr_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |s| s.as_ptr()))
}

/// Library version as a static NUL-terminated string.
#[no_mangle]
pub extern "C" fn rr_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}

// LOCO code

#[no_mangle]
pub unsafe extern "C" fn rr_loco_new(m: usize, out: *mut *mut RrLocoCode) -> RrStatus {
    guard(|| {
        non_null(out, "out")?;
        let code = LocoCode::new(m).st()?;
        *out = new_handle(RrLocoCode(code));
        Ok(())
    })
}

#[no_mangle]
pub unsafe extern "C" fn rr_loco_free(code: *mut RrLocoCode) {
    free_handle(code)
}

/// Message bits per codeword (`s`), or 0 for a NULL handle.
#[no_mangle]
pub unsafe extern "C" fn rr_loco_message_length(code: *const RrLocoCode) -> usize {
    code.as_ref().map_or(0, |c| c.0.message_length())
}

/// Page bits per codeword including the bridge, or 0 for a NULL handle.
#[no_mangle]
pub unsafe extern "C" fn rr_loco_block_length(code: *const RrLocoCode) -> usize {
    code.as_ref().map_or(0, |c| c.0.block_length())
}

/// `N(m)` if it fits in 64 bits.
#[no_mangle]
pub unsafe extern "C" fn rr_loco_cardinality(code: *const RrLocoCode, out: *mut u64) -> RrStatus {
    guard(|| {
        let code = handle(code, "code")?;
        let n = code.0.cardinality().to_u64().ok_or_else(|| {
            fail(
                RrStatus::InvalidArgument,
                "cardinality does not fit in 64 bits",
            )
        })?;
        put(out, n)
    })
}

/// Writes the `m` bits of codeword `index`, leftmost first.
#[no_mangle]
pub unsafe extern "C" fn rr_loco_encode_codeword(
    code: *const RrLocoCode,
    index: u64,
    out: *mut u8,
    cap: usize,
    out_len: *mut usize,
) -> RrStatus {
    guard(|| {
        let code = handle(code, "code")?;
        let word = code.0.unrank(&BigUint::from(index)).st()?;
        write_bits(&word, out, cap, out_len)
    })
}

#[no_mangle]
pub unsafe extern "C" fn rr_loco_decode_codeword(
    code: *const RrLocoCode,
    bits: *const u8,
    len: usize,
    out: *mut u64,
) -> RrStatus {
    guard(|| {
        let code = handle(code, "code")?;
        let word = bits_in(bits, len, "bits")?;
        let index = code.0.rank(&word).st()?;
        let index = index
            .to_u64()
            .ok_or_else(|| fail(RrStatus::InvalidArgument, "index does not fit in 64 bits"))?;
        put(out, index)
    })
}

/// Page bits produced for `data_bits` message bits.
#[no_mangle]
pub unsafe extern "C" fn rr_loco_page_bits_for(code: *const RrLocoCode, data_bits: usize) -> usize {
    code.as_ref().map_or(0, |c| c.0.page_bits_for(data_bits))
}

#[no_mangle]
pub unsafe extern "C" fn rr_loco_encode_stream(
    code: *const RrLocoCode,
    data: *const u8,
    data_len: usize,
    out: *mut u8,
    cap: usize,
    out_len: *mut usize,
) -> RrStatus {
    guard(|| {
        let code = handle(code, "code")?;
        let data = bits_in(data, data_len, "data")?;
        write_bits(&code.0.encode_stream(&data), out, cap, out_len)
    })
}

/// Decodes a page; the output includes tail padding.
#[no_mangle]
pub unsafe extern "C" fn rr_loco_decode_stream(
    code: *const RrLocoCode,
    page: *const u8,
    page_len: usize,
    out: *mut u8,
    cap: usize,
    out_len: *mut usize,
) -> RrStatus {
    guard(|| {
        let code = handle(code, "code")?;
        let page = bits_in(page, page_len, "page")?;
        write_bits(&code.0.decode_stream(&page).st()?, out, cap, out_len)
    })
}

// RLL(0,1) code

#[no_mangle]
pub unsafe extern "C" fn rr_rll_new(n: usize, k: usize, out: *mut *mut RrRllCode) -> RrStatus {
    guard(|| {
        non_null(out, "out")?;
        let code = RllCode::new(n, k).st()?;
        *out = new_handle(RrRllCode(code));
        Ok(())
    })
}

#[no_mangle]
pub unsafe extern "C" fn rr_rll_free(code: *mut RrRllCode) {
    free_handle(code)
}

/// Writes the `n` bits of the codeword for a `k`-bit message.
#[no_mangle]
pub unsafe extern "C" fn rr_rll_encode_block(
    code: *const RrRllCode,
    msg: u64,
    out: *mut u8,
    cap: usize,
    out_len: *mut usize,
) -> RrStatus {
    guard(|| {
        let code = handle(code, "code")?;
        write_bits(&code.0.encode_block(msg).st()?, out, cap, out_len)
    })
}

#[no_mangle]
pub unsafe extern "C" fn rr_rll_decode_block(
    code: *const RrRllCode,
    bits: *const u8,
    len: usize,
    out: *mut u64,
) -> RrStatus {
    guard(|| {
        let code = handle(code, "code")?;
        let word = bits_in(bits, len, "bits")?;
        put(out, code.0.decode_block(&word).st()?)
    })
}

#[no_mangle]
pub unsafe extern "C" fn rr_rll_encode_stream(
    code: *const RrRllCode,
    data: *const u8,
    data_len: usize,
    out: *mut u8,
    cap: usize,
    out_len: *mut usize,
) -> RrStatus {
    guard(|| {
        let code = handle(code, "code")?;
        let data = bits_in(data, data_len, "data")?;
        write_bits(&code.0.encode_stream(&data), out, cap, out_len)
    })
}

#[no_mangle]
pub unsafe extern "C" fn rr_rll_decode_stream(
    code: *const RrRllCode,
    page: *const u8,
    page_len: usize,
    out: *mut u8,
    cap: usize,
    out_len: *mut usize,
) -> RrStatus {
    guard(|| {
        let code = handle(code, "code")?;
        let page = bits_in(page, page_len, "page")?;
        write_bits(&code.0.decode_stream(&page).st()?, out, cap, out_len)
    })
}

// Gray mapping

#[no_mangle]
pub unsafe extern "C" fn rr_gray_new(q: u32, out: *mut *mut RrGrayMap) -> RrStatus {
    guard(|| {
        non_null(out, "out")?;
        let map = GrayMap::new(q).st()?;
        *out = new_handle(RrGrayMap(map));
        Ok(())
    })
}

#[no_mangle]
pub unsafe extern "C" fn rr_gray_free(map: *mut RrGrayMap) {
    free_handle(map)
}

/// Pages per cell, or 0 for a NULL handle.
#[no_mangle]
pub unsafe extern "C" fn rr_gray_pages(map: *const RrGrayMap) -> usize {
    map.as_ref().map_or(0, |m| m.0.pages())
}

/// Writes the label of `level`, left-most page first.
#[no_mangle]
pub unsafe extern "C" fn rr_gray_level_to_bits(
    map: *const RrGrayMap,
    level: u8,
    out: *mut u8,
    cap: usize,
    out_len: *mut usize,
) -> RrStatus {
    guard(|| {
        let map = handle(map, "map")?;
        let mut bits = map.0.level_to_bits(level).st()?;
        bits.reverse();
        write_bits(&bits, out, cap, out_len)
    })
}

/// Inverse of [`rr_gray_level_to_bits`].
#[no_mangle]
pub unsafe extern "C" fn rr_gray_bits_to_level(
    map: *const RrGrayMap,
    bits: *const u8,
    len: usize,
    out: *mut u8,
) -> RrStatus {
    guard(|| {
        let map = handle(map, "map")?;
        let mut bits = bits_in(bits, len, "bits")?;
        bits.reverse();
        put(out, map.0.bits_to_level(&bits).st()?)
    })
}

// Forbidden patterns

#[no_mangle]
pub unsafe extern "C" fn rr_patterns_new(q: u32, out: *mut *mut RrPatternSet) -> RrStatus {
    guard(|| {
        non_null(out, "out")?;
        let set = PatternSet::forbidden(q).st()?;
        *out = new_handle(RrPatternSet(set));
        Ok(())
    })
}

#[no_mangle]
pub unsafe extern "C" fn rr_patterns_free(set: *mut RrPatternSet) {
    free_handle(set)
}

/// Number of forbidden triples, or 0 for a NULL handle.
#[no_mangle]
pub unsafe extern "C" fn rr_patterns_len(set: *const RrPatternSet) -> usize {
    set.as_ref().map_or(0, |s| s.0.len())
}

/// Start positions of forbidden windows in a level sequence.
#[no_mangle]
pub unsafe extern "C" fn rr_patterns_scan(
    set: *const RrPatternSet,
    levels: *const u8,
    len: usize,
    out: *mut usize,
    cap: usize,
    out_len: *mut usize,
) -> RrStatus {
    guard(|| {
        let set = handle(set, "set")?;
        let levels = input(levels, len, "levels")?;
        write_out(&set.0.scan_sequence(levels).st()?, out, cap, out_len)
    })
}

/// Counts forbidden windows along rows and columns of a row-major grid.
/// `direction` is an `RrDirection` value.
#[no_mangle]
pub unsafe extern "C" fn rr_patterns_scan_grid(
    set: *const RrPatternSet,
    levels: *const u8,
    rows: usize,
    cols: usize,
    direction: u32,
    horizontal: *mut usize,
    vertical: *mut usize,
) -> RrStatus {
    guard(|| {
        let set = handle(set, "set")?;
        let cells = input(levels, cells_len(rows, cols)?, "levels")?;
        let grid = LevelGrid::new(set.0.q(), rows, cols, cells.to_vec()).st()?;
        let direction = match direction {
            d if d == RrDirection::Horizontal as u32 => Direction::Horizontal,
            d if d == RrDirection::Vertical as u32 => Direction::Vertical,
            d if d == RrDirection::Both as u32 => Direction::Both,
            d => {
                return Err(fail(
                    RrStatus::InvalidArgument,
                    format!("unknown direction {d}"),
                ))
            }
        };
        let report = set.0.scan_grid(&grid, direction).st()?;
        put(horizontal, report.counts.h)?;
        put(vertical, report.counts.v)
    })
}

// Grid schemes

fn layout(scheme: u32, q: u32, m: usize, rows: usize, cols: usize) -> Result<GridLayout, RrStatus> {
    let scheme = match scheme {
        s if s == RrScheme::Uncoded as u32 => Scheme::Uncoded,
        s if s == RrScheme::Rr1dWordline as u32 => Scheme::Rr1dWordline,
        s if s == RrScheme::Rr1dBitline as u32 => Scheme::Rr1dBitline,
        s if s == RrScheme::Rr2d as u32 => Scheme::Rr2d,
        s if s == RrScheme::RllInterleaved as u32 => Scheme::RllInterleaved,
        s => {
            return Err(fail(
                RrStatus::InvalidArgument,
                format!("unknown scheme {s}"),
            ))
        }
    };
    Ok(GridLayout {
        scheme,
        q,
        m,
        rows,
        cols,
    })
}

/// Payload bits carried by a `rows x cols` grid under `scheme`, an
/// `RrScheme` value. `m` is used by the rr1d schemes only.
#[no_mangle]
pub unsafe extern "C" fn rr_grid_capacity(
    scheme: u32,
    q: u32,
    m: usize,
    rows: usize,
    cols: usize,
    out: *mut usize,
) -> RrStatus {
    guard(|| put(out, layout(scheme, q, m, rows, cols)?.capacity().st()?))
}

/// Encodes exactly `rr_grid_capacity` payload bits into `rows * cols` levels.
#[no_mangle]
pub unsafe extern "C" fn rr_grid_encode(
    scheme: u32,
    q: u32,
    m: usize,
    rows: usize,
    cols: usize,
    payload: *const u8,
    payload_len: usize,
    out: *mut u8,
    cap: usize,
    out_len: *mut usize,
) -> RrStatus {
    guard(|| {
        let payload = bits_in(payload, payload_len, "payload")?;
        let grid = layout(scheme, q, m, rows, cols)?.encode(&payload).st()?;
        write_out(grid.cells(), out, cap, out_len)
    })
}

#[no_mangle]
pub unsafe extern "C" fn rr_grid_decode(
    scheme: u32,
    q: u32,
    m: usize,
    rows: usize,
    cols: usize,
    levels: *const u8,
    out: *mut u8,
    cap: usize,
    out_len: *mut usize,
) -> RrStatus {
    guard(|| {
        let cells = input(levels, cells_len(rows, cols)?, "levels")?;
        let grid = LevelGrid::new(q, rows, cols, cells.to_vec()).st()?;
        let bits = layout(scheme, q, m, rows, cols)?.decode(&grid).st()?;
        write_bits(&bits, out, cap, out_len)
    })
}

// Analysis

#[no_mangle]
pub unsafe extern "C" fn rr_capacity_1d_lq(q: u32, out: *mut f64) -> RrStatus {
    guard(|| put(out, analysis::capacity_1d_lq(q).st()?))
}

#[no_mangle]
pub unsafe extern "C" fn rr_capacity_1d_rr(q: u64, out: *mut f64) -> RrStatus {
    guard(|| put(out, analysis::capacity_1d_rr(q).st()?))
}

#[no_mangle]
pub unsafe extern "C" fn rr_capacity_2d_rr(q: u64, out: *mut f64) -> RrStatus {
    guard(|| put(out, analysis::capacity_2d_rr(q).st()?))
}

#[no_mangle]
pub unsafe extern "C" fn rr_rate_1d_rr(q: u64, m: usize, out: *mut f64) -> RrStatus {
    guard(|| put(out, analysis::rate_1d_rr(q, m).st()?))
}

#[no_mangle]
pub unsafe extern "C" fn rr_rate_2d_rr(q: u64, out: *mut f64) -> RrStatus {
    guard(|| put(out, analysis::rate_2d_rr(q).st()?))
}

#[no_mangle]
pub unsafe extern "C" fn rr_error_prop(q: u64, m: usize, e1d: *mut f64, e2d: *mut f64) -> RrStatus {
    guard(|| {
        let (a, b) = analysis::error_prop(q, m).st()?;
        put(e1d, a)?;
        put(e2d, b)
    })
}

#[no_mangle]
pub unsafe extern "C" fn rr_symbol_probs(p0: *mut f64, p1: *mut f64) -> RrStatus {
    guard(|| {
        let (a, b) = analysis::symbol_probs();
        put(p0, a)?;
        put(p1, b)
    })
}

/// Writes the `q` per-level probabilities of the coded grid.
#[no_mangle]
pub unsafe extern "C" fn rr_level_probs(
    q: u32,
    out: *mut f64,
    cap: usize,
    out_len: *mut usize,
) -> RrStatus {
    guard(|| write_out(&analysis::level_probs(q).st()?, out, cap, out_len))
}
