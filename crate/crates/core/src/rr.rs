//! Read-and-run assembly of Flash data: only the left-most page is coded,
//! every other page is written and read verbatim.
//!
//! * 1D: each wordline's left-most page is a [`LineCode`] stream, which
//!   removes forbidden level triples along that wordline. Bitline coding is
//!   the same thing applied to the transposed grid.
//! * 2D: a fixed positional mask writes `1` at half of the left-most page
//!   positions, removing forbidden triples in both directions.
//!
//! Uncoded data is laid out page-major (page `p - 2` first) and row-major
//! within a page.

use crate::bits::{bits_to_hex, hex_to_bits};
use crate::error::{Error, Result};
use crate::grid::{parse_header, LevelGrid};
use crate::levels::{pages_for, Level};
use crate::loco::LocoCode;
use crate::ragm::GrayMap;
use crate::rll::RllCode;

/// A constrained code that maps message bits to page bits block by block.
pub trait LineCode {
    /// Message bits per block.
    fn message_length(&self) -> usize;
    /// Page bits per block.
    fn block_length(&self) -> usize;
    fn encode_stream(&self, data: &[bool]) -> Vec<bool>;
    fn decode_stream(&self, page: &[bool]) -> Result<Vec<bool>>;
}

impl LineCode for LocoCode {
    fn message_length(&self) -> usize {
        LocoCode::message_length(self)
    }
    fn block_length(&self) -> usize {
        LocoCode::block_length(self)
    }
    fn encode_stream(&self, data: &[bool]) -> Vec<bool> {
        LocoCode::encode_stream(self, data)
    }
    fn decode_stream(&self, page: &[bool]) -> Result<Vec<bool>> {
        LocoCode::decode_stream(self, page)
    }
}

impl LineCode for RllCode {
    fn message_length(&self) -> usize {
        RllCode::message_length(self)
    }
    fn block_length(&self) -> usize {
        RllCode::block_length(self)
    }
    fn encode_stream(&self, data: &[bool]) -> Vec<bool> {
        RllCode::encode_stream(self, data)
    }
    fn decode_stream(&self, page: &[bool]) -> Result<Vec<bool>> {
        RllCode::decode_stream(self, page)
    }
}

/// `p` binary planes of a grid; plane `p - 1` is the left-most page.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PageGrid {
    q: u32,
    rows: usize,
    cols: usize,
    planes: Vec<Vec<bool>>,
}

impl PageGrid {
    pub fn new(q: u32, rows: usize, cols: usize, planes: Vec<Vec<bool>>) -> Result<Self> {
        let p = pages_for(q, 2)?;
        if planes.len() != p {
            return Err(Error::SizeMismatch {
                what: "page planes",
                expected: p,
                found: planes.len(),
            });
        }
        for plane in &planes {
            if plane.len() != rows * cols {
                return Err(Error::SizeMismatch {
                    what: "page plane",
                    expected: rows * cols,
                    found: plane.len(),
                });
            }
        }
        Ok(Self {
            q,
            rows,
            cols,
            planes,
        })
    }

    pub fn from_levels(grid: &LevelGrid, map: &GrayMap) -> Result<Self> {
        check_map(grid.q(), map)?;
        let planes = (0..map.pages())
            .map(|page| {
                grid.cells()
                    .iter()
                    .map(|&l| map.page_bit(l, page))
                    .collect()
            })
            .collect();
        Self::new(grid.q(), grid.rows(), grid.cols(), planes)
    }

    pub fn to_levels(&self, map: &GrayMap) -> Result<LevelGrid> {
        check_map(self.q, map)?;
        let cells = (0..self.rows * self.cols)
            .map(|cell| {
                let label = self
                    .planes
                    .iter()
                    .enumerate()
                    .fold(0u16, |acc, (page, plane)| {
                        acc | ((plane[cell] as u16) << page)
                    });
                map.level_of_label(label)
            })
            .collect();
        LevelGrid::new(self.q, self.rows, self.cols, cells)
    }

    pub fn q(&self) -> u32 {
        self.q
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn pages(&self) -> usize {
        self.planes.len()
    }

    pub fn plane(&self, page: usize) -> &[bool] {
        &self.planes[page]
    }

    /// Header `pages q=<q> rows=<R> cols=<C>`, then one hex line per plane,
    /// left-most page first. Each plane is row-major, MSB first, zero-padded
    /// to a byte.
    pub fn to_text(&self) -> String {
        let mut out = format!("pages q={} rows={} cols={}\n", self.q, self.rows, self.cols);
        for plane in self.planes.iter().rev() {
            out.push_str(&bits_to_hex(plane));
            out.push('\n');
        }
        out
    }

    pub fn parse_text(text: &str) -> Result<Self> {
        let mut lines = text.lines();
        let header = lines
            .next()
            .ok_or_else(|| Error::Parse("missing pages header".into()))?;
        let fields = parse_header(header, Some("pages"), &["q", "rows", "cols"])?;
        let q = u32::try_from(fields[0]).map_err(|_| Error::Parse("q too large".into()))?;
        let (rows, cols) = (fields[1] as usize, fields[2] as usize);
        let p = pages_for(q, 2)?;
        let mut planes = Vec::with_capacity(p);
        for _ in 0..p {
            let line = lines
                .next()
                .ok_or_else(|| Error::Parse("missing page plane".into()))?;
            planes.push(hex_to_bits(line, rows * cols)?);
        }
        if lines.any(|l| !l.trim().is_empty()) {
            return Err(Error::Parse("trailing data after page planes".into()));
        }
        planes.reverse();
        Self::new(q, rows, cols, planes)
    }
}

fn check_map(q: u32, map: &GrayMap) -> Result<()> {
    if map.q() != q {
        return Err(Error::Config(format!(
            "Gray map has q={} but data has q={q}",
            map.q()
        )));
    }
    Ok(())
}

fn expect_len(what: &'static str, expected: usize, found: usize) -> Result<()> {
    if expected != found {
        return Err(Error::SizeMismatch {
            what,
            expected,
            found,
        });
    }
    Ok(())
}

/// Left-most-page message bits carried by one line of `len` cells.
pub fn line_capacity<C: LineCode + ?Sized>(code: &C, len: usize) -> Result<usize> {
    if len % code.block_length() != 0 {
        return Err(Error::Config(format!(
            "line length {len} is not a multiple of the block length {}",
            code.block_length()
        )));
    }
    Ok(len / code.block_length() * code.message_length())
}

/// Encodes one wordline of `cols` cells.
pub fn encode_1d<C: LineCode + ?Sized>(
    data_msb: &[bool],
    data_other: &[bool],
    map: &GrayMap,
    code: &C,
    cols: usize,
) -> Result<Vec<Level>> {
    expect_len(
        "left-most page data",
        line_capacity(code, cols)?,
        data_msb.len(),
    )?;
    let other_pages = map.pages() - 1;
    expect_len("uncoded page data", cols * other_pages, data_other.len())?;

    let msb = code.encode_stream(data_msb);
    debug_assert_eq!(msb.len(), cols);
    let msb_page = map.msb_page();
    Ok((0..cols)
        .map(|c| {
            let mut label = (msb[c] as u16) << msb_page;
            for (k, page) in (0..other_pages).rev().enumerate() {
                label |= (data_other[k * cols + c] as u16) << page;
            }
            map.level_of_label(label)
        })
        .collect())
}

/// Reads the uncoded pages of a line without touching the left-most page.
pub fn read_uncoded_pages(levels: &[Level], map: &GrayMap) -> Vec<bool> {
    (0..map.pages() - 1)
        .rev()
        .flat_map(|page| levels.iter().map(move |&l| map.page_bit(l, page)))
        .collect()
}

pub fn read_msb_page(levels: &[Level], map: &GrayMap) -> Vec<bool> {
    levels
        .iter()
        .map(|&l| map.page_bit(l, map.msb_page()))
        .collect()
}

/// Inverse of [`encode_1d`]: `(left-most page data, uncoded page data)`.
pub fn decode_1d<C: LineCode + ?Sized>(
    levels: &[Level],
    map: &GrayMap,
    code: &C,
) -> Result<(Vec<bool>, Vec<bool>)> {
    for &l in levels {
        crate::levels::check_level(l, map.q())?;
    }
    line_capacity(code, levels.len())?;
    let other = read_uncoded_pages(levels, map);
    let msb = code.decode_stream(&read_msb_page(levels, map))?;
    Ok((msb, other))
}

/// Coding direction of the 1D scheme.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Orientation {
    /// Coded along rows.
    Wordline,
    /// Coded along columns.
    Bitline,
}

/// Maps between the coding frame (lines are rows) and the physical grid.
pub fn orient(grid: &LevelGrid, orientation: Orientation) -> LevelGrid {
    match orientation {
        Orientation::Wordline => grid.clone(),
        Orientation::Bitline => grid.transpose(),
    }
}

/// Left-most-page message bits carried by a `rows x cols` grid.
pub fn grid_capacity_1d<C: LineCode + ?Sized>(
    code: &C,
    rows: usize,
    cols: usize,
    orientation: Orientation,
) -> Result<usize> {
    let (lines, len) = match orientation {
        Orientation::Wordline => (rows, cols),
        Orientation::Bitline => (cols, rows),
    };
    Ok(lines * line_capacity(code, len)?)
}

/// Encodes a whole grid with the 1D scheme. `data_msb` is consumed line by
/// line; `data_other` is page-major, then line-major in the coding frame.
pub fn encode_1d_grid<C: LineCode + ?Sized>(
    data_msb: &[bool],
    data_other: &[bool],
    map: &GrayMap,
    code: &C,
    rows: usize,
    cols: usize,
    orientation: Orientation,
) -> Result<LevelGrid> {
    let (lines, len) = match orientation {
        Orientation::Wordline => (rows, cols),
        Orientation::Bitline => (cols, rows),
    };
    let per_line = line_capacity(code, len)?;
    expect_len("left-most page data", lines * per_line, data_msb.len())?;
    let other_pages = map.pages() - 1;
    expect_len(
        "uncoded page data",
        lines * len * other_pages,
        data_other.len(),
    )?;

    let page_size = lines * len;
    let mut cells = Vec::with_capacity(page_size);
    let mut other_line = Vec::with_capacity(len * other_pages);
    for line in 0..lines {
        other_line.clear();
        for k in 0..other_pages {
            let start = k * page_size + line * len;
            other_line.extend_from_slice(&data_other[start..start + len]);
        }
        let msb = &data_msb[line * per_line..(line + 1) * per_line];
        cells.extend(encode_1d(msb, &other_line, map, code, len)?);
    }
    let framed = LevelGrid::new(map.q(), lines, len, cells)?;
    Ok(orient(&framed, orientation))
}

pub fn decode_1d_grid<C: LineCode + ?Sized>(
    grid: &LevelGrid,
    map: &GrayMap,
    code: &C,
    orientation: Orientation,
) -> Result<(Vec<bool>, Vec<bool>)> {
    check_map(grid.q(), map)?;
    let framed = orient(grid, orientation);
    let (lines, len) = (framed.rows(), framed.cols());
    let other_pages = map.pages() - 1;
    let mut msb = Vec::with_capacity(lines * line_capacity(code, len)?);
    let mut other = vec![false; lines * len * other_pages];
    for line in 0..lines {
        let (m, o) = decode_1d(framed.row(line), map, code)?;
        msb.extend(m);
        for k in 0..other_pages {
            let start = k * lines * len + line * len;
            other[start..start + len].copy_from_slice(&o[k * len..(k + 1) * len]);
        }
    }
    Ok((msb, other))
}

/// Free/forced layout of the left-most page under the 2D scheme.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Mask2D {
    rows: usize,
    cols: usize,
}

impl Mask2D {
    pub fn new(rows: usize, cols: usize) -> Self {
        Self { rows, cols }
    }

    /// Free when row and column residues mod 4 fall in the same half.
    pub fn is_free(row: usize, col: usize) -> bool {
        (row % 4 < 2) == (col % 4 < 2)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    /// Row-major free positions.
    pub fn free_positions(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.rows)
            .flat_map(move |r| (0..self.cols).map(move |c| (r, c)))
            .filter(|&(r, c)| Self::is_free(r, c))
    }

    pub fn free_count(&self) -> usize {
        self.free_positions().count()
    }

    /// Fraction of free positions, the left-most page rate.
    pub fn rate(&self) -> f64 {
        if self.rows * self.cols == 0 {
            return 0.0;
        }
        self.free_count() as f64 / (self.rows * self.cols) as f64
    }
}

/// Data bits needed by [`encode_2d`] for a `rows x cols` grid.
pub fn data_len_2d(map: &GrayMap, rows: usize, cols: usize) -> usize {
    Mask2D::new(rows, cols).free_count() + rows * cols * (map.pages() - 1)
}

/// 2D scheme: free left-most page positions take data bits in row-major
/// order, forced positions hold `1`, the remaining bits fill the uncoded
/// pages.
pub fn encode_2d(data: &[bool], map: &GrayMap, rows: usize, cols: usize) -> Result<LevelGrid> {
    expect_len("2D data", data_len_2d(map, rows, cols), data.len())?;
    let size = rows * cols;
    let mut msb = vec![true; size];
    let mut next = data.iter().copied();
    for (r, c) in Mask2D::new(rows, cols).free_positions() {
        msb[r * cols + c] = next.next().expect("length checked");
    }
    let rest: Vec<bool> = next.collect();
    let p = map.pages();
    let mut planes = vec![Vec::new(); p];
    for (k, page) in (0..p - 1).rev().enumerate() {
        planes[page] = rest[k * size..(k + 1) * size].to_vec();
    }
    planes[p - 1] = msb;
    PageGrid::new(map.q(), rows, cols, planes)?.to_levels(map)
}

/// Reads free positions and uncoded pages back; forced positions are ignored.
pub fn decode_2d(grid: &LevelGrid, map: &GrayMap) -> Result<Vec<bool>> {
    check_map(grid.q(), map)?;
    let mask = Mask2D::new(grid.rows(), grid.cols());
    let msb_page = map.msb_page();
    let mut data: Vec<bool> = mask
        .free_positions()
        .map(|(r, c)| map.page_bit(grid.get(r, c), msb_page))
        .collect();
    data.extend(read_uncoded_pages(grid.cells(), map));
    Ok(data)
}
