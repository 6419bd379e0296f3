//! Rectangular grids of charge levels: wordlines (rows) by cells (columns).

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::levels::{check_level, pages_for, Level};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LevelGrid {
    q: u32,
    rows: usize,
    cols: usize,
    cells: Vec<Level>,
}

impl LevelGrid {
    /// Builds a grid from row-major cells.
    pub fn new(q: u32, rows: usize, cols: usize, cells: Vec<Level>) -> Result<Self> {
        pages_for(q, 2)?;
        if cells.len() != rows * cols {
            return Err(Error::SizeMismatch {
                what: "grid cells",
                expected: rows * cols,
                found: cells.len(),
            });
        }
        for &level in &cells {
            check_level(level, q)?;
        }
        Ok(Self {
            q,
            rows,
            cols,
            cells,
        })
    }

    pub fn from_rows(q: u32, rows: &[Vec<Level>]) -> Result<Self> {
        let cols = rows.first().map_or(0, Vec::len);
        let mut cells = Vec::with_capacity(rows.len() * cols);
        for (r, row) in rows.iter().enumerate() {
            if row.len() != cols {
                return Err(Error::RaggedGrid {
                    row: r,
                    expected: cols,
                    found: row.len(),
                });
            }
            cells.extend_from_slice(row);
        }
        Self::new(q, rows.len(), cols, cells)
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

    pub fn cells(&self) -> &[Level] {
        &self.cells
    }

    pub fn get(&self, row: usize, col: usize) -> Level {
        self.cells[row * self.cols + col]
    }

    pub fn row(&self, row: usize) -> &[Level] {
        &self.cells[row * self.cols..(row + 1) * self.cols]
    }

    pub fn column(&self, col: usize) -> Vec<Level> {
        (0..self.rows).map(|r| self.get(r, col)).collect()
    }

    pub fn transpose(&self) -> Self {
        let mut cells = Vec::with_capacity(self.cells.len());
        for c in 0..self.cols {
            cells.extend((0..self.rows).map(|r| self.get(r, c)));
        }
        Self {
            q: self.q,
            rows: self.cols,
            cols: self.rows,
            cells,
        }
    }

    /// Serializes to the text format: a `q=<q> rows=<R> cols=<C>` header then
    /// one wordline per line of space-separated levels.
    pub fn to_text(&self) -> String {
        let mut out = format!("q={} rows={} cols={}\n", self.q, self.rows, self.cols);
        for r in 0..self.rows {
            let mut first = true;
            for &level in self.row(r) {
                if !first {
                    out.push(' ');
                }
                first = false;
                let _ = write!(out, "{level}");
            }
            out.push('\n');
        }
        out
    }

    pub fn parse_text(text: &str) -> Result<Self> {
        let mut lines = text.lines().filter(|l| !l.trim().is_empty());
        let header = lines
            .next()
            .ok_or_else(|| Error::Parse("missing grid header".into()))?;
        let fields = parse_header(header, None, &["q", "rows", "cols"])?;
        let q = u32::try_from(fields[0]).map_err(|_| Error::Parse("q too large".into()))?;
        let (rows, cols) = (fields[1] as usize, fields[2] as usize);

        let mut cells = Vec::with_capacity(rows * cols);
        let mut seen_rows = 0;
        for (r, line) in lines.enumerate() {
            let before = cells.len();
            for tok in line.split_whitespace() {
                let v: u32 = tok
                    .parse()
                    .map_err(|_| Error::Parse(format!("bad level {tok:?} on row {r}")))?;
                if v >= q {
                    return Err(Error::LevelOutOfRange { level: v, q });
                }
                cells.push(v as Level);
            }
            if cells.len() - before != cols {
                return Err(Error::RaggedGrid {
                    row: r,
                    expected: cols,
                    found: cells.len() - before,
                });
            }
            seen_rows += 1;
        }
        if seen_rows != rows {
            return Err(Error::SizeMismatch {
                what: "grid rows",
                expected: rows,
                found: seen_rows,
            });
        }
        Self::new(q, rows, cols, cells)
    }
}

/// Parses `[tag] key=value ...` headers. Values must appear in the given key
/// order.
pub(crate) fn parse_header(line: &str, tag: Option<&str>, keys: &[&str]) -> Result<Vec<u64>> {
    let mut toks = line.split_whitespace();
    if let Some(tag) = tag {
        if toks.next() != Some(tag) {
            return Err(Error::Parse(format!("expected header tag {tag:?}")));
        }
    }
    let mut values = Vec::with_capacity(keys.len());
    for key in keys {
        let tok = toks
            .next()
            .ok_or_else(|| Error::Parse(format!("header missing {key}")))?;
        let value = tok
            .strip_prefix(key)
            .and_then(|rest| rest.strip_prefix('='))
            .ok_or_else(|| Error::Parse(format!("expected {key}=<n>, got {tok:?}")))?;
        values.push(
            value
                .parse()
                .map_err(|_| Error::Parse(format!("bad value for {key}: {value:?}")))?,
        );
    }
    if let Some(extra) = toks.next() {
        return Err(Error::Parse(format!("unexpected header field {extra:?}")));
    }
    Ok(values)
}
