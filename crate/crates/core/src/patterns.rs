//! The forbidden level-pattern set and scanners for level sequences and grids.
//!
//! A triple `b1 mu b2` is forbidden when both outer levels sit in the upper
//! half of the level range and the middle level is strictly below the smaller
//! of the two. These are the patterns that cause the strongest charge
//! leakage into the middle cell.

use std::collections::HashSet;
use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::grid::LevelGrid;
use crate::levels::{check_level, pages_for, Level};

/// Three consecutive levels `(first, middle, last)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Triple(pub Level, pub Level, pub Level);

impl fmt::Display for Triple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0 < 10 && self.1 < 10 && self.2 < 10 {
            write!(f, "{}{}{}", self.0, self.1, self.2)
        } else {
            write!(f, "{}.{}.{}", self.0, self.1, self.2)
        }
    }
}

#[derive(Debug, Clone)]
pub struct PatternSet {
    q: u32,
    sorted: Vec<Triple>,
    lookup: HashSet<Triple>,
}

impl PatternSet {
    /// Generates the forbidden set for `q` levels. `q` must be a power of two
    /// and at least 4.
    pub fn forbidden(q: u32) -> Result<Self> {
        pages_for(q, 4)?;
        let half = q / 2;
        let mut sorted = Vec::new();
        for b1 in half..q {
            for mu in 0..q {
                for b2 in half..q {
                    if mu < b1.min(b2) {
                        sorted.push(Triple(b1 as Level, mu as Level, b2 as Level));
                    }
                }
            }
        }
        let lookup = sorted.iter().copied().collect();
        Ok(Self { q, sorted, lookup })
    }

    pub fn q(&self) -> u32 {
        self.q
    }

    pub fn len(&self) -> usize {
        self.sorted.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sorted.is_empty()
    }

    pub fn contains(&self, triple: &Triple) -> bool {
        self.lookup.contains(triple)
    }

    /// Triples in lexicographic `(first, middle, last)` order.
    pub fn iter(&self) -> impl Iterator<Item = &Triple> {
        self.sorted.iter()
    }

    /// Start indices of every forbidden window in `levels`.
    pub fn scan_sequence(&self, levels: &[Level]) -> Result<Vec<usize>> {
        for &level in levels {
            check_level(level, self.q)?;
        }
        Ok(self.scan_unchecked(levels))
    }

    fn scan_unchecked(&self, levels: &[Level]) -> Vec<usize> {
        levels
            .windows(3)
            .enumerate()
            .filter(|(_, w)| self.lookup.contains(&Triple(w[0], w[1], w[2])))
            .map(|(i, _)| i)
            .collect()
    }

    /// Scans rows (horizontal) and/or columns (vertical) of `grid`. Only fully
    /// contained windows are considered; there is no wrap-around.
    pub fn scan_grid(&self, grid: &LevelGrid, direction: Direction) -> Result<ViolationReport> {
        if grid.q() != self.q {
            return Err(Error::Config(format!(
                "grid has q={} but pattern set has q={}",
                grid.q(),
                self.q
            )));
        }
        let mut report = ViolationReport::default();
        if direction.horizontal() {
            for r in 0..grid.rows() {
                let row = grid.row(r);
                report.windows.h += row.len().saturating_sub(2);
                for c in self.scan_unchecked(row) {
                    report.horizontal.push(Violation {
                        row: r,
                        col: c,
                        triple: Triple(row[c], row[c + 1], row[c + 2]),
                    });
                }
            }
        }
        if direction.vertical() {
            for c in 0..grid.cols() {
                let col = grid.column(c);
                report.windows.v += col.len().saturating_sub(2);
                for r in self.scan_unchecked(&col) {
                    report.vertical.push(Violation {
                        row: r,
                        col: c,
                        triple: Triple(col[r], col[r + 1], col[r + 2]),
                    });
                }
            }
        }
        report.counts = Counts {
            h: report.horizontal.len(),
            v: report.vertical.len(),
        };
        Ok(report)
    }
}

/// Which grid direction(s) to scan.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Direction {
    /// Along wordlines.
    Horizontal,
    /// Along bitlines.
    Vertical,
    Both,
}

impl Direction {
    pub fn horizontal(self) -> bool {
        matches!(self, Direction::Horizontal | Direction::Both)
    }

    pub fn vertical(self) -> bool {
        matches!(self, Direction::Vertical | Direction::Both)
    }

    pub fn swapped(self) -> Self {
        match self {
            Direction::Horizontal => Direction::Vertical,
            Direction::Vertical => Direction::Horizontal,
            Direction::Both => Direction::Both,
        }
    }
}

impl FromStr for Direction {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "h" | "horizontal" => Ok(Direction::Horizontal),
            "v" | "vertical" => Ok(Direction::Vertical),
            "both" => Ok(Direction::Both),
            other => Err(Error::Parse(format!("unknown direction {other:?}"))),
        }
    }
}

/// A forbidden window; `row`/`col` locate its first cell.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub row: usize,
    pub col: usize,
    pub triple: Triple,
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize)]
pub struct Counts {
    pub h: usize,
    pub v: usize,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct ViolationReport {
    pub horizontal: Vec<Violation>,
    pub vertical: Vec<Violation>,
    pub counts: Counts,
    /// Number of 3-cell windows examined per direction.
    pub windows: Counts,
}

impl ViolationReport {
    pub fn is_clean(&self) -> bool {
        self.counts.h == 0 && self.counts.v == 0
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serialization is infallible")
    }
}
