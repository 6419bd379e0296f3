//! Named coding schemes and how a flat payload is laid out on a grid.
//!
//! Payload layout:
//! * `uncoded`: pages `p-1` down to `0`, each row-major.
//! * 1D schemes: the left-most page data first (line by line in the coding
//!   frame), then the uncoded pages, page-major.
//! * `rr2d`: free left-most positions row-major, then the uncoded pages.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::grid::LevelGrid;
use crate::levels::{pages_for, Level};
use crate::loco::LocoCode;
use crate::patterns::Direction;
use crate::ragm::GrayMap;
use crate::rll::RllCode;
use crate::rr::{self, LineCode, Mask2D, Orientation, PageGrid};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Scheme {
    Uncoded,
    Rr1dWordline,
    Rr1dBitline,
    Rr2d,
    RllInterleaved,
}

impl Scheme {
    pub const ALL: [Scheme; 5] = [
        Scheme::Uncoded,
        Scheme::Rr1dWordline,
        Scheme::Rr1dBitline,
        Scheme::Rr2d,
        Scheme::RllInterleaved,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Scheme::Uncoded => "uncoded",
            Scheme::Rr1dWordline => "rr1d-wordline",
            Scheme::Rr1dBitline => "rr1d-bitline",
            Scheme::Rr2d => "rr2d",
            Scheme::RllInterleaved => "rll-interleaved",
        }
    }

    /// Direction(s) in which the scheme guarantees no forbidden triple.
    pub fn guaranteed(self) -> Option<Direction> {
        match self {
            Scheme::Uncoded => None,
            Scheme::Rr1dWordline | Scheme::RllInterleaved => Some(Direction::Horizontal),
            Scheme::Rr1dBitline => Some(Direction::Vertical),
            Scheme::Rr2d => Some(Direction::Both),
        }
    }

    fn orientation(self) -> Orientation {
        match self {
            Scheme::Rr1dBitline => Orientation::Bitline,
            _ => Orientation::Wordline,
        }
    }
}

impl fmt::Display for Scheme {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Scheme {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Scheme::ALL
            .into_iter()
            .find(|sc| sc.name() == s)
            .ok_or_else(|| Error::Parse(format!("unknown scheme {s:?}")))
    }
}

/// A scheme applied to a `rows x cols` grid of `q`-level cells. `m` is the
/// LOCO codeword length, used by the `rr1d-*` schemes only.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct GridLayout {
    pub scheme: Scheme,
    pub q: u32,
    pub m: usize,
    pub rows: usize,
    pub cols: usize,
}

enum Coder {
    Loco(LocoCode),
    Rll(RllCode),
}

impl Coder {
    fn line_code(&self) -> &dyn LineCode {
        match self {
            Coder::Loco(c) => c,
            Coder::Rll(c) => c,
        }
    }
}

impl GridLayout {
    fn coder(&self) -> Result<Option<Coder>> {
        Ok(match self.scheme {
            Scheme::Rr1dWordline | Scheme::Rr1dBitline => Some(Coder::Loco(LocoCode::new(self.m)?)),
            Scheme::RllInterleaved => Some(Coder::Rll(RllCode::default())),
            Scheme::Uncoded | Scheme::Rr2d => None,
        })
    }

    /// Length of a coded line and number of lines, in the coding frame.
    fn frame(&self) -> (usize, usize) {
        match self.scheme.orientation() {
            Orientation::Wordline => (self.cols, self.rows),
            Orientation::Bitline => (self.rows, self.cols),
        }
    }

    /// Checks that the coded dimension fits the scheme's framing.
    pub fn validate(&self) -> Result<()> {
        pages_for(self.q, 4)?;
        if let Some(coder) = self.coder()? {
            let (len, _) = self.frame();
            rr::line_capacity(coder.line_code(), len)?;
        }
        Ok(())
    }

    /// Payload bits carried by the grid.
    pub fn capacity(&self) -> Result<usize> {
        self.validate()?;
        let p = pages_for(self.q, 4)?;
        let cells = self.rows * self.cols;
        Ok(match self.coder()? {
            None if self.scheme == Scheme::Rr2d => {
                Mask2D::new(self.rows, self.cols).free_count() + cells * (p - 1)
            }
            None => cells * p,
            Some(coder) => {
                let (len, lines) = self.frame();
                lines * rr::line_capacity(coder.line_code(), len)? + cells * (p - 1)
            }
        })
    }

    /// Smallest layout whose free dimension holds `nbits` payload bits. The
    /// coded dimension (`cols` for wordline schemes, `rows` for bitline) is
    /// taken from `self`; the other one is recomputed.
    pub fn fit(mut self, nbits: usize) -> Result<Self> {
        let bitline = self.scheme == Scheme::Rr1dBitline;
        let set_lines = |layout: &mut Self, n: usize| {
            if bitline {
                layout.cols = n;
            } else {
                layout.rows = n;
            }
        };
        set_lines(&mut self, 1);
        let (len, _) = self.frame();
        if len == 0 {
            return Err(Error::Config(
                "coded grid dimension must be positive".into(),
            ));
        }
        if self.scheme == Scheme::Rr2d {
            let mut rows = 0;
            let mut capacity = 0;
            let p = pages_for(self.q, 4)?;
            while capacity < nbits {
                capacity += (0..self.cols).filter(|&c| Mask2D::is_free(rows, c)).count()
                    + self.cols * (p - 1);
                rows += 1;
            }
            self.rows = rows;
            return Ok(self);
        }
        let per_line = self.capacity()?;
        set_lines(&mut self, nbits.div_ceil(per_line));
        Ok(self)
    }

    pub fn encode(&self, payload: &[bool]) -> Result<LevelGrid> {
        let capacity = self.capacity()?;
        if payload.len() != capacity {
            return Err(Error::SizeMismatch {
                what: "payload",
                expected: capacity,
                found: payload.len(),
            });
        }
        let map = GrayMap::new(self.q)?;
        match (self.scheme, self.coder()?) {
            (Scheme::Rr2d, _) => rr::encode_2d(payload, &map, self.rows, self.cols),
            (_, Some(coder)) => {
                let code = coder.line_code();
                let split =
                    rr::grid_capacity_1d(code, self.rows, self.cols, self.scheme.orientation())?;
                let (msb, other) = payload.split_at(split);
                rr::encode_1d_grid(
                    msb,
                    other,
                    &map,
                    code,
                    self.rows,
                    self.cols,
                    self.scheme.orientation(),
                )
            }
            (_, None) => {
                let size = self.rows * self.cols;
                let p = map.pages();
                let planes = (0..p)
                    .map(|page| {
                        let k = p - 1 - page;
                        payload[k * size..(k + 1) * size].to_vec()
                    })
                    .collect();
                PageGrid::new(self.q, self.rows, self.cols, planes)?.to_levels(&map)
            }
        }
    }

    pub fn decode(&self, grid: &LevelGrid) -> Result<Vec<bool>> {
        self.validate()?;
        if (grid.q(), grid.rows(), grid.cols()) != (self.q, self.rows, self.cols) {
            return Err(Error::Config(format!(
                "grid is q={} {}x{}, layout expects q={} {}x{}",
                grid.q(),
                grid.rows(),
                grid.cols(),
                self.q,
                self.rows,
                self.cols
            )));
        }
        let map = GrayMap::new(self.q)?;
        match (self.scheme, self.coder()?) {
            (Scheme::Rr2d, _) => rr::decode_2d(grid, &map),
            (_, Some(coder)) => {
                let (mut msb, other) =
                    rr::decode_1d_grid(grid, &map, coder.line_code(), self.scheme.orientation())?;
                msb.extend(other);
                Ok(msb)
            }
            (_, None) => {
                let pages = PageGrid::from_levels(grid, &map)?;
                Ok((0..map.pages())
                    .rev()
                    .flat_map(|page| pages.plane(page).iter().copied())
                    .collect())
            }
        }
    }
}

/// Level histogram helper shared with the statistics report.
pub(crate) fn level_frequencies(cells: &[Level], q: u32) -> Vec<f64> {
    let mut counts = vec![0usize; q as usize];
    for &l in cells {
        counts[l as usize] += 1;
    }
    let total = cells.len().max(1) as f64;
    counts.into_iter().map(|c| c as f64 / total).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::patterns::PatternSet;

    fn payload(n: usize) -> Vec<bool> {
        (0..n).map(|i| (i * 7 + i / 3) % 5 < 2).collect()
    }

    #[test]
    fn names_round_trip() {
        for s in Scheme::ALL {
            assert_eq!(s.name().parse::<Scheme>().unwrap(), s);
            assert_eq!(
                serde_json::to_string(&s).unwrap(),
                format!("\"{}\"", s.name())
            );
        }
        assert!("rr3d".parse::<Scheme>().is_err());
    }

    #[test]
    fn every_scheme_round_trips() {
        for scheme in Scheme::ALL {
            let layout = GridLayout {
                scheme,
                q: 8,
                m: 7,
                rows: 36,
                cols: 36,
            };
            let bits = payload(layout.capacity().unwrap());
            let grid = layout.encode(&bits).unwrap();
            assert_eq!(layout.decode(&grid).unwrap(), bits, "{scheme}");
            if let Some(dir) = scheme.guaranteed() {
                let report = PatternSet::forbidden(8)
                    .unwrap()
                    .scan_grid(&grid, dir)
                    .unwrap();
                assert!(report.is_clean(), "{scheme}");
            }
        }
    }

    #[test]
    fn capacities() {
        let base = GridLayout {
            scheme: Scheme::Rr1dWordline,
            q: 8,
            m: 7,
            rows: 2,
            cols: 18,
        };
        assert_eq!(base.capacity().unwrap(), 2 * 10 + 36 * 2);
        let uncoded = GridLayout {
            scheme: Scheme::Uncoded,
            ..base
        };
        assert_eq!(uncoded.capacity().unwrap(), 36 * 3);
        let two_d = GridLayout {
            scheme: Scheme::Rr2d,
            rows: 4,
            cols: 4,
            ..base
        };
        assert_eq!(two_d.capacity().unwrap(), 8 + 32);
        let bad = GridLayout { cols: 17, ..base };
        assert!(matches!(bad.capacity(), Err(Error::Config(_))));
        let bitline = GridLayout {
            scheme: Scheme::Rr1dBitline,
            ..base
        };
        assert!(bitline.validate().is_err());
    }

    #[test]
    fn fit_grows_free_dimension() {
        let base = GridLayout {
            scheme: Scheme::Rr1dWordline,
            q: 8,
            m: 7,
            rows: 0,
            cols: 18,
        };
        let fitted = base.fit(100).unwrap();
        assert_eq!((fitted.rows, fitted.cols), (3, 18));
        assert_eq!(base.fit(0).unwrap().rows, 0);

        let bitline = GridLayout {
            scheme: Scheme::Rr1dBitline,
            rows: 9,
            cols: 0,
            ..base
        };
        let fitted = bitline.fit(100).unwrap();
        assert_eq!((fitted.rows, fitted.cols), (9, 5));

        let two_d = GridLayout {
            scheme: Scheme::Rr2d,
            cols: 4,
            ..base
        };
        let fitted = two_d.fit(41).unwrap();
        assert!(fitted.capacity().unwrap() >= 41);
        assert!(
            GridLayout {
                rows: fitted.rows - 1,
                ..fitted
            }
            .capacity()
            .unwrap()
                < 41
        );
    }
}
