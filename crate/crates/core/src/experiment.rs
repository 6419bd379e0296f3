//! Seeded grid-statistics experiment: random data written through a scheme,
//! then scanned for forbidden triples and summarized per level and per page.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::Result;
use crate::grid::LevelGrid;
use crate::patterns::{Counts, Direction, PatternSet};
use crate::ragm::GrayMap;
use crate::scheme::{level_frequencies, GridLayout, Scheme};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct ExperimentConfig {
    pub q: u32,
    pub m: usize,
    pub rows: usize,
    pub cols: usize,
    pub scheme: Scheme,
    pub seed: u64,
}

impl ExperimentConfig {
    pub fn layout(&self) -> GridLayout {
        GridLayout {
            scheme: self.scheme,
            q: self.q,
            m: self.m,
            rows: self.rows,
            cols: self.cols,
        }
    }

    /// Encodes a full grid of ChaCha8 random payload bits.
    pub fn generate(&self) -> Result<LevelGrid> {
        let layout = self.layout();
        let mut rng = ChaCha8Rng::seed_from_u64(self.seed);
        let payload: Vec<bool> = (0..layout.capacity()?).map(|_| rng.random()).collect();
        layout.encode(&payload)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Rates {
    pub h: f64,
    pub v: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct StatsReport {
    pub config: ExperimentConfig,
    pub rng: &'static str,
    pub windows: Counts,
    pub violations: Counts,
    pub violation_rate: Rates,
    /// Empirical probability of each level.
    pub level_probs: Vec<f64>,
    /// Empirical frequency of `0` and of `1` on each page, page 0 first.
    pub page_zero_freq: Vec<f64>,
    pub page_one_freq: Vec<f64>,
}

impl StatsReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("stats serialize")
    }
}

fn ratio(num: usize, den: usize) -> f64 {
    if den == 0 {
        0.0
    } else {
        num as f64 / den as f64
    }
}

/// Summarizes an already encoded grid.
pub fn summarize(config: ExperimentConfig, grid: &LevelGrid) -> Result<StatsReport> {
    let report = PatternSet::forbidden(grid.q())?.scan_grid(grid, Direction::Both)?;
    let map = GrayMap::new(grid.q())?;
    let cells = grid.cells();
    let page_one_freq: Vec<f64> = (0..map.pages())
        .map(|page| {
            ratio(
                cells.iter().filter(|&&l| map.page_bit(l, page)).count(),
                cells.len(),
            )
        })
        .collect();
    Ok(StatsReport {
        config,
        rng: "chacha8",
        windows: report.windows,
        violations: report.counts,
        violation_rate: Rates {
            h: ratio(report.counts.h, report.windows.h),
            v: ratio(report.counts.v, report.windows.v),
        },
        level_probs: level_frequencies(cells, grid.q()),
        page_zero_freq: page_one_freq.iter().map(|f| 1.0 - f).collect(),
        page_one_freq,
    })
}

pub fn run_stats(config: ExperimentConfig) -> Result<StatsReport> {
    let grid = config.generate()?;
    summarize(config, &grid)
}
