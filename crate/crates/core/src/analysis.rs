//! Capacities, finite-length rates, adder sizes, error-propagation factors
//! and level probabilities of the read-and-run schemes.
//!
//! All capacities and rates are normalized: bits stored per cell divided by
//! `log2(q)`.

use std::fmt::Write as _;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::levels::Level;
use crate::loco::LocoCode;
use crate::patterns::PatternSet;
use crate::ragm::GrayMap;

/// Capacity of the 2D RLL(0,1) constraint (hard square entropy), taken as a
/// known constant.
pub const RLL_2D_CAPACITY: f64 = 0.5879;

/// Relative tolerance between successive eigenvalue estimates.
pub const POWER_ITERATION_TOL: f64 = 1e-12;
const POWER_ITERATION_MAX: usize = 200_000;

/// Largest `q` accepted by [`capacity_1d_lq`].
pub const MAX_CAPACITY_Q: u32 = 64;

pub fn golden_ratio() -> f64 {
    (1.0 + 5f64.sqrt()) / 2.0
}

/// Capacity of the 1D RLL(0,1) constraint, `log2` of the golden ratio.
pub fn rll_capacity() -> f64 {
    golden_ratio().log2()
}

fn log2_levels(q: u64) -> Result<f64> {
    if q < 2 || !q.is_power_of_two() {
        return Err(Error::InvalidLevelCount {
            q: q.min(u32::MAX as u64) as u32,
            min: 2,
            max: u32::MAX,
        });
    }
    Ok(q.trailing_zeros() as f64)
}

/// Spectral radius of the pair graph whose states are consecutive level
/// pairs `(a, b)`, with an edge to `(b, c)` unless `abc` is forbidden.
pub fn pair_graph_spectral_radius(ps: &PatternSet) -> f64 {
    let q = ps.q() as usize;
    let allowed: Vec<bool> = (0..q * q * q)
        .map(|t| {
            let (a, b, c) = (t / (q * q), t / q % q, t % q);
            !ps.contains(&crate::patterns::Triple(a as Level, b as Level, c as Level))
        })
        .collect();

    let mut x = vec![1.0f64; q * q];
    let mut y = vec![0.0f64; q * q];
    let mut estimate = 0.0f64;
    for _ in 0..POWER_ITERATION_MAX {
        y.iter_mut().for_each(|v| *v = 0.0);
        for a in 0..q {
            for b in 0..q {
                let weight = x[a * q + b];
                let row = &allowed[(a * q + b) * q..(a * q + b + 1) * q];
                for (c, &ok) in row.iter().enumerate() {
                    if ok {
                        y[b * q + c] += weight;
                    }
                }
            }
        }
        // Rayleigh quotient x.Ax / x.x
        let num: f64 = x.iter().zip(&y).map(|(a, b)| a * b).sum();
        let den: f64 = x.iter().map(|a| a * a).sum();
        let next = num / den;
        let norm = y.iter().map(|v| v * v).sum::<f64>().sqrt();
        for (xi, yi) in x.iter_mut().zip(&y) {
            *xi = yi / norm;
        }
        if (next - estimate).abs() <= POWER_ITERATION_TOL * next.abs() {
            return next;
        }
        estimate = next;
    }
    estimate
}

/// Normalized capacity of a level sequence in which no forbidden triple
/// occurs.
pub fn capacity_1d_lq(q: u32) -> Result<f64> {
    if q > MAX_CAPACITY_Q {
        return Err(Error::InvalidLevelCount {
            q,
            min: 4,
            max: MAX_CAPACITY_Q,
        });
    }
    let ps = PatternSet::forbidden(q)?;
    Ok(pair_graph_spectral_radius(&ps).log2() / log2_levels(q as u64)?)
}

/// Normalized capacity of 1D read-and-run coding: RLL(0,1) capacity on the
/// left-most page, one full bit on each other page.
pub fn capacity_1d_rr(q: u64) -> Result<f64> {
    let p = log2_levels(q)?;
    Ok((rll_capacity() + p - 1.0) / p)
}

pub fn capacity_2d_rr(q: u64) -> Result<f64> {
    let p = log2_levels(q)?;
    Ok((RLL_2D_CAPACITY + p - 1.0) / p)
}

/// `(C_Lq - C_RR) / C_Lq` in percent, from unrounded capacities.
pub fn capacity_gap_exact(q: u32) -> Result<f64> {
    let lq = capacity_1d_lq(q)?;
    Ok((lq - capacity_1d_rr(q as u64)?) / lq * 100.0)
}

/// Normalized rate of 1D RR-LOCO coding with codeword length `m`.
pub fn rate_1d_rr(q: u64, m: usize) -> Result<f64> {
    let p = log2_levels(q)?;
    let code = LocoCode::new(m)?;
    let page_rate = code.message_length() as f64 / code.block_length() as f64;
    Ok((page_rate + p - 1.0) / p)
}

/// Normalized rate of 2D coding, whose left-most page rate is one half.
pub fn rate_2d_rr(q: u64) -> Result<f64> {
    let p = log2_levels(q)?;
    Ok((p - 0.5) / p)
}

/// `(E_1D, E_2D)`: bits corrupted per channel bit error, averaged over pages.
/// A left-most page error spreads over `s / 2` message bits on average; the
/// 2D scheme has no propagation.
pub fn error_prop(q: u64, m: usize) -> Result<(f64, f64)> {
    let p = log2_levels(q)?;
    let s = LocoCode::new(m)?.message_length() as f64;
    Ok(((s / 2.0 + p - 1.0) / p, 1.0))
}

/// Stationary distribution of the maxentropic Markov chain on a 2-state
/// graph with nonnegative adjacency matrix `a`: `pi_i = u_i v_i / (u . v)`
/// with `u`, `v` the left and right Perron eigenvectors.
pub fn maxentropic_stationary(a: [[f64; 2]; 2]) -> [f64; 2] {
    let trace = a[0][0] + a[1][1];
    let det = a[0][0] * a[1][1] - a[0][1] * a[1][0];
    let lambda = trace / 2.0 + (trace * trace / 4.0 - det).sqrt();
    // (A - lambda I) v = 0 and u (A - lambda I) = 0, solved from whichever
    // off-diagonal entry is nonzero.
    let right = if a[0][1] != 0.0 {
        [a[0][1], lambda - a[0][0]]
    } else {
        [lambda - a[1][1], a[1][0]]
    };
    let left = if a[1][0] != 0.0 {
        [a[1][0], lambda - a[0][0]]
    } else {
        [lambda - a[1][1], a[0][1]]
    };
    let w = [left[0] * right[0], left[1] * right[1]];
    let total = w[0] + w[1];
    [w[0] / total, w[1] / total]
}

/// Probabilities of `0` and `1` in the maxentropic no-`00` sequence.
pub fn symbol_probs() -> (f64, f64) {
    // State = last bit; a 0 must be followed by a 1.
    let pi = maxentropic_stationary([[0.0, 1.0], [1.0, 1.0]]);
    (pi[0], pi[1])
}

/// Per-level probabilities when the left-most page follows the maxentropic
/// RLL(0,1) statistics and the other pages are uniform and independent.
pub fn level_probs(q: u32) -> Result<Vec<f64>> {
    let map = GrayMap::new(q)?;
    let (p0, p1) = symbol_probs();
    let spread = 1.0 / (1u64 << (map.pages() - 1)) as f64;
    Ok((0..q)
        .map(|l| {
            let msb = map.page_bit(l as Level, map.msb_page());
            if msb {
                p1
            } else {
                p0
            }
        })
        .map(|p| p * spread)
        .collect())
}

/// Everything tabulated for one `(q, m)` configuration.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct CodeMetrics {
    pub q: u32,
    pub m: usize,
    pub c1d_lq: f64,
    pub c1d_rr: f64,
    pub c2d_rr: f64,
    pub r1d_rr: f64,
    pub r2d_rr: f64,
    pub s: usize,
    pub e1d_rr: f64,
    pub e2d_rr: f64,
}

impl CodeMetrics {
    pub fn compute(q: u32, m: usize) -> Result<Self> {
        let (e1d_rr, e2d_rr) = error_prop(q as u64, m)?;
        Ok(Self {
            q,
            m,
            c1d_lq: capacity_1d_lq(q)?,
            c1d_rr: capacity_1d_rr(q as u64)?,
            c2d_rr: capacity_2d_rr(q as u64)?,
            r1d_rr: rate_1d_rr(q as u64, m)?,
            r2d_rr: rate_2d_rr(q as u64)?,
            s: LocoCode::new(m)?.message_length(),
            e1d_rr,
            e2d_rr,
        })
    }
}

fn round_to(x: f64, places: i32) -> f64 {
    let scale = 10f64.powi(places);
    (x * scale).round() / scale
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct CapacityRow {
    pub q: u32,
    pub c1d_lq: f64,
    pub c1d_rr: f64,
    /// Percent gap between the two tabulated (4-decimal) capacities.
    pub gap_percent: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct RateRow {
    pub q: u32,
    pub m: usize,
    pub r2d_rr: f64,
    pub r1d_rr: f64,
    pub s: usize,
    pub e2d_rr: f64,
    pub e1d_rr: f64,
}

/// The capacity-gap table and the rate/complexity/error-propagation table,
/// with values rounded as printed.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Tables {
    pub capacity: Vec<CapacityRow>,
    pub rates: Vec<RateRow>,
}

pub const TABLE_QS: [u32; 3] = [4, 8, 16];
pub const TABLE_MS: [usize; 3] = [7, 11, 21];

/// Metrics for every `(q, m)` in the tabulated grid.
pub fn code_metrics() -> Result<Vec<CodeMetrics>> {
    let mut out = Vec::new();
    for q in TABLE_QS {
        for m in TABLE_MS {
            out.push(CodeMetrics::compute(q, m)?);
        }
    }
    Ok(out)
}

pub fn make_tables() -> Result<Tables> {
    let metrics = code_metrics()?;
    let capacity = TABLE_QS
        .iter()
        .map(|&q| {
            let row = metrics.iter().find(|r| r.q == q).expect("q tabulated");
            let lq = round_to(row.c1d_lq, 4);
            let rr = round_to(row.c1d_rr, 4);
            CapacityRow {
                q,
                c1d_lq: lq,
                c1d_rr: rr,
                gap_percent: round_to((lq - rr) / lq * 100.0, 3),
            }
        })
        .collect();
    let rates = metrics
        .iter()
        .map(|r| RateRow {
            q: r.q,
            m: r.m,
            r2d_rr: round_to(r.r2d_rr, 4),
            r1d_rr: round_to(r.r1d_rr, 4),
            s: r.s,
            e2d_rr: round_to(r.e2d_rr, 3),
            e1d_rr: round_to(r.e1d_rr, 3),
        })
        .collect();
    Ok(Tables { capacity, rates })
}

impl Tables {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("tables serialize")
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "Capacity gap between C1D_Lq and C1D_RR");
        let _ = writeln!(
            out,
            "{:>4} {:>8} {:>8} {:>8}",
            "q", "C1D_Lq", "C1D_RR", "gap%"
        );
        for r in &self.capacity {
            let _ = writeln!(
                out,
                "{:>4} {:>8.4} {:>8.4} {:>8.3}",
                r.q, r.c1d_lq, r.c1d_rr, r.gap_percent
            );
        }
        let _ = writeln!(out);
        let _ = writeln!(out, "Rate, complexity and error propagation");
        let _ = writeln!(
            out,
            "{:>4} {:>4} {:>8} {:>8} {:>4} {:>8} {:>8}",
            "q", "m", "R2D_RR", "R1D_RR", "s", "E2D_RR", "E1D_RR"
        );
        for r in &self.rates {
            let _ = writeln!(
                out,
                "{:>4} {:>4} {:>8.4} {:>8.4} {:>4} {:>8.3} {:>8.3}",
                r.q, r.m, r.r2d_rr, r.r1d_rr, r.s, r.e2d_rr, r.e1d_rr
            );
        }
        out
    }
}
