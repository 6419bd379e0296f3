//! Recursive alternate Gray mapping between levels and per-page bits.
//!
//! Bit `i` of a label belongs to page `i`; page `p - 1` is the left-most page.
//! Labels are built by reflection: level `2^i + j` copies level `2^i - 1 - j`
//! and flips bit `i`, starting from the all-ones label at level 0.

use crate::error::{Error, Result};
use crate::levels::{check_level, pages_for, Level};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GrayMap {
    q: u32,
    pages: usize,
    labels: Vec<u16>,
    inverse: Vec<Level>,
}

impl GrayMap {
    pub fn new(q: u32) -> Result<Self> {
        let pages = pages_for(q, 2)?;
        let mut labels = vec![0u16; q as usize];
        labels[0] = (1u16 << pages) - 1;
        for i in 0..pages {
            let base = 1usize << i;
            for j in 0..base {
                labels[base + j] = labels[base - 1 - j] ^ (1 << i);
            }
        }
        let mut inverse = vec![0; q as usize];
        for (level, &label) in labels.iter().enumerate() {
            inverse[label as usize] = level as Level;
        }
        Ok(Self {
            q,
            pages,
            labels,
            inverse,
        })
    }

    pub fn q(&self) -> u32 {
        self.q
    }

    /// Number of pages, `log2(q)`.
    pub fn pages(&self) -> usize {
        self.pages
    }

    /// Index of the left-most page.
    pub fn msb_page(&self) -> usize {
        self.pages - 1
    }

    /// Packed label: bit `i` is the page-`i` bit.
    pub fn label(&self, level: Level) -> u16 {
        self.labels[level as usize]
    }

    pub fn page_bit(&self, level: Level, page: usize) -> bool {
        (self.labels[level as usize] >> page) & 1 == 1
    }

    /// Per-page bits of `level`; index `p - 1` is the left-most page.
    pub fn level_to_bits(&self, level: Level) -> Result<Vec<bool>> {
        check_level(level, self.q)?;
        Ok((0..self.pages).map(|i| self.page_bit(level, i)).collect())
    }

    pub fn bits_to_level(&self, bits: &[bool]) -> Result<Level> {
        if bits.len() != self.pages {
            return Err(Error::SizeMismatch {
                what: "label bits",
                expected: self.pages,
                found: bits.len(),
            });
        }
        let label = bits
            .iter()
            .enumerate()
            .fold(0u16, |acc, (i, &b)| acc | ((b as u16) << i));
        Ok(self.level_of_label(label))
    }

    pub fn level_of_label(&self, label: u16) -> Level {
        self.inverse[label as usize]
    }

    /// Label rendered left-most page first, e.g. `"011"`.
    pub fn label_string(&self, level: Level) -> String {
        (0..self.pages)
            .rev()
            .map(|i| if self.page_bit(level, i) { '1' } else { '0' })
            .collect()
    }

    /// One `"<level> <bits>"` line per level, ascending.
    pub fn to_table(&self) -> String {
        (0..self.q)
            .map(|l| format!("{l} {}\n", self.label_string(l as Level)))
            .collect()
    }
}
