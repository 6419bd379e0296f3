//! Fixed-length enumerative block code for the RLL(0,1) constraint (no `00`),
//! interleaved pairwise so that the combined stream avoids `000` and `010`.
//!
//! Every codeword starts with `1`, so codewords concatenate without bridging
//! bits. With the default `n = 18`, `k = 12` there are `F(17) = 4181` such
//! words, enough for all 4096 messages.

use crate::bits::{bits_to_u64, push_u64};
use crate::error::{Error, Result};

/// Longest block for which `F(n)` fits comfortably in a `u64`.
pub const MAX_BLOCK: usize = 90;

/// `F(n)`: the number of length-`n` binary strings without `00`.
pub fn rll_count(n: usize) -> u64 {
    let (mut a, mut b) = (1u64, 2u64);
    for _ in 0..n {
        (a, b) = (b, a.saturating_add(b));
    }
    a
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RllCode {
    n: usize,
    k: usize,
    counts: Vec<u64>,
}

impl Default for RllCode {
    fn default() -> Self {
        Self::new(18, 12).expect("12:18 is feasible")
    }
}

impl RllCode {
    pub fn new(n: usize, k: usize) -> Result<Self> {
        if n == 0 || n > MAX_BLOCK || k == 0 || k >= 64 {
            return Err(Error::InvalidRllParams { n, k });
        }
        let counts: Vec<u64> = (0..=n).map(rll_count).collect();
        if counts[n - 1] < 1u64 << k {
            return Err(Error::InvalidRllParams { n, k });
        }
        Ok(Self { n, k, counts })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn count(&self, i: usize) -> u64 {
        self.counts[i]
    }

    /// Valid completions of length `r` that may follow a `0`.
    fn after_zero(&self, r: usize) -> u64 {
        if r == 0 {
            1
        } else {
            self.counts[r - 1]
        }
    }

    fn check_message(&self, msg: u64, bits: usize) -> Result<()> {
        if msg >> bits != 0 {
            return Err(Error::IndexOutOfRange {
                index: msg.to_string(),
                limit: (1u128 << bits).to_string(),
            });
        }
        Ok(())
    }

    /// The `msg`-th codeword in lexicographic order.
    pub fn encode_block(&self, msg: u64) -> Result<Vec<bool>> {
        self.check_message(msg, self.k)?;
        let mut word = Vec::with_capacity(self.n);
        word.push(true);
        let mut residual = msg;
        for j in 1..self.n {
            if !word[j - 1] {
                word.push(true);
                continue;
            }
            let weight = self.after_zero(self.n - 1 - j);
            if residual >= weight {
                residual -= weight;
                word.push(true);
            } else {
                word.push(false);
            }
        }
        debug_assert_eq!(residual, 0);
        Ok(word)
    }

    pub fn decode_block(&self, word: &[bool]) -> Result<u64> {
        if word.len() != self.n {
            return Err(Error::WordLength {
                expected: self.n,
                found: word.len(),
            });
        }
        if !word[0] {
            return Err(Error::NotACodeword("block starts with 0".into()));
        }
        if let Some(position) = word.windows(2).position(|w| !w[0] && !w[1]) {
            return Err(Error::ForbiddenPattern { position });
        }
        let msg: u64 = (1..self.n)
            .filter(|&j| word[j] && word[j - 1])
            .map(|j| self.after_zero(self.n - 1 - j))
            .sum();
        if msg >> self.k != 0 {
            return Err(Error::NotACodeword(format!("rank {msg} is not a message")));
        }
        Ok(msg)
    }

    /// Encodes the two `k`-bit halves of `msg` (high half first) and
    /// interleaves them: even positions from the first codeword, odd from the
    /// second.
    pub fn interleave_encode(&self, msg: u64) -> Result<Vec<bool>> {
        self.check_message(msg, 2 * self.k)?;
        let mask = (1u64 << self.k) - 1;
        let first = self.encode_block(msg >> self.k)?;
        let second = self.encode_block(msg & mask)?;
        Ok(first
            .iter()
            .zip(&second)
            .flat_map(|(&a, &b)| [a, b])
            .collect())
    }

    pub fn interleave_decode(&self, word: &[bool]) -> Result<u64> {
        if word.len() != 2 * self.n {
            return Err(Error::WordLength {
                expected: 2 * self.n,
                found: word.len(),
            });
        }
        let first: Vec<bool> = word.iter().step_by(2).copied().collect();
        let second: Vec<bool> = word.iter().skip(1).step_by(2).copied().collect();
        Ok((self.decode_block(&first)? << self.k) | self.decode_block(&second)?)
    }

    /// Message bits per interleaved word.
    pub fn message_length(&self) -> usize {
        2 * self.k
    }

    /// Page bits per interleaved word.
    pub fn block_length(&self) -> usize {
        2 * self.n
    }

    pub fn page_bits_for(&self, data_bits: usize) -> usize {
        data_bits.div_ceil(self.message_length()) * self.block_length()
    }

    /// Splits `data` into `2k`-bit messages (zero-padding the tail) and
    /// concatenates their interleaved codewords.
    pub fn encode_stream(&self, data: &[bool]) -> Vec<bool> {
        let width = self.message_length();
        let mut page = Vec::with_capacity(self.page_bits_for(data.len()));
        for chunk in data.chunks(width) {
            let msg = bits_to_u64(chunk) << (width - chunk.len());
            page.extend(self.interleave_encode(msg).expect("message fits"));
        }
        page
    }

    pub fn decode_stream(&self, page: &[bool]) -> Result<Vec<bool>> {
        let block = self.block_length();
        if page.len() % block != 0 {
            return Err(Error::BadPageLength {
                len: page.len(),
                block,
            });
        }
        let mut data = Vec::with_capacity(page.len() / block * self.message_length());
        for (b, chunk) in page.chunks(block).enumerate() {
            let msg = self
                .interleave_decode(chunk)
                .map_err(|_| Error::InvalidCodeword { block: b })?;
            push_u64(&mut data, msg, self.message_length());
        }
        Ok(data)
    }
}
