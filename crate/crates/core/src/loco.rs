//! Binary LOCO code forbidding `000` and `010`, used on the left-most page.
//!
//! Codewords of length `m` are ranked in lexicographic order (`0 < 1`, most
//! significant bit first). Ranking sums per-bit contributions taken from the
//! cardinality table `N`; unranking walks the same contributions from the
//! most significant bit down. On a page, every codeword is followed by the
//! bridge `11`, and only indices below `2^s` are used, where
//! `s = floor(log2(N(m) - 1))`. This keeps the all-ones word out of the
//! stream.
//!
//! Words are `&[bool]` with element 0 holding `c_{m-1}`, the left-most bit.

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::bits::{self, push_u64};
use crate::error::{Error, Result};

/// Offset of `N(0)` inside the cardinality table, which starts at `N(-3)`.
const BASE: isize = 3;

/// Builds `N(-3..=m)`.
fn cardinality_table(m: usize) -> Vec<BigUint> {
    // N(-3) = 0 is needed by the typical-case contribution of bit 0.
    let mut table: Vec<BigUint> = vec![
        BigUint::zero(),
        BigUint::one(),
        BigUint::one(),
        BigUint::one(),
        BigUint::from(2u32),
    ];
    for i in 2..=m {
        let at = i + BASE as usize;
        let next = &table[at - 1] + &table[at - 3] + &table[at - 4];
        table.push(next);
    }
    table.truncate(m + 1 + BASE as usize);
    table
}

/// Number of length-`m` binary words with no `000` and no `010`.
pub fn cardinality(m: usize) -> BigUint {
    cardinality_table(m).pop().expect("table holds N(m)")
}

/// Message bits carried by one codeword of length `m`.
pub fn message_length(m: usize) -> Result<usize> {
    Ok(LocoCode::new(m)?.message_length())
}

/// The code `RC_m` together with its cardinality table.
#[derive(Debug, Clone)]
pub struct LocoCode {
    m: usize,
    table: Vec<BigUint>,
    s: usize,
    message_limit: BigUint,
}

impl LocoCode {
    pub fn new(m: usize) -> Result<Self> {
        if m < 2 {
            return Err(Error::InvalidCodeLength(m));
        }
        let table = cardinality_table(m);
        let usable = table.last().expect("nonempty") - 1u32;
        // floor(log2(x)) for x >= 1 is bits(x) - 1.
        let s = usable.bits() as usize - 1;
        Ok(Self {
            m,
            table,
            s,
            message_limit: BigUint::one() << s,
        })
    }

    pub fn m(&self) -> usize {
        self.m
    }

    /// Adder size `s`, which is also the message length per codeword.
    pub fn message_length(&self) -> usize {
        self.s
    }

    /// Page bits per message: the codeword plus the `11` bridge.
    pub fn block_length(&self) -> usize {
        self.m + 2
    }

    /// `N(m)`.
    pub fn cardinality(&self) -> &BigUint {
        self.count(self.m as isize)
    }

    /// `N(i)` for `-3 <= i <= m`.
    pub fn count(&self, i: isize) -> &BigUint {
        assert!(
            (-BASE..=self.m as isize).contains(&i),
            "N({i}) outside the table"
        );
        &self.table[(i + BASE) as usize]
    }

    fn check_word(&self, word: &[bool]) -> Result<()> {
        if word.len() != self.m {
            return Err(Error::WordLength {
                expected: self.m,
                found: word.len(),
            });
        }
        Ok(())
    }

    /// Lexicographic index of a codeword.
    pub fn rank(&self, word: &[bool]) -> Result<BigUint> {
        self.check_word(word)?;
        if let Some(&position) = bits::zero_gap_zero_windows(word).first() {
            return Err(Error::ForbiddenPattern { position });
        }
        let m = self.m;
        // c_i for i >= m is out of bounds.
        let bit = |i: usize| (i < m).then(|| word[m - 1 - i]);
        let mut index = BigUint::zero();
        for i in 0..m {
            if !bit(i).unwrap() {
                continue;
            }
            let i = i as isize;
            match (bit(i as usize + 2), bit(i as usize + 1)) {
                // 001 and 011: no codeword can start with 000 or 010 here.
                (Some(false), _) => {}
                // 101 and ζ01
                (_, Some(false)) => index += self.count(i - 2),
                _ => {
                    index += self.count(i - 2);
                    index += self.count(i - 3);
                }
            }
        }
        Ok(index)
    }

    /// The codeword with lexicographic index `index`.
    pub fn unrank(&self, index: &BigUint) -> Result<Vec<bool>> {
        if index >= self.cardinality() {
            return Err(Error::IndexOutOfRange {
                index: index.to_string(),
                limit: self.cardinality().to_string(),
            });
        }
        let m = self.m;
        let mut word = vec![false; m];
        let mut residual = index.clone();
        for i in (0..m).rev() {
            let at = m - 1 - i;
            let two_up = (i + 2 < m).then(|| word[at - 2]);
            let one_up = (i + 1 < m).then(|| word[at - 1]);
            if two_up == Some(false) {
                word[at] = true;
                continue;
            }
            let i = i as isize;
            let mut weight = self.count(i - 2).clone();
            if one_up != Some(false) {
                weight += self.count(i - 3);
            }
            if residual >= weight {
                residual -= weight;
                word[at] = true;
            }
        }
        debug_assert!(residual.is_zero());
        Ok(word)
    }

    /// Index of a word from the complemented code, which forbids `101` and
    /// `111` instead.
    pub fn asym_rank(&self, word: &[bool]) -> Result<BigUint> {
        self.check_word(word)?;
        if let Some(position) = word.windows(3).position(|w| w[0] && w[2]) {
            return Err(Error::ForbiddenPattern { position });
        }
        let m = self.m;
        let mut index = BigUint::zero();
        for i in 0..m {
            if word[m - 1 - i] {
                let next_up = i + 1 < m && word[m - 2 - i];
                index += self.count(i as isize - next_up as isize);
            }
        }
        Ok(index)
    }

    pub fn asym_unrank(&self, index: &BigUint) -> Result<Vec<bool>> {
        if index >= self.cardinality() {
            return Err(Error::IndexOutOfRange {
                index: index.to_string(),
                limit: self.cardinality().to_string(),
            });
        }
        let m = self.m;
        let mut word = vec![false; m];
        let mut residual = index.clone();
        for i in (0..m).rev() {
            let at = m - 1 - i;
            if i + 2 < m && word[at - 2] {
                continue;
            }
            let next_up = i + 1 < m && word[at - 1];
            let weight = self.count(i as isize - next_up as isize);
            if residual >= *weight {
                residual -= weight;
                word[at] = true;
            }
        }
        debug_assert!(residual.is_zero());
        Ok(word)
    }

    /// Number of page bits produced for `data_bits` message bits.
    pub fn page_bits_for(&self, data_bits: usize) -> usize {
        data_bits.div_ceil(self.s) * self.block_length()
    }

    /// Splits `data` into `s`-bit big-endian messages (zero-padding the tail),
    /// encodes each and appends the `11` bridge after every codeword.
    pub fn encode_stream(&self, data: &[bool]) -> Vec<bool> {
        let mut page = Vec::with_capacity(self.page_bits_for(data.len()));
        for chunk in data.chunks(self.s) {
            let mut value = BigUint::zero();
            for k in 0..self.s {
                value <<= 1;
                if chunk.get(k).copied().unwrap_or(false) {
                    value += 1u32;
                }
            }
            let word = self.unrank(&value).expect("2^s <= N(m) - 1");
            page.extend_from_slice(&word);
            page.extend_from_slice(&[true, true]);
        }
        page
    }

    /// Inverse of [`encode_stream`](Self::encode_stream). The result includes
    /// any tail padding; the caller truncates to the known payload length.
    pub fn decode_stream(&self, page: &[bool]) -> Result<Vec<bool>> {
        let block = self.block_length();
        if page.len() % block != 0 {
            return Err(Error::BadPageLength {
                len: page.len(),
                block,
            });
        }
        let mut data = Vec::with_capacity(page.len() / block * self.s);
        for (b, chunk) in page.chunks(block).enumerate() {
            let (word, bridge) = chunk.split_at(self.m);
            if bridge != [true, true] {
                return Err(Error::CorruptBridge { block: b });
            }
            let value = self
                .rank(word)
                .map_err(|_| Error::InvalidCodeword { block: b })?;
            if value >= self.message_limit {
                return Err(Error::InvalidCodeword { block: b });
            }
            push_biguint(&mut data, &value, self.s);
        }
        Ok(data)
    }
}

fn push_biguint(out: &mut Vec<bool>, value: &BigUint, width: usize) {
    if width <= 64 {
        let v = value.iter_u64_digits().next().unwrap_or(0);
        push_u64(out, v, width);
    } else {
        out.extend((0..width as u64).rev().map(|i| value.bit(i)));
    }
}
