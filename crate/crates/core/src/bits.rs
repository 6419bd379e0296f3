//! Bit-vector helpers shared by the codecs.
//!
//! Bits are plain `bool`s. Index 0 is the first (left-most, most significant)
//! bit of a word or stream.

use crate::error::{Error, Result};

/// Parses a string of `0`/`1` characters. Whitespace is ignored.
pub fn parse_bits(s: &str) -> Result<Vec<bool>> {
    s.chars()
        .filter(|c| !c.is_whitespace())
        .map(|c| match c {
            '0' => Ok(false),
            '1' => Ok(true),
            other => Err(Error::Parse(format!("unexpected bit character {other:?}"))),
        })
        .collect()
}

pub fn format_bits(bits: &[bool]) -> String {
    bits.iter().map(|&b| if b { '1' } else { '0' }).collect()
}

/// Big-endian value of up to 64 bits.
pub fn bits_to_u64(bits: &[bool]) -> u64 {
    debug_assert!(bits.len() <= 64);
    bits.iter().fold(0u64, |acc, &b| (acc << 1) | b as u64)
}

/// Writes the `width` low bits of `value`, most significant first.
pub fn push_u64(out: &mut Vec<bool>, value: u64, width: usize) {
    out.extend((0..width).rev().map(|i| (value >> i) & 1 == 1));
}

pub fn u64_to_bits(value: u64, width: usize) -> Vec<bool> {
    let mut out = Vec::with_capacity(width);
    push_u64(&mut out, value, width);
    out
}

/// Bytes to bits, most significant bit first within each byte.
pub fn bytes_to_bits(bytes: &[u8]) -> Vec<bool> {
    let mut out = Vec::with_capacity(bytes.len() * 8);
    for &b in bytes {
        push_u64(&mut out, b as u64, 8);
    }
    out
}

/// Bits to bytes, MSB first, zero-padding the final byte.
pub fn bits_to_bytes(bits: &[bool]) -> Vec<u8> {
    bits.chunks(8)
        .map(|chunk| {
            chunk
                .iter()
                .enumerate()
                .fold(0u8, |acc, (i, &b)| acc | ((b as u8) << (7 - i)))
        })
        .collect()
}

/// Hex rendering of a bit stream, zero-padded to a byte boundary.
pub fn bits_to_hex(bits: &[bool]) -> String {
    hex::encode(bits_to_bytes(bits))
}

/// Inverse of [`bits_to_hex`]; keeps the first `nbits` bits.
pub fn hex_to_bits(text: &str, nbits: usize) -> Result<Vec<bool>> {
    let cleaned: String = text.chars().filter(|c| !c.is_whitespace()).collect();
    let bytes = hex::decode(&cleaned).map_err(|e| Error::Parse(format!("bad hex payload: {e}")))?;
    let mut bits = bytes_to_bits(&bytes);
    if bits.len() < nbits || bits.len() >= nbits + 8 {
        return Err(Error::Parse(format!(
            "hex payload holds {} bits, header declares {nbits}",
            bits.len()
        )));
    }
    bits.truncate(nbits);
    Ok(bits)
}

pub fn complement(bits: &[bool]) -> Vec<bool> {
    bits.iter().map(|&b| !b).collect()
}

/// Positions `i` where `bits[i]` and `bits[i + 2]` are both zero, i.e. the
/// windows `000` and `010`.
pub fn zero_gap_zero_windows(bits: &[bool]) -> Vec<usize> {
    bits.windows(3)
        .enumerate()
        .filter(|(_, w)| !w[0] && !w[2])
        .map(|(i, _)| i)
        .collect()
}
