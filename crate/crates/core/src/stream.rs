//! Text container for a coded left-most page bit stream.
//!
//! ```text
//! loco m=<m> s=<s> nbits=<payload bits>
//! <page bits in hex, MSB first, zero-padded to a byte>
//! ```
//!
//! The RLL variant uses the header `rll n=<n> k=<k> nbits=<payload bits>`.

use crate::bits::{bits_to_hex, hex_to_bits};
use crate::error::{Error, Result};
use crate::grid::parse_header;
use crate::loco::LocoCode;
use crate::rll::RllCode;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum StreamCode {
    Loco { m: usize },
    Rll { n: usize, k: usize },
}

/// A coded page plus the length of the payload it carries.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PageStream {
    pub code: StreamCode,
    pub nbits: usize,
    pub page: Vec<bool>,
}

impl PageStream {
    pub fn encode(code: StreamCode, data: &[bool]) -> Result<Self> {
        let page = match code {
            StreamCode::Loco { m } => LocoCode::new(m)?.encode_stream(data),
            StreamCode::Rll { n, k } => RllCode::new(n, k)?.encode_stream(data),
        };
        Ok(Self {
            code,
            nbits: data.len(),
            page,
        })
    }

    /// Decodes the page and drops the tail padding.
    pub fn decode(&self) -> Result<Vec<bool>> {
        let mut data = match self.code {
            StreamCode::Loco { m } => LocoCode::new(m)?.decode_stream(&self.page)?,
            StreamCode::Rll { n, k } => RllCode::new(n, k)?.decode_stream(&self.page)?,
        };
        if data.len() < self.nbits {
            return Err(Error::SizeMismatch {
                what: "decoded payload",
                expected: self.nbits,
                found: data.len(),
            });
        }
        data.truncate(self.nbits);
        Ok(data)
    }

    pub fn to_text(&self) -> Result<String> {
        let header = match self.code {
            StreamCode::Loco { m } => {
                let s = LocoCode::new(m)?.message_length();
                format!("loco m={m} s={s} nbits={}", self.nbits)
            }
            StreamCode::Rll { n, k } => format!("rll n={n} k={k} nbits={}", self.nbits),
        };
        Ok(format!("{header}\n{}\n", bits_to_hex(&self.page)))
    }

    pub fn parse_text(text: &str) -> Result<Self> {
        let (header, body) = text.split_once('\n').unwrap_or((text, ""));
        let tag = header.split_whitespace().next().unwrap_or("");
        let (code, nbits, page_bits) = match tag {
            "loco" => {
                let f = parse_header(header, Some("loco"), &["m", "s", "nbits"])?;
                let (m, nbits) = (f[0] as usize, f[2] as usize);
                let code = LocoCode::new(m)?;
                if code.message_length() != f[1] as usize {
                    return Err(Error::Parse(format!(
                        "header s={} disagrees with m={m} (s={})",
                        f[1],
                        code.message_length()
                    )));
                }
                (StreamCode::Loco { m }, nbits, code.page_bits_for(nbits))
            }
            "rll" => {
                let f = parse_header(header, Some("rll"), &["n", "k", "nbits"])?;
                let (n, k, nbits) = (f[0] as usize, f[1] as usize, f[2] as usize);
                (
                    StreamCode::Rll { n, k },
                    nbits,
                    RllCode::new(n, k)?.page_bits_for(nbits),
                )
            }
            other => return Err(Error::Parse(format!("unknown stream header {other:?}"))),
        };
        Ok(Self {
            code,
            nbits,
            page: hex_to_bits(body, page_bits)?,
        })
    }
}
