use crate::error::{Error, Result};

/// A charge level index in `0..q`.
pub type Level = u8;

/// Largest supported level count; levels fit in a [`Level`].
pub const MAX_Q: u32 = 256;

/// Validates `q` as a power of two within `min..=MAX_Q` and returns the
/// number of pages `p = log2(q)`.
pub fn pages_for(q: u32, min: u32) -> Result<usize> {
    if q < min || q > MAX_Q || !q.is_power_of_two() {
        return Err(Error::InvalidLevelCount { q, min, max: MAX_Q });
    }
    Ok(q.trailing_zeros() as usize)
}

pub fn check_level(level: Level, q: u32) -> Result<()> {
    if (level as u32) < q {
        Ok(())
    } else {
        Err(Error::LevelOutOfRange {
            level: level as u32,
            q,
        })
    }
}
