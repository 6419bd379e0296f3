//! Read-and-run constrained coding for multi-level Flash.
//!
//! Only the left-most page of each cell is constrained; all other pages are
//! stored verbatim and can be read independently. The crate provides:
//!
//! * [`patterns`]: the forbidden level-triple set and grid scanners,
//! * [`ragm`]: the recursive alternate Gray mapping between levels and pages,
//! * [`loco`]: the LOCO code forbidding `000`/`010` with bridged framing,
//! * [`rll`]: the interleaved RLL(0,1) fixed-length block code,
//! * [`rr`]: 1D and 2D read-and-run grid assembly,
//! * [`analysis`]: capacities, rates, error propagation and probabilities,
//! * [`scheme`] and [`experiment`]: named schemes and seeded grid statistics.

pub mod analysis;
pub mod bits;
pub mod error;
pub mod experiment;
pub mod grid;
pub mod levels;
pub mod loco;
pub mod patterns;
pub mod ragm;
pub mod rll;
pub mod rr;
pub mod scheme;
pub mod stream;

pub use error::{Error, Result};
pub use grid::LevelGrid;
pub use levels::Level;
pub use loco::LocoCode;
pub use patterns::{Direction, PatternSet, ViolationReport};
pub use ragm::GrayMap;
pub use rll::RllCode;
pub use scheme::{GridLayout, Scheme};
