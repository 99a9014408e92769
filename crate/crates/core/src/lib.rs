//! Normal cones, coderivatives and subdifferentials relative to a set, computed
//! exactly for polyhedral data.

pub mod calculus;
pub mod cli;
pub mod cones;
pub mod error;
pub mod exactgeom;
pub mod mpec;
pub mod multimaps;
pub mod oracle;
pub mod plfunc;
pub mod stratify;

pub use error::{Error, Result};
