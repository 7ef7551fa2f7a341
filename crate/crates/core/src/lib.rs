//! Counting and bijective tools for parking functions whose parking
//! permutation (or block permutation) avoids a set of patterns.

pub mod arith;
pub mod bijections;
pub mod catalan;
pub mod counting;
pub mod error;
pub mod generalized;
pub mod identities;
pub mod parking;
pub mod permutation;
pub mod oracle;
pub mod series;

pub use error::{Error, Result};
