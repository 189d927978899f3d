pub mod congruence;
pub mod error;
pub mod exact;
pub mod harness;
pub mod par;
pub mod qkit;
pub mod sums;

pub use error::{Error, Result};
