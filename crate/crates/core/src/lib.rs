//! Exact commutative algebra of statistical ranking models on posets.

pub mod error;
pub mod linalg;
pub mod models;
pub mod plackett_luce;
pub mod poly;
pub mod poset;
pub mod random;
pub mod structural;
pub mod toric;

pub use error::{Error, Result};
