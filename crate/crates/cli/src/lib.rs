//! Command-line frontend and verification harness for `rankalg-core`.

pub mod commands;
pub mod input;
pub mod printed;
pub mod report;
pub mod verify;
