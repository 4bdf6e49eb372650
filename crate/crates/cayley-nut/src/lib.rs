//! Command-line front end and file formats for certified Cayley nut graphs.
//!
//! The algorithms live in [`cayley_nut_core`]; this crate adds edge-list and
//! JSON renderings, multi-threaded scans and the `cayley-nut` binary.

pub mod cli;
pub mod format;
pub mod scan;

pub use cayley_nut_core as core;
