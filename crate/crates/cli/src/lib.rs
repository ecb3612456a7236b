//! Library side of the `hopflab` binary.
//!
//! The command implementations, the `.alg` text format, and the report
//! helpers live here so integration tests can drive them directly; the
//! binary in `main.rs` is a thin argument-parsing wrapper.

pub mod commands;
pub mod dsl;
pub mod report;
