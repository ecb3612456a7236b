//! Benchmark-only crate; see `benches/kernels.rs` for the measurements.
//! Kept as a separate workspace member so heavy benchmark dependencies
//! never land in the library or the CLI.
