//! Benchmarks for the d-invariant pipeline live under `benches/`.
//!
//! Run with `cargo bench -p hfsplit-bench`.
