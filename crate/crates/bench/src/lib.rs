//! Criterion benchmarks for `sects-core`; see `benches/core.rs`.

pub use sects_core;
