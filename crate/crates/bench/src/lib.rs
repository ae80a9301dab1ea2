//! Benchmarks for `dcb-core`; see `benches/`.
