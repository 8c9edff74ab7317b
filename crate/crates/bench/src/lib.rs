//! Benchmarks for the cuspfam library live in `benches/`.
