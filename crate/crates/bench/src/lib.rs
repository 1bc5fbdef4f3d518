//! Criterion benchmarks for the simsun kernels live in `benches/`.
