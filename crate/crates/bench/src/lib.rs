//! Criterion benchmarks for `pogp`; see `benches/`.
