//! Criterion benchmarks for `ddqpc-core`; see `benches/`.
