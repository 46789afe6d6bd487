//! Criterion benchmarks for `prismcover`; see `benches/covering.rs`.
