//! Benchmarks for `cutlab`; run with `cargo bench -p cutlab-bench`.
