//! Criterion benchmarks for `hessdot`; run them with `cargo bench -p hessdot-bench`.
