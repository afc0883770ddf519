//! Benchmark-only crate; see benches/determinant.rs.
