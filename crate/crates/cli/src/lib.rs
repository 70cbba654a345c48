//! Library layer behind the `gfp` binary. The corpus, suites, sweep
//! harness, and rendering live here so integration tests can drive them
//! in-process instead of spawning the binary.

pub mod corpus;
pub mod render;
pub mod suites;
pub mod sweep;
