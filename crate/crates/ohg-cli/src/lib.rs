//! Command-line companion to [`ohg_core`]: text formats for oriented
//! hypergraphs and block designs, a seeded instance generator, and the
//! law-verification harness behind the `ohg` binary.

pub mod cli;
pub mod format;
pub mod generate;
pub mod verify;
