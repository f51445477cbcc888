//! Library half of the `twobar` command-line tool: file formats, instance
//! generation, solver dispatch, rendering and benchmarking. The binary in
//! `main.rs` is a thin argument-parsing wrapper over these modules.

pub mod bench;
pub mod error;
pub mod files;
pub mod gen;
pub mod render;
pub mod report;
pub mod runner;

pub use error::{CliError, Result};
