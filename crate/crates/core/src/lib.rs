//! Solvers for packing two-bar charts into a unit-height strip.
//!
//! The crate models the packing problem exactly (fixed-point heights), builds
//! the two union graphs that encode which charts can share cells, and layers
//! three kinds of solvers on top:
//!
//! * approximation algorithms that reduce the problem to a maximum tour or a
//!   maximum matching ([`algorithms`]),
//! * interchangeable tour engines of different strength ([`atsp`]),
//! * slow exact oracles used to check everything else ([`oracles`]).

pub mod algorithms;
pub mod atsp;
pub mod error;
pub mod graphs;
pub mod matching;
pub mod model;
pub mod oracles;
mod util;

pub use error::{Error, Result};
pub use model::{CellPacking, Chart, ChartClass, Height, Instance, SequencePacking, Violations};
