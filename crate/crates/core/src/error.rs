use std::fmt;

use crate::model::Violations;

/// Errors produced by the packing model, the graph reductions and the solvers.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// An instance must contain at least one chart.
    EmptyInstance,
    /// The declared denominator must be positive.
    BadDenominator { denominator: u32 },
    /// A bar height is outside `1..=denominator`.
    BadHeight {
        chart: usize,
        bar: &'static str,
        value: u32,
        denominator: u32,
    },
    /// An operation needs at least `needed` charts or vertices.
    TooFew {
        what: &'static str,
        needed: usize,
        got: usize,
    },
    /// An exact solver or oracle was asked for more than it can handle.
    SizeLimit {
        what: &'static str,
        limit: usize,
        got: usize,
    },
    /// A chart order is not a permutation of `0..n`.
    NotAPermutation,
    /// An edge or arc references a vertex outside `0..n` or loops.
    BadEdge { i: usize, j: usize, n: usize },
    /// Two matching pairs share a vertex.
    NotDisjoint { vertex: usize },
    /// The overlap list of a sequence packing has the wrong length.
    OverlapCount { expected: usize, got: usize },
    /// A declared union level is not feasible for the adjacent ordered pair.
    InfeasibleOverlap {
        position: usize,
        left: usize,
        right: usize,
        level: u8,
    },
    /// A packing breaks the per-cell height budget or uses a cell below 1.
    InvalidPacking(Violations),
    /// The packing contains a 2-union where only 0- and 1-unions are allowed.
    TwoUnionPresent { position: usize },
    /// Two consecutive 2-unions stack three charts into the same cells; the
    /// 1-union rewrite is not defined for such packings.
    StackedTwoUnions { position: usize },
    /// A matched pair does not admit a 2-union.
    NotATwoUnionPair { i: usize, j: usize },
    /// The instance is not non-strictly big and the override flag is unset.
    NotNonStrictlyBig { chart: usize },
    /// No tour engine is registered under this name.
    UnknownEngine { name: String },
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::EmptyInstance => write!(f, "instance must contain at least one chart"),
            Error::BadDenominator { denominator } => {
                write!(f, "denominator must be positive, got {denominator}")
            }
            Error::BadHeight {
                chart,
                bar,
                value,
                denominator,
            } => write!(
                f,
                "chart {chart}: bar {bar} has height {value}, expected 1..={denominator}"
            ),
            Error::TooFew { what, needed, got } => {
                write!(f, "{what} needs at least {needed} charts, got {got}")
            }
            Error::SizeLimit { what, limit, got } => {
                write!(f, "{what} is limited to {limit} charts, got {got}")
            }
            Error::NotAPermutation => write!(f, "chart order is not a permutation"),
            Error::BadEdge { i, j, n } => {
                write!(f, "pair ({i}, {j}) is not valid on {n} vertices")
            }
            Error::NotDisjoint { vertex } => {
                write!(f, "vertex {vertex} appears in two matching pairs")
            }
            Error::OverlapCount { expected, got } => {
                write!(f, "expected {expected} overlap entries, got {got}")
            }
            Error::InfeasibleOverlap {
                position,
                left,
                right,
                level,
            } => write!(
                f,
                "overlap {position}: level {level} is infeasible for charts ({left}, {right})"
            ),
            Error::InvalidPacking(v) => write!(f, "invalid packing: {v}"),
            Error::TwoUnionPresent { position } => {
                write!(f, "packing contains a 2-union at overlap {position}")
            }
            Error::StackedTwoUnions { position } => write!(
                f,
                "consecutive 2-unions at overlaps {} and {position} stack three charts",
                position - 1
            ),
            Error::NotATwoUnionPair { i, j } => {
                write!(f, "charts {i} and {j} do not admit a 2-union")
            }
            Error::NotNonStrictlyBig { chart } => write!(
                f,
                "chart {chart} has both bars below half the strip height; \
                 pass the override flag to pack anyway"
            ),
            Error::UnknownEngine { name } => write!(f, "unknown tour engine {name:?}"),
        }
    }
}

impl std::error::Error for Error {}

pub type Result<T> = std::result::Result<T, Error>;
