// SPDX-License-Identifier: Apache-2.0

use std::path::PathBuf;

use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

/// Errors raised anywhere in the crate.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("invalid parameters: {0}")]
    InvalidParameters(String),

    #[error("malformed intersection array: {0}")]
    MalformedArray(String),

    #[error("degree k_{index} = k_{prev}*b_{prev}/c_{index} is not an integer")]
    NonIntegralDegree { index: usize, prev: usize },

    #[error("intersection number a_{index} = {value} is negative")]
    NegativeIntersectionNumber { index: usize, value: i64 },

    #[error("integer overflow while computing {0}")]
    Overflow(&'static str),

    #[error("infeasible parameters: {0}")]
    InfeasibleParameters(String),

    #[error("numerical failure: {0}")]
    NumericalFailure(String),

    #[error("no index j in 1..=d constrains alpha")]
    NoConstraint,

    #[error("matrix is not positive semidefinite (min eigenvalue {min_eigenvalue:e}, tolerance {tolerance:e})")]
    NotPsd { min_eigenvalue: f64, tolerance: f64 },

    #[error("row sums do not vanish (max |row sum| {max_row_sum:e}, tolerance {tolerance:e})")]
    RowSumsNonzero { max_row_sum: f64, tolerance: f64 },

    #[error("certificate has no negative off-diagonal class; ratio is undefined")]
    ZeroDenominator,

    #[error("linear program is infeasible")]
    Infeasible,

    #[error("linear program is unbounded")]
    Unbounded,

    #[error("pivot below tolerance {0:e}")]
    PivotTolerance(f64),

    #[error("instance has {vertices} vertices, above the cap of {cap}")]
    TooLarge { vertices: u128, cap: usize },

    #[error("unknown graph name {0:?}")]
    UnknownName(String),

    #[error("parse error{}: {message}", line.map(|l| format!(" at line {l}")).unwrap_or_default())]
    Parse { line: Option<usize>, message: String },

    #[error("graph is disconnected")]
    Disconnected,

    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),

    #[error("graph is not distance-regular: pair ({x}, {y}) at distance {distance} has {detail}")]
    NotDistanceRegular {
        x: usize,
        y: usize,
        distance: usize,
        detail: String,
    },

    #[error("embedding maps two distinct vertices to the same point")]
    DegenerateEmbedding,

    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("eigenvalue iteration did not converge after {0} sweeps")]
    NoConvergence(usize),

    #[error("i/o error on {path}: {message}")]
    Io { path: PathBuf, message: String },
}
