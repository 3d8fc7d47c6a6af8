//! Error type shared by every module of the crate.

use thiserror::Error;

/// Errors raised while validating inputs or while running an exact computation.
///
/// Variants that name an "implementation bug" can only fire if an internal
/// invariant is broken; they are surfaced rather than unwrapped so that
/// verification sweeps can report them instead of aborting.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("a Hessenberg function needs at least one value")]
    Empty,
    #[error("h({index}) = {value} is outside [1, {n}]")]
    OutOfRange {
        index: usize,
        value: usize,
        n: usize,
    },
    #[error("h({index}) = {value} is below the diagonal (needs h(i) >= i)")]
    BelowDiagonal { index: usize, value: usize },
    #[error("h is not nondecreasing: h({index}) = {value} > h({next}) = {next_value}")]
    NotNondecreasing {
        index: usize,
        value: usize,
        next: usize,
        next_value: usize,
    },
    #[error("root set is not an upper-order ideal of the negative roots: {0}")]
    NotAnIdeal(String),
    #[error("invalid root t_{i} - t_{j} for rank {n}")]
    InvalidRoot { i: usize, j: usize, n: usize },
    #[error("{0:?} is not a sink set (independent set) of the incomparability graph")]
    NotASinkSet(Vec<usize>),
    #[error("orientation sink set {actual:?} does not match requested sink set {expected:?}")]
    SinkSetMismatch {
        expected: Vec<usize>,
        actual: Vec<usize>,
    },
    #[error("the requested edge directions contain a directed cycle")]
    CyclicOrientation,
    #[error("size mismatch: {left} vs {right}")]
    SizeMismatch { left: usize, right: usize },
    #[error("invalid partition {0:?}: parts must be positive and weakly decreasing")]
    InvalidPartition(Vec<usize>),
    #[error("invalid composition {parts:?} of {n}")]
    InvalidComposition { parts: Vec<usize>, n: usize },
    #[error("{0:?} is not a permutation in one-line notation")]
    InvalidPermutation(Vec<usize>),
    #[error("linear solve against N did not have an exact integral solution ({0})")]
    NonIntegralSolution(String),
    #[error("arithmetic overflow in {0}")]
    Overflow(&'static str),
    #[error("hypothesis not met: {0}")]
    Hypothesis(String),
    #[error("root t_{a} - t_{b} is not in the ideal I_h")]
    BetaNotInIdeal { a: usize, b: usize },
    #[error("{0:?} is not a shortest coset representative")]
    NotShortestRepresentative(Vec<usize>),
    #[error("h_z construction produced a non-Hessenberg function (implementation bug): {0}")]
    ResultNotHessenberg(String),
}

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;
