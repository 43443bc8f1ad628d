use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum Error {
    #[error("length mismatch: {left} vs {right}")]
    LengthMismatch { left: usize, right: usize },

    #[error("parse error: {0}")]
    Parse(String),

    #[error("generator rows are not independent: rank {rank}, expected {expected}")]
    RankDeficient { rank: usize, expected: usize },

    #[error("symmetry has an odd number ({0}) of intra-block swaps")]
    OddSwapCount(usize),

    #[error("invalid symmetry: {0}")]
    InvalidSymmetry(String),

    #[error("the zero word has no orbit type")]
    ZeroWord,

    #[error("{0} is not a codeword of E10")]
    NotACodeword(String),

    #[error("invalid bit positions: {0}")]
    InvalidPositions(String),

    #[error("no lift of {target} within distance 3 of the received word (best {best})")]
    NoLiftWithinRadius { target: String, best: u32 },

    #[error("search budget too large for unique decoding: {erasures} erasures, {errors} errors")]
    BudgetExceeded { erasures: usize, errors: u32 },

    #[error("unknown decoder {0:?}")]
    UnknownDecoder(String),

    /// An internal invariant failed; this always indicates a bug.
    #[error("internal invariant violated: {0}")]
    Invariant(String),
}
