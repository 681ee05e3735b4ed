use thiserror::Error;

#[derive(Debug, Error)]
pub enum KirwanError {
    #[error("invalid parameters for {family}: {constraint}")]
    InvalidParams { family: String, constraint: String },

    #[error("parse error at position {pos}: {msg}")]
    Parse { pos: usize, msg: String },

    #[error("rank mismatch: expected {expected} coordinates, got {got}")]
    RankMismatch { expected: usize, got: usize },

    #[error("{0} is not a compact root of this pair")]
    NotACompactRoot(String),

    #[error("coweight {0} is not dominant")]
    NotDominant(String),

    #[error("Λ = {0} is not in the holomorphic chamber (pass --allow-boundary to proceed)")]
    NotHolomorphic(String),

    #[error("Weyl group order exceeds the bound {bound} (set KIRWAN_MAX_WEYL to raise it)")]
    WeylBoundExceeded { bound: usize },

    #[error("dimension mismatch: {0}")]
    DimMismatch(String),

    #[error("vertex enumeration is capped at rank {cap}, system has rank {rank}")]
    RankTooLarge { cap: usize, rank: usize },

    #[error("{0}")]
    Invalid(String),
}
