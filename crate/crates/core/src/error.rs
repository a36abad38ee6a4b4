use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("order of parastatistics must be at least 1")]
    ZeroOrder,

    /// A coefficient radicand came out negative on a label that passed the
    /// admissibility filter. This is a transcription bug, not a user error.
    #[error("negative radicand {radicand} in {coefficient}(mu12={mu12}, mu22={mu22}) at p={p}")]
    Domain {
        coefficient: &'static str,
        p: u32,
        mu12: i64,
        mu22: i64,
        radicand: f64,
    },

    #[error("dimension mismatch: {left:?} vs {right:?}")]
    DimensionMismatch {
        left: (usize, usize),
        right: (usize, usize),
    },

    #[error("cannot add operators of different grade ({0} and {1})")]
    MixedGrades(u8, u8),

    #[error("operator {0} has no matrix in the defining realization")]
    NotInDefining(String),

    #[error("unknown symbol `{0}`")]
    UnknownSymbol(String),

    #[error("invalid oscillator parameters: {0}")]
    InvalidParams(String),

    #[error("no level-preserving intertwiner: {0}")]
    NoIntertwiner(String),

    #[error("invalid configuration: {0}")]
    Config(String),
}
