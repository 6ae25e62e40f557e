use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("value {value} outside 1..={d}")]
    ValueOutOfRange { value: i64, d: usize },
    #[error("not weakly decreasing: {0:?}")]
    NotAPartition(Vec<u32>),
    #[error("partition {parts:?} does not fit in P_{{{d},{n}}}")]
    NotInBox { parts: Vec<u32>, d: usize, n: usize },
    #[error("boundary word must contain exactly {expected} ones, found {found}")]
    WrongOneCount { expected: usize, found: usize },
    #[error("inner shape {kappa:?} not contained in {mu:?}")]
    SkewNotContained { kappa: Vec<u32>, mu: Vec<u32> },
    #[error("cell ({r},{c}) not in tableau")]
    NoSuchCell { r: usize, c: usize },
    #[error("polynomial contains x-variables")]
    XVariablePresent,
    #[error("zero polynomial has no leading term")]
    ZeroPolynomial,
    #[error("unbarred column word is not Yamanouchi")]
    NotYamanouchi,
    #[error("{0}")]
    Parse(String),
    #[error("internal invariant violated: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
