use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("degenerate interpolation: duplicate abscissa {0}")]
    DegenerateInterpolation(String),
    #[error("log undefined: constant term is not 1")]
    LogUndefined,
    #[error("exp undefined: constant term is not 0")]
    ExpUndefined,
    #[error("invalid family parameters: {0}")]
    InvalidFamily(String),
    #[error("bad prime {0}: some hyperplane reduces to 0 = 0")]
    BadPrime(u64),
    #[error("poset not stabilized; retry with larger primes ({0})")]
    PosetNotStabilized(String),
    #[error("non-integral coefficient {0} in characteristic polynomial")]
    NonIntegral(String),
    #[error("not a region")]
    NotARegion,
    #[error("point lies on hyperplane {0}")]
    OnHyperplane(usize),
    #[error("sketch not realizable")]
    NotRealizable,
    #[error("not a ballot word")]
    NotBallot,
    #[error("invalid sketch: {0}")]
    InvalidSketch(String),
    #[error("unsupported family: {0}")]
    Unsupported(String),
    #[error("sketch kind mismatch: {0}")]
    KindMismatch(String),
    #[error("universe not closed under moves: {0}")]
    UniverseNotClosed(String),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
