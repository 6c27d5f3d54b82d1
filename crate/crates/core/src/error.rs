use thiserror::Error;

/// Errors raised by the tangle engine.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("0/0 is not a value")]
    UndefinedFraction,
    #[error("inf + inf is undefined")]
    InfinitePlusInfinite,
    #[error("arithmetic overflow")]
    Overflow,
    #[error("{a} is not invertible modulo {modulus}")]
    NotInvertible { a: i64, modulus: i64 },
    #[error("modulus must be positive, got {0}")]
    BadModulus(i64),
    #[error("b({p},{q}) is not a Schubert pair: {reason}")]
    InvalidSchubertPair { p: i64, q: i64, reason: &'static str },
    #[error("tangle T({0}) is not integral")]
    NotIntegral(String),
    #[error("composite knot factor {0} is trivial or degenerate")]
    TrivialFactor(String),
    #[error("composite knot needs at least two factors, got {0}")]
    TooFewFactors(usize),
    #[error("Montesinos tangle needs at least two non-integral summands")]
    DegenerateMontesinos,
    #[error("invalid equation system: {0}")]
    InvalidSystem(String),
    #[error("chirality observation refers to round {round}, but the system has {rounds} products")]
    ObservationOutOfRange { round: usize, rounds: usize },
    #[error("no handedness convention for {0}")]
    NoHandedness(String),
    #[error("diagram has {crossings} crossings, cap is {cap}")]
    CrossingCapExceeded { crossings: usize, cap: usize },
    #[error("diagram is disconnected")]
    DisconnectedDiagram,
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
