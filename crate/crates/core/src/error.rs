use thiserror::Error;

use crate::rational::Rational;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("zero denominator")]
    ZeroDenominator,

    #[error("parse error: {0}")]
    Parse(String),

    /// A closed form or generator was called outside the hypothesis it is
    /// valid under. `requires` is the stated hypothesis.
    #[error("{what}: argument {value} outside domain (requires {requires})")]
    Domain {
        what: &'static str,
        value: Rational,
        requires: &'static str,
    },

    #[error("invalid problem: {0}")]
    InvalidSpec(String),

    #[error("unsupported: {0}")]
    Unsupported(String),

    #[error("{reason} at event {index}")]
    IllegalEvent {
        index: usize,
        reason: Box<Violation>,
    },

    #[error("itinerary does not meet the {0} success condition")]
    NotSuccessful(&'static str),

    #[error("state budget of {0} states exceeded")]
    BudgetExceeded(usize),

    #[error("invalid grid: {0}")]
    InvalidGrid(String),
}

/// Why a single event was rejected by the rules engine.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Violation {
    #[error("out of fuel: stomach {stomach} cannot cover a move of {distance}")]
    OutOfFuel {
        stomach: Rational,
        distance: Rational,
    },
    #[error("stomach full")]
    StomachFull,
    #[error("no banana to eat")]
    NothingToEat,
    #[error("pickup of {requested} but only {available} cached here")]
    NotEnoughCached { requested: u32, available: u32 },
    #[error("pickup of {requested} exceeds back capacity {capacity}")]
    OverCapacity { requested: u32, capacity: u32 },
    #[error("drop of {requested} but only {carried} carried")]
    NotEnoughCarried { requested: u32, carried: u32 },
    #[error("move to negative position {0}")]
    NegativePosition(Rational),
    #[error("zero-length move")]
    ZeroMove,
    #[error("zero banana count")]
    ZeroCount,
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
