use thiserror::Error;

use crate::semigroup::LawViolation;

/// Errors produced by constructors and guarded computations.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("guard `{guard}` exceeded: {actual} > {limit}")]
    GuardExceeded {
        guard: &'static str,
        limit: usize,
        actual: usize,
    },
    #[error("invalid semigroup table: {0}")]
    InvalidTable(#[from] LawViolation),
    #[error("unknown element index {index} (size {size})")]
    UnknownElement { index: usize, size: usize },
    #[error("semigroup is not nilpotent-free: element {element} is nilpotent")]
    NotNilpotentFree { element: usize },
    #[error("map is not an Armendariz map: {0}")]
    NotArmendariz(String),
    #[error("space is not pearled: closed set {closed_set} contains no closed point")]
    NotPearled { closed_set: String },
    #[error("lattice is not T1: singleton {{{point}}} missing")]
    NotT1 { point: String },
    #[error("ring axiom `{axiom}` fails at {witness}")]
    RingAxiom { axiom: &'static str, witness: String },
    #[error("quotient is infinite or exceeds the monomial bound {bound}")]
    InfiniteQuotient { bound: usize },
    #[error("base ring mismatch")]
    RingMismatch,
    #[error("parse error: {0}")]
    Parse(String),
    #[error("invalid input: {0}")]
    Invalid(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
