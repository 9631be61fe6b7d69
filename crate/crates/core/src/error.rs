use alloc::string::String;
use alloc::vec::Vec;

use crate::algebra::Rat;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("NonRationalCenter: {0}")]
    NonRationalCenter(String),
    #[error("NonRationalInfinity: {0}")]
    NonRationalInfinity(String),
    #[error("NotAGerm: no factor vanishes at the base point")]
    NotAGerm,
    #[error("BudgetExceeded: limit {0}")]
    BudgetExceeded(u64),
    #[error("MissingEulerData: {0}")]
    MissingEulerData(String),
    #[error("ZeroLinForm: a contributing component has nu = N = 0")]
    ZeroLinForm,
    #[error("non-expandable at origin")]
    NonExpandable,
    #[error("SharedRatio: neighbour E{0} has the same nu/N")]
    SharedRatio(usize),
    #[error("BadPrime: p = {p}: {}", reasons.join("; "))]
    BadPrime { p: u64, reasons: Vec<String> },
    #[error("NotIsolated: {0}")]
    NotIsolated(String),
    #[error("not prime: {0}")]
    NotPrime(u64),
    #[error("invalid input: {0}")]
    Invalid(String),
    #[error("no component E{0}")]
    NoSuchComponent(usize),
    #[error("pole {0} is not simple")]
    NotSimple(Rat),
}

pub type Result<T> = core::result::Result<T, Error>;
