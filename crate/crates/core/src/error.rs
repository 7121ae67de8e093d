//! Error type shared by all modules.

use crate::rational::Rational;
use crate::symmetry::Parity;

#[derive(Debug, Clone, thiserror::Error)]
pub enum Error {
    #[error("cannot invert {context}: constant term is zero")]
    NonUnitSeries { context: String },

    #[error("series exponential requires zero constant term, got {constant}")]
    ExpNonzeroConstant { constant: Rational },

    #[error("expansion order {available} too small: at least {required} required")]
    OrderTooSmall { required: usize, available: usize },

    #[error("normalization weight at index {index} is zero")]
    ZeroPhi { index: usize },

    #[error("need {required} normalization weights, got {available}")]
    PhiTooShort { required: usize, available: usize },

    #[error("stirling index k={k} out of range 0..={n}")]
    StirlingRange { n: usize, k: usize },

    #[error("parameter a must be nonzero for {op}")]
    ZeroParameter { op: &'static str },

    #[error("g must vanish at t=0, got constant term {constant}")]
    GNonzeroAtOrigin { constant: Rational },

    #[error("decomposition has parity {found:?}, but {expected:?} is required")]
    ParityMismatch { expected: Parity, found: Parity },

    #[error(
        "supplied coefficients leave remainder not {parity:?}: coefficient of t^{index} is {value}"
    )]
    RemainderParityViolation {
        parity: Parity,
        index: usize,
        value: Rational,
    },

    #[error("{formula} requires n >= r >= 2, got n={n}, r={r}")]
    FormulaRange {
        formula: &'static str,
        n: usize,
        r: u32,
    },

    #[error("formula '{formula}' does not apply to {family} with order r={r}")]
    InapplicableFormula {
        formula: String,
        family: &'static str,
        r: u32,
    },

    #[error("x={x} outside valid range {range} for {what}")]
    OutOfDomain {
        x: Rational,
        range: String,
        what: &'static str,
    },

    #[error("invalid rational literal '{input}' (expected p/q or integer)")]
    InvalidRational { input: String },
}

pub type Result<T> = std::result::Result<T, Error>;
