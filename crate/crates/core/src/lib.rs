//! Exact-arithmetic library for Appell polynomial sequences.
//!
//! The crate computes Bernoulli and Euler polynomials (classical and of
//! higher order) over arbitrary-precision rationals, characterizes when an
//! Appell sequence satisfies the reflection symmetry
//! P_n(a - x) = (-1)^n P_n(x) at the level of truncated generating
//! series, reconstructs such sequences as linear combinations of scaled
//! Bernoulli or Euler polynomials, and evaluates the associated Fourier
//! expansions numerically against exact references.
//!
//! Module layout:
//!
//! - [`rational`], [`polynomial`], [`series`]: the exact ring types.
//! - [`oracle`]: expansions straight from generating functions; the
//!   ground truth everything else is tested against.
//! - [`classical`]: memoized Bernoulli/Euler values and Stirling numbers.
//! - [`symmetry`]: symmetry predicates, characterizations, V_n(a) bases,
//!   and the parity-decomposition reconstruction formulas.
//! - [`higher`]: closed forms for order-r families plus the formula
//!   validation reports.
//! - [`fourier`]: compensated partial sums with exact references.
//!
//! All values are immutable and all operations are pure; the only interior
//! state is the read-mostly memo tables in [`classical`], which are safe
//! to share across threads.

pub mod classical;
pub mod combinat;
pub mod error;
pub mod fourier;
pub mod higher;
pub mod oracle;
pub mod polynomial;
pub mod rational;
pub mod series;
pub mod symmetry;

pub use error::{Error, Result};
pub use fourier::{FourierEvaluation, FourierTarget, SumVariant};
pub use higher::{FormulaId, Mismatch, ValidationReport};
pub use oracle::{AppellExpansion, Family};
pub use polynomial::Polynomial;
pub use rational::Rational;
pub use series::TruncatedSeries;
pub use symmetry::{FirstFailure, Parity, SymmetryDecomposition, SymmetryReport};
