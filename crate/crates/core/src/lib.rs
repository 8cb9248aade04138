//! Exact toric polar linear systems of plane forms, birationality by fiber
//! counting, classification of toric polar Cremona transformations, and the
//! toric patches with linear precision that they correspond to.
//!
//! All algebra is exact over the rationals. Floating point is confined to
//! [`patches::numeric_reparameterization`] and CSV output.

pub mod birational;
pub mod cli;
pub mod curves;
pub mod families;
pub mod germs;
pub mod patches;
pub mod poly;
pub mod toric;

pub use poly::{Monomial, MonomialMatrix, Poly, Rational};

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("arity mismatch: {0} vs {1}")]
    ArityMismatch(usize, usize),
    #[error("no operands")]
    EmptyOperands,
    #[error(transparent)]
    Parse(#[from] poly::ParseError),
    #[error("not divisible")]
    NotDivisible,
    #[error("zero polynomial")]
    ZeroInput,
    #[error("not a form: terms have different degrees")]
    NotHomogeneous,
    #[error("input is not an ordinary polynomial")]
    LaurentInput,
    #[error("degenerate input: {0}")]
    Degenerate(String),
    #[error("source point lies in the base locus")]
    InvalidSource,
    #[error("invalid family parameters: {0}")]
    InvalidSpec(String),
    #[error("invalid monomial transform: {0}")]
    InvalidTransform(String),
    #[error("not a binomial: {0}")]
    NotBinomial(String),
    #[error("invalid factor list: {0}")]
    InvalidFactors(String),
    #[error("points are collinear or too few")]
    CollinearPoints,
    #[error("denominator vanishes at the evaluation point")]
    DenominatorZero,
    #[error("Newton iteration did not converge; last residual {0:e}")]
    NonConvergence(f64),
    #[error("reduction exceeded {0} steps")]
    MaxStepsExceeded(usize),
    #[error("components share a common factor")]
    CommonFactor,
    #[error("invalid curve: {0}")]
    InvalidCurve(String),
}
