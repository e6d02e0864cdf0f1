//! Exact rational arithmetic, sparse multivariate polynomials, the polynomial
//! text parser and weighted-degree bookkeeping.

mod parse;
mod poly;
mod weights;

pub use parse::{parse_polynomial, ParseError};
pub use poly::{jacobian_generators, ExponentVector, Polynomial};
pub use weights::{infer_weights, is_weighted_homogeneous, weighted_degree, WeightVector};

use thiserror::Error;

/// Exact rational scalar over arbitrary-precision integers, always in lowest
/// terms with a positive denominator.
pub type Rational = num_rational::BigRational;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PolyError {
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error("length mismatch: expected {expected} entries, found {found}")]
    LengthMismatch { expected: usize, found: usize },
    #[error("weight {index} = {value} is not in the open interval (0, 1)")]
    WeightOutOfRange { index: usize, value: String },
    #[error("weights are underdetermined by the monomials of f (rank {rank} < {vars}); pass them explicitly")]
    Underdetermined { rank: usize, vars: usize },
    #[error("no weight vector makes every monomial of f have weighted degree 1")]
    Inconsistent,
    #[error("the unique weight solution ({weights}) leaves the open unit cube")]
    OutOfRange { weights: String },
    #[error("cannot infer weights of the zero polynomial")]
    ZeroPolynomial,
}
