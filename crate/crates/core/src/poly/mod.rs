//! Exact sparse multivariate polynomials over `Q`.
//!
//! Variables are the coordinate functions `x[i,j]` of a representation plus
//! two auxiliary variables `y0`, `y1` used for transvectants. Polynomials are
//! immutable values in canonical form: a map from monomials to nonzero
//! rational coefficients, ordered graded-lexicographically.

mod derivation;
mod eval;
mod json;
mod monomial;
mod polynomial;
mod text;
mod var;

pub use derivation::Derivation;
pub use eval::{PreparedPolynomial, ScaledPoint};
pub use json::{FactorJson, PolynomialJson, TermJson};
pub use monomial::Monomial;
pub use polynomial::{Assignment, Polynomial};
pub use text::parse_rational;
pub use var::VarId;

pub type Rational = num_rational::BigRational;
