//! Explicit finite separating sets of invariants for finite-dimensional
//! representations of the additive group over the rationals.
//!
//! The crate is layered bottom-up:
//!
//! * [`poly`]: exact sparse multivariate polynomials over `Q`, derivations,
//!   text and JSON forms.
//! * [`rep`]: the representation `V_(n) = V_{n_1} + ... + V_{n_k}`, its
//!   canonical summand order and the half-projection substitution.
//! * [`factory`]: the invariants `f_{i,j}`, local slices `s_{i,j}`,
//!   `eps_s(f)`, Roberts' inverse, transvectants, `w_{j1,j2}`, `z_j` and the
//!   assembled separating set.
//! * [`orbit`]: rational points, the group action on points, slice
//!   normalization and the invariant-equivalence oracle.
//! * [`verify`]: batch checks producing a deterministic JSON report.

pub mod arith;
pub mod error;
pub mod exec;
pub mod factory;
pub mod orbit;
pub mod poly;
pub mod rep;
pub mod verify;

pub use error::{Error, Result};
pub use exec::Execution;
pub use factory::{build_separating_set, DedupMode, Family, Indices, SeparatingSet, TaggedInvariant};
pub use orbit::{Point, Stratum};
pub use poly::{Derivation, Monomial, Polynomial, Rational, VarId};
pub use rep::{ProjectionMap, RepSpec};
