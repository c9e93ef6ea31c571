//! Points of `V_(n)`, the group action on them, slice normalization and the
//! invariant-equivalence oracle.
//!
//! The action on points is `x[i,j](a.v) = sum_{m<=i} a^m/m! x[i-m,j](v)`, so
//! `f(a.v) = sum_q a^q/q! (D^q f)(v)` for every polynomial `f`.

mod action;
mod oracle;
mod point;
mod sample;

pub use action::{act, same_orbit, slice_normalize, Slice};
pub use oracle::{invariant_equivalent, Branch, Decision, Oracle};
pub use point::Point;
pub use sample::{sample_point, sample_special, seeded_rng, Bounds, Stratum};
