//! Construction of the invariants making up the separating set.

mod roberts;
mod set;
mod slices;

pub use roberts::{
    roberts_inverse, semitransvectant, transvectant, w_closed_form, w_invariant, z_invariant, IsobaricInvariant,
};
pub use set::{
    build_separating_set, rep_json, DedupMode, DropReason, Dropped, Family, Indices, SeparatingSet, TaggedInvariant,
};
pub use slices::{delta, epsilon, f_inv, is_isobaric, s_slice, weight};
