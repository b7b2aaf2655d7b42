//! Permutations and the stabilizer-chain engine behind order, membership and
//! element enumeration.

mod bsgs;
mod group;
mod permutation;

pub use bsgs::Bsgs;
pub use group::{Caps, PermGroup, DEFAULT_MAX_DEGREE, DEFAULT_MAX_ORDER};
pub use permutation::{Permutation, Point, MAX_DEGREE};
