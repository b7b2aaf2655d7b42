//! Finite permutation groups, their subgroup lattices, and a checker for the
//! structure of groups whose 2-maximal subgroups are all Hall subgroups.

pub mod arith;
pub mod constructors;
pub mod error;
pub mod exec;
pub mod lattice;
pub mod permcore;
pub mod structure;
pub mod verifier;

pub use error::{GroupError, Result};
pub use exec::Exec;
pub use lattice::{enumerate_subgroups, Lattice, SubgroupId};
pub use permcore::{Caps, PermGroup, Permutation};
