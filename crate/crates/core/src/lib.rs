//! Finite permutation groups, minimal generating sets, and decision
//! procedures for the independence and rank-independence properties.

pub mod bitset;
pub mod characteristic;
pub mod cli;
pub mod conjugacy;
pub mod constructors;
pub mod error;
pub mod genset;
pub mod graphs;
pub mod group;
pub mod lattice;
pub mod perm;
pub mod quotient;
pub mod report;
pub mod simpleverify;
pub mod structure;
pub mod subgroup;

pub use bitset::BitSet;
pub use constructors::{build, build_str, GroupSpec};
pub use error::{Error, Result};
pub use group::{Caps, Group};
pub use perm::Permutation;
pub use subgroup::Subgroup;
