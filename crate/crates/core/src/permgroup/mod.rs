//! Permutation groups: composition, stabilizer chains, orbits and blocks,
//! conjugacy classes, centralizers, normalizers and Sylow subgroups.

pub mod blocks;
pub(crate) mod chain;
pub mod classes;
pub mod group;
pub mod io;
pub mod perm;

pub use blocks::{is_primitive, is_transitive, minimal_blocks, orbits};
pub use classes::{centralizer, class_of, conjugacy_classes, normalizer, sylow_subgroup, ConjugacyClass};
pub use group::{build_group, subgroup_generated, GeneratedGroup, DEFAULT_ELEMENT_CAP};
pub use perm::{compose, conjugate, cycle_type, Permutation};
