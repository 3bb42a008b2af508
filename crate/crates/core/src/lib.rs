//! Invariable generation of finite groups and homology of coset posets.
//!
//! The guide in `book/` walks through each module; its code blocks are
//! compiled as doc-tests below.

pub mod acceptance;
pub mod atlasdata;
pub mod corpus;
pub mod data;
pub mod error;
pub mod homology;
pub mod invgen;
pub mod lattice;
pub mod lietype;
pub mod permgroup;
pub mod report;
pub mod smiththeory;

pub use error::{Error, Result};

#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    pub struct Introduction;
    #[doc = include_str!("../../../book/src/permgroup.md")]
    pub struct Permgroup;
    #[doc = include_str!("../../../book/src/invgen.md")]
    pub struct Invgen;
    #[doc = include_str!("../../../book/src/lattice.md")]
    pub struct Lattice;
    #[doc = include_str!("../../../book/src/homology.md")]
    pub struct Homology;
    #[doc = include_str!("../../../book/src/fixed_points.md")]
    pub struct FixedPoints;
    #[doc = include_str!("../../../book/src/lietype.md")]
    pub struct Lietype;
    #[doc = include_str!("../../../book/src/sporadic.md")]
    pub struct Sporadic;
    #[doc = include_str!("../../../book/src/cli.md")]
    pub struct Cli;
}
