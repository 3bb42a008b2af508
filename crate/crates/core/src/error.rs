use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("degree mismatch: {0} vs {1}")]
    DegreeMismatch(usize, usize),

    #[error("not a permutation: {0}")]
    NotAPermutation(String),

    #[error("parse error on line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("element is not a member of the ambient group: {0}")]
    NotAMember(String),

    #[error("enumeration cap exceeded: {what} needs {needed} but cap is {cap}")]
    CapExceeded {
        what: &'static str,
        needed: u128,
        cap: u128,
    },

    #[error("group is not transitive")]
    Intransitive,

    #[error("{p} does not divide the group order {order}")]
    PrimeDoesNotDivide { p: u64, order: u128 },

    #[error("{0} is not prime")]
    NotPrime(u64),

    #[error("subgroup is not normal")]
    NotNormal,

    #[error("action is not order preserving on element {0}")]
    NotOrderPreserving(usize),

    #[error("fixed faces do not form a subcomplex")]
    FixedSetNotSubcomplex,

    #[error("acting group is not a {0}-group")]
    NotPGroup(u64),

    #[error("invalid parameters: {0}")]
    InvalidParameters(String),

    #[error("unknown name: {0}")]
    UnknownName(String),
}

pub type Result<T> = std::result::Result<T, Error>;
