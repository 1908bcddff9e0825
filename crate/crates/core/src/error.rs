use alloc::string::String;

use crate::root_system::{Family, Root};

pub type Result<T, E = Error> = core::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("unknown root system type {0:?}; expected one of A, B, C, D, E, F, G")]
    UnknownFamily(String),

    #[error("type {family} does not exist in rank {rank}: {constraint}")]
    InvalidRank {
        family: Family,
        rank: usize,
        constraint: &'static str,
    },

    #[error("expected a coefficient vector of length {expected}, got length {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("simple root index {index} is out of range for rank {rank}")]
    IndexOutOfRange { index: usize, rank: usize },

    #[error("{0} is not a positive root")]
    NotPositiveRoot(Root),

    #[error("not an ideal: {root} lies in the set but {missing} does not")]
    NotAnIdeal { root: Root, missing: Root },

    #[error("not a subalgebra: {left} and {right} lie in the set but {sum} does not")]
    NotASubalgebra { left: Root, right: Root, sum: Root },

    #[error("{what} exceeds the capacity limit of {limit}")]
    Capacity { what: &'static str, limit: usize },

    #[error("internal invariant violated: {0}")]
    Structural(&'static str),
}
