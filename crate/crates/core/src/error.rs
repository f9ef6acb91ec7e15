use thiserror::Error;

/// Errors raised by the group, lattice and verification layers.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("modulus {0} is invalid; every cyclic factor needs modulus >= 2")]
    InvalidModulus(u64),
    #[error("group of order {order} exceeds the size cap {cap}")]
    GroupTooLarge { order: u128, cap: usize },
    #[error("element {coords:?} does not belong to group with moduli {moduli:?}")]
    ElementMismatch { coords: Vec<u64>, moduli: Vec<u32> },
    #[error("operands live in different groups")]
    SpecMismatch,
    #[error("generator sequence contains {0:?} twice")]
    DuplicateGenerator(Vec<u32>),
    #[error("the trivial group has no non-zero elements")]
    TrivialGroup,
    #[error("set is empty")]
    EmptySet,
    #[error("set is not a subgroup")]
    NotSubgroup,
    #[error("hypothesis violated: {0}")]
    Hypothesis(String),
    #[error("generators are not independent")]
    Dependent,
    #[error("generators do not generate the group")]
    NotGenerating,
    #[error("progression length {len} exceeds the order {order} of its difference")]
    ProgressionTooLong { len: u64, order: u64 },
    #[error("index {index} out of range for {len} generators")]
    IndexOutOfRange { index: usize, len: usize },
    #[error("set is not compressed along generator {0}")]
    NotCompressed(usize),
    #[error("set is not a downset")]
    NotDownset,
    #[error("lattice point {0:?} has the wrong dimension")]
    DimensionMismatch(Vec<u32>),
    #[error("gamma {0} lies outside (0, 1]")]
    GammaOutOfRange(String),
    #[error("candidate pool of size {size} exceeds the search cap {cap}")]
    SearchCapExceeded { size: usize, cap: usize },
    #[error("box with {points} lattice points exceeds the budget {budget}")]
    BoxTooLarge { points: u128, budget: usize },
    #[error("exhaustive mode over a group of order {order} exceeds the limit {limit}")]
    ExhaustiveTooLarge { order: usize, limit: usize },
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
