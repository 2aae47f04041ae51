use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("malformed cycle notation: {0}")]
    Malformed(String),
    #[error("element {0} occurs more than once")]
    DuplicateElement(usize),
    #[error("element {element} is outside 1..={n}")]
    OutOfRange { element: usize, n: usize },
    #[error("image sequence is not a bijection of 1..={0}")]
    NotBijection(usize),
    #[error("permutation sizes differ ({0} vs {1})")]
    SizeMismatch(usize, usize),
    #[error("the pair of permutations does not generate a transitive group")]
    NotTransitive,
    #[error("{0} is not a fixed point")]
    NotFixedPoint(usize),
    #[error("{0} is not a dual fixed point")]
    NotDualFixedPoint(usize),
    #[error("permutation is not a partition")]
    NotPartition,
    #[error("partition is not reduced")]
    NotReduced,
    #[error("({0},{1}) is not a pair of parallel edges")]
    InvalidParallelPair(usize, usize),
    #[error("size {n} exceeds the configured limit {limit}")]
    LimitExceeded { n: usize, limit: usize },
    #[error(
        "genus {genus} exceeds the supported limit {limit}; pass the override to search anyway"
    )]
    GenusLimit { genus: u32, limit: u32 },
    #[error("partitions in one orbit computation have different sizes")]
    MixedSizes,
    #[error("inconsistent catalogue entry: {0}")]
    InconsistentEntry(String),
    #[error("division by zero")]
    DivisionByZero,
    #[error("expression cannot be expanded as a power series: {0}")]
    NotExpandable(String),
    #[error("extracted coefficient is not a nonnegative integer: {0}")]
    NonIntegral(String),
    #[error("internal invariant violated: {0}")]
    Internal(String),
    #[error("invalid configuration: {0}")]
    InvalidConfig(String),
    #[error("catalogue line {line}: {msg}")]
    Catalogue { line: usize, msg: String },
}

pub type Result<T> = std::result::Result<T, Error>;
