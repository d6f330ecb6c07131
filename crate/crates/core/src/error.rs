use thiserror::Error;

use crate::factorization::Side;

/// Errors raised while building or searching algebraic structures.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("table is empty")]
    EmptyTable,
    #[error("table is not square: row {row} has {len} entries, expected {expected}")]
    NotSquare { row: usize, len: usize, expected: usize },
    #[error("order {0} exceeds the table cap of {cap}", cap = crate::group::MAX_ORDER)]
    TooLarge(usize),
    #[error("entry {value} at ({row}, {col}) is out of range")]
    EntryOutOfRange { row: usize, col: usize, value: usize },
    #[error("row {0} is not a permutation of the carrier")]
    NotBijectiveRow(usize),
    #[error("column {0} is not a permutation of the carrier")]
    NotBijectiveColumn(usize),
    #[error("table has no two-sided identity")]
    NoIdentity,
    #[error("not associative: ({0}*{1})*{2} != {0}*({1}*{2})")]
    NotAssociative(usize, usize, usize),

    #[error("action of {0} is not an automorphism")]
    ActionNotAutomorphism(usize),
    #[error("action is not a homomorphism at ({0}, {1})")]
    ActionNotHomomorphism(usize, usize),
    #[error("action has {got} entries, expected {expected}")]
    ActionSize { got: usize, expected: usize },

    #[error("search exceeded its budget of {0} nodes")]
    SearchLimitExceeded(u64),

    #[error("carrier sizes differ: {0} vs {1}")]
    SizeMismatch(usize, usize),
    #[error("the two operations have different identities ({0} vs {1})")]
    IdentityMismatch(usize, usize),
    #[error("structure is not a skew brace in the required orientation")]
    NotABrace,
    #[error("structure is not a bi-skew brace")]
    NotBiskew,
    #[error("additive group is not abelian")]
    AdditiveNotAbelian,
    #[error("braces do not share the same additive table")]
    AdditiveMismatch,

    #[error("{0} is not a supported prime")]
    BadPrime(u32),
    #[error("structure constant out of range: {0}")]
    ConstantOutOfRange(String),
    #[error("multiplication not associative on basis triple ({0}, {1}, {2})")]
    AlgebraNotAssociative(usize, usize, usize),
    #[error("algebra is not nilpotent (power chain stabilizes at dimension {0})")]
    NotNilpotent(usize),
    #[error("element {0} has no quasi-inverse")]
    QuasiInverseMissing(usize),
    #[error("unknown catalog name `{0}`")]
    UnknownName(String),
    #[error("unsupported parameter: {0}")]
    UnsupportedParameter(String),

    #[error("{0:?} subset is not a subgroup")]
    NotSubgroup(Side),
    #[error("subgroups intersect nontrivially")]
    IntersectionNontrivial,
    #[error("subgroup orders {left} * {right} != {order}")]
    OrderMismatch { left: usize, right: usize, order: usize },

    #[error("order {order} exceeds the enumeration cap {cap}")]
    CapExceeded { order: usize, cap: usize },

    #[error("invalid permutation: {0}")]
    BadPermutation(String),
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("{0}")]
    Io(String),
}

pub type Result<T> = std::result::Result<T, Error>;
