use crate::group::Elem;

/// Errors raised anywhere in the library.
#[derive(thiserror::Error, Debug, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("empty multiplication table")]
    EmptyTable,
    #[error("table row {row} has {len} entries, expected {n}")]
    NotSquare { row: usize, len: usize, n: usize },
    #[error("table entry {value} at ({row}, {col}) is out of range for order {n}")]
    EntryOutOfRange { row: usize, col: usize, value: usize, n: usize },
    #[error("not associative: ({a}*{b})*{c} != {a}*({b}*{c})")]
    NotAssociative { a: Elem, b: Elem, c: Elem },
    #[error("table has no two-sided identity")]
    NoIdentity,
    #[error("element {0} has no two-sided inverse")]
    NoInverse(Elem),
    #[error("group order exceeds the configured cap of {cap}")]
    OrderCapExceeded { cap: usize },
    #[error("generator {index} is not a permutation of {degree} points")]
    BadPermutation { index: usize, degree: usize },
    #[error("element {elem} is out of range for a group of order {order}")]
    BadElement { elem: Elem, order: usize },
    #[error("subgroups live in different parent groups")]
    ParentMismatch,
    #[error("element set is not a subgroup: {0}")]
    NotASubgroup(String),
    #[error("subgroup is not normal: conjugating {elem} by {by} leaves it")]
    NotNormal { elem: Elem, by: Elem },
    #[error("map is not a homomorphism at ({a}, {b})")]
    NotAHomomorphism { a: Elem, b: Elem },
    #[error("image of generator {gen} is not an automorphism: {reason}")]
    NotAutomorphism { gen: Elem, reason: String },
    #[error("the given generators do not generate the acting group ({reached} of {order} elements reached)")]
    DoesNotGenerate { reached: usize, order: usize },
    #[error("acting subgroup does not normalize the target: {j} moves {n} outside")]
    NotNormalized { j: Elem, n: Elem },
    #[error("group is not nilpotent")]
    NotNilpotent,
    #[error("target group is not abelian")]
    NotAbelian,
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("search budget of {budget} exceeded: {what}")]
    BudgetExceeded { what: String, budget: u64 },
    #[error("cocycles live on different actions or domains")]
    DomainMismatch,
    #[error("subgroup is not a complement: {0}")]
    NotAComplement(String),
    #[error("no preimage found when extending a Sylow class: {0}")]
    NoPreimageFound(String),
    #[error("hypothesis not met: {0}")]
    HypothesisNotMet(String),
    #[error("no conjugator found: {0}")]
    NoConjugatorFound(String),
    #[error("G-set is invalid: {0}")]
    InvalidGSet(String),
    #[error("invariant violated: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
