use thiserror::Error;

/// Errors shared by every module of the crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("not a Latin square: {0}")]
    NotLatinSquare(String),
    #[error("index 0 is not an identity element: {0}")]
    NoIdentity(String),
    #[error("not associative at ({0}, {1}, {2})")]
    NotAssociative(usize, usize, usize),
    #[error("element {0} has no two-sided inverse")]
    MissingInverse(usize),
    #[error("order {order} exceeds the enumeration cap {cap}")]
    OrderCapExceeded { order: usize, cap: usize },
    #[error("degree mismatch: {0} vs {1}")]
    DegreeMismatch(usize, usize),
    #[error("order mismatch: {0} vs {1}")]
    OrderMismatch(usize, usize),
    #[error("the two tables have different identity elements")]
    IdentityMismatch,
    #[error("brace axiom fails at (g, h, k) = ({0}, {1}, {2})")]
    BraceAxiomFailure(usize, usize, usize),
    #[error("not a subgroup of the additive group: {0}")]
    NotAStarSubgroup(String),
    #[error("subset is empty")]
    EmptySubset,
    #[error("element index {index} out of range for order {order}")]
    IndexOutOfRange { index: usize, order: usize },
    #[error("not contained in the holomorph: {0}")]
    NotInHolomorph(String),
    #[error("permutation group is not regular: {0}")]
    NotRegular(String),
    #[error("subgroups are not complementary: {0}")]
    NotComplementary(String),
    #[error("homomorphism pair has a nonidentity coincidence at {0}")]
    NotFixedPointFree(usize),
    #[error("not a homomorphism: {0}")]
    NotHomomorphism(String),
    #[error("not an isomorphism: {0}")]
    NotAnIsomorphism(String),
    #[error("algebra is not nilpotent")]
    NotNilpotent,
    #[error("{0} is not prime")]
    NotPrime(usize),
    #[error("not a subgroup: {0}")]
    NotASubgroup(String),
    #[error("unknown fixture `{0}`")]
    UnknownFixture(String),
    #[error("bad fixture parameters: {0}")]
    BadParams(String),
    #[error("malformed input: {0}")]
    MalformedInput(String),
}

pub type Result<T> = std::result::Result<T, Error>;
