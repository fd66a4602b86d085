use thiserror::Error;

/// Errors shared by all modules of the crate.
#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid multiplication table: {0}")]
    InvalidTable(String),

    #[error("not a permutation: {0}")]
    NotAPermutation(String),

    #[error("size limit exceeded: {0}")]
    SizeLimitExceeded(String),

    #[error("element index {index} out of range for group of order {order}")]
    IndexOutOfRange { index: usize, order: usize },

    #[error("subgroup is not normal")]
    NotNormal,

    #[error("coefficient group is not abelian")]
    NotAbelian,

    #[error("not a left action by automorphisms: {0}")]
    NotAnAction(String),

    #[error("action is not well defined on the quotient: {0}")]
    IllDefinedAction(String),

    #[error("map is not equivariant: {0}")]
    NotEquivariant(String),

    #[error("not a homomorphism: {0}")]
    NotAHomomorphism(String),

    #[error("sequence is not exact: {0}")]
    NotExact(String),

    #[error("image of iota is not normal in B")]
    NotNormalInB,

    #[error("sequence is not central: iota(A) is not contained in Z(B)")]
    NotCentral,

    #[error("pair of maps is not cocompatible: {0}")]
    NotCocompatible(String),

    #[error("derivations live over different modules")]
    ModuleMismatch,

    #[error("not a derivation: {0}")]
    NotADerivation(String),

    #[error("not a complement: {0}")]
    NotAComplement(String),

    #[error("connecting map left the coefficient subgroup: {0}")]
    ValueNotInA(String),

    #[error("produced 2-cochain is not a factor set: {0}")]
    NotCocycle(String),

    #[error("invalid definition file: {0}")]
    InvalidDefinition(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error("malformed JSON: {0}")]
    Json(#[from] serde_json::Error),
}
