use crate::group::AxiomViolation;

pub type Result<T, E = Error> = core::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("argument must be a positive integer")]
    Zero,

    #[error("arithmetic overflow while computing {0}")]
    Overflow(&'static str),

    #[error("group of order {order} exceeds the size cap of {limit}")]
    OrderCap { order: usize, limit: usize },

    /// Automorphism enumeration refused or aborted.
    #[error("automorphism group has more than {limit} elements (at least {at_least})")]
    AutCap { at_least: u64, limit: usize },

    #[error(
        "elementary abelian group Z{p}^{rank} has {count} automorphisms, over the cap of {limit}"
    )]
    ElementaryAbelianCap {
        p: usize,
        rank: u32,
        count: u64,
        limit: usize,
    },

    #[error("element index {index} out of range for group of order {order}")]
    IndexOutOfRange { index: usize, order: usize },

    #[error("subset is not a subgroup: {0}")]
    NotSubgroup(&'static str),

    #[error("subgroup belongs to a group of order {found}, expected {expected}")]
    ParentMismatch { expected: usize, found: usize },

    #[error("subgroup is not normal")]
    NotNormal,

    #[error("group is not abelian")]
    NotAbelian,

    #[error("map is not a homomorphism: image of {a}*{b} disagrees")]
    NotHomomorphism { a: usize, b: usize },

    #[error("map is not a bijection")]
    NotBijective,

    #[error("image array has length {found}, expected {expected}")]
    LengthMismatch { expected: usize, found: usize },

    #[error("invalid action: {0}")]
    InvalidAction(&'static str),

    #[error("r -> r^{power} is not an automorphism of Z{modulus}")]
    NotUnit { power: u64, modulus: u64 },

    #[error(
        "r -> r^{power} has order {order} in Aut(Z{modulus}), which does not divide {h_order}"
    )]
    ActionOrder {
        power: u64,
        modulus: u64,
        order: u64,
        h_order: usize,
    },

    #[error("invalid Cayley table: {0}")]
    Axiom(#[from] AxiomViolation),
}

impl Error {
    /// Whether the error comes from a configured size limit rather than bad input.
    pub fn is_cap(&self) -> bool {
        matches!(
            self,
            Error::OrderCap { .. } | Error::AutCap { .. } | Error::ElementaryAbelianCap { .. }
        )
    }
}
