use thiserror::Error;

/// Errors raised by the group engine and everything built on it.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GroupError {
    #[error("degree mismatch: {0} vs {1}")]
    DegreeMismatch(usize, usize),

    #[error("not a permutation: {0}")]
    NotAPermutation(String),

    #[error("{cap} exceeded: {value} > {limit}")]
    CapExceeded {
        cap: &'static str,
        value: u128,
        limit: u128,
    },

    #[error("group order overflows 128 bits")]
    Overflow,

    #[error("not a subgroup: {0}")]
    NotSubgroup(String),

    #[error("not a normal subgroup: {0}")]
    NotNormal(String),

    #[error("invalid homomorphism: {0}")]
    InvalidHom(String),

    #[error("precondition failed: {0}")]
    Precondition(String),

    #[error("self-verification failed: {0}")]
    SelfCheck(String),

    #[error("{0} is not prime")]
    NotPrime(u64),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("i/o error: {0}")]
    Io(String),
}

impl From<std::io::Error> for GroupError {
    fn from(e: std::io::Error) -> Self {
        GroupError::Io(e.to_string())
    }
}

pub type Result<T> = std::result::Result<T, GroupError>;

/// Size limits for operations that fall back to exhaustive enumeration.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    /// Largest group that may be enumerated element by element.
    pub enum_cap: u128,
    /// Largest group whose full subgroup lattice may be enumerated.
    pub subgroup_cap: u128,
    /// Largest index (and hence degree) for coset actions.
    pub index_cap: u128,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            enum_cap: 2_000_000,
            subgroup_cap: 10_000,
            index_cap: 10_000,
        }
    }
}

impl Limits {
    pub fn check_enum(&self, order: u128) -> Result<()> {
        check("enumeration cap", order, self.enum_cap)
    }

    pub fn check_subgroups(&self, order: u128) -> Result<()> {
        check("subgroup-enumeration cap", order, self.subgroup_cap)
    }

    pub fn check_index(&self, index: u128) -> Result<()> {
        check("coset-action index cap", index, self.index_cap)
    }
}

fn check(cap: &'static str, value: u128, limit: u128) -> Result<()> {
    if value > limit {
        Err(GroupError::CapExceeded { cap, value, limit })
    } else {
        Ok(())
    }
}
