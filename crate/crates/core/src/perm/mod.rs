//! Permutations, stabilizer chains and permutation groups.

mod chain;
mod enumerated;
mod genfile;
mod group;
mod hom;
mod permutation;

pub use chain::{Level, StabilizerChain};
pub(crate) use enumerated::is_power_of;
pub use enumerated::{Elem, Enumerated, Sub};
pub use genfile::{parse_generator_file, write_generator_file};
pub use group::{DirectFactorStructure, PermGroup};
pub use hom::{coset_action, GroupHom};
pub(crate) use permutation::gcd;
pub use permutation::Permutation;
