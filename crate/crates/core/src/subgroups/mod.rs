//! Subgroup lattices, normalizers, Sylow subgroups and conjugacy search.

mod blocks;
mod lattice;
mod search;

pub use blocks::BlockSystem;
pub use lattice::{
    element_classes, maximal_classes, normal_subgroups, pi_subgroup_classes, subgroup_classes, sylow_in, SubgroupClass,
};
pub use search::{
    all_subgroups, conjugate_into, is_conjugate, is_conjugate_blockwise, is_conjugate_by_transversal, is_normal,
    least_conjugate_into, least_conjugator, normalizer, sylow, BlockwiseOutcome, ConjugacyWitness, SubgroupHandle,
};
