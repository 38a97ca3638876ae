pub mod cli;
pub mod construct;
pub mod error;
pub mod hall;
pub mod perm;
pub mod pronormal;
pub mod subgroups;
