//! Prime sets, Hall subgroups and Sylow towers.

mod classes;
mod primes;
mod tower;

pub use classes::{
    analyze_hall, classify, find_hall_subgroup, hall_from_sylows, hall_subgroups, is_pi_separable, pi_separable_series,
    ClassVerdict, HallAnalysis,
};
pub use primes::{factorize, is_prime, pi_part, prime_divisors, PrimeSet};
pub use tower::{
    orderings, sylow_tower, sylow_tower_in, towers_conjugacy_check, towers_conjugacy_check_in, SylowTower, TowerReport,
    TowerViolation,
};
