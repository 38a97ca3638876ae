use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{GroupError, Result};

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Prime factorization as (prime, exponent) pairs in increasing order.
pub fn factorize(mut n: u128) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut d: u128 = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            let mut e = 0;
            while n.is_multiple_of(d) {
                n /= d;
                e += 1;
            }
            out.push((d as u64, e));
        }
        d += if d == 2 { 1 } else { 2 };
    }
    if n > 1 {
        out.push((n as u64, 1));
    }
    out
}

pub fn prime_divisors(n: u128) -> Vec<u64> {
    factorize(n).into_iter().map(|(p, _)| p).collect()
}

/// An explicit finite set of primes standing for π.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<u64>", into = "Vec<u64>")]
pub struct PrimeSet {
    primes: Vec<u64>,
}

impl PrimeSet {
    pub fn new(primes: impl IntoIterator<Item = u64>) -> Result<Self> {
        let mut v: Vec<u64> = primes.into_iter().collect();
        if let Some(&bad) = v.iter().find(|&&p| !is_prime(p)) {
            return Err(GroupError::NotPrime(bad));
        }
        v.sort_unstable();
        v.dedup();
        Ok(PrimeSet { primes: v })
    }

    pub fn empty() -> Self {
        PrimeSet::default()
    }

    pub fn primes(&self) -> &[u64] {
        &self.primes
    }

    pub fn contains(&self, p: u64) -> bool {
        self.primes.binary_search(&p).is_ok()
    }

    pub fn is_empty(&self) -> bool {
        self.primes.is_empty()
    }

    /// π ∩ primes(n).
    pub fn restrict_to(&self, n: u128) -> PrimeSet {
        PrimeSet {
            primes: prime_divisors(n).into_iter().filter(|&p| self.contains(p)).collect(),
        }
    }

    /// π′ relative to `n`: the prime divisors of `n` outside π.
    pub fn complement_in(&self, n: u128) -> PrimeSet {
        PrimeSet {
            primes: prime_divisors(n).into_iter().filter(|&p| !self.contains(p)).collect(),
        }
    }

    /// True when every prime divisor of `n` lies in π.
    pub fn is_pi_number(&self, n: u128) -> bool {
        pi_part(n, self) == n
    }

    /// True when no prime divisor of `n` lies in π.
    pub fn is_pi_prime_number(&self, n: u128) -> bool {
        pi_part(n, self) == 1
    }

    /// All subsets of the prime divisors of `n`, smallest first.
    pub fn all_subsets_of(n: u128) -> Vec<PrimeSet> {
        let ps = prime_divisors(n);
        let mut out: Vec<PrimeSet> = (0..1u32 << ps.len())
            .map(|mask| PrimeSet {
                primes: ps
                    .iter()
                    .enumerate()
                    .filter(|(i, _)| mask >> i & 1 == 1)
                    .map(|(_, &p)| p)
                    .collect(),
            })
            .collect();
        out.sort_by(|a, b| a.primes.len().cmp(&b.primes.len()).then(a.primes.cmp(&b.primes)));
        out
    }
}

impl TryFrom<Vec<u64>> for PrimeSet {
    type Error = GroupError;

    fn try_from(v: Vec<u64>) -> Result<Self> {
        PrimeSet::new(v)
    }
}

impl From<PrimeSet> for Vec<u64> {
    fn from(p: PrimeSet) -> Vec<u64> {
        p.primes
    }
}

impl FromStr for PrimeSet {
    type Err = GroupError;

    /// Comma-separated primes; the empty string is the empty set.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() || s == "{}" {
            return Ok(PrimeSet::empty());
        }
        let s = s.trim_start_matches('{').trim_end_matches('}');
        let nums = s
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<u64>()
                    .map_err(|_| GroupError::Parse(format!("bad prime {t:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        PrimeSet::new(nums)
    }
}

impl fmt::Display for PrimeSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, p) in self.primes.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, "}}")
    }
}

/// Largest divisor of `n` whose prime factors all lie in π.
pub fn pi_part(n: u128, pi: &PrimeSet) -> u128 {
    assert!(n >= 1, "pi_part of zero");
    let mut part = 1;
    let mut m = n;
    for &p in pi.primes() {
        let p = p as u128;
        while m.is_multiple_of(p) {
            m /= p;
            part *= p;
        }
    }
    part
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pi_parts() {
        let pi23: PrimeSet = "2,3".parse().unwrap();
        assert_eq!(pi_part(168, &pi23), 24);
        let pi35: PrimeSet = "3,5".parse().unwrap();
        assert_eq!(pi_part(4080, &pi35), 15);
        assert_eq!(pi_part(4080, &PrimeSet::empty()), 1);
        assert_eq!(pi_part(1, &pi23), 1);
    }

    #[test]
    fn factorization_of_sl2_16_order() {
        assert_eq!(factorize(4080), vec![(2, 4), (3, 1), (5, 1), (17, 1)]);
        assert_eq!(prime_divisors(1), Vec::<u64>::new());
    }

    #[test]
    fn composite_members_are_rejected() {
        assert_eq!("2,4".parse::<PrimeSet>(), Err(GroupError::NotPrime(4)));
        assert!("2,x".parse::<PrimeSet>().is_err());
        assert_eq!("".parse::<PrimeSet>().unwrap(), PrimeSet::empty());
    }

    #[test]
    fn complement_is_relative() {
        let pi: PrimeSet = "2,3,11".parse().unwrap();
        assert_eq!(pi.complement_in(168).primes(), &[7]);
        assert_eq!(pi.restrict_to(168).primes(), &[2, 3]);
        assert_eq!(PrimeSet::all_subsets_of(30).len(), 8);
    }
}
