//! Sylow towers.
//!
//! A tower of complexion (p_1, …, p_n) exists exactly when, for each i, the
//! group has a normal Hall {p_{i+1}, …, p_n}-subgroup H_i. Such a subgroup
//! contains every element whose order involves only those primes, so it is
//! found as the subgroup those elements generate.

use crate::error::{GroupError, Limits, Result};
use crate::perm::{Enumerated, PermGroup, Sub};

use super::classes::analyze_hall;
use super::primes::{pi_part, prime_divisors, PrimeSet};

/// A series H = H_0 > H_1 > … > H_n = 1 of normal subgroups with
/// |H_{i−1} : H_i| the p_i-part of |H|.
#[derive(Clone, Debug)]
pub struct SylowTower {
    pub complexion: Vec<u64>,
    pub series: Vec<PermGroup>,
}

fn check_complexion(order: u128, complexion: &[u64]) -> Result<()> {
    let mut sorted = complexion.to_vec();
    sorted.sort_unstable();
    if sorted != prime_divisors(order) {
        return Err(GroupError::Precondition(format!(
            "complexion {complexion:?} is not an ordering of the prime divisors of {order}"
        )));
    }
    Ok(())
}

/// The tower of `h` with the given complexion, bottom term last.
pub fn sylow_tower_in(amb: &Enumerated, h: &Sub, complexion: &[u64]) -> Result<Option<Vec<Sub>>> {
    check_complexion(h.order() as u128, complexion)?;
    let mut series = vec![h.clone()];
    for i in 1..=complexion.len() {
        let sigma = PrimeSet::new(complexion[i..].iter().copied())?;
        let want = pi_part(h.order() as u128, &sigma) as usize;
        let mut hi = amb.trivial();
        for &x in h.elems() {
            if sigma.is_pi_number(amb.order_of(x) as u128) && !hi.contains(x) {
                hi = amb.join(&hi, &[x]);
                if hi.order() > want {
                    return Ok(None);
                }
            }
        }
        if hi.order() != want {
            return Ok(None);
        }
        series.push(hi);
    }
    Ok(Some(series))
}

/// The Sylow tower of `h` of the given complexion, if there is one.
pub fn sylow_tower(h: &PermGroup, complexion: &[u64], limits: &Limits) -> Result<Option<SylowTower>> {
    let amb = Enumerated::new(h, limits)?;
    Ok(sylow_tower_in(&amb, &amb.whole(), complexion)?.map(|s| SylowTower {
        complexion: complexion.to_vec(),
        series: s.iter().map(|x| amb.to_group(x)).collect(),
    }))
}

/// Every ordering of `primes`, in lexicographic order.
pub fn orderings(primes: &[u64]) -> Vec<Vec<u64>> {
    if primes.is_empty() {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for (i, &p) in primes.iter().enumerate() {
        let mut rest = primes.to_vec();
        rest.remove(i);
        for mut tail in orderings(&rest) {
            tail.insert(0, p);
            out.push(tail);
        }
    }
    out
}

/// Two non-conjugate Hall subgroups admitting towers of the same complexion.
#[derive(Clone, Debug)]
pub struct TowerViolation {
    pub complexion: Vec<u64>,
    pub first: Sub,
    pub second: Sub,
}

/// Tower data for the Hall classes of one group and π.
#[derive(Clone, Debug, Default)]
pub struct TowerReport {
    /// For each Hall class representative, the complexions it admits.
    pub towers: Vec<(Sub, Vec<Vec<u64>>)>,
    pub violations: Vec<TowerViolation>,
}

/// For every complexion, checks that all Hall π-subgroups admitting a tower of
/// that complexion are conjugate.
pub fn towers_conjugacy_check_in(
    amb: &Enumerated,
    within: &Sub,
    pi: &PrimeSet,
    limits: &Limits,
) -> Result<TowerReport> {
    let analysis = analyze_hall(amb, within, pi, limits)?;
    let primes = pi.restrict_to(within.order() as u128);
    let complexions = orderings(primes.primes());
    let mut report = TowerReport::default();
    for rep in analysis.hall_reps() {
        let mut admitted = Vec::new();
        for c in &complexions {
            if sylow_tower_in(amb, rep, c)?.is_some() {
                admitted.push(c.clone());
            }
        }
        report.towers.push((rep.clone(), admitted));
    }
    // distinct Hall classes are never conjugate, so any shared complexion is a violation
    for c in &complexions {
        let with_tower: Vec<&Sub> = report
            .towers
            .iter()
            .filter(|(_, cs)| cs.contains(c))
            .map(|(h, _)| h)
            .collect();
        if with_tower.len() > 1 {
            report.violations.push(TowerViolation {
                complexion: c.clone(),
                first: with_tower[0].clone(),
                second: with_tower[1].clone(),
            });
        }
    }
    Ok(report)
}

pub fn towers_conjugacy_check(g: &PermGroup, pi: &PrimeSet, limits: &Limits) -> Result<TowerReport> {
    limits.check_subgroups(g.try_order()?)?;
    let amb = Enumerated::new(g, limits)?;
    towers_conjugacy_check_in(&amb, &amb.whole(), pi, limits)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::Permutation;

    fn group(n: usize, gens: &[&str]) -> PermGroup {
        PermGroup::new(
            n,
            gens.iter().map(|s| Permutation::parse_cycles(s, n).unwrap()).collect(),
        )
        .unwrap()
    }

    #[test]
    fn alt4_towers() {
        let a4 = group(4, &["(0 1 2)", "(1 2 3)"]);
        let l = Limits::default();
        let t = sylow_tower(&a4, &[3, 2], &l).unwrap().unwrap();
        let orders: Vec<u128> = t.series.iter().map(|g| g.order()).collect();
        assert_eq!(orders, vec![12, 4, 1]);
        assert!(sylow_tower(&a4, &[2, 3], &l).unwrap().is_none());
    }

    #[test]
    fn sym3_and_cyclic15() {
        let l = Limits::default();
        let s3 = group(3, &["(0 1)", "(0 1 2)"]);
        assert!(sylow_tower(&s3, &[2, 3], &l).unwrap().is_some());
        let c15 = group(8, &["(0 1 2)(3 4 5 6 7)"]);
        assert!(sylow_tower(&c15, &[3, 5], &l).unwrap().is_some());
        assert!(sylow_tower(&c15, &[5, 3], &l).unwrap().is_some());
    }

    #[test]
    fn complexion_must_match_the_order() {
        let s3 = group(3, &["(0 1)", "(0 1 2)"]);
        assert!(sylow_tower(&s3, &[2], &Limits::default()).is_err());
    }

    #[test]
    fn orderings_are_lexicographic() {
        assert_eq!(orderings(&[2, 3, 5]).len(), 6);
        assert_eq!(orderings(&[2, 3])[1], vec![3, 2]);
        assert_eq!(orderings(&[]), vec![Vec::<u64>::new()]);
    }

    #[test]
    fn no_violations_in_sym4() {
        let s4 = group(4, &["(0 1)", "(0 1 2 3)"]);
        let r = towers_conjugacy_check(&s4, &"2,3".parse().unwrap(), &Limits::default()).unwrap();
        assert!(r.violations.is_empty());
        assert_eq!(r.towers.len(), 1);
    }
}
