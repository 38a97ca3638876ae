//! Hall subgroups and the E_π, C_π, D_π tests.

use crate::error::{Limits, Result};
use crate::perm::{Enumerated, PermGroup, Sub};
use crate::subgroups::{
    least_conjugate_into, normal_subgroups, pi_subgroup_classes, sylow_in, SubgroupClass, SubgroupHandle,
};

use super::primes::{pi_part, PrimeSet};

/// Hall data of an enumerated group for one π.
#[derive(Clone, Debug)]
pub struct HallAnalysis {
    pub pi: PrimeSet,
    pub hall_order: usize,
    /// Every conjugacy class of π-subgroups, smallest first.
    pub pi_classes: Vec<SubgroupClass>,
    /// Positions in `pi_classes` of the Hall classes.
    pub hall: Vec<usize>,
    pub satisfies_e: bool,
    pub satisfies_c: bool,
    pub satisfies_d: bool,
    /// Position in `pi_classes` of a π-subgroup class lying in no Hall subgroup.
    pub d_failure: Option<usize>,
}

impl HallAnalysis {
    pub fn hall_reps(&self) -> impl Iterator<Item = &Sub> {
        self.hall.iter().map(|&i| &self.pi_classes[i].rep)
    }

    pub fn hall_classes(&self) -> impl Iterator<Item = &SubgroupClass> {
        self.hall.iter().map(|&i| &self.pi_classes[i])
    }

    pub fn e_failure(&self) -> Option<String> {
        (!self.satisfies_e).then(|| format!("no subgroup of order {}", self.hall_order))
    }
}

/// Classifies `within` for π by listing its π-subgroups up to conjugacy.
pub fn analyze_hall(amb: &Enumerated, within: &Sub, pi: &PrimeSet, limits: &Limits) -> Result<HallAnalysis> {
    let hall_order = pi_part(within.order() as u128, pi) as usize;
    let pi_classes = pi_subgroup_classes(amb, within, pi, limits)?;
    let hall: Vec<usize> = (0..pi_classes.len())
        .filter(|&i| pi_classes[i].order() == hall_order)
        .collect();
    let satisfies_e = !hall.is_empty();
    let satisfies_c = hall.len() == 1;
    let mut d_failure = None;
    if satisfies_c {
        let h = &pi_classes[hall[0]].rep;
        d_failure = pi_classes
            .iter()
            .position(|k| least_conjugate_into(amb, within, &k.rep, h).is_none());
    }
    Ok(HallAnalysis {
        pi: pi.clone(),
        hall_order,
        pi_classes,
        hall,
        satisfies_e,
        satisfies_c,
        satisfies_d: satisfies_c && d_failure.is_none(),
        d_failure,
    })
}

/// Tries to assemble a Hall π-subgroup from one Sylow subgroup per prime of π,
/// backtracking over the choice of Sylow subgroup for each later prime.
pub fn hall_from_sylows(amb: &Enumerated, within: &Sub, pi: &PrimeSet) -> Option<Sub> {
    let order = within.order() as u128;
    let hall_order = pi_part(order, pi) as usize;
    let primes: Vec<u64> = pi.restrict_to(order).primes().to_vec();
    let Some((&first, rest)) = primes.split_first() else {
        return Some(amb.trivial());
    };
    let sylows: Vec<Vec<Sub>> = rest
        .iter()
        .map(|&p| {
            let s = sylow_in(amb, within, p);
            amb.conjugacy_orbit(within.gens(), &s)
                .into_iter()
                .map(|(m, _)| m)
                .collect()
        })
        .collect();

    fn extend(amb: &Enumerated, current: &Sub, sylows: &[Vec<Sub>], hall_order: usize) -> Option<Sub> {
        let Some((choices, rest)) = sylows.split_first() else {
            return (current.order() == hall_order).then(|| current.clone());
        };
        for q in choices {
            if let Some(j) = amb.join_bounded(current, q.gens(), hall_order) {
                if hall_order.is_multiple_of(j.order()) {
                    if let Some(h) = extend(amb, &j, rest, hall_order) {
                        return Some(h);
                    }
                }
            }
        }
        None
    }

    extend(amb, &sylow_in(amb, within, first), &sylows, hall_order)
}

/// Outcome of the E_π / C_π / D_π tests for a permutation group.
#[derive(Clone, Debug)]
pub struct ClassVerdict {
    pub pi: PrimeSet,
    pub hall_order: u128,
    pub satisfies_e: bool,
    pub satisfies_c: bool,
    pub satisfies_d: bool,
    /// One subgroup per conjugacy class of Hall π-subgroups.
    pub hall_class_reps: Vec<SubgroupHandle>,
    pub class_count: usize,
    /// A π-subgroup contained in no Hall π-subgroup, when C_π holds but D_π fails.
    pub d_failure: Option<SubgroupHandle>,
    /// Why E_π fails.
    pub e_failure: Option<String>,
}

impl ClassVerdict {
    fn from_analysis(g: &PermGroup, amb: &Enumerated, a: &HallAnalysis) -> Result<Self> {
        let reps = a
            .hall_reps()
            .map(|h| SubgroupHandle::new(g, amb.to_group(h)))
            .collect::<Result<Vec<_>>>()?;
        let d_failure = a
            .d_failure
            .map(|i| SubgroupHandle::new(g, amb.to_group(&a.pi_classes[i].rep)))
            .transpose()?;
        Ok(ClassVerdict {
            pi: a.pi.clone(),
            hall_order: a.hall_order as u128,
            satisfies_e: a.satisfies_e,
            satisfies_c: a.satisfies_c,
            satisfies_d: a.satisfies_d,
            class_count: reps.len(),
            hall_class_reps: reps,
            d_failure,
            e_failure: a.e_failure(),
        })
    }
}

/// E_π, C_π and D_π for `g`.
pub fn classify(g: &PermGroup, pi: &PrimeSet, limits: &Limits) -> Result<ClassVerdict> {
    limits.check_subgroups(g.try_order()?)?;
    let amb = Enumerated::new(g, limits)?;
    let a = analyze_hall(&amb, &amb.whole(), pi, limits)?;
    ClassVerdict::from_analysis(g, &amb, &a)
}

/// One representative per conjugacy class of Hall π-subgroups of `g`; empty
/// when E_π fails.
pub fn hall_subgroups(g: &PermGroup, pi: &PrimeSet, limits: &Limits) -> Result<Vec<SubgroupHandle>> {
    Ok(classify(g, pi, limits)?.hall_class_reps)
}

/// Some Hall π-subgroup of `g`: first from Sylow subgroups, then from the
/// π-subgroup lattice.
pub fn find_hall_subgroup(g: &PermGroup, pi: &PrimeSet, limits: &Limits) -> Result<Option<SubgroupHandle>> {
    let amb = Enumerated::new(g, limits)?;
    if let Some(h) = hall_from_sylows(&amb, &amb.whole(), pi) {
        return Ok(Some(SubgroupHandle::new(g, amb.to_group(&h))?));
    }
    Ok(hall_subgroups(g, pi, limits)?.into_iter().next())
}

/// A normal series of `within` whose factors are π- or π′-groups, top first,
/// when one exists.
pub fn pi_separable_series(amb: &Enumerated, within: &Sub, pi: &PrimeSet) -> Option<Vec<Sub>> {
    let normals = normal_subgroups(amb, within);
    let mut series = vec![within.clone()];
    loop {
        let current = series.last().expect("nonempty").clone();
        if current.is_trivial() {
            return Some(series);
        }
        let mut step = None;
        for want_pi in [true, false] {
            // the least normal subgroup below `current` with a π (or π′) quotient
            let next = normals
                .iter()
                .filter(|n| n.is_subset_of(&current))
                .filter(|n| {
                    let q = (current.order() / n.order()) as u128;
                    if want_pi {
                        pi.is_pi_number(q)
                    } else {
                        pi.is_pi_prime_number(q)
                    }
                })
                .min_by_key(|n| n.order())
                .expect("current itself qualifies");
            if next.order() < current.order() {
                step = Some(next.clone());
                break;
            }
        }
        series.push(step?);
    }
}

/// A normal series of `g` with π- and π′-factors, top first, if `g` is π-separable.
pub fn is_pi_separable(g: &PermGroup, pi: &PrimeSet, limits: &Limits) -> Result<Option<Vec<PermGroup>>> {
    let amb = Enumerated::new(g, limits)?;
    Ok(pi_separable_series(&amb, &amb.whole(), pi).map(|s| s.iter().map(|n| amb.to_group(n)).collect()))
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

    fn pi(s: &str) -> PrimeSet {
        s.parse().unwrap()
    }

    #[test]
    fn alt5_is_not_e35() {
        let a5 = group(5, &["(0 1 2)", "(0 1 3)", "(0 1 4)"]);
        let v = classify(&a5, &pi("3,5"), &Limits::default()).unwrap();
        assert!(!v.satisfies_e && !v.satisfies_c && !v.satisfies_d);
        assert_eq!(v.e_failure.as_deref(), Some("no subgroup of order 15"));
    }

    #[test]
    fn alt5_has_one_class_of_order_twelve() {
        let a5 = group(5, &["(0 1 2)", "(0 1 3)", "(0 1 4)"]);
        let v = classify(&a5, &pi("2,3"), &Limits::default()).unwrap();
        assert!(v.satisfies_e && v.satisfies_c);
        assert_eq!(v.hall_class_reps[0].order(), 12);
        // a subgroup of order 6 (a Sym(3)) lies in no Alt(4)
        assert!(!v.satisfies_d);
        assert_eq!(v.d_failure.unwrap().order(), 6);
    }

    #[test]
    fn empty_pi_is_trivially_dpi() {
        let s4 = group(4, &["(0 1)", "(0 1 2 3)"]);
        let v = classify(&s4, &PrimeSet::empty(), &Limits::default()).unwrap();
        assert!(v.satisfies_d);
        assert_eq!(v.hall_order, 1);
        let all = classify(&s4, &pi("2,3"), &Limits::default()).unwrap();
        assert_eq!(all.hall_class_reps[0].order(), 24);
    }

    #[test]
    fn sylow_combination_finds_sym3_in_sym4() {
        let s4 = group(4, &["(0 1)", "(0 1 2 3)"]);
        let amb = Enumerated::new(&s4, &Limits::default()).unwrap();
        assert!(hall_from_sylows(&amb, &amb.whole(), &pi("2,3")).is_some());
        let a5 = group(5, &["(0 1 2)", "(0 1 3)", "(0 1 4)"]);
        let amb = Enumerated::new(&a5, &Limits::default()).unwrap();
        assert!(hall_from_sylows(&amb, &amb.whole(), &pi("3,5")).is_none());
        assert_eq!(hall_from_sylows(&amb, &amb.whole(), &pi("2,3")).unwrap().order(), 12);
    }

    #[test]
    fn separability() {
        let a5 = group(5, &["(0 1 2)", "(0 1 3)", "(0 1 4)"]);
        let l = Limits::default();
        assert!(is_pi_separable(&a5, &pi("2,3"), &l).unwrap().is_none());
        let s4 = group(4, &["(0 1)", "(0 1 2 3)"]);
        let series = is_pi_separable(&s4, &pi("3"), &l).unwrap().unwrap();
        let orders: Vec<u128> = series.iter().map(|g| g.order()).collect();
        assert_eq!(orders, vec![24, 12, 4, 1]);
        let two_group = group(4, &["(0 1 2 3)", "(0 2)"]);
        let series = is_pi_separable(&two_group, &pi("2"), &l).unwrap().unwrap();
        assert_eq!(series.len(), 2);
    }
}
