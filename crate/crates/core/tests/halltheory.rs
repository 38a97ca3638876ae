mod common;

use hallgroup::construct::{alternating, cyclic, dihedral, direct_product, psl2, symmetric};
use hallgroup::error::Limits;
use hallgroup::hall::{classify, find_hall_subgroup, is_pi_separable, sylow_tower, towers_conjugacy_check, PrimeSet};
use hallgroup::perm::PermGroup;

fn small_groups() -> Vec<(&'static str, PermGroup)> {
    vec![
        ("cyc:6", cyclic(6).unwrap()),
        ("dih:5", dihedral(5).unwrap()),
        ("dih:6", dihedral(6).unwrap()),
        ("alt:4", alternating(4).unwrap()),
        ("sym:4", symmetric(4).unwrap()),
        ("alt:5", alternating(5).unwrap()),
        (
            "sym:3 x cyc:2",
            direct_product(&[symmetric(3).unwrap(), cyclic(2).unwrap()]).unwrap(),
        ),
    ]
}

fn primes(pi: &PrimeSet) -> Vec<usize> {
    pi.primes().iter().map(|&p| p as usize).collect()
}

#[test]
fn classification_agrees_with_oracle() {
    let l = Limits::default();
    for (name, g) in small_groups() {
        let all = common::elements(&g);
        let subs = common::all_subgroups(g.degree(), &all);
        for pi in PrimeSet::all_subsets_of(g.order()) {
            let v = classify(&g, &pi, &l).unwrap();
            let ps = primes(&pi);
            let (e, c, d) = common::ecd(&all, &subs, &ps);
            assert_eq!((v.satisfies_e, v.satisfies_c, v.satisfies_d), (e, c, d), "{name} {pi}");
            assert_eq!(v.class_count, common::hall_class_count(&all, &subs, &ps), "{name} {pi}");
            assert_eq!(v.hall_order as usize, common::pi_part(all.len(), &ps));
            assert!(!v.satisfies_d || v.satisfies_c);
            assert!(!v.satisfies_c || v.satisfies_e);
            assert_eq!(v.e_failure.is_some(), !e);
        }
    }
}

#[test]
fn psl2_7_frozen_verdicts() {
    let l = Limits::default();
    let g = psl2(7).unwrap();
    let cases: [(&[u64], bool, bool, bool, usize); 5] = [
        (&[2], true, true, true, 1),
        (&[2, 3], true, false, false, 2),
        (&[3, 7], true, true, true, 1),
        (&[2, 7], false, false, false, 0),
        (&[2, 3, 7], true, true, true, 1),
    ];
    for (ps, e, c, d, count) in cases {
        let pi = PrimeSet::new(ps.iter().copied()).unwrap();
        let v = classify(&g, &pi, &l).unwrap();
        assert_eq!(
            (v.satisfies_e, v.satisfies_c, v.satisfies_d, v.class_count),
            (e, c, d, count),
            "{pi}"
        );
    }
}

#[test]
fn hall_search_finds_a_hall_subgroup() {
    let l = Limits::default();
    let g = alternating(5).unwrap();
    let pi: PrimeSet = "2,3".parse().unwrap();
    let h = find_hall_subgroup(&g, &pi, &l).unwrap().unwrap();
    assert_eq!(h.order(), 12);
    let pi: PrimeSet = "3,5".parse().unwrap();
    assert!(find_hall_subgroup(&g, &pi, &l).unwrap().is_none());
}

#[test]
fn pi_separability() {
    let l = Limits::default();
    let two: PrimeSet = "2".parse().unwrap();
    let series = is_pi_separable(&symmetric(4).unwrap(), &two, &l).unwrap().unwrap();
    assert!(series.last().unwrap().is_trivial());
    assert!(is_pi_separable(&alternating(5).unwrap(), &two, &l).unwrap().is_none());
}

#[test]
fn sylow_towers() {
    let l = Limits::default();
    let a4 = alternating(4).unwrap();
    let t = sylow_tower(&a4, &[3, 2], &l).unwrap().unwrap();
    let orders: Vec<u128> = t.series.iter().map(|s| s.order()).collect();
    assert_eq!(orders, vec![12, 4, 1]);
    for w in t.series.windows(2) {
        assert!(w[0].is_normal(&w[1]).unwrap());
    }
    assert!(sylow_tower(&a4, &[2, 3], &l).unwrap().is_none());
    let s4 = symmetric(4).unwrap();
    assert!(sylow_tower(&s4, &[2, 3], &l).unwrap().is_none());
    assert!(sylow_tower(&s4, &[3, 2], &l).unwrap().is_none());
    assert!(sylow_tower(&s4, &[2, 5], &l).is_err());
}

#[test]
fn towers_in_solvable_groups_are_conjugate() {
    let l = Limits::default();
    for (name, g) in small_groups() {
        if !g.is_solvable() {
            continue;
        }
        for pi in PrimeSet::all_subsets_of(g.order()) {
            let r = towers_conjugacy_check(&g, &pi, &l).unwrap();
            assert!(r.violations.is_empty(), "{name} {pi}");
        }
    }
}
