mod common;

use hallgroup::construct::{alternating, dihedral, direct_product, psl2, symmetric};
use hallgroup::error::Limits;
use hallgroup::perm::{Enumerated, PermGroup};
use hallgroup::subgroups::{
    all_subgroups, is_conjugate, is_conjugate_by_transversal, maximal_classes, normal_subgroups, normalizer,
    subgroup_classes, sylow, BlockSystem,
};

fn set_of(g: &PermGroup) -> common::Set {
    common::elements(g)
}

/// (subgroups, classes, normal subgroups), fixed from the oracle.
const LATTICES: [(&str, usize, usize, usize); 6] = [
    ("alt:4", 10, 5, 3),
    ("sym:4", 30, 11, 4),
    ("dih:6", 16, 10, 7),
    ("alt:5", 59, 9, 2),
    ("sym:5", 156, 19, 3),
    ("psl2:7", 179, 15, 2),
];

fn build(name: &str) -> PermGroup {
    let (family, n) = name.split_once(':').unwrap();
    let n: usize = n.parse().unwrap();
    match family {
        "alt" => alternating(n),
        "sym" => symmetric(n),
        "dih" => dihedral(n),
        "psl2" => psl2(n),
        _ => unreachable!(),
    }
    .unwrap()
}

#[test]
fn oracle_reproduces_frozen_lattice_counts() {
    for (name, subs, classes, normals) in LATTICES.into_iter().take(4) {
        let g = build(name);
        let all = set_of(&g);
        let oracle = common::all_subgroups(g.degree(), &all);
        assert_eq!(oracle.len(), subs, "{name}");
        assert_eq!(common::classes(&all, &oracle).len(), classes, "{name}");
        assert_eq!(
            oracle.iter().filter(|h| common::is_normal(&all, h)).count(),
            normals,
            "{name}"
        );
    }
}

#[test]
fn lattice_matches_frozen_counts() {
    let l = Limits::default();
    for (name, subs, classes, normals) in LATTICES {
        let g = build(name);
        let amb = Enumerated::new(&g, &l).unwrap();
        let cl = subgroup_classes(&amb, &amb.whole(), None, &l).unwrap();
        assert_eq!(cl.len(), classes, "{name}");
        assert_eq!(cl.iter().map(|c| c.size()).sum::<usize>(), subs, "{name}");
        assert_eq!(all_subgroups(&g, None, &l).unwrap().len(), subs, "{name}");
        assert_eq!(normal_subgroups(&amb, &amb.whole()).len(), normals, "{name}");
    }
}

#[test]
fn lattice_members_are_the_oracle_subgroups() {
    let l = Limits::default();
    let g = symmetric(4).unwrap();
    let all = set_of(&g);
    let mut oracle: Vec<common::Set> = common::all_subgroups(4, &all);
    oracle.sort();
    let mut ours: Vec<common::Set> = all_subgroups(&g, None, &l)
        .unwrap()
        .iter()
        .map(|h| set_of(h.group()))
        .collect();
    ours.sort();
    assert_eq!(ours, oracle);
}

#[test]
fn maximal_subgroups_of_sym4() {
    let l = Limits::default();
    let g = symmetric(4).unwrap();
    let amb = Enumerated::new(&g, &l).unwrap();
    let cl = subgroup_classes(&amb, &amb.whole(), None, &l).unwrap();
    let mut orders: Vec<usize> = maximal_classes(&cl).iter().map(|&i| cl[i].order()).collect();
    orders.sort_unstable();
    assert_eq!(orders, vec![6, 8, 12]);
}

#[test]
fn sylow_and_normalizer_against_oracle() {
    let l = Limits::default();
    for name in ["sym:4", "alt:5", "psl2:7", "dih:6"] {
        let g = build(name);
        let all = set_of(&g);
        for p in common::prime_divisors(all.len()) {
            let s = sylow(&g, p as u64, &l).unwrap();
            assert_eq!(s.order() as usize, common::pi_part(all.len(), &[p]), "{name} p={p}");
            let n = normalizer(&g, s.group(), &l).unwrap();
            assert_eq!(
                set_of(n.group()),
                common::normalizer(&all, &set_of(s.group())),
                "{name} p={p}"
            );
        }
    }
}

#[test]
fn conjugacy_agrees_with_oracle_on_sym4() {
    let l = Limits::default();
    let g = symmetric(4).unwrap();
    let all = set_of(&g);
    let subs = all_subgroups(&g, None, &l).unwrap();
    for (i, h) in subs.iter().enumerate() {
        for k in &subs[i..] {
            let ours = is_conjugate(&g, h.group(), k.group(), &l).unwrap();
            let oracle = common::are_conjugate(&all, &set_of(h.group()), &set_of(k.group()));
            assert_eq!(ours.is_some(), oracle);
            if let Some(w) = ours {
                assert!(w.replay());
            }
        }
    }
}

#[test]
fn blockwise_and_transversal_agree_on_a_product() {
    let l = Limits::default();
    let s3 = symmetric(3).unwrap();
    let d4 = dihedral(4).unwrap();
    let g = direct_product(&[s3, d4]).unwrap();
    let blocks = BlockSystem::of_group(&g).unwrap();
    let subs: Vec<PermGroup> = all_subgroups(&g, None, &l)
        .unwrap()
        .into_iter()
        .map(|h| h.into_group())
        .filter(|h| blocks.local_factors(h).is_some())
        .collect();
    assert!(subs.len() > 10);
    for h in &subs {
        for k in &subs {
            let a = is_conjugate(&g, h, k, &l).unwrap().is_some();
            let b = is_conjugate_by_transversal(&g, h, k, &l).unwrap().is_some();
            assert_eq!(a, b);
        }
    }
}
