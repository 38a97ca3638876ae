mod common;

use hallgroup::error::Limits;
use hallgroup::perm::{coset_action, parse_generator_file, write_generator_file, Enumerated, PermGroup, Permutation};
use proptest::prelude::*;

fn perm_strategy(n: usize) -> impl Strategy<Value = Permutation> {
    Just((0..n as u32).collect::<Vec<u32>>())
        .prop_shuffle()
        .prop_map(|v| Permutation::from_images(v).unwrap())
}

fn group_strategy() -> impl Strategy<Value = PermGroup> {
    (2usize..=6).prop_flat_map(|n| {
        prop::collection::vec(perm_strategy(n), 1..=3).prop_map(move |gens| PermGroup::new(n, gens).unwrap())
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn product_is_left_to_right(a in perm_strategy(7), b in perm_strategy(7)) {
        let ab = a.compose(&b).unwrap();
        for x in 0..7 {
            prop_assert_eq!(ab.image(x), b.image(a.image(x)));
        }
        prop_assert_eq!(ab.images(), &common::mul(&a.images().to_vec(), &b.images().to_vec())[..]);
    }

    #[test]
    fn inverse_and_conjugation(a in perm_strategy(6), g in perm_strategy(6)) {
        prop_assert!(a.compose(&a.inverse()).unwrap().is_identity());
        let c = a.conjugate_by(&g);
        prop_assert_eq!(c.images(), &common::conj(&a.images().to_vec(), &g.images().to_vec())[..]);
        prop_assert_eq!(c.order(), a.order());
    }

    #[test]
    fn cycle_notation_round_trips(a in perm_strategy(9)) {
        let back = Permutation::parse_cycles(&a.to_string(), 9).unwrap();
        prop_assert_eq!(back, a);
    }

    #[test]
    fn chain_order_matches_closure(g in group_strategy()) {
        let elems = common::elements(&g);
        prop_assert_eq!(g.order(), elems.len() as u128);
        let listed = g.elements(&Limits::default()).unwrap();
        prop_assert_eq!(listed.len(), elems.len());
        for x in &listed {
            prop_assert!(elems.contains(x.images()));
        }
    }

    #[test]
    fn membership_matches_closure((g, x) in group_strategy().prop_flat_map(|g| {
        let n = g.degree();
        (Just(g), perm_strategy(n))
    })) {
        let elems = common::elements(&g);
        prop_assert_eq!(g.contains(&x), elems.contains(x.images()));
    }

    #[test]
    fn generator_files_round_trip(g in group_strategy()) {
        let back = parse_generator_file(&write_generator_file(&g)).unwrap();
        prop_assert_eq!(back.generators(), g.generators());
    }

    #[test]
    fn enumerated_table_agrees_with_products(g in group_strategy()) {
        let amb = Enumerated::new(&g, &Limits::default()).unwrap();
        prop_assert_eq!(amb.perm(0), &Permutation::identity(g.degree()));
        for a in 0..amb.len() as u32 {
            let b = (a * 7 + 3) % amb.len() as u32;
            let ab = amb.perm(a).compose(amb.perm(b)).unwrap();
            prop_assert_eq!(amb.index_of(&ab), Some(amb.mul(a, b)));
            prop_assert_eq!(amb.mul(a, amb.inv(a)), 0);
        }
    }
}

#[test]
fn quotient_by_alternating_group() {
    let s5 = hallgroup::construct::symmetric(5).unwrap();
    let a5 = hallgroup::construct::alternating(5).unwrap();
    let (hom, image) = coset_action(&s5, &a5, &Limits::default()).unwrap();
    assert_eq!(image.order(), 2);
    for g in a5.generators() {
        assert!(hom.apply(g).unwrap().is_identity());
    }
    let v4 = PermGroup::new(
        5,
        vec![
            Permutation::parse_cycles("(0 1)(2 3)", 5).unwrap(),
            Permutation::parse_cycles("(0 2)(1 3)", 5).unwrap(),
        ],
    )
    .unwrap();
    assert!(coset_action(&s5, &v4, &Limits::default()).is_err());
}

#[test]
fn caps_are_enforced() {
    let s7 = hallgroup::construct::symmetric(7).unwrap();
    let tight = Limits {
        enum_cap: 1000,
        ..Limits::default()
    };
    assert!(matches!(
        s7.elements(&tight),
        Err(hallgroup::error::GroupError::CapExceeded { .. })
    ));
    assert!(Enumerated::new(&s7, &tight).is_err());
}

#[test]
fn degree_mismatch_is_an_error() {
    let a = Permutation::parse_cycles("(0 1)", 3).unwrap();
    let b = Permutation::parse_cycles("(0 1)", 4).unwrap();
    assert!(a.compose(&b).is_err());
    assert!(PermGroup::new(3, vec![b]).is_err());
    assert!(Permutation::from_images(vec![0, 0, 1]).is_err());
}
