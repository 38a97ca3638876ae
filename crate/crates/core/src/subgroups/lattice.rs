//! Subgroup lattices of enumerated groups, up to conjugacy.
//!
//! Classes are found by cyclic extension: every subgroup is reached from
//! the trivial group by repeatedly adjoining a cyclic subgroup of prime-power
//! order, and it is enough to extend one representative per class because
//! the list of cyclic subgroups is closed under conjugation.

use rustc_hash::{FxHashMap, FxHashSet};

use crate::error::{Limits, Result};
use crate::hall::{factorize, pi_part, PrimeSet};
use crate::perm::{is_power_of, Elem, Enumerated, Sub};

/// A conjugacy class of subgroups under the acting group.
#[derive(Clone, Debug)]
pub struct SubgroupClass {
    /// The member with the lexicographically least element-index set.
    pub rep: Sub,
    /// Sorted element sets of all members.
    pub members: Vec<Vec<Elem>>,
}

impl SubgroupClass {
    pub fn order(&self) -> usize {
        self.rep.order()
    }

    pub fn size(&self) -> usize {
        self.members.len()
    }

    pub fn is_normal(&self) -> bool {
        self.members.len() == 1
    }

    /// True when some member contains `h`.
    pub fn some_member_contains(&self, h: &Sub) -> bool {
        self.order().is_multiple_of(h.order())
            && self
                .members
                .iter()
                .any(|m| h.elems().iter().all(|x| m.binary_search(x).is_ok()))
    }

    /// True when some member lies inside `h`.
    pub fn some_member_inside(&self, h: &Sub) -> bool {
        h.order().is_multiple_of(self.order()) && self.members.iter().any(|m| m.iter().all(|&x| h.contains(x)))
    }
}

/// Cyclic subgroups of prime-power order whose order divides `bound`, one
/// generator each, in increasing generator order.
fn prime_power_cyclics(amb: &Enumerated, within: &Sub, bound: u128) -> Vec<Elem> {
    let mut covered = FxHashSet::default();
    let mut out = Vec::new();
    for &x in within.elems() {
        let ord = amb.order_of(x) as u64;
        if ord == 1 || covered.contains(&x) || !bound.is_multiple_of(ord as u128) {
            continue;
        }
        let f = factorize(ord as u128);
        if f.len() != 1 {
            continue;
        }
        // every generator of <x> is x^k with k coprime to the order
        let p = f[0].0;
        let mut y = x;
        for k in 1..ord {
            if k % p != 0 {
                covered.insert(y);
            }
            y = amb.mul(y, x);
        }
        out.push(x);
    }
    out
}

/// All conjugacy classes of subgroups of `within` whose order divides
/// `bound` (all subgroups when `bound` is `None`), sorted by order and then
/// by representative.
pub fn subgroup_classes(
    amb: &Enumerated,
    within: &Sub,
    bound: Option<u128>,
    limits: &Limits,
) -> Result<Vec<SubgroupClass>> {
    limits.check_subgroups(within.order() as u128)?;
    let bound = bound.unwrap_or(within.order() as u128);
    let cyclics = prime_power_cyclics(amb, within, bound);
    let mut seen: FxHashMap<Vec<Elem>, usize> = FxHashMap::default();
    let mut classes: Vec<SubgroupClass> = Vec::new();
    let mut discovered: Vec<Sub> = Vec::new();

    let add_class = |s: Sub,
                     seen: &mut FxHashMap<Vec<Elem>, usize>,
                     classes: &mut Vec<SubgroupClass>,
                     discovered: &mut Vec<Sub>| {
        let idx = classes.len();
        let orbit = amb.conjugacy_orbit(within.gens(), &s);
        let (rep, _) = orbit
            .iter()
            .min_by(|a, b| a.0.elems().cmp(b.0.elems()))
            .cloned()
            .expect("nonempty orbit");
        let mut members: Vec<Vec<Elem>> = orbit.into_iter().map(|(m, _)| m.elems().to_vec()).collect();
        members.sort_unstable();
        for m in &members {
            seen.insert(m.clone(), idx);
        }
        classes.push(SubgroupClass { rep, members });
        discovered.push(s);
    };

    add_class(amb.trivial(), &mut seen, &mut classes, &mut discovered);
    let limit = usize::try_from(bound).unwrap_or(usize::MAX);
    let mut i = 0;
    while i < discovered.len() {
        let base = discovered[i].clone();
        for &c in &cyclics {
            if base.contains(c) {
                continue;
            }
            let Some(j) = amb.join_bounded(&base, &[c], limit) else {
                continue;
            };
            if !bound.is_multiple_of(j.order() as u128) || seen.contains_key(j.elems()) {
                continue;
            }
            add_class(j, &mut seen, &mut classes, &mut discovered);
        }
        i += 1;
    }
    classes.sort_by(|a, b| a.order().cmp(&b.order()).then_with(|| a.rep.elems().cmp(b.rep.elems())));
    Ok(classes)
}

/// π-subgroup classes of `within`.
pub fn pi_subgroup_classes(
    amb: &Enumerated,
    within: &Sub,
    pi: &PrimeSet,
    limits: &Limits,
) -> Result<Vec<SubgroupClass>> {
    let bound = pi_part(within.order() as u128, pi);
    subgroup_classes(amb, within, Some(bound), limits)
}

/// Conjugacy classes of elements of `within`, each sorted, ordered by least member.
pub fn element_classes(amb: &Enumerated, within: &Sub) -> Vec<Vec<Elem>> {
    let mut done = FxHashSet::default();
    let mut out = Vec::new();
    for &x in within.elems() {
        if done.contains(&x) {
            continue;
        }
        let mut class = vec![x];
        done.insert(x);
        let mut i = 0;
        while i < class.len() {
            for &g in within.gens() {
                let y = amb.conj(class[i], g);
                if done.insert(y) {
                    class.push(y);
                }
            }
            i += 1;
        }
        class.sort_unstable();
        out.push(class);
    }
    out
}

/// All normal subgroups of `within`, as products of normal closures of
/// elements, sorted by order and element set.
pub fn normal_subgroups(amb: &Enumerated, within: &Sub) -> Vec<Sub> {
    let mut closures: Vec<Sub> = Vec::new();
    for class in element_classes(amb, within) {
        if class == [0] {
            continue;
        }
        let n = amb.closure(&class);
        let n = amb.sub_from_elems(n.elems().to_vec());
        if !closures.contains(&n) {
            closures.push(n);
        }
    }
    let mut list = vec![amb.trivial()];
    let mut seen: FxHashSet<Vec<Elem>> = FxHashSet::default();
    seen.insert(vec![0]);
    let mut i = 0;
    while i < list.len() {
        for c in &closures {
            if c.is_subset_of(&list[i]) {
                continue;
            }
            let m = amb.join(&list[i], c.gens());
            if seen.insert(m.elems().to_vec()) {
                list.push(m);
            }
        }
        i += 1;
    }
    list.sort_by(|a, b| a.order().cmp(&b.order()).then_with(|| a.elems().cmp(b.elems())));
    list
}

/// Indices of the maximal classes among full subgroup classes.
pub fn maximal_classes(classes: &[SubgroupClass]) -> Vec<usize> {
    let top = classes.iter().map(|c| c.order()).max().unwrap_or(1);
    (0..classes.len())
        .filter(|&i| {
            let m = &classes[i];
            m.order() < top
                && !classes.iter().any(|c| {
                    c.order() > m.order()
                        && c.order() < top
                        && c.order() % m.order() == 0
                        && c.some_member_contains(&m.rep)
                })
        })
        .collect()
}

/// Sylow `p`-subgroup of `within`, grown through normalizers from a cyclic
/// `p`-subgroup.
pub fn sylow_in(amb: &Enumerated, within: &Sub, p: u64) -> Sub {
    let target = pi_part(within.order() as u128, &PrimeSet::new([p]).expect("prime")) as usize;
    if target == 1 {
        return amb.trivial();
    }
    let start = within
        .elems()
        .iter()
        .copied()
        .find(|&x| (amb.order_of(x) as u64).is_multiple_of(p))
        .expect("Cauchy");
    let ord = amb.order_of(start) as u64;
    let mut p_part = 1;
    while ord.is_multiple_of(p_part * p) {
        p_part *= p;
    }
    let mut sylow = amb.cyclic(amb.pow(start, ord / p_part));
    while sylow.order() < target {
        let n = amb.normalizer(within, &sylow);
        let z = amb
            .p_elements(&n, p)
            .find(|&x| !sylow.contains(x))
            .expect("a p-subgroup below the Sylow order has a p-element in its normalizer outside it");
        // the last power of z outside the subgroup has p-th power inside it
        let mut y = z;
        loop {
            let next = amb.pow(y, p);
            if sylow.contains(next) {
                break;
            }
            y = next;
        }
        sylow = amb.join(&sylow, &[y]);
    }
    debug_assert!(is_power_of(sylow.order() as u64, p));
    sylow
}
