//! Brute-force oracle: plain image vectors, closure by breadth-first search,
//! and exhaustive quantifiers. Shares no code with the library beyond
//! reading generators out of a `PermGroup`.
#![allow(dead_code)]

use std::collections::{BTreeSet, HashSet};

use hallgroup::perm::PermGroup;

pub type P = Vec<u32>;
pub type Set = BTreeSet<P>;

/// `x` then `y`.
pub fn mul(x: &P, y: &P) -> P {
    x.iter().map(|&i| y[i as usize]).collect()
}

pub fn inv(x: &P) -> P {
    let mut out = vec![0; x.len()];
    for (i, &j) in x.iter().enumerate() {
        out[j as usize] = i as u32;
    }
    out
}

pub fn conj(x: &P, g: &P) -> P {
    mul(&mul(&inv(g), x), g)
}

pub fn id(n: usize) -> P {
    (0..n as u32).collect()
}

pub fn gens_of(g: &PermGroup) -> Vec<P> {
    g.generators().iter().map(|x| x.images().to_vec()).collect()
}

pub fn closure(n: usize, gens: &[P]) -> Set {
    let mut seen: Set = BTreeSet::new();
    seen.insert(id(n));
    let mut frontier = vec![id(n)];
    while let Some(x) = frontier.pop() {
        for g in gens {
            let y = mul(&x, g);
            if seen.insert(y.clone()) {
                frontier.push(y);
            }
        }
    }
    seen
}

pub fn elements(g: &PermGroup) -> Set {
    closure(g.degree(), &gens_of(g))
}

pub fn conj_set(h: &Set, g: &P) -> Set {
    h.iter().map(|x| conj(x, g)).collect()
}

pub fn join(n: usize, a: &Set, b: &Set) -> Set {
    let gens: Vec<P> = a.iter().chain(b.iter()).cloned().collect();
    closure(n, &gens)
}

/// Every subgroup, found by repeatedly adjoining single elements.
pub fn all_subgroups(n: usize, g: &Set) -> Vec<Set> {
    let mut seen: HashSet<Set> = HashSet::new();
    let trivial: Set = [id(n)].into_iter().collect();
    seen.insert(trivial.clone());
    let mut queue = vec![trivial];
    let mut i = 0;
    while i < queue.len() {
        let h = queue[i].clone();
        for x in g {
            if h.contains(x) {
                continue;
            }
            let mut gens: Vec<P> = h.iter().cloned().collect();
            gens.push(x.clone());
            let k = closure(n, &gens);
            if seen.insert(k.clone()) {
                queue.push(k);
            }
        }
        i += 1;
    }
    queue
}

/// Subgroups grouped into conjugacy classes under `g`.
pub fn classes(g: &Set, subs: &[Set]) -> Vec<Vec<Set>> {
    let mut done: HashSet<Set> = HashSet::new();
    let mut out = Vec::new();
    for h in subs {
        if done.contains(h) {
            continue;
        }
        let class: BTreeSet<Set> = g.iter().map(|x| conj_set(h, x)).collect();
        for c in &class {
            done.insert(c.clone());
        }
        out.push(class.into_iter().collect());
    }
    out
}

pub fn prime_divisors(mut n: usize) -> Vec<usize> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            out.push(p);
            while n.is_multiple_of(p) {
                n /= p;
            }
        }
        p += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

pub fn pi_part(mut n: usize, pi: &[usize]) -> usize {
    let mut part = 1;
    for &p in pi {
        while n.is_multiple_of(p) {
            n /= p;
            part *= p;
        }
    }
    part
}

pub fn is_pi_number(n: usize, pi: &[usize]) -> bool {
    pi_part(n, pi) == n
}

/// Number of conjugacy classes of Hall π-subgroups.
pub fn hall_class_count(g: &Set, subs: &[Set], pi: &[usize]) -> usize {
    let want = pi_part(g.len(), pi);
    let halls: Vec<Set> = subs.iter().filter(|h| h.len() == want).cloned().collect();
    classes(g, &halls).len()
}

/// (E, C, D) with D read as: C, and every π-subgroup lies in some Hall subgroup.
pub fn ecd(g: &Set, subs: &[Set], pi: &[usize]) -> (bool, bool, bool) {
    let want = pi_part(g.len(), pi);
    let halls: Vec<&Set> = subs.iter().filter(|h| h.len() == want).collect();
    let e = !halls.is_empty();
    let c = e && classes(g, &halls.iter().map(|h| (*h).clone()).collect::<Vec<_>>()).len() == 1;
    let d = c
        && subs
            .iter()
            .filter(|k| is_pi_number(k.len(), pi))
            .all(|k| halls.iter().any(|h| k.is_subset(h)));
    (e, c, d)
}

pub fn is_pronormal(n: usize, g: &Set, h: &Set) -> bool {
    g.iter().all(|x| {
        let l = conj_set(h, x);
        let j = join(n, h, &l);
        j.iter().any(|y| conj_set(h, y) == l)
    })
}

pub fn is_strongly_pronormal(n: usize, g: &Set, h: &Set, subs_of_h: &[Set]) -> bool {
    subs_of_h.iter().all(|k| {
        g.iter().all(|x| {
            let kx = conj_set(k, x);
            let j = join(n, h, &kx);
            j.iter().any(|y| conj_set(&kx, y).is_subset(h))
        })
    })
}

pub fn is_normal(g: &Set, h: &Set) -> bool {
    g.iter().all(|x| conj_set(h, x) == *h)
}

pub fn normalizer(g: &Set, h: &Set) -> Set {
    g.iter().filter(|x| conj_set(h, x) == *h).cloned().collect()
}

pub fn are_conjugate(g: &Set, a: &Set, b: &Set) -> bool {
    a.len() == b.len() && g.iter().any(|x| conj_set(a, x) == *b)
}
