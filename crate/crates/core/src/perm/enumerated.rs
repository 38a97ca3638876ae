//! Fully enumerated groups: elements indexed by lexicographic rank, with
//! subgroups held as sorted index sets.
//!
//! Everything the exhaustive searches do (closures, conjugacy orbits of
//! subgroups, transversals, normalizers) runs on element indices here. The
//! identity is always index 0 because it is the lexicographically least
//! permutation.

use std::hash::{Hash, Hasher};

use fixedbitset::FixedBitSet;
use rustc_hash::FxHashMap;
use smallvec::SmallVec;

use super::group::PermGroup;
use super::permutation::Permutation;
use crate::error::{GroupError, Limits, Result};

/// Groups up to this order get a full multiplication table.
const TABLE_LIMIT: usize = 2048;

pub type Elem = u32;

/// A subgroup of an enumerated group: sorted element indices plus generators.
#[derive(Clone, Debug)]
pub struct Sub {
    elems: Vec<Elem>,
    gens: Vec<Elem>,
}

impl Sub {
    pub fn order(&self) -> usize {
        self.elems.len()
    }

    pub fn elems(&self) -> &[Elem] {
        &self.elems
    }

    pub fn gens(&self) -> &[Elem] {
        &self.gens
    }

    #[inline]
    pub fn contains(&self, x: Elem) -> bool {
        self.elems.binary_search(&x).is_ok()
    }

    pub fn is_subset_of(&self, other: &Sub) -> bool {
        self.order() <= other.order()
            && other.order().is_multiple_of(self.order())
            && self.gens.iter().all(|&g| other.contains(g))
    }

    pub fn is_trivial(&self) -> bool {
        self.elems.len() == 1
    }
}

impl PartialEq for Sub {
    fn eq(&self, other: &Self) -> bool {
        self.elems == other.elems
    }
}

impl Eq for Sub {}

impl Hash for Sub {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.elems.hash(state)
    }
}

/// A group with all of its elements listed in lexicographic order.
pub struct Enumerated {
    degree: usize,
    elems: Vec<Permutation>,
    index: FxHashMap<Permutation, Elem>,
    inverse: Vec<Elem>,
    orders: Vec<u32>,
    table: Option<Vec<u16>>,
    gens: Vec<Elem>,
}

impl Enumerated {
    pub fn new(group: &PermGroup, limits: &Limits) -> Result<Self> {
        let elems = group.elements(limits)?;
        Ok(Self::from_sorted(group.degree(), elems, group.generators()))
    }

    fn from_sorted(degree: usize, elems: Vec<Permutation>, generators: &[Permutation]) -> Self {
        let index: FxHashMap<Permutation, Elem> =
            elems.iter().enumerate().map(|(i, p)| (p.clone(), i as Elem)).collect();
        let inverse = elems.iter().map(|p| index[&p.inverse()]).collect();
        let orders = elems.iter().map(|p| p.order() as u32).collect();
        let mut gens: Vec<Elem> = generators.iter().map(|g| index[g]).filter(|&g| g != 0).collect();
        gens.dedup();
        let mut amb = Enumerated {
            degree,
            elems,
            index,
            inverse,
            orders,
            table: None,
            gens,
        };
        if amb.len() <= TABLE_LIMIT {
            amb.table = Some(amb.build_table());
        }
        amb
    }

    fn build_table(&self) -> Vec<u16> {
        let n = self.len();
        let rmaps: Vec<Vec<Elem>> = self
            .gens
            .iter()
            .map(|&s| (0..n as Elem).map(|a| self.mul_by_lookup(a, s)).collect())
            .collect();
        // spanning tree of the Cayley graph: every element is parent * generator
        let mut tree = vec![(0u32, 0u32); n];
        let mut seen = FixedBitSet::with_capacity(n);
        seen.insert(0);
        let mut bfs = vec![0 as Elem];
        let mut i = 0;
        while i < bfs.len() {
            let x = bfs[i];
            for (gi, rmap) in rmaps.iter().enumerate() {
                let y = rmap[x as usize];
                if !seen.put(y as usize) {
                    tree[y as usize] = (x, gi as u32);
                    bfs.push(y);
                }
            }
            i += 1;
        }
        debug_assert_eq!(bfs.len(), n);
        let mut table = vec![0u16; n * n];
        for a in 0..n {
            let row = &mut table[a * n..(a + 1) * n];
            row[0] = a as u16;
            for &c in &bfs[1..] {
                let (parent, gi) = tree[c as usize];
                row[c as usize] = rmaps[gi as usize][row[parent as usize] as usize] as u16;
            }
        }
        table
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn len(&self) -> usize {
        self.elems.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elems.is_empty()
    }

    pub fn perm(&self, x: Elem) -> &Permutation {
        &self.elems[x as usize]
    }

    pub fn perms(&self, xs: &[Elem]) -> Vec<Permutation> {
        xs.iter().map(|&x| self.perm(x).clone()).collect()
    }

    pub fn index_of(&self, p: &Permutation) -> Option<Elem> {
        self.index.get(p.images()).copied()
    }

    pub fn generators(&self) -> &[Elem] {
        &self.gens
    }

    #[inline]
    fn mul_by_lookup(&self, a: Elem, b: Elem) -> Elem {
        let pa = &self.elems[a as usize];
        let pb = &self.elems[b as usize];
        let buf: SmallVec<[u32; 64]> = pa.images().iter().map(|&x| pb.image(x)).collect();
        self.index[&buf[..]]
    }

    #[inline]
    pub fn mul(&self, a: Elem, b: Elem) -> Elem {
        match &self.table {
            Some(t) => t[a as usize * self.elems.len() + b as usize] as Elem,
            None => self.mul_by_lookup(a, b),
        }
    }

    #[inline]
    pub fn inv(&self, a: Elem) -> Elem {
        self.inverse[a as usize]
    }

    /// `g⁻¹ a g`.
    #[inline]
    pub fn conj(&self, a: Elem, g: Elem) -> Elem {
        self.mul(self.mul(self.inverse[g as usize], a), g)
    }

    pub fn order_of(&self, a: Elem) -> u32 {
        self.orders[a as usize]
    }

    pub fn pow(&self, a: Elem, mut e: u64) -> Elem {
        let mut base = a;
        let mut acc = 0;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    pub fn whole(&self) -> Sub {
        Sub {
            elems: (0..self.len() as Elem).collect(),
            gens: self.gens.clone(),
        }
    }

    pub fn trivial(&self) -> Sub {
        Sub {
            elems: vec![0],
            gens: Vec::new(),
        }
    }

    /// Subgroup generated by the given permutations, which must be elements.
    pub fn sub_from_perms(&self, gens: &[Permutation]) -> Result<Sub> {
        let idx = gens
            .iter()
            .map(|g| {
                self.index_of(g)
                    .ok_or_else(|| GroupError::NotSubgroup(format!("{g} is not in the group")))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(self.closure(&idx))
    }

    pub fn to_group(&self, sub: &Sub) -> PermGroup {
        PermGroup::new(self.degree, self.perms(&sub.gens)).expect("consistent degree")
    }

    pub fn closure(&self, gens: &[Elem]) -> Sub {
        let mut gens: Vec<Elem> = gens.iter().copied().filter(|&g| g != 0).collect();
        gens.sort_unstable();
        gens.dedup();
        let mut seen = FixedBitSet::with_capacity(self.len());
        seen.insert(0);
        let mut elems = vec![0 as Elem];
        let mut i = 0;
        while i < elems.len() {
            let x = elems[i];
            for &s in &gens {
                let y = self.mul(x, s);
                if !seen.put(y as usize) {
                    elems.push(y);
                }
            }
            i += 1;
        }
        elems.sort_unstable();
        Sub { elems, gens }
    }

    /// Subgroup generated by a set of elements, with a greedily reduced generating set.
    pub fn sub_from_elems(&self, elems: Vec<Elem>) -> Sub {
        let mut elems = elems;
        elems.sort_unstable();
        elems.dedup();
        let mut current = self.trivial();
        for &x in &elems {
            if !current.contains(x) {
                current = self.join(&current, &[x]);
            }
        }
        debug_assert_eq!(current.elems, elems);
        current
    }

    pub fn join(&self, h: &Sub, extra: &[Elem]) -> Sub {
        self.join_bounded(h, extra, usize::MAX).expect("unbounded join")
    }

    /// `⟨h, extra⟩`, built as a union of right cosets of `h`; gives up as
    /// soon as the result would exceed `bound` elements.
    pub fn join_bounded(&self, h: &Sub, extra: &[Elem], bound: usize) -> Option<Sub> {
        let mut new_gens: Vec<Elem> = Vec::new();
        for &x in extra {
            if !h.contains(x) && !new_gens.contains(&x) {
                new_gens.push(x);
            }
        }
        if new_gens.is_empty() {
            return Some(h.clone());
        }
        let mut gens = h.gens.clone();
        gens.extend(new_gens);
        let mut seen = FixedBitSet::with_capacity(self.len());
        for &x in &h.elems {
            seen.insert(x as usize);
        }
        let mut elems = h.elems.clone();
        let mut reps = vec![0 as Elem];
        let mut r = 0;
        while r < reps.len() {
            let rep = reps[r];
            for &s in &gens {
                let y = self.mul(rep, s);
                if seen.contains(y as usize) {
                    continue;
                }
                if elems.len() + h.order() > bound {
                    return None;
                }
                for &x in &h.elems {
                    let z = self.mul(x, y);
                    seen.insert(z as usize);
                    elems.push(z);
                }
                reps.push(y);
            }
            r += 1;
        }
        elems.sort_unstable();
        Some(Sub { elems, gens })
    }

    pub fn intersection(&self, a: &Sub, b: &Sub) -> Sub {
        let (small, big) = if a.order() <= b.order() { (a, b) } else { (b, a) };
        let common: Vec<Elem> = small.elems.iter().copied().filter(|&x| big.contains(x)).collect();
        self.sub_from_elems(common)
    }

    /// Sorted element set of `set^g`.
    pub fn conj_set(&self, set: &[Elem], g: Elem) -> Vec<Elem> {
        let gi = self.inverse[g as usize];
        let mut out: Vec<Elem> = set.iter().map(|&x| self.mul(self.mul(gi, x), g)).collect();
        out.sort_unstable();
        out
    }

    pub fn conj_sub(&self, h: &Sub, g: Elem) -> Sub {
        Sub {
            elems: self.conj_set(&h.elems, g),
            gens: h.gens.iter().map(|&x| self.conj(x, g)).collect(),
        }
    }

    pub fn normalizes(&self, g: Elem, h: &Sub) -> bool {
        h.gens.iter().all(|&x| h.contains(self.conj(x, g)))
    }

    pub fn is_normal_in(&self, within: &Sub, h: &Sub) -> bool {
        within.gens.iter().all(|&g| self.normalizes(g, h))
    }

    /// `N_within(h)` by scanning the elements of `within`.
    pub fn normalizer(&self, within: &Sub, h: &Sub) -> Sub {
        let elems: Vec<Elem> = within
            .elems
            .iter()
            .copied()
            .filter(|&g| self.normalizes(g, h))
            .collect();
        self.sub_from_elems(elems)
    }

    /// Lexicographically least representative of every right coset `h·g` in
    /// `within`, in increasing order (identity first).
    pub fn right_transversal(&self, within: &Sub, h: &Sub) -> Vec<Elem> {
        let mut marked = FixedBitSet::with_capacity(self.len());
        let mut reps = Vec::with_capacity(within.order() / h.order().max(1));
        for &x in &within.elems {
            if marked.contains(x as usize) {
                continue;
            }
            reps.push(x);
            for &y in &h.elems {
                marked.insert(self.mul(y, x) as usize);
            }
        }
        reps
    }

    /// Conjugacy class of `h` under `acting`, each member with a conjugating
    /// element; the first entry is `h` itself with the identity.
    pub fn conjugacy_orbit(&self, acting: &[Elem], h: &Sub) -> Vec<(Sub, Elem)> {
        let mut seen: FxHashMap<Vec<Elem>, ()> = FxHashMap::default();
        seen.insert(h.elems.clone(), ());
        let mut orbit = vec![(h.clone(), 0 as Elem)];
        let mut i = 0;
        while i < orbit.len() {
            for &g in acting {
                let c = self.conj_set(&orbit[i].0.elems, g);
                if seen.contains_key(&c) {
                    continue;
                }
                seen.insert(c.clone(), ());
                let w = self.mul(orbit[i].1, g);
                let gens = h.gens.iter().map(|&x| self.conj(x, w)).collect();
                orbit.push((Sub { elems: c, gens }, w));
            }
            i += 1;
        }
        orbit
    }

    /// Some `x ∈ ⟨acting⟩` with `h^x = k`, found by breadth-first search over
    /// the conjugates of `h`.
    pub fn find_conjugator(&self, acting: &[Elem], h: &Sub, k: &Sub) -> Option<Elem> {
        if h.order() != k.order() {
            return None;
        }
        self.orbit_search(acting, h, |c| c == k.elems.as_slice())
    }

    /// Some `x ∈ ⟨acting⟩` with `k^x ≤ h`.
    pub fn find_conjugate_into(&self, acting: &[Elem], k: &Sub, h: &Sub) -> Option<Elem> {
        if !h.order().is_multiple_of(k.order()) {
            return None;
        }
        self.orbit_search(acting, k, |c| c.iter().all(|&x| h.contains(x)))
    }

    fn orbit_search(&self, acting: &[Elem], start: &Sub, hit: impl Fn(&[Elem]) -> bool) -> Option<Elem> {
        if hit(&start.elems) {
            return Some(0);
        }
        let mut seen: FxHashMap<Vec<Elem>, ()> = FxHashMap::default();
        seen.insert(start.elems.clone(), ());
        let mut queue = vec![(start.elems.clone(), 0 as Elem)];
        let mut i = 0;
        while i < queue.len() {
            for &g in acting {
                let c = self.conj_set(&queue[i].0, g);
                if seen.contains_key(&c) {
                    continue;
                }
                let w = self.mul(queue[i].1, g);
                if hit(&c) {
                    return Some(w);
                }
                seen.insert(c.clone(), ());
                queue.push((c, w));
            }
            i += 1;
        }
        None
    }

    /// Elements of `within` whose order is a power of `p` (including the identity).
    pub fn p_elements<'a>(&'a self, within: &'a Sub, p: u64) -> impl Iterator<Item = Elem> + 'a {
        within
            .elems
            .iter()
            .copied()
            .filter(move |&x| is_power_of(self.orders[x as usize] as u64, p))
    }

    pub fn cyclic(&self, x: Elem) -> Sub {
        self.closure(&[x])
    }
}

pub(crate) fn is_power_of(mut n: u64, p: u64) -> bool {
    while n.is_multiple_of(p) {
        n /= p;
    }
    n == 1
}
