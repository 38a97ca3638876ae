//! Deterministic Schreier–Sims stabilizer chains.

use rustc_hash::FxHashSet;

use super::permutation::Permutation;
use crate::error::{GroupError, Result};

const NOT_IN_ORBIT: u32 = u32::MAX;

/// One level of a stabilizer chain: the basic orbit of `point` under the
/// strong generators fixing every earlier base point.
#[derive(Clone, Debug)]
pub struct Level {
    point: u32,
    gens: Vec<Permutation>,
    orbit: Vec<u32>,
    transversal: Vec<Permutation>,
    inv_transversal: Vec<Permutation>,
    slot: Vec<u32>,
    checked: FxHashSet<(u32, u32)>,
}

impl Level {
    fn new(point: u32, degree: usize) -> Self {
        let mut slot = vec![NOT_IN_ORBIT; degree];
        slot[point as usize] = 0;
        Level {
            point,
            gens: Vec::new(),
            orbit: vec![point],
            transversal: vec![Permutation::identity(degree)],
            inv_transversal: vec![Permutation::identity(degree)],
            slot,
            checked: FxHashSet::default(),
        }
    }

    // Existing transversal elements are never replaced, so Schreier
    // generators that already sifted stay valid.
    fn extend_orbit(&mut self) {
        let mut i = 0;
        while i < self.orbit.len() {
            let beta = self.orbit[i];
            for s in 0..self.gens.len() {
                let img = self.gens[s].image(beta);
                if self.slot[img as usize] == NOT_IN_ORBIT {
                    let u = self.transversal[i].then(&self.gens[s]);
                    self.slot[img as usize] = self.orbit.len() as u32;
                    self.orbit.push(img);
                    self.inv_transversal.push(u.inverse());
                    self.transversal.push(u);
                }
            }
            i += 1;
        }
    }

    pub fn base_point(&self) -> u32 {
        self.point
    }

    pub fn orbit(&self) -> &[u32] {
        &self.orbit
    }

    pub fn strong_generators(&self) -> &[Permutation] {
        &self.gens
    }

    pub fn transversal(&self) -> &[Permutation] {
        &self.transversal
    }

    /// The transversal element mapping the base point to `x`, if `x` is in the orbit.
    pub fn coset_rep(&self, x: u32) -> Option<&Permutation> {
        match self.slot[x as usize] {
            NOT_IN_ORBIT => None,
            k => Some(&self.transversal[k as usize]),
        }
    }
}

/// Base and strong generating set with explicit transversals.
#[derive(Clone, Debug)]
pub struct StabilizerChain {
    degree: usize,
    levels: Vec<Level>,
}

impl StabilizerChain {
    pub fn new(degree: usize, gens: &[Permutation]) -> Self {
        Self::with_base(degree, gens, &[])
    }

    /// Builds a chain whose base starts with `prefix`.
    pub fn with_base(degree: usize, gens: &[Permutation], prefix: &[u32]) -> Self {
        let mut chain = StabilizerChain {
            degree,
            levels: prefix.iter().map(|&b| Level::new(b, degree)).collect(),
        };
        let gens: Vec<&Permutation> = gens.iter().filter(|g| !g.is_identity()).collect();
        for g in &gens {
            if chain.levels.iter().all(|l| g.image(l.point) == l.point) {
                let b = g.first_moved_point().expect("nonidentity");
                chain.levels.push(Level::new(b, degree));
            }
        }
        for g in &gens {
            for level in chain.levels.iter_mut() {
                level.gens.push((*g).clone());
                if g.image(level.point) != level.point {
                    break;
                }
            }
        }
        for level in chain.levels.iter_mut() {
            level.extend_orbit();
        }
        chain.complete();
        chain
    }

    fn complete(&mut self) {
        let mut i = self.levels.len() as isize - 1;
        while i >= 0 {
            let li = i as usize;
            let mut dropped_to: Option<usize> = None;
            'scan: for k in 0..self.levels[li].orbit.len() {
                for s in 0..self.levels[li].gens.len() {
                    if !self.levels[li].checked.insert((k as u32, s as u32)) {
                        continue;
                    }
                    let level = &self.levels[li];
                    let beta = level.orbit[k];
                    let img = level.gens[s].image(beta);
                    let slot = level.slot[img as usize] as usize;
                    let us = level.transversal[k].then(&level.gens[s]);
                    if us == level.transversal[slot] {
                        continue;
                    }
                    let schreier = us.then(&level.inv_transversal[slot]);
                    let (residue, depth) = self.strip(schreier, li + 1);
                    if depth == self.levels.len() && residue.is_identity() {
                        continue;
                    }
                    if depth == self.levels.len() {
                        let b = residue.first_moved_point().expect("nonidentity residue");
                        self.levels.push(Level::new(b, self.degree));
                    }
                    for l in li + 1..=depth {
                        self.levels[l].gens.push(residue.clone());
                        self.levels[l].extend_orbit();
                    }
                    dropped_to = Some(depth);
                    break 'scan;
                }
            }
            match dropped_to {
                Some(d) => i = d as isize,
                None => i -= 1,
            }
        }
    }

    /// Sifts `g` from level `from`; returns the residue and the level where
    /// sifting stopped (`levels.len()` when it passed every level).
    fn strip(&self, mut g: Permutation, from: usize) -> (Permutation, usize) {
        for (idx, level) in self.levels.iter().enumerate().skip(from) {
            let b = g.image(level.point);
            let slot = level.slot[b as usize];
            if slot == NOT_IN_ORBIT {
                return (g, idx);
            }
            if slot != 0 {
                g = g.then(&level.inv_transversal[slot as usize]);
            }
        }
        (g, self.levels.len())
    }

    /// Residue of sifting `g` through the whole chain.
    pub fn sift(&self, g: &Permutation) -> (Permutation, usize) {
        self.strip(g.clone(), 0)
    }

    pub fn contains(&self, g: &Permutation) -> bool {
        if g.degree() != self.degree {
            return false;
        }
        let (res, depth) = self.sift(g);
        depth == self.levels.len() && res.is_identity()
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn levels(&self) -> &[Level] {
        &self.levels
    }

    pub fn base(&self) -> Vec<u32> {
        self.levels.iter().map(|l| l.point).collect()
    }

    /// Product of basic orbit lengths.
    pub fn order(&self) -> Result<u128> {
        self.levels.iter().try_fold(1u128, |acc, l| {
            acc.checked_mul(l.orbit.len() as u128).ok_or(GroupError::Overflow)
        })
    }

    /// Every element, each once, as products of transversal elements.
    pub fn elements(&self) -> Vec<Permutation> {
        let mut out = vec![Permutation::identity(self.degree)];
        for level in self.levels.iter().rev() {
            let mut next = Vec::with_capacity(out.len() * level.transversal.len());
            for x in &out {
                for t in &level.transversal {
                    next.push(x.then(t));
                }
            }
            out = next;
        }
        out
    }

    /// Writes `g` as `u_k ⋯ u_1 u_0` with `u_i` from level `i`; returns the
    /// transversal slots, or `None` if `g` is not in the group.
    pub fn factor(&self, g: &Permutation) -> Option<Vec<usize>> {
        let mut g = g.clone();
        let mut slots = Vec::with_capacity(self.levels.len());
        for level in &self.levels {
            let b = g.image(level.point);
            let slot = level.slot[b as usize];
            if slot == NOT_IN_ORBIT {
                return None;
            }
            g = g.then(&level.inv_transversal[slot as usize]);
            slots.push(slot as usize);
        }
        g.is_identity().then_some(slots)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str, n: usize) -> Permutation {
        Permutation::parse_cycles(s, n).unwrap()
    }

    #[test]
    fn symmetric_five_has_order_120() {
        let chain = StabilizerChain::new(5, &[p("(0 1)", 5), p("(0 1 2 3 4)", 5)]);
        assert_eq!(chain.order().unwrap(), 120);
        assert!(chain.contains(&p("(2 4)", 5)));
    }

    #[test]
    fn strong_generators_sift_to_identity() {
        let gens = [p("(0 1 2)(3 4 5)", 7), p("(1 5)(2 6)", 7), p("(0 6 3)", 7)];
        let chain = StabilizerChain::new(7, &gens);
        for level in chain.levels() {
            for s in level.strong_generators() {
                assert!(chain.contains(s));
            }
            // stored orbit equals the orbit recomputed from the level generators
            let mut orbit = vec![level.base_point()];
            let mut i = 0;
            while i < orbit.len() {
                for s in level.strong_generators() {
                    let y = s.image(orbit[i]);
                    if !orbit.contains(&y) {
                        orbit.push(y);
                    }
                }
                i += 1;
            }
            let mut stored = level.orbit().to_vec();
            orbit.sort();
            stored.sort();
            assert_eq!(orbit, stored);
        }
        assert_eq!(chain.elements().len() as u128, chain.order().unwrap());
    }

    #[test]
    fn trivial_group() {
        let chain = StabilizerChain::new(4, &[Permutation::identity(4)]);
        assert_eq!(chain.order().unwrap(), 1);
        assert!(chain.contains(&Permutation::identity(4)));
        assert!(!chain.contains(&p("(0 1)", 4)));
    }

    #[test]
    fn prescribed_base_prefix() {
        let chain = StabilizerChain::with_base(5, &[p("(0 1 2 3 4)", 5), p("(1 4)(2 3)", 5)], &[3, 0]);
        assert_eq!(&chain.base()[..2], &[3, 0]);
        assert_eq!(chain.order().unwrap(), 10);
    }

    #[test]
    fn factor_reconstructs_element() {
        let gens = [p("(0 1)", 6), p("(0 1 2 3 4 5)", 6)];
        let chain = StabilizerChain::new(6, &gens);
        let g = p("(0 4 2)(1 5)", 6);
        let slots = chain.factor(&g).unwrap();
        let mut acc = Permutation::identity(6);
        for (level, &s) in chain.levels().iter().zip(&slots).rev() {
            acc = acc.then(&level.transversal()[s]);
        }
        assert_eq!(acc, g);
    }
}
