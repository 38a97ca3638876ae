use std::fmt;
use std::sync::{Arc, OnceLock};

use super::chain::StabilizerChain;
use super::permutation::Permutation;
use crate::error::{GroupError, Limits, Result};

/// Record of a direct-product decomposition of the support into blocks.
#[derive(Clone, Debug)]
pub struct DirectFactorStructure {
    /// Pairwise disjoint point sets covering the support.
    pub blocks: Vec<Vec<u32>>,
    /// One group per block, acting on the full degree but supported in its block.
    pub factor_groups: Vec<PermGroup>,
    /// Cyclic shift of the blocks, present for regular wreath products.
    pub shift: Option<Permutation>,
}

/// A permutation group given by generators, with a lazily built stabilizer chain.
#[derive(Clone)]
pub struct PermGroup {
    degree: usize,
    generators: Vec<Permutation>,
    chain: Arc<OnceLock<StabilizerChain>>,
    factors: Option<Arc<DirectFactorStructure>>,
}

impl PermGroup {
    pub fn new(degree: usize, generators: Vec<Permutation>) -> Result<Self> {
        if degree == 0 {
            return Err(GroupError::Precondition("degree must be positive".into()));
        }
        for g in &generators {
            if g.degree() != degree {
                return Err(GroupError::DegreeMismatch(degree, g.degree()));
            }
        }
        Ok(PermGroup {
            degree,
            generators,
            chain: Arc::new(OnceLock::new()),
            factors: None,
        })
    }

    pub fn trivial(degree: usize) -> Self {
        PermGroup::new(degree.max(1), Vec::new()).expect("trivial group")
    }

    pub(crate) fn from_chain(degree: usize, generators: Vec<Permutation>, chain: StabilizerChain) -> Self {
        let cell = OnceLock::new();
        let _ = cell.set(chain);
        PermGroup {
            degree,
            generators,
            chain: Arc::new(cell),
            factors: None,
        }
    }

    pub fn with_factors(mut self, factors: DirectFactorStructure) -> Self {
        self.factors = Some(Arc::new(factors));
        self
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.generators
    }

    pub fn factors(&self) -> Option<&DirectFactorStructure> {
        self.factors.as_deref()
    }

    pub fn chain(&self) -> &StabilizerChain {
        self.chain
            .get_or_init(|| StabilizerChain::new(self.degree, &self.generators))
    }

    pub fn order(&self) -> u128 {
        self.chain().order().expect("group order exceeds 128 bits")
    }

    pub fn try_order(&self) -> Result<u128> {
        self.chain().order()
    }

    pub fn contains(&self, p: &Permutation) -> bool {
        p.degree() == self.degree && self.chain().contains(p)
    }

    pub fn is_trivial(&self) -> bool {
        self.generators.iter().all(|g| g.is_identity())
    }

    /// True when every generator of `other` lies in `self`.
    pub fn contains_group(&self, other: &PermGroup) -> bool {
        other.degree == self.degree && other.generators.iter().all(|g| self.contains(g))
    }

    pub fn same_group(&self, other: &PermGroup) -> bool {
        self.contains_group(other) && other.contains_group(self)
    }

    /// Every element, sorted lexicographically by image sequence.
    pub fn elements(&self, limits: &Limits) -> Result<Vec<Permutation>> {
        limits.check_enum(self.try_order()?)?;
        let mut els = self.chain().elements();
        els.sort_unstable();
        Ok(els)
    }

    /// Orbit of `point`, sorted.
    pub fn orbit(&self, point: u32) -> Vec<u32> {
        let mut seen = vec![false; self.degree];
        let mut orbit = vec![point];
        seen[point as usize] = true;
        let mut i = 0;
        while i < orbit.len() {
            for g in &self.generators {
                let y = g.image(orbit[i]);
                if !seen[y as usize] {
                    seen[y as usize] = true;
                    orbit.push(y);
                }
            }
            i += 1;
        }
        orbit.sort_unstable();
        orbit
    }

    pub fn is_transitive(&self) -> bool {
        self.orbit(0).len() == self.degree
    }

    /// Subgroup generated by `gens`, which must lie in `self`.
    pub fn subgroup(&self, gens: Vec<Permutation>) -> Result<PermGroup> {
        let sub = PermGroup::new(self.degree, gens)?;
        if let Some(g) = sub.generators.iter().find(|g| !self.contains(g)) {
            return Err(GroupError::NotSubgroup(format!("{g} is not in the group")));
        }
        Ok(sub)
    }

    /// Group generated by `self` and the extra generators.
    pub fn join(&self, extra: &[Permutation]) -> Result<PermGroup> {
        let mut gens = self.generators.clone();
        gens.extend_from_slice(extra);
        PermGroup::new(self.degree, gens)
    }

    /// Conjugate subgroup `self^g = g⁻¹ self g`.
    pub fn conjugate(&self, g: &Permutation) -> PermGroup {
        let gens = self.generators.iter().map(|h| h.conjugate_by(g)).collect();
        PermGroup::new(self.degree, gens).expect("same degree")
    }

    /// Right transversal of `h` in `self`: one representative per right
    /// coset `h·g`, each the lexicographically least in its coset, identity first.
    pub fn right_transversal(&self, h: &PermGroup, limits: &Limits) -> Result<Vec<Permutation>> {
        if !self.contains_group(h) {
            return Err(GroupError::NotSubgroup("transversal of a non-subgroup".into()));
        }
        let amb = super::Enumerated::new(self, limits)?;
        let whole = amb.whole();
        let sub = amb.sub_from_perms(h.generators())?;
        Ok(amb
            .right_transversal(&whole, &sub)
            .into_iter()
            .map(|x| amb.perm(x).clone())
            .collect())
    }

    /// Smallest normal subgroup of `self` containing `s`.
    pub fn normal_closure(&self, s: &[Permutation]) -> Result<PermGroup> {
        if let Some(x) = s.iter().find(|x| !self.contains(x)) {
            return Err(GroupError::NotSubgroup(format!("{x} is not in the group")));
        }
        let mut gens: Vec<Permutation> = s.iter().filter(|x| !x.is_identity()).cloned().collect();
        let mut chain = StabilizerChain::new(self.degree, &gens);
        let mut i = 0;
        while i < gens.len() {
            for g in &self.generators {
                let c = gens[i].conjugate_by(g);
                if !chain.contains(&c) {
                    gens.push(c);
                    chain = StabilizerChain::new(self.degree, &gens);
                }
            }
            i += 1;
        }
        Ok(PermGroup::from_chain(self.degree, gens, chain))
    }

    /// True when `a` is a normal subgroup.
    pub fn is_normal(&self, a: &PermGroup) -> Result<bool> {
        if !self.contains_group(a) {
            return Err(GroupError::NotSubgroup("normality test of a non-subgroup".into()));
        }
        Ok(a.generators
            .iter()
            .all(|x| self.generators.iter().all(|g| a.contains(&x.conjugate_by(g)))))
    }

    pub fn derived_subgroup(&self) -> PermGroup {
        let mut comms = Vec::new();
        for (i, a) in self.generators.iter().enumerate() {
            for b in &self.generators[i + 1..] {
                let c = a.inverse().then(&b.inverse()).then(a).then(b);
                if !c.is_identity() {
                    comms.push(c);
                }
            }
        }
        self.normal_closure(&comms).expect("commutators lie in the group")
    }

    pub fn is_solvable(&self) -> bool {
        let mut g = self.clone();
        loop {
            if g.order() == 1 {
                return true;
            }
            let d = g.derived_subgroup();
            if d.order() == g.order() {
                return false;
            }
            g = d;
        }
    }

    pub fn is_abelian(&self) -> bool {
        self.generators
            .iter()
            .enumerate()
            .all(|(i, a)| self.generators[i + 1..].iter().all(|b| a.then(b) == b.then(a)))
    }
}

impl fmt::Debug for PermGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "PermGroup(degree {}, <", self.degree)?;
        for (i, g) in self.generators.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{g}")?;
        }
        write!(f, ">)")
    }
}
