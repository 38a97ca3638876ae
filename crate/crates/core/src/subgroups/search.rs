//! Subgroup-level operations on `PermGroup`s: normality, normalizers,
//! Sylow subgroups, subgroup listing and conjugacy search with witnesses.

use crate::error::{GroupError, Limits, Result};
use crate::hall::{pi_part, PrimeSet};
use crate::perm::{Elem, Enumerated, PermGroup, Permutation, Sub};

use super::blocks::BlockSystem;
use super::lattice::{subgroup_classes, sylow_in};

/// A subgroup together with the group it was checked to lie in.
#[derive(Clone, Debug)]
pub struct SubgroupHandle {
    parent: PermGroup,
    group: PermGroup,
}

impl SubgroupHandle {
    pub fn new(parent: &PermGroup, group: PermGroup) -> Result<Self> {
        if !parent.contains_group(&group) {
            return Err(GroupError::NotSubgroup("generators do not lie in the parent".into()));
        }
        Ok(SubgroupHandle {
            parent: parent.clone(),
            group,
        })
    }

    pub fn parent(&self) -> &PermGroup {
        &self.parent
    }

    pub fn group(&self) -> &PermGroup {
        &self.group
    }

    pub fn order(&self) -> u128 {
        self.group.order()
    }

    pub fn into_group(self) -> PermGroup {
        self.group
    }
}

/// An element `x` with `source^x = target`, or with `source^x ≤ target`
/// when `into` is set.
#[derive(Clone, Debug)]
pub struct ConjugacyWitness {
    pub element: Permutation,
    pub source: PermGroup,
    pub target: PermGroup,
    pub into: bool,
}

impl ConjugacyWitness {
    /// Re-checks the witness from scratch.
    pub fn replay(&self) -> bool {
        let lands = self
            .source
            .generators()
            .iter()
            .all(|h| self.target.contains(&h.conjugate_by(&self.element)));
        let (s, t) = (self.source.order(), self.target.order());
        lands && if self.into { t % s == 0 } else { s == t }
    }

    /// The witness for the reverse direction of an equality witness.
    pub fn reversed(&self) -> ConjugacyWitness {
        assert!(!self.into, "only equality witnesses reverse");
        ConjugacyWitness {
            element: self.element.inverse(),
            source: self.target.clone(),
            target: self.source.clone(),
            into: false,
        }
    }
}

fn check_sub(g: &PermGroup, h: &PermGroup) -> Result<()> {
    if g.contains_group(h) {
        Ok(())
    } else {
        Err(GroupError::NotSubgroup(format!("{h:?} is not a subgroup")))
    }
}

/// True when `a` is normal in `g`.
pub fn is_normal(g: &PermGroup, a: &PermGroup) -> Result<bool> {
    g.is_normal(a)
}

/// `N_g(h)`, by scanning `g` or block by block for direct products.
pub fn normalizer(g: &PermGroup, h: &PermGroup, limits: &Limits) -> Result<SubgroupHandle> {
    check_sub(g, h)?;
    if g.try_order()? <= limits.enum_cap {
        let amb = Enumerated::new(g, limits)?;
        let hs = amb.sub_from_perms(h.generators())?;
        let n = amb.normalizer(&amb.whole(), &hs);
        return SubgroupHandle::new(g, amb.to_group(&n));
    }
    if let Some(blocks) = BlockSystem::of_group(g) {
        if let (Some(gl), Some(hl)) = (blocks.local_factors(g), blocks.local_factors(h)) {
            let mut gens = Vec::new();
            for (i, (gi, hi)) in gl.iter().zip(&hl).enumerate() {
                let ni = normalizer(gi, hi, limits)?;
                gens.extend(ni.group().generators().iter().map(|x| blocks.embed(x, i)));
            }
            return SubgroupHandle::new(g, PermGroup::new(g.degree(), gens)?);
        }
    }
    Err(GroupError::CapExceeded {
        cap: "enumeration cap",
        value: g.try_order()?,
        limit: limits.enum_cap,
    })
}

/// A Sylow `p`-subgroup of `g`.
pub fn sylow(g: &PermGroup, p: u64, limits: &Limits) -> Result<SubgroupHandle> {
    let target = pi_part(g.try_order()?, &PrimeSet::new([p])?);
    if target == 1 {
        return SubgroupHandle::new(g, PermGroup::trivial(g.degree()));
    }
    if g.try_order()? <= limits.enum_cap {
        let amb = Enumerated::new(g, limits)?;
        let s = sylow_in(&amb, &amb.whole(), p);
        return SubgroupHandle::new(g, amb.to_group(&s));
    }
    if let Some(blocks) = BlockSystem::of_group(g) {
        if let Some(gl) = blocks.local_factors(g) {
            let mut gens = Vec::new();
            for (i, gi) in gl.iter().enumerate() {
                let si = sylow(gi, p, limits)?;
                gens.extend(si.group().generators().iter().map(|x| blocks.embed(x, i)));
            }
            return SubgroupHandle::new(g, PermGroup::new(g.degree(), gens)?);
        }
    }
    Err(GroupError::CapExceeded {
        cap: "enumeration cap",
        value: g.try_order()?,
        limit: limits.enum_cap,
    })
}

/// Every subgroup of `g` exactly once, or only the π-subgroups when `pi` is
/// given; ordered by order, then by conjugacy class, then by element set.
pub fn all_subgroups(g: &PermGroup, pi: Option<&PrimeSet>, limits: &Limits) -> Result<Vec<SubgroupHandle>> {
    let order = g.try_order()?;
    limits.check_subgroups(order)?;
    let amb = Enumerated::new(g, limits)?;
    let bound = pi.map(|pi| pi_part(order, pi));
    let classes = subgroup_classes(&amb, &amb.whole(), bound, limits)?;
    let mut out = Vec::new();
    for class in classes {
        for m in class.members {
            let sub = amb.sub_from_elems(m);
            out.push(SubgroupHandle::new(g, amb.to_group(&sub))?);
        }
    }
    Ok(out)
}

/// Least element of `within` (in lexicographic order) conjugating `h` onto `k`.
///
/// The conjugators form one coset `N·x` of `N = N_within(h)`, so the answer is
/// the transversal representative of that coset.
pub fn least_conjugator(amb: &Enumerated, within: &Sub, h: &Sub, k: &Sub) -> Option<Elem> {
    if h.order() != k.order() {
        return None;
    }
    if h == k {
        return Some(0);
    }
    let n = amb.normalizer(within, h);
    amb.right_transversal(within, &n)
        .into_iter()
        .find(|&t| h.gens().iter().all(|&x| k.contains(amb.conj(x, t))))
}

/// Least element `x` of `within` with `k^x ≤ h`.
pub fn least_conjugate_into(amb: &Enumerated, within: &Sub, k: &Sub, h: &Sub) -> Option<Elem> {
    if !h.order().is_multiple_of(k.order()) {
        return None;
    }
    within
        .elems()
        .iter()
        .copied()
        .find(|&x| k.gens().iter().all(|&y| h.contains(amb.conj(y, x))))
}

/// Outcome of a per-block conjugacy decision.
#[derive(Clone, Debug)]
pub enum BlockwiseOutcome {
    /// Some group is not a product along the blocks.
    NotApplicable,
    Conjugate(ConjugacyWitness),
    /// The local parts in this block are not conjugate in the local factor.
    NotConjugate {
        block: usize,
    },
}

/// Decides whether `h` and `k` are conjugate in `g` one block at a time.
///
/// Valid when the generators of all three groups each move points of a
/// single block, so that each group is the direct product of its local parts.
pub fn is_conjugate_blockwise(
    blocks: &BlockSystem,
    g: &PermGroup,
    h: &PermGroup,
    k: &PermGroup,
    limits: &Limits,
) -> Result<BlockwiseOutcome> {
    let (Some(gl), Some(hl), Some(kl)) = (
        blocks.local_factors(g),
        blocks.local_factors(h),
        blocks.local_factors(k),
    ) else {
        return Ok(BlockwiseOutcome::NotApplicable);
    };
    let mut element = Permutation::identity(g.degree());
    for (i, ((gi, hi), ki)) in gl.iter().zip(&hl).zip(&kl).enumerate() {
        let amb = Enumerated::new(gi, limits)?;
        let hs = amb.sub_from_perms(hi.generators())?;
        let ks = amb.sub_from_perms(ki.generators())?;
        match least_conjugator(&amb, &amb.whole(), &hs, &ks) {
            Some(x) => element = element.then(&blocks.embed(amb.perm(x), i)),
            None => return Ok(BlockwiseOutcome::NotConjugate { block: i }),
        }
    }
    Ok(BlockwiseOutcome::Conjugate(ConjugacyWitness {
        element,
        source: h.clone(),
        target: k.clone(),
        into: false,
    }))
}

/// Conjugacy by scanning a right transversal of `N_g(h)` in the enumerated `g`.
pub fn is_conjugate_by_transversal(
    g: &PermGroup,
    h: &PermGroup,
    k: &PermGroup,
    limits: &Limits,
) -> Result<Option<ConjugacyWitness>> {
    check_sub(g, h)?;
    check_sub(g, k)?;
    if h.try_order()? != k.try_order()? {
        return Ok(None);
    }
    let amb = Enumerated::new(g, limits)?;
    let hs = amb.sub_from_perms(h.generators())?;
    let ks = amb.sub_from_perms(k.generators())?;
    Ok(
        least_conjugator(&amb, &amb.whole(), &hs, &ks).map(|x| ConjugacyWitness {
            element: amb.perm(x).clone(),
            source: h.clone(),
            target: k.clone(),
            into: false,
        }),
    )
}

/// Some `x ∈ g` with `h^x = k`; the lexicographically least one.
pub fn is_conjugate(g: &PermGroup, h: &PermGroup, k: &PermGroup, limits: &Limits) -> Result<Option<ConjugacyWitness>> {
    check_sub(g, h)?;
    check_sub(g, k)?;
    if h.try_order()? != k.try_order()? {
        return Ok(None);
    }
    if let Some(blocks) = BlockSystem::of_group(g) {
        match is_conjugate_blockwise(&blocks, g, h, k, limits)? {
            BlockwiseOutcome::Conjugate(w) => return Ok(Some(w)),
            BlockwiseOutcome::NotConjugate { .. } => return Ok(None),
            BlockwiseOutcome::NotApplicable => {}
        }
    }
    is_conjugate_by_transversal(g, h, k, limits)
}

/// Some `x ∈ m` with `k^x ≤ h`; the lexicographically least one.
pub fn conjugate_into(
    m: &PermGroup,
    k: &PermGroup,
    h: &PermGroup,
    limits: &Limits,
) -> Result<Option<ConjugacyWitness>> {
    check_sub(m, k)?;
    check_sub(m, h)?;
    let amb = Enumerated::new(m, limits)?;
    let ks = amb.sub_from_perms(k.generators())?;
    let hs = amb.sub_from_perms(h.generators())?;
    Ok(
        least_conjugate_into(&amb, &amb.whole(), &ks, &hs).map(|x| ConjugacyWitness {
            element: amb.perm(x).clone(),
            source: k.clone(),
            target: h.clone(),
            into: true,
        }),
    )
}
