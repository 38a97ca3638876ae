//! Regular wreath products `X ≀ Z_p`, the Hall pair built from two
//! non-conjugate Hall subgroups of `X`, and point-stabilizer embeddings.

use crate::error::{GroupError, Limits, Result};
use crate::hall::{is_prime, pi_part, PrimeSet};
use crate::perm::{DirectFactorStructure, PermGroup, Permutation};
use crate::subgroups::{is_conjugate, BlockSystem, SubgroupHandle};

use super::classical::{symmetric, verified};

/// `G = X ≀ Z_p` on `p·n` points, copy `i` of `X` on points `[i·n, (i+1)·n)`.
#[derive(Clone, Debug)]
pub struct WreathDatum {
    pub base: PermGroup,
    pub p: u64,
    pub group: PermGroup,
    /// The base group `Y = X × ⋯ × X`.
    pub y: SubgroupHandle,
    /// `(x_1, …, x_p) ↦ (x_2, …, x_p, x_1)`: sends block `i` onto block `i − 1`.
    pub tau: Permutation,
    pub blocks: BlockSystem,
}

impl WreathDatum {
    /// `x ∈ X` placed in copy `i`.
    pub fn embed(&self, x: &Permutation, i: usize) -> Permutation {
        self.blocks.embed(x, i)
    }

    /// The subgroup `S_0 × S_1 × ⋯` with `parts[i]` in copy `i`.
    pub fn product_of(&self, parts: &[&PermGroup]) -> Result<PermGroup> {
        if parts.len() != self.p as usize {
            return Err(GroupError::Precondition(format!("need {} parts", self.p)));
        }
        let gens = parts
            .iter()
            .enumerate()
            .flat_map(|(i, s)| s.generators().iter().map(move |x| (i, x)))
            .map(|(i, x)| self.embed(x, i))
            .collect();
        PermGroup::new(self.group.degree(), gens)
    }
}

/// The regular wreath product of `x` with the cyclic group of prime order `p`.
pub fn wreath_regular(x: &PermGroup, p: u64) -> Result<WreathDatum> {
    if !is_prime(p) {
        return Err(GroupError::NotPrime(p));
    }
    let n = x.degree();
    let pu = p as usize;
    let degree = n * pu;
    let blocks: Vec<Vec<u32>> = (0..pu)
        .map(|i| ((i * n) as u32..((i + 1) * n) as u32).collect())
        .collect();
    let system = BlockSystem::new(degree, blocks.clone())?;
    let tau = Permutation::from_images(
        (0..degree)
            .map(|pt| (((pt / n + pu - 1) % pu) * n + pt % n) as u32)
            .collect(),
    )?;
    let mut y_gens = Vec::new();
    let mut factor_groups = Vec::new();
    for i in 0..pu {
        let copy: Vec<Permutation> = x.generators().iter().map(|g| system.embed(g, i)).collect();
        y_gens.extend(copy.iter().cloned());
        factor_groups.push(PermGroup::new(degree, copy)?);
    }
    let x_order = x.try_order()?;
    let y_order = (0..pu).try_fold(1u128, |acc, _| acc.checked_mul(x_order).ok_or(GroupError::Overflow))?;
    let y = verified(
        PermGroup::new(degree, y_gens)?.with_factors(DirectFactorStructure {
            blocks: blocks.clone(),
            factor_groups: factor_groups.clone(),
            shift: None,
        }),
        y_order,
        "wreath base",
    )?;
    let mut g_gens: Vec<Permutation> = x.generators().iter().map(|g| system.embed(g, 0)).collect();
    g_gens.push(tau.clone());
    let g = verified(
        PermGroup::new(degree, g_gens)?.with_factors(DirectFactorStructure {
            blocks,
            factor_groups,
            shift: Some(tau.clone()),
        }),
        y_order.checked_mul(p as u128).ok_or(GroupError::Overflow)?,
        "wreath product",
    )?;
    let y = SubgroupHandle::new(&g, y)?;
    Ok(WreathDatum {
        base: x.clone(),
        p,
        group: g,
        y,
        tau,
        blocks: system,
    })
}

/// `G = X ≀ Z_p` with `H = V × U × ⋯ × U` and `K = U × ⋯ × U × V = H^τ`.
#[derive(Clone, Debug)]
pub struct Theorem3Instance {
    pub datum: WreathDatum,
    pub pi: PrimeSet,
    pub h: PermGroup,
    pub k: PermGroup,
}

/// Builds the Hall pair from non-conjugate Hall π-subgroups `u`, `v` of `x`
/// and a prime `p ∉ π`, checking every precondition.
pub fn theorem3_instance(
    x: &PermGroup,
    u: &PermGroup,
    v: &PermGroup,
    pi: &PrimeSet,
    p: u64,
    limits: &Limits,
) -> Result<Theorem3Instance> {
    if !is_prime(p) {
        return Err(GroupError::NotPrime(p));
    }
    if pi.contains(p) {
        return Err(GroupError::Precondition(format!("p = {p} lies in π = {pi}")));
    }
    let hall = pi_part(x.try_order()?, pi);
    for (name, s) in [("U", u), ("V", v)] {
        if !x.contains_group(s) || s.try_order()? != hall {
            return Err(GroupError::Precondition(format!(
                "{name} is not a Hall {pi}-subgroup of X"
            )));
        }
    }
    if is_conjugate(x, u, v, limits)?.is_some() {
        return Err(GroupError::Precondition("U and V are conjugate in X".into()));
    }
    let datum = wreath_regular(x, p)?;
    let pu = p as usize;
    let h_parts: Vec<&PermGroup> = (0..pu).map(|i| if i == 0 { v } else { u }).collect();
    let k_parts: Vec<&PermGroup> = (0..pu).map(|i| if i == pu - 1 { v } else { u }).collect();
    let h = datum.product_of(&h_parts)?;
    let k = datum.product_of(&k_parts)?;
    let g_hall = pi_part(datum.group.try_order()?, pi);
    for (name, s) in [("H", &h), ("K", &k)] {
        if s.try_order()? != g_hall || !datum.group.contains_group(s) {
            return Err(GroupError::SelfCheck(format!(
                "{name} is not a Hall {pi}-subgroup of G"
            )));
        }
    }
    if !h.conjugate(&datum.tau).same_group(&k) {
        return Err(GroupError::SelfCheck("H^τ differs from K".into()));
    }
    Ok(Theorem3Instance {
        datum,
        pi: pi.clone(),
        h,
        k,
    })
}

/// The pointwise stabilizer of `{m, …, n−1}` in Sym(n), a copy of Sym(m).
#[derive(Clone, Debug)]
pub struct StabilizerEmbedding {
    pub n: usize,
    pub m: usize,
    pub subgroup: SubgroupHandle,
    /// Whether `n/2 < m < n − 1`.
    pub in_claimed_range: bool,
}

pub fn pointwise_stabilizer_embedding(n: usize, m: usize) -> Result<StabilizerEmbedding> {
    if m == 0 || m >= n {
        return Err(GroupError::Precondition(format!(
            "need 1 ≤ m < n, got n = {n}, m = {m}"
        )));
    }
    let sym_n = symmetric(n)?;
    let sym_m = symmetric(m)?;
    let system = BlockSystem::new(n, vec![(0..m as u32).collect()])?;
    let gens = sym_m.generators().iter().map(|g| system.embed(g, 0)).collect();
    let sub = verified(PermGroup::new(n, gens)?, sym_m.order(), "point stabilizer")?;
    Ok(StabilizerEmbedding {
        n,
        m,
        subgroup: SubgroupHandle::new(&sym_n, sub)?,
        in_claimed_range: 2 * m > n && m + 1 < n,
    })
}
