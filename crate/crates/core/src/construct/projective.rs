//! PSL₂(q) acting on the projective line, and subfield embeddings.
//!
//! Points `0..q` are field elements in the encoding of `FiniteField`; point
//! `q` is ∞.

use crate::error::{GroupError, Result};
use crate::perm::{gcd, GroupHom, PermGroup, Permutation, StabilizerChain};

use super::field::FiniteField;

/// The Möbius map `x ↦ (a x + b) / (c x + d)` as a permutation of the q + 1 points.
pub fn mobius(f: &FiniteField, a: u32, b: u32, c: u32, d: u32) -> Result<Permutation> {
    let q = f.order() as u32;
    if f.sub(f.mul(a, d), f.mul(b, c)) == 0 {
        return Err(GroupError::Precondition("singular Möbius map".into()));
    }
    let apply = |num: u32, den: u32| {
        if den == 0 {
            q
        } else {
            f.mul(num, f.inv(den).expect("nonzero"))
        }
    };
    let mut images = Vec::with_capacity(q as usize + 1);
    for x in 0..q {
        images.push(apply(f.add(f.mul(a, x), b), f.add(f.mul(c, x), d)));
    }
    images.push(if c == 0 { q } else { apply(a, c) });
    Permutation::from_images(images)
}

/// Coefficients `(a, b, c, d)` of the three generating maps over `f`:
/// `x + 1`, `s·x`, `−1/x`, with `s` primitive (q even) or a primitive square (q odd).
fn generator_maps(f: &FiniteField) -> [[u32; 4]; 3] {
    let s = if f.characteristic() == 2 {
        f.primitive()
    } else {
        f.pow(f.primitive(), 2)
    };
    [[1, 1, 0, 1], [s, 0, 0, 1], [0, f.neg(1), 1, 0]]
}

/// Order of PSL₂(q): q(q² − 1) / gcd(2, q − 1).
pub fn psl2_order(q: u128) -> u128 {
    q * (q * q - 1) / gcd(2, q - 1)
}

/// PSL₂(q) on q + 1 points, checked to have the right order and to be
/// 2-transitive.
pub fn psl2(q: usize) -> Result<PermGroup> {
    let f = FiniteField::new(q)?;
    let gens = generator_maps(&f)
        .iter()
        .map(|&[a, b, c, d]| mobius(&f, a, b, c, d))
        .collect::<Result<Vec<_>>>()?;
    let chain = StabilizerChain::with_base(q + 1, &gens, &[0, 1]);
    let order = chain.order()?;
    let expected = psl2_order(q as u128);
    if order != expected {
        return Err(GroupError::SelfCheck(format!(
            "psl2({q}): order {order}, expected {expected}"
        )));
    }
    let levels = chain.levels();
    let two_transitive = levels.len() >= 2
        && levels[0].base_point() == 0
        && levels[0].orbit().len() == q + 1
        && levels[1].base_point() == 1
        && levels[1].orbit().len() == q;
    if !two_transitive {
        return Err(GroupError::SelfCheck(format!("psl2({q}) is not 2-transitive")));
    }
    Ok(PermGroup::from_chain(q + 1, gens, chain))
}

/// SL₂(q) for even q, where it coincides with PSL₂(q).
pub fn sl2(q: usize) -> Result<PermGroup> {
    if !q.is_multiple_of(2) {
        return Err(GroupError::Precondition(format!(
            "SL2({q}) does not act faithfully on the projective line"
        )));
    }
    psl2(q)
}

/// The field embedding GF(q0) → GF(q) sending the generator `t` of GF(q0) to
/// the root of its modulus in GF(q) with the least discrete logarithm.
pub fn subfield_map(small: &FiniteField, big: &FiniteField) -> Result<Vec<u32>> {
    let (q0, q) = (small.order(), big.order());
    let e_ok = small.characteristic() == big.characteristic() && big.degree().is_multiple_of(small.degree());
    if !e_ok {
        return Err(GroupError::Precondition(format!(
            "GF({q0}) is not a subfield of GF({q})"
        )));
    }
    let root = big
        .elements()
        .filter(|&y| y != 0 && big.eval_prime_poly(small.modulus(), y) == 0)
        .min_by_key(|&y| big.log(y))
        .ok_or_else(|| GroupError::SelfCheck(format!("no root of the GF({q0}) modulus in GF({q})")))?;
    Ok(small
        .elements()
        .map(|x| big.eval_prime_poly(&small.coefficients(x), root))
        .collect())
}

/// The natural embedding of SL₂(q0) into SL₂(q) on projective lines, for
/// GF(q0) ⊆ GF(q). For odd q this is PSL₂(q0) into PSL₂(q).
pub fn subfield_embedding_sl2(q0: usize, q: usize) -> Result<GroupHom> {
    let small = FiniteField::new(q0)?;
    let big = FiniteField::new(q)?;
    let phi = subfield_map(&small, &big)?;
    let source = psl2(q0)?;
    let images = generator_maps(&small)
        .iter()
        .map(|coeffs| {
            let [a, b, c, d] = coeffs.map(|x| phi[x as usize]);
            mobius(&big, a, b, c, d)
        })
        .collect::<Result<Vec<_>>>()?;
    GroupHom::new(source, q + 1, images)
}
