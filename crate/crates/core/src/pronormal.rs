//! Pronormality and strong pronormality testers.
//!
//! `H` is pronormal in `G` when `H` and `H^g` are conjugate in `⟨H, H^g⟩` for
//! every `g ∈ G`. For `n ∈ N_G(H)` we have `H^{ng} = H^g`, so both the
//! conjugate and the joint subgroup depend only on the coset `N_G(H)·g`, and it
//! suffices to let `g` run over a right transversal of `N_G(H)`. The same
//! holds for `K^g` with `N_G(K)` in the strong version. Multiplying `g` on the
//! right by an element of `N_G(H)` does change `H^g`, so no further reduction
//! is made.

use crate::error::{GroupError, Limits, Result};
use crate::hall::{pi_part, PrimeSet};
use crate::perm::{Elem, Enumerated, PermGroup, Permutation, Sub};
use crate::subgroups::{is_conjugate_blockwise, subgroup_classes, BlockSystem, BlockwiseOutcome};

/// Three-valued outcome: a definite answer, or none because a search was capped.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verdict {
    Holds,
    Fails,
    Indeterminate(String),
}

impl Verdict {
    pub fn holds(&self) -> bool {
        matches!(self, Verdict::Holds)
    }

    pub fn fails(&self) -> bool {
        matches!(self, Verdict::Fails)
    }

    pub fn is_indeterminate(&self) -> bool {
        matches!(self, Verdict::Indeterminate(_))
    }
}

/// An element `g` such that `H` and `H^g` are not conjugate in `joint = ⟨H, H^g⟩`.
#[derive(Clone, Debug)]
pub struct PronormalityFailure {
    pub g: Permutation,
    pub conjugate: PermGroup,
    pub joint: PermGroup,
    /// Set when non-conjugacy was decided in one block of a direct product.
    pub block: Option<usize>,
}

#[derive(Clone, Debug)]
pub struct PronormalityReport {
    pub subject: PermGroup,
    pub ambient: PermGroup,
    pub verdict: Verdict,
    pub failure: Option<PronormalityFailure>,
    pub checked_coset_count: usize,
}

/// A subgroup `K ≤ H` and `g` such that no element of `⟨H, K^g⟩` maps `K^g` into `H`.
#[derive(Clone, Debug)]
pub struct StrongPronormalityFailure {
    pub k: PermGroup,
    pub g: Permutation,
    pub joint: PermGroup,
}

#[derive(Clone, Debug)]
pub struct StrongPronormalityReport {
    pub subject: PermGroup,
    pub ambient: PermGroup,
    pub verdict: Verdict,
    pub failure: Option<StrongPronormalityFailure>,
    pub checked_pairs: usize,
}

/// Result of the transversal scan inside an enumerated group.
#[derive(Clone, Debug)]
pub struct ScanOutcome {
    /// The first transversal element `g` with `H`, `H^g` not conjugate in the joint.
    pub failure: Option<(Elem, Sub)>,
    pub checked: usize,
}

/// Scans a right transversal of `N_G(H)` in `G` in increasing order.
pub fn pronormal_scan(amb: &Enumerated, g: &Sub, h: &Sub) -> ScanOutcome {
    if amb.is_normal_in(g, h) {
        return ScanOutcome {
            failure: None,
            checked: 1,
        };
    }
    let n = amb.normalizer(g, h);
    let mut checked = 0;
    for t in amb.right_transversal(g, &n) {
        checked += 1;
        let l = amb.conj_sub(h, t);
        if l == *h {
            continue;
        }
        let joint = amb.join(h, l.gens());
        if amb.find_conjugator(joint.gens(), h, &l).is_none() {
            return ScanOutcome {
                failure: Some((t, joint)),
                checked,
            };
        }
    }
    ScanOutcome { failure: None, checked }
}

/// `(K, g, joint)` with no element of the joint mapping `K^g` into `H`.
pub type StrongFailure = (Sub, Elem, Sub);

/// First `(K, g, joint)` violating strong pronormality, with `K` over class
/// representatives of subgroups of `H` and `g` over a transversal of `N_G(K)`.
pub fn strong_pronormal_scan(
    amb: &Enumerated,
    g: &Sub,
    h: &Sub,
    limits: &Limits,
) -> Result<(Option<StrongFailure>, usize)> {
    let mut checked = 0;
    for class in subgroup_classes(amb, h, None, limits)? {
        let k = class.rep;
        let n = amb.normalizer(g, &k);
        for t in amb.right_transversal(g, &n) {
            checked += 1;
            let kt = amb.conj_sub(&k, t);
            if kt.is_subset_of(h) {
                continue;
            }
            let joint = amb.join(h, kt.gens());
            if amb.find_conjugate_into(joint.gens(), &kt, h).is_none() {
                return Ok((Some((k, t, joint)), checked));
            }
        }
    }
    Ok((None, checked))
}

fn enumerable(g: &PermGroup, limits: &Limits) -> Result<bool> {
    Ok(g.try_order()? <= limits.enum_cap)
}

fn report(
    g: &PermGroup,
    h: &PermGroup,
    verdict: Verdict,
    failure: Option<PronormalityFailure>,
    checked: usize,
) -> PronormalityReport {
    PronormalityReport {
        subject: h.clone(),
        ambient: g.clone(),
        verdict,
        failure,
        checked_coset_count: checked,
    }
}

/// Whether `h` and `l` are conjugate inside `joint`: `Some(true/false)` when
/// decided, with the deciding block for blockwise negatives.
fn conjugate_in_joint(
    joint: &PermGroup,
    h: &PermGroup,
    l: &PermGroup,
    blocks: Option<&BlockSystem>,
    limits: &Limits,
) -> Result<Option<(bool, Option<usize>)>> {
    if enumerable(joint, limits)? {
        let amb = Enumerated::new(joint, limits)?;
        let hs = amb.sub_from_perms(h.generators())?;
        let ls = amb.sub_from_perms(l.generators())?;
        return Ok(Some((amb.find_conjugator(amb.generators(), &hs, &ls).is_some(), None)));
    }
    if let Some(b) = blocks {
        match is_conjugate_blockwise(b, joint, h, l, limits)? {
            BlockwiseOutcome::Conjugate(_) => return Ok(Some((true, None))),
            BlockwiseOutcome::NotConjugate { block } => return Ok(Some((false, Some(block)))),
            BlockwiseOutcome::NotApplicable => {}
        }
    }
    Ok(None)
}

/// Decides whether `h` is pronormal in `g`.
///
/// Enumerable ambients are scanned exhaustively. Direct products along a
/// block system are decided block by block (a product of subgroups is
/// pronormal iff every factor is). Otherwise only the block shift and the
/// generators of `g` are tried as conjugating elements: a failure among them
/// is definite, and no failure gives `Indeterminate`.
pub fn is_pronormal(g: &PermGroup, h: &PermGroup, limits: &Limits) -> Result<PronormalityReport> {
    if !g.contains_group(h) {
        return Err(GroupError::NotSubgroup("pronormality of a non-subgroup".into()));
    }
    if enumerable(g, limits)? {
        let amb = Enumerated::new(g, limits)?;
        let hs = amb.sub_from_perms(h.generators())?;
        let scan = pronormal_scan(&amb, &amb.whole(), &hs);
        let failure = scan.failure.map(|(t, joint)| PronormalityFailure {
            g: amb.perm(t).clone(),
            conjugate: amb.to_group(&amb.conj_sub(&hs, t)),
            joint: amb.to_group(&joint),
            block: None,
        });
        let verdict = if failure.is_some() {
            Verdict::Fails
        } else {
            Verdict::Holds
        };
        return Ok(report(g, h, verdict, failure, scan.checked));
    }
    let blocks = BlockSystem::of_group(g);
    if let Some(b) = &blocks {
        if let (Some(gl), Some(hl)) = (b.local_factors(g), b.local_factors(h)) {
            let mut checked = 0;
            for (i, (gi, hi)) in gl.iter().zip(&hl).enumerate() {
                let local = is_pronormal(gi, hi, limits)?;
                checked += local.checked_coset_count;
                match local.verdict {
                    Verdict::Holds => {}
                    Verdict::Fails => {
                        let f = local.failure.expect("failing report has a failure");
                        let x = b.embed(&f.g, i);
                        let conjugate = h.conjugate(&x);
                        let joint = h.join(conjugate.generators())?;
                        let failure = PronormalityFailure {
                            g: x,
                            conjugate,
                            joint,
                            block: Some(i),
                        };
                        return Ok(report(g, h, Verdict::Fails, Some(failure), checked));
                    }
                    v @ Verdict::Indeterminate(_) => return Ok(report(g, h, v, None, checked)),
                }
            }
            return Ok(report(g, h, Verdict::Holds, None, checked));
        }
    }
    let mut candidates: Vec<Permutation> = g.factors().and_then(|f| f.shift.clone()).into_iter().collect();
    candidates.extend(g.generators().iter().cloned());
    let mut checked = 0;
    for x in candidates {
        checked += 1;
        let l = h.conjugate(&x);
        if h.same_group(&l) {
            continue;
        }
        let joint = h.join(l.generators())?;
        match conjugate_in_joint(&joint, h, &l, blocks.as_ref(), limits)? {
            Some((true, _)) => {}
            Some((false, block)) => {
                let failure = PronormalityFailure {
                    g: x,
                    conjugate: l,
                    joint,
                    block,
                };
                return Ok(report(g, h, Verdict::Fails, Some(failure), checked));
            }
            None => {
                return Ok(report(
                    g,
                    h,
                    Verdict::Indeterminate(format!(
                        "joint subgroup of order {} is above the enumeration cap and not blockwise",
                        joint.try_order()?
                    )),
                    None,
                    checked,
                ))
            }
        }
    }
    Ok(report(
        g,
        h,
        Verdict::Indeterminate(format!(
            "ambient of order {} is above the enumeration cap; only {checked} candidate elements were checked",
            g.try_order()?
        )),
        None,
        checked,
    ))
}

/// Decides whether `h` is strongly pronormal in the enumerable group `g`.
pub fn is_strongly_pronormal(g: &PermGroup, h: &PermGroup, limits: &Limits) -> Result<StrongPronormalityReport> {
    if !g.contains_group(h) {
        return Err(GroupError::NotSubgroup("pronormality of a non-subgroup".into()));
    }
    limits.check_subgroups(h.try_order()?)?;
    let amb = Enumerated::new(g, limits)?;
    let hs = amb.sub_from_perms(h.generators())?;
    let (failure, checked) = strong_pronormal_scan(&amb, &amb.whole(), &hs, limits)?;
    let failure = failure.map(|(k, t, joint)| StrongPronormalityFailure {
        k: amb.to_group(&k),
        g: amb.perm(t).clone(),
        joint: amb.to_group(&joint),
    });
    Ok(StrongPronormalityReport {
        subject: h.clone(),
        ambient: g.clone(),
        verdict: if failure.is_some() {
            Verdict::Fails
        } else {
            Verdict::Holds
        },
        failure,
        checked_pairs: checked,
    })
}

/// Pronormality of `h` in its normal closure in `g`.
pub fn pronormal_in_normal_closure(g: &PermGroup, h: &PermGroup, limits: &Limits) -> Result<PronormalityReport> {
    let closure = g.normal_closure(h.generators())?;
    let closure = match BlockSystem::of_group(g) {
        Some(b) => b.attach(&closure).unwrap_or(closure),
        None => closure,
    };
    is_pronormal(&closure, h, limits)
}

/// Outcome of a product-of-pronormal-factors instance.
#[derive(Clone, Debug)]
pub struct Lemma12Report {
    pub product: PermGroup,
    pub pronormal: PronormalityReport,
}

impl Lemma12Report {
    pub fn holds(&self) -> bool {
        self.pronormal.verdict.holds()
    }
}

/// Given commuting normal subgroups `G_i` with product `G` and pronormal
/// `H_i ≤ G_i`, checks that `⟨H_1, …, H_n⟩` is pronormal in `G`. Unmet
/// hypotheses are reported as `Precondition` errors.
pub fn lemma12_product_check(
    g: &PermGroup,
    factors: &[PermGroup],
    parts: &[PermGroup],
    limits: &Limits,
) -> Result<Lemma12Report> {
    if factors.is_empty() || factors.len() != parts.len() {
        return Err(GroupError::Precondition("need one part per factor".into()));
    }
    for (i, gi) in factors.iter().enumerate() {
        if !g.is_normal(gi)? {
            return Err(GroupError::Precondition(format!("factor {i} is not normal")));
        }
        for gj in &factors[i + 1..] {
            let commute = gi
                .generators()
                .iter()
                .all(|a| gj.generators().iter().all(|b| a.then(b) == b.then(a)));
            if !commute {
                return Err(GroupError::Precondition(format!(
                    "factor {i} does not commute with a later factor"
                )));
            }
        }
    }
    let all: Vec<Permutation> = factors.iter().flat_map(|f| f.generators().iter().cloned()).collect();
    if PermGroup::new(g.degree(), all)?.try_order()? != g.try_order()? {
        return Err(GroupError::Precondition("the factors do not generate the group".into()));
    }
    for (i, (gi, hi)) in factors.iter().zip(parts).enumerate() {
        if !gi.contains_group(hi) {
            return Err(GroupError::Precondition(format!("part {i} is not inside its factor")));
        }
        if !is_pronormal(gi, hi, limits)?.verdict.holds() {
            return Err(GroupError::Precondition(format!(
                "part {i} is not pronormal in its factor"
            )));
        }
    }
    let gens: Vec<Permutation> = parts.iter().flat_map(|h| h.generators().iter().cloned()).collect();
    let product = PermGroup::new(g.degree(), gens)?;
    let pronormal = is_pronormal(g, &product, limits)?;
    Ok(Lemma12Report { product, pronormal })
}

/// One instance of: `H` Hall in `G`, `A ⊴ G`, `G = HA`, `H∩A prn A` ⇒ `H prn G`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Lemma13Report {
    pub hypothesis: bool,
    pub conclusion: bool,
    /// Orders of `N_G(H∩A) ⊵ N_A(H∩A) ⊵ H∩A ⊵ 1`.
    pub series_orders: [usize; 4],
    /// Each term is normal in `N_G(H∩A)` and every factor is a π- or π′-group.
    pub series_ok: bool,
}

impl Lemma13Report {
    pub fn holds(&self) -> bool {
        self.series_ok && (!self.hypothesis || self.conclusion)
    }
}

/// `lemma13_check` inside an enumerated ambient.
pub fn lemma13_in(amb: &Enumerated, g: &Sub, a: &Sub, h: &Sub, pi: &PrimeSet) -> Result<Lemma13Report> {
    if !h.is_subset_of(g) || h.order() as u128 != pi_part(g.order() as u128, pi) {
        return Err(GroupError::Precondition("H is not a Hall π-subgroup of G".into()));
    }
    if !a.is_subset_of(g) || !amb.is_normal_in(g, a) {
        return Err(GroupError::Precondition("A is not normal in G".into()));
    }
    let ha = amb.intersection(h, a);
    if h.order() * a.order() / ha.order() != g.order() {
        return Err(GroupError::Precondition("G is not HA".into()));
    }
    let hypothesis = pronormal_scan(amb, a, &ha).failure.is_none();
    let conclusion = pronormal_scan(amb, g, h).failure.is_none();
    let n = amb.normalizer(g, &ha);
    let na = amb.intersection(&n, a);
    let sep = |q: usize| pi.is_pi_number(q as u128) || pi.is_pi_prime_number(q as u128);
    let series_ok = amb.is_normal_in(&n, &na)
        && amb.is_normal_in(&n, &ha)
        && sep(n.order() / na.order())
        && sep(na.order() / ha.order())
        && sep(ha.order());
    Ok(Lemma13Report {
        hypothesis,
        conclusion,
        series_orders: [n.order(), na.order(), ha.order(), 1],
        series_ok,
    })
}

/// Checks one instance of the Hall-supplement criterion for pronormality.
pub fn lemma13_check(
    g: &PermGroup,
    a: &PermGroup,
    h: &PermGroup,
    pi: &PrimeSet,
    limits: &Limits,
) -> Result<Lemma13Report> {
    let amb = Enumerated::new(g, limits)?;
    let a = amb.sub_from_perms(a.generators())?;
    let h = amb.sub_from_perms(h.generators())?;
    lemma13_in(&amb, &amb.whole(), &a, &h, pi)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str, n: usize) -> Permutation {
        Permutation::parse_cycles(s, n).unwrap()
    }

    fn group(n: usize, gens: &[&str]) -> PermGroup {
        PermGroup::new(n, gens.iter().map(|s| p(s, n)).collect()).unwrap()
    }

    fn sym(n: usize) -> PermGroup {
        let cycle: Vec<u32> = (0..n as u32).collect();
        PermGroup::new(n, vec![p("(0 1)", n), Permutation::from_cycles(n, &[&cycle]).unwrap()]).unwrap()
    }

    #[test]
    fn normal_and_sylow_subgroups_are_pronormal() {
        let l = Limits::default();
        let s5 = sym(5);
        let a5 = group(5, &["(0 1 2)", "(0 1 3)", "(0 1 4)"]);
        assert!(is_pronormal(&s5, &a5, &l).unwrap().verdict.holds());
        let s2 = crate::subgroups::sylow(&s5, 2, &l).unwrap().into_group();
        assert!(is_pronormal(&s5, &s2, &l).unwrap().verdict.holds());
    }

    #[test]
    fn a_transposition_is_not_pronormal_in_sym4() {
        // <(0 1)> and <(2 3)> generate a Klein group in which they are not conjugate
        let l = Limits::default();
        let r = is_pronormal(&sym(4), &group(4, &["(0 1)"]), &l).unwrap();
        assert!(r.verdict.fails());
        let f = r.failure.unwrap();
        assert!(f.joint.contains_group(&f.conjugate));
        assert_eq!(f.joint.order(), 4);
    }

    #[test]
    fn sym3_in_sym5_is_pronormal_not_strongly() {
        let l = Limits::default();
        let s5 = sym(5);
        let h = group(5, &["(0 1)", "(0 1 2)"]);
        assert!(is_pronormal(&s5, &h, &l).unwrap().verdict.holds());
        let strong = is_strongly_pronormal(&s5, &h, &l).unwrap();
        assert!(strong.verdict.fails());
        let f = strong.failure.unwrap();
        assert!(h.contains_group(&f.k));
        assert_eq!(is_strongly_pronormal(&s5, &s5, &l).unwrap().verdict, Verdict::Holds);
    }

    #[test]
    fn lemma12_on_sym3_squared() {
        let l = Limits::default();
        let g = group(6, &["(0 1)", "(0 1 2)", "(3 4)", "(3 4 5)"]);
        let f1 = group(6, &["(0 1)", "(0 1 2)"]);
        let f2 = group(6, &["(3 4)", "(3 4 5)"]);
        let r = lemma12_product_check(
            &g,
            &[f1.clone(), f2.clone()],
            &[group(6, &["(0 1)"]), group(6, &["(3 4)"])],
            &l,
        )
        .unwrap();
        assert!(r.holds());
        assert!(lemma12_product_check(&g, &[f1], &[group(6, &["(0 1)"])], &l).is_err());
    }

    #[test]
    fn lemma13_on_sym4() {
        let l = Limits::default();
        let s4 = sym(4);
        let a4 = group(4, &["(0 1 2)", "(1 2 3)"]);
        let d8 = crate::subgroups::sylow(&s4, 2, &l).unwrap().into_group();
        let r = lemma13_check(&s4, &a4, &d8, &"2".parse().unwrap(), &l).unwrap();
        assert!(r.hypothesis && r.conclusion && r.series_ok);
        assert!(r.holds());
    }

    #[test]
    fn normal_closure_probe() {
        let l = Limits::default();
        let s4 = sym(4);
        let v4 = group(4, &["(0 1)(2 3)", "(0 2)(1 3)"]);
        let r = pronormal_in_normal_closure(&s4, &v4, &l).unwrap();
        assert!(r.verdict.holds());
        assert_eq!(r.ambient.order(), 4);
    }
}
