//! Property suites over the catalog, one pass per (group, π).

use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use rustc_hash::FxHashMap;

use crate::error::{GroupError, Limits, Result};
use crate::hall::{
    analyze_hall, hall_subgroups, pi_part, pi_separable_series, sylow_tower_in, towers_conjugacy_check_in, PrimeSet,
};
use crate::perm::{coset_action, Elem, Enumerated, GroupHom, PermGroup, Sub};
use crate::pronormal::{is_pronormal, lemma12_product_check, lemma13_in, pronormal_scan, strong_pronormal_scan};
use crate::subgroups::{maximal_classes, normal_subgroups, subgroup_classes, sylow_in};

use super::catalog::{Catalog, CatalogEntry};
use super::certificate::{Certificate, CertificateKind, Claim, GroupRecord};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Suite {
    Theorem1,
    Theorem2,
    Lemmas,
    ClassicalPronormal,
    Towers,
}

impl Suite {
    pub const ALL: [Suite; 5] = [
        Suite::Theorem1,
        Suite::Theorem2,
        Suite::Lemmas,
        Suite::ClassicalPronormal,
        Suite::Towers,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            Suite::Theorem1 => "theorem1",
            Suite::Theorem2 => "theorem2",
            Suite::Lemmas => "lemmas",
            Suite::ClassicalPronormal => "classical-pronormal",
            Suite::Towers => "towers",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = GroupError;

    fn from_str(s: &str) -> Result<Self> {
        Suite::ALL
            .into_iter()
            .find(|x| x.name() == s)
            .ok_or_else(|| GroupError::Parse(format!("unknown suite {s:?}")))
    }
}

/// Aggregated outcome of a suite or probe run.
#[derive(Clone, Debug, Default)]
pub struct SuiteSummary {
    pub name: String,
    pub members: usize,
    /// (group, π) pairs visited.
    pub instances: usize,
    pub checks: usize,
    pub violations: Vec<String>,
    pub indeterminate: Vec<String>,
    pub capped: Vec<String>,
    /// Probe findings; never counted as violations.
    pub findings: Vec<String>,
    pub certificates: Vec<Certificate>,
}

impl SuiteSummary {
    pub fn passed(&self) -> bool {
        self.violations.is_empty() && self.indeterminate.is_empty()
    }

    /// 1 on violation or Indeterminate, 3 when only caps were hit, else 0.
    pub fn exit_code(&self) -> i32 {
        if !self.passed() {
            1
        } else if !self.capped.is_empty() {
            3
        } else {
            0
        }
    }

    pub fn report(&self) -> String {
        let mut out = format!(
            "{}: {} groups, {} instances, {} checks, {} violations, {} indeterminate, {} capped",
            self.name,
            self.members,
            self.instances,
            self.checks,
            self.violations.len(),
            self.indeterminate.len(),
            self.capped.len()
        );
        if self.name.starts_with("probe") {
            out.push_str(&format!(", {} findings", self.findings.len()));
        }
        if self.members == 0 {
            out.push_str("\nwarning: empty catalog, nothing was checked");
        }
        for (label, list) in [
            ("violation", &self.violations),
            ("indeterminate", &self.indeterminate),
            ("capped", &self.capped),
            ("finding", &self.findings),
        ] {
            for line in list {
                out.push_str(&format!("\n  {label}: {line}"));
            }
        }
        out
    }
}

/// Per-member results, merged in catalog order.
#[derive(Default)]
pub(crate) struct Tally {
    pub instances: usize,
    pub checks: usize,
    pub violations: Vec<String>,
    pub indeterminate: Vec<String>,
    pub findings: Vec<String>,
    pub certificates: Vec<Certificate>,
}

impl Tally {
    pub fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.checks += 1;
        if !ok {
            self.violations.push(what());
        }
    }
}

/// An enumerated catalog member with its normal subgroups.
pub(crate) struct Member<'a> {
    pub name: &'a str,
    pub group: &'a PermGroup,
    pub amb: Enumerated,
    pub whole: Sub,
    pub pis: Vec<PrimeSet>,
    pub limits: &'a Limits,
}

impl<'a> Member<'a> {
    pub fn new(entry: &'a CatalogEntry, limits: &'a Limits) -> Result<Self> {
        let amb = Enumerated::new(&entry.group, limits)?;
        let whole = amb.whole();
        Ok(Member {
            name: &entry.name,
            group: &entry.group,
            pis: PrimeSet::all_subsets_of(entry.group.order()),
            amb,
            whole,
            limits,
        })
    }

    pub fn normals(&self) -> Vec<Sub> {
        normal_subgroups(&self.amb, &self.whole)
    }

    pub fn record(&self) -> GroupRecord {
        GroupRecord::new(self.name, self.group)
    }

    pub fn gens(&self, s: &Sub) -> Vec<String> {
        self.amb.perms(s.gens()).iter().map(|x| x.to_string()).collect()
    }

    pub fn label(&self, pi: &PrimeSet) -> String {
        format!("{} π={pi}", self.name)
    }

    pub fn not_pronormal_claim(&self, h: &Sub, t: Elem, joint: &Sub) -> Claim {
        Claim::NotPronormal {
            subject: self.gens(h),
            g: self.amb.perm(t).to_string(),
            joint: self.gens(joint),
            blocks: None,
            block: None,
        }
    }

    pub fn not_strongly_pronormal_claim(&self, h: &Sub, k: &Sub, t: Elem, joint: &Sub) -> Claim {
        Claim::NotStronglyPronormal {
            subject: self.gens(h),
            k: self.gens(k),
            g: self.amb.perm(t).to_string(),
            joint: self.gens(joint),
        }
    }

    pub fn certificate(&self, kind: CertificateKind, pi: Option<&PrimeSet>, claim: Claim, note: String) -> Certificate {
        Certificate::new(kind, self.record(), pi.cloned(), claim, vec![note], self.limits)
    }

    /// `G/A` for every nontrivial normal `A`, as coset actions.
    pub fn quotients(&self, normals: &[Sub]) -> Result<Vec<Quotient>> {
        let mut out = Vec::new();
        for a in normals.iter().filter(|a| !a.is_trivial()) {
            let (hom, image) = coset_action(self.group, &self.amb.to_group(a), self.limits)?;
            let amb = Enumerated::new(&image, self.limits)?;
            out.push(Quotient { a: a.clone(), hom, amb });
        }
        Ok(out)
    }
}

pub(crate) struct Quotient {
    pub a: Sub,
    pub hom: GroupHom,
    pub amb: Enumerated,
}

/// Runs `f` on every catalog member in parallel and merges the tallies in order.
pub(crate) fn sweep<F>(name: &str, catalog: &Catalog, limits: &Limits, f: F) -> SuiteSummary
where
    F: Fn(&Member) -> Result<Tally> + Sync,
{
    let outcomes: Vec<(String, Result<Tally>)> = catalog
        .entries
        .par_iter()
        .map(|e| (e.name.clone(), Member::new(e, limits).and_then(|m| f(&m))))
        .collect();
    let mut s = SuiteSummary {
        name: name.to_string(),
        members: catalog.len(),
        ..Default::default()
    };
    for (member, outcome) in outcomes {
        match outcome {
            Ok(t) => {
                s.instances += t.instances;
                s.checks += t.checks;
                s.violations.extend(t.violations);
                s.indeterminate.extend(t.indeterminate);
                s.findings.extend(t.findings);
                s.certificates.extend(t.certificates);
            }
            Err(e @ GroupError::CapExceeded { .. }) => s.capped.push(format!("{member}: {e}")),
            Err(e) => s.violations.push(format!("{member}: {e}")),
        }
    }
    s
}

pub fn run_suite(suite: Suite, catalog: &Catalog, limits: &Limits) -> SuiteSummary {
    let f = match suite {
        Suite::Theorem1 => theorem1,
        Suite::Theorem2 => theorem2,
        Suite::Lemmas => lemmas,
        Suite::ClassicalPronormal => classical,
        Suite::Towers => towers,
    };
    sweep(suite.name(), catalog, limits, f)
}

/// D ⇒ C ⇒ E, π-separable ⇒ D, Hall intersections with normal subgroups, HA and quotients in C_π.
fn theorem1(m: &Member) -> Result<Tally> {
    let mut t = Tally::default();
    let normals = m.normals();
    let quotients = m.quotients(&normals)?;
    let order = m.whole.order() as u128;
    for pi in &m.pis {
        t.instances += 1;
        let at = m.label(pi);
        let an = analyze_hall(&m.amb, &m.whole, pi, m.limits)?;
        t.check(!an.satisfies_d || an.satisfies_c, || format!("{at}: D without C"));
        t.check(!an.satisfies_c || an.satisfies_e, || format!("{at}: C without E"));
        if pi_separable_series(&m.amb, &m.whole, pi).is_some() {
            t.check(an.satisfies_d, || format!("{at}: π-separable but not D"));
        }
        let mut ha_verdicts: FxHashMap<Vec<Elem>, bool> = FxHashMap::default();
        for h in an.hall_reps() {
            for a in &normals {
                let ha = m.amb.intersection(h, a);
                t.check(ha.order() as u128 == pi_part(a.order() as u128, pi), || {
                    format!("{at}: H∩A is not Hall in A of order {}", a.order())
                });
            }
            for q in &quotients {
                let image = q.hom.image_of(&m.amb.to_group(h))?;
                let want = pi_part(order / q.a.order() as u128, pi);
                t.check(image.order() == want, || {
                    format!("{at}: HA/A is not Hall in G/A for |A| = {}", q.a.order())
                });
            }
            if !an.satisfies_c {
                continue;
            }
            for a in &normals {
                let ha = m.amb.join(h, a.gens());
                let c = match ha_verdicts.get(ha.elems()) {
                    Some(&c) => c,
                    None => {
                        let c = analyze_hall(&m.amb, &ha, pi, m.limits)?.satisfies_c;
                        ha_verdicts.insert(ha.elems().to_vec(), c);
                        c
                    }
                };
                t.check(c, || format!("{at}: HA is not C for |A| = {}", a.order()));
            }
        }
        if an.satisfies_c {
            for q in &quotients {
                let qa = analyze_hall(&q.amb, &q.amb.whole(), pi, m.limits)?;
                t.check(qa.satisfies_c, || {
                    format!("{at}: quotient by |A| = {} is not C", q.a.order())
                });
            }
        }
    }
    Ok(t)
}

/// In a C_π group Hall subgroups are pronormal and every overgroup is C_π.
fn theorem2(m: &Member) -> Result<Tally> {
    let mut t = Tally::default();
    let full = subgroup_classes(&m.amb, &m.whole, None, m.limits)?;
    for pi in &m.pis {
        t.instances += 1;
        let at = m.label(pi);
        let an = analyze_hall(&m.amb, &m.whole, pi, m.limits)?;
        if !an.satisfies_c {
            continue;
        }
        let h = an.hall_reps().next().expect("C gives a Hall class");
        let scan = pronormal_scan(&m.amb, &m.whole, h);
        t.check(scan.failure.is_none(), || format!("{at}: Hall subgroup not pronormal"));
        if let Some((g, joint)) = &scan.failure {
            t.certificates.push(m.certificate(
                CertificateKind::NonPronormality,
                Some(pi),
                m.not_pronormal_claim(h, *g, joint),
                format!("scanned {} cosets of the normalizer", scan.checked),
            ));
        }
        // C_π is invariant under conjugation, so one member per class suffices
        for class in full
            .iter()
            .filter(|c| c.order() % h.order() == 0 && c.some_member_contains(h))
        {
            let c = analyze_hall(&m.amb, &class.rep, pi, m.limits)?.satisfies_c;
            t.check(c, || format!("{at}: overgroup of order {} is not C", class.order()));
        }
    }
    Ok(t)
}

/// Lemmas 7, 9, 11, 12 and 13.
fn lemmas(m: &Member) -> Result<Tally> {
    let mut t = Tally::default();
    let normals = m.normals();
    let proper: Vec<Sub> = normals
        .iter()
        .filter(|a| a.order() < m.whole.order())
        .cloned()
        .collect();
    let quotients = m.quotients(&proper)?;
    let simple = normals.len() == 2 && !m.group.is_abelian();
    for pi in &m.pis {
        t.instances += 1;
        let at = m.label(pi);
        let an = analyze_hall(&m.amb, &m.whole, pi, m.limits)?;
        let separable = pi_separable_series(&m.amb, &m.whole, pi).is_some();
        for h in an.hall_reps() {
            let scan = pronormal_scan(&m.amb, &m.whole, h);
            if separable {
                let (failure, _) = strong_pronormal_scan(&m.amb, &m.whole, h, m.limits)?;
                t.check(failure.is_none(), || {
                    format!("{at}: π-separable, Hall subgroup not strongly pronormal")
                });
                if let Some((k, g, joint)) = &failure {
                    t.certificates.push(m.certificate(
                        CertificateKind::NonPronormality,
                        Some(pi),
                        m.not_strongly_pronormal_claim(h, k, *g, joint),
                        "strong pronormality scan over subgroup classes of H".into(),
                    ));
                }
            }
            if simple {
                t.check(scan.failure.is_none(), || {
                    format!("{at}: Hall subgroup of a simple group not pronormal")
                });
            }
            if scan.failure.is_none() {
                for q in &quotients {
                    let image = q.hom.image_of(&m.amb.to_group(h))?;
                    let hs = q.amb.sub_from_perms(image.generators())?;
                    let ok = pronormal_scan(&q.amb, &q.amb.whole(), &hs).failure.is_none();
                    t.check(ok, || {
                        format!("{at}: image not pronormal in G/A for |A| = {}", q.a.order())
                    });
                }
            }
            for a in &normals {
                let meet = m.amb.intersection(h, a);
                if h.order() * a.order() / meet.order() != m.whole.order() {
                    continue;
                }
                let r = lemma13_in(&m.amb, &m.whole, a, h, pi)?;
                t.check(r.holds(), || {
                    format!("{at}: Hall supplement criterion fails for |A| = {}", a.order())
                });
            }
        }
        lemma12(m, pi, &at, &mut t)?;
    }
    Ok(t)
}

/// Products of pronormal Hall subgroups of direct factors.
fn lemma12(m: &Member, pi: &PrimeSet, at: &str, t: &mut Tally) -> Result<()> {
    let Some(fs) = m.group.factors().filter(|f| f.shift.is_none()) else {
        return Ok(());
    };
    let mut parts = Vec::new();
    for f in &fs.factor_groups {
        let mut chosen = None;
        for h in hall_subgroups(f, pi, m.limits)? {
            if is_pronormal(f, h.group(), m.limits)?.verdict.holds() {
                chosen = Some(h.into_group());
                break;
            }
        }
        match chosen {
            Some(h) => parts.push(h),
            None => return Ok(()),
        }
    }
    let r = lemma12_product_check(m.group, &fs.factor_groups, &parts, m.limits)?;
    t.check(r.holds(), || {
        format!("{at}: product of pronormal factors not pronormal")
    });
    Ok(())
}

/// Normal, maximal and Sylow subgroups are pronormal; Hall subgroups of
/// solvable groups are strongly pronormal.
fn classical(m: &Member) -> Result<Tally> {
    let mut t = Tally::default();
    let pronormal = |t: &mut Tally, h: &Sub, what: String, pi: Option<&PrimeSet>| {
        let scan = pronormal_scan(&m.amb, &m.whole, h);
        t.check(scan.failure.is_none(), || format!("{}: {what} not pronormal", m.name));
        if let Some((g, joint)) = &scan.failure {
            t.certificates.push(m.certificate(
                CertificateKind::NonPronormality,
                pi,
                m.not_pronormal_claim(h, *g, joint),
                format!("scanned {} cosets of the normalizer", scan.checked),
            ));
        }
    };
    for a in m.normals() {
        pronormal(&mut t, &a, format!("normal subgroup of order {}", a.order()), None);
    }
    let full = subgroup_classes(&m.amb, &m.whole, None, m.limits)?;
    for i in maximal_classes(&full) {
        pronormal(
            &mut t,
            &full[i].rep,
            format!("maximal subgroup of order {}", full[i].order()),
            None,
        );
    }
    for pi in m.pis.iter().filter(|pi| pi.primes().len() == 1) {
        let s = sylow_in(&m.amb, &m.whole, pi.primes()[0]);
        pronormal(&mut t, &s, format!("Sylow {pi}-subgroup"), Some(pi));
    }
    if m.group.is_solvable() {
        for pi in &m.pis {
            t.instances += 1;
            let an = analyze_hall(&m.amb, &m.whole, pi, m.limits)?;
            t.check(an.satisfies_c, || format!("{}: solvable but not C", m.label(pi)));
            for h in an.hall_reps() {
                pronormal(&mut t, h, format!("Hall {pi}-subgroup"), Some(pi));
                let (failure, _) = strong_pronormal_scan(&m.amb, &m.whole, h, m.limits)?;
                t.check(failure.is_none(), || {
                    format!("{}: Hall subgroup not strongly pronormal", m.label(pi))
                });
                if let Some((k, g, joint)) = &failure {
                    t.certificates.push(m.certificate(
                        CertificateKind::NonPronormality,
                        Some(pi),
                        m.not_strongly_pronormal_claim(h, k, *g, joint),
                        "strong pronormality scan over subgroup classes of H".into(),
                    ));
                }
            }
        }
    }
    Ok(t)
}

/// Hall subgroups with Sylow towers of one complexion are conjugate.
fn towers(m: &Member) -> Result<Tally> {
    let mut t = Tally::default();
    if !m.group.is_solvable() {
        return Ok(t);
    }
    for pi in &m.pis {
        t.instances += 1;
        let report = towers_conjugacy_check_in(&m.amb, &m.whole, pi, m.limits)?;
        t.checks += report.towers.len();
        for v in &report.violations {
            t.violations.push(format!(
                "{}: non-conjugate Hall subgroups share complexion {:?}",
                m.label(pi),
                v.complexion
            ));
            for h in [&v.first, &v.second] {
                if let Some(cert) = tower_certificate(m, pi, h, &v.complexion)? {
                    t.certificates.push(cert);
                }
            }
        }
    }
    Ok(t)
}

pub(crate) fn tower_certificate(m: &Member, pi: &PrimeSet, h: &Sub, complexion: &[u64]) -> Result<Option<Certificate>> {
    let Some(series) = sylow_tower_in(&m.amb, h, complexion)? else {
        return Ok(None);
    };
    Ok(Some(m.certificate(
        CertificateKind::SylowTower,
        Some(pi),
        Claim::SylowTower {
            subject: m.gens(h),
            complexion: complexion.to_vec(),
            series: series.iter().map(|s| m.gens(s)).collect(),
        },
        "each term generated by the elements of the remaining primes".into(),
    )))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn tiny() -> Catalog {
        let entries = ["sym:3", "alt:4", "dih:5", "product(cyc:2,sym:3)", "alt:5"]
            .iter()
            .map(|s| {
                let spec: super::super::spec::GroupSpec = s.parse().unwrap();
                CatalogEntry {
                    name: s.to_string(),
                    group: spec.build().unwrap(),
                }
            })
            .collect();
        Catalog { max_order: 60, entries }
    }

    #[test]
    fn every_suite_passes_on_a_small_catalog() {
        let catalog = tiny();
        for suite in Suite::ALL {
            let s = run_suite(suite, &catalog, &Limits::default());
            assert!(s.passed(), "{}", s.report());
            assert!(s.checks > 0, "{suite}");
        }
    }

    #[test]
    fn empty_catalog_is_a_vacuous_pass() {
        let empty = Catalog {
            max_order: 0,
            entries: Vec::new(),
        };
        let s = run_suite(Suite::Theorem2, &empty, &Limits::default());
        assert_eq!(s.exit_code(), 0);
        assert!(s.report().contains("warning"));
    }

    #[test]
    fn suite_names_round_trip() {
        for s in Suite::ALL {
            assert_eq!(s.name().parse::<Suite>().unwrap(), s);
        }
        assert!("theorem4".parse::<Suite>().is_err());
    }
}
