//! The single-instance commands: `analyze`, `example1`, `example2`, `theorem3`.

use crate::construct::{pointwise_stabilizer_embedding, subfield_embedding_sl2, symmetric, theorem3_instance};
use crate::error::{GroupError, Limits, Result};
use crate::hall::{classify, orderings, pi_part, sylow_tower, ClassVerdict, PrimeSet};
use crate::perm::PermGroup;
use crate::pronormal::{is_pronormal, is_strongly_pronormal, PronormalityReport};

use super::certificate::{cycles, Certificate, CertificateKind, Claim, GroupRecord};
use super::spec::GroupSpec;

#[derive(Clone, Debug, Default)]
pub struct ScenarioReport {
    pub lines: Vec<String>,
    /// Whether every stated outcome was reproduced.
    pub passed: bool,
    /// Set when the instance lies outside the range of the claim being tested.
    pub informational: bool,
    pub certificates: Vec<Certificate>,
}

impl ScenarioReport {
    fn line(&mut self, s: impl Into<String>) {
        self.lines.push(s.into());
    }

    fn expect(&mut self, ok: bool, what: &str) {
        self.line(format!("[{}] {what}", if ok { "ok" } else { "FAIL" }));
        self.passed &= ok;
    }

    pub fn exit_code(&self) -> i32 {
        if self.passed || self.informational {
            0
        } else {
            1
        }
    }
}

fn yes(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn hall_certificate(provenance: &str, g: &PermGroup, v: &ClassVerdict, limits: &Limits) -> Certificate {
    Certificate::new(
        CertificateKind::HallClasses,
        GroupRecord::new(provenance, g),
        Some(v.pi.clone()),
        Claim::HallClasses {
            hall_order: v.hall_order as u64,
            class_reps: v.hall_class_reps.iter().map(|h| cycles(h.group())).collect(),
            satisfies_e: v.satisfies_e,
            satisfies_c: v.satisfies_c,
            satisfies_d: v.satisfies_d,
            e_failure: v.e_failure.clone(),
        },
        vec![
            format!("all {}-subgroups enumerated up to conjugacy", v.pi),
            format!(
                "Hall classes pairwise separated by a scan of all {} elements",
                g.order()
            ),
        ],
        limits,
    )
}

fn pronormality_certificate(
    provenance: &str,
    r: &PronormalityReport,
    pi: Option<&PrimeSet>,
    limits: &Limits,
) -> Option<Certificate> {
    let f = r.failure.as_ref()?;
    let blocks = f.block.and_then(|_| r.ambient.factors().map(|fs| fs.blocks.clone()));
    let note = match f.block {
        Some(i) => format!("non-conjugacy decided in block {i} by a scan of the block component of the joint"),
        None => format!(
            "{} cosets of the normalizer scanned; the joint scanned exhaustively",
            r.checked_coset_count
        ),
    };
    Some(Certificate::new(
        CertificateKind::NonPronormality,
        GroupRecord::new(provenance, &r.ambient),
        pi.cloned(),
        Claim::NotPronormal {
            subject: cycles(&r.subject),
            g: f.g.to_string(),
            joint: cycles(&f.joint),
            block: blocks.as_ref().and(f.block),
            blocks,
        },
        vec![note],
        limits,
    ))
}

fn verdict_lines(report: &mut ScenarioReport, v: &ClassVerdict) {
    report.line(format!(
        "π = {}: Hall order {}; E {}, C {}, D {}; {} Hall class(es)",
        v.pi,
        v.hall_order,
        yes(v.satisfies_e),
        yes(v.satisfies_c),
        yes(v.satisfies_d),
        v.class_count
    ));
    if let Some(reason) = &v.e_failure {
        report.line(format!("E fails: {reason}"));
    }
    if let Some(d) = &v.d_failure {
        report.line(format!(
            "D fails: a π-subgroup of order {} lies in no Hall subgroup",
            d.order()
        ));
    }
}

/// E/C/D verdicts, Hall classes, and pronormality of each Hall representative.
pub fn analyze(spec: &GroupSpec, pi: &PrimeSet, limits: &Limits) -> Result<ScenarioReport> {
    let g = spec.build()?;
    let provenance = spec.provenance()?;
    let mut report = ScenarioReport {
        passed: true,
        ..Default::default()
    };
    report.line(format!("{provenance}: order {} on {} points", g.order(), g.degree()));
    let v = classify(&g, pi, limits)?;
    verdict_lines(&mut report, &v);
    for (i, h) in v.hall_class_reps.iter().enumerate() {
        let r = is_pronormal(&g, h.group(), limits)?;
        report.line(format!(
            "Hall class {i}: pronormal {} ({} cosets checked)",
            match &r.verdict {
                crate::pronormal::Verdict::Holds => "yes".to_string(),
                crate::pronormal::Verdict::Fails => "no".to_string(),
                crate::pronormal::Verdict::Indeterminate(why) => format!("undecided: {why}"),
            },
            r.checked_coset_count
        ));
        report
            .certificates
            .extend(pronormality_certificate(&provenance, &r, Some(pi), limits));
        let primes = pi.restrict_to(h.order());
        for c in orderings(primes.primes()) {
            if let Some(t) = sylow_tower(h.group(), &c, limits)? {
                report.line(format!("Hall class {i}: Sylow tower of complexion {c:?}"));
                report.certificates.push(Certificate::new(
                    CertificateKind::SylowTower,
                    GroupRecord::new(provenance.as_str(), &g),
                    Some(pi.clone()),
                    Claim::SylowTower {
                        subject: cycles(h.group()),
                        complexion: c.clone(),
                        series: t.series.iter().map(cycles).collect(),
                    },
                    vec!["each term generated by the elements of the remaining primes".into()],
                    limits,
                ));
                break;
            }
        }
    }
    report.certificates.push(hall_certificate(&provenance, &g, &v, limits));
    Ok(report)
}

/// SL₂(16) lies in D_{3,5}, while its subgroup SL₂(4) is not even in E_{3,5}.
pub fn example1(limits: &Limits) -> Result<ScenarioReport> {
    let pi = PrimeSet::new([3, 5])?;
    let mut report = ScenarioReport {
        passed: true,
        ..Default::default()
    };
    let big = GroupSpec::Sl2(16).build()?;
    report.line(format!("SL2(16): order {} on {} points", big.order(), big.degree()));
    let v = classify(&big, &pi, limits)?;
    verdict_lines(&mut report, &v);
    report.expect(
        v.satisfies_e && v.satisfies_c && v.satisfies_d && v.class_count == 1 && v.hall_order == 15,
        "SL2(16) satisfies E, C and D with one Hall class of order 15",
    );
    report.certificates.push(hall_certificate("sl2:16", &big, &v, limits));

    let hom = subfield_embedding_sl2(4, 16)?;
    let image = hom.image_group();
    report.line(format!("SL2(4) inside SL2(16): order {}", image.order()));
    let w = classify(&image, &pi, limits)?;
    verdict_lines(&mut report, &w);
    report.expect(
        image.order() == 60
            && big.contains_group(&image)
            && !w.satisfies_e
            && w.e_failure.as_deref() == Some("no subgroup of order 15"),
        "the SL2(4) subgroup does not satisfy E, having no subgroup of order 15",
    );
    report
        .certificates
        .push(hall_certificate("image of sl2:4 in sl2:16", &image, &w, limits));
    Ok(report)
}

/// The pointwise stabilizer Sym(m) ≤ Sym(n) is pronormal but not strongly pronormal.
pub fn example2(n: usize, m: usize, limits: &Limits) -> Result<ScenarioReport> {
    let e = pointwise_stabilizer_embedding(n, m)?;
    let g = symmetric(n)?;
    let h = e.subgroup.group();
    let mut report = ScenarioReport {
        passed: true,
        informational: !e.in_claimed_range,
        ..Default::default()
    };
    report.line(format!(
        "Sym({m}) fixing the points {m}..{} of Sym({n}){}",
        n - 1,
        if e.in_claimed_range {
            ""
        } else {
            " (outside n/2 < m < n-1; informational)"
        }
    ));
    let p = is_pronormal(&g, h, limits)?;
    let s = is_strongly_pronormal(&g, h, limits)?;
    report.line(format!(
        "pronormal: {} ({} cosets checked)",
        yes(p.verdict.holds()),
        p.checked_coset_count
    ));
    report.line(format!(
        "strongly pronormal: {} ({} pairs checked)",
        yes(s.verdict.holds()),
        s.checked_pairs
    ));
    let provenance = format!("sym:{n}");
    if let Some(f) = &s.failure {
        report.line(format!(
            "failing pair: K of order {} with g = {}, joint of order {}",
            f.k.order(),
            f.g,
            f.joint.order()
        ));
        report.certificates.push(Certificate::new(
            CertificateKind::NonPronormality,
            GroupRecord::new(provenance.as_str(), &g),
            None,
            Claim::NotStronglyPronormal {
                subject: cycles(h),
                k: cycles(&f.k),
                g: f.g.to_string(),
                joint: cycles(&f.joint),
            },
            vec![format!(
                "{} (K, g) pairs scanned; the joint scanned exhaustively",
                s.checked_pairs
            )],
            limits,
        ));
    }
    report
        .certificates
        .extend(pronormality_certificate(&provenance, &p, None, limits));
    if e.in_claimed_range {
        report.expect(p.verdict.holds(), "the stabilizer is pronormal");
        report.expect(s.verdict.fails(), "the stabilizer is not strongly pronormal");
    }
    Ok(report)
}

/// `X ≀ Z_p` built from two non-conjugate Hall π-subgroups of `X` has a
/// non-pronormal Hall π-subgroup.
pub fn theorem3(base: &GroupSpec, pi: &PrimeSet, p: u64, limits: &Limits) -> Result<ScenarioReport> {
    let x = base.build()?;
    let base_name = base.provenance()?;
    let mut report = ScenarioReport {
        passed: true,
        ..Default::default()
    };
    let v = classify(&x, pi, limits)?;
    report.line(format!("X = {base_name}: order {}", x.order()));
    verdict_lines(&mut report, &v);
    report.certificates.push(hall_certificate(&base_name, &x, &v, limits));
    if v.class_count < 2 {
        return Err(GroupError::Precondition(format!(
            "{base_name} has {} Hall {pi}-class(es); two non-conjugate classes are needed",
            v.class_count
        )));
    }
    let (u, w) = (v.hall_class_reps[0].group(), v.hall_class_reps[1].group());
    let inst = theorem3_instance(&x, u, w, pi, p, limits)?;
    let g = &inst.datum.group;
    let provenance = format!("wreath({base_name},{p})");
    let expected_order = x.order().checked_pow(p as u32).and_then(|o| o.checked_mul(p as u128));
    report.line(format!("G = X wr Z_{p}: order {} on {} points", g.order(), g.degree()));
    report.expect(
        Some(g.order()) == expected_order && g.degree() == p as usize * x.degree(),
        "G has order |X|^p·p on p·deg(X) points",
    );
    let hall = pi_part(g.order(), pi);
    report.expect(
        inst.h.order() == hall && inst.k.order() == hall,
        "H and K are Hall subgroups of G",
    );
    let replay = inst.h.conjugate(&inst.datum.tau).same_group(&inst.k);
    report.expect(replay, "H^τ = K");
    report.certificates.push(Certificate::new(
        CertificateKind::ConjugacyWitness,
        GroupRecord::new(provenance.as_str(), g),
        Some(pi.clone()),
        Claim::Conjugate {
            source: cycles(&inst.h),
            target: cycles(&inst.k),
            element: inst.datum.tau.to_string(),
            into: false,
        },
        vec!["conjugation by the block shift applied to generators".into()],
        limits,
    ));
    let r = is_pronormal(g, &inst.h, limits)?;
    if let Some(f) = &r.failure {
        report.line(format!(
            "H and H^g not conjugate in <H, H^g> for g = {}{}",
            if f.g == inst.datum.tau {
                "τ".to_string()
            } else {
                f.g.to_string()
            },
            f.block.map(|b| format!(", decided in block {b}")).unwrap_or_default()
        ));
    }
    report.expect(r.verdict.fails(), "H is not pronormal in G");
    report
        .certificates
        .extend(pronormality_certificate(&provenance, &r, Some(pi), limits));
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cli::certificate::verify;

    #[test]
    fn example2_small_instance() {
        let r = example2(5, 3, &Limits::default()).unwrap();
        assert!(r.passed, "{:?}", r.lines);
        assert_eq!(r.certificates.len(), 1);
        assert!(verify(&r.certificates[0]).unwrap().ok());
        let out_of_range = example2(5, 4, &Limits::default()).unwrap();
        assert!(out_of_range.informational);
        assert_eq!(out_of_range.exit_code(), 0);
    }

    #[test]
    fn theorem3_rejects_p_in_pi() {
        let base: GroupSpec = "psl2:7".parse().unwrap();
        let pi = PrimeSet::new([2, 3]).unwrap();
        assert!(theorem3(&base, &pi, 2, &Limits::default()).is_err());
        assert!(theorem3(&"sym:4".parse().unwrap(), &pi, 5, &Limits::default()).is_err());
    }
}
