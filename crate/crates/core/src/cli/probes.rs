//! Probes for the two open conjectures. Findings are reported, never asserted.

use crate::error::{GroupError, Limits, Result};
use crate::hall::analyze_hall;
use crate::pronormal::{pronormal_scan, strong_pronormal_scan};
use crate::subgroups::element_classes;

use super::catalog::Catalog;
use super::certificate::{CertificateKind, Claim};
use super::suites::{sweep, Member, SuiteSummary, Tally};

/// 9: pronormal Hall subgroups are strongly pronormal.
/// 11: Hall subgroups are pronormal in their normal closure.
pub fn run_probe(conjecture: u32, catalog: &Catalog, limits: &Limits) -> Result<SuiteSummary> {
    match conjecture {
        9 => Ok(sweep("probe 9", catalog, limits, probe9)),
        11 => Ok(sweep("probe 11", catalog, limits, probe11)),
        n => Err(GroupError::Parse(format!(
            "no probe for conjecture {n}; expected 9 or 11"
        ))),
    }
}

fn probe9(m: &Member) -> Result<Tally> {
    let mut t = Tally::default();
    for pi in &m.pis {
        t.instances += 1;
        let an = analyze_hall(&m.amb, &m.whole, pi, m.limits)?;
        for h in an.hall_reps() {
            t.checks += 1;
            if pronormal_scan(&m.amb, &m.whole, h).failure.is_some() {
                continue;
            }
            let (failure, checked) = strong_pronormal_scan(&m.amb, &m.whole, h, m.limits)?;
            if let Some((k, g, joint)) = failure {
                t.findings.push(format!(
                    "{}: pronormal Hall subgroup of order {} is not strongly pronormal",
                    m.label(pi),
                    h.order()
                ));
                let claim = Claim::Finding {
                    conjecture: 9,
                    subject: m.gens(h),
                    evidence: Box::new(m.not_strongly_pronormal_claim(h, &k, g, &joint)),
                };
                let note = format!("pronormality scan passed; {checked} (K, g) pairs scanned");
                t.certificates
                    .push(m.certificate(CertificateKind::ConjectureFinding, Some(pi), claim, note));
            }
        }
    }
    Ok(t)
}

fn probe11(m: &Member) -> Result<Tally> {
    let mut t = Tally::default();
    let classes = element_classes(&m.amb, &m.whole);
    for pi in &m.pis {
        t.instances += 1;
        let an = analyze_hall(&m.amb, &m.whole, pi, m.limits)?;
        for h in an.hall_reps() {
            t.checks += 1;
            let mut conjugates = Vec::new();
            for class in &classes {
                if class.iter().any(|x| h.gens().contains(x)) {
                    conjugates.extend_from_slice(class);
                }
            }
            let closure = m.amb.closure(&conjugates);
            let closure = m.amb.sub_from_elems(closure.elems().to_vec());
            let scan = pronormal_scan(&m.amb, &closure, h);
            if let Some((g, joint)) = scan.failure {
                t.findings.push(format!(
                    "{}: Hall subgroup of order {} is not pronormal in its normal closure (order {})",
                    m.label(pi),
                    h.order(),
                    closure.order()
                ));
                // the certificate's ambient is the closure itself
                let record = super::certificate::GroupRecord::new(
                    format!("normal closure of a Hall {pi}-subgroup of {}", m.name),
                    &m.amb.to_group(&closure),
                );
                let claim = Claim::Finding {
                    conjecture: 11,
                    subject: m.gens(h),
                    evidence: Box::new(m.not_pronormal_claim(h, g, &joint)),
                };
                t.certificates.push(super::certificate::Certificate::new(
                    CertificateKind::ConjectureFinding,
                    record,
                    Some(pi.clone()),
                    claim,
                    vec![format!(
                        "{} cosets of the normalizer in the closure scanned",
                        scan.checked
                    )],
                    m.limits,
                ));
            }
        }
    }
    Ok(t)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_catalog_has_no_findings() {
        let catalog = Catalog::build(60).unwrap();
        for n in [9, 11] {
            let s = run_probe(n, &catalog, &Limits::default()).unwrap();
            assert!(s.findings.is_empty(), "{}", s.report());
            assert_eq!(s.exit_code(), 0);
        }
        assert!(run_probe(10, &catalog, &Limits::default()).is_err());
    }
}
