//! Replayable certificates.
//!
//! A certificate is a JSON document naming a group by its generators, a claim
//! about it, and a transcript of the scans that establish the claim. The
//! `digest` is the SHA-256 of the document serialized with `digest` empty and
//! `created` absent, so the timestamp never affects it.

use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::error::{GroupError, Limits, Result};
use crate::hall::{classify, pi_part, PrimeSet};
use crate::perm::{PermGroup, Permutation};
use crate::subgroups::BlockSystem;

pub const SCHEMA: &str = "hallgroup-certificate/1";

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum CertificateKind {
    ConjugacyWitness,
    NonPronormality,
    HallClasses,
    SylowTower,
    ConjectureFinding,
}

impl CertificateKind {
    pub fn as_str(&self) -> &'static str {
        match self {
            CertificateKind::ConjugacyWitness => "conjugacy-witness",
            CertificateKind::NonPronormality => "non-pronormality",
            CertificateKind::HallClasses => "hall-classes",
            CertificateKind::SylowTower => "sylow-tower",
            CertificateKind::ConjectureFinding => "conjecture-finding",
        }
    }
}

/// A group given by generators in cycle notation.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroupRecord {
    /// Constructor expression, or the digest of a generator file.
    pub provenance: String,
    pub degree: usize,
    pub order: u128,
    pub generators: Vec<String>,
}

impl GroupRecord {
    pub fn new(provenance: impl Into<String>, g: &PermGroup) -> Self {
        GroupRecord {
            provenance: provenance.into(),
            degree: g.degree(),
            order: g.order(),
            generators: cycles(g),
        }
    }

    pub fn build(&self) -> Result<PermGroup> {
        let g = subgroup(self.degree, &self.generators)?;
        if g.try_order()? != self.order {
            return Err(GroupError::SelfCheck(format!(
                "recorded order {} but the generators give {}",
                self.order,
                g.order()
            )));
        }
        Ok(g)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CapsRecord {
    pub enum_cap: u128,
    pub subgroup_cap: u128,
    pub index_cap: u128,
}

impl From<&Limits> for CapsRecord {
    fn from(l: &Limits) -> Self {
        CapsRecord {
            enum_cap: l.enum_cap,
            subgroup_cap: l.subgroup_cap,
            index_cap: l.index_cap,
        }
    }
}

impl From<CapsRecord> for Limits {
    fn from(c: CapsRecord) -> Self {
        Limits {
            enum_cap: c.enum_cap,
            subgroup_cap: c.subgroup_cap,
            index_cap: c.index_cap,
        }
    }
}

/// What the certificate asserts about the recorded group `G`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "kebab-case")]
pub enum Claim {
    /// `source^element = target`, or `source^element ≤ target` when `into`.
    Conjugate {
        source: Vec<String>,
        target: Vec<String>,
        element: String,
        into: bool,
    },
    /// `H` and `H^g` are not conjugate in `joint = ⟨H, H^g⟩`. With `block`,
    /// the scan runs over the restriction of `joint` to that block.
    NotPronormal {
        subject: Vec<String>,
        g: String,
        joint: Vec<String>,
        blocks: Option<Vec<Vec<u32>>>,
        block: Option<usize>,
    },
    /// No element of `joint = ⟨H, K^g⟩` maps `K^g` into `H`.
    NotStronglyPronormal {
        subject: Vec<String>,
        k: Vec<String>,
        g: String,
        joint: Vec<String>,
    },
    /// The Hall π-subgroups of `G` up to conjugacy, and the E/C/D verdicts.
    HallClasses {
        hall_order: u64,
        class_reps: Vec<Vec<String>>,
        satisfies_e: bool,
        satisfies_c: bool,
        satisfies_d: bool,
        e_failure: Option<String>,
    },
    /// A Sylow tower of `subject`, top term first.
    SylowTower {
        subject: Vec<String>,
        complexion: Vec<u64>,
        series: Vec<Vec<String>>,
    },
    /// A counterexample candidate for an open conjecture; `evidence` is replayed.
    Finding {
        conjecture: u32,
        subject: Vec<String>,
        evidence: Box<Claim>,
    },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Certificate {
    pub schema: String,
    pub kind: CertificateKind,
    pub group: GroupRecord,
    pub pi: Option<PrimeSet>,
    pub claim: Claim,
    /// What was checked exhaustively to reach the claim.
    pub transcript: Vec<String>,
    pub caps: CapsRecord,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub created: Option<String>,
    pub digest: String,
}

pub fn cycles(g: &PermGroup) -> Vec<String> {
    g.generators().iter().map(|x| x.to_string()).collect()
}

fn perm(s: &str, degree: usize) -> Result<Permutation> {
    Permutation::parse_cycles(s, degree)
}

fn subgroup(degree: usize, gens: &[String]) -> Result<PermGroup> {
    let gens = gens.iter().map(|s| perm(s, degree)).collect::<Result<Vec<_>>>()?;
    PermGroup::new(degree, gens)
}

fn unix_now() -> Option<String> {
    let secs = std::time::SystemTime::now()
        .duration_since(std::time::UNIX_EPOCH)
        .ok()?
        .as_secs();
    Some(format!("unix:{secs}"))
}

impl Certificate {
    pub fn new(
        kind: CertificateKind,
        group: GroupRecord,
        pi: Option<PrimeSet>,
        claim: Claim,
        transcript: Vec<String>,
        limits: &Limits,
    ) -> Self {
        let mut cert = Certificate {
            schema: SCHEMA.to_string(),
            kind,
            group,
            pi,
            claim,
            transcript,
            caps: limits.into(),
            created: None,
            digest: String::new(),
        };
        cert.digest = cert.compute_digest();
        cert.created = unix_now();
        cert
    }

    pub fn compute_digest(&self) -> String {
        let mut bare = self.clone();
        bare.digest.clear();
        bare.created = None;
        let bytes = serde_json::to_vec(&bare).expect("certificates serialize");
        hex::encode(Sha256::digest(&bytes))
    }

    pub fn file_name(&self) -> String {
        format!("{}-{}.json", self.kind.as_str(), &self.digest[..16])
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("certificates serialize");
        s.push('\n');
        s
    }

    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| GroupError::Parse(format!("certificate: {e}")))
    }

    pub fn write_to(&self, dir: &Path) -> Result<PathBuf> {
        std::fs::create_dir_all(dir)?;
        let path = dir.join(self.file_name());
        std::fs::write(&path, self.to_json())?;
        Ok(path)
    }

    pub fn read_from(path: &Path) -> Result<Self> {
        Certificate::from_json(&std::fs::read_to_string(path)?)
    }
}

/// Outcome of replaying a certificate.
#[derive(Clone, Debug, Default)]
pub struct Replay {
    pub confirmed: Vec<String>,
    pub failures: Vec<String>,
}

impl Replay {
    pub fn ok(&self) -> bool {
        self.failures.is_empty()
    }

    fn check(&mut self, cond: bool, what: impl Into<String>) {
        let what = what.into();
        if cond {
            self.confirmed.push(what);
        } else {
            self.failures.push(what);
        }
    }
}

/// First element of `group` satisfying `pred`, scanning every element.
fn scan(group: &PermGroup, limits: &Limits, pred: impl Fn(&Permutation) -> bool) -> Result<Option<Permutation>> {
    Ok(group.elements(limits)?.into_iter().find(|x| pred(x)))
}

/// Whether `h^x ≤ target`, tested on generators.
fn conjugates_into(h: &PermGroup, x: &Permutation, target: &PermGroup) -> bool {
    h.generators().iter().all(|a| target.contains(&a.conjugate_by(x)))
}

/// Replays a certificate in full: digest, group, and the claim's scans.
pub fn verify(cert: &Certificate) -> Result<Replay> {
    let mut r = Replay::default();
    r.check(cert.schema == SCHEMA, format!("schema {}", cert.schema));
    r.check(cert.compute_digest() == cert.digest, "content digest");
    let limits: Limits = cert.caps.into();
    let g = cert.group.build()?;
    r.confirmed
        .push(format!("group of order {} on {} points", g.order(), g.degree()));
    let kind_matches = matches!(
        (&cert.kind, &cert.claim),
        (CertificateKind::ConjugacyWitness, Claim::Conjugate { .. })
            | (CertificateKind::NonPronormality, Claim::NotPronormal { .. })
            | (CertificateKind::NonPronormality, Claim::NotStronglyPronormal { .. })
            | (CertificateKind::HallClasses, Claim::HallClasses { .. })
            | (CertificateKind::SylowTower, Claim::SylowTower { .. })
            | (CertificateKind::ConjectureFinding, Claim::Finding { .. })
    );
    r.check(kind_matches, format!("claim fits kind {}", cert.kind.as_str()));
    replay_claim(&mut r, &g, cert.pi.as_ref(), &cert.claim, &limits)?;
    Ok(r)
}

fn replay_claim(r: &mut Replay, g: &PermGroup, pi: Option<&PrimeSet>, claim: &Claim, limits: &Limits) -> Result<()> {
    let n = g.degree();
    match claim {
        Claim::Conjugate {
            source,
            target,
            element,
            into,
        } => {
            let (s, t, x) = (subgroup(n, source)?, subgroup(n, target)?, perm(element, n)?);
            r.check(g.contains(&x), "conjugating element lies in G");
            r.check(
                g.contains_group(&s) && g.contains_group(&t),
                "source and target lie in G",
            );
            let image = s.conjugate(&x);
            if *into {
                r.check(t.contains_group(&image), "source^x is inside target");
            } else {
                r.check(image.same_group(&t), "source^x equals target");
            }
        }
        Claim::NotPronormal {
            subject,
            g: x,
            joint,
            blocks,
            block,
        } => {
            let (h, x, joint) = (subgroup(n, subject)?, perm(x, n)?, subgroup(n, joint)?);
            r.check(g.contains(&x), "g lies in G");
            r.check(g.contains_group(&h), "H lies in G");
            let l = h.conjugate(&x);
            r.check(joint.same_group(&h.join(l.generators())?), "joint equals <H, H^g>");
            match (blocks, block) {
                (None, None) => {
                    let found = scan(&joint, limits, |y| conjugates_into(&h, y, &l))?;
                    r.check(
                        found.is_none(),
                        format!("no element of the joint (order {}) conjugates H to H^g", joint.order()),
                    );
                }
                (Some(blocks), Some(i)) => {
                    let system = BlockSystem::new(n, blocks.clone())?;
                    r.check(*i < system.len(), "block index in range");
                    let (hl, ll, jl) = (
                        system.local_factors(&h),
                        system.local_factors(&l),
                        system.local_factors(&joint),
                    );
                    r.check(
                        hl.is_some() && ll.is_some() && jl.is_some(),
                        "H, H^g and the joint are products along the blocks",
                    );
                    if let (Some(hl), Some(ll), Some(jl), true) = (hl, ll, jl, *i < system.len()) {
                        let (hi, li, ji) = (&hl[*i], &ll[*i], &jl[*i]);
                        let found = scan(ji, limits, |y| conjugates_into(hi, y, li))?;
                        r.check(
                            found.is_none(),
                            format!(
                                "no element of block {i} of the joint (order {}) conjugates the components",
                                ji.order()
                            ),
                        );
                    }
                }
                _ => r.check(false, "blocks and block index come together"),
            }
        }
        Claim::NotStronglyPronormal {
            subject,
            k,
            g: x,
            joint,
        } => {
            let (h, k, x, joint) = (subgroup(n, subject)?, subgroup(n, k)?, perm(x, n)?, subgroup(n, joint)?);
            r.check(g.contains(&x), "g lies in G");
            r.check(g.contains_group(&h) && h.contains_group(&k), "K ≤ H ≤ G");
            let kg = k.conjugate(&x);
            r.check(joint.same_group(&h.join(kg.generators())?), "joint equals <H, K^g>");
            let found = scan(&joint, limits, |y| conjugates_into(&kg, y, &h))?;
            r.check(
                found.is_none(),
                format!("no element of the joint (order {}) maps K^g into H", joint.order()),
            );
        }
        Claim::HallClasses {
            hall_order,
            class_reps,
            satisfies_e,
            satisfies_c,
            satisfies_d,
            e_failure,
        } => {
            let Some(pi) = pi else {
                r.check(false, "π is recorded");
                return Ok(());
            };
            r.check(
                *hall_order as u128 == pi_part(g.order(), pi),
                "Hall order is the π-part of |G|",
            );
            let reps = class_reps.iter().map(|c| subgroup(n, c)).collect::<Result<Vec<_>>>()?;
            for (i, h) in reps.iter().enumerate() {
                r.check(
                    g.contains_group(h) && h.order() == *hall_order as u128,
                    format!("representative {i} is a Hall subgroup"),
                );
            }
            let elements = if reps.len() > 1 {
                g.elements(limits)?
            } else {
                Vec::new()
            };
            for i in 0..reps.len() {
                for j in i + 1..reps.len() {
                    let conj = elements.iter().any(|x| conjugates_into(&reps[i], x, &reps[j]));
                    r.check(
                        !conj,
                        format!("representatives {i} and {j} are not conjugate (full scan)"),
                    );
                }
            }
            let v = classify(g, pi, limits)?;
            r.check(
                v.class_count == reps.len(),
                format!("{} Hall classes in the π-subgroup lattice", v.class_count),
            );
            r.check(
                (v.satisfies_e, v.satisfies_c, v.satisfies_d) == (*satisfies_e, *satisfies_c, *satisfies_d),
                "E, C and D verdicts",
            );
            r.check(v.e_failure == *e_failure, "E failure reason");
        }
        Claim::SylowTower {
            subject,
            complexion,
            series,
        } => {
            let h = subgroup(n, subject)?;
            r.check(g.contains_group(&h), "H lies in G");
            let terms = series.iter().map(|s| subgroup(n, s)).collect::<Result<Vec<_>>>()?;
            r.check(terms.len() == complexion.len() + 1, "one term per prime plus the top");
            if terms.len() == complexion.len() + 1 {
                r.check(terms[0].same_group(&h), "series starts at H");
                r.check(terms[terms.len() - 1].is_trivial(), "series ends at 1");
                for (i, &p) in complexion.iter().enumerate() {
                    let (upper, lower) = (&terms[i], &terms[i + 1]);
                    let p_part = pi_part(h.order(), &PrimeSet::new([p])?);
                    r.check(
                        upper.contains_group(lower) && upper.order() == lower.order() * p_part,
                        format!("term {} has index the {p}-part of |H| in term {i}", i + 1),
                    );
                    r.check(h.is_normal(lower)?, format!("term {} is normal in H", i + 1));
                }
            }
        }
        Claim::Finding {
            conjecture,
            subject,
            evidence,
        } => {
            let h = subgroup(n, subject)?;
            r.check(g.contains_group(&h), "subject lies in G");
            if let Some(pi) = pi {
                r.check(h.order() == pi_part(g.order(), pi), "subject is a Hall π-subgroup of G");
            }
            r.confirmed.push(format!("finding for conjecture {conjecture}"));
            replay_claim(r, g, pi, evidence, limits)?;
        }
    }
    Ok(())
}
