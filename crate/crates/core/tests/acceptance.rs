//! One line per acceptance criterion, written straight to stdout so it shows
//! up without `--nocapture`.

mod common;

use std::io::Write;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::path::{Path, PathBuf};
use std::process::Command;
use std::time::Instant;

use hallgroup::cli::catalog::{Catalog, DEFAULT_MAX_ORDER};
use hallgroup::construct::{alternating, cyclic, dihedral, direct_product, psl2, symmetric};
use hallgroup::error::Limits;
use hallgroup::perm::{PermGroup, Permutation};
use hallgroup::subgroups::{is_conjugate_blockwise, is_conjugate_by_transversal, BlockSystem, BlockwiseOutcome};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Outcome = Result<String, String>;

struct Run {
    code: Option<i32>,
    stdout: String,
}

fn hallgroup(out: &Path, args: &[&str]) -> Run {
    std::fs::create_dir_all(out).unwrap();
    let o = Command::new(env!("CARGO_BIN_EXE_hallgroup"))
        .arg("--out")
        .arg(out)
        .args(args)
        .env_remove("HALLGROUP_MAX_ORDER")
        .output()
        .unwrap();
    Run {
        code: o.status.code(),
        stdout: String::from_utf8_lossy(&o.stdout).into_owned(),
    }
}

fn expect(cond: bool, what: &str, run: &Run) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(format!("{what}; exit {:?}; output:\n{}", run.code, run.stdout))
    }
}

fn certificates_in(dir: &Path) -> Vec<PathBuf> {
    let Ok(rd) = std::fs::read_dir(dir) else {
        return Vec::new();
    };
    let mut v: Vec<PathBuf> = rd
        .map(|e| e.unwrap().path())
        .filter(|p| p.extension().is_some_and(|e| e == "json"))
        .collect();
    v.sort();
    v
}

fn verify_all(files: &[PathBuf]) -> Run {
    let mut args = vec!["verify".to_string()];
    args.extend(files.iter().map(|p| p.to_string_lossy().into_owned()));
    let o = Command::new(env!("CARGO_BIN_EXE_hallgroup"))
        .args(&args)
        .output()
        .unwrap();
    Run {
        code: o.status.code(),
        stdout: String::from_utf8_lossy(&o.stdout).into_owned(),
    }
}

fn example1(dir: &Path) -> Outcome {
    let a = hallgroup(dir, &["analyze", "psl2:16", "--pi", "3,5"]);
    expect(a.code == Some(0), "analyze failed", &a)?;
    expect(
        a.stdout
            .contains("Hall order 15; E yes, C yes, D yes; 1 Hall class(es)"),
        "psl2:16 verdicts",
        &a,
    )?;
    let e = hallgroup(dir, &["example1"]);
    expect(e.code == Some(0), "example1 failed", &e)?;
    expect(
        e.stdout.contains("E fails: no subgroup of order 15"),
        "SL2(4) reason",
        &e,
    )?;
    Ok("PSL2(16) E/C/D with 1 class of order 15; SL2(4) has no subgroup of order 15".into())
}

fn example2(dir: &Path) -> Outcome {
    for (n, m) in [("5", "3"), ("7", "4")] {
        let sub = dir.join(format!("n{n}m{m}"));
        let r = hallgroup(&sub, &["example2", "--n", n, "--m", m]);
        expect(r.code == Some(0), "example2 failed", &r)?;
        expect(r.stdout.contains("pronormal: yes"), "not pronormal", &r)?;
        expect(r.stdout.contains("strongly pronormal: no"), "strongly pronormal", &r)?;
        let certs = certificates_in(&sub);
        let v = verify_all(&certs);
        expect(
            !certs.is_empty() && v.code == Some(0),
            "failing pair certificate does not replay",
            &v,
        )?;
    }
    Ok("(5,3) and (7,4): pronormal, not strongly pronormal, (K, g) replays".into())
}

/// Classes of order-24 subgroups of PSL2(7) by exhaustive search.
fn psl2_7_order_24_classes() -> usize {
    let g = psl2(7).unwrap();
    let all = common::elements(&g);
    let subs = common::all_subgroups(g.degree(), &all);
    let of_24: Vec<common::Set> = subs.into_iter().filter(|h| h.len() == 24).collect();
    common::classes(&all, &of_24).len()
}

fn theorem3(dir: &Path) -> Outcome {
    let classes = psl2_7_order_24_classes();
    if classes != 2 {
        return Err(format!(
            "oracle found {classes} classes of order-24 subgroups in PSL2(7)"
        ));
    }
    let r = hallgroup(dir, &["theorem3", "--base", "psl2:7", "--pi", "2,3", "--p", "5"]);
    expect(r.code == Some(0), "theorem3 failed", &r)?;
    let order = 168u128.pow(5) * 5;
    expect(
        r.stdout.contains(&format!("order {order} on 40 points")),
        "order or degree",
        &r,
    )?;
    expect(r.stdout.contains("[ok] H^τ = K"), "H^τ = K", &r)?;
    expect(r.stdout.contains("decided in block"), "no blockwise decision", &r)?;
    expect(r.stdout.contains("[ok] H is not pronormal in G"), "H pronormal", &r)?;
    let certs = certificates_in(dir);
    let has = |kind: &str| {
        certs
            .iter()
            .any(|p| p.file_name().unwrap().to_string_lossy().starts_with(kind))
    };
    if !has("conjugacy-witness") || !has("non-pronormality") {
        return Err("missing witness or non-pronormality certificate".into());
    }
    Ok(format!(
        "oracle: 2 classes of order 24 in PSL2(7); |G| = {order}; H^τ = K; H not pronormal"
    ))
}

fn suite(dir: &Path, name: &str) -> Outcome {
    let r = hallgroup(dir, &["--max-order", "500", "suite", name]);
    expect(r.code == Some(0), "suite did not pass", &r)?;
    expect(
        r.stdout.contains("0 violations, 0 indeterminate"),
        "violations or indeterminate outcomes",
        &r,
    )?;
    Ok(r.stdout.lines().last().unwrap_or_default().to_string())
}

fn factor_pool() -> Vec<(&'static str, PermGroup)> {
    vec![
        ("cyc:2", cyclic(2).unwrap()),
        ("cyc:3", cyclic(3).unwrap()),
        ("cyc:4", cyclic(4).unwrap()),
        ("cyc:6", cyclic(6).unwrap()),
        ("sym:3", symmetric(3).unwrap()),
        ("dih:4", dihedral(4).unwrap()),
        ("dih:5", dihedral(5).unwrap()),
        ("dih:6", dihedral(6).unwrap()),
        ("alt:4", alternating(4).unwrap()),
        ("sym:4", symmetric(4).unwrap()),
        ("alt:5", alternating(5).unwrap()),
    ]
}

fn random_local_subgroup(
    rng: &mut ChaCha8Rng,
    blocks: &BlockSystem,
    elems: &[Vec<Permutation>],
    degree: usize,
) -> PermGroup {
    let mut gens = Vec::new();
    for (i, e) in elems.iter().enumerate() {
        for _ in 0..rng.gen_range(0..=2) {
            gens.push(blocks.embed(e.choose(rng).unwrap(), i));
        }
    }
    PermGroup::new(degree, gens).unwrap()
}

fn oracle_equivalence() -> Outcome {
    let l = Limits::default();
    let pool = factor_pool();
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_2024);
    let (mut conj, mut nonconj) = (0, 0);
    for case in 0..200 {
        let count = if rng.gen_bool(0.25) { 3 } else { 2 };
        let mut picked: Vec<&(&str, PermGroup)> = Vec::new();
        while picked.len() < count {
            let f = pool.choose(&mut rng).unwrap();
            let order: u128 = picked.iter().map(|(_, g)| g.order()).product::<u128>() * f.1.order();
            if order <= 4000 {
                picked.push(f);
            }
        }
        let factors: Vec<PermGroup> = picked.iter().map(|(_, g)| g.clone()).collect();
        let g = direct_product(&factors).unwrap();
        let blocks = BlockSystem::of_group(&g).ok_or("product without blocks")?;
        let elems: Vec<Vec<Permutation>> = factors.iter().map(|f| f.elements(&l).unwrap()).collect();
        let h = random_local_subgroup(&mut rng, &blocks, &elems, g.degree());
        let k = if rng.gen_bool(0.5) {
            let x = elems
                .iter()
                .enumerate()
                .map(|(i, e)| blocks.embed(e.choose(&mut rng).unwrap(), i))
                .fold(Permutation::identity(g.degree()), |a, b| a.compose(&b).unwrap());
            h.conjugate(&x)
        } else {
            random_local_subgroup(&mut rng, &blocks, &elems, g.degree())
        };
        let names: Vec<&str> = picked.iter().map(|(n, _)| *n).collect();
        let fast = is_conjugate_blockwise(&blocks, &g, &h, &k, &l).unwrap();
        let slow = is_conjugate_by_transversal(&g, &h, &k, &l).unwrap();
        match (&fast, &slow) {
            (BlockwiseOutcome::Conjugate(w), Some(_)) => {
                if !w.replay() {
                    return Err(format!("case {case} {names:?}: blockwise witness does not replay"));
                }
                conj += 1;
            }
            (BlockwiseOutcome::NotConjugate { .. }, None) => nonconj += 1,
            _ => {
                return Err(format!(
                    "case {case} {names:?}: blockwise {fast:?} vs transversal {slow:?}"
                ))
            }
        }
    }
    if conj == 0 || nonconj == 0 {
        return Err(format!("degenerate sample: {conj} conjugate, {nonconj} not"));
    }

    let catalog = Catalog::build(DEFAULT_MAX_ORDER).map_err(|e| e.to_string())?;
    for entry in &catalog.entries {
        let listed = entry.group.elements(&l).map_err(|e| e.to_string())?;
        let mut distinct = listed.clone();
        distinct.sort();
        distinct.dedup();
        if distinct.len() as u128 != entry.group.order() || distinct.len() != listed.len() {
            return Err(format!(
                "{}: chain order {} vs {} elements",
                entry.name,
                entry.group.order(),
                distinct.len()
            ));
        }
    }
    Ok(format!(
        "200 products ({conj} conjugate, {nonconj} not) agree; chain order = enumeration for {} catalog members",
        catalog.len()
    ))
}

fn findings_in(stdout: &str) -> Option<usize> {
    let line = stdout.lines().find(|l| l.contains(" findings"))?;
    let before = line.split(" findings").next()?;
    before.rsplit(' ').next()?.parse().ok()
}

fn probes(dir: &Path) -> Outcome {
    let mut notes = Vec::new();
    for n in ["9", "11"] {
        let sub = dir.join(format!("probe{n}"));
        let r = hallgroup(&sub, &["--max-order", "300", "probe", n]);
        expect(r.code == Some(0), "probe did not complete", &r)?;
        let found = findings_in(&r.stdout).ok_or_else(|| format!("no findings count in {}", r.stdout))?;
        if found > 0 {
            let v = verify_all(&certificates_in(&sub));
            expect(v.code == Some(0), "finding certificate fails replay", &v)?;
        }
        notes.push(format!("probe {n}: {found} findings"));
    }
    Ok(notes.join("; "))
}

fn replay_everything(root: &Path) -> Outcome {
    let mut files = Vec::new();
    let mut stack = vec![root.to_path_buf()];
    while let Some(d) = stack.pop() {
        for e in std::fs::read_dir(&d).unwrap() {
            let p = e.unwrap().path();
            if p.is_dir() {
                stack.push(p);
            } else if p.extension().is_some_and(|e| e == "json") {
                files.push(p);
            }
        }
    }
    files.sort();
    if files.is_empty() {
        return Err("no certificates were emitted".into());
    }
    let v = verify_all(&files);
    expect(v.code == Some(0), "verify rejected a certificate", &v)?;
    let verified = v.stdout.lines().filter(|l| l.ends_with(": verified")).count();
    if verified != files.len() {
        return Err(format!("{verified} of {} certificates verified", files.len()));
    }
    Ok(format!("{} certificates verified in a fresh process", files.len()))
}

#[test]
fn acceptance_criteria() {
    let root = tempfile::tempdir().unwrap();
    let dir = |n: u32| root.path().join(format!("c{n}"));
    let criteria: Vec<(u32, Box<dyn Fn() -> Outcome>)> = vec![
        (1, Box::new(|| example1(&dir(1)))),
        (2, Box::new(|| example2(&dir(2)))),
        (3, Box::new(|| theorem3(&dir(3)))),
        (4, Box::new(|| suite(&dir(4), "theorem2"))),
        (5, Box::new(|| suite(&dir(5), "theorem1"))),
        (6, Box::new(|| suite(&dir(6), "classical-pronormal"))),
        (7, Box::new(|| suite(&dir(7), "towers"))),
        (8, Box::new(oracle_equivalence)),
        (9, Box::new(|| probes(&dir(9)))),
        (10, Box::new(|| replay_everything(root.path()))),
    ];
    let mut failed = Vec::new();
    for (n, check) in criteria {
        let start = Instant::now();
        let outcome = catch_unwind(AssertUnwindSafe(&*check)).unwrap_or_else(|_| Err("panicked".into()));
        let secs = start.elapsed().as_secs_f64();
        let line = match &outcome {
            Ok(detail) => format!("criterion {n}: PASS ({secs:.1}s) {detail}"),
            Err(why) => format!("criterion {n}: FAIL ({secs:.1}s) {why}"),
        };
        writeln!(std::io::stdout().lock(), "{line}").unwrap();
        if outcome.is_err() {
            failed.push(n);
        }
    }
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}
