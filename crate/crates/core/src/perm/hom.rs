use rustc_hash::FxHashMap;

use super::chain::StabilizerChain;
use super::enumerated::Enumerated;
use super::group::PermGroup;
use super::permutation::Permutation;
use crate::error::{GroupError, Limits, Result};

/// A homomorphism given by images of the source generators.
///
/// Validity is decided exactly: the graph `{(g, φ(g))}` generated by the
/// pairs `(s, φ(s))` has the order of the source iff the assignment extends
/// to a homomorphism. The graph chain then evaluates `φ` on any element.
#[derive(Clone, Debug)]
pub struct GroupHom {
    source: PermGroup,
    target_degree: usize,
    images: Vec<Permutation>,
    graph: StabilizerChain,
}

impl GroupHom {
    pub fn new(source: PermGroup, target_degree: usize, images: Vec<Permutation>) -> Result<Self> {
        if images.len() != source.generators().len() {
            return Err(GroupError::InvalidHom(format!(
                "{} images for {} generators",
                images.len(),
                source.generators().len()
            )));
        }
        if let Some(bad) = images.iter().find(|x| x.degree() != target_degree) {
            return Err(GroupError::DegreeMismatch(target_degree, bad.degree()));
        }
        let pairs: Vec<Permutation> = source
            .generators()
            .iter()
            .zip(&images)
            .map(|(g, x)| g.juxtapose(x))
            .collect();
        let graph = StabilizerChain::new(source.degree() + target_degree, &pairs);
        if graph.order()? != source.try_order()? {
            return Err(GroupError::InvalidHom(
                "generator images do not satisfy the source relations".into(),
            ));
        }
        Ok(GroupHom {
            source,
            target_degree,
            images,
            graph,
        })
    }

    pub fn source(&self) -> &PermGroup {
        &self.source
    }

    pub fn target_degree(&self) -> usize {
        self.target_degree
    }

    pub fn generator_images(&self) -> &[Permutation] {
        &self.images
    }

    pub fn image_group(&self) -> PermGroup {
        PermGroup::new(self.target_degree, self.images.clone()).expect("checked degrees")
    }

    /// `φ(g)` for `g` in the source.
    pub fn apply(&self, g: &Permutation) -> Result<Permutation> {
        let n = self.source.degree();
        if g.degree() != n {
            return Err(GroupError::DegreeMismatch(n, g.degree()));
        }
        // Sift (g, ?) on the source coordinates only; the base lies there
        // because the graph meets 1 × target trivially.
        let mut rest = g.clone();
        let mut factors: Vec<&Permutation> = Vec::new();
        for level in self.graph.levels() {
            let b = level.base_point();
            debug_assert!((b as usize) < n);
            let img = rest.image(b);
            let u = level
                .coset_rep(img)
                .ok_or_else(|| GroupError::NotSubgroup(format!("{g} is not in the source")))?;
            let u_src = Permutation::from_images_unchecked(u.images()[..n].to_vec());
            rest = rest.then(&u_src.inverse());
            factors.push(u);
        }
        if !rest.is_identity() {
            return Err(GroupError::NotSubgroup(format!("{g} is not in the source")));
        }
        let mut out = Permutation::identity(self.target_degree);
        for u in factors.iter().rev() {
            let tgt: Vec<u32> = u.images()[n..].iter().map(|&x| x - n as u32).collect();
            out = out.then(&Permutation::from_images_unchecked(tgt));
        }
        Ok(out)
    }

    /// Image of a subgroup of the source.
    pub fn image_of(&self, h: &PermGroup) -> Result<PermGroup> {
        let gens = h
            .generators()
            .iter()
            .map(|x| self.apply(x))
            .collect::<Result<Vec<_>>>()?;
        PermGroup::new(self.target_degree, gens)
    }
}

/// Action of `g` on the right cosets of the normal subgroup `a`, returning the
/// homomorphism and its image, a faithful copy of `g / a`.
pub fn coset_action(g: &PermGroup, a: &PermGroup, limits: &Limits) -> Result<(GroupHom, PermGroup)> {
    if !g.is_normal(a)? {
        return Err(GroupError::NotNormal("coset action needs a normal subgroup".into()));
    }
    let index = g.try_order()? / a.try_order()?;
    limits.check_index(index)?;
    let images = if g.try_order()? <= limits.enum_cap {
        coset_images_enumerated(g, a, limits)?
    } else {
        coset_images_by_membership(g, a)
    };
    let hom = GroupHom::new(g.clone(), index as usize, images)?;
    let image = hom.image_group();
    debug_assert_eq!(image.order(), index);
    for x in a.generators() {
        debug_assert!(hom.apply(x).expect("in source").is_identity());
    }
    Ok((hom, image))
}

fn coset_images_enumerated(g: &PermGroup, a: &PermGroup, limits: &Limits) -> Result<Vec<Permutation>> {
    let amb = Enumerated::new(g, limits)?;
    let whole = amb.whole();
    let sub = amb.sub_from_perms(a.generators())?;
    let reps = amb.right_transversal(&whole, &sub);
    let mut label = vec![u32::MAX; amb.len()];
    for (i, &r) in reps.iter().enumerate() {
        for &x in sub.elems() {
            label[amb.mul(x, r) as usize] = i as u32;
        }
    }
    Ok(g.generators()
        .iter()
        .map(|s| {
            let s = amb.index_of(s).expect("generator is an element");
            let imgs = reps.iter().map(|&r| label[amb.mul(r, s) as usize]).collect();
            Permutation::from_images_unchecked(imgs)
        })
        .collect())
}

// Cosets of a are told apart by the images of a's point orbits, then by
// membership tests inside each bucket.
fn coset_images_by_membership(g: &PermGroup, a: &PermGroup) -> Vec<Permutation> {
    let n = g.degree();
    let mut orbit_of = vec![u32::MAX; n];
    let mut orbits: Vec<Vec<u32>> = Vec::new();
    for x in 0..n as u32 {
        if orbit_of[x as usize] == u32::MAX {
            let o = a.orbit(x);
            for &y in &o {
                orbit_of[y as usize] = orbits.len() as u32;
            }
            orbits.push(o);
        }
    }
    let key = |r: &Permutation| -> Vec<Vec<u32>> {
        orbits
            .iter()
            .map(|o| {
                let mut img: Vec<u32> = o.iter().map(|&x| r.image(x)).collect();
                img.sort_unstable();
                img
            })
            .collect()
    };
    let mut reps: Vec<Permutation> = vec![Permutation::identity(n)];
    let mut buckets: FxHashMap<Vec<Vec<u32>>, Vec<u32>> = FxHashMap::default();
    buckets.insert(key(&reps[0]), vec![0]);
    let find = |reps: &[Permutation], buckets: &FxHashMap<Vec<Vec<u32>>, Vec<u32>>, x: &Permutation| {
        buckets.get(&key(x)).and_then(|cands| {
            cands
                .iter()
                .copied()
                .find(|&c| a.contains(&x.then(&reps[c as usize].inverse())))
        })
    };
    let mut table: Vec<Vec<u32>> = Vec::new();
    let mut i = 0;
    while i < reps.len() {
        let mut row = Vec::with_capacity(g.generators().len());
        for s in g.generators() {
            let y = reps[i].then(s);
            let j = match find(&reps, &buckets, &y) {
                Some(j) => j,
                None => {
                    let j = reps.len() as u32;
                    buckets.entry(key(&y)).or_default().push(j);
                    reps.push(y);
                    j
                }
            };
            row.push(j);
        }
        table.push(row);
        i += 1;
    }
    (0..g.generators().len())
        .map(|s| Permutation::from_images_unchecked(table.iter().map(|row| row[s]).collect()))
        .collect()
}
