//! Block decompositions: groups whose generators each move points of a
//! single block are direct products of their per-block restrictions.

use crate::error::{GroupError, Result};
use crate::perm::{DirectFactorStructure, PermGroup, Permutation};

const NO_BLOCK: u32 = u32::MAX;

/// Pairwise disjoint point sets with local coordinates inside each block.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BlockSystem {
    degree: usize,
    blocks: Vec<Vec<u32>>,
    block_of: Vec<u32>,
    local: Vec<u32>,
}

impl BlockSystem {
    pub fn new(degree: usize, blocks: Vec<Vec<u32>>) -> Result<Self> {
        let mut block_of = vec![NO_BLOCK; degree];
        let mut local = vec![0; degree];
        for (i, b) in blocks.iter().enumerate() {
            if b.is_empty() {
                return Err(GroupError::Precondition("empty block".into()));
            }
            for (j, &x) in b.iter().enumerate() {
                let slot = block_of
                    .get_mut(x as usize)
                    .ok_or_else(|| GroupError::Precondition(format!("block point {x} out of range")))?;
                if *slot != NO_BLOCK {
                    return Err(GroupError::Precondition(format!("point {x} lies in two blocks")));
                }
                *slot = i as u32;
                local[x as usize] = j as u32;
            }
        }
        Ok(BlockSystem {
            degree,
            blocks,
            block_of,
            local,
        })
    }

    /// The blocks recorded on a group's direct-factor structure.
    pub fn of_group(g: &PermGroup) -> Option<Self> {
        g.factors()
            .and_then(|f| BlockSystem::new(g.degree(), f.blocks.clone()).ok())
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn blocks(&self) -> &[Vec<u32>] {
        &self.blocks
    }

    pub fn len(&self) -> usize {
        self.blocks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.is_empty()
    }

    /// The block containing the support of `p`: `Ok(None)` for the identity,
    /// `Err(())` when `p` moves points of several blocks or outside all blocks.
    #[allow(clippy::result_unit_err)]
    pub fn home_block(&self, p: &Permutation) -> std::result::Result<Option<usize>, ()> {
        let mut home = None;
        for x in p.support() {
            let b = self.block_of[x as usize];
            if b == NO_BLOCK || home.is_some_and(|h| h != b as usize) {
                return Err(());
            }
            home = Some(b as usize);
        }
        Ok(home)
    }

    /// `p` restricted to block `i`, on local points `0..|block|`.
    pub fn restrict(&self, p: &Permutation, i: usize) -> Permutation {
        let imgs = self.blocks[i]
            .iter()
            .map(|&x| self.local[p.image(x) as usize])
            .collect();
        Permutation::from_images(imgs).expect("block is invariant")
    }

    /// A local permutation of block `i` extended by the identity.
    pub fn embed(&self, local: &Permutation, i: usize) -> Permutation {
        let block = &self.blocks[i];
        let mut imgs: Vec<u32> = (0..self.degree as u32).collect();
        for (j, &x) in block.iter().enumerate() {
            imgs[x as usize] = block[local.image(j as u32) as usize];
        }
        Permutation::from_images(imgs).expect("embedding of a permutation")
    }

    /// Per-block local generator lists, or `None` if some generator straddles blocks.
    pub fn split_generators(&self, gens: &[Permutation]) -> Option<Vec<Vec<Permutation>>> {
        let mut parts = vec![Vec::new(); self.blocks.len()];
        for g in gens {
            if g.degree() != self.degree {
                return None;
            }
            if let Some(i) = self.home_block(g).ok()? {
                parts[i].push(self.restrict(g, i));
            }
        }
        Some(parts)
    }

    /// The local factor groups of `g`, one per block, when `g` is blockwise.
    pub fn local_factors(&self, g: &PermGroup) -> Option<Vec<PermGroup>> {
        let parts = self.split_generators(g.generators())?;
        Some(
            parts
                .into_iter()
                .zip(&self.blocks)
                .map(|(gens, b)| PermGroup::new(b.len(), gens).expect("local degrees agree"))
                .collect(),
        )
    }

    /// `g` with this block system recorded as its direct-factor structure,
    /// when every generator lives in one block.
    pub fn attach(&self, g: &PermGroup) -> Option<PermGroup> {
        let parts = self.split_generators(g.generators())?;
        let factor_groups = parts
            .iter()
            .enumerate()
            .map(|(i, gens)| {
                let gens = gens.iter().map(|x| self.embed(x, i)).collect();
                PermGroup::new(self.degree, gens).expect("same degree")
            })
            .collect();
        Some(g.clone().with_factors(DirectFactorStructure {
            blocks: self.blocks.clone(),
            factor_groups,
            shift: g.factors().and_then(|f| f.shift.clone()),
        }))
    }
}
