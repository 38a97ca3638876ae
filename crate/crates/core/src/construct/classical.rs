use crate::error::{GroupError, Result};
use crate::perm::{DirectFactorStructure, PermGroup, Permutation};
use crate::subgroups::BlockSystem;

fn cycle(n: usize, points: impl IntoIterator<Item = u32>) -> Permutation {
    let pts: Vec<u32> = points.into_iter().collect();
    Permutation::from_cycles(n, &[&pts]).expect("valid cycle")
}

/// Checks a constructed group's chain order against the expected formula.
pub(crate) fn verified(g: PermGroup, expected: u128, what: &str) -> Result<PermGroup> {
    let order = g.try_order()?;
    if order != expected {
        return Err(GroupError::SelfCheck(format!(
            "{what}: order {order}, expected {expected}"
        )));
    }
    Ok(g)
}

fn require_positive(n: usize) -> Result<()> {
    if n == 0 {
        return Err(GroupError::Precondition("degree must be at least 1".into()));
    }
    Ok(())
}

fn factorial(n: usize) -> Result<u128> {
    (1..=n as u128).try_fold(1u128, |acc, k| acc.checked_mul(k).ok_or(GroupError::Overflow))
}

/// Sym(n) generated by `(0 1)` and `(0 1 … n−1)`.
pub fn symmetric(n: usize) -> Result<PermGroup> {
    require_positive(n)?;
    let gens = match n {
        1 => Vec::new(),
        2 => vec![cycle(2, [0, 1])],
        _ => vec![cycle(n, [0, 1]), cycle(n, 0..n as u32)],
    };
    verified(PermGroup::new(n, gens)?, factorial(n)?, "symmetric")
}

/// Alt(n) generated by the 3-cycles `(0 1 k)`.
pub fn alternating(n: usize) -> Result<PermGroup> {
    require_positive(n)?;
    let gens = (2..n as u32).map(|k| cycle(n, [0, 1, k])).collect();
    let expected = if n < 2 { 1 } else { factorial(n)? / 2 };
    verified(PermGroup::new(n, gens)?, expected, "alternating")
}

/// The cyclic group generated by an `n`-cycle.
pub fn cyclic(n: usize) -> Result<PermGroup> {
    require_positive(n)?;
    let gens = if n == 1 {
        Vec::new()
    } else {
        vec![cycle(n, 0..n as u32)]
    };
    verified(PermGroup::new(n, gens)?, n as u128, "cyclic")
}

/// The dihedral group of order `2n`: symmetries of an `n`-gon for `n ≥ 3`,
/// the regular action of order 2 on 2 points for `n = 1`, and the Klein
/// four-group on 4 points for `n = 2`.
pub fn dihedral(n: usize) -> Result<PermGroup> {
    require_positive(n)?;
    let g = match n {
        1 => PermGroup::new(2, vec![cycle(2, [0, 1])])?,
        2 => PermGroup::new(
            4,
            vec![
                Permutation::parse_cycles("(0 1)(2 3)", 4)?,
                Permutation::parse_cycles("(0 2)(1 3)", 4)?,
            ],
        )?,
        _ => {
            let reflection = Permutation::from_images((0..n as u32).map(|x| (n as u32 - x) % n as u32).collect())?;
            PermGroup::new(n, vec![cycle(n, 0..n as u32), reflection])?
        }
    };
    verified(g, 2 * n as u128, "dihedral")
}

/// Direct product on disjoint consecutive blocks, with the block structure recorded.
pub fn direct_product(factors: &[PermGroup]) -> Result<PermGroup> {
    match factors {
        [] => Err(GroupError::Precondition("empty direct product".into())),
        [single] => Ok(single.clone()),
        _ => {
            let degree: usize = factors.iter().map(|f| f.degree()).sum();
            let mut blocks = Vec::new();
            let mut start = 0u32;
            for f in factors {
                blocks.push((start..start + f.degree() as u32).collect::<Vec<u32>>());
                start += f.degree() as u32;
            }
            let system = BlockSystem::new(degree, blocks.clone())?;
            let mut gens = Vec::new();
            let mut factor_groups = Vec::new();
            let mut expected: u128 = 1;
            for (i, f) in factors.iter().enumerate() {
                let embedded: Vec<Permutation> = f.generators().iter().map(|x| system.embed(x, i)).collect();
                gens.extend(embedded.iter().cloned());
                factor_groups.push(PermGroup::new(degree, embedded)?);
                expected = expected.checked_mul(f.try_order()?).ok_or(GroupError::Overflow)?;
            }
            let g = PermGroup::new(degree, gens)?.with_factors(DirectFactorStructure {
                blocks,
                factor_groups,
                shift: None,
            });
            verified(g, expected, "direct product")
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn family_orders() {
        assert_eq!(symmetric(5).unwrap().order(), 120);
        assert_eq!(symmetric(1).unwrap().order(), 1);
        assert_eq!(alternating(5).unwrap().order(), 60);
        assert_eq!(alternating(2).unwrap().order(), 1);
        assert_eq!(cyclic(15).unwrap().order(), 15);
        assert_eq!(dihedral(4).unwrap().degree(), 4);
        assert_eq!(dihedral(4).unwrap().order(), 8);
        assert_eq!(dihedral(1).unwrap().order(), 2);
        assert_eq!(dihedral(2).unwrap().order(), 4);
        assert!(symmetric(0).is_err());
    }

    #[test]
    fn products() {
        let s3 = symmetric(3).unwrap();
        let p = direct_product(&[s3.clone(), s3.clone()]).unwrap();
        assert_eq!((p.degree(), p.order()), (6, 36));
        assert_eq!(p.factors().unwrap().blocks, vec![vec![0, 1, 2], vec![3, 4, 5]]);
        assert_eq!(direct_product(std::slice::from_ref(&s3)).unwrap().order(), 6);
        assert!(direct_product(&[]).is_err());
    }
}
