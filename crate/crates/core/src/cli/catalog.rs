//! The deterministic catalog of small groups used by suites and probes.

use crate::error::Result;
use crate::perm::PermGroup;

use super::spec::GroupSpec;

pub const DEFAULT_MAX_ORDER: u128 = 2000;

#[derive(Clone, Debug)]
pub struct CatalogEntry {
    pub name: String,
    pub group: PermGroup,
}

#[derive(Clone, Debug)]
pub struct Catalog {
    pub max_order: u128,
    pub entries: Vec<CatalogEntry>,
}

const PRODUCT_FACTORS: [&str; 8] = ["cyc:2", "cyc:3", "sym:3", "dih:4", "dih:5", "alt:4", "sym:4", "alt:5"];

const WREATHS: [(&str, u64); 7] = [
    ("cyc:2", 2),
    ("cyc:3", 2),
    ("cyc:2", 3),
    ("sym:3", 2),
    ("cyc:3", 3),
    ("alt:4", 2),
    ("cyc:5", 2),
];

/// Every candidate member, before the order filter, in catalog order.
pub fn candidate_specs() -> Vec<GroupSpec> {
    let mut specs = Vec::new();
    specs.extend((1..=24).map(GroupSpec::Cyc));
    specs.extend((2..=16).map(GroupSpec::Dih));
    specs.extend((2..=6).map(GroupSpec::Sym));
    specs.extend((4..=7).map(GroupSpec::Alt));
    specs.extend([4, 5, 7, 8].map(GroupSpec::Psl2));
    let factors: Vec<GroupSpec> = PRODUCT_FACTORS
        .iter()
        .map(|s| s.parse().expect("catalog factor"))
        .collect();
    for i in 0..factors.len() {
        for j in i..factors.len() {
            specs.push(GroupSpec::Product(vec![factors[i].clone(), factors[j].clone()]));
        }
    }
    for (base, p) in WREATHS {
        specs.push(GroupSpec::Wreath(Box::new(base.parse().expect("catalog base")), p));
    }
    specs
}

impl Catalog {
    /// Members of order at most `max_order`.
    pub fn build(max_order: u128) -> Result<Catalog> {
        let mut entries = Vec::new();
        for spec in candidate_specs() {
            if estimated_order(&spec).is_some_and(|o| o > max_order) {
                continue;
            }
            let group = spec.build()?;
            if group.order() <= max_order {
                entries.push(CatalogEntry {
                    name: spec.to_string(),
                    group,
                });
            }
        }
        Ok(Catalog { max_order, entries })
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }
}

/// Order from the family formula, to skip building members that are too large.
fn estimated_order(spec: &GroupSpec) -> Option<u128> {
    let fact = |n: usize| (1..=n as u128).product::<u128>();
    match spec {
        GroupSpec::Sym(n) => Some(fact(*n)),
        GroupSpec::Alt(n) => Some(if *n < 2 { 1 } else { fact(*n) / 2 }),
        GroupSpec::Cyc(n) => Some(*n as u128),
        GroupSpec::Dih(n) => Some(2 * *n as u128),
        GroupSpec::Product(parts) => parts
            .iter()
            .try_fold(1u128, |acc, p| acc.checked_mul(estimated_order(p)?)),
        GroupSpec::Wreath(base, p) => estimated_order(base)?.checked_pow(*p as u32)?.checked_mul(*p as u128),
        _ => None,
    }
}
