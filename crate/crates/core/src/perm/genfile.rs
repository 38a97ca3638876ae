//! Generator files.
//!
//! ```text
//! # comments run to end of line; blank lines are ignored
//! degree 5
//! (0 1)
//! (0 1 2 3 4)
//! ```
//!
//! The first non-comment line is `degree n`. Every further line holds one
//! permutation in disjoint-cycle notation on the points `0..n`, with `()`
//! for the identity.

use super::group::PermGroup;
use super::permutation::Permutation;
use crate::error::{GroupError, Result};

pub fn parse_generator_file(text: &str) -> Result<PermGroup> {
    let mut degree: Option<usize> = None;
    let mut gens = Vec::new();
    for (lineno, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        match degree {
            None => {
                let n = line
                    .strip_prefix("degree")
                    .map(str::trim)
                    .and_then(|s| s.parse::<usize>().ok())
                    .filter(|&n| n > 0)
                    .ok_or_else(|| GroupError::Parse(format!("line {}: expected `degree n`", lineno + 1)))?;
                degree = Some(n);
            }
            Some(n) => {
                let p = Permutation::parse_cycles(line, n)
                    .map_err(|e| GroupError::Parse(format!("line {}: {e}", lineno + 1)))?;
                gens.push(p);
            }
        }
    }
    let n = degree.ok_or_else(|| GroupError::Parse("missing `degree n` line".into()))?;
    PermGroup::new(n, gens)
}

pub fn write_generator_file(group: &PermGroup) -> String {
    let mut out = format!("degree {}\n", group.degree());
    for g in group.generators() {
        out.push_str(&g.to_string());
        out.push('\n');
    }
    out
}
