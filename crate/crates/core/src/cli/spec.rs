//! The group-spec mini-language.
//!
//! ```text
//! spec    := atom | "product(" spec ("," spec)* ")" | "wreath(" spec "," prime ")" | "file:" path
//! atom    := ("sym" | "alt" | "cyc" | "dih" | "psl2" | "sl2") ":" integer
//! ```

use std::fmt;
use std::str::FromStr;

use sha2::{Digest, Sha256};

use crate::construct::{alternating, cyclic, dihedral, direct_product, psl2, sl2, symmetric, wreath_regular};
use crate::error::{GroupError, Result};
use crate::perm::{parse_generator_file, PermGroup};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GroupSpec {
    Sym(usize),
    Alt(usize),
    Cyc(usize),
    Dih(usize),
    Psl2(usize),
    Sl2(usize),
    Product(Vec<GroupSpec>),
    Wreath(Box<GroupSpec>, u64),
    File(String),
}

impl GroupSpec {
    pub fn build(&self) -> Result<PermGroup> {
        match self {
            GroupSpec::Sym(n) => symmetric(*n),
            GroupSpec::Alt(n) => alternating(*n),
            GroupSpec::Cyc(n) => cyclic(*n),
            GroupSpec::Dih(n) => dihedral(*n),
            GroupSpec::Psl2(q) => psl2(*q),
            GroupSpec::Sl2(q) => sl2(*q),
            GroupSpec::Product(parts) => {
                let groups = parts.iter().map(|p| p.build()).collect::<Result<Vec<_>>>()?;
                direct_product(&groups)
            }
            GroupSpec::Wreath(base, p) => Ok(wreath_regular(&base.build()?, *p)?.group),
            GroupSpec::File(path) => {
                let text = std::fs::read_to_string(path)?;
                parse_generator_file(&text)
            }
        }
    }

    /// The canonical spelling, with file contents identified by their SHA-256.
    pub fn provenance(&self) -> Result<String> {
        Ok(match self {
            GroupSpec::File(path) => {
                let bytes = std::fs::read(path)?;
                format!("file:sha256:{}", hex::encode(Sha256::digest(&bytes)))
            }
            GroupSpec::Product(parts) => format!(
                "product({})",
                parts
                    .iter()
                    .map(|p| p.provenance())
                    .collect::<Result<Vec<_>>>()?
                    .join(",")
            ),
            GroupSpec::Wreath(base, p) => format!("wreath({},{p})", base.provenance()?),
            other => other.to_string(),
        })
    }
}

impl fmt::Display for GroupSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupSpec::Sym(n) => write!(f, "sym:{n}"),
            GroupSpec::Alt(n) => write!(f, "alt:{n}"),
            GroupSpec::Cyc(n) => write!(f, "cyc:{n}"),
            GroupSpec::Dih(n) => write!(f, "dih:{n}"),
            GroupSpec::Psl2(q) => write!(f, "psl2:{q}"),
            GroupSpec::Sl2(q) => write!(f, "sl2:{q}"),
            GroupSpec::Product(parts) => {
                write!(f, "product(")?;
                for (i, p) in parts.iter().enumerate() {
                    if i > 0 {
                        write!(f, ",")?;
                    }
                    write!(f, "{p}")?;
                }
                write!(f, ")")
            }
            GroupSpec::Wreath(base, p) => write!(f, "wreath({base},{p})"),
            GroupSpec::File(path) => write!(f, "file:{path}"),
        }
    }
}

struct Parser<'a> {
    src: &'a str,
    pos: usize,
}

impl<'a> Parser<'a> {
    fn err(&self, msg: &str) -> GroupError {
        GroupError::Parse(format!("{msg} at offset {} in {:?}", self.pos, self.src))
    }

    fn rest(&self) -> &'a str {
        &self.src[self.pos..]
    }

    fn skip_ws(&mut self) {
        let trimmed = self.rest().trim_start();
        self.pos = self.src.len() - trimmed.len();
    }

    fn eat(&mut self, token: &str) -> bool {
        self.skip_ws();
        if self.rest().starts_with(token) {
            self.pos += token.len();
            true
        } else {
            false
        }
    }

    fn expect(&mut self, token: &str) -> Result<()> {
        if self.eat(token) {
            Ok(())
        } else {
            Err(self.err(&format!("expected {token:?}")))
        }
    }

    fn number(&mut self) -> Result<u64> {
        self.skip_ws();
        let len = self.rest().chars().take_while(|c| c.is_ascii_digit()).count();
        if len == 0 {
            return Err(self.err("expected a number"));
        }
        let n = self.rest()[..len].parse().map_err(|_| self.err("number too large"))?;
        self.pos += len;
        Ok(n)
    }

    fn spec(&mut self) -> Result<GroupSpec> {
        self.skip_ws();
        if self.eat("file:") {
            let path = self.rest().trim().to_string();
            self.pos = self.src.len();
            if path.is_empty() {
                return Err(self.err("empty file path"));
            }
            return Ok(GroupSpec::File(path));
        }
        if self.eat("product(") {
            let mut parts = vec![self.spec()?];
            while self.eat(",") {
                parts.push(self.spec()?);
            }
            self.expect(")")?;
            return Ok(GroupSpec::Product(parts));
        }
        if self.eat("wreath(") {
            let base = self.spec()?;
            self.expect(",")?;
            let p = self.number()?;
            self.expect(")")?;
            return Ok(GroupSpec::Wreath(Box::new(base), p));
        }
        let name_len = self.rest().chars().take_while(|c| c.is_ascii_alphanumeric()).count();
        let name = &self.rest()[..name_len];
        self.pos += name_len;
        self.expect(":")?;
        let n = self.number()? as usize;
        Ok(match name {
            "sym" => GroupSpec::Sym(n),
            "alt" => GroupSpec::Alt(n),
            "cyc" => GroupSpec::Cyc(n),
            "dih" => GroupSpec::Dih(n),
            "psl2" => GroupSpec::Psl2(n),
            "sl2" => GroupSpec::Sl2(n),
            _ => return Err(self.err(&format!("unknown family {name:?}"))),
        })
    }
}

impl FromStr for GroupSpec {
    type Err = GroupError;

    fn from_str(s: &str) -> Result<Self> {
        let mut parser = Parser { src: s, pos: 0 };
        let spec = parser.spec()?;
        parser.skip_ws();
        if parser.pos != s.len() {
            return Err(parser.err("trailing input"));
        }
        Ok(spec)
    }
}
