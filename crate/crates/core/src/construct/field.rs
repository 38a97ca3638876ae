//! Finite fields GF(p^k) with exp/log tables.
//!
//! An element is encoded as the integer whose base-`p` digits are its
//! coefficients in the polynomial basis `1, t, …, t^{k−1}`. The modulus is the
//! first monic primitive polynomial of degree `k` in the order of its encoding,
//! so `t` itself generates the multiplicative group.

use crate::error::{GroupError, Result};
use crate::hall::factorize;

/// Largest field order supported.
pub const MAX_FIELD_ORDER: usize = 256;

#[derive(Clone, Debug)]
pub struct FiniteField {
    p: u64,
    k: u32,
    q: usize,
    /// Coefficients of the monic modulus, constant term first.
    modulus: Vec<u64>,
    exp: Vec<u32>,
    log: Vec<u32>,
}

fn digits(mut x: usize, p: u64, k: u32) -> Vec<u64> {
    (0..k)
        .map(|_| {
            let d = x as u64 % p;
            x /= p as usize;
            d
        })
        .collect()
}

fn encode(d: &[u64], p: u64) -> usize {
    d.iter().rev().fold(0, |acc, &c| acc * p as usize + c as usize)
}

impl FiniteField {
    pub fn new(q: usize) -> Result<Self> {
        let f = factorize(q as u128);
        if f.len() != 1 {
            return Err(GroupError::Precondition(format!("{q} is not a prime power")));
        }
        if q > MAX_FIELD_ORDER {
            return Err(GroupError::Precondition(format!(
                "field order {q} exceeds {MAX_FIELD_ORDER}"
            )));
        }
        let (p, k) = f[0];
        for lower in 0..q {
            let mut modulus = digits(lower, p, k);
            modulus.push(1);
            if let Some((exp, log)) = Self::tables(p, k, q, &modulus) {
                return Ok(FiniteField {
                    p,
                    k,
                    q,
                    modulus,
                    exp,
                    log,
                });
            }
        }
        Err(GroupError::SelfCheck(format!(
            "no primitive polynomial found for GF({q})"
        )))
    }

    /// Powers of `t` modulo `modulus`, if `t` has multiplicative order `q − 1`.
    fn tables(p: u64, k: u32, q: usize, modulus: &[u64]) -> Option<(Vec<u32>, Vec<u32>)> {
        let k = k as usize;
        let mut cur = vec![0u64; k];
        cur[0] = 1;
        let mut exp = Vec::with_capacity(q - 1);
        let mut log = vec![u32::MAX; q];
        for i in 0..q - 1 {
            let code = encode(&cur, p);
            if code == 0 || log[code] != u32::MAX {
                return None;
            }
            log[code] = i as u32;
            exp.push(code as u32);
            // multiply by t and reduce by the monic modulus
            let top = cur[k - 1];
            for j in (1..k).rev() {
                cur[j] = cur[j - 1];
            }
            cur[0] = 0;
            for j in 0..k {
                cur[j] = (cur[j] + (p - modulus[j]) * top) % p;
            }
        }
        (encode(&cur, p) == 1).then_some((exp, log))
    }

    pub fn order(&self) -> usize {
        self.q
    }

    pub fn characteristic(&self) -> u64 {
        self.p
    }

    pub fn degree(&self) -> u32 {
        self.k
    }

    pub fn modulus(&self) -> &[u64] {
        &self.modulus
    }

    /// The modulus encoded like an element, leading term included.
    pub fn modulus_code(&self) -> usize {
        encode(&self.modulus, self.p)
    }

    pub fn elements(&self) -> impl Iterator<Item = u32> {
        0..self.q as u32
    }

    /// The class of `t`, a generator of the multiplicative group.
    pub fn primitive(&self) -> u32 {
        self.exp[1 % (self.q - 1)]
    }

    pub fn exp(&self, i: u64) -> u32 {
        self.exp[(i % (self.q as u64 - 1)) as usize]
    }

    /// Discrete logarithm to base `t`; `None` for zero.
    pub fn log(&self, x: u32) -> Option<u32> {
        (x != 0).then(|| self.log[x as usize])
    }

    pub fn add(&self, a: u32, b: u32) -> u32 {
        let (da, db) = (digits(a as usize, self.p, self.k), digits(b as usize, self.p, self.k));
        let s: Vec<u64> = da.iter().zip(&db).map(|(x, y)| (x + y) % self.p).collect();
        encode(&s, self.p) as u32
    }

    pub fn neg(&self, a: u32) -> u32 {
        let d: Vec<u64> = digits(a as usize, self.p, self.k)
            .iter()
            .map(|&x| (self.p - x) % self.p)
            .collect();
        encode(&d, self.p) as u32
    }

    pub fn sub(&self, a: u32, b: u32) -> u32 {
        self.add(a, self.neg(b))
    }

    pub fn mul(&self, a: u32, b: u32) -> u32 {
        if a == 0 || b == 0 {
            return 0;
        }
        self.exp(self.log[a as usize] as u64 + self.log[b as usize] as u64)
    }

    pub fn inv(&self, a: u32) -> Option<u32> {
        (a != 0).then(|| self.exp((self.q as u64 - 1) - self.log[a as usize] as u64))
    }

    pub fn pow(&self, a: u32, e: u64) -> u32 {
        if e == 0 {
            return 1;
        }
        if a == 0 {
            return 0;
        }
        self.exp(self.log[a as usize] as u64 * (e % (self.q as u64 - 1)))
    }

    /// The element `n · 1` of the prime field.
    pub fn from_int(&self, n: u64) -> u32 {
        (n % self.p) as u32
    }

    /// Value at `x` of the polynomial with the given coefficients over the prime field.
    pub fn eval_prime_poly(&self, coeffs: &[u64], x: u32) -> u32 {
        coeffs
            .iter()
            .rev()
            .fold(0, |acc, &c| self.add(self.mul(acc, x), self.from_int(c)))
    }

    /// Polynomial-basis coefficients of `x`, constant term first.
    pub fn coefficients(&self, x: u32) -> Vec<u64> {
        digits(x as usize, self.p, self.k)
    }
}
