//! Arithmetic in Z/p for word-sized primes.

use crate::error::{invalid, Result};

/// Largest modulus accepted: products of two residues plus one more residue must fit in a u64.
pub const MAX_PRIME: u64 = (1 << 31) - 1;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Field {
    p: u64,
    /// How many products `(p-1)^2` can be added to a reduced value before a u64 overflows.
    lazy_budget: u64,
}

impl Field {
    pub fn new(p: u64) -> Result<Self> {
        if !(3..=MAX_PRIME).contains(&p) {
            return Err(invalid(format!("prime must lie in [3, {MAX_PRIME}], got {p}")));
        }
        if !is_prime(p) {
            return Err(invalid(format!("{p} is not prime")));
        }
        let sq = (p - 1) * (p - 1);
        Ok(Self {
            p,
            lazy_budget: (u64::MAX - p) / sq,
        })
    }

    #[inline]
    pub fn p(&self) -> u64 {
        self.p
    }

    #[inline]
    pub fn lazy_budget(&self) -> u64 {
        self.lazy_budget
    }

    #[inline]
    pub fn reduce(&self, x: u64) -> u64 {
        x % self.p
    }

    #[inline]
    pub fn add(&self, a: u64, b: u64) -> u64 {
        (a + b) % self.p
    }

    #[inline]
    pub fn mul(&self, a: u64, b: u64) -> u64 {
        (a * b) % self.p
    }

    #[inline]
    pub fn neg(&self, a: u64) -> u64 {
        if a == 0 {
            0
        } else {
            self.p - a
        }
    }

    pub fn pow(&self, mut base: u64, mut e: u64) -> u64 {
        let mut acc = 1;
        base %= self.p;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    /// Inverse of a nonzero residue by Fermat.
    pub fn inv(&self, a: u64) -> u64 {
        debug_assert!(!a.is_multiple_of(self.p), "zero has no inverse");
        self.pow(a, self.p - 2)
    }
}

pub fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    if p.is_multiple_of(2) {
        return p == 2;
    }
    let mut q = 3;
    while q * q <= p {
        if p.is_multiple_of(q) {
            return false;
        }
        q += 2;
    }
    true
}
