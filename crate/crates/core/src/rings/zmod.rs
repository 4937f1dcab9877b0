//! `ℤ/n` through divisor arithmetic: the ideal `(d)` is identified with its
//! least positive generator `d | n`, so `(d) ⊆ (e)` iff `e | d`,
//! `(d) ∩ (e) = (lcm)` and `(d) + (e) = (gcd)`.

use num_integer::Integer;

use crate::error::{Error, Result};

pub const ZMOD_MAX: u64 = 1_000_000_000;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ZMod {
    n: u64,
    factors: Vec<(u64, u32)>,
    divisors: Vec<u64>,
}

impl ZMod {
    pub fn new(n: u64) -> Result<Self> {
        if n < 2 {
            return Err(Error::Ring(format!(
                "ℤ/{n} has no proper nonzero structure; need n ≥ 2"
            )));
        }
        if n > ZMOD_MAX {
            return Err(Error::CapExceeded {
                what: "ℤ/n modulus",
                size: usize::try_from(n).unwrap_or(usize::MAX),
                cap: ZMOD_MAX as usize,
            });
        }
        let factors = factorize(n);
        let mut divisors = vec![1u64];
        for &(p, e) in &factors {
            let mut next = Vec::with_capacity(divisors.len() * (e as usize + 1));
            for &d in &divisors {
                let mut q = d;
                for _ in 0..=e {
                    next.push(q);
                    q *= p;
                }
            }
            divisors = next;
        }
        divisors.sort_unstable();
        Ok(ZMod {
            n,
            factors,
            divisors,
        })
    }

    pub fn modulus(&self) -> u64 {
        self.n
    }

    /// `(p, v_p(n))`, ascending in `p`.
    pub fn factors(&self) -> &[(u64, u32)] {
        &self.factors
    }

    /// Every `d | n`, ascending. `(1)` is the whole ring, `(n)` the zero ideal.
    pub fn divisors(&self) -> &[u64] {
        &self.divisors
    }

    /// Canonical generator of the ideal generated by `r`.
    pub fn canonical(&self, r: u64) -> u64 {
        r.gcd(&self.n)
    }

    pub fn is_divisor(&self, d: u64) -> bool {
        d >= 1 && self.n.is_multiple_of(d)
    }

    pub fn contains(&self, d: u64, r: u64) -> bool {
        (r % self.n).is_multiple_of(d)
    }

    pub fn valuation(&self, p: u64, mut d: u64) -> u32 {
        let mut v = 0;
        while d.is_multiple_of(p) {
            d /= p;
            v += 1;
        }
        v
    }

    pub fn is_prime_power(&self, d: u64) -> bool {
        self.factors.iter().any(|&(p, _)| {
            let mut q = d;
            while q.is_multiple_of(p) {
                q /= p;
            }
            q == 1 && d > 1
        })
    }

    pub fn is_squarefree(&self, d: u64) -> bool {
        self.factors.iter().all(|&(p, _)| !d.is_multiple_of(p * p))
    }

    pub fn is_prime(&self, d: u64) -> bool {
        self.factors.iter().any(|&(p, _)| p == d)
    }

    /// `(d) : r = (d / gcd(d, r))`.
    pub fn colon(&self, d: u64, r: u64) -> u64 {
        d / d.gcd(&(r % self.n))
    }

    /// `(d)_(p) = (p^{v_p(d)})`.
    pub fn saturation(&self, d: u64, p: u64) -> u64 {
        p.pow(self.valuation(p, d))
    }
}

/// Trial division; `n ≤ 10^9` keeps this under 32k iterations.
pub fn factorize(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut p = 2u64;
    while p * p <= n {
        if n.is_multiple_of(p) {
            let mut e = 0;
            while n.is_multiple_of(p) {
                n /= p;
                e += 1;
            }
            out.push((p, e));
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

pub fn is_prime(n: u64) -> bool {
    n >= 2 && factorize(n) == [(n, 1)]
}
