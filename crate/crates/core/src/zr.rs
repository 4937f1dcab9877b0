//! Overrings of `ℤ` inside `ℚ` cut out by finitely many primes.
//!
//! Over a pool `P` of primes, the ring retaining `T ⊆ P` is
//! `⋂_{p ∈ T} ℤ_(p)` (`ℚ` when `T = ∅`). It contains `1/p` exactly when
//! `p ∉ T`, so the map `T ↦ {1/p : p ∈ P ∖ T}` turns ring intersection into
//! set intersection and ring inclusion into set inclusion. The encoded
//! families are ordinary point families over the universe `{1/p : p ∈ P}`.

use std::fmt;

use fixedbitset::FixedBitSet;
use num_rational::Ratio;
use serde::Serialize;

use crate::bits::PointSet;
use crate::engine::RepresentationEngine;
use crate::error::{Error, Result};
use crate::family::{ContextTriple, PointFamily};
use crate::rings::is_prime;
use crate::Caps;

pub const MAX_POOL: usize = 20;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PrimePool {
    primes: Vec<u64>,
}

impl PrimePool {
    pub fn new(mut primes: Vec<u64>) -> Result<Self> {
        if primes.is_empty() {
            return Err(Error::invalid("prime pool must be nonempty"));
        }
        if primes.len() > MAX_POOL {
            return Err(Error::CapExceeded {
                what: "prime pool size",
                size: primes.len(),
                cap: MAX_POOL,
            });
        }
        if let Some(&p) = primes.iter().find(|&&p| !is_prime(p)) {
            return Err(Error::invalid(format!("{p} is not prime")));
        }
        primes.sort_unstable();
        if primes.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::invalid("prime pool lists a prime twice"));
        }
        Ok(PrimePool { primes })
    }

    pub fn primes(&self) -> &[u64] {
        &self.primes
    }

    pub fn len(&self) -> usize {
        self.primes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.primes.is_empty()
    }

    pub fn index_of(&self, p: u64) -> Option<usize> {
        self.primes.binary_search(&p).ok()
    }

    pub fn all(&self) -> PointSet {
        PointSet::full(self.len())
    }

    /// Universe labels `1/p`.
    pub fn labels(&self) -> Vec<String> {
        self.primes.iter().map(|p| format!("1/{p}")).collect()
    }

    pub fn ring(&self, retained: &[u64]) -> Result<OverringSpec> {
        OverringSpec::new(self, retained)
    }
}

/// `⋂_{p ∈ retained} ℤ_(p)`, with `ℚ` for an empty retained set.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct OverringSpec {
    pool: PrimePool,
    retained: PointSet,
}

impl OverringSpec {
    pub fn new(pool: &PrimePool, retained: &[u64]) -> Result<Self> {
        let mut set = PointSet::EMPTY;
        for &p in retained {
            let i = pool
                .index_of(p)
                .ok_or_else(|| Error::invalid(format!("retained prime {p} is not in the pool")))?;
            set.insert(i);
        }
        Ok(OverringSpec {
            pool: pool.clone(),
            retained: set,
        })
    }

    pub fn from_mask(pool: &PrimePool, retained: PointSet) -> Self {
        debug_assert!(retained.is_subset(pool.all()));
        OverringSpec {
            pool: pool.clone(),
            retained,
        }
    }

    pub fn rationals(pool: &PrimePool) -> Self {
        OverringSpec::from_mask(pool, PointSet::EMPTY)
    }

    pub fn local(pool: &PrimePool, index: usize) -> Self {
        OverringSpec::from_mask(pool, PointSet::singleton(index))
    }

    pub fn pool(&self) -> &PrimePool {
        &self.pool
    }

    pub fn retained_mask(&self) -> PointSet {
        self.retained
    }

    pub fn retained(&self) -> Vec<u64> {
        self.retained.iter().map(|i| self.pool.primes[i]).collect()
    }

    /// `q ∈ R` iff no retained prime divides the reduced denominator.
    pub fn contains(&self, q: &Ratio<i64>) -> bool {
        let den = q.denom().unsigned_abs();
        self.retained
            .iter()
            .all(|i| !den.is_multiple_of(self.pool.primes[i]))
    }

    /// Membership of `num/den`, reduced first.
    pub fn contains_fraction(&self, num: i64, den: i64) -> Result<bool> {
        if den == 0 {
            return Err(Error::invalid("zero denominator"));
        }
        Ok(self.contains(&Ratio::new(num, den)))
    }

    /// `self ⊆ other` as rings.
    pub fn is_subring_of(&self, other: &OverringSpec) -> bool {
        other.retained.is_subset(self.retained)
    }

    pub fn intersect(&self, other: &OverringSpec) -> OverringSpec {
        OverringSpec::from_mask(&self.pool, self.retained | other.retained)
    }

    /// The encoded point set `{1/p : p ∉ retained}`.
    pub fn encoded(&self) -> PointSet {
        self.pool.all() - self.retained
    }

    fn encoded_bits(&self) -> FixedBitSet {
        let mut s = FixedBitSet::with_capacity(self.pool.len());
        for i in self.encoded() {
            s.insert(i);
        }
        s
    }
}

impl fmt::Display for OverringSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.retained.is_empty() {
            return write!(f, "ℚ");
        }
        let ps: Vec<String> = self.retained().iter().map(|p| p.to_string()).collect();
        write!(f, "ℤ_({})", ps.join(","))
    }
}

fn check_pool(pool: &PrimePool, rings: &[&OverringSpec]) -> Result<()> {
    match rings.iter().find(|r| r.pool != *pool) {
        Some(r) => Err(Error::invalid(format!(
            "{r} is over a different prime pool"
        ))),
        None => Ok(()),
    }
}

/// Encodes `members` as a point family with context `(pool, C, target)`.
///
/// The family validates exactly when `(⋂ members) ∩ C = target` as rings;
/// a failure names a witness `1/p` lying in the left side but not the right.
pub fn encode(
    pool: &PrimePool,
    target: &OverringSpec,
    c: &OverringSpec,
    members: &[OverringSpec],
) -> Result<PointFamily> {
    check_pool(pool, &[target, c])?;
    check_pool(pool, &members.iter().collect::<Vec<_>>())?;
    let ctx = ContextTriple::from_bits(pool.labels(), c.encoded_bits(), target.encoded_bits())?;
    let points = members
        .iter()
        .map(|m| (m.to_string(), m.encoded_bits()))
        .collect();
    let family = PointFamily::new(ctx, points)?;
    family.require_representation()?;
    Ok(family)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct UniquenessReport {
    pub pool: Vec<u64>,
    /// `(target, C)` pairs checked.
    pub checks: usize,
    /// Irredundance witnesses confirmed to be `1/p` for the member's own prime.
    pub witnesses: usize,
}

/// For every target `T ⊆ pool` and every `C` in the pool lattice with
/// `T ⊊ C` as rings, analyses the ambient family `{ℤ_(p) : p ∈ T} ∪ {ℚ}` and
/// confirms that `{ℤ_(p) : p ∈ T ∖ C}` is its only strongly irredundant
/// representation, every member critical with witness `1/p`.
pub fn corollary54_check(pool: &PrimePool, caps: Caps) -> Result<UniquenessReport> {
    let mut report = UniquenessReport {
        pool: pool.primes.clone(),
        checks: 0,
        witnesses: 0,
    };
    let caps = Caps {
        points: caps.points.max(pool.len() + 1),
        ..caps
    };
    for t in pool.all().subsets() {
        if t.is_empty() {
            continue;
        }
        let target = OverringSpec::from_mask(pool, t);
        let mut members: Vec<OverringSpec> =
            t.iter().map(|i| OverringSpec::local(pool, i)).collect();
        members.push(OverringSpec::rationals(pool));
        for kept in t.subsets().filter(|&k| k != t) {
            let c = OverringSpec::from_mask(pool, kept);
            let family = encode(pool, &target, &c, &members)?;
            let engine = RepresentationEngine::new(&family, caps)?;
            let analysis = engine.unique_minimal_analysis()?;
            let expected: PointSet = (t - kept)
                .iter()
                .map(|i| t.iter().position(|j| j == i).unwrap())
                .collect();
            let detail = || format!("target {target}, C = {c}");
            if analysis.strongly_irredundant_rep != Some(expected) || !analysis.unique {
                return Err(Error::violation(
                    "valuation-rep-uniqueness",
                    format!(
                        "{}: got {:?}",
                        detail(),
                        analysis
                            .strongly_irredundant_rep
                            .map(|z| family.sorted_names(z))
                    ),
                ));
            }
            for b in expected {
                let flags = engine.classify_member(expected, b)?;
                let prime_index = t.iter().nth(b).unwrap();
                let want = format!("1/{}", pool.primes[prime_index]);
                let got = flags.witness.map(|d| family.context().label(d).to_string());
                if got.as_deref() != Some(want.as_str())
                    || !flags.critical
                    || !flags.strongly_irredundant
                {
                    return Err(Error::violation(
                        "valuation-rep-witness",
                        format!(
                            "{}: member {} has witness {got:?}, expected {want}",
                            detail(),
                            family.name(b)
                        ),
                    ));
                }
                report.witnesses += 1;
            }
            report.checks += 1;
        }
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pool(ps: &[u64]) -> PrimePool {
        PrimePool::new(ps.to_vec()).unwrap()
    }

    #[test]
    fn pool_validation() {
        assert!(PrimePool::new(vec![]).is_err());
        assert!(PrimePool::new(vec![2, 4]).is_err());
        assert!(PrimePool::new(vec![3, 3]).is_err());
        assert_eq!(pool(&[5, 2, 3]).primes(), &[2, 3, 5]);
        assert!(pool(&[2]).ring(&[3]).is_err());
    }

    #[test]
    fn membership_examples() {
        let p = pool(&[2, 3, 5]);
        let r23 = p.ring(&[2, 3]).unwrap();
        assert!(!r23.contains_fraction(5, 6).unwrap());
        let r5 = p.ring(&[5]).unwrap();
        assert!(!r5.contains_fraction(6, 35).unwrap());
        assert!(r5.contains_fraction(35, 6).unwrap());
        // 10/5 = 2 after reduction.
        assert!(r5.contains_fraction(10, 5).unwrap());
        let q = p.ring(&[]).unwrap();
        assert!(q.contains_fraction(1, 30).unwrap());
        assert!(q.contains_fraction(3, 0).is_err());
        assert_eq!(r23.to_string(), "ℤ_(2,3)");
        assert_eq!(q.to_string(), "ℚ");
    }

    #[test]
    fn encoding_is_faithful() {
        for k in 1..=12 {
            let primes: Vec<u64> = (2..).filter(|&n| is_prime(n)).take(k).collect();
            let p = pool(&primes);
            let full = p.all();
            // Pairs over a sample of retained sets: all of them for small pools.
            let step = if k <= 6 { 1 } else { (1u64 << k) / 61 };
            let masks: Vec<PointSet> = (0..1u64 << k)
                .step_by(step as usize)
                .map(PointSet::from_bits)
                .collect();
            for &s in &masks {
                for &t in &masks {
                    let (r, u) = (
                        OverringSpec::from_mask(&p, s & full),
                        OverringSpec::from_mask(&p, t & full),
                    );
                    // Ring inclusion tested on the rationals 1/m for squarefree m over the pool.
                    let sub = (0..1u64 << k).all(|m| {
                        let den: i64 = PointSet::from_bits(m)
                            .iter()
                            .map(|i| primes[i] as i64)
                            .product();
                        let q = Ratio::new(1, den);
                        !r.contains(&q) || u.contains(&q)
                    });
                    assert_eq!(sub, r.is_subring_of(&u));
                    assert_eq!(sub, r.encoded().is_subset(u.encoded()));
                    assert_eq!(r.intersect(&u).encoded(), r.encoded() & u.encoded());
                }
                if k > 8 {
                    break;
                }
            }
        }
    }

    #[test]
    fn encode_examples() {
        let p = pool(&[2, 3, 5]);
        let target = p.ring(&[2, 3, 5]).unwrap();
        let q = p.ring(&[]).unwrap();
        let locals: Vec<OverringSpec> = [2, 3, 5].iter().map(|&x| p.ring(&[x]).unwrap()).collect();
        let f = encode(&p, &target, &q, &locals).unwrap();
        let e = RepresentationEngine::new(&f, Caps::default()).unwrap();
        let z = f.all();
        for b in z {
            let flags = e.classify_member(z, b).unwrap();
            assert!(flags.irredundant && flags.strongly_irredundant && flags.critical);
            assert_eq!(
                f.context().label(flags.witness.unwrap()),
                format!("1/{}", [2, 3, 5][b])
            );
        }
        let u = e.unique_minimal_analysis().unwrap();
        assert_eq!(u.strongly_irredundant_rep, Some(z));

        let mut more = locals.clone();
        more.push(p.ring(&[2, 3]).unwrap());
        let f = encode(&p, &target, &q, &more).unwrap();
        let e = RepresentationEngine::new(&f, Caps::default()).unwrap();
        let flags = e.classify_member(f.all(), 3).unwrap();
        assert!(!flags.irredundant && !flags.critical);

        assert_eq!(
            encode(&p, &target, &q, &locals[..2]).unwrap_err(),
            Error::NotRepresentation {
                witness: "1/5".into()
            }
        );
        // ℚ as its own target leaves no room for a proper C.
        assert!(matches!(
            encode(&p, &q, &q, std::slice::from_ref(&q)),
            Err(Error::Invalid(_))
        ));
        let other = pool(&[2, 7]);
        assert!(encode(&p, &target, &q, &[other.ring(&[2]).unwrap()]).is_err());
    }

    #[test]
    fn uniqueness_over_small_pools() {
        let r = corollary54_check(&pool(&[2]), Caps::default()).unwrap();
        assert_eq!((r.checks, r.witnesses), (1, 1));
        let r = corollary54_check(&pool(&[2, 3]), Caps::default()).unwrap();
        // Targets {2}, {3}: one C each; target {2,3}: three C.
        assert_eq!(r.checks, 5);
        let start = std::time::Instant::now();
        let r = corollary54_check(&pool(&[2, 3, 5, 7]), Caps::default()).unwrap();
        assert!(start.elapsed().as_secs_f64() < 1.0);
        assert_eq!(r.checks, 3usize.pow(4) - 2usize.pow(4));
    }
}
