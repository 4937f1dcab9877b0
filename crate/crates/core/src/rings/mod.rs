//! Finite commutative rings, their ideal lattices, and irreducible
//! decompositions in the arithmetical case.
//!
//! Ideals of a ring become a point family over a universe `D` on which every
//! ideal is a union of blocks: ring elements for table rings, divisor classes
//! `{r : gcd(r, n) = g}` for `ℤ/n`. Intersection of ideals is then
//! intersection of point sets, and the representation engine applies as is.

mod table;
mod zmod;

use std::fmt;

use fixedbitset::FixedBitSet;
use serde::Serialize;

use crate::engine::RepresentationEngine;
use crate::error::{Error, Result};
use crate::family::{ContextTriple, PointFamily};
use crate::Caps;

pub use table::{TableRing, DEFAULT_RING_CAP};
pub use zmod::{factorize, is_prime, ZMod, ZMOD_MAX};

use table::CollectSet;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FiniteRing {
    ZMod(ZMod),
    Table(TableRing),
}

/// An ideal of a [`FiniteRing`]: the least positive generator for `ℤ/n`, the
/// element set for table rings.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum RingIdeal {
    Divisor(u64),
    Elements(FixedBitSet),
}

impl fmt::Display for RingIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RingIdeal::Divisor(d) => write!(f, "({d})"),
            RingIdeal::Elements(s) => {
                let parts: Vec<String> = s.ones().map(|e| e.to_string()).collect();
                write!(f, "{{{}}}", parts.join(","))
            }
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum IdealFilter {
    Proper,
    Irreducible,
    StronglyIrreducible,
    Radical,
    Prime,
    Maximal,
}

impl IdealFilter {
    pub const ALL: [IdealFilter; 6] = [
        IdealFilter::Proper,
        IdealFilter::Irreducible,
        IdealFilter::StronglyIrreducible,
        IdealFilter::Radical,
        IdealFilter::Prime,
        IdealFilter::Maximal,
    ];
}

impl FiniteRing {
    pub fn zmod(n: u64) -> Result<Self> {
        Ok(FiniteRing::ZMod(ZMod::new(n)?))
    }

    pub fn from_tables(add: Vec<Vec<usize>>, mul: Vec<Vec<usize>>, cap: usize) -> Result<Self> {
        Ok(FiniteRing::Table(TableRing::new(add, mul, cap)?))
    }

    pub fn size(&self) -> u64 {
        match self {
            FiniteRing::ZMod(z) => z.modulus(),
            FiniteRing::Table(t) => t.size() as u64,
        }
    }

    pub fn describe(&self) -> String {
        match self {
            FiniteRing::ZMod(z) => format!("ℤ/{}", z.modulus()),
            FiniteRing::Table(t) => format!("table ring of order {}", t.size()),
        }
    }

    /// Every ideal, the whole ring included. `ℤ/n` lists divisors ascending;
    /// table rings list by size, then elements.
    pub fn ideals(&self) -> Vec<RingIdeal> {
        match self {
            FiniteRing::ZMod(z) => z
                .divisors()
                .iter()
                .map(|&d| RingIdeal::Divisor(d))
                .collect(),
            FiniteRing::Table(t) => t
                .ideals()
                .iter()
                .cloned()
                .map(RingIdeal::Elements)
                .collect(),
        }
    }

    pub fn whole(&self) -> RingIdeal {
        match self {
            FiniteRing::ZMod(_) => RingIdeal::Divisor(1),
            FiniteRing::Table(t) => RingIdeal::Elements(t.whole()),
        }
    }

    pub fn zero_ideal(&self) -> RingIdeal {
        match self {
            FiniteRing::ZMod(z) => RingIdeal::Divisor(z.modulus()),
            FiniteRing::Table(t) => RingIdeal::Elements(t.ideals()[0].clone()),
        }
    }

    /// The ideal generated by one element.
    pub fn principal(&self, r: u64) -> Result<RingIdeal> {
        match self {
            FiniteRing::ZMod(z) => Ok(RingIdeal::Divisor(z.canonical(r % z.modulus()))),
            FiniteRing::Table(t) => {
                let r = self.element(t, r)?;
                Ok(RingIdeal::Elements(t.principal(r)))
            }
        }
    }

    /// The ideal with exactly these elements; rejects sets that are not ideals.
    pub fn ideal_from_elements(&self, elements: &[u64]) -> Result<RingIdeal> {
        match self {
            FiniteRing::ZMod(z) => {
                let n = z.modulus();
                let mut set: Vec<u64> = elements.iter().map(|&e| e % n).collect();
                set.sort_unstable();
                set.dedup();
                let d = set.iter().fold(n, |g, &e| num_integer::gcd(g, e));
                if set.len() as u64 != n / d {
                    return Err(Error::Ring(format!(
                        "{elements:?} is not an ideal of ℤ/{n}"
                    )));
                }
                Ok(RingIdeal::Divisor(d))
            }
            FiniteRing::Table(t) => {
                let mut s = FixedBitSet::with_capacity(t.size());
                for &e in elements {
                    s.insert(self.element(t, e)?);
                }
                if !t.is_ideal(&s) {
                    return Err(Error::Ring(format!("{elements:?} is not an ideal")));
                }
                Ok(RingIdeal::Elements(s))
            }
        }
    }

    fn element(&self, t: &TableRing, r: u64) -> Result<usize> {
        usize::try_from(r)
            .ok()
            .filter(|&r| r < t.size())
            .ok_or_else(|| Error::Ring(format!("element {r} is outside the ring")))
    }

    fn check_owned(&self, a: &RingIdeal) -> Result<()> {
        let ok = match (self, a) {
            (FiniteRing::ZMod(z), RingIdeal::Divisor(d)) => z.is_divisor(*d),
            (FiniteRing::Table(t), RingIdeal::Elements(s)) => {
                s.len() == t.size() && t.index_of(s).is_some()
            }
            _ => false,
        };
        if ok {
            Ok(())
        } else {
            Err(Error::Ring(format!(
                "{a} is not an ideal of {}",
                self.describe()
            )))
        }
    }

    /// `a ⊆ b`.
    pub fn is_subideal(&self, a: &RingIdeal, b: &RingIdeal) -> bool {
        match (a, b) {
            (RingIdeal::Divisor(d), RingIdeal::Divisor(e)) => d % e == 0,
            (RingIdeal::Elements(s), RingIdeal::Elements(t)) => s.is_subset(t),
            _ => false,
        }
    }

    pub fn meet(&self, a: &RingIdeal, b: &RingIdeal) -> RingIdeal {
        match (a, b) {
            (RingIdeal::Divisor(d), RingIdeal::Divisor(e)) => {
                RingIdeal::Divisor(num_integer::lcm(*d, *e))
            }
            (RingIdeal::Elements(s), RingIdeal::Elements(t)) => {
                let mut m = s.clone();
                m.intersect_with(t);
                RingIdeal::Elements(m)
            }
            _ => panic!("ideals of different rings"),
        }
    }

    pub fn join(&self, a: &RingIdeal, b: &RingIdeal) -> RingIdeal {
        match (self, a, b) {
            (_, RingIdeal::Divisor(d), RingIdeal::Divisor(e)) => {
                RingIdeal::Divisor(num_integer::gcd(*d, *e))
            }
            (FiniteRing::Table(t), RingIdeal::Elements(s), RingIdeal::Elements(u)) => {
                RingIdeal::Elements(t.sum(s, u))
            }
            _ => panic!("ideals of different rings"),
        }
    }

    pub fn is_proper(&self, a: &RingIdeal) -> bool {
        *a != self.whole()
    }

    /// Not the intersection of two ideals properly containing it.
    pub fn is_irreducible(&self, a: &RingIdeal) -> bool {
        if !self.is_proper(a) {
            return false;
        }
        match (self, a) {
            (FiniteRing::ZMod(z), RingIdeal::Divisor(d)) => z.is_prime_power(*d),
            _ => {
                let above: Vec<RingIdeal> = self
                    .ideals()
                    .into_iter()
                    .filter(|j| j != a && self.is_subideal(a, j))
                    .collect();
                !above
                    .iter()
                    .enumerate()
                    .any(|(i, j)| above[i..].iter().any(|k| self.meet(j, k) == *a))
            }
        }
    }

    /// `J ∩ K ⊆ A` forces `J ⊆ A` or `K ⊆ A`.
    pub fn is_strongly_irreducible(&self, a: &RingIdeal) -> bool {
        if !self.is_proper(a) {
            return false;
        }
        match (self, a) {
            (FiniteRing::ZMod(z), RingIdeal::Divisor(d)) => z.is_prime_power(*d),
            _ => {
                let all = self.ideals();
                let outside: Vec<&RingIdeal> =
                    all.iter().filter(|j| !self.is_subideal(j, a)).collect();
                !outside.iter().enumerate().any(|(i, j)| {
                    outside[i..]
                        .iter()
                        .any(|k| self.is_subideal(&self.meet(j, k), a))
                })
            }
        }
    }

    /// `r^k ∈ A` forces `r ∈ A`.
    pub fn is_radical(&self, a: &RingIdeal) -> bool {
        if !self.is_proper(a) {
            return false;
        }
        match (self, a) {
            (FiniteRing::ZMod(z), RingIdeal::Divisor(d)) => z.is_squarefree(*d),
            (FiniteRing::Table(t), RingIdeal::Elements(s)) => (0..t.size()).all(|r| {
                let mut power = r;
                for _ in 0..t.size() {
                    if s.contains(power) {
                        return s.contains(r);
                    }
                    power = t.mul(power, r);
                }
                true
            }),
            _ => false,
        }
    }

    /// `rs ∈ A` forces `r ∈ A` or `s ∈ A`.
    pub fn is_prime(&self, a: &RingIdeal) -> bool {
        if !self.is_proper(a) {
            return false;
        }
        match (self, a) {
            (FiniteRing::ZMod(z), RingIdeal::Divisor(d)) => z.is_prime(*d),
            (FiniteRing::Table(t), RingIdeal::Elements(s)) => (0..t.size()).all(|r| {
                s.contains(r) || (0..t.size()).all(|u| s.contains(u) || !s.contains(t.mul(r, u)))
            }),
            _ => false,
        }
    }

    pub fn is_maximal(&self, a: &RingIdeal) -> bool {
        if !self.is_proper(a) {
            return false;
        }
        match (self, a) {
            (FiniteRing::ZMod(z), RingIdeal::Divisor(d)) => z.is_prime(*d),
            _ => {
                let whole = self.whole();
                self.ideals()
                    .iter()
                    .all(|j| j == a || *j == whole || !self.is_subideal(a, j))
            }
        }
    }

    pub fn matches(&self, a: &RingIdeal, filter: IdealFilter) -> bool {
        match filter {
            IdealFilter::Proper => self.is_proper(a),
            IdealFilter::Irreducible => self.is_irreducible(a),
            IdealFilter::StronglyIrreducible => self.is_strongly_irreducible(a),
            IdealFilter::Radical => self.is_radical(a),
            IdealFilter::Prime => self.is_prime(a),
            IdealFilter::Maximal => self.is_maximal(a),
        }
    }

    /// Proper ideals passing `filter`, in the order of [`FiniteRing::ideals`].
    pub fn enumerate_ideals(&self, filter: IdealFilter) -> Vec<RingIdeal> {
        self.ideals()
            .into_iter()
            .filter(|a| self.matches(a, filter))
            .collect()
    }

    /// Distributivity of the ideal lattice; always true for `ℤ/n`.
    pub fn is_arithmetical(&self) -> bool {
        match self {
            FiniteRing::ZMod(_) => true,
            FiniteRing::Table(t) => t.is_distributive(),
        }
    }

    /// `A : r = {s : rs ∈ A}`.
    pub fn colon(&self, a: &RingIdeal, r: u64) -> Result<RingIdeal> {
        self.check_owned(a)?;
        match (self, a) {
            (FiniteRing::ZMod(z), RingIdeal::Divisor(d)) => Ok(RingIdeal::Divisor(z.colon(*d, r))),
            (FiniteRing::Table(t), RingIdeal::Elements(s)) => {
                let r = self.element(t, r)?;
                Ok(RingIdeal::Elements(t.colon(s, r)))
            }
            _ => unreachable!(),
        }
    }

    /// `A_(P) = {r : br ∈ A for some b ∉ P}`.
    pub fn saturation(&self, a: &RingIdeal, p: &RingIdeal) -> Result<RingIdeal> {
        self.check_owned(a)?;
        self.check_owned(p)?;
        if !self.is_prime(p) {
            return Err(Error::Ring(format!("{p} is not a prime ideal")));
        }
        match (self, a, p) {
            (FiniteRing::ZMod(z), RingIdeal::Divisor(d), RingIdeal::Divisor(q)) => {
                Ok(RingIdeal::Divisor(z.saturation(*d, *q)))
            }
            (FiniteRing::Table(t), RingIdeal::Elements(s), RingIdeal::Elements(q)) => {
                Ok(RingIdeal::Elements(t.saturation(s, q)))
            }
            _ => unreachable!(),
        }
    }

    /// Primes `P` equal to the union of the colon ideals `A : r` contained in `P`.
    pub fn krull_assoc(&self, a: &RingIdeal) -> Result<Vec<RingIdeal>> {
        self.check_owned(a)?;
        let primes = self.enumerate_ideals(IdealFilter::Prime);
        let out = match (self, a) {
            (FiniteRing::ZMod(z), RingIdeal::Divisor(d)) => {
                // Ideals are unions of divisor classes; A : r depends only on gcd(r, n).
                let classes = z.divisors();
                let as_classes =
                    |e: u64| classes.iter().map(|&g| g % e == 0).collect::<Vec<bool>>();
                let mut colons: Vec<u64> = classes.iter().map(|&g| z.colon(*d, g)).collect();
                colons.sort_unstable();
                colons.dedup();
                primes
                    .into_iter()
                    .filter(|p| {
                        let RingIdeal::Divisor(q) = p else {
                            unreachable!()
                        };
                        let mut union = vec![false; classes.len()];
                        for &e in colons.iter().filter(|&&e| e % q == 0) {
                            for (u, inside) in union.iter_mut().zip(as_classes(e)) {
                                *u |= inside;
                            }
                        }
                        union == as_classes(*q)
                    })
                    .collect()
            }
            (FiniteRing::Table(t), RingIdeal::Elements(s)) => {
                let colons: Vec<FixedBitSet> = (0..t.size()).map(|r| t.colon(s, r)).collect();
                primes
                    .into_iter()
                    .filter(|p| {
                        let RingIdeal::Elements(q) = p else {
                            unreachable!()
                        };
                        let mut union = FixedBitSet::with_capacity(t.size());
                        for c in colons.iter().filter(|c| c.is_subset(q)) {
                            union.union_with(c);
                        }
                        union == *q
                    })
                    .collect()
            }
            _ => unreachable!(),
        };
        Ok(out)
    }

    /// `𝒳_A`: the maximal Krull associated primes of `A`.
    pub fn max_krull_assoc(&self, a: &RingIdeal) -> Result<Vec<RingIdeal>> {
        let assoc = self.krull_assoc(a)?;
        Ok(assoc
            .iter()
            .filter(|p| !assoc.iter().any(|q| q != *p && self.is_subideal(p, q)))
            .cloned()
            .collect())
    }

    /// Point set of an ideal over the block universe of [`FiniteRing::universe_labels`].
    pub fn ideal_points(&self, a: &RingIdeal) -> FixedBitSet {
        match (self, a) {
            (FiniteRing::ZMod(z), RingIdeal::Divisor(d)) => z
                .divisors()
                .iter()
                .enumerate()
                .filter(|(_, &g)| g % d == 0)
                .map(|(i, _)| i)
                .collect_set(z.divisors().len()),
            (FiniteRing::Table(_), RingIdeal::Elements(s)) => s.clone(),
            _ => panic!("ideal of a different ring"),
        }
    }

    /// Labels of the universe blocks: elements `0..n` for table rings, and for
    /// `ℤ/n` the representative `g` of each class `{r : gcd(r, n) = g}`
    /// (`0` for the class of `n`).
    pub fn universe_labels(&self) -> Vec<String> {
        match self {
            FiniteRing::ZMod(z) => z
                .divisors()
                .iter()
                .map(|&g| {
                    if g == z.modulus() {
                        "0".to_string()
                    } else {
                        g.to_string()
                    }
                })
                .collect(),
            FiniteRing::Table(t) => (0..t.size()).map(|e| e.to_string()).collect(),
        }
    }

    /// Irreducible ideals containing `a`; for `ℤ/n` in order of `(p, k)`.
    pub fn irreducibles_over(&self, a: &RingIdeal) -> Vec<RingIdeal> {
        match (self, a) {
            (FiniteRing::ZMod(z), RingIdeal::Divisor(d)) => z
                .factors()
                .iter()
                .flat_map(|&(p, _)| {
                    (1..=z.valuation(p, *d)).map(move |k| RingIdeal::Divisor(p.pow(k)))
                })
                .collect(),
            _ => self
                .enumerate_ideals(IdealFilter::Irreducible)
                .into_iter()
                .filter(|b| self.is_subideal(a, b))
                .collect(),
        }
    }

    fn ideal_family(&self, a: &RingIdeal, points: &[RingIdeal]) -> Result<PointFamily> {
        let labels = self.universe_labels();
        let mut fixed = FixedBitSet::with_capacity(labels.len());
        fixed.insert_range(..);
        let ctx = ContextTriple::from_bits(labels, fixed, self.ideal_points(a))?;
        let members = points
            .iter()
            .map(|b| (b.to_string(), self.ideal_points(b)))
            .collect();
        PointFamily::new(ctx, members)
    }

    fn require_decomposable(&self, a: &RingIdeal) -> Result<()> {
        self.check_owned(a)?;
        if !self.is_proper(a) {
            return Err(Error::Ring(format!("{a} is not a proper ideal")));
        }
        if !self.is_arithmetical() {
            return Err(Error::Ring(format!(
                "{} is not arithmetical",
                self.describe()
            )));
        }
        Ok(())
    }
}

/// `V(A) ∩ Irr R` as a point family with context `(D, C = R, A)`.
#[derive(Debug, Clone)]
pub struct IdealSpace {
    pub ideal: RingIdeal,
    pub points: Vec<RingIdeal>,
    pub family: PointFamily,
    /// Whether the whole family was confirmed to be the only minimal closed
    /// representation (skipped above the point cap).
    pub closed_minimality_checked: bool,
}

/// Builds the irreducible-ideal space over `a` and checks that no proper
/// closed subfamily of it represents `a`.
pub fn build_irr_space(ring: &FiniteRing, a: &RingIdeal, caps: Caps) -> Result<IdealSpace> {
    ring.require_decomposable(a)?;
    let points = ring.irreducibles_over(a);
    let family = ring.ideal_family(a, &points)?;
    let engine = RepresentationEngine::new(&family, caps).map_err(|e| match e {
        Error::NotRepresentation { witness } => Error::violation(
            "irreducible-intersection",
            format!("irreducible ideals over {a} meet in more than {a}: class {witness}"),
        ),
        other => other,
    })?;
    let checked = family.len() <= caps.points;
    if checked {
        let closed = engine.minimal_closed_representations()?;
        if closed != [family.all()] {
            return Err(Error::violation(
                "irreducible-space-minimality",
                format!("V({a}) has a proper closed representation"),
            ));
        }
    }
    Ok(IdealSpace {
        ideal: a.clone(),
        points,
        family,
        closed_minimality_checked: checked,
    })
}

/// Primes over `a` as a point family, for decomposing radical ideals.
pub fn build_prime_space(ring: &FiniteRing, a: &RingIdeal) -> Result<IdealSpace> {
    ring.check_owned(a)?;
    if !ring.is_radical(a) {
        return Err(Error::Ring(format!("{a} is not a radical ideal")));
    }
    let points: Vec<RingIdeal> = ring
        .enumerate_ideals(IdealFilter::Prime)
        .into_iter()
        .filter(|p| ring.is_subideal(a, p))
        .collect();
    let family = ring.ideal_family(a, &points)?;
    Ok(IdealSpace {
        ideal: a.clone(),
        points,
        family,
        closed_minimality_checked: false,
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Decomposition {
    pub ideal: RingIdeal,
    /// `Min V(A)`.
    pub components: Vec<RingIdeal>,
    pub strongly_irredundant: bool,
    /// Whether the subfamily search found no other irredundant
    /// representation; `None` above the search cap.
    pub unique: Option<bool>,
}

impl fmt::Display for Decomposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.components.iter().map(|c| c.to_string()).collect();
        write!(f, "{} = {}", self.ideal, parts.join(" ∩ "))?;
        match self.unique {
            Some(true) => write!(f, ", unique")?,
            Some(false) => write!(f, ", not unique")?,
            None => write!(f, ", uniqueness not searched")?,
        }
        if self.strongly_irredundant {
            write!(f, ", strongly irredundant")?;
        }
        Ok(())
    }
}

/// Irreducible ideals minimal over `a`, checked to be a strongly irredundant
/// representation and, under the search cap, the only irredundant one.
pub fn irredundant_decomposition(
    ring: &FiniteRing,
    a: &RingIdeal,
    caps: Caps,
) -> Result<Decomposition> {
    let space = build_irr_space(ring, a, caps)?;
    let engine = RepresentationEngine::new(&space.family, caps)?;
    let all = space.family.all();
    let mins = engine.space().min_elements(all);
    if !engine.is_representation(mins) {
        return Err(Error::violation(
            "minimal-irreducibles-represent",
            format!("Min V({a}) does not meet in {a}"),
        ));
    }
    let strongly = mins.iter().all(|b| engine.is_strongly_irredundant(mins, b));
    if !strongly {
        return Err(Error::violation(
            "minimal-irreducibles-strong",
            format!("Min V({a}) is not strongly irredundant"),
        ));
    }
    let unique = (space.family.len() <= caps.exhaustive).then(|| {
        all.subsets()
            .filter(|&z| {
                engine.is_representation(z) && z.iter().all(|b| engine.is_irredundant(z, b))
            })
            .all(|z| z == mins)
    });
    if unique == Some(false) {
        return Err(Error::violation(
            "irredundant-decomposition-uniqueness",
            format!("{a} has an irredundant representation other than Min V({a})"),
        ));
    }
    Ok(Decomposition {
        ideal: a.clone(),
        components: mins.iter().map(|i| space.points[i].clone()).collect(),
        strongly_irredundant: strongly,
        unique,
    })
}

/// Checks `{A_(P) : P ∈ 𝒳_A} = Min V(A)` and returns the saturations.
pub fn saturation_identity(ring: &FiniteRing, a: &RingIdeal, caps: Caps) -> Result<Vec<RingIdeal>> {
    let space = build_irr_space(ring, a, caps)?;
    let spec = space.family.to_spec_space()?;
    let mins: Vec<RingIdeal> = spec
        .min_elements(space.family.all())
        .iter()
        .map(|i| space.points[i].clone())
        .collect();
    let mut sats = Vec::new();
    for p in ring.max_krull_assoc(a)? {
        let s = ring.saturation(a, &p)?;
        if !sats.contains(&s) {
            sats.push(s);
        }
    }
    let same = sats.len() == mins.len() && sats.iter().all(|s| mins.contains(s));
    if !same {
        let show = |v: &[RingIdeal]| {
            v.iter()
                .map(|i| i.to_string())
                .collect::<Vec<_>>()
                .join(", ")
        };
        return Err(Error::violation(
            "saturation-identity",
            format!(
                "saturations {{{}}} differ from Min V({a}) = {{{}}}",
                show(&sats),
                show(&mins)
            ),
        ));
    }
    Ok(sats)
}
