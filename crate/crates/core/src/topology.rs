//! Finite spectral spaces presented as inclusion posets of point-sets.
//!
//! A finite family of subsets of a universe `D` carries the hull-kernel
//! (spectral) topology whose subbasic opens are `U(d) = {B : d ∉ B}`. On a
//! finite family every open set is quasicompact, so the three topologies of
//! interest collapse to order-theoretic data:
//!
//! - spectral: opens are the down-sets of inclusion, closure is `↑Y`;
//! - inverse: opens are the up-sets, closure is `↓Y`;
//! - patch: discrete, closure is `Y`.
//!
//! [`generate_topology`] builds each topology literally from its subbasis so
//! that the fast paths can be checked against it. The generator is
//! exponential and refuses spaces above a configurable point cap.

use std::collections::HashSet;

use fixedbitset::FixedBitSet;
use serde::{Deserialize, Serialize};

use crate::bits::{PointSet, MAX_POINTS};
use crate::error::{Error, Result};

pub const DEFAULT_TOPOLOGY_CAP: usize = 16;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum TopologyKind {
    Spectral,
    Inverse,
    Patch,
}

impl TopologyKind {
    pub const ALL: [TopologyKind; 3] = [
        TopologyKind::Spectral,
        TopologyKind::Inverse,
        TopologyKind::Patch,
    ];
}

/// A finite family of distinct point-sets ordered by inclusion.
#[derive(Debug, Clone)]
pub struct SpecSpace {
    names: Vec<String>,
    sets: Vec<FixedBitSet>,
    universe_size: usize,
    /// `up[i] = { j : set_i ⊆ set_j }`
    up: Vec<PointSet>,
    /// `down[i] = { j : set_j ⊆ set_i }`
    down: Vec<PointSet>,
}

impl SpecSpace {
    /// Builds the space; every set must have length `universe_size`.
    pub fn new(names: Vec<String>, sets: Vec<FixedBitSet>, universe_size: usize) -> Result<Self> {
        if names.len() != sets.len() {
            return Err(Error::invalid(
                "point names and point sets differ in length",
            ));
        }
        if sets.len() > MAX_POINTS {
            return Err(Error::CapExceeded {
                what: "point family",
                size: sets.len(),
                cap: MAX_POINTS,
            });
        }
        for (i, s) in sets.iter().enumerate() {
            if s.len() != universe_size {
                return Err(Error::invalid(format!(
                    "point {} is not a subset of a universe of size {universe_size}",
                    names[i]
                )));
            }
            if let Some(j) = sets[..i].iter().position(|t| t == s) {
                return Err(Error::invalid(format!(
                    "points {} and {} are the same set",
                    names[j], names[i]
                )));
            }
        }
        let n = sets.len();
        let mut up = vec![PointSet::EMPTY; n];
        let mut down = vec![PointSet::EMPTY; n];
        for i in 0..n {
            for j in 0..n {
                if sets[i].is_subset(&sets[j]) {
                    up[i].insert(j);
                    down[j].insert(i);
                }
            }
        }
        Ok(SpecSpace {
            names,
            sets,
            universe_size,
            up,
            down,
        })
    }

    pub fn len(&self) -> usize {
        self.sets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sets.is_empty()
    }

    pub fn all(&self) -> PointSet {
        PointSet::full(self.len())
    }

    pub fn universe_size(&self) -> usize {
        self.universe_size
    }

    pub fn name(&self, i: usize) -> &str {
        &self.names[i]
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn set(&self, i: usize) -> &FixedBitSet {
        &self.sets[i]
    }

    /// `i ≤ j` in the inclusion order.
    pub fn le(&self, i: usize, j: usize) -> bool {
        self.up[i].contains(j)
    }

    pub fn up_of(&self, i: usize) -> PointSet {
        self.up[i]
    }

    pub fn down_of(&self, i: usize) -> PointSet {
        self.down[i]
    }

    pub fn up_set(&self, y: PointSet) -> PointSet {
        y.iter().fold(PointSet::EMPTY, |acc, i| acc | self.up[i])
    }

    pub fn down_set(&self, y: PointSet) -> PointSet {
        y.iter().fold(PointSet::EMPTY, |acc, i| acc | self.down[i])
    }

    pub fn min_elements(&self, y: PointSet) -> PointSet {
        y.iter()
            .filter(|&i| (self.down[i] & y) == PointSet::singleton(i))
            .collect()
    }

    pub fn max_elements(&self, y: PointSet) -> PointSet {
        y.iter()
            .filter(|&i| (self.up[i] & y) == PointSet::singleton(i))
            .collect()
    }

    pub fn is_up_set(&self, y: PointSet) -> bool {
        self.up_set(y) == y
    }

    pub fn is_down_set(&self, y: PointSet) -> bool {
        self.down_set(y) == y
    }

    /// First comparable pair `(lower, upper)` in `y`, if any.
    pub fn comparable_pair(&self, y: PointSet) -> Option<(usize, usize)> {
        y.iter()
            .find_map(|i| (self.up[i] & y).without(i).first().map(|j| (i, j)))
    }

    pub fn is_antichain(&self, y: PointSet) -> bool {
        self.comparable_pair(y).is_none()
    }

    /// Covering pairs `(i, j)` with `i < j` and nothing strictly between.
    pub fn covers(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for i in 0..self.len() {
            let strictly_above = self.up[i].without(i);
            for j in self.min_elements(strictly_above) {
                out.push((i, j));
            }
        }
        out
    }

    /// Fast-path closure from the order.
    pub fn closure(&self, y: PointSet, kind: TopologyKind) -> PointSet {
        match kind {
            TopologyKind::Spectral => self.up_set(y),
            TopologyKind::Inverse => self.down_set(y),
            TopologyKind::Patch => y,
        }
    }

    /// `U(d)`: points not containing universe element `d`.
    pub fn hull_open(&self, d: usize) -> PointSet {
        (0..self.len())
            .filter(|&i| !self.sets[i].contains(d))
            .collect()
    }

    fn check_subset(&self, y: PointSet) -> Result<()> {
        if y.is_subset(self.all()) {
            Ok(())
        } else {
            Err(Error::invalid(
                "point subset refers to points outside the space",
            ))
        }
    }

    /// Finds, for every irreducible closed set `↑{c}`, a closed `C′ ⊇ ↑{c}`
    /// with `Y ∩ ↑{c} = Y ∩ C′`. The witness is the largest such closed set,
    /// `X ∖ ↓(Y ∖ ↑{c})`.
    pub fn rush_wallace_holds(&self, y: PointSet) -> Result<RushWallace> {
        self.check_subset(y)?;
        let all = self.all();
        let mut witnesses = Vec::with_capacity(self.len());
        let mut holds = true;
        for c in 0..self.len() {
            let irreducible = self.up[c];
            let wider = all - self.down_set(y - irreducible);
            let ok = self.is_up_set(wider)
                && irreducible.is_subset(wider)
                && (y & irreducible) == (y & wider)
                && self.is_down_set(all - wider);
            holds &= ok;
            witnesses.push((c, wider));
        }
        Ok(RushWallace { holds, witnesses })
    }

    /// Whether every member of the antichain `y` is separated from the rest
    /// of `y` by an inverse-open set. Cross-checked against the generated
    /// inverse topology when the space is within `cap`.
    pub fn antichain_inverse_discrete(&self, y: PointSet, cap: usize) -> Result<bool> {
        self.check_subset(y)?;
        if let Some((lo, hi)) = self.comparable_pair(y) {
            return Err(Error::NotAntichain {
                lower: self.names[lo].clone(),
                upper: self.names[hi].clone(),
            });
        }
        let fast = y.iter().all(|i| (self.up[i] & y) == PointSet::singleton(i));
        if self.len() <= cap {
            let inverse = generate_topology(self, TopologyKind::Inverse, cap)?;
            let generated = y.iter().all(|i| {
                inverse
                    .opens()
                    .iter()
                    .any(|&o| (o & y) == PointSet::singleton(i))
            });
            if generated != fast {
                return Err(Error::violation(
                    "inverse discreteness of antichains",
                    format!("fast path says {fast}, generated inverse topology says {generated}"),
                ));
            }
        }
        Ok(fast)
    }

    /// True iff `↓{x}` is a chain for every point `x`.
    pub fn is_tree_order(&self) -> bool {
        (0..self.len()).all(|x| {
            let below = self.down[x];
            below
                .iter()
                .all(|i| below.iter().all(|j| self.le(i, j) || self.le(j, i)))
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RushWallace {
    pub holds: bool,
    /// `(c, C′)` for each generic point `c` of an irreducible closed set.
    pub witnesses: Vec<(usize, PointSet)>,
}

/// A topology on the point indices of a finite space, as its full family of opens.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Topology {
    opens: Vec<PointSet>,
    origin: TopologyKind,
    points: usize,
}

impl Topology {
    pub fn opens(&self) -> &[PointSet] {
        &self.opens
    }

    pub fn origin(&self) -> TopologyKind {
        self.origin
    }

    pub fn is_open(&self, s: PointSet) -> bool {
        self.opens.binary_search(&s).is_ok()
    }

    pub fn is_closed(&self, s: PointSet) -> bool {
        self.is_open(PointSet::full(self.points) - s)
    }

    /// Complement of the largest open set disjoint from `y`.
    pub fn closure(&self, y: PointSet) -> PointSet {
        let interior_of_complement = self
            .opens
            .iter()
            .filter(|o| !o.intersects(y))
            .fold(PointSet::EMPTY, |acc, &o| acc | o);
        PointSet::full(self.points) - interior_of_complement
    }

    /// `x ≤ y` iff `y` lies in the closure of `{x}`.
    pub fn specializes(&self, x: usize, y: usize) -> bool {
        self.closure(PointSet::singleton(x)).contains(y)
    }

    fn closed_under_finite_ops(&self) -> bool {
        let set: HashSet<_> = self.opens.iter().copied().collect();
        set.contains(&PointSet::EMPTY)
            && set.contains(&PointSet::full(self.points))
            && self.opens.iter().all(|&a| {
                self.opens
                    .iter()
                    .all(|&b| set.contains(&(a | b)) && set.contains(&(a & b)))
            })
    }
}

/// Generates a topology from its definitional subbasis.
pub fn generate_topology(space: &SpecSpace, kind: TopologyKind, cap: usize) -> Result<Topology> {
    if space.len() > cap {
        return Err(Error::CapExceeded {
            what: "topology generation (use the order-theoretic closures instead)",
            size: space.len(),
            cap,
        });
    }
    let n = space.len();
    let full = PointSet::full(n);
    let spectral = || -> Vec<PointSet> {
        let subbasis: Vec<_> = (0..space.universe_size())
            .map(|d| space.hull_open(d))
            .collect();
        from_subbasis(&subbasis, n)
    };
    let opens = match kind {
        TopologyKind::Spectral => spectral(),
        TopologyKind::Inverse => {
            // Spectral opens are the closed basis; their complements generate the opens.
            let complements: Vec<_> = spectral().into_iter().map(|o| full - o).collect();
            from_subbasis(&complements, n)
        }
        TopologyKind::Patch => {
            let spec = spectral();
            let mut subbasis = spec.clone();
            subbasis.extend(spec.iter().map(|&o| full - o));
            from_subbasis(&subbasis, n)
        }
    };
    let topology = Topology {
        opens,
        origin: kind,
        points: n,
    };
    debug_assert!(topology.closed_under_finite_ops());
    Ok(topology)
}

fn from_subbasis(subbasis: &[PointSet], n: usize) -> Vec<PointSet> {
    let full = PointSet::full(n);
    let mut basis: HashSet<PointSet> = HashSet::from([full]);
    for &s in subbasis {
        let meets: Vec<_> = basis.iter().map(|&b| b & s).collect();
        basis.extend(meets);
    }
    let mut opens: HashSet<PointSet> = HashSet::from([PointSet::EMPTY]);
    for &b in &basis {
        if opens.contains(&b) {
            continue;
        }
        let joins: Vec<_> = opens.iter().map(|&o| o | b).collect();
        opens.extend(joins);
    }
    let mut opens: Vec<_> = opens.into_iter().collect();
    opens.sort();
    opens
}
