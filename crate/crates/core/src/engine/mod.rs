//! Irredundance, criticality and minimal representations on a finite family.
//!
//! Every member of a validated family contains `A`, so for any subfamily `Z`
//! the set `(⋂ Z) ∩ C` contains `A`, and the two differ exactly at the
//! elements `d ∈ C ∖ A` with `Z ⊆ V(d)`. The engine therefore decides
//! representation-ness as a hitting condition: `Z` represents `A` iff `Z`
//! meets `U(d)` for every `d ∈ C ∖ A`. All queries reduce to point-set masks.
//!
//! The brute-force oracles in this module deliberately go back to the
//! element-wise intersection in [`PointFamily::validate_subfamily`].

mod search;

use serde::Serialize;

use crate::bits::PointSet;
use crate::error::{Error, Result};
use crate::family::PointFamily;
use crate::topology::{SpecSpace, TopologyKind};
use crate::Caps;

pub use search::{DensityCriterion, UniqueAnalysis};

#[derive(Debug, Clone)]
pub struct RepresentationEngine<'a> {
    family: &'a PointFamily,
    space: SpecSpace,
    /// `(d, U(d))` for `d ∈ C ∖ A`, ascending in `d`, one entry per distinct `U(d)`.
    gaps: Vec<(usize, PointSet)>,
    caps: Caps,
}

/// Classification of one member `B` of a chosen representation `Z`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct MemberFlags {
    pub irredundant: bool,
    pub strongly_irredundant: bool,
    pub tightly_irredundant: bool,
    pub critical: bool,
    pub isolated_spectral: bool,
    pub isolated_patch: bool,
    /// `d ∈ (⋂ (Z ∖ {B})) ∩ C` with `d ∉ B`, when irredundant.
    pub witness: Option<usize>,
    /// Same, for `(Z ∖ {B}) ∪ (↑B ∖ {B})`, when strongly irredundant.
    pub strong_witness: Option<usize>,
}

impl<'a> RepresentationEngine<'a> {
    pub fn new(family: &'a PointFamily, caps: Caps) -> Result<Self> {
        family.require_representation()?;
        let space = family.to_spec_space()?;
        let ctx = family.context();
        let mut gaps: Vec<(usize, PointSet)> = Vec::new();
        for d in ctx.fixed().ones().filter(|&d| !ctx.target().contains(d)) {
            let u = (0..family.len())
                .filter(|&i| !family.member(i).contains(d))
                .collect::<PointSet>();
            if !gaps.iter().any(|&(_, g)| g == u) {
                gaps.push((d, u));
            }
        }
        Ok(RepresentationEngine {
            family,
            space,
            gaps,
            caps,
        })
    }

    pub fn family(&self) -> &'a PointFamily {
        self.family
    }

    pub fn space(&self) -> &SpecSpace {
        &self.space
    }

    pub fn caps(&self) -> Caps {
        self.caps
    }

    pub fn all(&self) -> PointSet {
        self.space.all()
    }

    pub fn is_representation(&self, z: PointSet) -> bool {
        self.gaps.iter().all(|&(_, u)| u.intersects(z))
    }

    /// Least `d ∈ ((⋂ Z) ∩ C) ∖ A`, if `Z` fails to represent.
    pub fn separating_element(&self, z: PointSet) -> Option<usize> {
        self.gaps
            .iter()
            .find(|&&(_, u)| !u.intersects(z))
            .map(|&(d, _)| d)
    }

    fn require_subfamily_rep(&self, z: PointSet) -> Result<()> {
        if !z.is_subset(self.all()) {
            return Err(Error::invalid(
                "subfamily refers to points outside the family",
            ));
        }
        match self.separating_element(z) {
            None => Ok(()),
            Some(d) => Err(Error::NotRepresentation {
                witness: self.family.context().label(d).to_string(),
            }),
        }
    }

    fn require_member(&self, z: PointSet, b: usize) -> Result<()> {
        if b >= self.family.len() {
            return Err(Error::invalid(format!("point index {b} out of range")));
        }
        if !z.contains(b) {
            return Err(Error::NotInSubfamily(self.family.name(b).to_string()));
        }
        Ok(())
    }

    /// `(Z ∖ {B}) ∪ (↑B ∖ {B})`: the largest replacement of `B` by a proper
    /// closed subset of `V(B)`.
    fn strong_replacement(&self, z: PointSet, b: usize) -> PointSet {
        z.without(b) | self.space.up_of(b).without(b)
    }

    pub fn is_irredundant(&self, z: PointSet, b: usize) -> bool {
        !self.is_representation(z.without(b))
    }

    pub fn is_strongly_irredundant(&self, z: PointSet, b: usize) -> bool {
        !self.is_representation(self.strong_replacement(z, b))
    }

    /// `(Z ∪ V(B)) ∖ {B}` fails to represent.
    pub fn is_tightly_irredundant(&self, z: PointSet, b: usize) -> bool {
        !self.is_representation((z | self.space.up_of(b)).without(b))
    }

    pub fn classify_member(&self, z: PointSet, b: usize) -> Result<MemberFlags> {
        self.require_member(z, b)?;
        self.require_subfamily_rep(z)?;
        let witness = self.separating_element(z.without(b));
        let strong_witness = self.separating_element(self.strong_replacement(z, b));
        let tightly = self.is_tightly_irredundant(z, b);
        Ok(MemberFlags {
            irredundant: witness.is_some(),
            strongly_irredundant: strong_witness.is_some(),
            tightly_irredundant: tightly,
            critical: self.is_critical(b),
            isolated_spectral: self.isolated_in(z, b, TopologyKind::Spectral),
            isolated_patch: self.isolated_in(z, b, TopologyKind::Patch),
            witness,
            strong_witness,
        })
    }

    /// Verbatim strong irredundance: enumerates every closed `Y ⊆ V(B)` and
    /// checks `(Z ∖ {B}) ∪ Y` element-wise.
    pub fn strongly_irredundant_oracle(&self, z: PointSet, b: usize) -> Result<bool> {
        self.require_member(z, b)?;
        let above = self.space.up_of(b);
        if above.len() > self.caps.points {
            return Err(Error::CapExceeded {
                what: "strong irredundance oracle (|↑B|)",
                size: above.len(),
                cap: self.caps.points,
            });
        }
        let rest = z.without(b);
        Ok(above
            .subsets()
            .filter(|&y| self.space.is_up_set(y))
            .filter(|&y| self.family.validate_subfamily(rest | y).holds)
            .all(|y| y == above))
    }

    /// `B` is critical iff the largest closed set avoiding `B`, `X ∖ ↓B`,
    /// is not a representation.
    pub fn is_critical(&self, b: usize) -> bool {
        !self.is_representation(self.all() - self.space.down_of(b))
    }

    pub fn critical_points(&self) -> PointSet {
        (0..self.family.len())
            .filter(|&b| self.is_critical(b))
            .collect()
    }

    /// `𝒞(X)`: the minimal critical points.
    pub fn cset(&self) -> PointSet {
        self.space.min_elements(self.critical_points())
    }

    /// Intersection of every closed representation, found by enumerating all
    /// subfamilies and checking each element-wise.
    pub fn critical_points_oracle(&self) -> Result<PointSet> {
        let n = self.family.len();
        if n > self.caps.exhaustive {
            return Err(Error::CapExceeded {
                what: "critical point oracle",
                size: n,
                cap: self.caps.exhaustive,
            });
        }
        Ok(self
            .all()
            .subsets()
            .filter(|&y| self.space.is_up_set(y) && self.family.validate_subfamily(y).holds)
            .fold(self.all(), |acc, y| acc & y))
    }

    /// Isolation of `b` in the subspace topology of the given kind on `z`.
    pub fn isolated_in(&self, z: PointSet, b: usize, kind: TopologyKind) -> bool {
        // Smallest open neighbourhood of b: ↓b (spectral), ↑b (inverse), {b} (patch).
        let nbhd = match kind {
            TopologyKind::Spectral => self.space.down_of(b),
            TopologyKind::Inverse => self.space.up_of(b),
            TopologyKind::Patch => PointSet::singleton(b),
        };
        z.contains(b) && (nbhd & z) == PointSet::singleton(b)
    }

    /// Whether `z` is `Min Y` for some minimal closed representation `Y`.
    pub fn is_minimal_representation(&self, z: PointSet) -> bool {
        let closed = self.space.up_set(z);
        self.space.is_antichain(z)
            && self.is_representation(closed)
            && z.iter().all(|m| !self.is_representation(closed.without(m)))
    }

    /// Full classification of every member of `z`.
    pub fn report(&self, z: PointSet) -> Result<RepresentationReport> {
        self.require_subfamily_rep(z)?;
        let members = z
            .iter()
            .map(|b| Ok((b, self.classify_member(z, b)?)))
            .collect::<Result<Vec<_>>>()?;
        Ok(RepresentationReport { chosen: z, members })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RepresentationReport {
    pub chosen: PointSet,
    /// `(point index, flags)` in index order.
    pub members: Vec<(usize, MemberFlags)>,
}

impl RepresentationReport {
    pub fn flags(&self, b: usize) -> Option<&MemberFlags> {
        self.members.iter().find(|(i, _)| *i == b).map(|(_, f)| f)
    }
}

#[cfg(test)]
mod tests;
