use crate::bits::PointSet;
use crate::error::{Error, Result};
use crate::topology::TopologyKind;

use super::RepresentationEngine;

/// Outcome of the uniqueness analysis around `𝒞(X)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UniqueAnalysis {
    pub unique: bool,
    pub cset_represents: bool,
    pub cset: PointSet,
    pub minimal_count: usize,
    /// Points strongly irredundant in some representation, when `𝒞(X)` represents.
    pub strongly_irredundant_points: Option<PointSet>,
    /// The strongly irredundant representation, when one exists.
    pub strongly_irredundant_rep: Option<PointSet>,
    /// Whether the exhaustive search over all subfamilies ran.
    pub exhaustive: bool,
}

/// Both sides of the density criterion for a minimal representation.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DensityCriterion {
    pub contains_irredundant_rep: bool,
    pub isolated_dense: bool,
}

impl RepresentationEngine<'_> {
    fn check_cap(&self, what: &'static str, size: usize, cap: usize) -> Result<()> {
        if size > cap {
            Err(Error::CapExceeded { what, size, cap })
        } else {
            Ok(())
        }
    }

    /// Calls `visit` once for every antichain inside `within`, including the empty one.
    pub fn for_each_antichain(&self, within: PointSet, mut visit: impl FnMut(PointSet)) {
        fn walk(
            engine: &RepresentationEngine<'_>,
            candidates: PointSet,
            current: PointSet,
            visit: &mut dyn FnMut(PointSet),
        ) {
            visit(current);
            let mut rest = candidates;
            while let Some(i) = rest.first() {
                rest.remove(i);
                let comparable = engine.space.up_of(i) | engine.space.down_of(i);
                walk(engine, rest - comparable, current.with(i), visit);
            }
        }
        walk(self, within, PointSet::EMPTY, &mut visit);
    }

    /// Closed (up-set) representations that are inclusion-minimal, in canonical order.
    pub fn minimal_closed_representations(&self) -> Result<Vec<PointSet>> {
        self.check_cap(
            "minimal closed representations",
            self.family.len(),
            self.caps.points,
        )?;
        let mut found = Vec::new();
        // Up-sets are exactly ↑(antichain), one per antichain. Since
        // representation-ness is monotone, an up-set U is minimal iff removing
        // any one of its minimal points breaks it.
        self.for_each_antichain(self.all(), |a| {
            let closed = self.space.up_set(a);
            if self.is_representation(closed)
                && a.iter().all(|m| !self.is_representation(closed.without(m)))
            {
                found.push(closed);
            }
        });
        if found.is_empty() {
            return Err(Error::violation(
                "minimal-closed-existence",
                "no closed representation found below the whole family",
            ));
        }
        self.canonical_sort(&mut found);
        Ok(found)
    }

    /// `Min Y` for each minimal closed representation `Y`.
    pub fn minimal_representations(&self) -> Result<Vec<PointSet>> {
        let closed = self.minimal_closed_representations()?;
        let mut reps = Vec::with_capacity(closed.len());
        for &y in &closed {
            let z = self.space.min_elements(y);
            if self.space.up_set(z) != y {
                return Err(Error::violation(
                    "minimal-rep-closure",
                    format!(
                        "↑Min Y differs from Y for Y = {:?}",
                        self.family.sorted_names(y)
                    ),
                ));
            }
            if self.space.closure(z, TopologyKind::Patch) != z || self.space.min_elements(z) != z {
                return Err(Error::violation(
                    "minimal-rep-patch-closure",
                    format!("{:?}", self.family.sorted_names(z)),
                ));
            }
            reps.push(z);
        }
        let mut distinct = reps.clone();
        distinct.sort();
        distinct.dedup();
        if distinct.len() != reps.len() {
            return Err(Error::violation(
                "minimal-rep-distinct",
                "two minimal closed representations share their minimal points",
            ));
        }
        self.canonical_sort(&mut reps);
        Ok(reps)
    }

    /// Sorts subfamilies lexicographically by their sorted point names.
    pub fn canonical_sort(&self, sets: &mut [PointSet]) {
        sets.sort_by_cached_key(|&s| self.family.sorted_names(s));
    }

    /// Points of `z` isolated in its subspace topology of the given kind.
    ///
    /// When `z` is a minimal representation this also cross-checks that
    /// irredundance, strong irredundance and spectral isolation coincide on
    /// `z`, that the spectral and patch subspace topologies agree there, and
    /// the density criterion for irredundant subrepresentations.
    pub fn isolated_points(&self, z: PointSet, kind: TopologyKind) -> Result<PointSet> {
        if !z.is_subset(self.all()) {
            return Err(Error::invalid(
                "subfamily refers to points outside the family",
            ));
        }
        let isolated: PointSet = z.iter().filter(|&b| self.isolated_in(z, b, kind)).collect();
        if self.is_minimal_representation(z) {
            let spectral: PointSet = z
                .iter()
                .filter(|&b| self.isolated_in(z, b, TopologyKind::Spectral))
                .collect();
            let patch: PointSet = z
                .iter()
                .filter(|&b| self.isolated_in(z, b, TopologyKind::Patch))
                .collect();
            if spectral != patch {
                return Err(Error::violation(
                    "isolation-topologies-agree",
                    format!(
                        "spectral and patch isolation differ on {:?}",
                        self.family.sorted_names(z)
                    ),
                ));
            }
            for b in z {
                let irr = self.is_irredundant(z, b);
                let strong = self.is_strongly_irredundant(z, b);
                let iso = spectral.contains(b);
                if irr != strong || strong != iso {
                    return Err(Error::violation(
                        "isolation-equivalence",
                        format!(
                            "at point {}: irredundant={irr}, strongly={strong}, isolated={iso}",
                            self.family.name(b)
                        ),
                    ));
                }
            }
            let cor = self.density_criterion(z)?;
            if cor.contains_irredundant_rep != cor.isolated_dense {
                return Err(Error::violation(
                    "isolated-density",
                    format!("{cor:?} on {:?}", self.family.sorted_names(z)),
                ));
            }
        }
        Ok(isolated)
    }

    /// Evaluates both sides of the density criterion on `z`: whether some
    /// subfamily of `z` is an irredundant representation (by search), and
    /// whether the isolated points of `z` are dense in `z`.
    pub fn density_criterion(&self, z: PointSet) -> Result<DensityCriterion> {
        self.check_cap("density criterion search", z.len(), self.caps.exhaustive)?;
        let contains_irredundant_rep = z.subsets().any(|y| {
            self.family.validate_subfamily(y).holds
                && y.iter()
                    .all(|b| !self.family.validate_subfamily(y.without(b)).holds)
        });
        let isolated: PointSet = z
            .iter()
            .filter(|&b| self.isolated_in(z, b, TopologyKind::Spectral))
            .collect();
        let isolated_dense = (self.space.closure(isolated, TopologyKind::Spectral) & z) == z;
        Ok(DensityCriterion {
            contains_irredundant_rep,
            isolated_dense,
        })
    }

    /// Decides whether `𝒞(X)` represents `A`, checks that this matches
    /// uniqueness of the minimal representation, and when it does, computes
    /// the set `S` of points strongly irredundant in some representation.
    pub fn unique_minimal_analysis(&self) -> Result<UniqueAnalysis> {
        let cset = self.cset();
        let cset_represents = self.is_representation(cset);
        let minimal = self.minimal_representations()?;
        let unique = minimal.len() == 1;
        if unique != cset_represents {
            return Err(Error::violation(
                "cset-uniqueness",
                format!(
                    "𝒞(X) represents: {cset_represents}, minimal representations: {}",
                    minimal.len()
                ),
            ));
        }
        let exhaustive = self.family.len() <= self.caps.exhaustive;
        if !cset_represents {
            return Ok(UniqueAnalysis {
                unique,
                cset_represents,
                cset,
                minimal_count: minimal.len(),
                strongly_irredundant_points: None,
                strongly_irredundant_rep: None,
                exhaustive: false,
            });
        }

        let shortcut: PointSet = cset
            .iter()
            .filter(|&b| self.is_strongly_irredundant(cset, b))
            .collect();
        if exhaustive {
            let mut s = PointSet::EMPTY;
            let mut strongly_irredundant_reps = Vec::new();
            for z in self.all().subsets().filter(|&z| self.is_representation(z)) {
                let strong: PointSet = z
                    .iter()
                    .filter(|&b| self.is_strongly_irredundant(z, b))
                    .collect();
                s = s | strong;
                if strong == z {
                    strongly_irredundant_reps.push(z);
                }
            }
            if !s.is_subset(cset) {
                return Err(Error::violation(
                    "strong-points-in-cset",
                    format!(
                        "S ⊄ 𝒞(X): extra points {:?}",
                        self.family.sorted_names(s - cset)
                    ),
                ));
            }
            if s != shortcut {
                return Err(Error::violation(
                    "strong-points-shortcut",
                    format!(
                        "S = {:?} but strongly irredundant points of 𝒞(X) are {:?}",
                        self.family.sorted_names(s),
                        self.family.sorted_names(shortcut)
                    ),
                ));
            }
            if strongly_irredundant_reps.len() > 1
                || strongly_irredundant_reps.iter().any(|&z| z != s)
            {
                return Err(Error::violation(
                    "strong-rep-uniqueness",
                    format!(
                        "{} strongly irredundant representations",
                        strongly_irredundant_reps.len()
                    ),
                ));
            }
        }
        let rep = self.is_representation(shortcut).then_some(shortcut);
        Ok(UniqueAnalysis {
            unique,
            cset_represents,
            cset,
            minimal_count: minimal.len(),
            strongly_irredundant_points: Some(shortcut),
            strongly_irredundant_rep: rep,
            exhaustive,
        })
    }
}
