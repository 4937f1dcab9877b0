//! Ambient data for intersection representations: a universe `D`, a fixed
//! set `C ⊆ D`, a target `A ⊊ C`, and a named family of subsets of `D`.
//!
//! Element labels are opaque strings mapped to indices once; every set is a
//! bitset over those indices.

use std::collections::HashMap;

use fixedbitset::FixedBitSet;

use crate::bits::{PointSet, MAX_POINTS};
use crate::error::{Error, Result};
use crate::topology::SpecSpace;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ContextTriple {
    labels: Vec<String>,
    index: HashMap<String, usize>,
    fixed: FixedBitSet,
    target: FixedBitSet,
}

impl ContextTriple {
    pub fn new<S: AsRef<str>>(universe: &[S], fixed: &[S], target: &[S]) -> Result<Self> {
        let mut labels = Vec::with_capacity(universe.len());
        let mut index = HashMap::with_capacity(universe.len());
        for label in universe {
            let label = label.as_ref();
            if index.insert(label.to_string(), labels.len()).is_some() {
                return Err(Error::invalid(format!(
                    "universe label {label:?} is repeated"
                )));
            }
            labels.push(label.to_string());
        }
        let mut ctx = ContextTriple {
            fixed: FixedBitSet::with_capacity(labels.len()),
            target: FixedBitSet::with_capacity(labels.len()),
            labels,
            index,
        };
        ctx.fixed = ctx.parse_set(fixed, "C")?;
        ctx.target = ctx.parse_set(target, "A")?;
        ctx.check()?;
        Ok(ctx)
    }

    pub fn from_bits(labels: Vec<String>, fixed: FixedBitSet, target: FixedBitSet) -> Result<Self> {
        let mut index = HashMap::with_capacity(labels.len());
        for (i, l) in labels.iter().enumerate() {
            if index.insert(l.clone(), i).is_some() {
                return Err(Error::invalid(format!("universe label {l:?} is repeated")));
            }
        }
        if fixed.len() != labels.len() || target.len() != labels.len() {
            return Err(Error::invalid("C and A must be sized to the universe"));
        }
        let ctx = ContextTriple {
            labels,
            index,
            fixed,
            target,
        };
        ctx.check()?;
        Ok(ctx)
    }

    fn check(&self) -> Result<()> {
        if !self.target.is_subset(&self.fixed) {
            return Err(Error::invalid("A must be a subset of C"));
        }
        if self.target == self.fixed {
            return Err(Error::invalid("A must be a proper subset of C"));
        }
        Ok(())
    }

    /// Parses a list of labels into a bitset; `what` names the set in errors.
    pub fn parse_set<S: AsRef<str>>(&self, labels: &[S], what: &str) -> Result<FixedBitSet> {
        let mut set = FixedBitSet::with_capacity(self.labels.len());
        for l in labels {
            let l = l.as_ref();
            let &i = self
                .index
                .get(l)
                .ok_or_else(|| Error::invalid(format!("{what}: unknown element {l:?}")))?;
            set.insert(i);
        }
        Ok(set)
    }

    pub fn universe_size(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, d: usize) -> &str {
        &self.labels[d]
    }

    pub fn fixed(&self) -> &FixedBitSet {
        &self.fixed
    }

    pub fn target(&self) -> &FixedBitSet {
        &self.target
    }

    pub fn universe(&self) -> FixedBitSet {
        let mut all = FixedBitSet::with_capacity(self.labels.len());
        all.insert_range(..);
        all
    }

    pub fn labels_of(&self, set: &FixedBitSet) -> Vec<String> {
        set.ones().map(|d| self.labels[d].clone()).collect()
    }
}

/// Result of checking `(⋂ Z) ∩ C = A`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Validation {
    pub holds: bool,
    /// Least element (in universe order) of the symmetric difference.
    pub counterexample: Option<usize>,
}

#[derive(Debug, Clone)]
pub struct PointFamily {
    context: ContextTriple,
    names: Vec<String>,
    members: Vec<FixedBitSet>,
}

impl PointFamily {
    pub fn new(context: ContextTriple, members: Vec<(String, FixedBitSet)>) -> Result<Self> {
        if members.len() > MAX_POINTS {
            return Err(Error::CapExceeded {
                what: "point family",
                size: members.len(),
                cap: MAX_POINTS,
            });
        }
        let mut names = Vec::with_capacity(members.len());
        let mut sets: Vec<FixedBitSet> = Vec::with_capacity(members.len());
        for (name, set) in members {
            if names.contains(&name) {
                return Err(Error::invalid(format!("point name {name:?} is repeated")));
            }
            if set.len() != context.universe_size() {
                return Err(Error::invalid(format!(
                    "point {name} is not sized to the universe"
                )));
            }
            if let Some(j) = sets.iter().position(|s| *s == set) {
                return Err(Error::invalid(format!(
                    "points {} and {name} are the same set",
                    names[j]
                )));
            }
            names.push(name);
            sets.push(set);
        }
        Ok(PointFamily {
            context,
            names,
            members: sets,
        })
    }

    pub fn from_labels<S: AsRef<str>>(
        context: ContextTriple,
        members: &[(S, Vec<S>)],
    ) -> Result<Self> {
        let parsed = members
            .iter()
            .map(|(name, labels)| {
                let name = name.as_ref();
                let set = context.parse_set(labels, &format!("point {name}"))?;
                Ok((name.to_string(), set))
            })
            .collect::<Result<Vec<_>>>()?;
        PointFamily::new(context, parsed)
    }

    pub fn context(&self) -> &ContextTriple {
        &self.context
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn all(&self) -> PointSet {
        PointSet::full(self.len())
    }

    pub fn name(&self, i: usize) -> &str {
        &self.names[i]
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn member(&self, i: usize) -> &FixedBitSet {
        &self.members[i]
    }

    pub fn members(&self) -> &[FixedBitSet] {
        &self.members
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    /// Resolves point names to a subset, rejecting unknown names.
    pub fn subset_by_names<S: AsRef<str>>(&self, names: &[S]) -> Result<PointSet> {
        names
            .iter()
            .map(|n| {
                self.index_of(n.as_ref())
                    .ok_or_else(|| Error::invalid(format!("unknown point {:?}", n.as_ref())))
            })
            .collect()
    }

    /// `(U(F), V(F))`: members not containing `F`, members containing `F`.
    pub fn hull_kernel_sets(&self, f: &FixedBitSet) -> (PointSet, PointSet) {
        let mut u = PointSet::EMPTY;
        let mut v = PointSet::EMPTY;
        for (i, m) in self.members.iter().enumerate() {
            if f.is_subset(m) {
                v.insert(i);
            } else {
                u.insert(i);
            }
        }
        (u, v)
    }

    /// `(⋂ Z) ∩ C`, with the empty intersection taken to be `D`.
    pub fn meet_with_fixed(&self, z: PointSet) -> FixedBitSet {
        let mut acc = self.context.fixed().clone();
        for i in z {
            acc.intersect_with(&self.members[i]);
        }
        acc
    }

    pub fn validate_subfamily(&self, z: PointSet) -> Validation {
        let meet = self.meet_with_fixed(z);
        let counterexample = meet.symmetric_difference(self.context.target()).next();
        Validation {
            holds: counterexample.is_none(),
            counterexample,
        }
    }

    pub fn validate_representation(&self) -> Validation {
        self.validate_subfamily(self.all())
    }

    /// Checks that the whole family is a C-representation of A whose every
    /// member contains A.
    pub fn require_representation(&self) -> Result<()> {
        for (i, m) in self.members.iter().enumerate() {
            if !self.context.target().is_subset(m) {
                return Err(Error::MemberMissesTarget {
                    member: self.names[i].clone(),
                });
            }
        }
        let v = self.validate_representation();
        match v.counterexample {
            None => Ok(()),
            Some(d) => Err(Error::NotRepresentation {
                witness: self.context.label(d).to_string(),
            }),
        }
    }

    pub fn to_spec_space(&self) -> Result<SpecSpace> {
        SpecSpace::new(
            self.names.clone(),
            self.members.clone(),
            self.context.universe_size(),
        )
    }

    /// Names of the points in `z`, sorted.
    pub fn sorted_names(&self, z: PointSet) -> Vec<String> {
        let mut out: Vec<_> = z.iter().map(|i| self.names[i].clone()).collect();
        out.sort();
        out
    }
}
