//! Spectral representations of sets on finite models.
//!
//! Given sets `A ⊊ C ⊆ D` and a finite family `X` of subsets of `D` with
//! `(⋂ X) ∩ C = A`, this crate classifies which members of a subfamily can be
//! dropped or replaced, computes minimal and critical representations, and
//! applies the machinery to irreducible ideals of finite rings and to
//! overrings of the integers presented by finite prime pools.
//!
//! Modules:
//! - [`topology`]: finite spectral spaces and their spectral / inverse / patch topologies.
//! - [`family`]: the `(D, C, A)` context and named point families.
//! - [`engine`]: irredundance, criticality, minimal and unique representations.
//! - [`rings`]: `ℤ/n` and table-presented finite rings, ideal lattices, decompositions.
//! - [`zr`]: overrings of `ℤ` given by retained primes, and their encoding into families.
//! - [`theorems`]: the cross-check suite run by `check-theorems`.
//! - [`instance`], [`report`], [`dot`]: JSON instances, JSON reports, DOT diagrams.

pub mod bits;
pub mod dot;
pub mod engine;
pub mod error;
pub mod family;
pub mod instance;
pub mod report;
pub mod rings;
pub mod theorems;
pub mod topology;
pub mod zr;

pub use bits::PointSet;
pub use engine::{MemberFlags, RepresentationEngine, RepresentationReport, UniqueAnalysis};
pub use error::{Error, Result};
pub use family::{ContextTriple, PointFamily, Validation};
pub use topology::{generate_topology, SpecSpace, Topology, TopologyKind};

/// Size limits for the exponential computations.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Caps {
    /// Points in a family for up-set enumeration (minimal representations, oracles on `↑B`).
    pub points: usize,
    /// Points for subbasis topology generation.
    pub topology: usize,
    /// Elements of a table-presented ring.
    pub ring: usize,
    /// Points for searches over every subfamily (`2^n` subsets).
    pub exhaustive: usize,
}

impl Default for Caps {
    fn default() -> Self {
        Caps {
            points: 20,
            topology: topology::DEFAULT_TOPOLOGY_CAP,
            ring: 64,
            exhaustive: 12,
        }
    }
}

impl Caps {
    /// Caps with the point limit replaced; the subfamily search limit never exceeds it.
    pub fn with_points(self, points: usize) -> Self {
        Caps {
            points,
            exhaustive: self.exhaustive.min(points),
            ..self
        }
    }
}
