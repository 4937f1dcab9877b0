//! Cross-check suite: runs every structural invariant the library knows
//! about on one instance and reports each as a named pass/fail line.

use serde::Serialize;

use crate::bits::PointSet;
use crate::engine::RepresentationEngine;
use crate::error::{Error, Result};
use crate::family::PointFamily;
use crate::rings::{
    build_irr_space, irredundant_decomposition, saturation_identity, FiniteRing, IdealFilter,
    RingIdeal,
};
use crate::topology::{generate_topology, TopologyKind};
use crate::zr::{corollary54_check, PrimePool};
use crate::Caps;

/// Pools up to this size also get the full target × C sweep.
const POOL_SWEEP_LIMIT: usize = 8;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CheckResult {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct CheckSuite {
    pub checks: Vec<CheckResult>,
}

impl CheckSuite {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &CheckResult> {
        self.checks.iter().filter(|c| !c.passed)
    }

    /// Runs `check`; a violation becomes a failed line, other errors propagate.
    fn run(&mut self, name: &'static str, check: impl FnOnce() -> Result<String>) -> Result<()> {
        let (passed, detail) = match check() {
            Ok(detail) => (true, detail),
            Err(Error::TheoremViolation { theorem, detail }) => {
                (false, format!("{theorem} failed: {detail}"))
            }
            Err(e) => return Err(e),
        };
        self.checks.push(CheckResult {
            name,
            passed,
            detail,
        });
        Ok(())
    }

    fn extend(&mut self, other: CheckSuite) {
        self.checks.extend(other.checks);
    }
}

fn fail(name: &'static str, detail: impl Into<String>) -> Error {
    Error::violation(name, detail)
}

/// Subfamilies worth classifying: the whole family, each minimal
/// representation, and under the search cap every representation.
fn sample_representations(
    engine: &RepresentationEngine<'_>,
    minimal: &[PointSet],
) -> Vec<PointSet> {
    let all = engine.all();
    if all.len() <= engine.caps().exhaustive {
        all.subsets()
            .filter(|&z| engine.is_representation(z))
            .collect()
    } else {
        let mut v = vec![all];
        v.extend(minimal.iter().copied().filter(|&z| z != all));
        v
    }
}

/// Every invariant on a validated point family.
pub fn check_family(family: &PointFamily, caps: Caps) -> Result<CheckSuite> {
    let engine = RepresentationEngine::new(family, caps)?;
    let space = engine.space();
    let names = |z: PointSet| family.sorted_names(z).join(", ");
    let mut suite = CheckSuite::default();

    suite.run("topology-closures", || {
        if family.len() > caps.topology {
            return Ok(format!(
                "skipped: {} points above the topology cap",
                family.len()
            ));
        }
        for kind in TopologyKind::ALL {
            let top = generate_topology(space, kind, caps.topology)?;
            for y in engine.all().subsets() {
                if top.closure(y) != space.closure(y, kind) {
                    return Err(fail(
                        "topology-closures",
                        format!("{kind:?} closure of {{{}}}", names(y)),
                    ));
                }
            }
        }
        Ok("spectral, inverse and patch closures match ↑Y, ↓Y and Y".into())
    })?;

    let minimal = engine.minimal_representations()?;
    let reps = sample_representations(&engine, &minimal);

    suite.run("strongly-equals-tightly", || {
        for &z in &reps {
            for b in z {
                if engine.is_strongly_irredundant(z, b) != engine.is_tightly_irredundant(z, b) {
                    return Err(fail(
                        "strongly-equals-tightly",
                        format!("{} in {{{}}}", family.name(b), names(z)),
                    ));
                }
            }
        }
        Ok(format!("{} representations", reps.len()))
    })?;

    suite.run("irredundant-implies-isolated", || {
        for &z in &reps {
            for b in z {
                if engine.is_irredundant(z, b) && !engine.isolated_in(z, b, TopologyKind::Spectral)
                {
                    return Err(fail(
                        "irredundant-implies-isolated",
                        format!("{} in {{{}}}", family.name(b), names(z)),
                    ));
                }
            }
        }
        Ok(format!("{} representations", reps.len()))
    })?;

    suite.run("isolation-equivalence", || {
        for &z in &minimal {
            engine.isolated_points(z, TopologyKind::Spectral)?;
        }
        Ok(format!("{} minimal representations", minimal.len()))
    })?;

    suite.run("critical-oracle", || {
        if family.len() > caps.exhaustive {
            return Ok(format!(
                "skipped: {} points above the search cap",
                family.len()
            ));
        }
        let oracle = engine.critical_points_oracle()?;
        if oracle != engine.critical_points() {
            return Err(fail(
                "critical-oracle",
                format!(
                    "fast {{{}}} vs oracle {{{}}}",
                    names(engine.critical_points()),
                    names(oracle)
                ),
            ));
        }
        Ok(format!("critical points {{{}}}", names(oracle)))
    })?;

    suite.run("critical-irredundant-strong", || {
        for &z in &reps {
            for b in z {
                if engine.is_critical(b)
                    && engine.is_irredundant(z, b)
                    && !engine.is_strongly_irredundant(z, b)
                {
                    return Err(fail(
                        "critical-irredundant-strong",
                        format!("{} in {{{}}}", family.name(b), names(z)),
                    ));
                }
            }
        }
        Ok(format!("{} representations", reps.len()))
    })?;

    suite.run("cset-uniqueness", || {
        let u = engine.unique_minimal_analysis()?;
        Ok(format!(
            "𝒞(X) = {{{}}} {}; {} minimal representation(s){}",
            names(u.cset),
            if u.cset_represents {
                "represents"
            } else {
                "does not represent"
            },
            u.minimal_count,
            if u.exhaustive { ", exhaustive" } else { "" }
        ))
    })?;

    suite.run("strong-rep-existence", || {
        let z = minimal[0];
        for b in z {
            let fast = engine.is_strongly_irredundant(z, b);
            let exact = if space.up_of(b).len() <= caps.points {
                engine.strongly_irredundant_oracle(z, b)?
            } else {
                fast
            };
            if !(fast && exact) {
                return Err(fail(
                    "strong-rep-existence",
                    format!(
                        "{} in minimal representation {{{}}}",
                        family.name(b),
                        names(z)
                    ),
                ));
            }
        }
        Ok(format!("{{{}}}", names(z)))
    })?;

    Ok(suite)
}

/// Ring-wide checks plus the decomposition checks for `ideal`, or for every
/// proper ideal when none is given.
pub fn check_ring(ring: &FiniteRing, ideal: Option<&RingIdeal>, caps: Caps) -> Result<CheckSuite> {
    let mut suite = CheckSuite::default();
    suite.run("strongly-irreducible-within-irreducible", || {
        let irr = ring.enumerate_ideals(IdealFilter::Irreducible);
        let strong = ring.enumerate_ideals(IdealFilter::StronglyIrreducible);
        if let Some(a) = strong.iter().find(|a| !irr.contains(a)) {
            return Err(fail(
                "strongly-irreducible-within-irreducible",
                format!("{a}"),
            ));
        }
        if ring.is_arithmetical() && irr != strong {
            return Err(fail(
                "strongly-irreducible-within-irreducible",
                "arithmetical ring with an irreducible ideal that is not strongly irreducible",
            ));
        }
        Ok(format!(
            "{} irreducible, {} strongly irreducible",
            irr.len(),
            strong.len()
        ))
    })?;
    if !ring.is_arithmetical() {
        suite.checks.push(CheckResult {
            name: "arithmetical",
            passed: true,
            detail: "not arithmetical: decomposition checks do not apply".into(),
        });
        return Ok(suite);
    }
    let ideals = match ideal {
        Some(a) => vec![a.clone()],
        None => ring.enumerate_ideals(IdealFilter::Proper),
    };
    for a in &ideals {
        suite.run("irreducible-space-minimality", || {
            let s = build_irr_space(ring, a, caps)?;
            Ok(format!(
                "V({a}) has {} points{}",
                s.points.len(),
                if s.closed_minimality_checked {
                    ""
                } else {
                    ", above point cap"
                }
            ))
        })?;
        suite.run("irredundant-decomposition", || {
            let d = irredundant_decomposition(ring, a, caps)?;
            if let (FiniteRing::ZMod(z), RingIdeal::Divisor(g)) = (ring, a) {
                let crt: Vec<RingIdeal> = z
                    .factors()
                    .iter()
                    .filter(|&&(p, _)| g % p == 0)
                    .map(|&(p, _)| RingIdeal::Divisor(p.pow(z.valuation(p, *g))))
                    .collect();
                if crt != d.components {
                    return Err(fail(
                        "irredundant-decomposition",
                        format!("{d} but prime powers give {crt:?}"),
                    ));
                }
            }
            Ok(d.to_string())
        })?;
        suite.run("saturation-identity", || {
            let sats = saturation_identity(ring, a, caps)?;
            Ok(format!(
                "{} saturations at maximal associated primes of {a}",
                sats.len()
            ))
        })?;
    }
    Ok(suite)
}

/// Family checks on the encoding, then the target × C sweep over the pool.
pub fn check_zr(pool: &PrimePool, family: &PointFamily, caps: Caps) -> Result<CheckSuite> {
    let mut suite = check_family(family, caps)?;
    let engine = RepresentationEngine::new(family, caps)?;
    suite.run("valuation-witnesses", || {
        let mut seen = 0;
        for z in engine.minimal_representations()? {
            for b in z {
                let name = family.name(b);
                let Some(p) = name.strip_prefix("ℤ_(").and_then(|s| s.strip_suffix(')')) else {
                    continue;
                };
                if p.contains(',') {
                    continue;
                }
                let flags = engine.classify_member(z, b)?;
                let want = format!("1/{p}");
                let got = flags.witness.map(|d| family.context().label(d));
                if got != Some(want.as_str()) || !flags.critical || !flags.strongly_irredundant {
                    return Err(fail(
                        "valuation-witnesses",
                        format!("{name}: witness {got:?}, expected {want}"),
                    ));
                }
                seen += 1;
            }
        }
        Ok(format!("{seen} local members with witness 1/p"))
    })?;
    if pool.len() <= POOL_SWEEP_LIMIT {
        let mut sweep = CheckSuite::default();
        sweep.run("valuation-rep-uniqueness", || {
            let r = corollary54_check(pool, caps)?;
            Ok(format!(
                "{} (target, C) pairs, {} witnesses",
                r.checks, r.witnesses
            ))
        })?;
        suite.extend(sweep);
    }
    Ok(suite)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::family::ContextTriple;

    fn i1() -> PointFamily {
        let ctx = ContextTriple::new(&["a", "b", "c"], &["a", "b", "c"], &["a"]).unwrap();
        PointFamily::from_labels(
            ctx,
            &[
                ("B1", vec!["a", "b"]),
                ("B2", vec!["a", "c"]),
                ("B3", vec!["a", "b", "c"]),
            ],
        )
        .unwrap()
    }

    #[test]
    fn i1_passes_every_check() {
        let suite = check_family(&i1(), Caps::default()).unwrap();
        assert!(suite.all_passed(), "{suite:?}");
        assert_eq!(suite.checks.len(), 8);
    }

    #[test]
    fn z12_passes_every_check() {
        let r = FiniteRing::zmod(12).unwrap();
        let suite = check_ring(&r, None, Caps::default()).unwrap();
        assert!(suite.all_passed(), "{suite:?}");
        // One ring-wide check plus three per proper ideal.
        assert_eq!(suite.checks.len(), 1 + 3 * 5);
    }

    #[test]
    fn pool_passes_every_check() {
        let pool = PrimePool::new(vec![2, 3, 5]).unwrap();
        let q = pool.ring(&[]).unwrap();
        let target = pool.ring(&[2, 3, 5]).unwrap();
        let members: Vec<_> = [2, 3, 5]
            .iter()
            .map(|&p| pool.ring(&[p]).unwrap())
            .collect();
        let family = crate::zr::encode(&pool, &target, &q, &members).unwrap();
        let suite = check_zr(&pool, &family, Caps::default()).unwrap();
        assert!(suite.all_passed(), "{suite:?}");
        assert!(suite
            .checks
            .iter()
            .any(|c| c.name == "valuation-rep-uniqueness"));
    }

    #[test]
    fn violations_become_failed_lines() {
        let mut suite = CheckSuite::default();
        suite
            .run("demo", || Err(fail("demo", "at point B2")))
            .unwrap();
        assert!(!suite.all_passed());
        assert_eq!(suite.checks[0].detail, "demo failed: at point B2");
        assert!(suite.run("cap", || Err(Error::invalid("x"))).is_err());
    }
}
