//! Random point families that are representations by construction.
#![allow(dead_code)]

use fixedbitset::FixedBitSet;
use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use specrep::{ContextTriple, PointFamily};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn bits(n: usize, mask: u64) -> FixedBitSet {
    let mut s = FixedBitSet::with_capacity(n);
    for i in (0..n).filter(|i| mask >> i & 1 == 1) {
        s.insert(i);
    }
    s
}

/// A random representation with `|D| ≤ max_universe` and `|X| ≤ max_points`:
/// random `A ⊊ C ⊆ D`, random supersets of `A`, then one extra member per
/// uncovered element of `C ∖ A` so that the family intersects down to `A`.
pub fn random_family(rng: &mut impl Rng, max_universe: usize, max_points: usize) -> PointFamily {
    assert!(max_universe >= 2 && max_points >= 1);
    loop {
        let n = rng.gen_range(2..=max_universe);
        let full = (1u64 << n) - 1;
        let c = rng.gen_range(1..=full);
        // A ⊊ C: a random part of C, minus one element of C when that came out whole.
        let mut a = c & rng.gen_range(0..=full);
        if a == c {
            let in_c: Vec<usize> = (0..n).filter(|&d| c >> d & 1 == 1).collect();
            a &= !(1u64 << in_c[rng.gen_range(0..in_c.len())]);
        }
        // Elements of D outside A that members may or may not contain.
        let free = full & !a;
        let target_points = rng.gen_range(1..=max_points);
        let mut masks: Vec<u64> = Vec::new();
        for _ in 0..target_points {
            let m = a | (rng.gen_range(0..=full) & free);
            if !masks.contains(&m) {
                masks.push(m);
            }
        }
        // Cover every gap d ∈ C ∖ A by some member missing d.
        let mut gaps: Vec<usize> = (0..n).filter(|&d| (c & !a) >> d & 1 == 1).collect();
        gaps.shuffle(rng);
        for d in gaps {
            if masks.iter().all(|m| m >> d & 1 == 1) {
                let m = a | (rng.gen_range(0..=full) & free & !(1u64 << d));
                if !masks.contains(&m) {
                    masks.push(m);
                } else if let Some(slot) = masks.iter_mut().find(|m| **m >> d & 1 == 1) {
                    *slot &= !(1u64 << d);
                }
            }
        }
        masks.sort_unstable();
        masks.dedup();
        if masks.len() > max_points {
            continue;
        }
        let labels: Vec<String> = (0..n).map(|i| format!("d{i}")).collect();
        let Ok(ctx) = ContextTriple::from_bits(labels, bits(n, c), bits(n, a)) else {
            continue;
        };
        masks.shuffle(rng);
        let members = masks
            .iter()
            .enumerate()
            .map(|(i, &m)| (format!("P{i}"), bits(n, m)))
            .collect();
        let Ok(family) = PointFamily::new(ctx, members) else {
            continue;
        };
        if family.validate_representation().holds {
            return family;
        }
    }
}
