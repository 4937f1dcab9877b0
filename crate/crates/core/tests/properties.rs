mod common;

use proptest::prelude::*;

use specrep::topology::generate_topology;
use specrep::{Caps, PointFamily, PointSet, RepresentationEngine, TopologyKind};

fn family(seed: u64, universe: usize, points: usize) -> PointFamily {
    common::random_family(&mut common::rng(seed), universe, points)
}

fn representations(engine: &RepresentationEngine<'_>) -> Vec<PointSet> {
    engine
        .all()
        .subsets()
        .filter(|&z| engine.is_representation(z))
        .collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn generator_yields_representations(seed in any::<u64>()) {
        let f = family(seed, 6, 10);
        prop_assert!(f.validate_representation().holds);
        prop_assert!(f.len() <= 10);
    }

    #[test]
    fn hitting_test_matches_elementwise_meet(seed in any::<u64>()) {
        let f = family(seed, 6, 9);
        let e = RepresentationEngine::new(&f, Caps::default()).unwrap();
        for z in f.all().subsets() {
            let literal = f.validate_subfamily(z);
            prop_assert_eq!(e.is_representation(z), literal.holds);
            if let Some(d) = e.separating_element(z) {
                prop_assert!(f.meet_with_fixed(z).contains(d));
                prop_assert!(!f.context().target().contains(d));
            }
        }
    }

    #[test]
    fn representation_is_monotone(seed in any::<u64>()) {
        let f = family(seed, 6, 9);
        let e = RepresentationEngine::new(&f, Caps::default()).unwrap();
        for z in representations(&e) {
            for b in f.all() - z {
                prop_assert!(e.is_representation(z.with(b)));
            }
        }
    }

    #[test]
    fn strong_fast_path_matches_oracle(seed in any::<u64>()) {
        let f = family(seed, 5, 8);
        let e = RepresentationEngine::new(&f, Caps::default()).unwrap();
        for z in representations(&e) {
            for b in z {
                prop_assert_eq!(e.is_strongly_irredundant(z, b), e.strongly_irredundant_oracle(z, b).unwrap());
                prop_assert_eq!(e.is_strongly_irredundant(z, b), e.is_tightly_irredundant(z, b));
                if e.is_strongly_irredundant(z, b) {
                    prop_assert!(e.is_irredundant(z, b));
                }
            }
        }
    }

    #[test]
    fn critical_fast_path_matches_oracle(seed in any::<u64>()) {
        let f = family(seed, 6, 10);
        let e = RepresentationEngine::new(&f, Caps::default()).unwrap();
        prop_assert_eq!(e.critical_points(), e.critical_points_oracle().unwrap());
        prop_assert!(e.space().is_antichain(e.cset()));
    }

    #[test]
    fn hull_kernel_split(seed in any::<u64>(), mask in 0u64..64) {
        let f = family(seed, 6, 10);
        let n = f.context().universe_size();
        let mut set = fixedbitset::FixedBitSet::with_capacity(n);
        for i in (0..n).filter(|i| mask >> i & 1 == 1) {
            set.insert(i);
        }
        let (u, v) = f.hull_kernel_sets(&set);
        let space = f.to_spec_space().unwrap();
        prop_assert_eq!(u | v, f.all());
        prop_assert!(!u.intersects(v));
        prop_assert!(space.is_down_set(u));
        prop_assert!(space.is_up_set(v));
    }

    #[test]
    fn every_point_lies_above_a_minimal_point(seed in any::<u64>()) {
        let f = family(seed, 6, 10);
        let space = f.to_spec_space().unwrap();
        for y in f.all().subsets().take(256) {
            let mins = space.min_elements(y);
            for b in y {
                prop_assert!(mins.iter().any(|m| space.le(m, b)));
            }
            prop_assert_eq!(space.up_set(mins), space.up_set(y));
        }
    }

    #[test]
    fn generated_topologies_match_fast_closures(seed in any::<u64>()) {
        let f = family(seed, 5, 7);
        let space = f.to_spec_space().unwrap();
        for kind in TopologyKind::ALL {
            let t = generate_topology(&space, kind, 16).unwrap();
            for y in f.all().subsets() {
                prop_assert_eq!(t.closure(y), space.closure(y, kind));
            }
        }
    }

    #[test]
    fn minimal_representations_are_antichains_of_strong_points(seed in any::<u64>()) {
        let f = family(seed, 6, 10);
        let e = RepresentationEngine::new(&f, Caps::default()).unwrap();
        let minimal = e.minimal_representations().unwrap();
        prop_assert!(!minimal.is_empty());
        for z in minimal {
            prop_assert!(e.is_minimal_representation(z));
            for b in z {
                prop_assert!(e.is_strongly_irredundant(z, b));
                prop_assert!(e.isolated_in(z, b, TopologyKind::Spectral));
            }
            e.isolated_points(z, TopologyKind::Spectral).unwrap();
        }
        e.unique_minimal_analysis().unwrap();
    }

    #[test]
    fn rush_wallace_witnesses_hold(seed in any::<u64>()) {
        let f = family(seed, 6, 8);
        let space = f.to_spec_space().unwrap();
        for y in f.all().subsets().take(64) {
            prop_assert!(space.rush_wallace_holds(y).unwrap().holds);
        }
    }
}

#[test]
fn generator_covers_the_size_range() {
    let mut rng = common::rng(7);
    let fams: Vec<PointFamily> = (0..300)
        .map(|_| common::random_family(&mut rng, 6, 10))
        .collect();
    let max_points = fams.iter().map(|f| f.len()).max().unwrap();
    let max_universe = fams
        .iter()
        .map(|f| f.context().universe_size())
        .max()
        .unwrap();
    let non_unique = fams
        .iter()
        .filter(|f| {
            let e = RepresentationEngine::new(f, Caps::default()).unwrap();
            !e.unique_minimal_analysis().unwrap().unique
        })
        .count();
    println!("max |X| {max_points}, max |D| {max_universe}, {non_unique} without a unique minimal representation");
    assert!(max_points >= 9 && max_universe == 6);
    assert!(non_unique > 0 && non_unique < 300);
}
