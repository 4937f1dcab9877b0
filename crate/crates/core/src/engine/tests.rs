use super::*;
use crate::family::ContextTriple;

fn family(universe: &[&str], c: &[&str], a: &[&str], members: &[(&str, &[&str])]) -> PointFamily {
    let ctx = ContextTriple::new(universe, c, a).unwrap();
    let members: Vec<(&str, Vec<&str>)> = members.iter().map(|(n, s)| (*n, s.to_vec())).collect();
    PointFamily::from_labels(ctx, &members).unwrap()
}

fn i1() -> PointFamily {
    family(
        &["a", "b", "c"],
        &["a", "b", "c"],
        &["a"],
        &[
            ("B1", &["a", "b"]),
            ("B2", &["a", "c"]),
            ("B3", &["a", "b", "c"]),
        ],
    )
}

fn ps(ix: &[usize]) -> PointSet {
    ix.iter().copied().collect()
}

fn label(f: &PointFamily, d: Option<usize>) -> Option<&str> {
    d.map(|d| f.context().label(d))
}

#[test]
fn i1_classification() {
    let f = i1();
    let e = RepresentationEngine::new(&f, Caps::default()).unwrap();
    let z = ps(&[0, 1]);
    let b1 = e.classify_member(z, 0).unwrap();
    assert!(b1.irredundant && b1.strongly_irredundant && b1.tightly_irredundant);
    assert_eq!(label(&f, b1.witness), Some("c"));
    assert_eq!(label(&f, b1.strong_witness), Some("c"));
    let b2 = e.classify_member(z, 1).unwrap();
    assert_eq!(label(&f, b2.witness), Some("b"));

    let b3 = e.classify_member(f.all(), 2).unwrap();
    assert!(!b3.irredundant && !b3.strongly_irredundant && !b3.tightly_irredundant);
    assert_eq!(b3.witness, None);
}

#[test]
fn classify_rejects_bad_input() {
    let f = i1();
    let e = RepresentationEngine::new(&f, Caps::default()).unwrap();
    assert_eq!(
        e.classify_member(ps(&[0, 1]), 2).unwrap_err(),
        Error::NotInSubfamily("B3".into())
    );
    assert_eq!(
        e.classify_member(ps(&[0]), 0).unwrap_err(),
        Error::NotRepresentation {
            witness: "b".into()
        }
    );
}

#[test]
fn engine_requires_a_representation() {
    let f = family(
        &["a", "b", "c"],
        &["a", "b", "c"],
        &["a"],
        &[("B1", &["a", "b"])],
    );
    assert_eq!(
        RepresentationEngine::new(&f, Caps::default()).unwrap_err(),
        Error::NotRepresentation {
            witness: "b".into()
        }
    );
}

#[test]
fn target_as_a_point_is_irredundant_alone() {
    let f = family(
        &["a", "b", "c"],
        &["a", "b", "c"],
        &["a"],
        &[("A", &["a"]), ("E", &["a", "b"])],
    );
    let e = RepresentationEngine::new(&f, Caps::default()).unwrap();
    let flags = e.classify_member(ps(&[0]), 0).unwrap();
    assert!(flags.irredundant);
    assert_eq!(label(&f, flags.witness), Some("b"));
}

#[test]
fn strong_oracle_examples() {
    let f = i1();
    let e = RepresentationEngine::new(&f, Caps::default()).unwrap();
    assert!(e.strongly_irredundant_oracle(ps(&[0, 1]), 0).unwrap());
    assert!(!e.strongly_irredundant_oracle(f.all(), 2).unwrap());

    let one = family(&["a", "x"], &["a", "x"], &["a"], &[("P", &["a"])]);
    let e = RepresentationEngine::new(&one, Caps::default()).unwrap();
    assert!(e.strongly_irredundant_oracle(ps(&[0]), 0).unwrap());
    assert!(e.classify_member(ps(&[0]), 0).unwrap().strongly_irredundant);

    let tiny = Caps::default().with_points(1);
    let e = RepresentationEngine::new(&f, tiny).unwrap();
    assert!(matches!(
        e.strongly_irredundant_oracle(ps(&[0, 1]), 0),
        Err(Error::CapExceeded { .. })
    ));
}

#[test]
fn minimal_closed_on_i1() {
    let f = i1();
    let e = RepresentationEngine::new(&f, Caps::default()).unwrap();
    assert_eq!(
        e.minimal_closed_representations().unwrap(),
        vec![ps(&[0, 1, 2])]
    );
    assert_eq!(e.minimal_representations().unwrap(), vec![ps(&[0, 1])]);
}

#[test]
fn complements_of_single_gaps_need_every_point() {
    // Members C ∖ {d} for d ∈ C ∖ A: omitting C ∖ {d} leaves d in the meet.
    let f = family(
        &["a", "b", "c", "d"],
        &["a", "b", "c", "d"],
        &["a"],
        &[
            ("Nb", &["a", "c", "d"]),
            ("Nc", &["a", "b", "d"]),
            ("Nd", &["a", "b", "c"]),
        ],
    );
    let e = RepresentationEngine::new(&f, Caps::default()).unwrap();
    assert_eq!(e.minimal_closed_representations().unwrap(), vec![f.all()]);
}

#[test]
fn target_plus_one_element_gives_pairwise_minimal_reps() {
    // Members A ∪ {d}: any two already meet in A, so every pair is minimal.
    let f = family(
        &["a", "b", "c", "d"],
        &["a", "b", "c", "d"],
        &["a"],
        &[
            ("Pb", &["a", "b"]),
            ("Pc", &["a", "c"]),
            ("Pd", &["a", "d"]),
        ],
    );
    let e = RepresentationEngine::new(&f, Caps::default()).unwrap();
    assert_eq!(
        e.minimal_closed_representations().unwrap(),
        vec![ps(&[0, 1]), ps(&[0, 2]), ps(&[1, 2])]
    );
    let u = e.unique_minimal_analysis().unwrap();
    assert!(!u.unique && !u.cset_represents);
    assert_eq!(u.minimal_count, 3);
    assert_eq!(u.cset, PointSet::EMPTY);

    // With only two such members both are needed.
    let f2 = family(
        &["a", "b", "c"],
        &["a", "b", "c"],
        &["a"],
        &[("Pb", &["a", "b"]), ("Pc", &["a", "c"])],
    );
    let e2 = RepresentationEngine::new(&f2, Caps::default()).unwrap();
    assert_eq!(e2.minimal_closed_representations().unwrap(), vec![f2.all()]);
}

#[test]
fn target_point_and_its_up_set() {
    // {A} alone represents, but whether ↑A is the minimal closed representation
    // depends on the rest of the family.
    let f = family(
        &["a", "b", "c"],
        &["a", "b", "c"],
        &["a"],
        &[("A", &["a"]), ("Ab", &["a", "b"])],
    );
    let e = RepresentationEngine::new(&f, Caps::default()).unwrap();
    assert_eq!(
        e.minimal_closed_representations().unwrap(),
        vec![e.space().up_of(0)]
    );
    let u = e.unique_minimal_analysis().unwrap();
    assert!(u.unique && u.cset_represents);
    assert_eq!(u.strongly_irredundant_rep, Some(ps(&[0])));

    let g = family(
        &["a", "b", "c"],
        &["a", "b", "c"],
        &["a"],
        &[("A", &["a"]), ("Ab", &["a", "b"]), ("Ac", &["a", "c"])],
    );
    let e = RepresentationEngine::new(&g, Caps::default()).unwrap();
    assert_eq!(
        e.minimal_closed_representations().unwrap(),
        vec![ps(&[1, 2])]
    );
    assert!(!e.is_critical(0));
    let u = e.unique_minimal_analysis().unwrap();
    assert_eq!(u.strongly_irredundant_rep, Some(ps(&[1, 2])));
}

#[test]
fn critical_points_on_i1() {
    let f = i1();
    let e = RepresentationEngine::new(&f, Caps::default()).unwrap();
    assert_eq!(e.critical_points(), f.all());
    assert_eq!(e.cset(), ps(&[0, 1]));
    assert_eq!(e.critical_points_oracle().unwrap(), f.all());
}

#[test]
fn criticality_below_a_redundant_point() {
    // X = {ab, ac, abd}. The closed representations are {ac, abd} and X, so
    // abd and ac are critical while ab is not, even though abd is redundant in X.
    let f = family(
        &["a", "b", "c", "d"],
        &["a", "b", "c", "d"],
        &["a"],
        &[
            ("ab", &["a", "b"]),
            ("ac", &["a", "c"]),
            ("abd", &["a", "b", "d"]),
        ],
    );
    let e = RepresentationEngine::new(&f, Caps::default()).unwrap();
    assert_eq!(e.critical_points(), ps(&[1, 2]));
    assert_eq!(e.critical_points_oracle().unwrap(), ps(&[1, 2]));
    assert!(!e.is_irredundant(f.all(), 2));

    // A maximal point off to the side of a full representation is not critical.
    let g = family(
        &["a", "b", "c", "d", "e"],
        &["a", "b", "c", "d", "e"],
        &["a"],
        &[
            ("ab", &["a", "b"]),
            ("ac", &["a", "c"]),
            ("ade", &["a", "d", "e"]),
        ],
    );
    let e = RepresentationEngine::new(&g, Caps::default()).unwrap();
    assert!(!e.is_critical(2));
    assert_eq!(e.critical_points_oracle().unwrap(), e.critical_points());
}

#[test]
fn single_member_is_critical() {
    let f = family(&["a", "b"], &["a", "b"], &["a"], &[("P", &["a"])]);
    let e = RepresentationEngine::new(&f, Caps::default()).unwrap();
    assert_eq!(e.critical_points(), ps(&[0]));
}

#[test]
fn unique_analysis_on_i1() {
    let f = i1();
    let e = RepresentationEngine::new(&f, Caps::default()).unwrap();
    let u = e.unique_minimal_analysis().unwrap();
    assert!(u.unique && u.cset_represents && u.exhaustive);
    assert_eq!(u.strongly_irredundant_rep, Some(ps(&[0, 1])));
    assert_eq!(u.strongly_irredundant_points, Some(ps(&[0, 1])));
}

#[test]
fn isolated_points_examples() {
    let f = i1();
    let e = RepresentationEngine::new(&f, Caps::default()).unwrap();
    assert_eq!(
        e.isolated_points(ps(&[0, 1]), TopologyKind::Spectral)
            .unwrap(),
        ps(&[0, 1])
    );
    assert_eq!(
        e.isolated_points(ps(&[2]), TopologyKind::Spectral).unwrap(),
        ps(&[2])
    );

    // On the 2-chain {B1 ⊂ B3} the spectral subspace opens are ∅, {B1}, {B1, B3}.
    let z = ps(&[0, 2]);
    assert_eq!(
        e.isolated_points(z, TopologyKind::Spectral).unwrap(),
        ps(&[0])
    );
    assert_eq!(
        e.isolated_points(z, TopologyKind::Inverse).unwrap(),
        ps(&[2])
    );
    assert_eq!(e.isolated_points(z, TopologyKind::Patch).unwrap(), z);
}

#[test]
fn isolated_but_redundant_outside_minimal_reps() {
    // Z = {ab, ac, ad} is a non-minimal antichain representation: every point
    // is isolated, yet each can be dropped.
    let f = family(
        &["a", "b", "c", "d"],
        &["a", "b", "c", "d"],
        &["a"],
        &[
            ("ab", &["a", "b"]),
            ("ac", &["a", "c"]),
            ("ad", &["a", "d"]),
        ],
    );
    let e = RepresentationEngine::new(&f, Caps::default()).unwrap();
    let z = f.all();
    assert!(!e.is_minimal_representation(z));
    for b in z {
        let flags = e.classify_member(z, b).unwrap();
        assert!(flags.isolated_spectral && flags.isolated_patch);
        assert!(!flags.irredundant);
    }
}

#[test]
fn report_lists_members_in_index_order() {
    let f = i1();
    let e = RepresentationEngine::new(&f, Caps::default()).unwrap();
    let r = e.report(ps(&[0, 1])).unwrap();
    assert_eq!(
        r.members.iter().map(|(i, _)| *i).collect::<Vec<_>>(),
        vec![0, 1]
    );
    assert!(r.flags(0).unwrap().critical);
    assert!(r.flags(2).is_none());
}

#[test]
fn antichain_enumeration_counts() {
    let f = i1();
    let e = RepresentationEngine::new(&f, Caps::default()).unwrap();
    let mut seen = Vec::new();
    e.for_each_antichain(f.all(), |a| seen.push(a));
    // ∅, {B1}, {B2}, {B3}, {B1, B2}
    assert_eq!(seen.len(), 5);
}
