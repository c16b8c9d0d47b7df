use lattix::admissibility::join_irreducibles;
use lattix::corpus::{fixture, FixtureName, Property};
use lattix::predicates::{doubly_irreducibles, is_rank_connected};
use lattix::{canonical_form, delete_elements, hasse_subgraph, Lattice};

fn f1b() -> Lattice {
    fixture(FixtureName::F1b).lattice
}

#[test]
fn every_claim_holds() {
    for name in FixtureName::ALL {
        let f = fixture(name);
        for &(property, expected) in &f.claims {
            assert_eq!(property.evaluate(&f.lattice), Ok(expected), "{name} {property:?}");
        }
    }
}

#[test]
fn sizes() {
    let sizes: Vec<(usize, usize)> = FixtureName::ALL
        .iter()
        .map(|&n| {
            let l = fixture(n).lattice;
            (l.len(), l.covers().len())
        })
        .collect();
    assert_eq!(sizes, vec![(16, 26), (12, 18), (12, 17), (9, 13)]);
}

#[test]
fn f1b_ranks_by_layer() {
    let ranks = f1b().rank_function().unwrap();
    assert_eq!(ranks.ranks(), &[0, 1, 1, 2, 2, 2, 2, 2, 3, 3, 3, 4]);
    assert_eq!(ranks.length(), 4);
}

#[test]
fn f1b_joins_match_brute_force() {
    let l = f1b();
    for (x, y) in [(1, 10), (3, 10)] {
        let upper: Vec<usize> = l.elements().filter(|&u| l.leq(x, u) && l.leq(y, u)).collect();
        let least = upper.iter().copied().find(|&m| upper.iter().all(|&u| l.leq(m, u))).unwrap();
        assert_eq!(least, 11);
        assert_eq!(l.join(x, y), 11);
    }
    for x in l.elements() {
        assert_eq!(l.meet(l.bottom(), x), l.bottom());
    }
}

#[test]
fn f1b_structure() {
    let l = f1b();
    assert_eq!(l.interval(0, 5).unwrap().members(), &[0, 1, 2, 5]);
    assert_eq!(join_irreducibles(&l), vec![1, 2, 3, 4, 6, 7]);
    assert_eq!(doubly_irreducibles(&l), vec![3, 7]);

    let without_5 = delete_elements(&l, &[5]);
    assert!(!without_5.is_sublattice);

    let graph = hasse_subgraph(&l, &[1, 2, 3, 4, 5, 6, 7]);
    assert!(graph.is_connected());
    assert_eq!(graph.edges, vec![(1, 3), (1, 4), (1, 5), (2, 5), (2, 6), (2, 7)]);
    assert!(is_rank_connected(&l).holds());
}

#[test]
fn f1b_mirror_has_same_canonical_form() {
    let l = f1b();
    // left-right reflection: 1<->2, 3<->7, 4<->6, 8<->10
    let mirror = [0, 2, 1, 7, 6, 5, 4, 3, 10, 9, 8, 11];
    let reflected = l.relabel(&mirror).unwrap();
    assert_eq!(reflected, l, "the reflection is an automorphism");
    let shuffled = l.relabel(&[11, 3, 0, 9, 1, 10, 2, 8, 4, 5, 6, 7]).unwrap();
    assert_ne!(shuffled, l);
    assert_eq!(canonical_form(&shuffled), canonical_form(&l));
}

#[test]
fn f1a_witnesses() {
    let l = fixture(FixtureName::F1a).lattice;
    assert!(Property::Dismantlable.evaluate(&l).is_ok());
    assert!(l.is_ranked());
    assert_eq!(l.rank_function().unwrap().length(), 4);
}
