//! Structural properties of lattices, each decided with a certificate or a
//! counterexample that can be replayed independently.

mod connectivity;
mod dismantle;
mod planar;
mod semimodular;

pub use connectivity::{
    is_interval_connected, is_rank_connected, IntervalConnectivity, RankConnectivity,
    DEFAULT_MIN_GAP,
};
pub use dismantle::{
    dismantling_sequence, find_corner, CornerWitness, Dismantling, DismantlingSequence,
    NotDoublyIrreducible,
};
pub use planar::{is_planar, is_planar_with_limit, ConjugateOrder, Planarity, DEFAULT_PLANAR_LIMIT};
pub use semimodular::{is_lower_semimodular, is_upper_semimodular, Semimodularity};

use crate::lattice::{Elem, Lattice};

/// Elements covering exactly one element.
pub fn join_irreducibles(lattice: &Lattice) -> Vec<Elem> {
    lattice.elements().filter(|&x| lattice.lower_covers(x).len() == 1).collect()
}

/// Elements covered by exactly one element.
pub fn meet_irreducibles(lattice: &Lattice) -> Vec<Elem> {
    lattice.elements().filter(|&x| lattice.upper_covers(x).len() == 1).collect()
}

/// Elements with exactly one lower and one upper cover. Bottom and top never
/// qualify.
pub fn doubly_irreducibles(lattice: &Lattice) -> Vec<Elem> {
    lattice
        .elements()
        .filter(|&x| lattice.lower_covers(x).len() == 1 && lattice.upper_covers(x).len() == 1)
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn diamond_atoms_are_doubly_irreducible() {
        let l = Lattice::from_covers(&[(0, 1), (0, 2), (1, 3), (2, 3)]).unwrap();
        assert_eq!(doubly_irreducibles(&l), vec![1, 2]);
    }

    #[test]
    fn cube_has_no_doubly_irreducible() {
        // subsets of {0,1,2} as bitmasks
        let covers: Vec<(Elem, Elem)> = (0..8usize)
            .flat_map(|s| (0..3).filter(move |i| s & (1 << i) == 0).map(move |i| (s, s | 1 << i)))
            .collect();
        let l = Lattice::from_covers(&covers).unwrap();
        assert!(doubly_irreducibles(&l).is_empty());
        assert_eq!(join_irreducibles(&l), vec![1, 2, 4]);
        assert_eq!(meet_irreducibles(&l), vec![3, 5, 6]);
    }

    #[test]
    fn chain_join_irreducibles() {
        let l = Lattice::from_covers(&[(0, 1), (1, 2), (2, 3)]).unwrap();
        assert_eq!(join_irreducibles(&l), vec![1, 2, 3]);
        assert_eq!(doubly_irreducibles(&l), vec![1, 2]);
    }
}
