use fixedbitset::FixedBitSet;
use serde::Serialize;
use thiserror::Error;

use crate::error::ReplayError;
use crate::interval::delete_elements;
use crate::lattice::{Elem, Lattice};

/// Removal order `x_1, x_2, ...` of every element except bottom and top.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DismantlingSequence {
    pub order: Vec<Elem>,
}

impl DismantlingSequence {
    /// Replays the sequence from scratch: after deleting `x_1..x_k`, the rest
    /// must be a sublattice in which `x_{k+1}` is doubly irreducible, and at
    /// the end only bottom and top may remain.
    pub fn verify(&self, lattice: &Lattice) -> Result<(), ReplayError> {
        let mut removed: Vec<Elem> = Vec::with_capacity(self.order.len());
        for &x in &self.order {
            if x >= lattice.len() || x == lattice.bottom() || x == lattice.top() {
                return Err(ReplayError(format!("{x} cannot be dismantled")));
            }
            if removed.contains(&x) {
                return Err(ReplayError(format!("{x} is removed twice")));
            }
            let state = delete_elements(lattice, &removed);
            if !state.is_sublattice {
                return Err(ReplayError(format!("removing {removed:?} leaves no sublattice")));
            }
            let lower = state.covers.iter().filter(|&&(_, b)| b == x).count();
            let upper = state.covers.iter().filter(|&&(a, _)| a == x).count();
            if lower != 1 || upper != 1 {
                return Err(ReplayError(format!(
                    "{x} has {lower} lower and {upper} upper covers after removing {removed:?}"
                )));
            }
            removed.push(x);
        }
        let left = lattice.len() - removed.len();
        if left > 2 {
            return Err(ReplayError(format!("{left} elements remain")));
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "verdict", rename_all = "snake_case")]
pub enum Dismantling {
    Sequence(DismantlingSequence),
    /// A sublattice with more than two elements and no doubly irreducible
    /// element.
    Stuck { members: Vec<Elem> },
}

impl Dismantling {
    pub fn holds(&self) -> bool {
        matches!(self, Dismantling::Sequence(_))
    }

    pub fn sequence(&self) -> Option<&DismantlingSequence> {
        match self {
            Dismantling::Sequence(seq) => Some(seq),
            Dismantling::Stuck { .. } => None,
        }
    }
}

/// Greedily deletes the smallest doubly irreducible element until only
/// bottom and top are left.
///
/// Greedy cannot dead-end on a dismantlable lattice: deleting a doubly
/// irreducible element leaves a sublattice, every sublattice of a
/// dismantlable lattice is dismantlable, and a nontrivial dismantlable
/// lattice always has a doubly irreducible element. So getting stuck proves
/// the stuck sublattice, and hence the input, is not dismantlable.
pub fn dismantling_sequence(lattice: &Lattice) -> Dismantling {
    let n = lattice.len();
    let mut alive = FixedBitSet::with_capacity(n);
    alive.insert_range(..);
    let mut upper: Vec<Vec<Elem>> = lattice.elements().map(|x| lattice.upper_covers(x).to_vec()).collect();
    let mut lower: Vec<Vec<Elem>> = lattice.elements().map(|x| lattice.lower_covers(x).to_vec()).collect();
    let mut order = Vec::new();

    while alive.count_ones(..) > 2 {
        let Some(x) = alive.ones().find(|&x| lower[x].len() == 1 && upper[x].len() == 1) else {
            return Dismantling::Stuck { members: alive.ones().collect() };
        };
        let (z, y) = (lower[x][0], upper[x][0]);
        alive.set(x, false);
        upper[z].retain(|&e| e != x);
        lower[y].retain(|&e| e != x);
        let mut between = lattice.up_set(z).clone();
        between.intersect_with(lattice.down_set(y));
        between.intersect_with(&alive);
        if between.count_ones(..) == 2 {
            upper[z].push(y);
            lower[y].push(z);
        }
        order.push(x);
    }
    Dismantling::Sequence(DismantlingSequence { order })
}

/// `x` doubly irreducible with `z ⋖ x ⋖ y`, and another `w` with
/// `z ⋖ w ⋖ y`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct CornerWitness {
    pub x: Elem,
    pub w: Elem,
    pub z: Elem,
    pub y: Elem,
}

impl CornerWitness {
    pub fn verify(&self, lattice: &Lattice) -> Result<(), ReplayError> {
        let CornerWitness { x, w, z, y } = *self;
        if x == w {
            return Err(ReplayError(format!("corner of {x} is itself")));
        }
        for (a, b) in [(z, x), (x, y), (z, w), (w, y)] {
            if !lattice.is_cover(a, b) {
                return Err(ReplayError(format!("({a}, {b}) is not a cover")));
            }
        }
        if lattice.lower_covers(x).len() != 1 || lattice.upper_covers(x).len() != 1 {
            return Err(ReplayError(format!("{x} is not doubly irreducible")));
        }
        Ok(())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Error)]
#[error("element {0} is not doubly irreducible")]
pub struct NotDoublyIrreducible(pub Elem);

/// Smallest-id corner of a doubly irreducible `x`, if any.
pub fn find_corner(
    lattice: &Lattice,
    x: Elem,
) -> Result<Option<CornerWitness>, NotDoublyIrreducible> {
    let (&[z], &[y]) = (lattice.lower_covers(x), lattice.upper_covers(x)) else {
        return Err(NotDoublyIrreducible(x));
    };
    Ok(lattice
        .upper_covers(z)
        .iter()
        .copied()
        .find(|&w| w != x && lattice.is_cover(w, y))
        .map(|w| CornerWitness { x, w, z, y }))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cube() -> Lattice {
        let covers: Vec<(Elem, Elem)> = (0..8usize)
            .flat_map(|s| (0..3).filter(move |i| s & (1 << i) == 0).map(move |i| (s, s | 1 << i)))
            .collect();
        Lattice::from_covers(&covers).unwrap()
    }

    #[test]
    fn cube_is_stuck_immediately() {
        let l = cube();
        assert_eq!(
            dismantling_sequence(&l),
            Dismantling::Stuck { members: (0..8).collect() }
        );
    }

    #[test]
    fn chain_dismantles_middle() {
        let l = Lattice::from_covers(&[(0, 1), (1, 2), (2, 3)]).unwrap();
        let d = dismantling_sequence(&l);
        let seq = d.sequence().unwrap();
        assert_eq!(seq.order, vec![1, 2]);
        seq.verify(&l).unwrap();
    }

    #[test]
    fn trivial_lattices() {
        for covers in [&[][..], &[(0, 1)][..]] {
            let l = Lattice::from_covers(covers).unwrap();
            let d = dismantling_sequence(&l);
            assert_eq!(d.sequence().unwrap().order, Vec::<Elem>::new());
        }
    }

    #[test]
    fn bad_sequences_rejected() {
        let l = Lattice::from_covers(&[(0, 1), (0, 2), (1, 3), (2, 3)]).unwrap();
        assert!(DismantlingSequence { order: vec![1] }.verify(&l).is_err());
        assert!(DismantlingSequence { order: vec![1, 1] }.verify(&l).is_err());
        assert!(DismantlingSequence { order: vec![0, 1] }.verify(&l).is_err());
        DismantlingSequence { order: vec![2, 1] }.verify(&l).unwrap();
    }

    #[test]
    fn corners() {
        let diamond = Lattice::from_covers(&[(0, 1), (0, 2), (1, 3), (2, 3)]).unwrap();
        let c = find_corner(&diamond, 1).unwrap().unwrap();
        assert_eq!(c, CornerWitness { x: 1, w: 2, z: 0, y: 3 });
        c.verify(&diamond).unwrap();
        assert_eq!(find_corner(&diamond, 0), Err(NotDoublyIrreducible(0)));

        let chain = Lattice::from_covers(&[(0, 1), (1, 2)]).unwrap();
        assert_eq!(find_corner(&chain, 1), Ok(None));
    }
}
