use serde::Serialize;

use crate::lattice::{Elem, Lattice};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "verdict", rename_all = "snake_case")]
pub enum Semimodularity {
    Holds,
    /// For upper semimodularity: `x ∧ y ⋖ x` but not `y ⋖ x ∨ y`.
    /// Dually for lower.
    Violated { x: Elem, y: Elem },
}

impl Semimodularity {
    pub fn holds(&self) -> bool {
        matches!(self, Semimodularity::Holds)
    }
}

/// `x ∧ y ⋖ x` implies `y ⋖ x ∨ y`.
pub fn is_upper_semimodular(lattice: &Lattice) -> Semimodularity {
    for x in lattice.elements() {
        for y in lattice.elements() {
            if lattice.is_cover(lattice.meet(x, y), x) && !lattice.is_cover(y, lattice.join(x, y)) {
                return Semimodularity::Violated { x, y };
            }
        }
    }
    Semimodularity::Holds
}

/// `x ⋖ x ∨ y` implies `x ∧ y ⋖ y`.
pub fn is_lower_semimodular(lattice: &Lattice) -> Semimodularity {
    for x in lattice.elements() {
        for y in lattice.elements() {
            if lattice.is_cover(x, lattice.join(x, y)) && !lattice.is_cover(lattice.meet(x, y), y) {
                return Semimodularity::Violated { x, y };
            }
        }
    }
    Semimodularity::Holds
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cube_and_diamond_are_semimodular() {
        let cube: Vec<(Elem, Elem)> = (0..8usize)
            .flat_map(|s| (0..3).filter(move |i| s & (1 << i) == 0).map(move |i| (s, s | 1 << i)))
            .collect();
        let diamond = vec![(0, 1), (0, 2), (1, 3), (2, 3)];
        for covers in [cube, diamond] {
            let l = Lattice::from_covers(&covers).unwrap();
            assert!(is_upper_semimodular(&l).holds());
            assert!(is_lower_semimodular(&l).holds());
        }
    }

    #[test]
    fn pentagon_is_neither() {
        // N5: 0 < 1 < 2 < 4, 0 < 3 < 4
        let l = Lattice::from_covers(&[(0, 1), (1, 2), (2, 4), (0, 3), (3, 4)]).unwrap();
        assert_eq!(is_upper_semimodular(&l), Semimodularity::Violated { x: 3, y: 1 });
        assert!(!is_lower_semimodular(&l).holds());
    }
}
