//! EL-labelings of rank-connected dismantlable lattices, built by induction:
//!
//! * a chain gets a constant labeling;
//! * if some rank strictly between bottom and top has a single element `x`,
//!   label `[0, x]` and `[x, 1]` separately and shift the upper block so all
//!   of its labels exceed all labels below `x`;
//! * a rank-2 lattice with atoms `a_1 < a_2 < ...` gets `f(0, a_i) = i` and
//!   `f(a_i, 1) = 1`;
//! * otherwise some doubly irreducible `x` has a corner `w`. Label `L - x`
//!   recursively and extend to the two covers through `x`.
//!
//! The extension step is a search checked by the verifier. Only intervals
//! containing `x` need rechecking: because `x` has a corner, `L - x` has no
//! cover that `L` lacks, so every other interval and its covers are shared
//! with `L - x`.

use std::collections::HashSet;

use super::{first_violation, Conditions, EdgeLabeling, Label, ShellingError};
use crate::interval::{delete_elements, Embedded};
use crate::lattice::Lattice;
use crate::predicates::{
    dismantling_sequence, doubly_irreducibles, find_corner, is_rank_connected, CornerWitness,
};

pub fn construct_el(lattice: &Lattice) -> Result<EdgeLabeling, ShellingError> {
    let connectivity = is_rank_connected(lattice);
    if !connectivity.holds() {
        return Err(ShellingError::PreconditionFailed(format!(
            "lattice is not rank-connected: {connectivity:?}"
        )));
    }
    if !dismantling_sequence(lattice).holds() {
        return Err(ShellingError::PreconditionFailed("lattice is not dismantlable".into()));
    }
    let labels = label(lattice)?.normalized();
    match first_violation(lattice, &labels, Conditions::Full, None) {
        None => Ok(labels),
        Some(violation) => Err(ShellingError::ConstructionRejected(Box::new(violation))),
    }
}

fn label(lattice: &Lattice) -> Result<EdgeLabeling, ShellingError> {
    if lattice.is_chain() {
        return Ok(lattice.covers().iter().map(|&c| (c, Label::from_integer(0))).collect());
    }
    let ranks = lattice.rank_function()?;
    let levels = ranks.levels();
    let length = ranks.length();

    if let Some(x) = levels[1..length].iter().find(|level| level.len() == 1).map(|l| l[0]) {
        let below = lattice.interval(lattice.bottom(), x)?.to_lattice()?;
        let above = lattice.interval(x, lattice.top())?.to_lattice()?;
        let lower = lift(&below, &label(&below.lattice)?);
        let upper = lift(&above, &label(&above.lattice)?);
        let shift = lower.max_label().unwrap() - upper.min_label().unwrap() + 1;
        return Ok(lower.iter().chain(upper.map_labels(|v| v + shift).iter()).collect());
    }

    if length == 2 {
        let top = lattice.top();
        let mut labels = EdgeLabeling::new();
        for (i, &atom) in lattice.upper_covers(lattice.bottom()).iter().enumerate() {
            labels.insert(lattice.bottom(), atom, Label::from_integer(i as i64 + 1));
            labels.insert(atom, top, Label::from_integer(1));
        }
        return Ok(labels);
    }

    let corner = doubly_irreducibles(lattice)
        .into_iter()
        .find_map(|x| find_corner(lattice, x).ok().flatten())
        .ok_or_else(|| {
            ShellingError::PreconditionFailed(
                "no doubly irreducible element has a corner".into(),
            )
        })?;
    let rest = delete_elements(lattice, &[corner.x]).to_lattice()?;
    let rest_labels = lift(&rest, &label(&rest.lattice)?);
    extend(lattice, &rest_labels, corner)
}

/// Moves a labeling of an embedded lattice to base ids.
fn lift(embedded: &Embedded, labels: &EdgeLabeling) -> EdgeLabeling {
    labels
        .iter()
        .map(|((a, b), v)| ((embedded.to_base[a], embedded.to_base[b]), v))
        .collect()
}

/// Chooses labels for `(z, x)` and `(x, y)`. Candidates near the labels of
/// `(z, w)` and `(w, y)` come first, then every placement of the two new
/// labels relative to the existing ones.
fn extend(
    lattice: &Lattice,
    rest: &EdgeLabeling,
    corner: CornerWitness,
) -> Result<EdgeLabeling, ShellingError> {
    let CornerWitness { x, w, z, y } = corner;
    let seed_low = rest.get(z, w).expect("corner cover is labeled");
    let seed_high = rest.get(w, y).expect("corner cover is labeled");

    let mut values: Vec<Label> = rest.iter().map(|(_, v)| v).collect();
    values.sort_unstable();
    values.dedup();
    let min_gap = values.windows(2).map(|p| p[1] - p[0]).min().unwrap_or(Label::from_integer(1));
    let epsilon = min_gap / 4;

    let mut candidates: Vec<(Label, Label)> = Vec::new();
    let mut steps: Vec<(i64, i64)> =
        (-2..=2).flat_map(|a| (-2..=2).map(move |b| (a, b))).collect();
    steps.sort_by_key(|&(a, b)| (a.abs() + b.abs(), a, b));
    for (a, b) in steps {
        candidates.push((seed_low + epsilon * a, seed_high + epsilon * b));
    }

    let (lowest, highest) = (values[0], *values.last().unwrap());
    candidates.push((highest + 1, lowest - 1));

    let mut points = vec![lowest - 2, lowest - 1, highest + 1, highest + 2];
    for pair in values.windows(2) {
        let third = (pair[1] - pair[0]) / 3;
        points.extend([pair[0], pair[0] + third, pair[0] + third * 2]);
    }
    points.push(highest);
    points.sort_unstable();
    for &a in &points {
        for &b in &points {
            candidates.push((a, b));
        }
    }

    let mut tried = HashSet::new();
    for (low, high) in candidates {
        if !tried.insert((low, high)) {
            continue;
        }
        let mut labels = rest.clone();
        labels.insert(z, x, low);
        labels.insert(x, y, high);
        if first_violation(lattice, &labels, Conditions::Full, Some(x)).is_none() {
            return Ok(labels);
        }
    }
    Err(ShellingError::ExtensionSearchExhausted { element: x })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::Elem;
    use crate::shelling::verify_el;

    fn int(v: i64) -> Label {
        Label::from_integer(v)
    }

    #[test]
    fn chain_gets_constant_labels() {
        let l = Lattice::from_covers(&[(0, 1), (1, 2), (2, 3)]).unwrap();
        let f = construct_el(&l).unwrap();
        assert_eq!(f.len(), 3);
        assert!(f.iter().all(|(_, v)| v == int(1)));
    }

    #[test]
    fn m3_base_case() {
        let l = Lattice::from_covers(&[(0, 1), (0, 2), (0, 3), (1, 4), (2, 4), (3, 4)]).unwrap();
        let f = construct_el(&l).unwrap();
        for i in 1..=3 {
            assert_eq!(f.get(0, i), Some(int(i as i64)));
            assert_eq!(f.get(i, 4), Some(int(1)));
        }
    }

    #[test]
    fn stacked_diamonds_split_at_waist() {
        // diamond 0<1,2<3 then diamond 3<4,5<6
        let l = Lattice::from_covers(&[
            (0, 1),
            (0, 2),
            (1, 3),
            (2, 3),
            (3, 4),
            (3, 5),
            (4, 6),
            (5, 6),
        ])
        .unwrap();
        let f = construct_el(&l).unwrap();
        assert!(verify_el(&l, &f).unwrap().ok);
        let below_max = [(0, 1), (0, 2), (1, 3), (2, 3)].iter().map(|&(a, b)| f.get(a, b).unwrap()).max();
        let above_min = [(3, 4), (3, 5), (4, 6), (5, 6)].iter().map(|&(a, b)| f.get(a, b).unwrap()).min();
        assert!(below_max < above_min);
    }

    #[test]
    fn corner_removal_path() {
        // 0 < 1,2 ; 1 < 3,4 ; 2 < 4 ; 3,4 < 5. Element 2 is doubly
        // irreducible with corner 1 between 0 and 4.
        let l = Lattice::from_covers(&[(0, 1), (0, 2), (1, 3), (1, 4), (2, 4), (3, 5), (4, 5)])
            .unwrap();
        assert_eq!(
            find_corner(&l, 2).unwrap(),
            Some(CornerWitness { x: 2, w: 1, z: 0, y: 4 })
        );
        let f = construct_el(&l).unwrap();
        assert!(verify_el(&l, &f).unwrap().ok);
    }

    #[test]
    fn preconditions() {
        let cube: Vec<(Elem, Elem)> = (0..8usize)
            .flat_map(|s| (0..3).filter(move |i| s & (1 << i) == 0).map(move |i| (s, s | 1 << i)))
            .collect();
        let l = Lattice::from_covers(&cube).unwrap();
        assert!(matches!(construct_el(&l), Err(ShellingError::PreconditionFailed(_))));

        let parallel = Lattice::from_covers(&[(0, 1), (1, 2), (2, 5), (0, 3), (3, 4), (4, 5)]).unwrap();
        assert!(matches!(construct_el(&parallel), Err(ShellingError::PreconditionFailed(_))));
    }
}
