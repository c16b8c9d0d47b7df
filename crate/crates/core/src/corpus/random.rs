use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::lattice::{Elem, Lattice};
use crate::predicates::DismantlingSequence;

/// Chance of inserting across a two-step path rather than into a cover.
/// Two-step insertions keep a ranked lattice ranked.
const SQUARE_BIAS: f64 = 0.85;

/// Grows a lattice from the 2-chain (bottom `0`, top `1`) by inserting
/// elements `2, 3, ...` as doubly irreducibles, either splitting a cover
/// `u ⋖ v` or closing a path `u ⋖ w ⋖ v` with a second middle element.
/// Deleting the elements in reverse insertion order dismantles the result.
pub fn random_dismantlable(n: usize, seed: u64) -> (Lattice, DismantlingSequence) {
    assert!(n >= 2, "the smallest generated lattice is the 2-chain");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut covers: Vec<(Elem, Elem)> = vec![(0, 1)];

    for x in 2..n {
        let squares: Vec<(Elem, Elem)> = two_step_pairs(x, &covers);
        let (u, v) = if !squares.is_empty() && rng.random_bool(SQUARE_BIAS) {
            squares[rng.random_range(0..squares.len())]
        } else {
            let (u, v) = covers[rng.random_range(0..covers.len())];
            covers.retain(|&c| c != (u, v));
            (u, v)
        };
        covers.push((u, x));
        covers.push((x, v));
    }

    let lattice = Lattice::new(n, &covers).expect("doubly irreducible insertion keeps a lattice");
    let order = (2..n).rev().collect();
    (lattice, DismantlingSequence { order })
}

/// Pairs `(u, v)` joined by a path of two covers, without duplicates.
fn two_step_pairs(n: usize, covers: &[(Elem, Elem)]) -> Vec<(Elem, Elem)> {
    let mut upper = vec![Vec::new(); n];
    for &(a, b) in covers {
        upper[a].push(b);
    }
    let mut pairs: Vec<(Elem, Elem)> = covers
        .iter()
        .flat_map(|&(u, w)| upper[w].iter().map(move |&v| (u, v)))
        .collect();
    pairs.sort_unstable();
    pairs.dedup();
    pairs
}
