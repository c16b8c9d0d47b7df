//! Rank functions.
//!
//! A lattice is ranked when every maximal chain from bottom to top has the
//! same length. This forces a rank on every element: if two maximal chains
//! from the bottom to some `x` had different lengths, splicing each with one
//! fixed maximal chain from `x` to the top would give two maximal
//! bottom-to-top chains of different lengths. So "ranked" is equivalent to
//! the existence of `r` with `r(bottom) = 0` and `r(b) = r(a) + 1` for every
//! cover `(a, b)`, which is checked in one pass over the covers.

use serde::Serialize;

use crate::lattice::{Elem, Lattice};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RankFunction {
    ranks: Vec<usize>,
}

impl RankFunction {
    pub fn rank(&self, x: Elem) -> usize {
        self.ranks[x]
    }

    pub fn ranks(&self) -> &[usize] {
        &self.ranks
    }

    /// Rank of the top element.
    pub fn length(&self) -> usize {
        self.ranks.iter().copied().max().unwrap_or(0)
    }

    /// Level sets `R_0, R_1, ...`, each sorted by id.
    pub fn levels(&self) -> Vec<Vec<Elem>> {
        let mut levels = vec![Vec::new(); self.length() + 1];
        for (x, &r) in self.ranks.iter().enumerate() {
            levels[r].push(x);
        }
        levels
    }
}

/// Two maximal bottom-to-top chains of different lengths.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct NotRanked {
    pub shorter: Vec<Elem>,
    pub longer: Vec<Elem>,
}

impl std::fmt::Display for NotRanked {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "not ranked: maximal chains {:?} (length {}) and {:?} (length {})",
            self.shorter,
            self.shorter.len().saturating_sub(1),
            self.longer,
            self.longer.len().saturating_sub(1)
        )
    }
}

impl std::error::Error for NotRanked {}

pub(crate) fn compute(lattice: &Lattice, topo: &[Elem]) -> Result<RankFunction, NotRanked> {
    let mut ranks = vec![0usize; lattice.len()];
    for &b in topo {
        let lower = lattice.lower_covers(b);
        let Some(&first) = lower.first() else { continue };
        ranks[b] = ranks[first] + 1;
        if let Some(&other) = lower.iter().find(|&&a| ranks[a] != ranks[first]) {
            // Everything below `b` is consistently ranked, so descending via
            // first lower covers from `a` gives a chain of length `ranks[a]`.
            let above = chain_up(lattice, b);
            let through = |a: Elem| {
                let mut chain = chain_down(lattice, a);
                chain.extend_from_slice(&above);
                chain
            };
            let (short, long) = if ranks[first] < ranks[other] {
                (first, other)
            } else {
                (other, first)
            };
            return Err(NotRanked { shorter: through(short), longer: through(long) });
        }
    }
    Ok(RankFunction { ranks })
}

/// Maximal chain from the bottom up to `x`, inclusive.
fn chain_down(lattice: &Lattice, x: Elem) -> Vec<Elem> {
    let mut chain = vec![x];
    let mut current = x;
    while let Some(&a) = lattice.lower_covers(current).first() {
        chain.push(a);
        current = a;
    }
    chain.reverse();
    chain
}

/// Maximal chain from `x` up to the top, inclusive.
fn chain_up(lattice: &Lattice, x: Elem) -> Vec<Elem> {
    let mut chain = vec![x];
    let mut current = x;
    while let Some(&b) = lattice.upper_covers(current).first() {
        chain.push(b);
        current = b;
    }
    chain
}

#[cfg(test)]
mod tests {
    use super::*;

    /// All maximal chains from bottom to top, by brute-force DFS.
    fn maximal_chains(l: &Lattice) -> Vec<Vec<Elem>> {
        fn walk(l: &Lattice, path: &mut Vec<Elem>, out: &mut Vec<Vec<Elem>>) {
            let last = *path.last().unwrap();
            if last == l.top() {
                out.push(path.clone());
                return;
            }
            for &b in l.upper_covers(last) {
                path.push(b);
                walk(l, path, out);
                path.pop();
            }
        }
        let mut out = Vec::new();
        walk(l, &mut vec![l.bottom()], &mut out);
        out
    }

    #[test]
    fn chain_is_identity() {
        let l = Lattice::from_covers(&[(0, 1), (1, 2), (2, 3)]).unwrap();
        assert_eq!(l.rank_function().unwrap().ranks(), &[0, 1, 2, 3]);
    }

    #[test]
    fn subdivided_hexagon_is_not_ranked() {
        let l = Lattice::from_covers(&[(0, 1), (1, 2), (2, 4), (0, 3), (3, 4)]).unwrap();
        let witness = l.rank_function().unwrap_err();
        assert_eq!(witness.shorter, vec![0, 3, 4]);
        assert_eq!(witness.longer, vec![0, 1, 2, 4]);
        for chain in [&witness.shorter, &witness.longer] {
            assert_eq!(chain.first(), Some(&l.bottom()));
            assert_eq!(chain.last(), Some(&l.top()));
            assert!(chain.windows(2).all(|w| l.is_cover(w[0], w[1])));
        }
    }

    #[test]
    fn levels_partition_elements() {
        let l = Lattice::from_covers(&[(0, 1), (0, 2), (1, 3), (2, 3)]).unwrap();
        let r = l.rank_function().unwrap();
        assert_eq!(r.levels(), vec![vec![0], vec![1, 2], vec![3]]);
        assert_eq!(r.length(), 2);
    }

    #[test]
    fn rank_agrees_with_chain_lengths() {
        // ranked iff all maximal chains share a length, on a handful of shapes
        let shapes: &[&[(Elem, Elem)]] = &[
            &[(0, 1)],
            &[(0, 1), (0, 2), (1, 3), (2, 3)],
            &[(0, 1), (1, 2), (2, 4), (0, 3), (3, 4)],
            &[(0, 1), (0, 2), (0, 3), (1, 4), (2, 4), (3, 5), (4, 6), (5, 6)],
            &[(0, 1), (0, 2), (1, 3), (2, 4), (3, 5), (4, 5)],
        ];
        for covers in shapes {
            let l = Lattice::from_covers(covers).unwrap();
            let chains = maximal_chains(&l);
            let same = chains.windows(2).all(|w| w[0].len() == w[1].len());
            assert_eq!(l.is_ranked(), same, "{covers:?}");
            if let Ok(r) = l.rank_function() {
                for &(a, b) in l.covers() {
                    assert_eq!(r.rank(b), r.rank(a) + 1);
                }
                assert_eq!(r.rank(l.bottom()), 0);
            }
        }
    }
}
