//! Finite lattices given by their cover relation.
//!
//! A [`Lattice`] is validated once at construction and immutable afterwards.
//! The order relation is cached as per-element up-sets and down-sets, and
//! meets and joins are tabulated, so every query after construction is a
//! table lookup or a bitset operation.

use std::collections::BTreeSet;
use std::fmt;

use fixedbitset::FixedBitSet;

use crate::error::{BoundKind, LatticeError};
use crate::rank::{self, NotRanked, RankFunction};

/// Dense element id, `0..n`.
pub type Elem = usize;

#[derive(Clone)]
pub struct Lattice {
    n: usize,
    covers: Vec<(Elem, Elem)>,
    upper: Vec<Vec<Elem>>,
    lower: Vec<Vec<Elem>>,
    up: Vec<FixedBitSet>,
    down: Vec<FixedBitSet>,
    meet: Vec<Elem>,
    join: Vec<Elem>,
    bottom: Elem,
    top: Elem,
    heights: Vec<usize>,
    ranking: Result<RankFunction, NotRanked>,
}

impl Lattice {
    /// Builds a lattice from an irredundant cover relation, inferring `n` as
    /// one past the largest id. An empty list gives the one-element lattice.
    pub fn from_covers(covers: &[(Elem, Elem)]) -> Result<Self, LatticeError> {
        let n = covers
            .iter()
            .map(|&(a, b)| a.max(b) + 1)
            .max()
            .unwrap_or(1);
        Self::new(n, covers)
    }

    /// Builds a lattice on `0..n`. Pair `(a, b)` means `b` covers `a`.
    pub fn new(n: usize, covers: &[(Elem, Elem)]) -> Result<Self, LatticeError> {
        if n == 0 {
            return Err(LatticeError::Empty);
        }
        let mut seen = BTreeSet::new();
        for &(a, b) in covers {
            for e in [a, b] {
                if e >= n {
                    return Err(LatticeError::ElementOutOfRange { element: e, n });
                }
            }
            if a == b {
                return Err(LatticeError::SelfLoop(a));
            }
            if !seen.insert((a, b)) {
                return Err(LatticeError::DuplicateCover(a, b));
            }
        }
        let covers: Vec<(Elem, Elem)> = seen.into_iter().collect();

        let mut upper = vec![Vec::new(); n];
        let mut lower = vec![Vec::new(); n];
        for &(a, b) in &covers {
            upper[a].push(b);
            lower[b].push(a);
        }

        let topo = topological_order(n, &upper, &lower)?;

        let mut down = vec![FixedBitSet::with_capacity(n); n];
        for &b in &topo {
            let mut set = FixedBitSet::with_capacity(n);
            set.insert(b);
            for &a in &lower[b] {
                set.union_with(&down[a]);
            }
            down[b] = set;
        }

        for &(a, b) in &covers {
            if lower[b].iter().any(|&c| c != a && down[c].contains(a)) {
                return Err(LatticeError::RedundantCover(a, b));
            }
        }

        let mut up = vec![FixedBitSet::with_capacity(n); n];
        for (b, set) in down.iter().enumerate() {
            for a in set.ones() {
                up[a].insert(b);
            }
        }

        // Pairs with two or more extremal bounds are reported first, in
        // lexicographic pair order. Pairs with no bound at all only arise when
        // there are several minima or maxima, which is reported below.
        let unset = usize::MAX;
        let mut meet = vec![unset; n * n];
        let mut join = vec![unset; n * n];
        for x in 0..n {
            for y in x..n {
                let mut common_up = up[x].clone();
                common_up.intersect_with(&up[y]);
                let minimal: Vec<Elem> = common_up
                    .ones()
                    .filter(|&u| down[u].intersection(&common_up).count() == 1)
                    .collect();
                if minimal.len() >= 2 {
                    return Err(LatticeError::NotALattice {
                        x,
                        y,
                        kind: BoundKind::Upper,
                        bounds: minimal,
                    });
                }
                if let Some(&j) = minimal.first() {
                    join[x * n + y] = j;
                    join[y * n + x] = j;
                }

                let mut common_down = down[x].clone();
                common_down.intersect_with(&down[y]);
                let maximal: Vec<Elem> = common_down
                    .ones()
                    .filter(|&l| up[l].intersection(&common_down).count() == 1)
                    .collect();
                if maximal.len() >= 2 {
                    return Err(LatticeError::NotALattice {
                        x,
                        y,
                        kind: BoundKind::Lower,
                        bounds: maximal,
                    });
                }
                if let Some(&m) = maximal.first() {
                    meet[x * n + y] = m;
                    meet[y * n + x] = m;
                }
            }
        }

        let minima: Vec<Elem> = (0..n).filter(|&e| lower[e].is_empty()).collect();
        if minima.len() > 1 {
            return Err(LatticeError::MultipleMinima(minima));
        }
        let maxima: Vec<Elem> = (0..n).filter(|&e| upper[e].is_empty()).collect();
        if maxima.len() > 1 {
            return Err(LatticeError::MultipleMaxima(maxima));
        }
        debug_assert!(meet.iter().chain(join.iter()).all(|&v| v != unset));

        for list in upper.iter_mut().chain(lower.iter_mut()) {
            list.sort_unstable();
        }

        let mut heights = vec![0usize; n];
        for &b in &topo {
            heights[b] = lower[b].iter().map(|&a| heights[a] + 1).max().unwrap_or(0);
        }

        let mut lattice = Lattice {
            n,
            covers,
            upper,
            lower,
            up,
            down,
            meet,
            join,
            bottom: minima[0],
            top: maxima[0],
            heights,
            ranking: Err(NotRanked::default()),
        };
        lattice.ranking = rank::compute(&lattice, &topo);
        Ok(lattice)
    }

    pub fn len(&self) -> usize {
        self.n
    }

    /// Always false; kept for clippy's `len_without_is_empty`.
    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn elements(&self) -> std::ops::Range<Elem> {
        0..self.n
    }

    pub fn bottom(&self) -> Elem {
        self.bottom
    }

    pub fn top(&self) -> Elem {
        self.top
    }

    /// Cover pairs `(a, b)` with `b` covering `a`, sorted.
    pub fn covers(&self) -> &[(Elem, Elem)] {
        &self.covers
    }

    pub fn upper_covers(&self, x: Elem) -> &[Elem] {
        &self.upper[x]
    }

    pub fn lower_covers(&self, x: Elem) -> &[Elem] {
        &self.lower[x]
    }

    pub fn is_cover(&self, a: Elem, b: Elem) -> bool {
        self.upper[a].binary_search(&b).is_ok()
    }

    pub fn leq(&self, a: Elem, b: Elem) -> bool {
        self.down[b].contains(a)
    }

    pub fn lt(&self, a: Elem, b: Elem) -> bool {
        a != b && self.leq(a, b)
    }

    pub fn comparable(&self, a: Elem, b: Elem) -> bool {
        self.leq(a, b) || self.leq(b, a)
    }

    /// `{z | x <= z}`
    pub fn up_set(&self, x: Elem) -> &FixedBitSet {
        &self.up[x]
    }

    /// `{z | z <= x}`
    pub fn down_set(&self, x: Elem) -> &FixedBitSet {
        &self.down[x]
    }

    pub fn meet(&self, x: Elem, y: Elem) -> Elem {
        self.meet[x * self.n + y]
    }

    pub fn join(&self, x: Elem, y: Elem) -> Elem {
        self.join[x * self.n + y]
    }

    /// Length of the longest chain from the bottom to `x`. Equals the rank
    /// when the lattice is ranked.
    pub fn height(&self, x: Elem) -> usize {
        self.heights[x]
    }

    pub fn rank_function(&self) -> Result<RankFunction, NotRanked> {
        self.ranking.clone()
    }

    pub fn is_ranked(&self) -> bool {
        self.ranking.is_ok()
    }

    pub fn is_chain(&self) -> bool {
        self.upper.iter().all(|u| u.len() <= 1)
    }

    /// Applies a permutation to the ids: element `e` becomes `perm[e]`.
    pub fn relabel(&self, perm: &[Elem]) -> Result<Lattice, LatticeError> {
        assert_eq!(perm.len(), self.n, "permutation length must match lattice size");
        let covers: Vec<(Elem, Elem)> =
            self.covers.iter().map(|&(a, b)| (perm[a], perm[b])).collect();
        Lattice::new(self.n, &covers)
    }
}

impl fmt::Debug for Lattice {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Lattice")
            .field("n", &self.n)
            .field("covers", &self.covers)
            .finish()
    }
}

impl PartialEq for Lattice {
    /// Equality of labeled lattices (same ids, same covers), not isomorphism.
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.covers == other.covers
    }
}

impl Eq for Lattice {}

/// Kahn's algorithm; on failure extracts an explicit cycle.
fn topological_order(
    n: usize,
    upper: &[Vec<Elem>],
    lower: &[Vec<Elem>],
) -> Result<Vec<Elem>, LatticeError> {
    let mut indegree: Vec<usize> = lower.iter().map(Vec::len).collect();
    let mut ready: BTreeSet<Elem> = (0..n).filter(|&e| indegree[e] == 0).collect();
    let mut order = Vec::with_capacity(n);
    while let Some(e) = ready.pop_first() {
        order.push(e);
        for &b in &upper[e] {
            indegree[b] -= 1;
            if indegree[b] == 0 {
                ready.insert(b);
            }
        }
    }
    if order.len() == n {
        return Ok(order);
    }

    // Every remaining element still has a remaining lower cover, so walking
    // downwards through remaining elements must revisit one.
    let start = (0..n).find(|&e| indegree[e] > 0).expect("cycle remains");
    let mut path = vec![start];
    let mut position = vec![usize::MAX; n];
    position[start] = 0;
    let mut current = start;
    loop {
        let next = lower[current]
            .iter()
            .copied()
            .find(|&a| indegree[a] > 0)
            .expect("remaining element has a remaining lower cover");
        if position[next] != usize::MAX {
            let mut cycle: Vec<Elem> = path[position[next]..].to_vec();
            cycle.reverse();
            cycle.push(cycle[0]);
            return Err(LatticeError::CycleDetected(cycle));
        }
        position[next] = path.len();
        path.push(next);
        current = next;
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn two_chain() {
        let l = Lattice::from_covers(&[(0, 1)]).unwrap();
        assert_eq!(l.len(), 2);
        assert_eq!(l.bottom(), 0);
        assert_eq!(l.top(), 1);
    }

    #[test]
    fn single_element_and_empty() {
        let l = Lattice::from_covers(&[]).unwrap();
        assert_eq!(l.len(), 1);
        assert_eq!(l.bottom(), l.top());
        assert_eq!(Lattice::new(0, &[]).unwrap_err(), LatticeError::Empty);
    }

    #[test]
    fn two_minimal_upper_bounds() {
        let err =
            Lattice::from_covers(&[(0, 1), (0, 2), (1, 3), (2, 3), (1, 4), (2, 4)]).unwrap_err();
        assert_eq!(
            err,
            LatticeError::NotALattice { x: 1, y: 2, kind: BoundKind::Upper, bounds: vec![3, 4] }
        );
    }

    #[test]
    fn two_maximal_lower_bounds() {
        // atoms 3, 4 both below 1 and 2
        let err = Lattice::from_covers(&[
            (0, 3),
            (0, 4),
            (3, 1),
            (4, 1),
            (3, 2),
            (4, 2),
            (1, 5),
            (2, 5),
        ])
        .unwrap_err();
        assert_eq!(
            err,
            LatticeError::NotALattice { x: 1, y: 2, kind: BoundKind::Lower, bounds: vec![3, 4] }
        );
    }

    #[test]
    fn rejects_cycle() {
        let err = Lattice::from_covers(&[(0, 1), (1, 2), (2, 1), (2, 3)]).unwrap_err();
        match err {
            LatticeError::CycleDetected(cycle) => {
                assert_eq!(cycle.first(), cycle.last());
                assert!(cycle.contains(&1) && cycle.contains(&2));
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn rejects_redundant_cover() {
        let err = Lattice::from_covers(&[(0, 1), (1, 2), (0, 2)]).unwrap_err();
        assert_eq!(err, LatticeError::RedundantCover(0, 2));
    }

    #[test]
    fn rejects_multiple_extremes() {
        assert_eq!(
            Lattice::from_covers(&[(0, 1), (0, 2)]).unwrap_err(),
            LatticeError::MultipleMaxima(vec![1, 2])
        );
        assert_eq!(
            Lattice::from_covers(&[(0, 2), (1, 2)]).unwrap_err(),
            LatticeError::MultipleMinima(vec![0, 1])
        );
        assert!(matches!(
            Lattice::new(3, &[(0, 1)]).unwrap_err(),
            LatticeError::MultipleMinima(_)
        ));
    }

    #[test]
    fn rejects_bad_input() {
        assert_eq!(Lattice::new(2, &[(0, 2)]).unwrap_err(), LatticeError::ElementOutOfRange {
            element: 2,
            n: 2
        });
        assert_eq!(Lattice::new(2, &[(1, 1)]).unwrap_err(), LatticeError::SelfLoop(1));
        assert_eq!(
            Lattice::new(2, &[(0, 1), (0, 1)]).unwrap_err(),
            LatticeError::DuplicateCover(0, 1)
        );
    }

    #[test]
    fn chain_meets_and_joins() {
        let l = Lattice::from_covers(&[(0, 1), (1, 2)]).unwrap();
        assert_eq!(l.join(0, 2), 2);
        assert_eq!(l.meet(0, 2), 0);
        assert!(l.is_chain());
        for x in l.elements() {
            assert_eq!(l.meet(l.bottom(), x), l.bottom());
        }
    }

    #[test]
    fn diamond_queries() {
        let l = Lattice::from_covers(&[(0, 1), (0, 2), (1, 3), (2, 3)]).unwrap();
        assert_eq!(l.join(1, 2), 3);
        assert_eq!(l.meet(1, 2), 0);
        assert!(!l.comparable(1, 2));
        assert!(l.lt(0, 3));
        assert!(l.is_cover(1, 3) && !l.is_cover(0, 3));
        assert!(!l.is_chain());
    }
}
