//! Isomorphism-invariant encodings of cover DAGs.
//!
//! Vertices are first split by (height, up-degree, down-degree), the ordered
//! partition is refined until equitable, and the remaining symmetry is broken
//! by individualize-and-refine backtracking. The encoding is the smallest
//! cover matrix over all leaves of the search tree. Elements with identical
//! upper and lower covers are interchangeable, so only one of each such twin
//! class is tried at a branch point.

use crate::lattice::{Elem, Lattice};

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonicalForm(Vec<u8>);

impl CanonicalForm {
    pub fn as_bytes(&self) -> &[u8] {
        &self.0
    }
}

/// Equal for two lattices iff they are isomorphic.
pub fn canonical_form(lattice: &Lattice) -> CanonicalForm {
    let upper: Vec<Vec<Elem>> =
        lattice.elements().map(|x| lattice.upper_covers(x).to_vec()).collect();
    canonical_labeling(&upper).0
}

/// Canonical form of the DAG with the given (irredundant) upper cover
/// lists, plus the position each vertex takes in the canonical order.
pub(crate) fn canonical_labeling(upper: &[Vec<usize>]) -> (CanonicalForm, Vec<usize>) {
    let n = upper.len();
    let mut lower = vec![Vec::new(); n];
    for (a, ups) in upper.iter().enumerate() {
        for &b in ups {
            lower[b].push(a);
        }
    }
    let mut upper: Vec<Vec<usize>> = upper.to_vec();
    for list in upper.iter_mut().chain(lower.iter_mut()) {
        list.sort_unstable();
    }

    let mut heights = vec![usize::MAX; n];
    fn height(v: usize, lower: &[Vec<usize>], memo: &mut [usize]) -> usize {
        if memo[v] == usize::MAX {
            memo[v] = lower[v].iter().map(|&a| height(a, lower, memo) + 1).max().unwrap_or(0);
        }
        memo[v]
    }
    for v in 0..n {
        height(v, &lower, &mut heights);
    }

    let keys: Vec<(usize, usize, usize)> =
        (0..n).map(|v| (heights[v], upper[v].len(), lower[v].len())).collect();
    let mut distinct = keys.clone();
    distinct.sort_unstable();
    distinct.dedup();
    let mut colors: Vec<usize> =
        keys.iter().map(|k| distinct.binary_search(k).unwrap()).collect();

    let search = Search { n, upper: &upper, lower: &lower };
    search.refine(&mut colors);
    let mut best: Option<(Vec<u8>, Vec<usize>)> = None;
    search.explore(colors, &mut best);
    let (bits, positions) = best.expect("search reaches at least one leaf");

    let mut bytes = Vec::with_capacity(2 + bits.len());
    bytes.extend_from_slice(&(n as u16).to_le_bytes());
    bytes.extend_from_slice(&bits);
    (CanonicalForm(bytes), positions)
}

struct Search<'a> {
    n: usize,
    upper: &'a [Vec<usize>],
    lower: &'a [Vec<usize>],
}

impl Search<'_> {
    /// Refines an ordered partition (given as cell indices) until equitable.
    fn refine(&self, colors: &mut [usize]) {
        let mut cells = count_cells(colors);
        loop {
            let signature = |v: usize| {
                let mut up: Vec<usize> = self.upper[v].iter().map(|&u| colors[u]).collect();
                let mut down: Vec<usize> = self.lower[v].iter().map(|&u| colors[u]).collect();
                up.sort_unstable();
                down.sort_unstable();
                (colors[v], up, down)
            };
            let mut sigs: Vec<_> = (0..self.n).map(|v| (signature(v), v)).collect();
            sigs.sort();
            let mut next = 0;
            for i in 0..sigs.len() {
                if i > 0 && sigs[i].0 != sigs[i - 1].0 {
                    next += 1;
                }
                colors[sigs[i].1] = next;
            }
            let refined = next + 1;
            if refined == cells {
                break;
            }
            cells = refined;
        }
    }

    fn explore(&self, colors: Vec<usize>, best: &mut Option<(Vec<u8>, Vec<usize>)>) {
        let cells = count_cells(&colors);
        if cells == self.n {
            let bits = self.encode(&colors);
            if best.as_ref().map_or(true, |(b, _)| bits < *b) {
                *best = Some((bits, colors));
            }
            return;
        }

        let mut sizes = vec![0usize; cells];
        for &c in &colors {
            sizes[c] += 1;
        }
        let target = sizes.iter().position(|&s| s > 1).expect("some cell is not a singleton");
        let members: Vec<usize> = (0..self.n).filter(|&v| colors[v] == target).collect();

        let mut tried: Vec<usize> = Vec::new();
        for &v in &members {
            if tried.iter().any(|&u| self.upper[u] == self.upper[v] && self.lower[u] == self.lower[v])
            {
                continue;
            }
            tried.push(v);
            let mut next: Vec<usize> = colors
                .iter()
                .enumerate()
                .map(|(u, &c)| if c > target || (c == target && u != v) { c + 1 } else { c })
                .collect();
            self.refine(&mut next);
            self.explore(next, best);
        }
    }

    /// Row-major cover matrix in the order given by a discrete partition.
    fn encode(&self, positions: &[usize]) -> Vec<u8> {
        let n = self.n;
        let mut bits = vec![0u8; (n * n).div_ceil(8)];
        for (a, ups) in self.upper.iter().enumerate() {
            for &b in ups {
                let i = positions[a] * n + positions[b];
                bits[i / 8] |= 1 << (i % 8);
            }
        }
        bits
    }
}

fn count_cells(colors: &[usize]) -> usize {
    colors.iter().copied().max().map_or(0, |m| m + 1)
}
