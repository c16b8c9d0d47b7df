//! Planarity of lattices through order dimension.
//!
//! A finite lattice has a planar Hasse diagram exactly when its order
//! dimension is at most two (Baker, Fishburn and Roberts; Kelly and Rival).
//! Dimension at most two means there is a linear extension `σ` whose
//! conjugate
//!
//! ```text
//!     x <τ y  iff  x < y,  or  x ∥ y and σ(y) < σ(x)
//! ```
//!
//! is again a linear order; then the order is `σ ∩ τ`. The relation `τ` is
//! total and antisymmetric by construction, so it is a linear order iff it
//! has no cyclic triple.
//!
//! The search builds `σ` one minimal element at a time. Once an element is
//! placed, its `τ`-relation to every other element is fixed: an unplaced
//! element is either above it or will come later in `σ`. So each triple is
//! checked as soon as two of its members are placed, and whether a prefix
//! can be completed depends only on the set of placed elements, which makes
//! failed sets safe to memoize.

use std::collections::HashSet;

use serde::Serialize;

use crate::error::{ReplayError, SizeLimitExceeded};
use crate::lattice::{Elem, Lattice};

pub const DEFAULT_PLANAR_LIMIT: usize = 40;

/// Placed-set masks are `u64`.
const HARD_LIMIT: usize = 64;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ConjugateOrder {
    /// `σ` listed from first to last.
    pub sigma: Vec<Elem>,
}

impl ConjugateOrder {
    /// Conjugate order `τ`, listed from first to last.
    pub fn tau(&self, lattice: &Lattice) -> Vec<Elem> {
        let position = positions(&self.sigma, lattice.len());
        let mut tau: Vec<Elem> = lattice.elements().collect();
        tau.sort_by(|&a, &b| {
            if a == b {
                std::cmp::Ordering::Equal
            } else if tau_less(lattice, &position, a, b) {
                std::cmp::Ordering::Less
            } else {
                std::cmp::Ordering::Greater
            }
        });
        tau
    }

    pub fn verify(&self, lattice: &Lattice) -> Result<(), ReplayError> {
        let n = lattice.len();
        let mut sorted = self.sigma.clone();
        sorted.sort_unstable();
        if sorted != (0..n).collect::<Vec<_>>() {
            return Err(ReplayError("sigma is not a permutation of the elements".into()));
        }
        let position = positions(&self.sigma, n);
        for &(a, b) in lattice.covers() {
            if position[a] > position[b] {
                return Err(ReplayError(format!("sigma puts {b} before {a}")));
            }
        }
        for a in 0..n {
            for b in 0..n {
                if a == b {
                    continue;
                }
                let ab = tau_less(lattice, &position, a, b);
                if ab == tau_less(lattice, &position, b, a) {
                    return Err(ReplayError(format!("tau is not antisymmetric on {a}, {b}")));
                }
                for c in 0..n {
                    if c != a && c != b && ab && tau_less(lattice, &position, b, c)
                        && !tau_less(lattice, &position, a, c)
                    {
                        return Err(ReplayError(format!("tau is not transitive on {a}, {b}, {c}")));
                    }
                }
                let both = position[a] < position[b] && ab;
                if both != lattice.lt(a, b) {
                    return Err(ReplayError(format!("sigma ∩ tau disagrees with the order on {a}, {b}")));
                }
            }
        }
        Ok(())
    }
}

fn positions(order: &[Elem], n: usize) -> Vec<usize> {
    let mut position = vec![usize::MAX; n];
    for (i, &e) in order.iter().enumerate() {
        position[e] = i;
    }
    position
}

fn tau_less(lattice: &Lattice, sigma_pos: &[usize], a: Elem, b: Elem) -> bool {
    lattice.lt(a, b) || (!lattice.comparable(a, b) && sigma_pos[b] < sigma_pos[a])
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "verdict", rename_all = "snake_case")]
pub enum Planarity {
    Planar(ConjugateOrder),
    /// Every linear extension was ruled out.
    NonPlanar,
}

impl Planarity {
    pub fn holds(&self) -> bool {
        matches!(self, Planarity::Planar(_))
    }
}

pub fn is_planar(lattice: &Lattice) -> Result<Planarity, SizeLimitExceeded> {
    is_planar_with_limit(lattice, DEFAULT_PLANAR_LIMIT)
}

pub fn is_planar_with_limit(
    lattice: &Lattice,
    limit: usize,
) -> Result<Planarity, SizeLimitExceeded> {
    let limit = limit.min(HARD_LIMIT);
    if lattice.len() > limit {
        return Err(SizeLimitExceeded { what: "lattice", size: lattice.len(), limit });
    }
    let n = lattice.len();
    let lower_masks: Vec<u64> = lattice
        .elements()
        .map(|x| lattice.lower_covers(x).iter().fold(0u64, |m, &a| m | 1 << a))
        .collect();
    let mut search = Search {
        lattice,
        lower_masks,
        position: vec![usize::MAX; n],
        sigma: Vec::with_capacity(n),
        failed: HashSet::new(),
    };
    Ok(if search.extend(0) {
        Planarity::Planar(ConjugateOrder { sigma: search.sigma })
    } else {
        Planarity::NonPlanar
    })
}

struct Search<'a> {
    lattice: &'a Lattice,
    lower_masks: Vec<u64>,
    position: Vec<usize>,
    sigma: Vec<Elem>,
    failed: HashSet<u64>,
}

impl Search<'_> {
    fn extend(&mut self, placed: u64) -> bool {
        let n = self.lattice.len();
        if self.sigma.len() == n {
            return true;
        }
        if self.failed.contains(&placed) {
            return false;
        }
        for v in 0..n {
            if placed & (1 << v) != 0 || self.lower_masks[v] & !placed != 0 {
                continue;
            }
            self.position[v] = self.sigma.len();
            self.sigma.push(v);
            if self.consistent(v) && self.extend(placed | 1 << v) {
                return true;
            }
            self.sigma.pop();
            self.position[v] = usize::MAX;
        }
        self.failed.insert(placed);
        false
    }

    /// `τ` restricted to a placed element and anything else. Unplaced
    /// elements sort after every placed one in `σ`.
    fn tau_less(&self, a: Elem, b: Elem) -> bool {
        let l = self.lattice;
        if l.lt(a, b) {
            return true;
        }
        if l.comparable(a, b) {
            return false;
        }
        self.position[b] < self.position[a]
    }

    /// Checks every triple containing the newly placed `v` and at least one
    /// other placed element.
    fn consistent(&self, v: Elem) -> bool {
        let n = self.lattice.len();
        let placed_before = &self.sigma[..self.sigma.len() - 1];
        for &u in placed_before {
            for w in 0..n {
                if w != u && w != v && self.cyclic(u, v, w) {
                    return false;
                }
            }
        }
        true
    }

    fn cyclic(&self, a: Elem, b: Elem, c: Elem) -> bool {
        let ab = self.tau_less(a, b);
        let bc = self.tau_less(b, c);
        let ca = self.tau_less(c, a);
        (ab && bc && ca) || (!ab && !bc && !ca)
    }
}
