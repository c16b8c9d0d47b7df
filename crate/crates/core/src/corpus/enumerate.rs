//! Lattices up to isomorphism, grown one maximal element at a time.
//!
//! Every linear extension of a lattice lists it as a chain of down-sets,
//! and each down-set is a meet-semilattice in which any two elements with a
//! common upper bound have a least one. Level `k` of the search holds these
//! structures on `k` elements, one per isomorphism class. A new element is
//! placed on top of an antichain of lower covers, and the extension is kept
//! only if the two properties survive. Down-sets never change after an
//! element is placed, so a pruned branch can never recover.

use std::collections::BTreeMap;

use crate::canonical::{canonical_labeling, CanonicalForm};
use crate::error::SizeLimitExceeded;
use crate::lattice::{Elem, Lattice};

pub const ENUMERATION_LIMIT: usize = 10;

/// All lattices with `n` elements up to isomorphism, sorted by canonical
/// form. Element ids follow the order in which elements were placed, so
/// `0` is the bottom and `n - 1` the top.
pub fn enumerate_lattices(n: usize) -> Result<Vec<Lattice>, SizeLimitExceeded> {
    if n > ENUMERATION_LIMIT {
        return Err(SizeLimitExceeded { what: "enumerated lattice", size: n, limit: ENUMERATION_LIMIT });
    }
    if n == 0 {
        return Ok(Vec::new());
    }
    let mut level = vec![Partial { down: vec![1], lower: vec![Vec::new()] }];
    for _ in 1..n {
        let mut next: BTreeMap<CanonicalForm, Partial> = BTreeMap::new();
        for partial in &level {
            for child in partial.extensions() {
                next.entry(child.canonical()).or_insert(child);
            }
        }
        level = next.into_values().collect();
    }
    Ok(level
        .into_iter()
        .filter(Partial::has_top)
        .map(|p| Lattice::new(n, &p.covers()).expect("enumerated structure is a lattice"))
        .collect())
}

/// Down-sets as bit masks, element `i` at bit `i`.
#[derive(Clone)]
struct Partial {
    down: Vec<u32>,
    lower: Vec<Vec<Elem>>,
}

impl Partial {
    fn len(&self) -> usize {
        self.down.len()
    }

    fn up(&self, x: Elem) -> u32 {
        (0..self.len()).filter(|&y| self.down[y] >> x & 1 == 1).fold(0, |m, y| m | 1 << y)
    }

    fn extensions(&self) -> Vec<Partial> {
        let k = self.len();
        let ups: Vec<u32> = (0..k).map(|x| self.up(x)).collect();
        let mut out = Vec::new();
        for mask in 1u32..1 << k {
            let members: Vec<Elem> = (0..k).filter(|&i| mask >> i & 1 == 1).collect();
            if members.iter().any(|&i| self.down[i] & mask != 1 << i) {
                continue;
            }
            let below = members.iter().fold(0, |m, &i| m | self.down[i]);
            if self.accepts(below, &ups) {
                let mut child = self.clone();
                child.down.push(below | 1 << k);
                child.lower.push(members);
                out.push(child);
            }
        }
        out
    }

    /// Whether an element whose strict down-set is `below` can be added.
    fn accepts(&self, below: u32, ups: &[u32]) -> bool {
        for x in 0..self.len() {
            if below >> x & 1 == 1 {
                continue;
            }
            // common lower bounds of x and the new element need a maximum
            let common = below & self.down[x];
            let maxima = (0..self.len())
                .filter(|&m| common >> m & 1 == 1 && ups[m] & common == 1 << m)
                .count();
            if maxima != 1 {
                return false;
            }
        }
        for x in 0..self.len() {
            for y in x + 1..self.len() {
                if below >> x & 1 == 0 || below >> y & 1 == 0 {
                    continue;
                }
                // the new element must not become a second minimal upper bound
                let common = ups[x] & ups[y];
                if common != 0 && common & below == 0 {
                    return false;
                }
            }
        }
        true
    }

    fn upper_lists(&self) -> Vec<Vec<Elem>> {
        let mut upper = vec![Vec::new(); self.len()];
        for (b, lows) in self.lower.iter().enumerate() {
            for &a in lows {
                upper[a].push(b);
            }
        }
        upper
    }

    fn canonical(&self) -> CanonicalForm {
        canonical_labeling(&self.upper_lists()).0
    }

    fn has_top(&self) -> bool {
        let k = self.len();
        (0..k).filter(|&x| (0..k).all(|y| y == x || self.down[y] >> x & 1 == 0)).count() == 1
    }

    fn covers(&self) -> Vec<(Elem, Elem)> {
        self.lower
            .iter()
            .enumerate()
            .flat_map(|(b, lows)| lows.iter().map(move |&a| (a, b)))
            .collect()
    }
}
