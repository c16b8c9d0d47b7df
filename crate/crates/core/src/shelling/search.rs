//! Exhaustive search for an EL-labeling, used as an oracle for
//! [`construct_el`](super::construct_el).
//!
//! The verdict of the verifier depends only on how labels compare, so the
//! search enumerates weak orders on the covers rather than raw label
//! vectors: each new cover either joins an existing label value or opens a
//! new value in one of the gaps. Covers are assigned in order of the rank of
//! their upper end.
//!
//! Pruning uses a local form of the two conditions. If every proper
//! subinterval of `[x, y]` is fine, the rising chains of `[x, y]` are the
//! chains `x ⋖ a` followed by the rising chain of `[a, y]`, whose first
//! label `m(a, y)` is the smallest label on a cover of `a` inside `[a, y]`.
//! So `[x, y]` is fine iff the smallest `f(x, a)` over atoms `a` of
//! `[x, y]` is attained once, at `a*` say, `f(x, a*) <= m(a*, y)`, and
//! `f(x, a) > m(a, y)` for every other atom. This only involves covers at
//! most two ranks above `x`, so it is checked as soon as those are labeled.
//! Leaves are confirmed with the full verifier.

use std::collections::HashMap;

use super::{EdgeLabeling, Label, ShellingError};
use crate::error::SizeLimitExceeded;
use crate::lattice::{Elem, Lattice};
use crate::shelling::verify::{first_violation, Conditions};

pub const SEARCH_COVER_LIMIT: usize = 12;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SearchOutcome {
    Found(EdgeLabeling),
    /// `explored` counts search nodes visited before giving up.
    NotFound { explored: u64 },
}

impl SearchOutcome {
    pub fn found(&self) -> Option<&EdgeLabeling> {
        match self {
            SearchOutcome::Found(labels) => Some(labels),
            SearchOutcome::NotFound { .. } => None,
        }
    }
}

/// Looks for an EL-labeling using at most `max_labels` distinct values.
pub fn search_el(lattice: &Lattice, max_labels: usize) -> Result<SearchOutcome, ShellingError> {
    if lattice.covers().len() > SEARCH_COVER_LIMIT {
        return Err(SizeLimitExceeded {
            what: "cover relation",
            size: lattice.covers().len(),
            limit: SEARCH_COVER_LIMIT,
        }
        .into());
    }
    let ranks = lattice
        .rank_function()
        .map_err(|w| ShellingError::PreconditionFailed(w.to_string()))?;

    let mut order: Vec<(Elem, Elem)> = lattice.covers().to_vec();
    order.sort_by_key(|&(a, b)| (ranks.rank(b), b, a));
    let position: HashMap<(Elem, Elem), usize> =
        order.iter().enumerate().map(|(i, &c)| (c, i)).collect();
    let index = &position;

    // checks[i]: intervals decided once cover i is labeled
    let mut checks: Vec<Vec<(Elem, Elem)>> = vec![Vec::new(); order.len()];
    for x in lattice.elements() {
        for y in lattice.up_set(x).ones() {
            if ranks.rank(y) < ranks.rank(x) + 2 {
                continue;
            }
            let last = atoms(lattice, x, y)
                .flat_map(|a| {
                    let second = atoms(lattice, a, y).map(move |c| index[&(a, c)]);
                    std::iter::once(index[&(x, a)]).chain(second)
                })
                .max()
                .expect("a long interval has covers");
            checks[last].push((x, y));
        }
    }

    let mut search = Search {
        lattice,
        order,
        checks,
        max_labels: max_labels.max(1),
        values: Vec::new(),
        labels: EdgeLabeling::new(),
        explored: 0,
    };
    Ok(if search.assign(0) {
        SearchOutcome::Found(search.labels.normalized())
    } else {
        SearchOutcome::NotFound { explored: search.explored }
    })
}

/// Upper covers of `x` below `y`.
fn atoms(lattice: &Lattice, x: Elem, y: Elem) -> impl Iterator<Item = Elem> + '_ {
    lattice.upper_covers(x).iter().copied().filter(move |&a| lattice.leq(a, y))
}

struct Search<'a> {
    lattice: &'a Lattice,
    order: Vec<(Elem, Elem)>,
    checks: Vec<Vec<(Elem, Elem)>>,
    max_labels: usize,
    /// Distinct values in use, sorted, with multiplicities.
    values: Vec<(Label, usize)>,
    labels: EdgeLabeling,
    explored: u64,
}

impl Search<'_> {
    fn assign(&mut self, index: usize) -> bool {
        self.explored += 1;
        if index == self.order.len() {
            return first_violation(self.lattice, &self.labels, Conditions::Full, None).is_none();
        }
        let (a, b) = self.order[index];
        for value in self.choices() {
            self.labels.insert(a, b, value);
            self.retain(value);
            let ok = self.checks[index].iter().all(|&(x, y)| self.locally_ok(x, y));
            if ok && self.assign(index + 1) {
                return true;
            }
            self.release(value);
        }
        false
    }

    /// Every existing value, then a fresh value in each gap if the budget
    /// allows.
    fn choices(&self) -> Vec<Label> {
        let mut out: Vec<Label> = self.values.iter().map(|&(v, _)| v).collect();
        if self.values.len() < self.max_labels {
            match (self.values.first(), self.values.last()) {
                (Some(&(lo, _)), Some(&(hi, _))) => {
                    out.push(lo - 1);
                    for pair in self.values.windows(2) {
                        out.push((pair[0].0 + pair[1].0) / 2);
                    }
                    out.push(hi + 1);
                }
                _ => out.push(Label::from_integer(0)),
            }
        }
        out
    }

    fn retain(&mut self, value: Label) {
        match self.values.binary_search_by(|probe| probe.0.cmp(&value)) {
            Ok(i) => self.values[i].1 += 1,
            Err(i) => self.values.insert(i, (value, 1)),
        }
    }

    fn release(&mut self, value: Label) {
        let i = self.values.binary_search_by(|probe| probe.0.cmp(&value)).unwrap();
        self.values[i].1 -= 1;
        if self.values[i].1 == 0 {
            self.values.remove(i);
        }
    }

    fn label(&self, a: Elem, b: Elem) -> Label {
        self.labels.get(a, b).expect("checked covers are labeled")
    }

    /// The local condition for `[x, y]` from the module docs.
    fn locally_ok(&self, x: Elem, y: Elem) -> bool {
        let first: Vec<(Label, Elem)> =
            atoms(self.lattice, x, y).map(|a| (self.label(x, a), a)).collect();
        let least = first.iter().map(|&(l, _)| l).min().unwrap();
        if first.iter().filter(|&&(l, _)| l == least).count() != 1 {
            return false;
        }
        first.iter().all(|&(l, a)| {
            let next = atoms(self.lattice, a, y).map(|c| self.label(a, c)).min().unwrap();
            if l == least {
                l <= next
            } else {
                l > next
            }
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::shelling::verify_el;

    #[test]
    fn diamond_found_with_two_labels() {
        let l = Lattice::from_covers(&[(0, 1), (0, 2), (1, 3), (2, 3)]).unwrap();
        let SearchOutcome::Found(f) = search_el(&l, 2).unwrap() else { panic!("not found") };
        assert!(verify_el(&l, &f).unwrap().ok);
    }

    #[test]
    fn chain_found_with_constant_labels() {
        let l = Lattice::from_covers(&[(0, 1), (1, 2)]).unwrap();
        let SearchOutcome::Found(f) = search_el(&l, 1).unwrap() else { panic!("not found") };
        assert!(f.iter().all(|(_, v)| v == Label::from_integer(1)));
    }

    #[test]
    fn one_label_is_not_enough_for_diamond() {
        let l = Lattice::from_covers(&[(0, 1), (0, 2), (1, 3), (2, 3)]).unwrap();
        assert!(matches!(search_el(&l, 1).unwrap(), SearchOutcome::NotFound { .. }));
    }

    #[test]
    fn disconnected_middle_has_no_labeling() {
        let l = Lattice::from_covers(&[(0, 1), (1, 2), (2, 5), (0, 3), (3, 4), (4, 5)]).unwrap();
        assert!(matches!(search_el(&l, 6).unwrap(), SearchOutcome::NotFound { .. }));
    }

    #[test]
    fn unranked_and_oversized_inputs() {
        let pentagon = Lattice::from_covers(&[(0, 1), (1, 2), (2, 4), (0, 3), (3, 4)]).unwrap();
        assert!(matches!(search_el(&pentagon, 3), Err(ShellingError::PreconditionFailed(_))));

        let cube: Vec<(Elem, Elem)> = (0..16usize)
            .flat_map(|s| (0..4).filter(move |i| s & (1 << i) == 0).map(move |i| (s, s | 1 << i)))
            .collect();
        let l = Lattice::from_covers(&cube).unwrap();
        assert!(matches!(search_el(&l, 3), Err(ShellingError::SizeLimitExceeded(_))));
    }
}
