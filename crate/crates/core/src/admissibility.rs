//! Admissibility: a natural labeling `ω` of the join-irreducibles induces
//! the cover labeling `γ(x ⋖ y) = min { ω(z) : z ∈ J, x ∨ z = y }`, and the
//! lattice is admissible when some `ω` makes every interval have exactly one
//! maximal chain with weakly increasing `γ`.
//!
//! Only the unique-rising-chain condition is checked. `ω` ranges over order
//! preserving maps `J → {1, ..., |J|}`: the verdict for `γ` depends only on
//! how labels compare, and every natural labeling has the same order
//! pattern as one of these.

use serde::Serialize;
use thiserror::Error;

use crate::error::SizeLimitExceeded;
use crate::lattice::{Elem, Lattice};
pub use crate::predicates::join_irreducibles;
use crate::shelling::{first_violation, Conditions, EdgeLabeling, ElVerdict, Label};

pub const DEFAULT_JOIN_IRREDUCIBLE_LIMIT: usize = 8;

#[derive(Clone, Debug, PartialEq, Eq, Error)]
#[error("invalid natural labeling: {0}")]
pub struct InvalidLabeling(pub String);

/// An order-preserving map from the join-irreducibles to `1..=|J|`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(transparent)]
pub struct NaturalLabeling {
    /// `(z, ω(z))` sorted by `z`.
    omega: Vec<(Elem, u32)>,
}

impl NaturalLabeling {
    /// Checks that `pairs` assigns every join-irreducible exactly once,
    /// stays in range and preserves order.
    pub fn new(lattice: &Lattice, pairs: &[(Elem, u32)]) -> Result<Self, InvalidLabeling> {
        let joins = join_irreducibles(lattice);
        let mut omega = pairs.to_vec();
        omega.sort_unstable();
        let keys: Vec<Elem> = omega.iter().map(|&(z, _)| z).collect();
        if keys != joins {
            return Err(InvalidLabeling(format!(
                "labeled elements {keys:?} differ from the join-irreducibles {joins:?}"
            )));
        }
        let bound = joins.len() as u32;
        if let Some(&(z, k)) = omega.iter().find(|&&(_, k)| k == 0 || k > bound) {
            return Err(InvalidLabeling(format!("ω({z}) = {k} is outside 1..={bound}")));
        }
        for &(z, a) in &omega {
            for &(w, b) in &omega {
                if lattice.lt(z, w) && a > b {
                    return Err(InvalidLabeling(format!(
                        "{z} < {w} but ω({z}) = {a} > ω({w}) = {b}"
                    )));
                }
            }
        }
        Ok(NaturalLabeling { omega })
    }

    pub fn get(&self, z: Elem) -> Option<u32> {
        self.omega.binary_search_by_key(&z, |&(e, _)| e).ok().map(|i| self.omega[i].1)
    }

    pub fn iter(&self) -> impl Iterator<Item = (Elem, u32)> + '_ {
        self.omega.iter().copied()
    }

    pub fn len(&self) -> usize {
        self.omega.len()
    }

    pub fn is_empty(&self) -> bool {
        self.omega.is_empty()
    }
}

/// Every natural labeling, as an iterator.
pub fn natural_labelings(lattice: &Lattice) -> Result<NaturalLabelings, SizeLimitExceeded> {
    natural_labelings_with_limit(lattice, DEFAULT_JOIN_IRREDUCIBLE_LIMIT)
}

pub fn natural_labelings_with_limit(
    lattice: &Lattice,
    limit: usize,
) -> Result<NaturalLabelings, SizeLimitExceeded> {
    let mut joins = join_irreducibles(lattice);
    if joins.len() > limit {
        return Err(SizeLimitExceeded {
            what: "join-irreducibles",
            size: joins.len(),
            limit,
        });
    }
    // a linear extension, so predecessors are assigned first
    joins.sort_by_key(|&z| (lattice.height(z), z));
    let below: Vec<Vec<usize>> = joins
        .iter()
        .map(|&w| (0..joins.len()).filter(|&i| lattice.lt(joins[i], w)).collect())
        .collect();
    let mut labelings = NaturalLabelings { joins, below, values: Vec::new(), started: false };
    labelings.fill_from(0);
    Ok(labelings)
}

/// Odometer over the values of `J` in linear-extension order; the last
/// element moves fastest.
pub struct NaturalLabelings {
    joins: Vec<Elem>,
    below: Vec<Vec<usize>>,
    values: Vec<u32>,
    started: bool,
}

impl NaturalLabelings {
    fn fill_from(&mut self, start: usize) {
        self.values.truncate(start);
        for i in start..self.joins.len() {
            let floor = self.below[i].iter().map(|&j| self.values[j]).max().unwrap_or(1);
            self.values.push(floor);
        }
    }

    fn current(&self) -> NaturalLabeling {
        let mut omega: Vec<(Elem, u32)> =
            self.joins.iter().copied().zip(self.values.iter().copied()).collect();
        omega.sort_unstable();
        NaturalLabeling { omega }
    }
}

impl Iterator for NaturalLabelings {
    type Item = NaturalLabeling;

    fn next(&mut self) -> Option<NaturalLabeling> {
        if !self.started {
            self.started = true;
            return Some(self.current());
        }
        let top = self.joins.len() as u32;
        let i = (0..self.values.len()).rev().find(|&i| self.values[i] < top)?;
        self.values[i] += 1;
        self.fill_from(i + 1);
        Some(self.current())
    }
}

/// `γ` on every cover. Total: the upper end of a cover `x ⋖ y` is the join
/// of `x` with some join-irreducible below `y` but not below `x`.
pub fn gamma_labeling(lattice: &Lattice, omega: &NaturalLabeling) -> EdgeLabeling {
    lattice
        .covers()
        .iter()
        .map(|&(x, y)| {
            let value = omega
                .iter()
                .filter(|&(z, _)| lattice.join(x, z) == y)
                .map(|(_, k)| k)
                .min()
                .expect("some join-irreducible generates each cover");
            ((x, y), Label::from_integer(value.into()))
        })
        .collect()
}

/// Unique-rising-chain check for `γ`; the first failing interval in
/// `(height(x), x, y)` order is reported.
pub fn check_admissible_with(lattice: &Lattice, omega: &NaturalLabeling) -> ElVerdict {
    let gamma = gamma_labeling(lattice, omega);
    let violation = first_violation(lattice, &gamma, Conditions::UniqueRising, None);
    ElVerdict { ok: violation.is_none(), violation }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "verdict", rename_all = "snake_case")]
pub enum Admissibility {
    Admissible { omega: NaturalLabeling },
    /// No natural labeling works; `candidates` were tried.
    NotAdmissible { candidates: u64 },
}

impl Admissibility {
    pub fn holds(&self) -> bool {
        matches!(self, Admissibility::Admissible { .. })
    }
}

/// The first natural labeling (in enumeration order) that passes.
pub fn is_admissible(lattice: &Lattice) -> Result<Admissibility, SizeLimitExceeded> {
    is_admissible_with_limit(lattice, DEFAULT_JOIN_IRREDUCIBLE_LIMIT)
}

pub fn is_admissible_with_limit(
    lattice: &Lattice,
    limit: usize,
) -> Result<Admissibility, SizeLimitExceeded> {
    let mut candidates = 0;
    for omega in natural_labelings_with_limit(lattice, limit)? {
        candidates += 1;
        if check_admissible_with(lattice, &omega).ok {
            return Ok(Admissibility::Admissible { omega });
        }
    }
    Ok(Admissibility::NotAdmissible { candidates })
}
