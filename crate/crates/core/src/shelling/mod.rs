//! Lexicographic shellability (EL-labelings) of ranked lattices.
//!
//! A labeling `f` of the cover relation is an EL-labeling when every
//! interval `[x, y]` has exactly one maximal chain whose labels weakly
//! increase, and the first label of that chain is strictly smaller than the
//! label of every other cover of `x` inside `[x, y]`.

mod construct;
mod search;
mod verify;

use std::collections::BTreeMap;

use num_rational::Rational64;
use thiserror::Error;

pub use construct::construct_el;
pub use search::{search_el, SearchOutcome, SEARCH_COVER_LIMIT};
pub use verify::{rising_chains, verify_el, ElVerdict, ElViolation};

pub(crate) use verify::{first_violation, Conditions};

use crate::error::{LatticeError, SizeLimitExceeded};
use crate::lattice::{Elem, Lattice};
use crate::rank::NotRanked;

/// Exact label values.
pub type Label = Rational64;

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum ShellingError {
    #[error(transparent)]
    NotRanked(#[from] NotRanked),
    #[error("cover ({0}, {1}) has no label")]
    PartialLabeling(Elem, Elem),
    #[error("({0}, {1}) is not a cover")]
    UnknownCover(Elem, Elem),
    #[error(transparent)]
    Lattice(#[from] LatticeError),
    #[error("precondition failed: {0}")]
    PreconditionFailed(String),
    #[error("no extension found when re-inserting element {element}")]
    ExtensionSearchExhausted { element: Elem },
    #[error("constructed labeling rejected by the verifier: {0:?}")]
    ConstructionRejected(Box<ElViolation>),
    #[error(transparent)]
    SizeLimitExceeded(#[from] SizeLimitExceeded),
}

/// A label for every cover pair.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct EdgeLabeling {
    labels: BTreeMap<(Elem, Elem), Label>,
}

impl EdgeLabeling {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn insert(&mut self, a: Elem, b: Elem, label: Label) -> Option<Label> {
        self.labels.insert((a, b), label)
    }

    pub fn get(&self, a: Elem, b: Elem) -> Option<Label> {
        self.labels.get(&(a, b)).copied()
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    /// `((a, b), label)` in cover order.
    pub fn iter(&self) -> impl Iterator<Item = ((Elem, Elem), Label)> + '_ {
        self.labels.iter().map(|(&k, &v)| (k, v))
    }

    /// Checks that the labeled pairs are exactly the covers of `lattice`.
    pub fn check_total(&self, lattice: &Lattice) -> Result<(), ShellingError> {
        if let Some(&(a, b)) = lattice.covers().iter().find(|&&(a, b)| self.get(a, b).is_none()) {
            return Err(ShellingError::PartialLabeling(a, b));
        }
        if let Some((&(a, b), _)) = self.labels.iter().find(|(&(a, b), _)| {
            a >= lattice.len() || b >= lattice.len() || !lattice.is_cover(a, b)
        }) {
            return Err(ShellingError::UnknownCover(a, b));
        }
        Ok(())
    }

    /// Applies `map` to every label.
    pub fn map_labels(&self, mut map: impl FnMut(Label) -> Label) -> EdgeLabeling {
        EdgeLabeling { labels: self.labels.iter().map(|(&k, &v)| (k, map(v))).collect() }
    }

    /// Replaces each label by its position `1, 2, ...` among the distinct
    /// label values. Preserves every comparison between labels.
    pub fn normalized(&self) -> EdgeLabeling {
        let mut distinct: Vec<Label> = self.labels.values().copied().collect();
        distinct.sort_unstable();
        distinct.dedup();
        self.map_labels(|v| Label::from_integer(distinct.binary_search(&v).unwrap() as i64 + 1))
    }

    pub fn min_label(&self) -> Option<Label> {
        self.labels.values().min().copied()
    }

    pub fn max_label(&self) -> Option<Label> {
        self.labels.values().max().copied()
    }
}

impl FromIterator<((Elem, Elem), Label)> for EdgeLabeling {
    fn from_iter<I: IntoIterator<Item = ((Elem, Elem), Label)>>(iter: I) -> Self {
        EdgeLabeling { labels: iter.into_iter().collect() }
    }
}

/// `"p/q"`, always with an explicit denominator.
pub fn format_label(label: &Label) -> String {
    format!("{}/{}", label.numer(), label.denom())
}

/// Accepts `"p/q"` or a plain integer `"p"`.
pub fn parse_label(text: &str) -> Result<Label, String> {
    let text = text.trim();
    let (numer, denom) = match text.split_once('/') {
        Some((p, q)) => (p.trim(), q.trim()),
        None => (text, "1"),
    };
    let numer: i64 = numer.parse().map_err(|_| format!("bad numerator in {text:?}"))?;
    let denom: i64 = denom.parse().map_err(|_| format!("bad denominator in {text:?}"))?;
    if denom == 0 {
        return Err(format!("zero denominator in {text:?}"));
    }
    Ok(Label::new(numer, denom))
}
