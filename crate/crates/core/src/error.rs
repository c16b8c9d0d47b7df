use thiserror::Error;

use crate::lattice::Elem;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BoundKind {
    /// Minimal common upper bounds (join candidates).
    Upper,
    /// Maximal common lower bounds (meet candidates).
    Lower,
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum LatticeError {
    #[error("a lattice needs at least one element")]
    Empty,
    #[error("element {element} is out of range for n = {n}")]
    ElementOutOfRange { element: Elem, n: usize },
    #[error("element {0} covers itself")]
    SelfLoop(Elem),
    #[error("cover ({0}, {1}) is listed twice")]
    DuplicateCover(Elem, Elem),
    #[error("cover relation has a cycle: {0:?}")]
    CycleDetected(Vec<Elem>),
    #[error("cover ({0}, {1}) is implied by a longer chain")]
    RedundantCover(Elem, Elem),
    #[error("several minimal elements: {0:?}")]
    MultipleMinima(Vec<Elem>),
    #[error("several maximal elements: {0:?}")]
    MultipleMaxima(Vec<Elem>),
    #[error("elements {x} and {y} have {} {kind:?} bounds {bounds:?}", bounds.len())]
    NotALattice { x: Elem, y: Elem, kind: BoundKind, bounds: Vec<Elem> },
    #[error("elements {0} and {1} are not comparable (need {0} <= {1})")]
    NotComparable(Elem, Elem),
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
#[error("{what} has size {size}, above the limit of {limit}")]
pub struct SizeLimitExceeded {
    pub what: &'static str,
    pub size: usize,
    pub limit: usize,
}

/// A certificate failed independent replay.
#[derive(Clone, Debug, PartialEq, Eq, Error)]
#[error("certificate rejected: {0}")]
pub struct ReplayError(pub String);
