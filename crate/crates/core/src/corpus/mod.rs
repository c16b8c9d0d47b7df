//! Test lattices: the Figure 1 fixtures, exhaustive enumeration, random
//! dismantlable lattices, and a harness that checks the theorems on them.

mod enumerate;
mod fixtures;
mod harness;
mod random;

use serde::Serialize;

pub use enumerate::{enumerate_lattices, ENUMERATION_LIMIT};
pub use fixtures::{fixture, Fixture, FixtureName};
pub use harness::{cross_check, examine, Implication, ImplicationViolated, LatticeRecord, Report, Summary};
pub use random::random_dismantlable;

use crate::admissibility::is_admissible;
use crate::lattice::Lattice;
use crate::predicates::{
    dismantling_sequence, is_interval_connected, is_lower_semimodular, is_planar,
    is_rank_connected, is_upper_semimodular, DEFAULT_MIN_GAP,
};
use crate::shelling::{construct_el, search_el, ShellingError, SEARCH_COVER_LIMIT};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Property {
    Ranked,
    RankConnected,
    IntervalConnected,
    Dismantlable,
    Planar,
    UpperSemimodular,
    LowerSemimodular,
    ElShellable,
    Admissible,
}

impl Property {
    /// Decides the property. `Err` carries the reason when it cannot be
    /// decided within the size limits.
    pub fn evaluate(self, lattice: &Lattice) -> Result<bool, String> {
        Ok(match self {
            Property::Ranked => lattice.is_ranked(),
            Property::RankConnected => is_rank_connected(lattice).holds(),
            Property::IntervalConnected => {
                is_interval_connected(lattice, DEFAULT_MIN_GAP).is_ok_and(|v| v.holds())
            }
            Property::Dismantlable => dismantling_sequence(lattice).holds(),
            Property::Planar => is_planar(lattice).map_err(|e| e.to_string())?.holds(),
            Property::UpperSemimodular => is_upper_semimodular(lattice).holds(),
            Property::LowerSemimodular => is_lower_semimodular(lattice).holds(),
            Property::ElShellable => is_el_shellable(lattice)?,
            Property::Admissible => is_admissible(lattice).map_err(|e| e.to_string())?.holds(),
        })
    }
}

/// Constructs a labeling when the construction applies, and otherwise
/// falls back to exhaustive search on small inputs.
fn is_el_shellable(lattice: &Lattice) -> Result<bool, String> {
    if !lattice.is_ranked() {
        return Ok(false);
    }
    match construct_el(lattice) {
        Ok(_) => Ok(true),
        Err(ShellingError::PreconditionFailed(_)) if lattice.covers().len() <= SEARCH_COVER_LIMIT => {
            search_el(lattice, lattice.covers().len())
                .map(|outcome| outcome.found().is_some())
                .map_err(|e| e.to_string())
        }
        Err(e) => Err(e.to_string()),
    }
}
