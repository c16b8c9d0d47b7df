use serde::Serialize;

use crate::interval::hasse_subgraph;
use crate::lattice::{Elem, Lattice};
use crate::rank::NotRanked;

/// Smallest rank gap at which open intervals must be connected.
pub const DEFAULT_MIN_GAP: usize = 2;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "verdict", rename_all = "snake_case")]
pub enum RankConnectivity {
    Connected,
    NotRanked(NotRanked),
    /// The cover graph on `R_rank ∪ R_{rank+1}` is disconnected; the first
    /// two components are given.
    Disconnected { rank: usize, components: [Vec<Elem>; 2] },
}

impl RankConnectivity {
    pub fn holds(&self) -> bool {
        matches!(self, RankConnectivity::Connected)
    }
}

pub fn is_rank_connected(lattice: &Lattice) -> RankConnectivity {
    let ranks = match lattice.rank_function() {
        Ok(r) => r,
        Err(witness) => return RankConnectivity::NotRanked(witness),
    };
    let levels = ranks.levels();
    for (rank, pair) in levels.windows(2).enumerate() {
        let mut subset = pair[0].clone();
        subset.extend_from_slice(&pair[1]);
        let graph = hasse_subgraph(lattice, &subset);
        if !graph.is_connected() {
            let mut components = graph.components.into_iter();
            return RankConnectivity::Disconnected {
                rank,
                components: [components.next().unwrap(), components.next().unwrap()],
            };
        }
    }
    RankConnectivity::Connected
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "verdict", rename_all = "snake_case")]
pub enum IntervalConnectivity {
    Connected,
    /// The Hasse diagram of `[lo, hi] - {lo, hi}` is disconnected.
    Disconnected { lo: Elem, hi: Elem, components: [Vec<Elem>; 2] },
}

impl IntervalConnectivity {
    pub fn holds(&self) -> bool {
        matches!(self, IntervalConnectivity::Connected)
    }
}

/// Checks every pair `lo < hi` with `r(hi) - r(lo) >= min_gap`, in
/// lexicographic `(lo, hi)` order.
pub fn is_interval_connected(
    lattice: &Lattice,
    min_gap: usize,
) -> Result<IntervalConnectivity, NotRanked> {
    let ranks = lattice.rank_function()?;
    for lo in lattice.elements() {
        for hi in lattice.up_set(lo).ones() {
            if ranks.rank(hi) < ranks.rank(lo) + min_gap.max(1) {
                continue;
            }
            let open: Vec<Elem> = lattice
                .interval(lo, hi)
                .expect("hi is above lo")
                .members()
                .iter()
                .copied()
                .filter(|&z| z != lo && z != hi)
                .collect();
            let graph = hasse_subgraph(lattice, &open);
            if !graph.is_connected() {
                let mut components = graph.components.into_iter();
                return Ok(IntervalConnectivity::Disconnected {
                    lo,
                    hi,
                    components: [components.next().unwrap(), components.next().unwrap()],
                });
            }
        }
    }
    Ok(IntervalConnectivity::Connected)
}
