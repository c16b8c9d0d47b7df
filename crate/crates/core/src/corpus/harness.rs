use std::fmt;

use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::admissibility::{gamma_labeling, is_admissible, Admissibility};
use crate::lattice::{Elem, Lattice};
use crate::predicates::{
    dismantling_sequence, is_interval_connected, is_lower_semimodular, is_planar,
    is_rank_connected, is_upper_semimodular, Planarity, DEFAULT_MIN_GAP,
};
use crate::shelling::{construct_el, search_el, verify_el, SearchOutcome, SEARCH_COVER_LIMIT};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Implication {
    /// Rank-connected and dismantlable implies a verified EL-labeling.
    Theorem1,
    /// Ranked and interval-connected implies rank-connected.
    Theorem2,
    /// Planar implies dismantlable.
    PlanarDismantlable,
    /// Admissible and ranked implies EL-shellable.
    AdmissibleShellable,
    /// A constructed labeling must be matched by the exhaustive search.
    OracleAgreement,
    /// Every certificate must survive independent replay.
    CertificateReplay,
}

impl fmt::Display for Implication {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
#[error("{implication} fails on lattice {lattice}: {detail}")]
pub struct ImplicationViolated {
    pub implication: Implication,
    /// The offending lattice as `{"n": .., "covers": [..]}`.
    pub lattice: String,
    pub detail: String,
}

/// Outcome of the constructive labeling.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Construction {
    Verified,
    Declined,
}

/// Every verdict for one lattice. `None` means not decided (size limits,
/// or the property needs rankedness).
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LatticeRecord {
    pub index: usize,
    pub n: usize,
    pub covers: Vec<(Elem, Elem)>,
    pub ranked: bool,
    pub rank_connected: bool,
    pub interval_connected: Option<bool>,
    pub dismantlable: bool,
    pub planar: Option<bool>,
    pub upper_semimodular: bool,
    pub lower_semimodular: bool,
    pub construct_el: Construction,
    pub search_el: Option<bool>,
    pub admissible: Option<bool>,
    /// Whether `γ` of the admissible `ω` also meets the lex-first condition.
    pub gamma_is_el: Option<bool>,
}

impl LatticeRecord {
    /// EL-labelings force rankedness, so unranked lattices are decided
    /// without search.
    pub fn el_shellable(&self) -> Option<bool> {
        if !self.ranked {
            return Some(false);
        }
        match self.construct_el {
            Construction::Verified => Some(true),
            Construction::Declined => self.search_el,
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Summary {
    pub lattices: usize,
    /// Ranked and interval-connected.
    pub theorem2_instances: usize,
    /// Rank-connected and dismantlable.
    pub theorem1_instances: usize,
    pub theorem1_verified: usize,
    pub rank_connected_not_interval_connected: usize,
    pub planar: usize,
    pub admissible: usize,
    pub admissible_shellable: usize,
    /// Admissible, but too many covers to search for a labeling.
    pub admissible_unchecked: usize,
    /// Admissible without being ranked, so outside the setting where
    /// lexicographic shellability is defined.
    pub admissible_unranked: usize,
    pub shellable_not_admissible: usize,
    pub gamma_is_el: usize,
    pub gamma_not_el: usize,
    pub searched: usize,
    pub search_found: usize,
    /// EL-shellable by search although the construction does not apply.
    pub search_found_construct_declined: usize,
    pub violations: usize,
}

impl Summary {
    fn add(&mut self, r: &LatticeRecord) {
        let yes = |v: Option<bool>| v == Some(true);
        let no = |v: Option<bool>| v == Some(false);
        self.lattices += 1;
        self.theorem2_instances += usize::from(r.ranked && yes(r.interval_connected));
        self.theorem1_instances += usize::from(r.rank_connected && r.dismantlable);
        self.theorem1_verified += usize::from(r.construct_el == Construction::Verified);
        self.rank_connected_not_interval_connected +=
            usize::from(r.rank_connected && no(r.interval_connected));
        self.planar += usize::from(yes(r.planar));
        self.admissible += usize::from(yes(r.admissible));
        self.admissible_shellable += usize::from(yes(r.admissible) && yes(r.el_shellable()));
        self.admissible_unchecked +=
            usize::from(r.ranked && yes(r.admissible) && r.el_shellable().is_none());
        self.admissible_unranked += usize::from(!r.ranked && yes(r.admissible));
        self.shellable_not_admissible += usize::from(no(r.admissible) && yes(r.el_shellable()));
        self.gamma_is_el += usize::from(yes(r.gamma_is_el));
        self.gamma_not_el += usize::from(no(r.gamma_is_el));
        self.searched += usize::from(r.search_el.is_some());
        self.search_found += usize::from(yes(r.search_el));
        self.search_found_construct_declined +=
            usize::from(yes(r.search_el) && r.construct_el == Construction::Declined);
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Report {
    pub records: Vec<LatticeRecord>,
    pub summary: Summary,
}

/// Examines every lattice (in parallel) and stops at the first failed
/// implication in input order.
pub fn cross_check(lattices: &[Lattice]) -> Result<Report, ImplicationViolated> {
    let results: Vec<Result<LatticeRecord, ImplicationViolated>> =
        lattices.par_iter().enumerate().map(|(i, l)| examine(i, l)).collect();
    let mut summary = Summary::default();
    let mut records = Vec::with_capacity(results.len());
    for result in results {
        let record = result?;
        summary.add(&record);
        records.push(record);
    }
    Ok(Report { records, summary })
}

/// All verdicts for one lattice, checking each implication.
pub fn examine(index: usize, lattice: &Lattice) -> Result<LatticeRecord, ImplicationViolated> {
    let fail = |implication, detail: String| ImplicationViolated {
        implication,
        lattice: serde_json::json!({ "n": lattice.len(), "covers": lattice.covers() }).to_string(),
        detail,
    };

    let ranked = lattice.is_ranked();
    let rank_connected = is_rank_connected(lattice).holds();
    let interval_connected =
        is_interval_connected(lattice, DEFAULT_MIN_GAP).ok().map(|v| v.holds());
    let dismantling = dismantling_sequence(lattice);
    if let Some(seq) = dismantling.sequence() {
        seq.verify(lattice).map_err(|e| fail(Implication::CertificateReplay, e.to_string()))?;
    }
    let dismantlable = dismantling.holds();
    let planarity = is_planar(lattice).ok();
    if let Some(Planarity::Planar(order)) = &planarity {
        order.verify(lattice).map_err(|e| fail(Implication::CertificateReplay, e.to_string()))?;
    }
    let planar = planarity.map(|p| p.holds());

    if interval_connected == Some(true) && !rank_connected {
        return Err(fail(Implication::Theorem2, "interval-connected but not rank-connected".into()));
    }
    if planar == Some(true) && !dismantlable {
        return Err(fail(Implication::PlanarDismantlable, format!("{dismantling:?}")));
    }

    let construction = if rank_connected && dismantlable {
        let labels = construct_el(lattice).map_err(|e| fail(Implication::Theorem1, e.to_string()))?;
        let verdict = verify_el(lattice, &labels).map_err(|e| fail(Implication::Theorem1, e.to_string()))?;
        if !verdict.ok {
            return Err(fail(Implication::Theorem1, format!("{:?}", verdict.violation)));
        }
        Construction::Verified
    } else {
        Construction::Declined
    };

    let search = if ranked && lattice.covers().len() <= SEARCH_COVER_LIMIT {
        match search_el(lattice, lattice.covers().len()).expect("search preconditions checked") {
            SearchOutcome::Found(labels) => {
                let verdict = verify_el(lattice, &labels).expect("search labels every cover");
                if !verdict.ok {
                    return Err(fail(Implication::OracleAgreement, "search returned a rejected labeling".into()));
                }
                Some(true)
            }
            SearchOutcome::NotFound { .. } => Some(false),
        }
    } else {
        None
    };
    if construction == Construction::Verified && search == Some(false) {
        return Err(fail(Implication::OracleAgreement, "constructed a labeling the search missed".into()));
    }

    let (admissible, gamma_is_el) = match is_admissible(lattice) {
        Ok(Admissibility::Admissible { omega }) => {
            let gamma = gamma_labeling(lattice, &omega);
            (Some(true), verify_el(lattice, &gamma).ok().map(|v| v.ok))
        }
        Ok(Admissibility::NotAdmissible { .. }) => (Some(false), None),
        Err(_) => (None, None),
    };
    let record = LatticeRecord {
        index,
        n: lattice.len(),
        covers: lattice.covers().to_vec(),
        ranked,
        rank_connected,
        interval_connected,
        dismantlable,
        planar,
        upper_semimodular: is_upper_semimodular(lattice).holds(),
        lower_semimodular: is_lower_semimodular(lattice).holds(),
        construct_el: construction,
        search_el: search,
        admissible,
        gamma_is_el,
    };
    if ranked && admissible == Some(true) && record.el_shellable() == Some(false) {
        return Err(fail(Implication::AdmissibleShellable, "admissible but not EL-shellable".into()));
    }
    Ok(record)
}
