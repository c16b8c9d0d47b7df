use fixedbitset::FixedBitSet;
use serde::Serialize;

use super::{EdgeLabeling, Label, ShellingError};
use crate::error::{LatticeError, ReplayError};
use crate::lattice::{Elem, Lattice};

/// Which of the two lexicographic conditions to enforce.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) enum Conditions {
    /// Exactly one weakly rising maximal chain per interval.
    UniqueRising,
    /// Unique rising chain, and it is lexicographically first.
    Full,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum ElViolation {
    NoRisingChain { x: Elem, y: Elem },
    MultipleRisingChains { x: Elem, y: Elem, first: Vec<Elem>, second: Vec<Elem> },
    /// The unique rising chain starts with `first_step`, but
    /// `f(x, competitor) <= f(x, first_step)`.
    NotLexFirst { x: Elem, y: Elem, first_step: Elem, competitor: Elem },
}

impl ElViolation {
    pub fn interval(&self) -> (Elem, Elem) {
        match *self {
            ElViolation::NoRisingChain { x, y }
            | ElViolation::MultipleRisingChains { x, y, .. }
            | ElViolation::NotLexFirst { x, y, .. } => (x, y),
        }
    }

    /// Re-derives the violation by enumerating every maximal chain of the
    /// interval, without the pruned search the verifier uses.
    pub fn replay(&self, lattice: &Lattice, labels: &EdgeLabeling) -> Result<(), ReplayError> {
        let (x, y) = self.interval();
        if x >= lattice.len() || y >= lattice.len() || !lattice.lt(x, y) {
            return Err(ReplayError(format!("[{x}, {y}] is not a proper interval")));
        }
        let label = |a: Elem, b: Elem| {
            labels.get(a, b).ok_or_else(|| ReplayError(format!("({a}, {b}) has no label")))
        };
        let is_rising = |chain: &[Elem]| -> Result<bool, ReplayError> {
            let mut prev: Option<Label> = None;
            for w in chain.windows(2) {
                let l = label(w[0], w[1])?;
                if prev.is_some_and(|p| l < p) {
                    return Ok(false);
                }
                prev = Some(l);
            }
            Ok(true)
        };
        let all = maximal_chains(lattice, x, y);
        let mut rising = Vec::new();
        for chain in &all {
            if is_rising(chain)? {
                rising.push(chain.clone());
            }
        }
        match self {
            ElViolation::NoRisingChain { .. } => {
                if !rising.is_empty() {
                    return Err(ReplayError(format!("[{x}, {y}] has a rising chain")));
                }
            }
            ElViolation::MultipleRisingChains { first, second, .. } => {
                if first == second || !rising.contains(first) || !rising.contains(second) {
                    return Err(ReplayError(format!(
                        "{first:?} and {second:?} are not two distinct rising maximal chains"
                    )));
                }
            }
            &ElViolation::NotLexFirst { first_step, competitor, .. } => {
                if rising.len() != 1 || rising[0][1] != first_step {
                    return Err(ReplayError(format!(
                        "[{x}, {y}] has no unique rising chain starting at {first_step}"
                    )));
                }
                if competitor == first_step
                    || !lattice.is_cover(x, competitor)
                    || !lattice.leq(competitor, y)
                    || label(x, competitor)? > label(x, first_step)?
                {
                    return Err(ReplayError(format!("{competitor} does not beat {first_step}")));
                }
            }
        }
        Ok(())
    }
}

/// Outcome of [`verify_el`]; `violation` is the first failure in
/// `(rank(x), x, y)` order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ElVerdict {
    pub ok: bool,
    pub violation: Option<ElViolation>,
}

impl ElVerdict {
    fn from_violation(violation: Option<ElViolation>) -> Self {
        ElVerdict { ok: violation.is_none(), violation }
    }
}

/// Checks both lexicographic conditions over every interval.
pub fn verify_el(lattice: &Lattice, labels: &EdgeLabeling) -> Result<ElVerdict, ShellingError> {
    labels.check_total(lattice)?;
    lattice.rank_function()?;
    Ok(ElVerdict::from_violation(first_violation(lattice, labels, Conditions::Full, None)))
}

/// All maximal chains of `[x, y]` with weakly increasing labels, found
/// depth-first taking covers in label order.
pub fn rising_chains(
    lattice: &Lattice,
    labels: &EdgeLabeling,
    x: Elem,
    y: Elem,
) -> Result<Vec<Vec<Elem>>, ShellingError> {
    let interval = lattice.interval(x, y)?;
    for (a, b) in interval.covers() {
        if labels.get(a, b).is_none() {
            return Err(ShellingError::PartialLabeling(a, b));
        }
    }
    let mut within = FixedBitSet::with_capacity(lattice.len());
    for &m in interval.members() {
        within.insert(m);
    }
    let mut chains = Vec::new();
    let mut path = vec![x];
    walk_rising(lattice, labels, &within, &mut path, None, &mut |path| {
        if *path.last().unwrap() == y {
            chains.push(path.to_vec());
        }
    });
    Ok(chains)
}

fn walk_rising(
    lattice: &Lattice,
    labels: &EdgeLabeling,
    within: &FixedBitSet,
    path: &mut Vec<Elem>,
    last: Option<Label>,
    visit: &mut impl FnMut(&[Elem]),
) {
    visit(path);
    let v = *path.last().unwrap();
    let mut next: Vec<(Label, Elem)> = lattice
        .upper_covers(v)
        .iter()
        .filter(|&&c| within.contains(c))
        .map(|&c| (labels.get(v, c).expect("labeling is total"), c))
        .collect();
    next.sort_unstable();
    for (label, c) in next {
        if last.is_some_and(|l| label < l) {
            continue;
        }
        path.push(c);
        walk_rising(lattice, labels, within, path, Some(label), visit);
        path.pop();
    }
}

/// First violated interval in `(height(x), x, y)` order. With `containing`,
/// only intervals `[x, y]` with `x <= containing <= y` are examined.
/// Assumes `labels` is total.
pub(crate) fn first_violation(
    lattice: &Lattice,
    labels: &EdgeLabeling,
    conditions: Conditions,
    containing: Option<Elem>,
) -> Option<ElViolation> {
    let mut lows: Vec<Elem> = match containing {
        Some(c) => lattice.down_set(c).ones().collect(),
        None => lattice.elements().collect(),
    };
    lows.sort_by_key(|&x| (lattice.height(x), x));

    let mut everything = FixedBitSet::with_capacity(lattice.len());
    everything.insert_range(..);
    for x in lows {
        let mut count = vec![0usize; lattice.len()];
        let mut found: Vec<Vec<Vec<Elem>>> = vec![Vec::new(); lattice.len()];
        let mut path = vec![x];
        walk_rising(lattice, labels, &everything, &mut path, None, &mut |path| {
            let end = *path.last().unwrap();
            count[end] += 1;
            if found[end].len() < 2 {
                found[end].push(path.to_vec());
            }
        });

        for y in lattice.up_set(x).ones() {
            if y == x || containing.is_some_and(|c| !lattice.leq(c, y)) {
                continue;
            }
            match count[y] {
                0 => return Some(ElViolation::NoRisingChain { x, y }),
                1 => {}
                _ => {
                    let mut chains = std::mem::take(&mut found[y]).into_iter();
                    return Some(ElViolation::MultipleRisingChains {
                        x,
                        y,
                        first: chains.next().unwrap(),
                        second: chains.next().unwrap(),
                    });
                }
            }
            if conditions == Conditions::Full {
                let first_step = found[y][0][1];
                let rising = labels.get(x, first_step).expect("labeling is total");
                if let Some(&competitor) = lattice.upper_covers(x).iter().find(|&&z| {
                    z != first_step
                        && lattice.leq(z, y)
                        && labels.get(x, z).expect("labeling is total") <= rising
                }) {
                    return Some(ElViolation::NotLexFirst { x, y, first_step, competitor });
                }
            }
        }
    }
    None
}

/// Every maximal chain of `[x, y]`, unpruned.
fn maximal_chains(lattice: &Lattice, x: Elem, y: Elem) -> Vec<Vec<Elem>> {
    fn walk(lattice: &Lattice, y: Elem, path: &mut Vec<Elem>, out: &mut Vec<Vec<Elem>>) {
        let v = *path.last().unwrap();
        if v == y {
            out.push(path.clone());
            return;
        }
        for &c in lattice.upper_covers(v) {
            if lattice.leq(c, y) {
                path.push(c);
                walk(lattice, y, path, out);
                path.pop();
            }
        }
    }
    let mut out = Vec::new();
    walk(lattice, y, &mut vec![x], &mut out);
    out
}

impl From<LatticeError> for ReplayError {
    fn from(err: LatticeError) -> Self {
        ReplayError(err.to_string())
    }
}
