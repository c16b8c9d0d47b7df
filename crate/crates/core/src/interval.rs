//! Intervals, element deletion and induced Hasse subgraphs.

use std::collections::BTreeSet;

use fixedbitset::FixedBitSet;
use serde::Serialize;

use crate::error::LatticeError;
use crate::lattice::{Elem, Lattice};

/// A lattice carried together with the ids its elements have in some larger
/// base lattice.
#[derive(Clone, Debug)]
pub struct Embedded {
    pub lattice: Lattice,
    /// `to_base[local] = base id`.
    pub to_base: Vec<Elem>,
}

impl Embedded {
    /// Builds a lattice on `members` (base ids, sorted) from cover pairs in
    /// base ids.
    pub fn from_base_covers(
        members: &[Elem],
        covers: &[(Elem, Elem)],
    ) -> Result<Embedded, LatticeError> {
        let local = |e: Elem| members.binary_search(&e).expect("cover end is a member");
        let local_covers: Vec<(Elem, Elem)> =
            covers.iter().map(|&(a, b)| (local(a), local(b))).collect();
        let lattice = Lattice::new(members.len(), &local_covers)?;
        Ok(Embedded { lattice, to_base: members.to_vec() })
    }

    pub fn from_base(&self, base: Elem) -> Option<Elem> {
        self.to_base.binary_search(&base).ok()
    }
}

/// `[lo, hi] = {z | lo <= z <= hi}` inside a base lattice.
#[derive(Clone, Debug)]
pub struct IntervalView<'a> {
    base: &'a Lattice,
    lo: Elem,
    hi: Elem,
    members: Vec<Elem>,
}

impl<'a> IntervalView<'a> {
    pub fn base(&self) -> &'a Lattice {
        self.base
    }

    pub fn lo(&self) -> Elem {
        self.lo
    }

    pub fn hi(&self) -> Elem {
        self.hi
    }

    /// Members in increasing id order.
    pub fn members(&self) -> &[Elem] {
        &self.members
    }

    pub fn contains(&self, z: Elem) -> bool {
        self.members.binary_search(&z).is_ok()
    }

    /// Covers of the base lattice with both ends in the interval. Intervals
    /// are convex, so these are exactly the covers of the interval itself.
    pub fn covers(&self) -> Vec<(Elem, Elem)> {
        self.base
            .covers()
            .iter()
            .copied()
            .filter(|&(a, b)| self.contains(a) && self.contains(b))
            .collect()
    }

    pub fn to_lattice(&self) -> Result<Embedded, LatticeError> {
        Embedded::from_base_covers(&self.members, &self.covers())
    }
}

impl Lattice {
    pub fn interval(&self, x: Elem, y: Elem) -> Result<IntervalView<'_>, LatticeError> {
        if !self.leq(x, y) {
            return Err(LatticeError::NotComparable(x, y));
        }
        let mut set = self.up_set(x).clone();
        set.intersect_with(self.down_set(y));
        Ok(IntervalView { base: self, lo: x, hi: y, members: set.ones().collect() })
    }
}

/// The subposet left after deleting elements, with its recomputed covers.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Deletion {
    pub survivors: Vec<Elem>,
    /// Covers of the induced subposet, in base ids.
    pub covers: Vec<(Elem, Elem)>,
    /// Whether the survivors are closed under the base lattice's meet and join.
    pub is_sublattice: bool,
}

impl Deletion {
    pub fn to_lattice(&self) -> Result<Embedded, LatticeError> {
        Embedded::from_base_covers(&self.survivors, &self.covers)
    }
}

/// Removes `removed` and recomputes the cover relation of what is left.
/// Deleting elements can create new covers between survivors.
pub fn delete_elements(lattice: &Lattice, removed: &[Elem]) -> Deletion {
    let removed: BTreeSet<Elem> = removed.iter().copied().collect();
    let survivors: Vec<Elem> = lattice.elements().filter(|e| !removed.contains(e)).collect();
    let mut alive = FixedBitSet::with_capacity(lattice.len());
    for &s in &survivors {
        alive.insert(s);
    }

    let mut covers = Vec::new();
    for &a in &survivors {
        for &b in &survivors {
            if !lattice.lt(a, b) {
                continue;
            }
            // strictly between a and b, and alive
            let mut between = lattice.up_set(a).clone();
            between.intersect_with(lattice.down_set(b));
            between.intersect_with(&alive);
            if between.count_ones(..) == 2 {
                covers.push((a, b));
            }
        }
    }
    covers.sort_unstable();

    let is_sublattice = survivors.iter().all(|&x| {
        survivors
            .iter()
            .all(|&y| alive.contains(lattice.meet(x, y)) && alive.contains(lattice.join(x, y)))
    });

    Deletion { survivors, covers, is_sublattice }
}

/// The part of the Hasse diagram induced by a set of elements, viewed as an
/// undirected graph.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HasseSubgraph {
    pub vertices: Vec<Elem>,
    pub edges: Vec<(Elem, Elem)>,
    /// Connected components, each sorted, ordered by smallest member.
    pub components: Vec<Vec<Elem>>,
}

impl HasseSubgraph {
    /// The empty graph counts as connected.
    pub fn is_connected(&self) -> bool {
        self.components.len() <= 1
    }
}

pub fn hasse_subgraph(lattice: &Lattice, subset: &[Elem]) -> HasseSubgraph {
    let vertices: Vec<Elem> = subset.iter().copied().collect::<BTreeSet<_>>().into_iter().collect();
    let index = |e: Elem| vertices.binary_search(&e).ok();
    let edges: Vec<(Elem, Elem)> = lattice
        .covers()
        .iter()
        .copied()
        .filter(|&(a, b)| index(a).is_some() && index(b).is_some())
        .collect();

    let mut parent: Vec<usize> = (0..vertices.len()).collect();
    fn find(parent: &mut [usize], mut i: usize) -> usize {
        while parent[i] != i {
            parent[i] = parent[parent[i]];
            i = parent[i];
        }
        i
    }
    for &(a, b) in &edges {
        let (ra, rb) = (find(&mut parent, index(a).unwrap()), find(&mut parent, index(b).unwrap()));
        if ra != rb {
            parent[ra.max(rb)] = ra.min(rb);
        }
    }
    let mut components: Vec<Vec<Elem>> = Vec::new();
    let mut slot = vec![usize::MAX; vertices.len()];
    for (i, &v) in vertices.iter().enumerate() {
        let root = find(&mut parent, i);
        if slot[root] == usize::MAX {
            slot[root] = components.len();
            components.push(Vec::new());
        }
        components[slot[root]].push(v);
    }

    HasseSubgraph { vertices, edges, components }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn diamond() -> Lattice {
        Lattice::from_covers(&[(0, 1), (0, 2), (1, 3), (2, 3)]).unwrap()
    }

    #[test]
    fn whole_and_point_intervals() {
        let l = diamond();
        assert_eq!(l.interval(0, 3).unwrap().members(), &[0, 1, 2, 3]);
        assert_eq!(l.interval(2, 2).unwrap().members(), &[2]);
        assert_eq!(l.interval(1, 2).unwrap_err(), LatticeError::NotComparable(1, 2));
        assert_eq!(l.interval(3, 0).unwrap_err(), LatticeError::NotComparable(3, 0));
    }

    #[test]
    fn interval_is_a_lattice() {
        let l = diamond();
        let sub = l.interval(1, 3).unwrap().to_lattice().unwrap();
        assert_eq!(sub.lattice.len(), 2);
        assert_eq!(sub.to_base, vec![1, 3]);
        assert_eq!(sub.from_base(3), Some(1));
    }

    #[test]
    fn delete_nothing() {
        let l = diamond();
        let d = delete_elements(&l, &[]);
        assert_eq!(d.covers, l.covers());
        assert!(d.is_sublattice);
    }

    #[test]
    fn delete_atom_of_diamond() {
        let l = diamond();
        let d = delete_elements(&l, &[1]);
        assert_eq!(d.survivors, vec![0, 2, 3]);
        assert_eq!(d.covers, vec![(0, 2), (2, 3)]);
        assert!(d.is_sublattice);
    }

    #[test]
    fn deletion_creates_covers() {
        let l = Lattice::from_covers(&[(0, 1), (1, 2), (2, 3)]).unwrap();
        let d = delete_elements(&l, &[1, 2]);
        assert_eq!(d.covers, vec![(0, 3)]);
    }

    #[test]
    fn hasse_components() {
        let l = diamond();
        let g = hasse_subgraph(&l, &[0, 3]);
        assert_eq!(g.components, vec![vec![0], vec![3]]);
        let g = hasse_subgraph(&l, &[1, 2]);
        assert_eq!(g.components.len(), 2);
        let g = hasse_subgraph(&l, &[0, 1, 2]);
        assert!(g.is_connected());
        assert_eq!(g.edges, vec![(0, 1), (0, 2)]);
    }
}
