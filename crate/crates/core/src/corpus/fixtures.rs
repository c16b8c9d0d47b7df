//! The four lattices of Figure 1, decoded from the picture coordinates.
//! Elements are numbered bottom to top and left to right within a rank.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use super::Property;
use crate::lattice::{Elem, Lattice};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum FixtureName {
    F1a,
    F1b,
    F1c,
    F1d,
}

impl FixtureName {
    pub const ALL: [FixtureName; 4] =
        [FixtureName::F1a, FixtureName::F1b, FixtureName::F1c, FixtureName::F1d];
}

impl fmt::Display for FixtureName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

impl FromStr for FixtureName {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        FixtureName::ALL
            .into_iter()
            .find(|name| name.to_string().eq_ignore_ascii_case(s))
            .ok_or_else(|| format!("unknown fixture {s:?}; expected one of F1a, F1b, F1c, F1d"))
    }
}

#[derive(Clone, Debug)]
pub struct Fixture {
    pub name: FixtureName,
    pub lattice: Lattice,
    pub names: Vec<String>,
    /// Properties stated for the lattice, with their expected verdicts.
    pub claims: Vec<(Property, bool)>,
}

pub fn fixture(name: FixtureName) -> Fixture {
    let (covers, names, claims) = match name {
        FixtureName::F1a => f1a(),
        FixtureName::F1b => (
            vec![
                (0, 1), (0, 2),
                (1, 3), (1, 4), (1, 5), (2, 5), (2, 6), (2, 7),
                (3, 8), (4, 8), (4, 9), (5, 9), (6, 9), (6, 10), (7, 10),
                (8, 11), (9, 11), (10, 11),
            ],
            (0..12).map(|i| i.to_string()).collect(),
            vec![
                (Property::Planar, true),
                (Property::RankConnected, true),
                (Property::ElShellable, true),
                (Property::Admissible, false),
            ],
        ),
        FixtureName::F1c => (
            vec![
                (0, 1), (0, 2),
                (1, 3), (1, 4), (2, 4), (2, 5),
                (3, 6), (4, 6), (5, 6), (5, 7), (5, 8),
                (6, 9), (7, 9), (7, 10), (8, 10),
                (9, 11), (10, 11),
            ],
            (0..12).map(|i| i.to_string()).collect(),
            vec![
                (Property::Planar, true),
                (Property::RankConnected, true),
                (Property::UpperSemimodular, false),
                (Property::LowerSemimodular, false),
            ],
        ),
        FixtureName::F1d => (
            vec![
                (0, 1), (0, 2), (0, 3),
                (1, 4), (1, 6), (2, 5), (2, 6), (3, 6), (3, 7),
                (4, 8), (5, 8), (6, 8), (7, 8),
            ],
            ["0̂", "a", "b", "c", "d", "e", "f", "g", "1̂"].map(String::from).to_vec(),
            vec![(Property::Dismantlable, true), (Property::Planar, false)],
        ),
    };
    let lattice = Lattice::new(names.len(), &covers).expect("fixture is a lattice");
    Fixture { name, lattice, names, claims }
}

type Parts = (Vec<(Elem, Elem)>, Vec<String>, Vec<(Property, bool)>);

/// Bottom, atoms `a0..a4`, `c0..c4`, `d0..d3`, top.
fn f1a() -> Parts {
    let a = |i: usize| 1 + i;
    let c = |i: usize| 6 + i;
    let d = |i: usize| 11 + i;
    let mut covers = Vec::new();
    for i in 0..5 {
        covers.push((0, a(i)));
        covers.push((a(i), c(i)));
    }
    for i in 1..5 {
        covers.push((a(i), c((i + 1) % 5)));
    }
    for i in 0..4 {
        covers.push((c(i), d(i)));
        covers.push((c(i + 1), d(i)));
        covers.push((d(i), 15));
    }
    let mut names = vec!["0̂".to_string()];
    names.extend((0..5).map(|i| format!("a{i}")));
    names.extend((0..5).map(|i| format!("c{i}")));
    names.extend((0..4).map(|i| format!("d{i}")));
    names.push("1̂".to_string());
    let claims = vec![
        (Property::RankConnected, true),
        (Property::IntervalConnected, false),
        (Property::Planar, false),
    ];
    (covers, names, claims)
}
