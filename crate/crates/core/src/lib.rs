//! Finite lattices given by cover relations, with decision procedures for
//! rankedness, rank- and interval-connectivity, dismantlability,
//! planarity, semimodularity, EL-shellability and admissibility. Every
//! verdict carries a certificate or a counterexample that can be replayed.

pub mod admissibility;
pub mod canonical;
pub mod corpus;
pub mod error;
pub mod interval;
pub mod lattice;
pub mod predicates;
pub mod rank;
pub mod shelling;

pub use canonical::{canonical_form, CanonicalForm};
pub use error::{BoundKind, LatticeError, ReplayError, SizeLimitExceeded};
pub use interval::{delete_elements, hasse_subgraph, Deletion, Embedded, HasseSubgraph, IntervalView};
pub use lattice::{Elem, Lattice};
pub use rank::{NotRanked, RankFunction};
pub use shelling::{EdgeLabeling, Label, ShellingError};
