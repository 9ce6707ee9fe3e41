//! Faces of order polytopes `O(P)` and chain polytopes `C(P)` of finite
//! posets.
//!
//! The [`faces`] module enumerates edges and triangular 2-faces from the
//! combinatorial characterizations in terms of ideals and antichains, and
//! compares the two triangle counts on maximal ranked posets. The
//! [`oracle`] module decides the same questions geometrically, with exact
//! integer arithmetic over the H- and V-descriptions, and serves as ground
//! truth in [`verify`].

pub mod error;
pub mod faces;
pub mod io;
pub mod oracle;
pub mod poset;
pub mod report;
pub mod set;
pub mod sweep;
pub mod verify;

use serde::Serialize;

pub use error::{Error, Result};
pub use faces::{EdgePair, FaceAnalysis, PhiCase, TriangleTriple};
pub use poset::{Poset, RankDecomposition, XWitness, DEFAULT_ENUM_CAP};
pub use report::{compare, ComparisonReport};
pub use set::ElementSet;

/// Which of the two polytopes of a poset.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum PolytopeKind {
    /// `O(P)`, vertices are indicator vectors of ideals.
    Order,
    /// `C(P)`, vertices are indicator vectors of antichains.
    Chain,
}
