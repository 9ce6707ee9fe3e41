use serde::Serialize;

use super::{FaceAnalysis, TriangleTriple};
use crate::error::{Error, Result};
use crate::PolytopeKind;

/// Which branch of the injection `Δ*_O → Δ*_C` a triple falls into.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum PhiCase {
    /// `|max(J)| ≥ 2`: image `{P_{j-1}, max(J), max(K)}`.
    WideMiddle,
    /// `|max(J)| = 1`, `k - j ≠ 1`: image `{P_{k-1}, max(J), max(K)}`.
    NarrowMiddleFar,
    /// `|max(J)| = 1`, `k - j = 1`: image `{P_{k-1}, min(K \ J), max(K)}`.
    NarrowMiddleAdjacent,
}

impl FaceAnalysis<'_> {
    /// Maps a triangle `{∅, J, K}` of `Δ*_O` to a triangle of `Δ*_C`.
    ///
    /// Requires a maximal ranked poset. `j` and `k` are the levels holding
    /// `max(J)` and `max(K)`.
    pub fn phi(&self, t: &TriangleTriple) -> Result<TriangleTriple> {
        self.phi_with_case(t).map(|(image, _)| image)
    }

    pub fn phi_with_case(&self, t: &TriangleTriple) -> Result<(TriangleTriple, PhiCase)> {
        let levels = self.maximal_ranked_levels().ok_or(Error::NotMaximalRanked)?;
        if !self.in_delta_star_o(t) {
            return Err(Error::Precondition(format!(
                "{:?} is not in the exceptional order-triangle set",
                t.members
            )));
        }
        let poset = self.poset();
        let [bottom, middle, top] = t.members;
        if !bottom.is_empty() {
            return Err(Error::Precondition(format!(
                "exceptional order triangle {:?} does not start at the empty ideal",
                t.members
            )));
        }
        let max_j = poset.maximal_elements(middle);
        let max_k = poset.maximal_elements(top);
        let level_of = |s| {
            levels.common_level(s).ok_or_else(|| {
                Error::Precondition(format!("maximal elements {s} span several levels"))
            })
        };
        let j = level_of(max_j)?;
        let k = level_of(max_k)?;
        if j > k {
            return Err(Error::Precondition(format!("level order violated: j={j} > k={k}")));
        }

        let below = |level: usize| {
            level.checked_sub(1).map(|l| levels.level(l)).ok_or_else(|| {
                Error::Precondition(format!("{:?} has no level below level 0", t.members))
            })
        };
        let (first, case) = if max_j.len() >= 2 {
            (below(j)?, PhiCase::WideMiddle)
        } else if k - j != 1 {
            (below(k)?, PhiCase::NarrowMiddleFar)
        } else {
            (below(k)?, PhiCase::NarrowMiddleAdjacent)
        };
        let second = match case {
            PhiCase::NarrowMiddleAdjacent => poset.minimal_elements(top.difference(middle)),
            _ => max_j,
        };
        Ok((TriangleTriple::new(PolytopeKind::Chain, first, second, max_k), case))
    }
}
