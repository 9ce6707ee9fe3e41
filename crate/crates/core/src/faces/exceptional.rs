use super::{edge_set, is_chain_edge, is_order_edge, EdgePair, TriangleTriple};
use crate::error::{Error, Result};
use crate::poset::{Poset, RankDecomposition};
use crate::set::ElementSet;
use crate::PolytopeKind;

pub(super) fn e_star_o(poset: &Poset, o_edges: &[EdgePair]) -> Vec<EdgePair> {
    o_edges
        .iter()
        .filter(|e| {
            let [i, j] = e.endpoints;
            !is_chain_edge(poset, poset.maximal_elements(i), poset.maximal_elements(j))
        })
        .copied()
        .collect()
}

pub(super) fn e_star_c(poset: &Poset, c_edges: &[EdgePair]) -> Vec<EdgePair> {
    c_edges
        .iter()
        .filter(|e| {
            let [a, b] = e.endpoints;
            !is_order_edge(poset, poset.down_closure(a), poset.down_closure(b))
        })
        .copied()
        .collect()
}

pub(super) fn delta_star(triangles: &[TriangleTriple], e_star: &[EdgePair]) -> Vec<TriangleTriple> {
    let exceptional = edge_set(e_star);
    triangles
        .iter()
        .filter(|t| t.sides().iter().any(|s| exceptional.contains(s)))
        .copied()
        .collect()
}

pub(super) fn e_star_o_characterized(
    poset: &Poset,
    ideals: &[ElementSet],
    levels: Option<&RankDecomposition>,
) -> Result<Vec<EdgePair>> {
    if levels.is_none() {
        return Err(Error::NotMaximalRanked);
    }
    let mut out: Vec<EdgePair> = ideals
        .iter()
        .filter(|&&j| poset.is_connected(j) && poset.maximal_elements(j).len() >= 2)
        .map(|&j| EdgePair::new(PolytopeKind::Order, ElementSet::EMPTY, j))
        .collect();
    out.sort_unstable();
    Ok(out)
}

pub(super) fn e_star_c_characterized(levels: Option<&RankDecomposition>) -> Result<Vec<EdgePair>> {
    let levels = levels.ok_or(Error::NotMaximalRanked)?;
    let mut out = Vec::new();
    for l in 1..=levels.rank() {
        let below = levels.level(l - 1);
        for b in levels.level(l).subsets().filter(|b| b.len() >= 2) {
            out.push(EdgePair::new(PolytopeKind::Chain, below, b));
        }
    }
    out.sort_unstable();
    Ok(out)
}
