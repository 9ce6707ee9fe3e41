//! Edges and triangular 2-faces of `O(P)` and `C(P)` from the combinatorial
//! characterizations: an ideal pair is an edge iff nested with connected
//! difference, an antichain pair iff the symmetric difference is connected,
//! and triangles are exactly the triangles of those 1-skeleta.

mod exceptional;
mod formula;
mod phi;

use std::collections::HashSet;

use serde::Serialize;

use crate::error::Result;
use crate::poset::{Poset, RankDecomposition, DEFAULT_ENUM_CAP};
use crate::set::ElementSet;
use crate::PolytopeKind;

pub use formula::{binomial, excess_formula, excess_formula_for_sizes};
pub use phi::PhiCase;

/// An unordered pair of vertices of one polytope, stored sorted.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct EdgePair {
    pub kind: PolytopeKind,
    pub endpoints: [ElementSet; 2],
}

impl EdgePair {
    pub fn new(kind: PolytopeKind, u: ElementSet, v: ElementSet) -> Self {
        let endpoints = if u <= v { [u, v] } else { [v, u] };
        EdgePair { kind, endpoints }
    }
}

/// An unordered triple of vertices, stored sorted. For order-polytope
/// triangles the sorted order is the inclusion chain `I ⊂ J ⊂ K`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct TriangleTriple {
    pub kind: PolytopeKind,
    pub members: [ElementSet; 3],
}

impl TriangleTriple {
    pub fn new(kind: PolytopeKind, a: ElementSet, b: ElementSet, c: ElementSet) -> Self {
        let mut members = [a, b, c];
        members.sort_unstable();
        TriangleTriple { kind, members }
    }

    pub fn is_pairwise_distinct(&self) -> bool {
        let [a, b, c] = self.members;
        a != b && b != c
    }

    pub fn sides(&self) -> [EdgePair; 3] {
        let [a, b, c] = self.members;
        [
            EdgePair::new(self.kind, a, b),
            EdgePair::new(self.kind, b, c),
            EdgePair::new(self.kind, a, c),
        ]
    }
}

/// Graph on a sorted vertex list with edges stored as upward adjacency.
struct Skeleton {
    kind: PolytopeKind,
    vertices: Vec<ElementSet>,
    upper: Vec<Vec<usize>>,
}

impl Skeleton {
    fn build(kind: PolytopeKind, vertices: Vec<ElementSet>, adjacent: impl Fn(ElementSet, ElementSet) -> bool) -> Self {
        let upper = (0..vertices.len())
            .map(|i| {
                (i + 1..vertices.len())
                    .filter(|&j| adjacent(vertices[i], vertices[j]))
                    .collect()
            })
            .collect();
        Skeleton { kind, vertices, upper }
    }

    fn edges(&self) -> Vec<EdgePair> {
        let mut out = Vec::new();
        for (i, up) in self.upper.iter().enumerate() {
            for &j in up {
                out.push(EdgePair::new(self.kind, self.vertices[i], self.vertices[j]));
            }
        }
        out
    }

    fn triangles(&self) -> Vec<TriangleTriple> {
        let mut out = Vec::new();
        for (i, up_i) in self.upper.iter().enumerate() {
            for &j in up_i {
                for &k in &self.upper[j] {
                    if up_i.binary_search(&k).is_ok() {
                        out.push(TriangleTriple::new(
                            self.kind,
                            self.vertices[i],
                            self.vertices[j],
                            self.vertices[k],
                        ));
                    }
                }
            }
        }
        out.sort_unstable();
        out
    }
}

/// Whether two distinct ideals span an edge of `O(P)`.
pub fn is_order_edge(poset: &Poset, i: ElementSet, j: ElementSet) -> bool {
    let (lo, hi) = if i <= j { (i, j) } else { (j, i) };
    lo.is_proper_subset(hi) && poset.is_connected(hi.difference(lo))
}

/// Whether two distinct antichains span an edge of `C(P)`.
pub fn is_chain_edge(poset: &Poset, a: ElementSet, b: ElementSet) -> bool {
    a != b && poset.is_connected(a.symmetric_difference(b))
}

/// Every edge and triangle of both 1-skeleta, plus the exceptional sets.
///
/// Built once per poset; all lists are canonically sorted.
#[derive(Clone, Debug)]
pub struct FaceAnalysis<'p> {
    poset: &'p Poset,
    ideals: Vec<ElementSet>,
    antichains: Vec<ElementSet>,
    o_edges: Vec<EdgePair>,
    c_edges: Vec<EdgePair>,
    o_triangles: Vec<TriangleTriple>,
    c_triangles: Vec<TriangleTriple>,
    e_star_o: Vec<EdgePair>,
    e_star_c: Vec<EdgePair>,
    delta_star_o: Vec<TriangleTriple>,
    delta_star_c: Vec<TriangleTriple>,
    levels: Option<RankDecomposition>,
}

impl<'p> FaceAnalysis<'p> {
    pub fn new(poset: &'p Poset) -> Result<Self> {
        Self::with_cap(poset, DEFAULT_ENUM_CAP)
    }

    pub fn with_cap(poset: &'p Poset, cap: usize) -> Result<Self> {
        let ideals = poset.ideals_capped(cap)?;
        let antichains = poset.antichains_capped(cap)?;

        let o_skel = Skeleton::build(PolytopeKind::Order, ideals.clone(), |i, j| {
            is_order_edge(poset, i, j)
        });
        let c_skel = Skeleton::build(PolytopeKind::Chain, antichains.clone(), |a, b| {
            is_chain_edge(poset, a, b)
        });
        let o_edges = o_skel.edges();
        let c_edges = c_skel.edges();
        let o_triangles = o_skel.triangles();
        let c_triangles = c_skel.triangles();

        let e_star_o = exceptional::e_star_o(poset, &o_edges);
        let e_star_c = exceptional::e_star_c(poset, &c_edges);
        let delta_star_o = exceptional::delta_star(&o_triangles, &e_star_o);
        let delta_star_c = exceptional::delta_star(&c_triangles, &e_star_c);

        Ok(FaceAnalysis {
            poset,
            ideals,
            antichains,
            o_edges,
            c_edges,
            o_triangles,
            c_triangles,
            e_star_o,
            e_star_c,
            delta_star_o,
            delta_star_c,
            levels: poset.maximal_ranked_levels(),
        })
    }

    pub fn poset(&self) -> &'p Poset {
        self.poset
    }

    pub fn ideals(&self) -> &[ElementSet] {
        &self.ideals
    }

    pub fn antichains(&self) -> &[ElementSet] {
        &self.antichains
    }

    pub fn o_edges(&self) -> &[EdgePair] {
        &self.o_edges
    }

    pub fn c_edges(&self) -> &[EdgePair] {
        &self.c_edges
    }

    pub fn o_triangles(&self) -> &[TriangleTriple] {
        &self.o_triangles
    }

    pub fn c_triangles(&self) -> &[TriangleTriple] {
        &self.c_triangles
    }

    /// Edges of `O(P)` whose image under `I ↦ max(I)` is not an edge of `C(P)`.
    pub fn e_star_o(&self) -> &[EdgePair] {
        &self.e_star_o
    }

    /// Edges of `C(P)` whose image under `A ↦ ⟨A⟩` is not an edge of `O(P)`.
    pub fn e_star_c(&self) -> &[EdgePair] {
        &self.e_star_c
    }

    pub fn delta_star_o(&self) -> &[TriangleTriple] {
        &self.delta_star_o
    }

    pub fn delta_star_c(&self) -> &[TriangleTriple] {
        &self.delta_star_c
    }

    /// Rank levels, present only for maximal ranked posets.
    pub fn maximal_ranked_levels(&self) -> Option<&RankDecomposition> {
        self.levels.as_ref()
    }

    /// `E*_O` from its closed-form description on maximal ranked posets:
    /// pairs `{∅, J}` with `J` connected and `|max(J)| ≥ 2`.
    pub fn e_star_o_characterized(&self) -> Result<Vec<EdgePair>> {
        exceptional::e_star_o_characterized(self.poset, &self.ideals, self.levels.as_ref())
    }

    /// `E*_C` from its closed-form description on maximal ranked posets:
    /// pairs `{P_{ℓ-1}, B}` with `B ⊆ P_ℓ` and `|B| ≥ 2`.
    pub fn e_star_c_characterized(&self) -> Result<Vec<EdgePair>> {
        exceptional::e_star_c_characterized(self.levels.as_ref())
    }

    pub fn contains_c_triangle(&self, t: &TriangleTriple) -> bool {
        t.kind == PolytopeKind::Chain && self.c_triangles.binary_search(t).is_ok()
    }

    pub fn in_delta_star_o(&self, t: &TriangleTriple) -> bool {
        t.kind == PolytopeKind::Order && self.delta_star_o.binary_search(t).is_ok()
    }

    pub fn in_delta_star_c(&self, t: &TriangleTriple) -> bool {
        t.kind == PolytopeKind::Chain && self.delta_star_c.binary_search(t).is_ok()
    }

    /// Chain-polytope triangles `{P_{s-t}, P_{s-1}, P_s}` with `s ≥ 2`,
    /// `2 ≤ t ≤ s` and both outer levels of size at least two. Each one is
    /// in `Δ*_C` but never an image of [`FaceAnalysis::phi`].
    pub fn unmatched_level_triples(&self) -> Vec<TriangleTriple> {
        let Some(levels) = &self.levels else {
            return Vec::new();
        };
        let mut out = Vec::new();
        for s in 2..=levels.rank() {
            if levels.level(s).len() < 2 {
                continue;
            }
            for t in 2..=s {
                if levels.level(s - t).len() < 2 {
                    continue;
                }
                out.push(TriangleTriple::new(
                    PolytopeKind::Chain,
                    levels.level(s - t),
                    levels.level(s - 1),
                    levels.level(s),
                ));
            }
        }
        out
    }
}

/// All edges of `O(P)`.
pub fn o_edges(poset: &Poset) -> Result<Vec<EdgePair>> {
    Ok(FaceAnalysis::new(poset)?.o_edges)
}

/// All edges of `C(P)`.
pub fn c_edges(poset: &Poset) -> Result<Vec<EdgePair>> {
    Ok(FaceAnalysis::new(poset)?.c_edges)
}

/// All triangular 2-faces of `O(P)`.
pub fn o_triangles(poset: &Poset) -> Result<Vec<TriangleTriple>> {
    Ok(FaceAnalysis::new(poset)?.o_triangles)
}

/// All triangular 2-faces of `C(P)`.
pub fn c_triangles(poset: &Poset) -> Result<Vec<TriangleTriple>> {
    Ok(FaceAnalysis::new(poset)?.c_triangles)
}

pub(crate) fn edge_set(edges: &[EdgePair]) -> HashSet<EdgePair> {
    edges.iter().copied().collect()
}
