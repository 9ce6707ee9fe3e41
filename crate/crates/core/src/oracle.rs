//! Exact geometric face tests for `O(P)` and `C(P)`.
//!
//! Both polytopes come with complete V- and H-descriptions, so the smallest
//! face containing a vertex set is the set of vertices tight on every facet
//! that is tight on the whole set. No convex hull and no floating point.

use std::collections::HashMap;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::poset::{Poset, DEFAULT_ENUM_CAP};
use crate::set::ElementSet;
use crate::PolytopeKind;

/// An integer point; the vertices here are 0/1 indicator vectors `ρ(W)`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct LatticePoint {
    coords: Vec<i64>,
}

impl LatticePoint {
    pub fn new(coords: Vec<i64>) -> Self {
        LatticePoint { coords }
    }

    /// `ρ(W)`: coordinate `i` is 1 iff `i ∈ W`.
    pub fn indicator(d: usize, w: ElementSet) -> Self {
        LatticePoint {
            coords: (0..d).map(|i| i64::from(w.contains(i))).collect(),
        }
    }

    pub fn coords(&self) -> &[i64] {
        &self.coords
    }

    pub fn dim(&self) -> usize {
        self.coords.len()
    }
}

/// The inequality `normal · x ≤ rhs`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FacetInequality {
    pub normal: Vec<i64>,
    pub rhs: i64,
}

impl FacetInequality {
    pub fn value(&self, p: &LatticePoint) -> i64 {
        self.normal.iter().zip(&p.coords).map(|(a, x)| a * x).sum()
    }

    pub fn is_satisfied(&self, p: &LatticePoint) -> bool {
        self.value(p) <= self.rhs
    }

    pub fn is_tight(&self, p: &LatticePoint) -> bool {
        self.value(p) == self.rhs
    }

    fn unit(d: usize, i: usize, coeff: i64, rhs: i64) -> Self {
        let mut normal = vec![0; d];
        normal[i] = coeff;
        FacetInequality { normal, rhs }
    }
}

/// Bitset over facet indices.
#[derive(Clone, Debug, PartialEq, Eq)]
struct FacetMask(Vec<u64>);

impl FacetMask {
    fn empty(n: usize) -> Self {
        FacetMask(vec![0; n.div_ceil(64)])
    }

    fn full(n: usize) -> Self {
        let mut m = Self::empty(n);
        for i in 0..n {
            m.0[i / 64] |= 1 << (i % 64);
        }
        m
    }

    fn set(&mut self, i: usize) {
        self.0[i / 64] |= 1 << (i % 64);
    }

    fn intersect_with(&mut self, other: &FacetMask) {
        for (a, b) in self.0.iter_mut().zip(&other.0) {
            *a &= *b;
        }
    }

    fn is_subset_of(&self, other: &FacetMask) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a & !b == 0)
    }
}

/// Vertices and facets of `O(P)` or `C(P)`, with vertex-facet incidences.
#[derive(Clone, Debug)]
pub struct PolytopeModel {
    kind: PolytopeKind,
    d: usize,
    vertices: Vec<LatticePoint>,
    sources: Vec<ElementSet>,
    facets: Vec<FacetInequality>,
    tight: Vec<FacetMask>,
    index: HashMap<LatticePoint, usize>,
}

impl PolytopeModel {
    fn assemble(
        kind: PolytopeKind,
        d: usize,
        sources: Vec<ElementSet>,
        facets: Vec<FacetInequality>,
    ) -> Self {
        let vertices: Vec<_> = sources.iter().map(|&s| LatticePoint::indicator(d, s)).collect();
        let tight = vertices
            .iter()
            .map(|v| {
                let mut m = FacetMask::empty(facets.len());
                for (f, facet) in facets.iter().enumerate() {
                    if facet.is_tight(v) {
                        m.set(f);
                    }
                }
                m
            })
            .collect();
        let index = vertices.iter().cloned().enumerate().map(|(i, v)| (v, i)).collect();
        PolytopeModel {
            kind,
            d,
            vertices,
            sources,
            facets,
            tight,
            index,
        }
    }

    pub fn kind(&self) -> PolytopeKind {
        self.kind
    }

    pub fn dim(&self) -> usize {
        self.d
    }

    pub fn vertices(&self) -> &[LatticePoint] {
        &self.vertices
    }

    /// The ideal or antichain each vertex is the indicator vector of.
    pub fn sources(&self) -> &[ElementSet] {
        &self.sources
    }

    pub fn facets(&self) -> &[FacetInequality] {
        &self.facets
    }

    pub fn vertex_index(&self, p: &LatticePoint) -> Result<usize> {
        self.index
            .get(p)
            .copied()
            .ok_or_else(|| Error::NotAVertex(p.coords.clone()))
    }

    /// Every vertex satisfies every facet, and every facet is tight on
    /// some vertex.
    pub fn facets_are_supporting(&self) -> bool {
        self.facets.iter().all(|f| {
            let max = self.vertices.iter().map(|v| f.value(v)).max();
            max == Some(f.rhs) && f.normal.iter().any(|&a| a != 0)
        })
    }

    fn common_tight(&self, idx: &[usize]) -> FacetMask {
        let mut h = FacetMask::full(self.facets.len());
        for &i in idx {
            h.intersect_with(&self.tight[i]);
        }
        h
    }

    /// Indices of the vertices of the smallest face containing the given
    /// vertices, ascending.
    pub fn smallest_face_indices(&self, idx: &[usize]) -> Vec<usize> {
        let h = self.common_tight(idx);
        (0..self.vertices.len())
            .filter(|&v| h.is_subset_of(&self.tight[v]))
            .collect()
    }

    /// Whether the smallest face containing `idx` has no other vertices.
    /// Stops at the first extra vertex.
    fn spans_exact_face(&self, idx: &[usize]) -> bool {
        let h = self.common_tight(idx);
        (0..self.vertices.len())
            .all(|v| idx.contains(&v) || !h.is_subset_of(&self.tight[v]))
    }
}

/// `O(P)`: vertices `ρ(I)` for ideals, facets `-x_i ≤ 0` for maximal `i`,
/// `x_j ≤ 1` for minimal `j`, and `x_j - x_i ≤ 0` whenever `j` covers `i`.
pub fn order_polytope_model(poset: &Poset) -> Result<PolytopeModel> {
    let d = poset.len();
    let all = poset.elements();
    let mut facets = Vec::new();
    for i in poset.maximal_elements(all).iter() {
        facets.push(FacetInequality::unit(d, i, -1, 0));
    }
    for j in poset.minimal_elements(all).iter() {
        facets.push(FacetInequality::unit(d, j, 1, 1));
    }
    for &(i, j) in poset.covers() {
        let mut normal = vec![0; d];
        normal[j] = 1;
        normal[i] = -1;
        facets.push(FacetInequality { normal, rhs: 0 });
    }
    let ideals = poset.ideals_capped(DEFAULT_ENUM_CAP)?;
    Ok(PolytopeModel::assemble(PolytopeKind::Order, d, ideals, facets))
}

/// `C(P)`: vertices `ρ(A)` for antichains, facets `-x_i ≤ 0` for every `i`
/// and `Σ_{i ∈ C} x_i ≤ 1` for every maximal chain `C`.
pub fn chain_polytope_model(poset: &Poset) -> Result<PolytopeModel> {
    let d = poset.len();
    let mut facets: Vec<_> = (0..d).map(|i| FacetInequality::unit(d, i, -1, 0)).collect();
    for chain in poset.maximal_chains() {
        let mut normal = vec![0; d];
        for i in chain {
            normal[i] = 1;
        }
        facets.push(FacetInequality { normal, rhs: 1 });
    }
    let antichains = poset.antichains_capped(DEFAULT_ENUM_CAP)?;
    Ok(PolytopeModel::assemble(PolytopeKind::Chain, d, antichains, facets))
}

/// Vertices of the smallest face of `model` containing `points`.
pub fn smallest_face(model: &PolytopeModel, points: &[LatticePoint]) -> Result<Vec<LatticePoint>> {
    if points.is_empty() {
        return Err(Error::Precondition("smallest face of an empty set".into()));
    }
    let idx = points
        .iter()
        .map(|p| model.vertex_index(p))
        .collect::<Result<Vec<_>>>()?;
    Ok(model
        .smallest_face_indices(&idx)
        .into_iter()
        .map(|i| model.vertices[i].clone())
        .collect())
}

/// Dimension of the affine hull of `points`, by fraction-free integer
/// elimination on the difference vectors. Zero for a single point.
pub fn affine_rank(points: &[LatticePoint]) -> usize {
    let Some((base, rest)) = points.split_first() else {
        return 0;
    };
    let mut rows: Vec<Vec<i128>> = rest
        .iter()
        .map(|p| {
            p.coords
                .iter()
                .zip(&base.coords)
                .map(|(&a, &b)| i128::from(a) - i128::from(b))
                .collect()
        })
        .collect();
    let cols = base.dim();
    let mut rank = 0;
    for col in 0..cols {
        let Some(pivot) = (rank..rows.len()).find(|&r| rows[r][col] != 0) else {
            continue;
        };
        rows.swap(rank, pivot);
        let p = rows[rank][col];
        for r in rank + 1..rows.len() {
            let f = rows[r][col];
            if f == 0 {
                continue;
            }
            let (head, tail) = rows.split_at_mut(r);
            let pivot_row = &head[rank];
            let row = &mut tail[0];
            for c in col..cols {
                row[c] = row[c] * p - pivot_row[c] * f;
            }
            let g = row.iter().fold(0i128, |g, &x| gcd(g, x));
            if g > 1 {
                row.iter_mut().for_each(|x| *x /= g);
            }
        }
        rank += 1;
    }
    rank
}

fn gcd(a: i128, b: i128) -> i128 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

pub fn is_edge_geometric(model: &PolytopeModel, u: &LatticePoint, v: &LatticePoint) -> Result<bool> {
    let (iu, iv) = (model.vertex_index(u)?, model.vertex_index(v)?);
    if iu == iv {
        return Err(Error::Precondition("edge endpoints must differ".into()));
    }
    Ok(model.spans_exact_face(&[iu, iv]))
}

/// A triangular 2-face: the smallest face is exactly the three points and
/// they are affinely independent.
pub fn is_triangle_geometric(
    model: &PolytopeModel,
    u: &LatticePoint,
    v: &LatticePoint,
    w: &LatticePoint,
) -> Result<bool> {
    let idx = [model.vertex_index(u)?, model.vertex_index(v)?, model.vertex_index(w)?];
    if idx[0] == idx[1] || idx[1] == idx[2] || idx[0] == idx[2] {
        return Err(Error::Precondition("triangle vertices must be distinct".into()));
    }
    Ok(model.spans_exact_face(&idx) && affine_rank(&[u.clone(), v.clone(), w.clone()]) == 2)
}

/// Work limits for the exhaustive scans.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct OracleCaps {
    pub max_pairs: u128,
    pub max_triples: u128,
}

impl Default for OracleCaps {
    fn default() -> Self {
        OracleCaps {
            max_pairs: 1_000_000,
            max_triples: 10_000_000,
        }
    }
}

/// Every edge, found by testing all vertex pairs. Endpoints are reported by
/// their source sets, sorted.
pub fn brute_edges(model: &PolytopeModel, caps: OracleCaps) -> Result<Vec<[ElementSet; 2]>> {
    let n = model.vertices.len() as u128;
    let needed = n * n.saturating_sub(1) / 2;
    if needed > caps.max_pairs {
        return Err(Error::OracleCapExceeded {
            what: "vertex pairs",
            needed,
            cap: caps.max_pairs,
        });
    }
    let n = model.vertices.len();
    let mut out: Vec<[ElementSet; 2]> = (0..n)
        .into_par_iter()
        .flat_map_iter(|i| {
            (i + 1..n)
                .filter(move |&j| model.spans_exact_face(&[i, j]))
                .map(move |j| sorted2(model.sources[i], model.sources[j]))
        })
        .collect();
    out.sort_unstable();
    Ok(out)
}

/// Every triangular 2-face, found by testing all vertex triples.
pub fn brute_triangles(model: &PolytopeModel, caps: OracleCaps) -> Result<Vec<[ElementSet; 3]>> {
    let n = model.vertices.len() as u128;
    let needed = n * n.saturating_sub(1) * n.saturating_sub(2) / 6;
    if needed > caps.max_triples {
        return Err(Error::OracleCapExceeded {
            what: "vertex triples",
            needed,
            cap: caps.max_triples,
        });
    }
    let n = model.vertices.len();
    let mut out: Vec<[ElementSet; 3]> = (0..n)
        .into_par_iter()
        .flat_map_iter(|i| {
            (i + 1..n).flat_map(move |j| {
                (j + 1..n).filter_map(move |k| {
                    let idx = [i, j, k];
                    let is_face = model.spans_exact_face(&idx)
                        && affine_rank(&idx.map(|x| model.vertices[x].clone())) == 2;
                    is_face.then(|| {
                        let mut m = idx.map(|x| model.sources[x]);
                        m.sort_unstable();
                        m
                    })
                })
            })
        })
        .collect();
    out.sort_unstable();
    Ok(out)
}

fn sorted2(a: ElementSet, b: ElementSet) -> [ElementSet; 2] {
    if a <= b {
        [a, b]
    } else {
        [b, a]
    }
}
