//! Lemma-based face enumeration checked against the geometric oracle.

use std::collections::BTreeSet;
use std::fmt::Debug;

use serde::Serialize;

use crate::error::Result;
use crate::faces::FaceAnalysis;
use crate::oracle::{brute_edges, brute_triangles, chain_polytope_model, order_polytope_model, OracleCaps};
use crate::poset::Poset;

/// Outcome of comparing one face family between the two routes.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Agreement {
    pub what: &'static str,
    pub lemma: usize,
    pub oracle: usize,
    /// Smallest element found by only one route, if any.
    pub first_difference: Option<String>,
}

impl Agreement {
    pub fn agrees(&self) -> bool {
        self.first_difference.is_none()
    }

    fn of<T: Ord + Debug>(what: &'static str, lemma: BTreeSet<T>, oracle: BTreeSet<T>) -> Self {
        let only_lemma = lemma.difference(&oracle).next();
        let only_oracle = oracle.difference(&lemma).next();
        let first_difference = match (only_lemma, only_oracle) {
            (None, None) => None,
            (Some(x), _) => Some(format!("{x:?} found by the lemma only")),
            (None, Some(x)) => Some(format!("{x:?} found by the oracle only")),
        };
        Agreement {
            what,
            lemma: lemma.len(),
            oracle: oracle.len(),
            first_difference,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VerifyOutcome {
    pub checks: Vec<Agreement>,
}

impl VerifyOutcome {
    pub fn all_agree(&self) -> bool {
        self.checks.iter().all(Agreement::agrees)
    }
}

/// Compares edges and triangles of both polytopes.
pub fn verify(poset: &Poset, caps: OracleCaps) -> Result<VerifyOutcome> {
    let faces = FaceAnalysis::new(poset)?;
    verify_faces(&faces, caps)
}

pub fn verify_faces(faces: &FaceAnalysis<'_>, caps: OracleCaps) -> Result<VerifyOutcome> {
    let poset = faces.poset();
    let order = order_polytope_model(poset)?;
    let chain = chain_polytope_model(poset)?;

    let edges = |e: &[crate::faces::EdgePair]| e.iter().map(|e| e.endpoints).collect::<BTreeSet<_>>();
    let tris = |t: &[crate::faces::TriangleTriple]| t.iter().map(|t| t.members).collect::<BTreeSet<_>>();

    let checks = vec![
        Agreement::of(
            "order edges",
            edges(faces.o_edges()),
            brute_edges(&order, caps)?.into_iter().collect(),
        ),
        Agreement::of(
            "chain edges",
            edges(faces.c_edges()),
            brute_edges(&chain, caps)?.into_iter().collect(),
        ),
        Agreement::of(
            "order triangles",
            tris(faces.o_triangles()),
            brute_triangles(&order, caps)?.into_iter().collect(),
        ),
        Agreement::of(
            "chain triangles",
            tris(faces.c_triangles()),
            brute_triangles(&chain, caps)?.into_iter().collect(),
        ),
    ];
    Ok(VerifyOutcome { checks })
}
