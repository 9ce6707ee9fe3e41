//! Exhaustive and randomized sweeps over poset families, checking every
//! identity per poset and emitting one row each.

use std::collections::HashSet;
use std::io::Write;

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::faces::FaceAnalysis;
use crate::oracle::OracleCaps;
use crate::poset::{Poset, DEFAULT_ENUM_CAP};
use crate::report::{report_from, ComparisonReport};
use crate::verify::verify_faces;

/// Largest poset size a sweep accepts.
pub const MAX_SWEEP_SIZE: usize = 12;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Family {
    /// Every level composition `(c_0, .., c_n)` with `Σ c_i ≤ N`.
    Levels,
    /// `count` random posets per size `1..=N`.
    Random { count: u64 },
}

#[derive(Clone, Copy, Debug)]
pub struct SweepConfig {
    pub family: Family,
    pub max_size: usize,
    pub enum_cap: usize,
    /// Also run the geometric oracle on every poset.
    pub oracle: Option<OracleCaps>,
}

impl SweepConfig {
    pub fn new(family: Family, max_size: usize) -> Self {
        SweepConfig {
            family,
            max_size,
            enum_cap: DEFAULT_ENUM_CAP,
            oracle: None,
        }
    }
}

/// One CSV row. Column order is fixed by field order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SweepRow {
    pub poset_id: String,
    pub d: usize,
    pub levels: String,
    pub f0: usize,
    #[serde(rename = "f1_O")]
    pub f1_o: usize,
    #[serde(rename = "f1_C")]
    pub f1_c: usize,
    #[serde(rename = "tri_O")]
    pub tri_o: usize,
    #[serde(rename = "tri_C")]
    pub tri_c: usize,
    #[serde(rename = "estar_O")]
    pub estar_o: usize,
    #[serde(rename = "estar_C")]
    pub estar_c: usize,
    #[serde(rename = "dstar_O")]
    pub dstar_o: usize,
    #[serde(rename = "dstar_C")]
    pub dstar_c: usize,
    pub has_x: bool,
    pub formula: Option<u128>,
    pub equality_holds: bool,
    pub consistent: bool,
}

pub const CSV_HEADER: &str = "poset_id,d,levels,f0,f1_O,f1_C,tri_O,tri_C,estar_O,estar_C,dstar_O,dstar_C,has_x,formula,equality_holds,consistent";

impl SweepRow {
    pub fn from_report(poset_id: impl Into<String>, r: &ComparisonReport) -> Self {
        SweepRow {
            poset_id: poset_id.into(),
            d: r.d,
            levels: r
                .levels
                .as_ref()
                .map(|l| composition_key(l))
                .unwrap_or_default(),
            f0: r.f0_o,
            f1_o: r.f1_o,
            f1_c: r.f1_c,
            tri_o: r.tri_o,
            tri_c: r.tri_c,
            estar_o: r.estar_o_count,
            estar_c: r.estar_c_count,
            dstar_o: r.dstar_o_count,
            dstar_c: r.dstar_c_count,
            has_x: r.has_x,
            formula: r.formula_value,
            equality_holds: r.equality_holds,
            consistent: r.consistent,
        }
    }
}

/// Per-poset result: the report plus every failed check.
#[derive(Clone, Debug)]
pub struct Checked {
    pub poset_id: String,
    pub report: ComparisonReport,
    pub failures: Vec<String>,
}

impl Checked {
    pub fn row(&self) -> SweepRow {
        SweepRow::from_report(&self.poset_id, &self.report)
    }
}

#[derive(Clone, Debug)]
pub struct SweepOutcome {
    pub results: Vec<Checked>,
}

impl SweepOutcome {
    pub fn rows(&self) -> Vec<SweepRow> {
        self.results.iter().map(Checked::row).collect()
    }

    pub fn failures(&self) -> impl Iterator<Item = &Checked> {
        self.results.iter().filter(|c| !c.failures.is_empty())
    }

    pub fn all_consistent(&self) -> bool {
        self.failures().next().is_none()
    }
}

/// `2-1-2` style key for a level composition.
pub fn composition_key(sizes: &[usize]) -> String {
    sizes.iter().map(usize::to_string).collect::<Vec<_>>().join("-")
}

/// All compositions of every total `1..=max_size` into positive parts.
pub fn compositions(max_size: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    for total in 1..=max_size {
        // Bit i of `cuts` set means a part boundary after position i + 1.
        for cuts in 0u64..1 << (total - 1) {
            let mut parts = Vec::new();
            let mut run = 1;
            for i in 0..total - 1 {
                if cuts >> i & 1 == 1 {
                    parts.push(run);
                    run = 1;
                } else {
                    run += 1;
                }
            }
            parts.push(run);
            out.push(parts);
        }
    }
    out
}

/// Runs every check on one poset.
pub fn check_poset(poset_id: String, poset: &Poset, config: &SweepConfig) -> Result<Checked> {
    let faces = FaceAnalysis::with_cap(poset, config.enum_cap)?;
    let mut report = report_from(&faces);
    let mut failures: Vec<String> = Vec::new();

    if let Some(caps) = config.oracle {
        let outcome = verify_faces(&faces, caps)?;
        report.oracle_consistent = Some(outcome.all_agree());
        for a in outcome.checks.iter().filter(|a| !a.agrees()) {
            failures.push(format!(
                "{}: lemma {} vs oracle {}; {}",
                a.what,
                a.lemma,
                a.oracle,
                a.first_difference.as_deref().unwrap_or_default()
            ));
        }
    }

    if faces.maximal_ranked_levels().is_some() {
        failures.extend(maximal_ranked_failures(&faces));
    }
    report.refresh_consistency();
    failures.extend(report.violations().into_iter().map(str::to_owned));
    failures.sort();
    failures.dedup();
    report.consistent = failures.is_empty();
    Ok(Checked {
        poset_id,
        report,
        failures,
    })
}

/// Checks specific to maximal ranked posets: the injection and its
/// unmatched triples, the closed forms of the exceptional edge sets, and
/// agreement of the two X-poset detectors.
pub fn maximal_ranked_failures(faces: &FaceAnalysis<'_>) -> Vec<String> {
    let mut failures = Vec::new();
    let poset = faces.poset();
    let levels = faces
        .maximal_ranked_levels()
        .expect("caller checked maximal ranked");

    let mut images = HashSet::new();
    for t in faces.delta_star_o() {
        match faces.phi(t) {
            Ok(image) => {
                if !faces.in_delta_star_c(&image) {
                    failures.push(format!("phi{:?} = {:?} is not in Δ*_C", t.members, image.members));
                }
                if !images.insert(image) {
                    failures.push(format!("phi is not injective at {:?}", image.members));
                }
            }
            Err(e) => failures.push(format!("phi{:?} failed: {e}", t.members)),
        }
    }

    let generic_x = poset.contains_x_subposet();
    let fast_x = levels.x_witness();
    if generic_x.is_some() != fast_x.is_some() {
        failures.push("level-based X-poset test disagrees with the generic search".into());
    }
    if let Some(w) = fast_x {
        if !poset.is_x_witness(&w) {
            failures.push(format!("level-based X witness {w:?} is invalid"));
        }
    }
    let unmatched = faces.unmatched_level_triples();
    if generic_x.is_some() && unmatched.is_empty() {
        failures.push("X-poset present but no unmatched level triple".into());
    }
    for t in &unmatched {
        if !faces.in_delta_star_c(t) {
            failures.push(format!("unmatched triple {:?} is not in Δ*_C", t.members));
        }
        if images.contains(t) {
            failures.push(format!("unmatched triple {:?} is an image of phi", t.members));
        }
    }

    match faces.e_star_o_characterized() {
        Ok(e) if e == faces.e_star_o() => {}
        _ => failures.push("E*_O differs from its characterization".into()),
    }
    match faces.e_star_c_characterized() {
        Ok(e) if e == faces.e_star_c() => {}
        _ => failures.push("E*_C differs from its characterization".into()),
    }
    failures
}

/// Id of a random poset: zero-padded so string order follows `(d, p, seed)`.
pub fn random_id(d: usize, edge_probability: f64, seed: u64) -> String {
    format!("R{d:02}-p{:03}-s{seed:05}", (edge_probability * 100.0).round() as u32)
}

/// Edge probability used for the `seed`-th random poset of a sweep.
pub fn sweep_probability(seed: u64) -> f64 {
    [0.2, 0.35, 0.5, 0.65, 0.8][(seed % 5) as usize]
}

pub fn run_sweep(config: &SweepConfig) -> Result<SweepOutcome> {
    if config.max_size == 0 || config.max_size > MAX_SWEEP_SIZE {
        return Err(Error::BudgetExceeded(format!(
            "sweep size must be between 1 and {MAX_SWEEP_SIZE}, got {}",
            config.max_size
        )));
    }
    let jobs: Vec<(String, Poset)> = match config.family {
        Family::Levels => compositions(config.max_size)
            .into_iter()
            .map(|c| {
                let p = Poset::ordinal_sum_of_antichains(&c)?;
                Ok((format!("L{}", composition_key(&c)), p))
            })
            .collect::<Result<_>>()?,
        Family::Random { count } => (1..=config.max_size)
            .flat_map(|d| (0..count).map(move |seed| (d, seed)))
            .map(|(d, seed)| {
                let prob = sweep_probability(seed);
                Ok((random_id(d, prob, seed), Poset::random(d, prob, seed)?))
            })
            .collect::<Result<_>>()?,
    };
    let mut results = jobs
        .par_iter()
        .map(|(id, p)| check_poset(id.clone(), p, config))
        .collect::<Result<Vec<_>>>()?;
    results.sort_by(|a, b| a.poset_id.cmp(&b.poset_id));
    Ok(SweepOutcome { results })
}

pub fn write_csv<W: Write>(rows: &[SweepRow], out: W) -> std::io::Result<()> {
    let mut w = csv::Writer::from_writer(out);
    for row in rows {
        w.serialize(row)?;
    }
    w.flush()
}
