//! Acceptance criteria. Every check is exact; each criterion prints one
//! PASS/FAIL line and the test fails if any criterion does.
//!
//! Run with `cargo test -p ocpkit-cli --test acceptance -- --nocapture`.

use std::collections::HashSet;
use std::process::Command;
use std::time::{Duration, Instant};

use ocpkit_core::faces::{excess_formula, FaceAnalysis};
use ocpkit_core::oracle::OracleCaps;
use ocpkit_core::sweep::{compositions, sweep_probability};
use ocpkit_core::verify::verify_faces;
use ocpkit_core::Poset;
use serde_json::Value;

const SWEEP_MAX: usize = 8;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn sweep_posets() -> Vec<(Vec<usize>, Poset)> {
    compositions(SWEEP_MAX)
        .into_iter()
        .map(|c| {
            let p = Poset::ordinal_sum_of_antichains(&c).unwrap();
            (c, p)
        })
        .collect()
}

/// `count` random posets per size `1..=max_d`, probabilities cycling as in
/// the CLI sweep.
fn random_posets(max_d: usize, count: u64) -> Vec<(String, Poset)> {
    let mut out = Vec::new();
    for d in 1..=max_d {
        for seed in 0..count {
            let prob = sweep_probability(seed);
            out.push((format!("d={d} p={prob} seed={seed}"), Poset::random(d, prob, seed).unwrap()));
        }
    }
    out
}

fn criterion_1_x_poset_golden() -> Outcome {
    let dir = tempfile::tempdir().map_err(|e| e.to_string())?;
    let file = dir.path().join("x.json");
    let bin = env!("CARGO_BIN_EXE_ocpkit");
    let start = Instant::now();
    let gen = Command::new(bin)
        .args(["gen", "--levels", "2,1,2", "--out"])
        .arg(&file)
        .output()
        .map_err(|e| e.to_string())?;
    ensure(gen.status.success(), || format!("gen exited with {}", gen.status))?;
    let analyze = Command::new(bin)
        .arg("analyze")
        .arg(&file)
        .args(["--format", "json"])
        .output()
        .map_err(|e| e.to_string())?;
    let elapsed = start.elapsed();
    ensure(analyze.status.success(), || format!("analyze exited with {}", analyze.status))?;
    let report: Value = serde_json::from_slice(&analyze.stdout).map_err(|e| e.to_string())?;

    let expected = [
        ("f0_O", Value::from(8)),
        ("f0_C", Value::from(8)),
        ("f1_O", Value::from(24)),
        ("f1_C", Value::from(24)),
        ("tri_O", Value::from(32)),
        ("tri_C", Value::from(33)),
        ("estar_O_count", Value::from(1)),
        ("estar_C_count", Value::from(1)),
        ("dstar_O_count", Value::from(4)),
        ("dstar_C_count", Value::from(5)),
        ("formula_value", Value::from(1)),
        ("has_x", Value::from(true)),
        ("equality_holds", Value::from(false)),
    ];
    for (key, want) in &expected {
        ensure(report[key] == *want, || format!("{key} = {} (want {want})", report[key]))?;
    }
    ensure(elapsed < Duration::from_secs(1), || format!("took {elapsed:?}"))?;
    Ok(format!("all 13 fields exact, {elapsed:.2?}"))
}

fn criterion_2_oracle_equivalence() -> Outcome {
    let start = Instant::now();
    let caps = OracleCaps::default();
    let mut checked = 0;
    let mut families: Vec<(String, Poset)> = sweep_posets()
        .into_iter()
        .map(|(c, p)| (format!("levels {c:?}"), p))
        .collect();
    let random = random_posets(6, 20);
    let random_count = random.len();
    families.extend(random);
    for (name, p) in &families {
        let faces = FaceAnalysis::new(p).map_err(|e| e.to_string())?;
        let outcome = verify_faces(&faces, caps).map_err(|e| format!("{name}: {e}"))?;
        for a in &outcome.checks {
            ensure(a.agrees(), || {
                format!("{name}: {} {}", a.what, a.first_difference.as_deref().unwrap_or(""))
            })?;
        }
        checked += 1;
    }
    let elapsed = start.elapsed();
    ensure(random_count >= 100, || format!("only {random_count} random posets"))?;
    ensure(elapsed < Duration::from_secs(300), || format!("took {elapsed:?}"))?;
    Ok(format!(
        "{checked} posets ({} level compositions, {random_count} random), {elapsed:.1?}",
        checked - random_count
    ))
}

fn criterion_3_theorem() -> Outcome {
    let mut with_x = 0;
    let posets = sweep_posets();
    for (c, p) in &posets {
        let f = FaceAnalysis::new(p).map_err(|e| e.to_string())?;
        let (o, ch) = (f.o_triangles().len(), f.c_triangles().len());
        let has_x = p.contains_x_subposet().is_some();
        ensure(o <= ch, || format!("{c:?}: tri_O {o} > tri_C {ch}"))?;
        ensure((o == ch) == !has_x, || format!("{c:?}: tri {o}/{ch}, has_x {has_x}"))?;
        with_x += usize::from(has_x);
    }
    Ok(format!("{} compositions, {with_x} contain an X-poset", posets.len()))
}

fn criterion_4_formula() -> Outcome {
    let posets = sweep_posets();
    let mut max_excess = 0;
    for (c, p) in &posets {
        let f = FaceAnalysis::new(p).map_err(|e| e.to_string())?;
        let levels = p.maximal_ranked_levels().ok_or_else(|| format!("{c:?} not maximal ranked"))?;
        let excess = (f.c_triangles().len() - f.o_triangles().len()) as u128;
        let formula = excess_formula(&levels);
        ensure(excess == formula, || format!("{c:?}: excess {excess}, formula {formula}"))?;
        max_excess = max_excess.max(excess);
    }
    Ok(format!("{} compositions, largest excess {max_excess}", posets.len()))
}

fn criterion_5_triangle_equality() -> Outcome {
    let posets = random_posets(7, 80);
    for (name, p) in &posets {
        let f = FaceAnalysis::new(p).map_err(|e| e.to_string())?;
        let lhs = f.o_triangles().len() - f.delta_star_o().len();
        let rhs = f.c_triangles().len() - f.delta_star_c().len();
        ensure(lhs == rhs, || format!("{name}: {lhs} vs {rhs}"))?;
    }
    ensure(posets.len() >= 500, || format!("only {} posets", posets.len()))?;
    Ok(format!("{} random posets, d ≤ 7", posets.len()))
}

fn criterion_6_phi() -> Outcome {
    let mut mapped = 0;
    let mut unmatched = 0;
    for (c, p) in &sweep_posets() {
        let f = FaceAnalysis::new(p).map_err(|e| e.to_string())?;
        let mut images = HashSet::new();
        for t in f.delta_star_o() {
            let image = f.phi(t).map_err(|e| format!("{c:?}: {e}"))?;
            ensure(f.in_delta_star_c(&image), || format!("{c:?}: image {:?} not in Δ*_C", image.members))?;
            ensure(images.insert(image), || format!("{c:?}: repeated image {:?}", image.members))?;
            mapped += 1;
        }
        let gaps = f.unmatched_level_triples();
        let has_x = p.contains_x_subposet().is_some();
        ensure(has_x == !gaps.is_empty(), || format!("{c:?}: has_x {has_x} but {} witness triples", gaps.len()))?;
        for g in &gaps {
            ensure(f.in_delta_star_c(g), || format!("{c:?}: witness {:?} not in Δ*_C", g.members))?;
            ensure(!images.contains(g), || format!("{c:?}: witness {:?} is an image", g.members))?;
            unmatched += 1;
        }
    }
    Ok(format!("{mapped} triples mapped injectively, {unmatched} witness triples outside the image"))
}

fn criterion_7_stanley() -> Outcome {
    let mut all: Vec<(String, Poset)> = random_posets(7, 80);
    all.extend(sweep_posets().into_iter().map(|(c, p)| (format!("{c:?}"), p)));
    for (name, p) in &all {
        let f = FaceAnalysis::new(p).map_err(|e| e.to_string())?;
        ensure(f.ideals().len() == f.antichains().len(), || format!("{name}: vertex counts differ"))?;
        ensure(f.o_edges().len() == f.c_edges().len(), || format!("{name}: edge counts differ"))?;
    }
    Ok(format!("{} posets", all.len()))
}

fn criterion_8_exceptional_edges() -> Outcome {
    let posets = sweep_posets();
    let mut total = (0, 0);
    for (c, p) in &posets {
        let f = FaceAnalysis::new(p).map_err(|e| e.to_string())?;
        let o = f.e_star_o_characterized().map_err(|e| e.to_string())?;
        let ch = f.e_star_c_characterized().map_err(|e| e.to_string())?;
        ensure(o == f.e_star_o(), || format!("{c:?}: E*_O differs"))?;
        ensure(ch == f.e_star_c(), || format!("{c:?}: E*_C differs"))?;
        total.0 += o.len();
        total.1 += ch.len();
    }
    Ok(format!("{} compositions, {} + {} exceptional edges", posets.len(), total.0, total.1))
}

#[test]
fn acceptance() {
    let criteria: [Criterion; 8] = [
        ("1 X-poset golden run", criterion_1_x_poset_golden),
        ("2 oracle equivalence", criterion_2_oracle_equivalence),
        ("3 triangle inequality and X-poset equality criterion", criterion_3_theorem),
        ("4 closed-form triangle excess", criterion_4_formula),
        ("5 non-exceptional triangle counts agree", criterion_5_triangle_equality),
        ("6 injection contract", criterion_6_phi),
        ("7 vertex and edge count identities", criterion_7_stanley),
        ("8 exceptional edge characterizations", criterion_8_exceptional_edges),
    ];
    let mut failed = Vec::new();
    for (name, run) in criteria {
        match run() {
            Ok(detail) => println!("PASS  {name}: {detail}"),
            Err(why) => {
                println!("FAIL  {name}: {why}");
                failed.push(name);
            }
        }
    }
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}
