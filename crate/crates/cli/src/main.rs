mod args;

use std::fs;
use std::io::{self, Write};
use std::path::Path;
use std::process::ExitCode;

use anyhow::{anyhow, Context};
use clap::Parser;
use ocpkit_core::io::{parse_poset, serialize_poset};
use ocpkit_core::oracle::OracleCaps;
use ocpkit_core::report::compare_with_cap;
use ocpkit_core::sweep::{run_sweep, write_csv, Family, SweepConfig, SweepRow};
use ocpkit_core::verify::verify;
use ocpkit_core::{faces, Poset, DEFAULT_ENUM_CAP};

use crate::args::{Cli, Command, FamilyArg, Format};

const ENUM_CAP_VAR: &str = "OCPKIT_MAX_ENUM";

/// Exit 1 is reserved for mathematical disagreements, exit 2 for bad input.
enum Failure {
    Usage(anyhow::Error),
    Check(String),
}

impl<E: Into<anyhow::Error>> From<E> for Failure {
    fn from(e: E) -> Self {
        Failure::Usage(e.into())
    }
}

type CmdResult = Result<(), Failure>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Check(msg)) => {
            eprintln!("check failed: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Usage(e)) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

fn run(command: Command) -> CmdResult {
    match command {
        Command::Gen { levels, random, out } => cmd_gen(levels, random, out.as_deref()),
        Command::Analyze { file, format } => cmd_analyze(&file, format),
        Command::Verify {
            file,
            max_pairs,
            max_triples,
        } => cmd_verify(&file, OracleCaps { max_pairs, max_triples }),
        Command::Sweep {
            max_size,
            family,
            count,
            oracle,
            format,
            out,
        } => {
            let family = match family {
                FamilyArg::Levels => Family::Levels,
                FamilyArg::Random => Family::Random { count },
            };
            let mut config = SweepConfig::new(family, max_size);
            config.enum_cap = enum_cap()?;
            config.oracle = oracle.then(OracleCaps::default);
            cmd_sweep(&config, format, out.as_deref())
        }
        Command::Formula { levels } => {
            let poset = Poset::ordinal_sum_of_antichains(&levels)?;
            let decomposition = poset
                .maximal_ranked_levels()
                .ok_or_else(|| anyhow!("composition does not give a maximal ranked poset"))?;
            println!("{}", faces::excess_formula(&decomposition));
            Ok(())
        }
    }
}

fn enum_cap() -> anyhow::Result<usize> {
    match std::env::var(ENUM_CAP_VAR) {
        Ok(v) => v
            .trim()
            .parse()
            .with_context(|| format!("{ENUM_CAP_VAR}={v:?} is not a count")),
        Err(_) => Ok(DEFAULT_ENUM_CAP),
    }
}

fn read_poset(path: &Path) -> anyhow::Result<Poset> {
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    parse_poset(&text).with_context(|| format!("parsing {}", path.display()))
}

fn cmd_gen(levels: Option<Vec<usize>>, random: Option<Vec<String>>, out: Option<&Path>) -> CmdResult {
    let poset = match (levels, random) {
        (Some(levels), _) => Poset::ordinal_sum_of_antichains(&levels)?,
        (None, Some(r)) => {
            let d: usize = r[0].parse().with_context(|| format!("bad element count {:?}", r[0]))?;
            let p: f64 = r[1].parse().with_context(|| format!("bad probability {:?}", r[1]))?;
            let seed: u64 = r[2].parse().with_context(|| format!("bad seed {:?}", r[2]))?;
            Poset::random(d, p, seed)?
        }
        (None, None) => return Err(anyhow!("one of --levels or --random is required").into()),
    };
    let summary = format!(
        "d={} graded={} maximal_ranked={} has_x={}",
        poset.len(),
        poset.rank_levels().is_ok(),
        poset.is_maximal_ranked(),
        poset.contains_x_subposet().is_some()
    );
    let text = serialize_poset(&poset);
    match out {
        Some(path) => {
            fs::write(path, text).with_context(|| format!("writing {}", path.display()))?;
            println!("{summary}");
        }
        None => {
            io::stdout().write_all(text.as_bytes())?;
            eprintln!("{summary}");
        }
    }
    Ok(())
}

fn cmd_analyze(path: &Path, format: Format) -> CmdResult {
    let poset = read_poset(path)?;
    let report = compare_with_cap(&poset, enum_cap()?)?;
    match format {
        Format::Json => println!("{}", serde_json::to_string_pretty(&report)?),
        Format::Csv => {
            let id = path
                .file_stem()
                .map(|s| s.to_string_lossy().into_owned())
                .unwrap_or_default();
            write_csv(&[SweepRow::from_report(id, &report)], io::stdout().lock())?;
        }
    }
    if report.consistent {
        Ok(())
    } else {
        Err(Failure::Check(report.violations().join("; ")))
    }
}

fn cmd_verify(path: &Path, caps: OracleCaps) -> CmdResult {
    let poset = read_poset(path)?;
    let outcome = verify(&poset, caps)?;
    for a in &outcome.checks {
        let verdict = if a.agrees() { "agree" } else { "DISAGREE" };
        println!("{}: lemma {}, oracle {}, {verdict}", a.what, a.lemma, a.oracle);
    }
    match outcome.checks.iter().find_map(|a| {
        a.first_difference
            .as_ref()
            .map(|diff| format!("{}: {diff}", a.what))
    }) {
        None => Ok(()),
        Some(witness) => Err(Failure::Check(witness)),
    }
}

fn cmd_sweep(config: &SweepConfig, format: Format, out: Option<&Path>) -> CmdResult {
    let outcome = run_sweep(config)?;
    let rows = outcome.rows();
    let mut buf = Vec::new();
    match format {
        Format::Csv => write_csv(&rows, &mut buf)?,
        Format::Json => {
            serde_json::to_writer_pretty(&mut buf, &rows)?;
            buf.push(b'\n');
        }
    }
    match out {
        Some(path) => fs::write(path, &buf).with_context(|| format!("writing {}", path.display()))?,
        None => io::stdout().write_all(&buf)?,
    }

    let failed: Vec<_> = outcome.failures().collect();
    eprintln!("{} posets checked, {} inconsistent", rows.len(), failed.len());
    match failed.first() {
        None => Ok(()),
        Some(first) => Err(Failure::Check(format!(
            "{}: {}",
            first.poset_id,
            first.failures.join("; ")
        ))),
    }
}
