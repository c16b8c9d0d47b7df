//! `lattix`: decide lattice properties from JSON cover files.
//!
//! Structured results go to stdout as one JSON object per line; a short
//! human summary goes to stderr. Exit codes: 0 when every verdict holds, 1
//! when some verdict fails (or a size limit is hit), 2 on bad input.

mod file;
mod render;

use std::collections::BTreeMap;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{ArgGroup, Args, Parser, Subcommand};
use lattix::admissibility::{check_admissible_with, gamma_labeling, is_admissible, NaturalLabeling};
use lattix::corpus::{cross_check, enumerate_lattices, fixture, random_dismantlable, FixtureName};
use lattix::predicates::{
    dismantling_sequence, is_interval_connected, is_lower_semimodular, is_planar,
    is_rank_connected, is_upper_semimodular, DEFAULT_MIN_GAP,
};
use lattix::shelling::{
    construct_el, format_label, search_el, verify_el, EdgeLabeling, SearchOutcome, ShellingError,
};
use lattix::Lattice;
use serde::Serialize;
use serde_json::json;

use file::{parse_omega, LatticeFile, Loaded};

#[derive(Parser)]
#[command(name = "lattix", version, about = "Finite lattice properties with checkable certificates")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Decide structural predicates (all of them unless some are selected).
    Check(CheckArgs),
    /// Construct, verify or search for an EL-labeling.
    Shell(ShellArgs),
    /// Decide admissibility, or check one natural labeling.
    Admissible {
        file: PathBuf,
        /// `1=1,2=1,...`; without a value, the file's `omega` is used.
        #[arg(long, num_args = 0..=1, default_missing_value = "")]
        with_omega: Option<String>,
    },
    /// Print the Hasse diagram as DOT.
    Render { file: PathBuf },
    /// Enumerate or sample lattices, optionally checking the theorems on them.
    Corpus(CorpusArgs),
    /// Print one of the built-in Figure 1 lattices as a lattice file.
    Fixture { name: FixtureName },
}

#[derive(Args)]
struct CheckArgs {
    file: PathBuf,
    #[arg(long)]
    ranked: bool,
    #[arg(long)]
    rank_connected: bool,
    #[arg(long)]
    interval_connected: bool,
    /// Smallest rank gap checked by --interval-connected.
    #[arg(long, default_value_t = DEFAULT_MIN_GAP)]
    min_gap: usize,
    #[arg(long)]
    dismantlable: bool,
    #[arg(long)]
    planar: bool,
    #[arg(long)]
    upper_semimodular: bool,
    #[arg(long)]
    lower_semimodular: bool,
}

#[derive(Args)]
#[command(group(ArgGroup::new("mode").required(true).args(["construct", "verify", "search"])))]
struct ShellArgs {
    file: PathBuf,
    #[arg(long)]
    construct: bool,
    #[arg(long)]
    verify: bool,
    #[arg(long)]
    search: bool,
    /// Distinct label values allowed by --search (default: number of covers).
    #[arg(long, requires = "search")]
    max_labels: Option<usize>,
}

#[derive(Args)]
struct CorpusArgs {
    #[arg(long, value_name = "N", conflicts_with = "random", required_unless_present = "random")]
    enumerate: Option<usize>,
    #[arg(long, num_args = 3, value_names = ["COUNT", "SIZE", "SEED"])]
    random: Option<Vec<u64>>,
    #[arg(long)]
    cross_check: bool,
}

enum Failure {
    /// Exit 2.
    Input(String),
    /// Exit 1, with a reason.
    Verdict(String),
}

type Outcome = Result<bool, Failure>;

fn emit(value: &impl Serialize) {
    println!("{}", serde_json::to_string(value).expect("records serialize"));
}

fn load(path: &Path) -> Result<Loaded, Failure> {
    LatticeFile::load(path).map_err(Failure::Input)
}

fn check(args: &CheckArgs) -> Outcome {
    let Loaded { lattice: l, .. } = load(&args.file)?;
    let any = args.ranked
        || args.rank_connected
        || args.interval_connected
        || args.dismantlable
        || args.planar
        || args.upper_semimodular
        || args.lower_semimodular;
    let mut all_hold = true;
    let mut record = |name: &str, holds: bool, result: serde_json::Value| {
        all_hold &= holds;
        eprintln!("{name}: {holds}");
        emit(&json!({ "predicate": name, "holds": holds, "result": result }));
    };

    if !any || args.ranked {
        match l.rank_function() {
            Ok(r) => record("ranked", true, json!({ "ranks": r.ranks() })),
            Err(w) => record("ranked", false, json!({ "not_ranked": w })),
        }
    }
    if !any || args.rank_connected {
        let v = is_rank_connected(&l);
        record("rank_connected", v.holds(), json!(v));
    }
    if !any || args.interval_connected {
        match is_interval_connected(&l, args.min_gap) {
            Ok(v) => record("interval_connected", v.holds(), json!({ "min_gap": args.min_gap, "verdict": v })),
            Err(w) => record("interval_connected", false, json!({ "min_gap": args.min_gap, "not_ranked": w })),
        }
    }
    if !any || args.dismantlable {
        let v = dismantling_sequence(&l);
        record("dismantlable", v.holds(), json!(v));
    }
    if !any || args.planar {
        match is_planar(&l) {
            Ok(v) => record("planar", v.holds(), json!(v)),
            Err(e) => record("planar", false, json!({ "error": e.to_string() })),
        }
    }
    if !any || args.upper_semimodular {
        let v = is_upper_semimodular(&l);
        record("upper_semimodular", v.holds(), json!(v));
    }
    if !any || args.lower_semimodular {
        let v = is_lower_semimodular(&l);
        record("lower_semimodular", v.holds(), json!(v));
    }
    Ok(all_hold)
}

fn labels_json(labels: &EdgeLabeling) -> Vec<(usize, usize, String)> {
    labels.iter().map(|((a, b), v)| (a, b, format_label(&v))).collect()
}

fn shelling_failure(e: ShellingError) -> Failure {
    let kind = match &e {
        ShellingError::PreconditionFailed(_) => "precondition_failed",
        ShellingError::SizeLimitExceeded(_) => "size_limit_exceeded",
        _ => "shelling_error",
    };
    emit(&json!({ "error": kind, "reason": e.to_string() }));
    Failure::Verdict(e.to_string())
}

fn shell(args: &ShellArgs) -> Outcome {
    let Loaded { file, lattice: l } = load(&args.file)?;
    if args.construct {
        let labels = construct_el(&l).map_err(shelling_failure)?;
        eprintln!("constructed an EL-labeling with {} distinct labels", distinct(&labels));
        emit(&LatticeFile { labels: None, omega: None, ..file }.with_labels(&labels));
        Ok(true)
    } else if args.verify {
        let labels = file
            .edge_labeling()
            .ok_or_else(|| Failure::Input("the file has no \"labels\"".into()))?
            .map_err(Failure::Input)?;
        let verdict = verify_el(&l, &labels).map_err(shelling_failure)?;
        eprintln!("EL-labeling: {}", verdict.ok);
        emit(&verdict);
        Ok(verdict.ok)
    } else {
        let max_labels = args.max_labels.unwrap_or(l.covers().len());
        match search_el(&l, max_labels).map_err(shelling_failure)? {
            SearchOutcome::Found(labels) => {
                eprintln!("found an EL-labeling with {} distinct labels", distinct(&labels));
                emit(&LatticeFile { labels: None, omega: None, ..file }.with_labels(&labels));
                Ok(true)
            }
            SearchOutcome::NotFound { explored } => {
                eprintln!("no EL-labeling with at most {max_labels} labels ({explored} nodes)");
                emit(&json!({ "found": false, "explored": explored }));
                Ok(false)
            }
        }
    }
}

fn distinct(labels: &EdgeLabeling) -> usize {
    let mut values: Vec<_> = labels.iter().map(|(_, v)| v).collect();
    values.sort_unstable();
    values.dedup();
    values.len()
}

fn admissible(path: &Path, with_omega: Option<&str>) -> Outcome {
    let Loaded { file, lattice: l } = load(path)?;
    let Some(text) = with_omega else {
        let verdict = is_admissible(&l).map_err(|e| {
            emit(&json!({ "error": "size_limit_exceeded", "reason": e.to_string() }));
            Failure::Verdict(e.to_string())
        })?;
        eprintln!("admissible: {}", verdict.holds());
        emit(&verdict);
        return Ok(verdict.holds());
    };
    let omega: NaturalLabeling = if text.is_empty() {
        file.natural_labeling(&l)
            .ok_or_else(|| Failure::Input("the file has no \"omega\"".into()))?
            .map_err(Failure::Input)?
    } else {
        let pairs = parse_omega(text).map_err(Failure::Input)?;
        NaturalLabeling::new(&l, &pairs).map_err(|e| Failure::Input(e.to_string()))?
    };
    let verdict = check_admissible_with(&l, &omega);
    eprintln!("unique rising chains under gamma: {}", verdict.ok);
    emit(&json!({
        "omega": omega,
        "gamma": labels_json(&gamma_labeling(&l, &omega)),
        "ok": verdict.ok,
        "violation": verdict.violation,
    }));
    Ok(verdict.ok)
}

fn render(path: &Path) -> Outcome {
    let Loaded { file, lattice: l } = load(path)?;
    let labels = file.edge_labeling().transpose().map_err(Failure::Input)?;
    print!("{}", render::to_dot(&l, file.names.as_deref(), labels.as_ref()));
    eprintln!("{} nodes, {} edges", l.len(), l.covers().len());
    Ok(true)
}

fn corpus(args: &CorpusArgs) -> Outcome {
    let lattices: Vec<Lattice> = match (args.enumerate, &args.random) {
        (Some(n), _) => enumerate_lattices(n).map_err(|e| {
            emit(&json!({ "error": "size_limit_exceeded", "reason": e.to_string() }));
            Failure::Verdict(e.to_string())
        })?,
        (None, Some(r)) => {
            let (count, size, seed) = (r[0], r[1] as usize, r[2]);
            if size < 2 {
                return Err(Failure::Input("random lattices need at least 2 elements".into()));
            }
            (0..count).map(|i| random_dismantlable(size, seed.wrapping_add(i)).0).collect()
        }
        (None, None) => unreachable!("clap requires one source"),
    };

    if !args.cross_check {
        let mut by_height: BTreeMap<usize, usize> = BTreeMap::new();
        for l in &lattices {
            *by_height.entry(l.height(l.top())).or_default() += 1;
            emit(&LatticeFile::from_lattice(l));
        }
        let parts: Vec<String> = by_height.iter().map(|(h, c)| format!("height {h}: {c}")).collect();
        eprintln!("{}; total {}", parts.join(", "), lattices.len());
        return Ok(true);
    }

    match cross_check(&lattices) {
        Ok(report) => {
            for record in &report.records {
                emit(record);
            }
            emit(&json!({ "summary": report.summary }));
            eprintln!("{} lattices, 0 violations", report.summary.lattices);
            Ok(true)
        }
        Err(violation) => {
            emit(&json!({
                "violation": {
                    "implication": violation.implication,
                    "lattice": violation.lattice,
                    "detail": violation.detail,
                }
            }));
            Err(Failure::Verdict(violation.to_string()))
        }
    }
}

fn print_fixture(name: FixtureName) -> Outcome {
    let f = fixture(name);
    emit(&LatticeFile { names: Some(f.names), ..LatticeFile::from_lattice(&f.lattice) });
    Ok(true)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match &cli.command {
        Command::Check(args) => check(args),
        Command::Shell(args) => shell(args),
        Command::Admissible { file, with_omega } => admissible(file, with_omega.as_deref()),
        Command::Render { file } => render(file),
        Command::Corpus(args) => corpus(args),
        Command::Fixture { name } => print_fixture(*name),
    };
    match outcome {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(Failure::Verdict(reason)) => {
            eprintln!("{reason}");
            ExitCode::from(1)
        }
        Err(Failure::Input(reason)) => {
            eprintln!("error: {reason}");
            ExitCode::from(2)
        }
    }
}
