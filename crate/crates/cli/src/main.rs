//! `sylowpi`: decide `D_π` for finite groups from their composition factors,
//! and cross-validate against brute force on small permutation groups.
//!
//! Exit codes: 0 success or true verdict, 1 false verdict, 2 error,
//! 3 crosscheck disagreement.

use std::fmt::Display;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde::Serialize;
use sylowpi::composition::{self, CompositionSpec, Factor, HallSplit, SplitHypothesis};
use sylowpi::crosscheck::{self, CorpusReport};
use sylowpi::permbrute::{self, Lattice, RealizationSpec, LATTICE_BOUND};
use sylowpi::{criterion, tables, PrimeSet, SimpleGroupId};

const BOUND_VAR: &str = "DPI_CORPUS_BOUND";

#[derive(Parser)]
#[command(name = "sylowpi", version, about = "Decide the D_π property of finite groups")]
struct Cli {
    /// Emit a JSON report with a top-level `schema` field.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Arithmetic verdict for a simple group or a list of composition factors.
    Check {
        #[command(flatten)]
        target: Target,
        #[arg(long)]
        pi: String,
    },
    /// Maximal π-subgroups of a realized permutation group.
    Brute {
        #[arg(long)]
        group: String,
        #[arg(long)]
        pi: String,
        #[command(flatten)]
        bound: Bound,
    },
    /// Compare brute force with the arithmetic verdict for every π ⊆ π(G).
    Crosscheck {
        #[arg(long)]
        group: String,
        #[command(flatten)]
        bound: Bound,
    },
    /// D_{σ∪τ} as D_σ ∧ D_τ, with the Hall split checked when the group is realizable.
    Split {
        #[command(flatten)]
        target: Target,
        #[arg(long)]
        sigma: String,
        #[arg(long)]
        tau: String,
        #[command(flatten)]
        bound: Bound,
    },
    /// Dump the built-in tables.
    Tables,
    /// Crosscheck every corpus group and check the split equivalence on products.
    Corpus {
        #[command(flatten)]
        bound: Bound,
    },
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct Target {
    /// Group spec, e.g. `Spor:M11`, `Lie:2A:4:3`, `Sym:6`, `Alt:5*Cyclic:7`.
    #[arg(long)]
    group: Option<String>,
    /// Comma-separated composition factors, e.g. `Alt:5,Cyclic:7`.
    #[arg(long)]
    factors: Option<String>,
}

#[derive(Args)]
struct Bound {
    /// Largest group order for which a subgroup lattice is built.
    #[arg(long)]
    max_order: Option<usize>,
}

impl Bound {
    fn resolve(&self) -> Result<usize, String> {
        if let Some(b) = self.max_order {
            return Ok(b);
        }
        match std::env::var(BOUND_VAR) {
            Ok(v) => v.trim().parse().map_err(|_| format!("{BOUND_VAR}: {v:?} is not a non-negative integer")),
            Err(_) => Ok(LATTICE_BOUND),
        }
    }
}

#[derive(Serialize)]
struct Envelope<'a, T: Serialize> {
    schema: u32,
    command: &'a str,
    report: T,
}

/// Outcome of a command before rendering.
enum Status {
    Ok,
    False,
    Disagreement,
}

impl Status {
    fn of(verdict: bool) -> Self {
        if verdict {
            Status::Ok
        } else {
            Status::False
        }
    }

    fn code(&self) -> u8 {
        match self {
            Status::Ok => 0,
            Status::False => 1,
            Status::Disagreement => 3,
        }
    }
}

fn ctx<E: Display>(what: &str) -> impl FnOnce(E) -> String + '_ {
    move |e| format!("{what}: {e}")
}

fn parse_pi(flag: &str, s: &str) -> Result<PrimeSet, String> {
    s.parse().map_err(ctx(flag))
}

/// Composition factors of a `--group` or `--factors` target.
fn composition_of(target: &Target) -> Result<(String, CompositionSpec), String> {
    if let Some(f) = &target.factors {
        let spec: CompositionSpec = f.parse().map_err(ctx("--factors"))?;
        return Ok((spec.to_string(), spec));
    }
    let g = target.group.as_deref().expect("clap requires one target");
    match g.parse::<SimpleGroupId>() {
        Ok(id) => Ok((id.to_string(), CompositionSpec::new(vec![Factor::Simple(id)]).map_err(ctx("--group"))?)),
        Err(simple_err) => match g.parse::<RealizationSpec>() {
            Ok(r) => Ok((r.to_string(), r.composition_factors())),
            Err(_) => Err(format!("--group: {simple_err}")),
        },
    }
}

fn emit<T: Serialize>(json: bool, command: &str, report: &T, human: impl FnOnce() -> String) -> Result<(), String> {
    if json {
        let env = Envelope { schema: 1, command, report };
        println!("{}", serde_json::to_string_pretty(&env).map_err(ctx("json"))?);
    } else {
        println!("{}", human());
    }
    Ok(())
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "true"
    } else {
        "false"
    }
}

fn check(json: bool, target: &Target, pi: &str) -> Result<Status, String> {
    let pi = parse_pi("--pi", pi)?;
    if let Some(g) = &target.group {
        if let Ok(id) = g.parse::<SimpleGroupId>() {
            let v = criterion::decide_dpi_simple(&id, &pi).map_err(ctx("check"))?;
            emit(json, "check", &v, || {
                let mut out = format!("{} π={} (effective {}): D_π {}", v.group, pi, v.pi_effective, yes_no(v.dpi));
                match &v.witness {
                    Some(w) => {
                        out += &format!(", witness {:?}", w.label());
                        for (k, b) in &w.bindings {
                            out += &format!("\n  {k} = {}", serde_json::to_string(b).unwrap_or_default());
                        }
                    }
                    None => out += ", no condition holds",
                }
                out
            })?;
            return Ok(Status::of(v.dpi));
        }
    }
    let (label, spec) = composition_of(target)?;
    let v = composition::decide_dpi_composite(&spec, &pi).map_err(ctx("check"))?;
    emit(json, "check", &v, || {
        let mut out = format!("{label} π={pi}: D_π {}", yes_no(v.dpi));
        for t in &v.trace {
            let why = match &t.verdict {
                Some(fv) => fv.witness_label(),
                None => "cyclic".to_string(),
            };
            out += &format!("\n  {}: {} ({why})", t.factor, yes_no(t.dpi));
        }
        out
    })?;
    Ok(Status::of(v.dpi))
}

fn realize_lattice_input(group: &str, bound: usize) -> Result<permbrute::PermGroup, String> {
    let spec: RealizationSpec = group.parse().map_err(ctx("--group"))?;
    permbrute::realize_with_table(&spec, bound).map_err(ctx(group))
}

fn brute(json: bool, group: &str, pi: &str, bound: usize) -> Result<Status, String> {
    let pi = parse_pi("--pi", pi)?;
    let g = realize_lattice_input(group, bound)?;
    let lattice = Lattice::build_with_bound(&g, bound).map_err(ctx(group))?;
    let r = permbrute::maximal_pi_subgroups(&lattice, &pi);
    emit(json, "brute", &r, || {
        format!(
            "{group} π={pi}: order {}, Hall order {}, epi={}, dpi={}, classes [{}]",
            r.group_order,
            r.hall_order,
            r.epi,
            r.dpi,
            r.class_names().join(", ")
        )
    })?;
    Ok(Status::of(r.dpi))
}

fn crosscheck_cmd(json: bool, group: &str, bound: usize) -> Result<Status, String> {
    let spec: RealizationSpec = group.parse().map_err(ctx("--group"))?;
    let r = crosscheck::crosscheck(&spec, bound).map_err(ctx(group))?;
    emit(json, "crosscheck", &r, || {
        let mut out = format!(
            "{group}: {} subsets checked, {} disagreements",
            r.subsets_checked,
            r.disagreements.len()
        );
        for d in &r.disagreements {
            out += &format!("\n  π={}: brute {}, {} {}", d.pi, d.brute, r.method, d.arithmetic);
        }
        out
    })?;
    Ok(if r.agrees() { Status::Ok } else { Status::Disagreement })
}

/// Hall split status: checked on the realization when one exists within the
/// bound, assumed otherwise.
fn split_status(group: Option<&str>, sigma: &PrimeSet, tau: &PrimeSet, bound: usize) -> Result<HallSplit, String> {
    let Some(spec) = group.and_then(|g| g.parse::<RealizationSpec>().ok()) else {
        return Ok(HallSplit::Assumed);
    };
    let Ok(g) = permbrute::realize_with_table(&spec, bound) else {
        return Ok(HallSplit::Assumed);
    };
    let Ok(lattice) = Lattice::build_with_bound(&g, bound) else {
        return Ok(HallSplit::Assumed);
    };
    let split = permbrute::verify_hall_split(&lattice, sigma, tau).map_err(ctx("split"))?;
    Ok(if split { HallSplit::BruteVerified } else { HallSplit::Refuted })
}

fn split(json: bool, target: &Target, sigma: &str, tau: &str, bound: usize) -> Result<Status, String> {
    let sigma = parse_pi("--sigma", sigma)?;
    let tau = parse_pi("--tau", tau)?;
    let (label, spec) = composition_of(target)?;
    let status = split_status(target.group.as_deref(), &sigma, &tau, bound)?;
    let hyp = SplitHypothesis { sigma, tau, status };
    let v = composition::wielandt_split(&spec, &hyp).map_err(ctx("split"))?;
    emit(json, "split", &v, || {
        let parts: Vec<String> = v.per_part.iter().map(|p| format!("D_{} {}", p.pi, yes_no(p.dpi))).collect();
        format!("{label} π={}: D_σ ∧ D_τ {} ({}); {}", v.pi, yes_no(v.dpi), parts.join(", "), v.label)
    })?;
    // A refuted split says nothing about D_π, so it never reports success.
    Ok(Status::of(v.dpi && v.status != HallSplit::Refuted))
}

fn tables_cmd(json: bool) -> Result<Status, String> {
    let d = tables::dump();
    emit(json, "tables", &d, || serde_json::to_string_pretty(&d).unwrap_or_default())?;
    Ok(Status::Ok)
}

fn corpus(json: bool, bound: usize) -> Result<Status, String> {
    let r: CorpusReport = crosscheck::corpus_sweep(bound).map_err(ctx("corpus"))?;
    emit(json, "corpus", &r, || {
        let mut out = String::new();
        for c in &r.crosschecks {
            out += &format!("{}: {} subsets, {} disagreements\n", c.group, c.subsets_checked, c.disagreements.len());
        }
        let instances: usize = r.splits.iter().map(|s| s.instances).sum();
        out += &format!(
            "{} groups crosschecked, {instances} split instances on {} products, {} disagreements",
            r.crosschecks.len(),
            r.splits.len(),
            r.disagreements()
        );
        out
    })?;
    Ok(if r.disagreements() == 0 { Status::Ok } else { Status::Disagreement })
}

fn run(cli: Cli) -> Result<Status, String> {
    let json = cli.json;
    match &cli.command {
        Command::Check { target, pi } => check(json, target, pi),
        Command::Brute { group, pi, bound } => brute(json, group, pi, bound.resolve()?),
        Command::Crosscheck { group, bound } => crosscheck_cmd(json, group, bound.resolve()?),
        Command::Split { target, sigma, tau, bound } => split(json, target, sigma, tau, bound.resolve()?),
        Command::Tables => tables_cmd(json),
        Command::Corpus { bound } => corpus(json, bound.resolve()?),
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(status) => ExitCode::from(status.code()),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
