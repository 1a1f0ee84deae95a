use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Duration;

use clap::{Args, Parser, Subcommand};
use scsrg::formats::{self, Format, Input};
use scsrg::report::{self, CheckOutcome, Status};
use scsrg::suite::{self, Context, Tier};
use scsrg::verify::{self, Check, Limits};
use scsrg_core::constructions::{self, ConstructionReport};
use serde_json::{json, Value};

/// Construct and certify self-complementary strongly regular Cayley graphs.
///
/// Exit status: 0 when every requested check passes, 1 when one is refuted
/// or left undecided, 2 on usage or input errors.
#[derive(Parser)]
#[command(name = "scsrg", version)]
struct Cli {
    /// Worker threads for parallel checks (default: all cores).
    #[arg(long, global = true)]
    threads: Option<usize>,
    /// Include wall-clock timings in the JSON report.
    #[arg(long, global = true)]
    timings: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build a connection set and write `.set`, `.g6` and `.json` files.
    Construct {
        #[command(subcommand)]
        family: Family,
        /// Output directory.
        #[arg(long, global = true, default_value = ".")]
        out: PathBuf,
        /// Base file name (default derived from the family and parameters).
        #[arg(long, global = true)]
        name: Option<String>,
    },
    /// Run checks on a graph or connection-set file.
    Verify(VerifyArgs),
    /// Run the reproduction suite and print a pass/fail table.
    Reproduce {
        /// Also run the full isomorphism decision for the 625-vertex Davis graph.
        #[arg(long)]
        extended: bool,
        /// Print the criteria without running them.
        #[arg(long)]
        list: bool,
        /// Seed for the randomized property checks.
        #[arg(long, default_value_t = suite::DEFAULT_SEED)]
        seed: u64,
    },
}

#[derive(Subcommand)]
enum Family {
    /// Nonzero squares of GF(q), q = 1 mod 4.
    Paley {
        #[arg(long)]
        q: u64,
    },
    /// Powers a^i with i = 0, 1 mod 4 of a primitive element a of GF(q), q = p^r with p = 3 mod 4 and r even.
    Peisert {
        #[arg(long)]
        q: u64,
        /// Primitive element as comma-separated coefficients, constant term first.
        #[arg(long, value_delimiter = ',')]
        generator: Option<Vec<u32>>,
    },
    /// Davis set over Z_{p^2} x Z_{p^2}, p an odd prime.
    Davis {
        #[arg(long)]
        p: u64,
    },
    /// Lexicographic product of two constructions, each given as FAMILY:PARAM (e.g. paley:5).
    Lexprod {
        #[arg(long)]
        left: String,
        #[arg(long)]
        right: String,
    },
}

#[derive(Args)]
struct VerifyArgs {
    /// Graph (.g6, .edges) or connection-set (.set) file.
    input: Option<PathBuf>,
    /// Override the format guessed from the file extension.
    #[arg(long)]
    format: Option<Format>,
    /// Inline connection set, e.g. "Z13:1;3;4;9;10;12" or "Z3xZ3:0,1;0,2".
    #[arg(long, conflicts_with = "input")]
    inline: Option<String>,
    #[arg(long)]
    srg: bool,
    #[arg(long)]
    dr: bool,
    #[arg(long)]
    pds: bool,
    #[arg(long)]
    schur: bool,
    #[arg(long)]
    selfcomp: bool,
    #[arg(long)]
    invariants: bool,
    /// Every check that applies to the input.
    #[arg(long)]
    all: bool,
    /// Search-node budget for the isomorphism decision.
    #[arg(long)]
    max_nodes: Option<u64>,
    /// Seconds before the isomorphism search gives up as undecided.
    #[arg(long)]
    time_limit: Option<f64>,
}

struct UsageError(String);

impl<E: std::fmt::Display> From<E> for UsageError {
    fn from(e: E) -> Self {
        UsageError(e.to_string())
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(n) = cli.threads {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(n).build_global() {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    }
    let result = match cli.command {
        Command::Construct { family, out, name } => construct(family, out, name, cli.timings),
        Command::Verify(args) => verify_cmd(args, cli.timings),
        Command::Reproduce { extended, list, seed } => reproduce(extended, list, seed, cli.timings),
    };
    match result {
        Ok(code) => code,
        Err(UsageError(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

/// Writes to stdout, ignoring a reader that hung up early.
fn emit(text: &str) {
    let _ = writeln!(std::io::stdout().lock(), "{text}");
}

fn print(v: &Value) {
    emit(&serde_json::to_string_pretty(v).expect("JSON values always serialize"));
}

fn exit_for(checks: &[CheckOutcome]) -> ExitCode {
    if checks.iter().all(|c| c.status == Status::Pass) { ExitCode::SUCCESS } else { ExitCode::from(1) }
}

fn build_named(spec: &str) -> Result<ConstructionReport, UsageError> {
    let (family, param) = spec.split_once(':').ok_or_else(|| UsageError(format!("expected FAMILY:PARAM, got {spec:?}")))?;
    let n: u64 = param.trim().parse().map_err(|_| UsageError(format!("bad parameter in {spec:?}")))?;
    Ok(match family.trim().to_ascii_lowercase().as_str() {
        "paley" => constructions::paley(n)?,
        "peisert" => constructions::peisert(n)?,
        "davis" => constructions::davis(n)?,
        other => return Err(UsageError(format!("unknown family {other:?}"))),
    })
}

fn construct(family: Family, out: PathBuf, name: Option<String>, timings: bool) -> Result<ExitCode, UsageError> {
    let (report, params, default_name) = match &family {
        Family::Paley { q } => (constructions::paley(*q)?, json!({ "family": "paley", "q": q }), format!("paley{q}")),
        Family::Peisert { q, generator } => (
            constructions::peisert_with(*q, generator.as_deref())?,
            json!({ "family": "peisert", "q": q, "generator": generator }),
            format!("peisert{q}"),
        ),
        Family::Davis { p } => (constructions::davis(*p)?, json!({ "family": "davis", "p": p }), format!("davis{p}")),
        Family::Lexprod { left, right } => {
            let r = constructions::lex_product(&build_named(left)?, &build_named(right)?)?;
            let tag = |s: &str| s.replace(':', "");
            (r, json!({ "family": "lexprod", "left": left, "right": right }), format!("{}-{}", tag(left), tag(right)))
        }
    };
    let name = name.unwrap_or(default_name);
    let graph = report.connection_set.cayley_graph();
    let paths = ["set", "g6", "json"].map(|ext| out.join(format!("{name}.{ext}")));
    let files = json!({
        "connection_set": paths[0].display().to_string(),
        "graph6": paths[1].display().to_string(),
        "report": paths[2].display().to_string(),
    });
    let doc = report::run_report(
        "construct",
        params,
        vec![
            ("construction", report::construction(&report)),
            ("graph", json!({ "vertices": graph.n(), "edges": graph.edge_count() })),
            ("files", files),
        ],
        &[],
        timings,
    );
    let text = serde_json::to_string_pretty(&doc).expect("JSON values always serialize");
    std::fs::create_dir_all(&out).map_err(|e| UsageError(format!("{}: {e}", out.display())))?;
    formats::write_file(&paths[0], &formats::to_set_file(&report.connection_set))?;
    formats::write_file(&paths[1], &(formats::to_graph6(&graph) + "\n"))?;
    formats::write_file(&paths[2], &(text.clone() + "\n"))?;
    emit(&text);
    Ok(ExitCode::SUCCESS)
}

fn verify_cmd(args: VerifyArgs, timings: bool) -> Result<ExitCode, UsageError> {
    let (format, input, source) = match (&args.input, &args.inline) {
        (Some(path), None) => {
            let (f, i) = formats::read_input(path, args.format)?;
            (f.name(), i, path.display().to_string())
        }
        (None, Some(text)) => (Format::SetFile.name(), Input::Set(formats::parse_inline_set(text)?), text.clone()),
        _ => return Err(UsageError("give an input file or --inline".into())),
    };
    let set = input.connection_set();
    let flags = [args.srg, args.dr, args.pds, args.schur, args.selfcomp, args.invariants];
    let requested: Vec<Check> = if args.all || !flags.iter().any(|&b| b) {
        Check::ALL.to_vec()
    } else {
        Check::ALL.iter().zip(flags).filter(|(_, on)| *on).map(|(&c, _)| c).collect()
    };
    let explicit = !args.all && flags.iter().any(|&b| b);
    if let Some(c) = requested.iter().find(|c| c.needs_connection_set() && set.is_none() && explicit) {
        return Err(UsageError(format!("--{} needs a connection-set input", c.name())));
    }
    let (run, skipped): (Vec<Check>, Vec<Check>) =
        requested.into_iter().partition(|c| !c.needs_connection_set() || set.is_some());
    if let Some(t) = args.time_limit {
        if !(t.is_finite() && t >= 0.0) {
            return Err(UsageError(format!("invalid --time-limit {t}")));
        }
    }
    let limits = Limits {
        max_nodes: args.max_nodes.unwrap_or(Limits::default().max_nodes),
        time_limit: args.time_limit.map(Duration::from_secs_f64),
    };
    let graph = input.graph();
    let outcomes = verify::run_checks(&run, &graph, set, limits);
    let params = json!({
        "input": source,
        "format": format,
        "checks": run.iter().map(|c| c.name()).collect::<Vec<_>>(),
        "max_nodes": limits.max_nodes,
        "time_limit_s": args.time_limit,
    });
    let mut about = json!({ "vertices": graph.n(), "edges": graph.edge_count() });
    if let Some(s) = set {
        about["connection_set"] = report::connection_set(s);
    }
    let mut extra = vec![("graph", about)];
    if !skipped.is_empty() {
        extra.push(("skipped", json!(skipped.iter().map(|c| c.name()).collect::<Vec<_>>())));
    }
    print(&report::run_report("verify", params, extra, &outcomes, timings));
    eprint!("{}", report::table(&outcomes));
    Ok(exit_for(&outcomes))
}

fn reproduce(extended: bool, list: bool, seed: u64, timings: bool) -> Result<ExitCode, UsageError> {
    let tier = if extended { Tier::Extended } else { Tier::Standard };
    let tier_name = if extended { "extended" } else { "standard" };
    let params = json!({ "tier": tier_name, "seed": seed });
    if list {
        print(&report::run_report("reproduce", params, vec![("criteria", suite::listing(tier))], &[], false));
        return Ok(ExitCode::SUCCESS);
    }
    let outcomes = suite::run(&Context { tier, seed });
    print(&report::run_report("reproduce", params, vec![], &outcomes, timings));
    eprint!("{}", report::table(&outcomes));
    Ok(exit_for(&outcomes))
}
