//! `unitgraph`: structure reports, unit graph exports, exact invariants and
//! theorem checks for finite rings given in a small DSL.

mod report;

use std::io::{self, Write};
use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::{CommandFactory, Parser, Subcommand, ValueEnum};

use unitgraph::graph::build_unit_graph;
use unitgraph::invariants::{
    invariant_report, SolverOptions, DEFAULT_CHI_EXACT_CAP, DEFAULT_NODE_BUDGET,
};
use unitgraph::lab::{default_catalog, describe, run_catalog, LabOptions, Summary, TheoremFilter};
use unitgraph::ring::{check_axioms, parse_ring_spec, realize, FiniteRing, RingSpec, DEFAULT_ORDER_CAP};
use unitgraph::structure::{structure_report, DEFAULT_IDEAL_ENUM_CAP};

use report::Records;

/// Seed for sampled axiom checks on rings above the exhaustive limit.
const DEFAULT_SEED: u64 = 20240531;

#[derive(Parser)]
#[command(name = "unitgraph", version, about = "Unit graphs of finite rings")]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Output format. `ring`, `invariants`, `verify` and `catalog` take
    /// human|records; `graph` takes dot|edgelist.
    #[arg(long, global = true, value_enum)]
    format: Option<Format>,

    /// Largest ring order to realize.
    #[arg(long, global = true, default_value_t = DEFAULT_ORDER_CAP)]
    order_cap: u64,

    /// Largest graph on which the chromatic number is computed exactly.
    #[arg(long, global = true, default_value_t = DEFAULT_CHI_EXACT_CAP)]
    chi_cap: usize,

    /// Search-node budget per exact solve; 0 means unlimited.
    #[arg(long, global = true, default_value_t = DEFAULT_NODE_BUDGET)]
    node_budget: u64,

    /// Seed for sampled axiom checks.
    #[arg(long, global = true, default_value_t = DEFAULT_SEED)]
    seed: u64,
}

#[derive(Subcommand)]
enum Command {
    /// Structure report: units, radical, maximal left ideals, locality.
    Ring { spec: String },
    /// The unit graph as an edge list or DOT.
    Graph { spec: String },
    /// Clique, independence and chromatic numbers, bipartiteness and
    /// complete multipartite structure of the unit graph.
    Invariants { spec: String },
    /// Checks theorem instances over the default catalog or given rings.
    Verify {
        /// Comma-separated, case-insensitive theorem id prefixes.
        #[arg(long)]
        theorem: Option<String>,
        /// Ring to check instead of the catalog; repeatable.
        #[arg(long)]
        ring: Vec<String>,
        /// Worker threads (default: available processors).
        #[arg(long)]
        jobs: Option<usize>,
        /// Skip rings larger than this.
        #[arg(long)]
        max_order: Option<u64>,
    },
    /// The default ring catalog.
    Catalog {
        #[command(subcommand)]
        action: CatalogAction,
    },
}

#[derive(Subcommand)]
enum CatalogAction {
    /// One line per catalog ring: spec, order, note.
    List {
        #[arg(long)]
        max_order: Option<u64>,
    },
    /// The note for one catalog ring.
    Describe { spec: String },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Human,
    Records,
    Dot,
    Edgelist,
}

#[derive(Clone, Copy)]
enum Exit {
    Ok = 0,
    TheoremFailure = 1,
    Parse = 2,
    Realization = 3,
    Budget = 4,
}

struct Failure(Exit, String);

type Outcome = Result<Exit, Failure>;

impl Cli {
    fn solver(&self) -> SolverOptions {
        SolverOptions {
            chi_exact_cap: self.chi_cap,
            node_budget: (self.node_budget > 0).then_some(self.node_budget),
        }
    }

    fn lab(&self) -> LabOptions {
        LabOptions {
            order_cap: self.order_cap,
            ideal_cap: DEFAULT_IDEAL_ENUM_CAP,
            solver: self.solver(),
        }
    }

    /// The effective format, rejecting pairs that make no sense.
    fn format(&self) -> Format {
        let graph = matches!(self.command, Command::Graph { .. });
        match (graph, self.format) {
            (true, None) => Format::Edgelist,
            (false, None) => Format::Human,
            (true, Some(f @ (Format::Dot | Format::Edgelist))) | (false, Some(f @ (Format::Human | Format::Records))) => f,
            (true, Some(_)) => conflict("`graph` writes dot or edgelist"),
            (false, Some(_)) => conflict("dot and edgelist apply only to `graph`"),
        }
    }
}

fn conflict(msg: &str) -> ! {
    Cli::command().error(ErrorKind::ArgumentConflict, msg).exit()
}

fn parse(text: &str) -> Result<RingSpec, Failure> {
    parse_ring_spec(text).map_err(|e| Failure(Exit::Parse, format!("cannot parse {text:?} {e}")))
}

fn ring(text: &str, cap: u64) -> Result<FiniteRing, Failure> {
    let spec = parse(text)?;
    realize(&spec, cap).map_err(|e| Failure(Exit::Realization, format!("{spec}: {e}")))
}

fn cmd_ring(cli: &Cli, text: &str, out: &mut impl Write) -> Outcome {
    let r = ring(text, cli.order_cap)?;
    let s = structure_report(&r, DEFAULT_IDEAL_ENUM_CAP);
    let axioms = check_axioms(&r, cli.seed);
    Records::structure(&r, &s, &axioms, cli.format() == Format::Human).write(out, cli.format());
    Ok(match axioms {
        Ok(_) => Exit::Ok,
        Err(_) => Exit::Realization,
    })
}

fn cmd_graph(cli: &Cli, text: &str, out: &mut impl Write) -> Outcome {
    let g = build_unit_graph(&ring(text, cli.order_cap)?);
    let body = match cli.format() {
        Format::Dot => g.export_dot(),
        _ => g.export_edgelist(),
    };
    if !body.is_empty() {
        writeln!(out, "{body}").ok();
    }
    Ok(Exit::Ok)
}

fn cmd_invariants(cli: &Cli, text: &str, out: &mut impl Write) -> Outcome {
    let r = ring(text, cli.order_cap)?;
    let g = build_unit_graph(&r);
    let opts = cli.solver();
    let inv = invariant_report(&g, &opts);
    Records::invariants(&r, &inv, cli.format() == Format::Human).write(out, cli.format());
    if inv.budget_exhausted(&opts, g.vertex_count()) {
        return Err(Failure(Exit::Budget, "node budget exceeded; the report above is inexact".into()));
    }
    Ok(Exit::Ok)
}

fn cmd_verify(
    cli: &Cli,
    theorem: Option<&str>,
    rings: &[String],
    jobs: Option<usize>,
    max_order: Option<u64>,
    out: &mut impl Write,
) -> Outcome {
    let filter = match theorem {
        Some(t) => TheoremFilter::parse(t).map_err(|e| Failure(Exit::Parse, e.to_string()))?,
        None => TheoremFilter::all(),
    };
    let mut specs = if rings.is_empty() {
        default_catalog().into_iter().map(|e| e.spec).collect()
    } else {
        rings.iter().map(|t| parse(t)).collect::<Result<Vec<_>, _>>()?
    };
    if let Some(max) = max_order {
        specs.retain(|s| s.order().is_some_and(|o| o <= max));
    }
    let jobs = jobs.unwrap_or_else(|| std::thread::available_parallelism().map_or(1, |n| n.get()));
    let reports = run_catalog(&specs, &filter, &cli.lab(), jobs);
    for r in &reports {
        match &r.outcome {
            Ok(verdicts) => {
                for v in verdicts {
                    writeln!(out, "{}", v.to_line()).ok();
                }
            }
            Err(e) => eprintln!("error: {}: {e}", r.spec),
        }
    }
    let s = Summary::of(&reports);
    let line = match cli.format() {
        Format::Records => format!(
            "#summary\tholds={}\tfails={}\tn/a={}\tskipped={}\trealization_errors={}",
            s.holds, s.fails, s.not_applicable, s.skipped, s.realization_errors
        ),
        _ => format!(
            "summary: rings {}, holds {}, fails {}, n/a {}, skipped {}, realization errors {}",
            reports.len(),
            s.holds,
            s.fails,
            s.not_applicable,
            s.skipped,
            s.realization_errors
        ),
    };
    writeln!(out, "{line}").ok();
    Ok(if s.fails > 0 {
        Exit::TheoremFailure
    } else if s.realization_errors > 0 {
        Exit::Realization
    } else {
        Exit::Ok
    })
}

fn cmd_catalog(cli: &Cli, action: &CatalogAction, out: &mut impl Write) -> Outcome {
    match action {
        CatalogAction::List { max_order } => {
            let rows: Vec<[String; 3]> = default_catalog()
                .into_iter()
                .filter_map(|e| {
                    let order = e.spec.order()?;
                    max_order
                        .is_none_or(|m| order <= m)
                        .then(|| [e.spec.to_string(), order.to_string(), e.note.to_string()])
                })
                .collect();
            report::write_rows(out, &rows, cli.format());
            Ok(Exit::Ok)
        }
        CatalogAction::Describe { spec } => {
            let parsed = parse(spec)?;
            match describe(&parsed) {
                Some(note) => {
                    writeln!(out, "{note}").ok();
                    Ok(Exit::Ok)
                }
                None => Err(Failure(Exit::Realization, format!("{parsed} is not in the default catalog"))),
            }
        }
    }
}

fn run(cli: &Cli, out: &mut impl Write) -> Outcome {
    match &cli.command {
        Command::Ring { spec } => cmd_ring(cli, spec, out),
        Command::Graph { spec } => cmd_graph(cli, spec, out),
        Command::Invariants { spec } => cmd_invariants(cli, spec, out),
        Command::Verify {
            theorem,
            ring,
            jobs,
            max_order,
        } => cmd_verify(cli, theorem.as_deref(), ring, *jobs, *max_order, out),
        Command::Catalog { action } => cmd_catalog(cli, action, out),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    cli.format();
    let stdout = io::stdout();
    let mut out = io::BufWriter::new(stdout.lock());
    let code = match run(&cli, &mut out) {
        Ok(code) => code,
        Err(Failure(code, msg)) => {
            out.flush().ok();
            eprintln!("error: {msg}");
            code
        }
    };
    out.flush().ok();
    ExitCode::from(code as u8)
}
