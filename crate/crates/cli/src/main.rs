//! `pgv`: build, inspect and verify symmetric coset graphs.

mod files;

use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use pgv_core::constructions::{build_family, family_graph, verify_family, Family, FamilySpec};
use pgv_core::graph::io::{from_graph6, read_edge_list, to_graph6, write_action_record, write_edge_list, FormatError};
use pgv_core::graph::{coset_graph, CosetGraph};
use pgv_core::group::DoubleCosetSet;
use pgv_core::symmetry::{automorphism_group, canonical_form};
use pgv_core::{configure_threads, Error, PermGroup, Permutation, RunConfig, SymGraph};
use serde::Serialize;
use serde_json::json;
use thiserror::Error as ThisError;

use files::{read_group_file, read_text, write_atomic};

#[derive(Parser)]
#[command(name = "pgv", version, about = "Permutation groups, coset graphs and their automorphisms")]
struct Cli {
    #[command(flatten)]
    limits: Limits,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Limits {
    /// Largest coset space that will be enumerated.
    #[arg(long, global = true)]
    vertex_budget: Option<usize>,
    /// Largest graph handed to the automorphism search.
    #[arg(long, global = true)]
    aut_limit: Option<usize>,
    /// Largest group whose elements are listed explicitly.
    #[arg(long, global = true)]
    enumeration_bound: Option<usize>,
    /// Worker threads; overrides PGV_THREADS.
    #[arg(long, global = true)]
    threads: Option<usize>,
}

#[derive(Subcommand)]
enum Command {
    /// Order, orbits and solvability of a group given by generators.
    Group {
        /// `degree N` followed by one generator per line in cycle notation.
        file: PathBuf,
        /// Also write the result as JSON here.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Build a coset graph and write its edge list and action record.
    Build(BuildArgs),
    /// Run every check for a family and write the report.
    Verify {
        #[command(flatten)]
        family: FamilyArgs,
        /// Write the JSON report here instead of standard output.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Keep per-stage wall-clock timings in the report.
        #[arg(long)]
        timings: bool,
    },
    /// Automorphism group of a graph file.
    Aut {
        file: PathBuf,
        /// Input format; guessed from the extension when omitted.
        #[arg(long, value_enum)]
        format: Option<GraphFormat>,
        /// Also write the result as JSON here.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Quotient of a graph by a vertex partition or by the orbits of a group.
    Quotient {
        file: PathBuf,
        /// Input format; guessed from the extension when omitted.
        #[arg(long, value_enum)]
        format: Option<GraphFormat>,
        /// One block per line, 1-based vertices separated by spaces.
        #[arg(long, conflicts_with = "orbits_of", required_unless_present = "orbits_of")]
        blocks: Option<PathBuf>,
        /// Group file acting on the vertices; its orbits are the blocks.
        #[arg(long)]
        orbits_of: Option<PathBuf>,
        /// Edge list of the quotient graph.
        #[arg(long)]
        out: PathBuf,
    },
}

#[derive(Args)]
struct FamilyArgs {
    /// One of psl2-11, psl2-29, m23, alt-p.
    #[arg(long, value_parser = parse_family)]
    family: Family,
    /// Prime for alt-p (at least 5).
    #[arg(long)]
    p: Option<u64>,
    /// Allow the larger alternating-family graphs.
    #[arg(long)]
    deep: bool,
}

#[derive(Args)]
struct BuildArgs {
    /// One of psl2-11, psl2-29, m23, alt-p.
    #[arg(long, value_parser = parse_family, conflicts_with_all = ["group", "subgroup", "element"])]
    family: Option<Family>,
    /// Prime for alt-p (at least 5).
    #[arg(long, requires = "family")]
    p: Option<u64>,
    /// Allow the larger alternating-family graphs.
    #[arg(long, requires = "family")]
    deep: bool,
    /// Group file for the acting group `T`.
    #[arg(long, requires_all = ["subgroup", "element"])]
    group: Option<PathBuf>,
    /// Group file for the vertex stabilizer `H`.
    #[arg(long)]
    subgroup: Option<PathBuf>,
    /// `t` in cycle notation; the connection set is `HtH ∪ Ht⁻¹H`.
    #[arg(long)]
    element: Option<String>,
    /// Created if missing; receives graph.edges, action.json and build.json.
    #[arg(long)]
    out_dir: PathBuf,
    /// Also write graph6.
    #[arg(long)]
    graph6: bool,
}

#[derive(Clone, Copy, ValueEnum)]
enum GraphFormat {
    Edges,
    Graph6,
}

fn parse_family(s: &str) -> Result<Family, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

#[derive(Debug, ThisError)]
enum CliError {
    #[error("{0}")]
    Input(String),
    #[error("{0}")]
    Budget(String),
    #[error("{path}: {source}")]
    Io { path: PathBuf, source: std::io::Error },
}

impl CliError {
    fn exit_code(&self) -> u8 {
        match self {
            CliError::Budget(_) => 3,
            CliError::Input(_) | CliError::Io { .. } => 2,
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        if e.is_budget() {
            CliError::Budget(e.to_string())
        } else {
            CliError::Input(e.to_string())
        }
    }
}

fn format_error(path: &Path, e: FormatError) -> CliError {
    match e {
        FormatError::Io(source) => CliError::Io {
            path: path.to_path_buf(),
            source,
        },
        other => CliError::Input(format!("{}: {other}", path.display())),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("pgv: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}

fn run_config(limits: &Limits) -> Result<RunConfig, CliError> {
    let mut config = RunConfig::from_env()?;
    if let Some(v) = limits.vertex_budget {
        config.vertex_budget = v;
    }
    if let Some(v) = limits.aut_limit {
        config.aut_vertex_limit = v;
    }
    if let Some(v) = limits.enumeration_bound {
        config.enumeration_bound = v;
    }
    if limits.threads.is_some() {
        config.threads = limits.threads;
    }
    let budgets = [config.vertex_budget, config.aut_vertex_limit, config.enumeration_bound];
    if budgets.contains(&0) || config.threads == Some(0) {
        return Err(CliError::Input("budgets and thread counts must be positive".into()));
    }
    configure_threads(config.threads);
    Ok(config)
}

fn run(cli: Cli) -> Result<u8, CliError> {
    let config = run_config(&cli.limits)?;
    match cli.command {
        Command::Group { file, out } => cmd_group(&file, out.as_deref()),
        Command::Build(args) => cmd_build(&args, &config),
        Command::Verify { family, out, timings } => cmd_verify(&family, out.as_deref(), timings, &config),
        Command::Aut { file, format, out } => cmd_aut(&file, format, out.as_deref(), &config),
        Command::Quotient {
            file,
            format,
            blocks,
            orbits_of,
            out,
        } => cmd_quotient(&file, format, blocks.as_deref(), orbits_of.as_deref(), &out),
    }
}

/// Prints `text` and, when `out` is given, writes it there too.
fn emit(text: &str, out: Option<&Path>) -> Result<(), CliError> {
    print!("{text}");
    if let Some(path) = out {
        write_atomic(path, |w| w.write_all(text.as_bytes()))?;
    }
    Ok(())
}

fn pretty(value: &impl Serialize) -> String {
    serde_json::to_string_pretty(value).expect("summary serializes") + "\n"
}

#[derive(Serialize)]
struct GroupSummary {
    degree: usize,
    generators: Vec<String>,
    order: String,
    orbits: Vec<Vec<u32>>,
    transitive: bool,
    solvable: bool,
    perfect: bool,
    derived_series_orders: Vec<String>,
}

fn cmd_group(file: &Path, out: Option<&Path>) -> Result<u8, CliError> {
    let group = read_group_file(file)?;
    let series = group.derived_series();
    let summary = GroupSummary {
        degree: group.degree(),
        generators: group.generators().iter().map(ToString::to_string).collect(),
        order: group.order().to_string(),
        orbits: group
            .orbits()
            .into_iter()
            .map(|o| o.into_iter().map(|v| v + 1).collect())
            .collect(),
        transitive: group.is_transitive(),
        solvable: series.is_solvable(),
        perfect: series.is_perfect(),
        derived_series_orders: series.orders().iter().map(ToString::to_string).collect(),
    };
    emit(&pretty(&summary), out)?;
    Ok(0)
}

fn cmd_build(args: &BuildArgs, config: &RunConfig) -> Result<u8, CliError> {
    let (label, cg) = match (&args.family, &args.group) {
        (Some(family), _) => {
            let spec = FamilySpec::new(*family, args.p, args.deep)?;
            let bundle = build_family(spec)?;
            (json!({"family": family, "p": spec.p}), family_graph(&bundle, config)?)
        }
        (None, Some(group_file)) => {
            let group = read_group_file(group_file)?;
            let subgroup = read_group_file(args.subgroup.as_deref().expect("clap requires it"))?;
            let text = args.element.as_deref().expect("clap requires it");
            let t = Permutation::parse_cycles(text, group.degree())?;
            (json!({"element": t.to_string()}), triple_graph(&group, &subgroup, &t, config)?)
        }
        (None, None) => return Err(CliError::Input("build needs --family or --group/--subgroup/--element".into())),
    };
    let graph = &cg.graph;
    let dir = &args.out_dir;
    std::fs::create_dir_all(dir).map_err(|source| CliError::Io {
        path: dir.clone(),
        source,
    })?;
    write_atomic(&dir.join("graph.edges"), |w| write_edge_list(graph, w))?;
    write_atomic(&dir.join("action.json"), |w| {
        write_action_record(&cg.action.generator_images, w)
    })?;
    if args.graph6 {
        let text = to_graph6(graph).map_err(|e| CliError::Input(e.to_string()))?;
        write_atomic(&dir.join("graph.g6"), |w| writeln!(w, "{text}"))?;
    }
    let summary = json!({
        "source": label,
        "vertices": graph.vertex_count(),
        "edges": graph.edge_count(),
        "valency": graph.valency(),
        "connected": graph.is_connected(),
        "bipartite": graph.is_bipartite(),
        "config": config,
    });
    emit(&pretty(&summary), Some(&dir.join("build.json")))?;
    Ok(0)
}

fn triple_graph(group: &PermGroup, subgroup: &PermGroup, t: &Permutation, config: &RunConfig) -> Result<CosetGraph, Error> {
    let bound = config.enumeration_bound;
    let forward = subgroup.double_coset(t, bound)?;
    let backward = subgroup.double_coset(&t.inverse(), bound)?;
    let mut elements = forward.elements().to_vec();
    elements.extend_from_slice(backward.elements());
    elements.sort_unstable();
    elements.dedup();
    let d = DoubleCosetSet::from_elements(subgroup.clone(), t.clone(), elements);
    coset_graph(group, subgroup, &d, config.vertex_budget, bound)
}

fn cmd_verify(family: &FamilyArgs, out: Option<&Path>, timings: bool, config: &RunConfig) -> Result<u8, CliError> {
    let spec = FamilySpec::new(family.family, family.p, family.deep)?;
    let mut report = verify_family(spec, config)?;
    if !timings {
        report.timings = None;
    }
    let text = report.to_json();
    match out {
        Some(path) => write_atomic(path, |w| w.write_all(text.as_bytes()))?,
        None => print!("{text}"),
    }
    for claim in report.failures() {
        eprintln!("FAIL {}: expected {}, computed {}", claim.name, claim.expected, claim.computed);
    }
    for note in &report.budget_notes {
        eprintln!("skipped {note}");
    }
    Ok(report.exit_code() as u8)
}

fn read_graph(file: &Path, format: Option<GraphFormat>) -> Result<SymGraph, CliError> {
    let format = format.unwrap_or_else(|| match file.extension().and_then(|e| e.to_str()) {
        Some("g6") => GraphFormat::Graph6,
        _ => GraphFormat::Edges,
    });
    let text = read_text(file)?;
    match format {
        GraphFormat::Edges => read_edge_list(text.as_bytes()),
        GraphFormat::Graph6 => from_graph6(text.trim()),
    }
    .map_err(|e| format_error(file, e))
}

fn cmd_aut(file: &Path, format: Option<GraphFormat>, out: Option<&Path>, config: &RunConfig) -> Result<u8, CliError> {
    let graph = read_graph(file, format)?;
    let aut = automorphism_group(&graph, config.aut_vertex_limit)?;
    let canonical = canonical_form(&graph, config.aut_vertex_limit)?;
    let canonical_graph = SymGraph::from_edges(canonical.vertex_count, canonical.edges)?;
    let summary = json!({
        "vertices": graph.vertex_count(),
        "edges": graph.edge_count(),
        "order": aut.order.to_string(),
        "vertex_transitive": aut.vertex_transitive,
        "base": aut.base.iter().map(|v| v + 1).collect::<Vec<_>>(),
        "orbit_lengths": aut.orbit_lengths,
        "stabilizer_order": aut.base_stabilizer_order().to_string(),
        "generators": aut.generators.iter().map(ToString::to_string).collect::<Vec<_>>(),
        "canonical_graph6": to_graph6(&canonical_graph).ok(),
    });
    emit(&pretty(&summary), out)?;
    Ok(0)
}

fn cmd_quotient(
    file: &Path,
    format: Option<GraphFormat>,
    blocks: Option<&Path>,
    orbits_of: Option<&Path>,
    out: &Path,
) -> Result<u8, CliError> {
    let graph = read_graph(file, format)?;
    let blocks = match (blocks, orbits_of) {
        (Some(path), _) => files::read_blocks(path)?,
        (None, Some(path)) => {
            let group = read_group_file(path)?;
            if group.degree() != graph.vertex_count() {
                return Err(CliError::Input(format!(
                    "group degree {} differs from vertex count {}",
                    group.degree(),
                    graph.vertex_count()
                )));
            }
            group.orbits()
        }
        (None, None) => return Err(CliError::Input("quotient needs --blocks or --orbits-of".into())),
    };
    let q = graph.quotient(&blocks)?;
    write_atomic(out, |w| write_edge_list(&q.graph, w))?;
    let summary = json!({
        "blocks": blocks.len(),
        "vertices": q.graph.vertex_count(),
        "edges": q.graph.edge_count(),
        "valency": q.graph.valency(),
        "original_valency": graph.valency(),
        "discarded_loops": q.discarded_loops,
        "collapsed_multi_edges": q.collapsed_multi_edges,
    });
    print!("{}", pretty(&summary));
    Ok(0)
}
