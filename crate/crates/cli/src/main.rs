//! Command-line front end: every library operation over JSON and edge-list
//! files, with DOT and text emission, a search budget, and stable exit
//! codes (0 success, 2 invalid input, 3 budget refused, 1 internal).
//!
//! Output is byte-identical across runs for identical arguments, seed
//! included, and nothing is printed to standard output on failure.

use clap::{Parser, Subcommand, ValueEnum};
use relgraph::catalog;
use relgraph::contraction;
use relgraph::graph::MergeMode;
use relgraph::id::Id;
use relgraph::incidence::incidence_matrix;
use relgraph::invariant;
use relgraph::io;
use relgraph::minor;
use relgraph::morphism::{self, MorphismKind};
use relgraph::order::{self, OrderRelation};
use relgraph::product::{self, Category, CoproductConstruction, ProductConstruction};
use relgraph::relational;
use relgraph::transform::{self, SuperLineOptions};
use relgraph::{Error, Graph, Result, DEFAULT_BUDGET};
use serde::Serialize;
use serde_json::json;
use std::collections::{BTreeMap, BTreeSet};
use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

#[derive(Parser)]
#[command(
    name = "relgraph",
    version,
    about = "Graphs as edge-to-endpoint maps: morphisms, products, quotients, minors, orders, and transformation graphs",
    after_help = "Environment: RELGRAPH_FORMAT, RELGRAPH_BUDGET, and RELGRAPH_SEED override the global flags."
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,

    /// Output format; dot applies to graph-shaped results only.
    #[arg(long, global = true, value_enum, default_value_t = Format::Json, env = "RELGRAPH_FORMAT")]
    format: Format,

    /// Largest candidate space any single enumeration may visit; searches
    /// refuse before starting when they would exceed it.
    #[arg(long, global = true, default_value_t = DEFAULT_BUDGET, env = "RELGRAPH_BUDGET",
          value_parser = clap::value_parser!(u64).range(1..))]
    budget: u64,

    /// Seed for sampled relabeling audits.
    #[arg(long, global = true, default_value_t = 0, env = "RELGRAPH_SEED")]
    seed: u64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Dot,
    Text,
}

#[derive(Subcommand)]
enum Cmd {
    /// Emit a built-in graph: petersen, q3, k33, or the k<n>/c<n>/p<n> families.
    Named { name: String },
    /// One canonical representative per isomorphism class of simple
    /// undirected graphs up to the given order (at most 7).
    Catalog {
        #[arg(long)]
        max_order: usize,
    },
    /// Inspect or convert a single graph.
    #[command(subcommand)]
    Graph(GraphCmd),
    /// Relational-system views of graphs.
    #[command(subcommand)]
    Rel(RelCmd),
    /// Check or enumerate structure-preserving vertex maps.
    #[command(subcommand)]
    Morphism(MorphismCmd),
    /// Search for an isomorphism between two graphs.
    Iso {
        #[arg(long)]
        left: PathBuf,
        #[arg(long)]
        right: PathBuf,
    },
    /// Enumerate the automorphism group.
    Aut {
        #[arg(long)]
        input: PathBuf,
    },
    /// Evaluate labeled invariants or audit them under relabelings.
    #[command(subcommand)]
    Invariant(InvariantCmd),
    /// Build pair constructions and verify the product property.
    #[command(subcommand)]
    Product(ProductCmd),
    /// Build sum constructions and verify the coproduct property.
    #[command(subcommand)]
    Coproduct(CoproductCmd),
    /// Quotient a graph by a connected partition.
    Contract {
        #[arg(long)]
        input: PathBuf,
        /// Partition JSON {"blocks": [[id,...],...]}.
        #[arg(long)]
        partition: Option<PathBuf>,
        /// Alternative: comma-separated edge ids whose components become the
        /// non-singleton blocks.
        #[arg(long)]
        edges: Option<String>,
        /// Keep one parallel edge per crossing host edge.
        #[arg(long)]
        faithful: bool,
    },
    /// Decide whether some connected partition of the host contracts onto
    /// the target, by exhaustive search.
    ContractionExists {
        #[arg(long)]
        host: PathBuf,
        #[arg(long)]
        target: PathBuf,
    },
    /// Search for the pattern as a minor of the host, with a witness.
    Minor {
        #[arg(long)]
        pattern: PathBuf,
        #[arg(long)]
        host: PathBuf,
    },
    /// Search for a subdivision of the pattern inside the host.
    TopoMinor {
        #[arg(long)]
        pattern: PathBuf,
        #[arg(long)]
        host: PathBuf,
    },
    /// Audit the minor relation as a preorder over a catalog pool n<k>.
    MinorAudit {
        #[arg(long)]
        pool: String,
    },
    /// Decide planarity by searching for the two forbidden minors.
    Planar {
        #[arg(long)]
        input: PathBuf,
    },
    /// Classify and use binary relations as orders.
    #[command(subcommand)]
    Order(OrderCmd),
    /// Graphs whose vertices are derived objects.
    #[command(subcommand)]
    Transform(TransformCmd),
}

#[derive(Subcommand)]
enum GraphCmd {
    /// Order, size, flags, degree sequence, diameter, girth, connectivity.
    Info {
        #[arg(long)]
        input: PathBuf,
    },
    /// Forget directions, either merging parallel images or keeping them.
    Underlying {
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        multigraph: bool,
    },
    /// Signed vertex-by-edge incidence matrix of a directed loopless graph.
    Incidence {
        #[arg(long)]
        input: PathBuf,
    },
    /// Parse whitespace edge-list text into the JSON graph document.
    FromEdges {
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        directed: bool,
    },
}

#[derive(Subcommand)]
enum RelCmd {
    /// View a graph as a system with one binary relation.
    FromGraph {
        #[arg(long)]
        input: PathBuf,
    },
    /// Read a single binary relation back as a graph.
    ToGraph {
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        directed: bool,
    },
    /// Report the arity multiset of a system as (arity, count) pairs.
    Type {
        #[arg(long)]
        input: PathBuf,
    },
}

#[derive(Subcommand)]
enum MorphismCmd {
    /// Check one vertex map against a morphism kind.
    Check {
        #[arg(long)]
        source: PathBuf,
        #[arg(long)]
        target: PathBuf,
        /// Morphism JSON {"map": {...}, "kind": "hom|ega|co|iso"}.
        #[arg(long)]
        map: PathBuf,
        /// Override the kind recorded in the map file.
        #[arg(long)]
        kind: Option<String>,
    },
    /// Enumerate every morphism of a kind between two graphs.
    Enumerate {
        #[arg(long)]
        source: PathBuf,
        #[arg(long)]
        target: PathBuf,
        #[arg(long)]
        kind: String,
    },
}

#[derive(Subcommand)]
enum InvariantCmd {
    /// Evaluate one labeled invariant.
    Eval {
        #[arg(long)]
        input: PathBuf,
        /// degree_sequence, aut_order, determinant, or min_id_degree.
        #[arg(long)]
        label: String,
    },
    /// Audit invariance under seeded random relabelings.
    Check {
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        label: String,
        #[arg(long, default_value_t = 200)]
        trials: usize,
    },
}

#[derive(Subcommand)]
enum ProductCmd {
    /// Build cross, cartesian, strong, or disjunction over two graphs.
    Build {
        #[arg(long)]
        kind: String,
        #[arg(long)]
        left: PathBuf,
        #[arg(long)]
        right: PathBuf,
    },
    /// Check the universal property in a category (gra, egra, cgra, set),
    /// quantifying test objects over a catalog pool n<k>. With --left and
    /// --right the factors are fixed; otherwise they range over the pool.
    Verify {
        #[arg(long)]
        kind: String,
        #[arg(long)]
        category: String,
        #[arg(long)]
        pool: String,
        #[arg(long)]
        left: Option<PathBuf>,
        #[arg(long)]
        right: Option<PathBuf>,
    },
}

#[derive(Subcommand)]
enum CoproductCmd {
    /// Build disjoint-union or join over two graphs.
    Build {
        #[arg(long)]
        kind: String,
        #[arg(long)]
        left: PathBuf,
        #[arg(long)]
        right: PathBuf,
    },
    /// Check the coproduct property; see `product verify` for the shape.
    Verify {
        #[arg(long)]
        kind: String,
        #[arg(long)]
        category: String,
        #[arg(long)]
        pool: String,
        #[arg(long)]
        left: Option<PathBuf>,
        #[arg(long)]
        right: Option<PathBuf>,
    },
}

#[derive(Subcommand)]
enum OrderCmd {
    /// Report the axioms and the classification ladder with any cycle found.
    Classify {
        #[arg(long)]
        input: PathBuf,
    },
    /// List the elements with nothing strictly below them.
    Minimal {
        #[arg(long)]
        input: PathBuf,
    },
    /// Fold in topological order, computing each element's height (longest
    /// strict chain below it); refuses non-well-founded input with a cycle.
    Fold {
        #[arg(long)]
        input: PathBuf,
    },
    /// Count antichains and chains and report maximum examples.
    Antichain {
        #[arg(long)]
        input: PathBuf,
    },
    /// Emit divisibility on lo..=hi as an order relation document.
    Divisibility {
        #[arg(long)]
        lo: i64,
        #[arg(long)]
        hi: i64,
    },
}

#[derive(Subcommand)]
enum TransformCmd {
    /// Directed proper-divisor graph on lo..=hi.
    Divisor {
        #[arg(long)]
        lo: i64,
        #[arg(long)]
        hi: i64,
    },
    /// Spanning trees, adjacent when they exchange one edge.
    Tree {
        #[arg(long)]
        input: PathBuf,
    },
    /// Perfect matchings, adjacent when their difference is one cycle.
    Matching {
        #[arg(long)]
        input: PathBuf,
    },
    /// Isomorphism classes realizing a degree sequence, adjacent under a
    /// single 2-switch.
    Realization {
        /// Comma-separated degrees, e.g. 2,2,2,2.
        #[arg(long)]
        degrees: String,
    },
    /// Edge r-subsets, adjacent when their union carries the pattern.
    Superline {
        #[arg(long)]
        input: PathBuf,
        #[arg(long, default_value_t = 1)]
        index: usize,
        /// Pattern graph file; the two-edge path when omitted.
        #[arg(long)]
        pattern: Option<PathBuf>,
        /// Accept any copy of the pattern, even inside one subset.
        #[arg(long)]
        literal: bool,
        /// Join only disjoint subsets.
        #[arg(long)]
        disjoint_only: bool,
    },
    /// Edges, adjacent when they share an endpoint.
    Line {
        #[arg(long)]
        input: PathBuf,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match std::panic::catch_unwind(|| run(&cli)) {
        Ok(Ok(out)) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Ok(Err(e)) => {
            eprintln!("error: {e}");
            match e {
                Error::ResourceLimit(_) => ExitCode::from(3),
                _ => ExitCode::from(2),
            }
        }
        Err(_) => {
            eprintln!("error: internal failure");
            ExitCode::from(1)
        }
    }
}

fn run(cli: &Cli) -> Result<String> {
    let f = cli.format;
    let budget = cli.budget;
    match &cli.cmd {
        Cmd::Named { name } => Ok(emit_graph(&catalog::named(name)?, f)),
        Cmd::Catalog { max_order } => {
            let graphs = catalog::catalog(*max_order)?;
            match f {
                Format::Json => Ok(json_line(&graphs)),
                Format::Dot => Err(Error::invalid("a catalog has no DOT form")),
                Format::Text => {
                    let mut out = String::new();
                    for n in 1..=*max_order {
                        let count = graphs.iter().filter(|g| g.order() == n).count();
                        out.push_str(&format!("order {n}: {count} classes\n"));
                    }
                    out.push_str(&format!("total: {} classes\n", graphs.len()));
                    Ok(out)
                }
            }
        }
        Cmd::Graph(op) => run_graph(op, f, budget),
        Cmd::Rel(op) => run_rel(op, f),
        Cmd::Morphism(op) => run_morphism(op, f, budget),
        Cmd::Iso { left, right } => {
            let m = morphism::are_isomorphic(&load_graph(left)?, &load_graph(right)?, budget)?;
            emit_report(&json!({ "isomorphic": m.is_some(), "map": m }), f)
        }
        Cmd::Aut { input } => {
            let grp = morphism::automorphism_group(&load_graph(input)?, budget)?;
            emit_report(&json!({ "order": grp.order(), "perms": grp.perms }), f)
        }
        Cmd::Invariant(op) => run_invariant(op, f, budget, cli.seed),
        Cmd::Product(op) => run_product(op, f, budget),
        Cmd::Coproduct(op) => run_coproduct(op, f, budget),
        Cmd::Contract {
            input,
            partition,
            edges,
            faithful,
        } => {
            let g = load_graph(input)?;
            let p = match (partition, edges) {
                (Some(path), None) => io::partition_from_json(&g, &read_text(path)?)?,
                (None, Some(csv)) => {
                    let set: BTreeSet<Id> =
                        csv.split(',').map(|t| Id::from_key(t.trim())).collect();
                    contraction::contract_subgraph(&g, &set)?.1
                }
                _ => return Err(Error::invalid("give exactly one of --partition or --edges")),
            };
            let q = if *faithful {
                contraction::contract_faithful(&g, &p)?
            } else {
                contraction::contract(&g, &p)?
            };
            match f {
                Format::Json => Ok(json_line(
                    &json!({ "graph": q, "partition": { "blocks": p.blocks() } }),
                )),
                _ => Ok(emit_graph(&q, f)),
            }
        }
        Cmd::ContractionExists { host, target } => {
            let p =
                contraction::exists_contraction(&load_graph(host)?, &load_graph(target)?, budget)?;
            emit_report(
                &json!({
                    "exists": p.is_some(),
                    "partition": p.map(|p| json!({ "blocks": p.blocks() })),
                }),
                f,
            )
        }
        Cmd::Minor { pattern, host } => {
            let w = minor::is_minor(&load_graph(pattern)?, &load_graph(host)?)?;
            emit_report(&json!({ "found": w.is_some(), "witness": w }), f)
        }
        Cmd::TopoMinor { pattern, host } => {
            let w = minor::is_topological_minor(&load_graph(pattern)?, &load_graph(host)?)?;
            emit_report(&json!({ "found": w.is_some(), "witness": w }), f)
        }
        Cmd::MinorAudit { pool } => {
            let audit = minor::minor_order_audit(&pool_graphs(pool)?, budget)?;
            let mut v = serde_json::to_value(&audit).expect("audit serializes");
            v["all_hold"] = serde_json::Value::Bool(audit.all_hold());
            emit_report(&v, f)
        }
        Cmd::Planar { input } => {
            emit_report(&json!({ "planar": minor::is_planar(&load_graph(input)?)? }), f)
        }
        Cmd::Order(op) => run_order(op, f, budget),
        Cmd::Transform(op) => run_transform(op, f, budget),
    }
}

fn run_graph(op: &GraphCmd, f: Format, budget: u64) -> Result<String> {
    match op {
        GraphCmd::Info { input } => {
            let g = load_graph(input)?;
            let params = invariant::graph_parameters(&g, budget)?;
            emit_report(
                &json!({
                    "directed": g.directed(),
                    "simple": g.simple(),
                    "connected": g.is_connected(),
                    "degree_sequence": invariant::degree_sequence(&g),
                    "parameters": params,
                }),
                f,
            )
        }
        GraphCmd::Underlying { input, multigraph } => {
            let mode = if *multigraph {
                MergeMode::Multigraph
            } else {
                MergeMode::Simple
            };
            Ok(emit_graph(&load_graph(input)?.underlying_undirected(mode)?, f))
        }
        GraphCmd::Incidence { input } => {
            emit_report(&incidence_matrix(&load_graph(input)?)?, f)
        }
        GraphCmd::FromEdges { input, directed } => {
            Ok(emit_graph(&io::parse_edge_list(&read_text(input)?, *directed)?, f))
        }
    }
}

fn run_rel(op: &RelCmd, f: Format) -> Result<String> {
    match op {
        RelCmd::FromGraph { input } => {
            emit_report(&relational::rs_from_graph(&load_graph(input)?), f)
        }
        RelCmd::ToGraph { input, directed } => {
            let rs = io::system_from_json(&read_text(input)?)?;
            Ok(emit_graph(&relational::graph_from_rs(&rs, *directed)?, f))
        }
        RelCmd::Type { input } => {
            let rs = io::system_from_json(&read_text(input)?)?;
            emit_report(&relational::type_symbol(&rs), f)
        }
    }
}

fn run_morphism(op: &MorphismCmd, f: Format, budget: u64) -> Result<String> {
    match op {
        MorphismCmd::Check {
            source,
            target,
            map,
            kind,
        } => {
            let (m, file_kind) = io::morphism_from_json(&read_text(map)?)?;
            let kind = match kind {
                Some(s) => MorphismKind::parse(s)?,
                None => file_kind,
            };
            let check = morphism::check_morphism(&m, &load_graph(source)?, &load_graph(target)?, kind)?;
            emit_report(
                &json!({
                    "kind": kind.label(),
                    "holds": check.holds,
                    "violation": check.violation,
                }),
                f,
            )
        }
        MorphismCmd::Enumerate {
            source,
            target,
            kind,
        } => {
            let kind = MorphismKind::parse(kind)?;
            let maps = morphism::enumerate_morphisms(
                &load_graph(source)?,
                &load_graph(target)?,
                kind,
                budget,
            )?;
            emit_report(
                &json!({ "kind": kind.label(), "count": maps.len(), "maps": maps }),
                f,
            )
        }
    }
}

fn run_invariant(op: &InvariantCmd, f: Format, budget: u64, seed: u64) -> Result<String> {
    match op {
        InvariantCmd::Eval { input, label } => {
            emit_report(&invariant::evaluate_invariant(label, &load_graph(input)?, budget)?, f)
        }
        InvariantCmd::Check {
            input,
            label,
            trials,
        } => emit_report(
            &invariant::check_invariance(label, &load_graph(input)?, *trials, seed, budget)?,
            f,
        ),
    }
}

fn run_product(op: &ProductCmd, f: Format, budget: u64) -> Result<String> {
    match op {
        ProductCmd::Build { kind, left, right } => {
            let kind = ProductConstruction::parse(kind)?;
            let w = product::product(kind, &load_graph(left)?, &load_graph(right)?)?;
            match f {
                Format::Dot => Ok(io::to_dot(&w.object)),
                _ => emit_report(&w, f),
            }
        }
        ProductCmd::Verify {
            kind,
            category,
            pool,
            left,
            right,
        } => {
            let kind = ProductConstruction::parse(kind)?;
            let cat = Category::parse(category)?;
            let objects = pool_graphs(pool)?;
            match (left, right) {
                (Some(l), Some(r)) => {
                    let w = product::product(kind, &load_graph(l)?, &load_graph(r)?)?;
                    emit_report(&product::verify_product(&w, cat, &objects, budget)?, f)
                }
                (None, None) => verify_over_pool(&objects, f, |g1, g2| {
                    let w = product::product(kind, g1, g2)?;
                    product::verify_product(&w, cat, &objects, budget)
                }),
                _ => Err(Error::invalid("give both --left and --right, or neither")),
            }
        }
    }
}

fn run_coproduct(op: &CoproductCmd, f: Format, budget: u64) -> Result<String> {
    match op {
        CoproductCmd::Build { kind, left, right } => {
            let kind = CoproductConstruction::parse(kind)?;
            let w = product::coproduct(kind, &load_graph(left)?, &load_graph(right)?)?;
            match f {
                Format::Dot => Ok(io::to_dot(&w.object)),
                _ => emit_report(&w, f),
            }
        }
        CoproductCmd::Verify {
            kind,
            category,
            pool,
            left,
            right,
        } => {
            let kind = CoproductConstruction::parse(kind)?;
            let cat = Category::parse(category)?;
            let objects = pool_graphs(pool)?;
            match (left, right) {
                (Some(l), Some(r)) => {
                    let w = product::coproduct(kind, &load_graph(l)?, &load_graph(r)?)?;
                    emit_report(&product::verify_coproduct(&w, cat, &objects, budget)?, f)
                }
                (None, None) => verify_over_pool(&objects, f, |g1, g2| {
                    let w = product::coproduct(kind, g1, g2)?;
                    product::verify_coproduct(&w, cat, &objects, budget)
                }),
                _ => Err(Error::invalid("give both --left and --right, or neither")),
            }
        }
    }
}

/// Quantify a universal-property check over every ordered factor pair from
/// the pool, stopping at the first failure.
fn verify_over_pool(
    objects: &[Graph],
    f: Format,
    mut check: impl FnMut(&Graph, &Graph) -> Result<product::UniversalCheckResult>,
) -> Result<String> {
    let mut pairs_checked = 0usize;
    for (i, g1) in objects.iter().enumerate() {
        for (j, g2) in objects.iter().enumerate() {
            let res = check(g1, g2)?;
            if !res.passed {
                return emit_report(
                    &json!({
                        "passed": false,
                        "factor_pairs_checked": pairs_checked,
                        "failing_left": i,
                        "failing_right": j,
                        "result": res,
                    }),
                    f,
                );
            }
            pairs_checked += 1;
        }
    }
    emit_report(&json!({ "passed": true, "factor_pairs_checked": pairs_checked }), f)
}

fn run_order(op: &OrderCmd, f: Format, budget: u64) -> Result<String> {
    match op {
        OrderCmd::Classify { input } => {
            emit_report(&order::classify(&load_order(input)?), f)
        }
        OrderCmd::Minimal { input } => {
            emit_report(&order::minimal_elements(&load_order(input)?), f)
        }
        OrderCmd::Fold { input } => {
            let outcome = order::induction_fold(&load_order(input)?, |_, below| {
                below.iter().map(|(_, h)| *h + 1).max().unwrap_or(0usize)
            })?;
            emit_report(&outcome, f)
        }
        OrderCmd::Antichain { input } => {
            emit_report(&order::antichains_and_chains(&load_order(input)?, budget)?, f)
        }
        OrderCmd::Divisibility { lo, hi } => {
            emit_report(&OrderRelation::divisibility(*lo, *hi)?, f)
        }
    }
}

fn run_transform(op: &TransformCmd, f: Format, budget: u64) -> Result<String> {
    match op {
        TransformCmd::Divisor { lo, hi } => {
            Ok(emit_graph(&transform::divisibility_graph(*lo, *hi)?, f))
        }
        TransformCmd::Tree { input } => {
            let fam = transform::tree_transformation_graph(&load_graph(input)?, budget)?;
            Ok(emit_family(&fam, f))
        }
        TransformCmd::Matching { input } => {
            let fam = transform::matching_transformation_graph(&load_graph(input)?, budget)?;
            Ok(emit_family(&fam, f))
        }
        TransformCmd::Realization { degrees } => {
            let degrees = parse_degrees(degrees)?;
            let fam = transform::realization_graph(&degrees, budget)?;
            Ok(emit_realizations(&fam, f))
        }
        TransformCmd::Superline {
            input,
            index,
            pattern,
            literal,
            disjoint_only,
        } => {
            let g = load_graph(input)?;
            let h = match pattern {
                Some(path) => load_graph(path)?,
                None => catalog::path(3)?,
            };
            let opts = SuperLineOptions {
                require_cross: !literal,
                disjoint_only: *disjoint_only,
            };
            let fam = transform::super_line_graph(&g, *index, &h, opts, budget)?;
            Ok(emit_family(&fam, f))
        }
        TransformCmd::Line { input } => {
            Ok(emit_graph(&transform::line_graph(&load_graph(input)?)?, f))
        }
    }
}

// ---------------------------------------------------------------------------
// Input loading and output shaping.

fn read_text(path: &Path) -> Result<String> {
    fs::read_to_string(path)
        .map_err(|e| Error::invalid(format!("cannot read {}: {e}", path.display())))
}

fn load_graph(path: &Path) -> Result<Graph> {
    io::graph_from_json(&read_text(path)?)
}

fn load_order(path: &Path) -> Result<OrderRelation> {
    io::order_from_json(&read_text(path)?)
}

/// Resolve a pool name `n<k>` to the catalog up to order k.
fn pool_graphs(name: &str) -> Result<Vec<Graph>> {
    let k = name
        .strip_prefix('n')
        .and_then(|rest| rest.parse::<usize>().ok())
        .ok_or_else(|| Error::invalid(format!("pool must look like n3, got {name:?}")))?;
    catalog::catalog(k)
}

fn parse_degrees(s: &str) -> Result<Vec<usize>> {
    s.split(',')
        .map(|t| {
            t.trim()
                .parse::<usize>()
                .map_err(|_| Error::invalid(format!("bad degree {t:?}")))
        })
        .collect()
}

fn json_line<T: Serialize>(v: &T) -> String {
    let mut s = serde_json::to_string(v).expect("results serialize");
    s.push('\n');
    s
}

fn pretty_line<T: Serialize>(v: &T) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("results serialize");
    s.push('\n');
    s
}

fn emit_graph(g: &Graph, f: Format) -> String {
    match f {
        Format::Json => json_line(g),
        Format::Dot => io::to_dot(g),
        Format::Text => io::write_edge_list(g),
    }
}

/// Structured results: JSON one-line, text pretty-printed, no DOT form.
fn emit_report<T: Serialize>(v: &T, f: Format) -> Result<String> {
    match f {
        Format::Json => Ok(json_line(v)),
        Format::Dot => Err(Error::invalid("this result has no DOT form")),
        Format::Text => Ok(pretty_line(v)),
    }
}

fn emit_family(fam: &transform::SetFamilyGraph, f: Format) -> String {
    match f {
        Format::Json => json_line(fam),
        Format::Dot => io::to_dot(&fam.graph),
        Format::Text => io::write_edge_list(&fam.graph),
    }
}

fn emit_realizations(fam: &transform::RealizationFamily, f: Format) -> String {
    match f {
        Format::Json => json_line(fam),
        Format::Dot => {
            let labels: BTreeMap<Id, String> = fam
                .members
                .iter()
                .map(|(v, rep)| (v.clone(), pairs_desc(rep)))
                .collect();
            io::to_dot_labeled(&fam.graph, &labels)
        }
        Format::Text => {
            let mut out = String::new();
            for (v, rep) in &fam.members {
                out.push_str(&format!("# {v}: {}\n", pairs_desc(rep)));
            }
            out.push_str(&io::write_edge_list(&fam.graph));
            out
        }
    }
}

/// Compact description of a small graph by its adjacent pairs.
fn pairs_desc(g: &Graph) -> String {
    let pairs: Vec<String> = g.edges().map(|(_, (a, b))| format!("{a}-{b}")).collect();
    if pairs.is_empty() {
        "no edges".to_string()
    } else {
        pairs.join(" ")
    }
}
