mod io;
mod render;

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use pptope_core::assoc1d::{
    check_g_validity, cone_rays_1d, enumerate_trees, facet_parallel_report, tree_to_bracketing,
    vertex_for_tree, GTable,
};
use pptope_core::enumeration::{enumerate_ppts, tight_components, FlipGraph};
use pptope_core::graph::{hull_edges, Edge};
use pptope_core::polytope::{
    check_validity, cone_extreme_rays, expansive_flex, make_f, min_objective_vertex,
    realize_polytope, FScheme,
};
use pptope_core::rigidity::{pair_strain, total_strains, Normalization};
use pptope_core::secondary::{affine_map_check_on, assert_ccw_convex_position, gkz_vector};
use pptope_core::verify::verify_point_set;
use pptope_core::PointSet;

use io::{
    edge_json, edges_json, key_string, load_graph, load_gtable, load_overlay,
    load_perturbation_table, load_points, motion_json, parse_norm_flag, parse_point_flag,
    strain_map_json, CliError, CliResult,
};

#[derive(Parser)]
#[command(
    name = "pptope",
    version,
    about = "Exact pseudo-triangulation polytopes, expansion cones and 1D associahedra"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Suppress summary lines on stderr
    #[arg(long, global = true)]
    quiet: bool,
    /// Write the primary artifact to a file instead of standard output
    #[arg(long, global = true, value_name = "PATH")]
    out: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// Pointed pseudo-triangulations of a planar point set
    #[command(subcommand)]
    Ppt(PptCommand),
    /// The 1D associahedron of non-crossing alternating trees
    Assoc1d(Assoc1dArgs),
    /// Secondary-polytope coordinates for points in convex position
    Secondary(SecondaryArgs),
    /// Expansive flex of a pointed non-crossing framework
    Expand(ExpandArgs),
}

#[derive(Subcommand)]
enum PptCommand {
    /// Enumerate the flip graph of pointed pseudo-triangulations
    Enumerate(EnumerateArgs),
    /// Realize the polyhedron of constrained expansions
    Polytope(PolytopeArgs),
    /// Extreme rays of the expansion cone
    ConeRays(ConeRaysArgs),
    /// Run the exact invariant suite on a point set
    Verify(VerifyArgs),
    /// Draw a point set, graph and optional component overlay as SVG
    Render(RenderArgs),
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Dot,
    Svg,
}

#[derive(Args)]
struct EnumerateArgs {
    /// Point set JSON file
    points: PathBuf,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
}

#[derive(Args)]
struct SchemeArgs {
    /// Perturbation scheme: det, norm, or file=PATH
    #[arg(long, default_value = "det")]
    scheme: String,
    /// First reference point "x,y" for the det scheme (default: centroid)
    #[arg(long, value_name = "X,Y")]
    a: Option<String>,
    /// Second reference point "x,y" for the det scheme (default: centroid)
    #[arg(long, value_name = "X,Y")]
    b: Option<String>,
}

impl SchemeArgs {
    fn build(&self, ps: &PointSet) -> CliResult<FScheme> {
        match self.scheme.as_str() {
            "det" => {
                let centroid = ps.centroid();
                let a = match &self.a {
                    Some(t) => parse_point_flag(t)?,
                    None => centroid.clone(),
                };
                let b = match &self.b {
                    Some(t) => parse_point_flag(t)?,
                    None => centroid,
                };
                Ok(FScheme::DetProduct { a, b })
            }
            "norm" => {
                if self.a.is_some() || self.b.is_some() {
                    return Err(CliError::input("--a/--b apply only to --scheme det"));
                }
                Ok(FScheme::NormHeuristic)
            }
            other => match other.strip_prefix("file=") {
                Some(path) => {
                    let table = load_perturbation_table(Path::new(path), ps.len())?;
                    Ok(FScheme::Explicit(table))
                }
                None => Err(CliError::input(format!(
                    "unknown scheme {other:?}; expected det, norm or file=PATH"
                ))),
            },
        }
    }
}

#[derive(Args)]
struct PolytopeArgs {
    points: PathBuf,
    #[command(flatten)]
    scheme: SchemeArgs,
    /// Normalization anchors "i,j" (default: deterministic rule)
    #[arg(long, value_name = "I,J")]
    norm: Option<String>,
}

#[derive(Args)]
struct ConeRaysArgs {
    points: PathBuf,
    #[arg(long, value_name = "I,J")]
    norm: Option<String>,
}

#[derive(Args)]
struct VerifyArgs {
    points: PathBuf,
}

#[derive(Args)]
struct RenderArgs {
    points: PathBuf,
    /// Graph JSON file; only the points are drawn when omitted
    graph: Option<PathBuf>,
    /// Component overlay JSON file ({"components": [[..], ..]})
    #[arg(long, value_name = "PATH")]
    overlay: Option<PathBuf>,
    /// Write the SVG to this path (same as --out)
    #[arg(long, value_name = "PATH")]
    svg: Option<PathBuf>,
}

#[derive(Args)]
struct Assoc1dArgs {
    /// Number of points on the line; implies the squared-difference table
    #[arg(long, conflicts_with = "g")]
    n: Option<usize>,
    /// Table JSON file
    #[arg(long, value_name = "PATH")]
    g: Option<PathBuf>,
}

#[derive(Args)]
struct SecondaryArgs {
    points: PathBuf,
    #[command(flatten)]
    scheme: SchemeArgs,
    #[arg(long, value_name = "I,J")]
    norm: Option<String>,
}

#[derive(Args)]
struct ExpandArgs {
    points: PathBuf,
    graph: PathBuf,
    #[arg(long, value_name = "I,J")]
    norm: Option<String>,
}

struct Output {
    quiet: bool,
    out: Option<PathBuf>,
}

impl Output {
    fn summary(&self, line: &str) {
        if !self.quiet {
            eprintln!("{line}");
        }
    }

    fn artifact(&self, text: &str) -> CliResult<()> {
        match &self.out {
            Some(path) => {
                std::fs::write(path, text)?;
                self.summary(&format!("wrote {}", path.display()));
            }
            None => println!("{text}"),
        }
        Ok(())
    }

    fn json(&self, value: &Value) -> CliResult<()> {
        self.artifact(&serde_json::to_string_pretty(value).expect("serializable"))
    }
}

fn max_n() -> usize {
    std::env::var("PPT_MAX_N")
        .ok()
        .and_then(|v| v.parse().ok())
        .unwrap_or(10)
}

fn check_size(ps: &PointSet) -> CliResult<()> {
    let cap = max_n();
    if ps.len() > cap {
        return Err(CliError::input(format!(
            "point set has {} points; enumeration capped at PPT_MAX_N = {cap}",
            ps.len()
        )));
    }
    Ok(())
}

fn normalization(ps: &PointSet, flag: &Option<String>) -> CliResult<Normalization> {
    match flag {
        Some(text) => {
            let (i, j) = parse_norm_flag(text)?;
            Ok(Normalization::new(ps, i, j)?)
        }
        None => Ok(Normalization::default_for(ps)),
    }
}

fn flip_graph_json(fg: &FlipGraph) -> Value {
    json!({
        "count": fg.len(),
        "nodes": fg.nodes.iter().map(|t| edges_json(t.graph().edges())).collect::<Vec<_>>(),
        "adjacency": fg.adjacency.iter().map(|nbrs| {
            nbrs.iter().map(|nb| json!({
                "node": nb.node,
                "removed": edge_json(nb.removed),
                "inserted": edge_json(nb.inserted),
            })).collect::<Vec<_>>()
        }).collect::<Vec<_>>(),
    })
}

fn flip_graph_dot(fg: &FlipGraph) -> String {
    let mut out = String::from("graph flips {\n");
    for t in &fg.nodes {
        let key = key_string(&t.key());
        out.push_str(&format!("  \"{key}\" [label=\"{key}\"];\n"));
    }
    for (u, nbrs) in fg.adjacency.iter().enumerate() {
        for nb in nbrs {
            if nb.node <= u {
                continue;
            }
            out.push_str(&format!(
                "  \"{}\" -- \"{}\" [label=\"-{}/+{}\"];\n",
                key_string(&fg.nodes[u].key()),
                key_string(&fg.nodes[nb.node].key()),
                nb.removed,
                nb.inserted
            ));
        }
    }
    out.push_str("}\n");
    out
}

fn cmd_enumerate(args: &EnumerateArgs, output: &Output) -> CliResult<()> {
    let ps = load_points(&args.points)?;
    check_size(&ps)?;
    let fg = enumerate_ppts(&ps)?;
    output.summary(&format!("{} pointed pseudo-triangulations", fg.len()));
    match args.format {
        Format::Json => output.json(&flip_graph_json(&fg)),
        Format::Dot => {
            // the JSON artifact is always produced; DOT goes to --out
            if output.out.is_some() {
                output.artifact(&flip_graph_dot(&fg))?;
                println!(
                    "{}",
                    serde_json::to_string_pretty(&flip_graph_json(&fg)).expect("serializable")
                );
                Ok(())
            } else {
                output.artifact(&flip_graph_dot(&fg))
            }
        }
        Format::Svg => Err(CliError::input("enumerate supports json or dot")),
    }
}

fn cmd_polytope(args: &PolytopeArgs, output: &Output) -> CliResult<()> {
    let ps = load_points(&args.points)?;
    check_size(&ps)?;
    let norm = normalization(&ps, &args.norm)?;
    let scheme = args.scheme.build(&ps)?;
    let f = make_f(&ps, &scheme)?;
    let validity = check_validity(&ps, &f)?;
    if !validity.valid {
        return Err(CliError::invariant(format!(
            "perturbation table is invalid on {} quadruples (first: {:?})",
            validity.witnesses.len(),
            validity.witnesses[0].0
        )));
    }
    let poly = realize_polytope(&ps, &f, &norm)?;
    let keys: Vec<String> = poly
        .vertices
        .iter()
        .map(|v| key_string(&v.tight_edges))
        .collect();
    let argmin = min_objective_vertex(&ps, &poly).expect("at least one vertex");
    output.summary(&format!(
        "{} vertices, {} bounded edges, {} rays; objective minimizer: vertex {}",
        poly.vertices.len(),
        poly.bounded_edges.len(),
        poly.rays.len(),
        keys[argmin]
    ));
    let doc = json!({
        "vertices": poly.vertices.iter().map(|v| json!({
            "ppt": edges_json(v.ppt.graph().edges()),
            "v": motion_json(&v.motion),
        })).collect::<Vec<_>>(),
        "edges": poly.bounded_edges.iter().map(|be| json!([
            keys[be.from],
            keys[be.to],
            {"out": edge_json(be.removed), "in": edge_json(be.inserted)},
        ])).collect::<Vec<_>>(),
        "rays": poly.rays.iter().map(|ray| json!({
            "vertex": keys[ray.vertex],
            "hull_edge": edge_json(ray.hull_edge),
            "direction": motion_json(&ray.direction),
            "tight": edges_json(ray.tight_pairs.iter().copied()),
        })).collect::<Vec<_>>(),
        "min_objective_vertex": keys[argmin],
    });
    output.json(&doc)
}

fn cmd_cone_rays(args: &ConeRaysArgs, output: &Output) -> CliResult<()> {
    let ps = load_points(&args.points)?;
    check_size(&ps)?;
    let norm = normalization(&ps, &args.norm)?;
    let rays = cone_extreme_rays(&ps, &norm)?;
    output.summary(&format!("{} extreme rays", rays.len()));
    let doc = json!({
        "count": rays.len(),
        "rays": rays.iter().map(|ray| {
            let components = tight_components(ps.len(), &ray.tight_pairs)
                .expect("valid tight pairs");
            json!({
                "direction": motion_json(&ray.direction),
                "tight": edges_json(ray.tight_pairs.iter().copied()),
                "components": components,
            })
        }).collect::<Vec<_>>(),
    });
    output.json(&doc)
}

fn cmd_verify(args: &VerifyArgs, output: &Output) -> CliResult<()> {
    let ps = load_points(&args.points)?;
    check_size(&ps)?;
    let report = verify_point_set(&ps);
    for entry in &report.entries {
        output.summary(&format!(
            "[{}] {}: {}",
            if entry.passed { "pass" } else { "FAIL" },
            entry.id,
            entry.details
        ));
    }
    let doc = json!({
        "passed": report.all_passed(),
        "entries": report.entries.iter().map(|e| json!({
            "id": e.id,
            "passed": e.passed,
            "details": e.details,
        })).collect::<Vec<_>>(),
    });
    output.json(&doc)?;
    if report.all_passed() {
        output.summary("all checks passed");
        Ok(())
    } else {
        Err(CliError::invariant("verification failed"))
    }
}

fn cmd_render(args: &RenderArgs, output: &Output) -> CliResult<()> {
    let ps = load_points(&args.points)?;
    let graph = match &args.graph {
        Some(path) => Some(load_graph(path, ps.len())?),
        None => None,
    };
    let overlay = match &args.overlay {
        Some(path) => load_overlay(path)?,
        None => Vec::new(),
    };
    for component in &overlay {
        if component.iter().any(|&v| v >= ps.len()) {
            return Err(CliError::input("overlay component index out of range"));
        }
    }
    let svg = render::render_svg(&ps, graph.as_ref(), &overlay);
    let target = Output {
        quiet: output.quiet,
        out: args.svg.clone().or_else(|| output.out.clone()),
    };
    target.artifact(&svg)
}

fn cmd_assoc1d(args: &Assoc1dArgs, output: &Output) -> CliResult<()> {
    let table = match (&args.n, &args.g) {
        (Some(n), None) => GTable::square(*n)?,
        (None, Some(path)) => load_gtable(path)?,
        _ => return Err(CliError::input("pass exactly one of --n or --g FILE")),
    };
    let n = table.n();
    let validity = check_g_validity(&table);
    let mut doc = json!({
        "n": n,
        "valid": validity.valid,
        "violations": serde_json::to_value(&validity.violations).expect("serializable"),
    });
    if validity.valid {
        let trees = enumerate_trees(n)?;
        output.summary(&format!("{} non-crossing alternating trees", trees.len()));
        let mut tree_docs = Vec::new();
        for t in &trees {
            let vertex = vertex_for_tree(&table, t)?;
            let bracketing = tree_to_bracketing(t)?;
            if trees.len() <= 64 {
                let coords: Vec<String> = vertex.v.iter().map(|r| r.to_string()).collect();
                output.summary(&format!("  {bracketing}  v = ({})", coords.join(", ")));
            }
            tree_docs.push(json!({
                "edges": t.edges().collect::<Vec<_>>(),
                "bracketing": bracketing,
                "vertex": vertex.v,
            }));
        }
        doc["count"] = json!(trees.len());
        doc["trees"] = Value::Array(tree_docs);
        doc["cone_rays"] = serde_json::to_value(cone_rays_1d(n)?).expect("serializable");
        if n >= 3 {
            let pairs = facet_parallel_report(&table)?;
            doc["parallel_facets"] = serde_json::to_value(&pairs).expect("serializable");
        }
    } else {
        output.summary(&format!(
            "table invalid: {} violated inequalities",
            validity.violations.len()
        ));
    }
    output.json(&doc)
}

fn cmd_secondary(args: &SecondaryArgs, output: &Output) -> CliResult<()> {
    let ps = load_points(&args.points)?;
    check_size(&ps)?;
    assert_ccw_convex_position(&ps)?;
    let norm = normalization(&ps, &args.norm)?;
    let scheme = args.scheme.build(&ps)?;
    let f = make_f(&ps, &scheme)?;
    let poly = realize_polytope(&ps, &f, &norm)?;
    let exact = affine_map_check_on(&ps, &f, &poly);
    if !exact {
        return Err(CliError::invariant(
            "affine map disagrees with the secondary-polytope coordinates",
        ));
    }
    output.summary(&format!(
        "{} triangulations; affine map exact",
        poly.vertices.len()
    ));
    let doc = json!({
        "entries": poly.vertices.iter().map(|v| json!({
            "triangulation": edges_json(v.ppt.graph().edges()),
            "gkz": serde_json::to_value(gkz_vector(&ps, &v.ppt).expect("convex")).expect("serializable"),
        })).collect::<Vec<_>>(),
        "affine_map_exact": exact,
    });
    output.json(&doc)
}

fn cmd_expand(args: &ExpandArgs, output: &Output) -> CliResult<()> {
    let ps = load_points(&args.points)?;
    let graph = load_graph(&args.graph, ps.len())?;
    let norm = normalization(&ps, &args.norm)?;
    let missing: Vec<Edge> = hull_edges(&ps)
        .into_iter()
        .filter(|h| !graph.contains(*h))
        .collect();
    match expansive_flex(&ps, &graph, &norm)? {
        Some(motion) => {
            output.summary("strictly expansive motion found");
            for h in &missing {
                assert!(pair_strain(&ps, &motion, h.lo(), h.hi()).is_positive());
            }
            let strains = total_strains(&ps, &motion);
            let doc = json!({
                "motion": motion_json(&motion),
                "strains": strain_map_json(strains.iter().map(|(e, r)| (e, r.clone()))),
                "missing_hull_edges": edges_json(missing.iter().copied()),
            });
            output.json(&doc)
        }
        None => {
            output.summary("no expansive flex: the graph contains every hull edge");
            output.json(&json!({
                "motion": Value::Null,
                "reason": "all convex hull edges present",
            }))
        }
    }
}

fn run(cli: &Cli) -> CliResult<()> {
    let output = Output {
        quiet: cli.quiet,
        out: cli.out.clone(),
    };
    match &cli.command {
        Command::Ppt(PptCommand::Enumerate(args)) => cmd_enumerate(args, &output),
        Command::Ppt(PptCommand::Polytope(args)) => cmd_polytope(args, &output),
        Command::Ppt(PptCommand::ConeRays(args)) => cmd_cone_rays(args, &output),
        Command::Ppt(PptCommand::Verify(args)) => cmd_verify(args, &output),
        Command::Ppt(PptCommand::Render(args)) => cmd_render(args, &output),
        Command::Assoc1d(args) => cmd_assoc1d(args, &output),
        Command::Secondary(args) => cmd_secondary(args, &output),
        Command::Expand(args) => cmd_expand(args, &output),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {}", e.message);
            ExitCode::from(e.code)
        }
    }
}
