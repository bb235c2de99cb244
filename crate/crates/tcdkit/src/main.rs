//! tcdkit command line: generators, validators, the approximation pipeline,
//! exact oracles, and the coloring solvers over plain-text graph files.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use tcdkit::approx::{approx_ecrw, ApproxOutcome};
use tcdkit::coloring::{
    list_coloring_pipeline, parse_lists, parse_precoloring, solve_list_coloring,
    solve_precoloring, ColoringError,
};
use tcdkit::decomp::{metrics, validate_tcd, TreeCutDecomposition};
use tcdkit::families::{gen_family, FamilySpec};
use tcdkit::graph::{parse_graph, Graph, VertexSet};
use tcdkit::oracle::{exact_aux, exact_ecrw_alpha, AuxParam, Witness};
use tcdkit::treedec::{build_tree_decomposition, make_nice, TreedecError};

const EXIT_NO: u8 = 1;
const EXIT_EXCEEDS: u8 = 2;
const EXIT_USAGE: u8 = 64;
const EXIT_DATA: u8 = 65;

#[derive(Parser)]
#[command(name = "tcdkit", version, about = "tree-cut decomposition toolkit")]
struct Cli {
    /// Emit machine-readable JSON summaries instead of plain lines.
    #[arg(long, global = true)]
    json: bool,
    /// Seed for randomized helpers; accepted for reproducibility plumbing.
    #[arg(long, global = true)]
    seed: Option<u64>,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Generate a named graph family as an edge list.
    Gen(GenArgs),
    /// Validate a decomposition against a graph and report its metrics.
    Verify(VerifyArgs),
    /// Build a tree decomposition within a width budget.
    Treedec(TreedecArgs),
    /// Approximate ecrw_alpha: decomposition or ECRW_ALPHA_EXCEEDS.
    Approx(ApproxArgs),
    /// Exact small-graph oracles with witnesses.
    Exact(ExactArgs),
    /// List coloring.
    Color(ColorArgs),
    /// Precoloring extension.
    Precolor(PrecolorArgs),
}

#[derive(Args)]
struct GenArgs {
    /// Family name: star, fan, grid, wall, S, Gnk, thick_path, thick_star.
    #[arg(long)]
    family: String,
    #[arg(long)]
    n: Option<usize>,
    #[arg(long)]
    k: Option<usize>,
    /// Output path; stdout when omitted.
    #[arg(short, long)]
    output: Option<PathBuf>,
}

#[derive(Args)]
struct VerifyArgs {
    graph: PathBuf,
    decomp: PathBuf,
}

#[derive(Args)]
struct TreedecArgs {
    graph: PathBuf,
    /// Width budget.
    #[arg(long)]
    w: usize,
    /// Convert to a nice tree decomposition before writing.
    #[arg(long)]
    nice: bool,
    #[arg(short, long)]
    output: Option<PathBuf>,
}

#[derive(Args)]
struct ApproxArgs {
    graph: PathBuf,
    #[arg(long)]
    alpha: usize,
    #[arg(long)]
    k: usize,
    #[arg(short, long)]
    output: Option<PathBuf>,
}

#[derive(Args)]
struct ExactArgs {
    graph: PathBuf,
    /// One of: ecrw_alpha, ecrw, tpw, tw, ecw.
    #[arg(long)]
    param: String,
    #[arg(long)]
    alpha: Option<usize>,
    /// Witness JSON output path.
    #[arg(short, long)]
    output: Option<PathBuf>,
}

#[derive(Args)]
struct ColorArgs {
    graph: PathBuf,
    lists: PathBuf,
    /// Use this tree-cut decomposition instead of computing one.
    #[arg(long)]
    decomp: Option<PathBuf>,
    /// Thickness budget when computing a decomposition.
    #[arg(long, default_value_t = 1)]
    alpha: usize,
}

#[derive(Args)]
struct PrecolorArgs {
    graph: PathBuf,
    precoloring: PathBuf,
    /// Thickness budget for the decomposition.
    #[arg(long, default_value_t = 1)]
    alpha: usize,
}

fn main() -> ExitCode {
    // accepted to cap internal parallelism; the current implementation is
    // sequential, so any positive value behaves identically
    if let Ok(v) = std::env::var("TCDKIT_THREADS") {
        if v.parse::<usize>().map(|x| x == 0).unwrap_or(true) {
            eprintln!("error: TCDKIT_THREADS must be a positive integer");
            return ExitCode::from(EXIT_USAGE);
        }
    }
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            // help/version are successful terminations
            let _ = e.print();
            return match e.kind() {
                clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion => {
                    ExitCode::SUCCESS
                }
                _ => ExitCode::from(EXIT_USAGE),
            };
        }
    };
    let json = cli.json;
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            if json {
                println!("{}", serde_json::json!({ "error": e }));
            }
            eprintln!("error: {e}");
            ExitCode::from(EXIT_DATA)
        }
    }
}

fn read_file(path: &PathBuf) -> Result<String, String> {
    std::fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))
}

fn load_graph(path: &PathBuf) -> Result<Graph, String> {
    parse_graph(&read_file(path)?).map_err(|e| format!("{}: {e}", path.display()))
}

fn emit(output: &Option<PathBuf>, text: &str) -> Result<(), String> {
    match output {
        Some(path) => {
            std::fs::write(path, text).map_err(|e| format!("{}: {e}", path.display()))
        }
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode, String> {
    match cli.cmd {
        Cmd::Gen(args) => {
            let spec = FamilySpec::parse(&args.family, args.n, args.k)
                .map_err(|e| e.to_string())?;
            let (g, roles) = gen_family(&spec).map_err(|e| e.to_string())?;
            let mut out = format!("# family: {}\n", spec.describe());
            for (name, v) in roles.iter() {
                out.push_str(&format!("# role: {name} -> {v}\n"));
            }
            out.push_str(&g.to_edge_list());
            emit(&args.output, &out)?;
            Ok(ExitCode::SUCCESS)
        }
        Cmd::Verify(args) => {
            let g = load_graph(&args.graph)?;
            let dj = serde_json::from_str(&read_file(&args.decomp)?)
                .map_err(|e| format!("{}: {e}", args.decomp.display()))?;
            let d = TreeCutDecomposition::from_json(&dj).map_err(|e| e.to_string())?;
            let report = validate_tcd(&g, &d);
            if !report.ok {
                if cli.json {
                    println!(
                        "{}",
                        serde_json::json!({
                            "ok": false,
                            "violations": report
                                .violations
                                .iter()
                                .map(|v| format!("{v:?}"))
                                .collect::<Vec<_>>(),
                        })
                    );
                } else {
                    println!("INVALID");
                    for v in &report.violations {
                        println!("  {v:?}");
                    }
                }
                return Ok(ExitCode::from(EXIT_NO));
            }
            let (thickness, crossing, value) = metrics(&g, &d);
            if cli.json {
                println!(
                    "{}",
                    serde_json::json!({
                        "ok": true,
                        "thickness": thickness,
                        "crossing": crossing,
                        "value": value,
                    })
                );
            } else {
                println!("OK thickness={thickness} crossing={crossing} value={value}");
            }
            Ok(ExitCode::SUCCESS)
        }
        Cmd::Treedec(args) => {
            let g = load_graph(&args.graph)?;
            match build_tree_decomposition(&g, args.w) {
                Ok(td) => {
                    let (text, width) = if args.nice {
                        let nice = make_nice(&g, &td).map_err(|e| e.to_string())?;
                        (
                            serde_json::to_string_pretty(&nice.to_json()).unwrap(),
                            nice.td.width(),
                        )
                    } else {
                        (serde_json::to_string_pretty(&td.to_json()).unwrap(), td.width())
                    };
                    emit(&args.output, &format!("{text}\n"))?;
                    if args.output.is_some() {
                        if cli.json {
                            println!("{}", serde_json::json!({ "width": width }));
                        } else {
                            println!("width={width}");
                        }
                    }
                    Ok(ExitCode::SUCCESS)
                }
                Err(TreedecError::TooWide { budget }) => {
                    if cli.json {
                        println!("{}", serde_json::json!({ "too_wide": budget }));
                    } else {
                        println!("TREEWIDTH_EXCEEDS {budget}");
                    }
                    Ok(ExitCode::from(EXIT_EXCEEDS))
                }
                Err(e) => Err(e.to_string()),
            }
        }
        Cmd::Approx(args) => {
            let g = load_graph(&args.graph)?;
            match approx_ecrw(&g, args.alpha, args.k).map_err(|e| e.to_string())? {
                ApproxOutcome::Decomposition(d) => {
                    let bound = 2 * args.alpha * args.alpha + 5 * args.k;
                    let (thickness, crossing, _) = metrics(&g, &d);
                    debug_assert!(thickness <= args.alpha && crossing <= bound);
                    let text = serde_json::to_string_pretty(&d.to_json()).unwrap();
                    emit(&args.output, &format!("{text}\n"))?;
                    if cli.json {
                        println!(
                            "{}",
                            serde_json::json!({
                                "thickness": thickness,
                                "crossing_bound": bound,
                                "crossing": crossing,
                            })
                        );
                    } else {
                        println!("thickness={thickness} crossing<={bound}");
                    }
                    Ok(ExitCode::SUCCESS)
                }
                ApproxOutcome::ExceedsK => {
                    println!("ECRW_ALPHA_EXCEEDS {}", args.k);
                    Ok(ExitCode::from(EXIT_EXCEEDS))
                }
            }
        }
        Cmd::Exact(args) => {
            let g = load_graph(&args.graph)?;
            let result = if args.param == "ecrw_alpha" {
                let alpha = args.alpha.ok_or("ecrw_alpha requires --alpha")?;
                exact_ecrw_alpha(&g, alpha).map_err(|e| e.to_string())?
            } else {
                let which = AuxParam::parse(&args.param)
                    .ok_or_else(|| format!("unknown param: {}", args.param))?;
                if args.alpha.is_some() {
                    return Err("--alpha only applies to ecrw_alpha".into());
                }
                exact_aux(&g, which).map_err(|e| e.to_string())?
            };
            if cli.json {
                println!(
                    "{}",
                    serde_json::json!({ "param": result.param, "value": result.value })
                );
            } else {
                println!("{} = {}", result.param, result.value);
            }
            if let Some(path) = &args.output {
                let text = match &result.witness {
                    Witness::TreeCut(d) => {
                        serde_json::to_string_pretty(&d.to_json()).unwrap()
                    }
                    Witness::TreeDec(td) => {
                        serde_json::to_string_pretty(&td.to_json()).unwrap()
                    }
                    Witness::Forest(pair) => serde_json::to_string_pretty(
                        &serde_json::json!({ "forest": pair.forest }),
                    )
                    .unwrap(),
                };
                emit(&Some(path.clone()), &format!("{text}\n"))?;
            }
            Ok(ExitCode::SUCCESS)
        }
        Cmd::Color(args) => {
            let g = load_graph(&args.graph)?;
            let lists = parse_lists(&read_file(&args.lists)?, g.vertex_count())
                .map_err(|e| e.to_string())?;
            let outcome = match &args.decomp {
                Some(path) => {
                    let dj = serde_json::from_str(&read_file(path)?)
                        .map_err(|e| format!("{}: {e}", path.display()))?;
                    let mut d =
                        TreeCutDecomposition::from_json(&dj).map_err(|e| e.to_string())?;
                    if d.root().is_none()
                        || d.root().map(|r| d.bag(r).len() == 0).unwrap_or(true)
                    {
                        let root = (0..d.node_count())
                            .find(|&t| d.bag(t).len() > 0)
                            .ok_or("decomposition has no non-empty bag")?;
                        d = d.with_root(root);
                    }
                    match solve_list_coloring(&g, &lists, &d) {
                        // oversized lists need the pruning pipeline; keep the
                        // supplied decomposition's thickness as the budget
                        Err(ColoringError::UnprunedList(_)) => {
                            let (thickness, _, _) = metrics(&g, &d);
                            list_coloring_pipeline(&g, &lists, thickness.max(args.alpha))
                                .map_err(|e| e.to_string())?
                        }
                        other => other.map_err(|e| e.to_string())?,
                    }
                }
                None => {
                    list_coloring_pipeline(&g, &lists, args.alpha).map_err(|e| e.to_string())?
                }
            };
            print_coloring(cli.json, &outcome);
            Ok(match outcome {
                Some(_) => ExitCode::SUCCESS,
                None => ExitCode::from(EXIT_NO),
            })
        }
        Cmd::Precolor(args) => {
            let g = load_graph(&args.graph)?;
            let (q, pre) = parse_precoloring(&read_file(&args.precoloring)?)
                .map_err(|e| e.to_string())?;
            let s: VertexSet = pre.keys().copied().collect();
            let outcome =
                solve_precoloring(&g, &s, q, &pre, args.alpha).map_err(|e| e.to_string())?;
            print_coloring(cli.json, &outcome);
            Ok(match outcome {
                Some(_) => ExitCode::SUCCESS,
                None => ExitCode::from(EXIT_NO),
            })
        }
    }
}

fn print_coloring(json: bool, outcome: &Option<Vec<usize>>) {
    match outcome {
        Some(c) => {
            if json {
                println!("{}", serde_json::json!({ "sat": true, "coloring": c }));
            } else {
                println!("SAT");
                for (v, color) in c.iter().enumerate() {
                    println!("{v} {color}");
                }
            }
        }
        None => {
            if json {
                println!("{}", serde_json::json!({ "sat": false }));
            } else {
                println!("UNSAT");
            }
        }
    }
}
