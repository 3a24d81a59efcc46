//! CLI front end: parse a tree, augment it to r-connectivity, and emit the
//! augmentation set, reports, DOT renderings, and traces.

use std::fmt::Write as _;
use std::io::Read as _;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::Parser;

use tree_augment::aug::AugmentationSet;
use tree_augment::block_tree::pi_degrees;
use tree_augment::json::emit_json;
use tree_augment::nonpath::{nonpath_augmentation_with, TraceEvent};
use tree_augment::verify::{
    brute_force_min_augmentation, verify_augmentation, AugmentationReport, Optimality,
    OracleBudget,
};
use tree_augment::{path_augmentation, path_order, random_tree, AugError, Graph};

#[derive(Parser, Debug)]
#[command(name = "tree-augment", version, about = "Augment a tree with a minimum edge set to make it r-vertex-connected")]
struct Cli {
    /// Read the tree from an edge-list file (`n m` header, then `u v` lines)
    #[arg(long, value_name = "FILE")]
    input: Option<PathBuf>,

    /// Generate a random labeled tree with N vertices
    #[arg(long = "random-tree", value_name = "N")]
    random_tree: Option<usize>,

    /// Seed for --random-tree
    #[arg(long, default_value_t = 0)]
    seed: u64,

    /// Read the tree from standard input
    #[arg(long)]
    stdin: bool,

    /// Target vertex connectivity
    #[arg(long)]
    r: usize,

    /// Check the output connectivity with the flow-based verifier
    #[arg(long)]
    verify: bool,

    /// Compare against the exhaustive minimum (small instances only)
    #[arg(long)]
    oracle: bool,

    /// Print per-round block-tree snapshots
    #[arg(long)]
    trace: bool,

    /// Write DOT renderings of input, block trees, and output into DIR
    #[arg(long, value_name = "DIR")]
    dot: Option<PathBuf>,

    /// Write the run as a JSON document to FILE
    #[arg(long, value_name = "FILE")]
    json: Option<PathBuf>,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(exit_code_for(&err))
        }
    }
}

fn exit_code_for(err: &AugError) -> u8 {
    match err {
        AugError::PatternExhausted { .. } => 4,
        _ => 2,
    }
}

fn load_tree(cli: &Cli) -> Result<Graph, AugError> {
    let sources = [cli.input.is_some(), cli.random_tree.is_some(), cli.stdin];
    if sources.iter().filter(|&&s| s).count() != 1 {
        return Err(AugError::Parse {
            line: 0,
            msg: "exactly one of --input, --random-tree, --stdin is required".into(),
        });
    }
    if let Some(path) = &cli.input {
        let text = std::fs::read_to_string(path).map_err(|e| AugError::Parse {
            line: 0,
            msg: format!("cannot read {}: {e}", path.display()),
        })?;
        return Graph::parse_edge_list(&text);
    }
    if let Some(n) = cli.random_tree {
        return random_tree(n, cli.seed);
    }
    let mut text = String::new();
    std::io::stdin()
        .read_to_string(&mut text)
        .map_err(|e| AugError::Parse {
            line: 0,
            msg: format!("cannot read stdin: {e}"),
        })?;
    Graph::parse_edge_list(&text)
}

fn graph_to_dot(g: &Graph, aug: Option<&AugmentationSet>) -> String {
    let mut out = String::from("graph g {\n");
    for v in 1..=g.n() {
        let _ = writeln!(out, "  {v};");
    }
    for (u, v) in g.edges() {
        let dashed = aug.map_or(false, |a| a.contains(u, v));
        if dashed {
            let _ = writeln!(out, "  {u} -- {v} [style=dashed];");
        } else {
            let _ = writeln!(out, "  {u} -- {v};");
        }
    }
    out.push_str("}\n");
    out
}

fn write_file(path: &PathBuf, content: &str) -> Result<(), AugError> {
    std::fs::write(path, content).map_err(|e| AugError::Parse {
        line: 0,
        msg: format!("cannot write {}: {e}", path.display()),
    })
}

fn run(cli: &Cli) -> Result<ExitCode, AugError> {
    let t = load_tree(cli)?;
    if !t.is_tree() {
        return Err(AugError::NotATree);
    }
    let n = t.n();
    let r = cli.r;

    let is_path = t.is_path()?;
    if !is_path && r == 2 {
        return Err(AugError::UnsupportedTarget);
    }

    let mut block_tree_dots: Vec<(usize, String)> = Vec::new();
    let (h, eca) = if is_path {
        if cli.trace {
            let order = path_order(&t)?;
            println!("# path order: {:?}", order.sequence());
        }
        path_augmentation(&t, r)?
    } else {
        let want_dot = cli.dot.is_some();
        let trace = cli.trace;
        nonpath_augmentation_with(&t, r, |event| match event {
            TraceEvent::LeafChain(chain) => {
                if trace {
                    println!("# leaf chain: {:?}", chain.edges());
                }
            }
            TraceEvent::RoundStart { j, bt } => {
                if trace {
                    let degs: Vec<usize> =
                        pi_degrees(bt).iter().map(|p| p.degree).collect();
                    println!(
                        "# round {j}: pi degrees {degs:?}, alpha {:?}",
                        bt.alpha_vertices()
                    );
                }
                if want_dot {
                    block_tree_dots.push((j, bt.to_dot()));
                }
            }
            TraceEvent::EdgeAdded { j, edge: (u, v), tag } => {
                if trace {
                    println!("# round {j}: add {{{u},{v}}} [{tag}]");
                }
            }
        })?
    };

    println!("# n={n} r={r} augmentation edges ({})", eca.len());
    for ((u, v), tag) in eca.iter() {
        println!("{u} {v} # {tag}");
    }

    let mut report: Option<AugmentationReport> = None;
    let mut failed = false;
    if cli.verify || cli.oracle {
        let rep = verify_augmentation(&t, &eca, r)?;
        println!(
            "# lower_bound={} eca_size={} achieved_kappa={}",
            rep.lower_bound, rep.eca_size, rep.achieved_kappa
        );
        if let Some(w) = &rep.witness {
            println!(
                "# verification FAILED: kappa {} < r {}; separator {:?}",
                rep.achieved_kappa, r, w.vertices
            );
            failed = true;
        }
        report = Some(rep);
    }

    if cli.oracle {
        match brute_force_min_augmentation(&t, r, OracleBudget::default()) {
            Ok((min_size, _)) => {
                let rep = report.as_mut().unwrap();
                if rep.eca_size == min_size && rep.achieved_kappa >= r {
                    rep.optimal = Optimality::ProvenOptimal;
                    println!("# oracle_minimum={min_size} verdict=proven-optimal");
                } else {
                    println!(
                        "# oracle_minimum={min_size} verdict=NOT-OPTIMAL (algorithm used {})",
                        rep.eca_size
                    );
                    failed = true;
                }
            }
            Err(AugError::CapExceeded(msg)) => {
                eprintln!("oracle skipped: {msg}");
            }
            Err(e) => return Err(e),
        }
    }

    if let Some(dir) = &cli.dot {
        std::fs::create_dir_all(dir).map_err(|e| AugError::Parse {
            line: 0,
            msg: format!("cannot create {}: {e}", dir.display()),
        })?;
        write_file(&dir.join("input.dot"), &graph_to_dot(&t, None))?;
        write_file(&dir.join("output.dot"), &graph_to_dot(&h, Some(&eca)))?;
        for (j, dot) in &block_tree_dots {
            write_file(&dir.join(format!("block-tree-round-{j}.dot")), dot)?;
        }
    }

    if let Some(path) = &cli.json {
        write_file(path, &emit_json(n, r, &eca, report.as_ref()))?;
    }

    Ok(if failed {
        ExitCode::from(3)
    } else {
        ExitCode::SUCCESS
    })
}
