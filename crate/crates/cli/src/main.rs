//! `muvc`: command-line front end for the MU-VC solvers, oracles and generators.
//!
//! Exit codes: 0 on success, 2 when no solution exists within the given `--k`,
//! 1 on input errors (the message names the file and, where possible, the line).

mod report;

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::{Duration, Instant};

use clap::{Parser, Subcommand, ValueEnum};
use muvc_core::cw::{build_cograph, check_describes, parse_expr, solve_muvc_cw, solve_muvc_cw_fpt, write_expr, CwError, FptOutcome};
use muvc_core::generators::hardness::{gen_hardness_instance, FormulaError, TypedFormula};
use muvc_core::generators::{gen_gk, gen_partial_ktree, gen_random_cotree, gen_random_graph, gen_random_tree};
use muvc_core::graph::GrParseError;
use muvc_core::oracle::{solve_muvc_bruteforce, solve_pauvc_bruteforce, OracleError};
use muvc_core::tree::{solve_muvc_tree, TreeError};
use muvc_core::tw::{parse_td, solve_muvc_tw, write_td, TdError, TdParseError, TreeDecomposition, TwMode};
use muvc_core::{induced_delete, is_unique_min_vc, parse_graph, write_graph, Graph, GraphError, Solution, VertexSet};
use thiserror::Error;

use report::{RunReport, Verification};

#[derive(Parser, Debug)]
#[command(name = "muvc", version, about = "Exact solvers for making the minimum vertex cover unique by vertex deletion")]
struct Cli {
    /// Print reports as JSON instead of key: value lines.
    #[arg(long, global = true)]
    json: bool,
    /// Seed for randomized generators; echoed in every report header.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Worker threads for parallel oracle searches.
    #[arg(long, global = true, default_value_t = 1)]
    threads: usize,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Linear-time solver for forests.
    SolveTree {
        graph: PathBuf,
        /// Re-check that the witness leaves a unique minimum cover.
        #[arg(long)]
        verify: bool,
    },
    /// Solver over a tree decomposition (a forest needs none).
    SolveTw {
        graph: PathBuf,
        /// Tree decomposition in `.td` format.
        #[arg(long)]
        td: Option<PathBuf>,
        /// Discard characteristics violating the degree bound (lossless).
        #[arg(long)]
        truncate_degree: bool,
        #[arg(long)]
        verify: bool,
    },
    /// Solver over a clique-width expression.
    SolveCw {
        /// Expression file.
        #[arg(long)]
        expr: PathBuf,
        /// Optional `.gr` file the expression must describe.
        graph: Option<PathBuf>,
        /// Parameterized mode: only look for solutions of size at most `--k`.
        #[arg(long, requires = "k")]
        fpt: bool,
        #[arg(long)]
        k: Option<usize>,
        #[arg(long)]
        verify: bool,
    },
    /// Exhaustive MU-VC search over all sets of size at most `--k` (default: all).
    Oracle {
        graph: PathBuf,
        #[arg(long)]
        k: Option<usize>,
    },
    /// Exhaustive search for a smallest set contained in exactly one minimum cover.
    PauvcOracle { graph: PathBuf },
    /// Checks whether deleting a set leaves a unique minimum vertex cover.
    Verify {
        graph: PathBuf,
        /// 1-based vertex ids, separated by commas or spaces.
        #[arg(long, default_value = "")]
        delete: String,
    },
    /// Writes the separation graph G_k in `.gr` format.
    GenGk {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Builds the gadget graph of a typed formula: `<out>.gr` and `<out>.roles`.
    GenHardness {
        formula: PathBuf,
        #[arg(long)]
        out: PathBuf,
    },
    /// Writes a seeded random instance to `<out>.gr` (plus `.td` or `.cwx`).
    GenRandom {
        #[arg(long, value_enum)]
        kind: RandomKind,
        #[arg(long)]
        n: usize,
        /// Edge probability (graph) or edge retention probability (partial-ktree).
        #[arg(long, default_value_t = 0.5)]
        p: f64,
        /// Width bound for partial k-trees.
        #[arg(long, default_value_t = 2)]
        width: usize,
        #[arg(long)]
        out: PathBuf,
    },
    /// Times the tree solver on paths of increasing size (best of `--repeats`).
    Bench {
        #[arg(long, value_delimiter = ',', default_value = "250000,500000,1000000")]
        sizes: Vec<usize>,
        #[arg(long, default_value_t = 3)]
        repeats: usize,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum RandomKind {
    Tree,
    Graph,
    Cograph,
    PartialKtree,
}

#[derive(Debug, Error)]
enum CliError {
    #[error("{path}: {source}")]
    Io { path: String, source: std::io::Error },
    #[error("{path}: {source}")]
    Graph { path: String, source: GrParseError },
    #[error("{path}: {source}")]
    TdParse { path: String, source: TdParseError },
    #[error("{path}: {source}")]
    Td { path: String, source: TdError },
    #[error("{path}: {source}")]
    Expr { path: String, source: CwError },
    #[error("{path}: {source}")]
    Formula { path: String, source: FormulaError },
    #[error("{path}: {source}")]
    Tree { path: String, source: TreeError },
    #[error("--delete: {0}")]
    DeleteSet(GraphError),
    #[error("{0}")]
    Usage(String),
    #[error("verification failed: {0}")]
    Verification(String),
}

/// Successful outcomes: either solved, or provably infeasible within `k`.
enum Outcome {
    Done,
    InfeasibleWithin(usize),
}

fn read(path: &Path) -> Result<String, CliError> {
    fs::read_to_string(path).map_err(|source| CliError::Io { path: path.display().to_string(), source })
}

fn write(path: &Path, text: &str) -> Result<(), CliError> {
    fs::write(path, text).map_err(|source| CliError::Io { path: path.display().to_string(), source })
}

fn load_graph(path: &Path) -> Result<Graph, CliError> {
    parse_graph(&read(path)?).map_err(|source| CliError::Graph { path: path.display().to_string(), source })
}

fn with_ext(prefix: &Path, ext: &str) -> PathBuf {
    let mut s = prefix.as_os_str().to_owned();
    s.push(".");
    s.push(ext);
    PathBuf::from(s)
}

fn one_based(set: &VertexSet) -> Vec<usize> {
    set.iter().map(|v| v + 1).collect()
}

struct Ctx {
    json: bool,
    seed: u64,
}

impl Ctx {
    fn emit(&self, r: &RunReport) {
        if self.json {
            println!("{}", r.to_json());
        } else {
            print!("{}", r.to_text());
        }
    }

    /// Builds, optionally verifies, and prints the report of a solver run.
    fn report(&self, (solver, tie_break): (&str, &str), instance: &Path, g: &Graph, s: &Solution, elapsed: Duration, verify: bool) -> Result<(), CliError> {
        let mut r = RunReport::new(solver, &instance.display().to_string(), self.seed, tie_break, s.opt, one_based(&s.witness), elapsed);
        if verify {
            match s.verify(g) {
                Some(cover) => {
                    r.unique_cover = Some(one_based(&cover));
                    r.verification = Verification::Ok;
                }
                None => {
                    r.verification = Verification::Failed;
                    self.emit(&r);
                    return Err(CliError::Verification(format!("deleting {} does not leave a unique minimum cover", s.witness.to_external())));
                }
            }
        }
        self.emit(&r);
        Ok(())
    }
}

const TREE_TIES: &str = "keep-root-first";
const TABLE_TIES: &str = "smallest-size, first-found characteristic";
const ORACLE_TIES: &str = "lexicographically-first set";

fn run(cli: Cli) -> Result<Outcome, CliError> {
    let ctx = Ctx { json: cli.json, seed: cli.seed };
    match cli.command {
        Command::SolveTree { graph, verify } => {
            let g = load_graph(&graph)?;
            let start = Instant::now();
            let s = solve_muvc_tree(&g).map_err(|source| CliError::Tree { path: graph.display().to_string(), source })?;
            ctx.report(("tree", TREE_TIES), &graph, &g, &s, start.elapsed(), verify)?;
        }
        Command::SolveTw { graph, td, truncate_degree, verify } => {
            let g = load_graph(&graph)?;
            let decomposition = match &td {
                Some(path) => parse_td(&read(path)?).map_err(|source| CliError::TdParse { path: path.display().to_string(), source })?,
                None => TreeDecomposition::for_forest(&g)
                    .ok_or_else(|| CliError::Usage(format!("{}: not a forest, pass a decomposition with --td", graph.display())))?,
            };
            let td_name = td.as_deref().unwrap_or(&graph).display().to_string();
            let mode = if truncate_degree { TwMode::DegreeTruncated { max_degree: g.max_degree() as u32 } } else { TwMode::Exact };
            let start = Instant::now();
            let s = solve_muvc_tw(&g, &decomposition, mode).map_err(|source| CliError::Td { path: td_name, source })?;
            ctx.report(("tw", TABLE_TIES), &graph, &g, &s, start.elapsed(), verify)?;
        }
        Command::SolveCw { expr, graph, fpt, k, verify } => {
            let e = parse_expr(&read(&expr)?).map_err(|source| CliError::Expr { path: expr.display().to_string(), source })?;
            let g = e.eval().graph;
            if let Some(path) = &graph {
                let given = load_graph(path)?;
                check_describes(&e, &given).map_err(|source| CliError::Expr { path: expr.display().to_string(), source })?;
            }
            let expr_err = |source| CliError::Expr { path: expr.display().to_string(), source };
            let start = Instant::now();
            let s = if fpt {
                let k = k.expect("clap enforces --k with --fpt");
                match solve_muvc_cw_fpt(&e, k).map_err(expr_err)? {
                    FptOutcome::Solved(s) => s,
                    FptOutcome::InfeasibleWithinK { k } => return Ok(Outcome::InfeasibleWithin(k)),
                }
            } else {
                solve_muvc_cw(&e).map_err(expr_err)?
            };
            let name = if fpt { "cw-fpt" } else { "cw" };
            ctx.report((name, TABLE_TIES), graph.as_deref().unwrap_or(&expr), &g, &s, start.elapsed(), verify)?;
        }
        Command::Oracle { graph, k } => {
            let g = load_graph(&graph)?;
            let k_max = k.unwrap_or(g.n());
            let start = Instant::now();
            match solve_muvc_bruteforce(&g, k_max) {
                Ok(r) => {
                    let s = Solution { opt: r.opt, witness: r.witness };
                    ctx.report(("oracle", ORACLE_TIES), &graph, &g, &s, start.elapsed(), true)?;
                }
                Err(OracleError::InfeasibleAboveBudget { k_max }) => return Ok(Outcome::InfeasibleWithin(k_max)),
                Err(e) => unreachable!("unexpected oracle error {e}"),
            }
        }
        Command::PauvcOracle { graph } => {
            let g = load_graph(&graph)?;
            let start = Instant::now();
            let r = solve_pauvc_bruteforce(&g).expect("a whole minimum cover is always a valid set");
            let mut report = RunReport::new("pauvc-oracle", &graph.display().to_string(), ctx.seed, ORACLE_TIES, r.opt, one_based(&r.witness), start.elapsed());
            report.unique_cover = Some(one_based(&r.cover));
            ctx.emit(&report);
        }
        Command::Verify { graph, delete } => {
            let g = load_graph(&graph)?;
            let s = VertexSet::parse_external(&delete, g.n()).map_err(CliError::DeleteSet)?;
            let h = induced_delete(&g, &s);
            let u = is_unique_min_vc(&h.graph);
            let cover = h.lift(&u.cover).to_external();
            if ctx.json {
                let alt = u.alternative.as_ref().map(|a| one_based(&h.lift(a)));
                let value = serde_json::json!({ "unique": u.unique, "cover": one_based(&h.lift(&u.cover)), "alternative": alt });
                println!("{value}");
            } else {
                println!("unique: {}, cover: {cover}", u.unique);
                if let Some(a) = &u.alternative {
                    println!("alternative: {}", h.lift(a).to_external());
                }
            }
        }
        Command::GenGk { k, out } => {
            let g = gen_gk(k).ok_or_else(|| CliError::Usage("G_k is defined for k >= 3".into()))?;
            match out {
                Some(path) => write(&path, &write_graph(&g))?,
                None => print!("{}", write_graph(&g)),
            }
        }
        Command::GenHardness { formula, out } => {
            let f: TypedFormula = read(&formula)?.parse().map_err(|source| CliError::Formula { path: formula.display().to_string(), source })?;
            let gg = gen_hardness_instance(&f);
            write(&with_ext(&out, "gr"), &write_graph(&gg.graph))?;
            write(&with_ext(&out, "roles"), &gg.roles_text())?;
            println!("vertices: {}, edges: {}, max_degree: {}", gg.graph.n(), gg.graph.m(), gg.graph.max_degree());
        }
        Command::GenRandom { kind, n, p, width, out } => {
            let seed = ctx.seed;
            let g = match kind {
                RandomKind::Tree => gen_random_tree(n, seed),
                RandomKind::Graph => gen_random_graph(n, p, seed),
                RandomKind::Cograph => {
                    let t = gen_random_cotree(n, seed).ok_or_else(|| CliError::Usage("a cograph needs n >= 1".into()))?;
                    let e = build_cograph(&t).expect("generated cotrees are valid");
                    write(&with_ext(&out, "cwx"), &(write_expr(&e) + "\n"))?;
                    t.graph().expect("generated cotrees are valid")
                }
                RandomKind::PartialKtree => {
                    let (g, td) = gen_partial_ktree(n, width, p, seed);
                    write(&with_ext(&out, "td"), &write_td(&td))?;
                    g
                }
            };
            write(&with_ext(&out, "gr"), &write_graph(&g))?;
            println!("# seed: {seed}\nvertices: {}, edges: {}", g.n(), g.m());
        }
        Command::Bench { sizes, repeats } => {
            println!("# seed: {}, tie-break: {TREE_TIES}, best of {repeats}", ctx.seed);
            let mut prev: Option<f64> = None;
            for n in sizes {
                let g = Graph::path(n);
                let mut best = Duration::MAX;
                let mut opt = 0;
                for _ in 0..repeats.max(1) {
                    let start = Instant::now();
                    opt = solve_muvc_tree(&g).expect("paths are trees").opt;
                    best = best.min(start.elapsed());
                }
                let ms = best.as_secs_f64() * 1e3;
                let ratio = prev.map_or("-".to_string(), |p| format!("{:.2}", ms / p));
                println!("n: {n}, opt: {opt}, time_ms: {ms:.3}, ratio: {ratio}");
                prev = Some(ms);
            }
        }
    }
    Ok(Outcome::Done)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(cli.threads.max(1)).build_global() {
        eprintln!("error: cannot configure threads: {e}");
        return ExitCode::from(1);
    }
    match run(cli) {
        Ok(Outcome::Done) => ExitCode::SUCCESS,
        Ok(Outcome::InfeasibleWithin(k)) => {
            println!("infeasible within k={k}");
            ExitCode::from(2)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}
