//! `influence`: solve, generate, tabulate, verify and play INFLUENCE games.

mod play;

use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use influence_core::experiments::{self, ClaimStatus, SuiteParams, VerifyReport, DEFAULT_SEED};
use influence_core::families::{
    cycle_doc, make_j, make_quasi_path, make_tree, segment_doc, segment_table_with, OddClass, QuasiPathSpec,
    SegmentSolver, TreeSpec,
};
use influence_core::graph::to_dot;
use influence_core::{GameGraph, GraphDoc, Parallelism, Position, Side, SolveOptions, Solver};

const RESULTS_ENV: &str = "INFLUENCE_RESULTS_DIR";
const DEFAULT_RESULTS_DIR: &str = "results";

#[derive(Parser)]
#[command(name = "influence", version, about = "Exact analysis of the INFLUENCE scoring game")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Solve a graph file exactly
    Solve(SolveArgs),
    /// Write an instance of one of the built-in families
    Gen {
        #[command(subcommand)]
        family: Family,
        /// Output file; stdout when absent
        #[arg(long, global = true)]
        out: Option<PathBuf>,
    },
    /// Ls and Rs of single segments
    Table(TableArgs),
    /// Run verification suites and write their reports
    Verify(VerifyArgs),
    /// Play against the engine in the terminal
    Play(PlayArgs),
    /// Render a graph file as Graphviz
    ExportDot {
        path: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Args)]
struct SolveArgs {
    path: PathBuf,
    #[arg(long, value_enum, default_value_t = ModeArg::Relevant)]
    mode: ModeArg,
    #[arg(long, value_enum, default_value_t = Toggle::On)]
    pruning: Toggle,
    /// Check parity and nonzugzwang on every solved position
    #[arg(long)]
    audit: bool,
    #[arg(long)]
    json: bool,
    /// Split the root moves across threads
    #[arg(long)]
    parallel: bool,
}

#[derive(Clone, Copy, ValueEnum)]
enum ModeArg {
    Raw,
    Relevant,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Toggle {
    On,
    Off,
}

#[derive(Clone, Copy, ValueEnum)]
enum ClassArg {
    Minus,
    Plus,
    Even,
}

impl ClassArg {
    fn odd_class(self) -> OddClass {
        match self {
            ClassArg::Minus => OddClass::Minus,
            ClassArg::Plus => OddClass::Plus,
            ClassArg::Even => OddClass::None,
        }
    }
}

#[derive(Subcommand)]
enum Family {
    /// Alternating path S_n
    Segment {
        #[arg(long)]
        n: usize,
        /// Defaults to even for even n and minus for odd n
        #[arg(long, value_enum)]
        class: Option<ClassArg>,
    },
    /// Alternating cycle C_n, n even
    Cycle {
        #[arg(long)]
        n: usize,
    },
    /// Tree T_n^c, or J_n^c with --double
    Tree {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        c: u32,
        #[arg(long)]
        double: bool,
    },
    /// Quasi-path from a color word and an orientation word
    Quasipath {
        /// One letter per vertex, e.g. LRRL
        #[arg(long)]
        colors: String,
        /// One of `>` or `<` per edge, e.g. `><>`
        #[arg(long)]
        arcs: String,
    },
}

#[derive(Args)]
struct TableArgs {
    #[arg(long, default_value_t = 38)]
    max_n: usize,
    /// Class used for odd lengths
    #[arg(long, value_enum, default_value_t = OddArg::Minus)]
    class: OddArg,
    #[arg(long)]
    csv: bool,
    #[arg(long)]
    parallel: bool,
}

#[derive(Clone, Copy, ValueEnum)]
enum OddArg {
    Minus,
    Plus,
}

#[derive(Args)]
struct VerifyArgs {
    /// Suite name, or `all`
    #[arg(long, default_value = "all")]
    suite: String,
    #[arg(long, default_value_t = DEFAULT_SEED)]
    seed: u64,
    #[arg(long)]
    max_n: Option<usize>,
    #[arg(long)]
    trials: Option<usize>,
    #[arg(long)]
    max_vertices: Option<usize>,
    #[arg(long)]
    parallel: bool,
    /// Report directory; overrides INFLUENCE_RESULTS_DIR
    #[arg(long)]
    out_dir: Option<PathBuf>,
    /// Print the JSON reports instead of one line per claim
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct PlayArgs {
    path: PathBuf,
    /// The side you play
    #[arg(long, value_parser = parse_side)]
    human: Side,
    /// Who moves first
    #[arg(long, value_parser = parse_side, default_value = "L")]
    first: Side,
}

fn parse_side(s: &str) -> Result<Side, String> {
    match s {
        "L" | "l" | "left" | "B" => Ok(Side::Left),
        "R" | "r" | "right" | "W" => Ok(Side::Right),
        _ => Err(format!("expected L or R, got {s:?}")),
    }
}

enum Failure {
    /// Bad input or arguments; exit 2.
    Usage(String),
    /// A hard claim failed; exit 1.
    Claims(usize),
}

impl<E: std::fmt::Display> From<E> for Failure {
    fn from(e: E) -> Self {
        Failure::Usage(e.to_string())
    }
}

type CmdResult = Result<(), Failure>;

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Solve(args) => cmd_solve(args),
        Command::Gen { family, out } => cmd_gen(family, out.as_deref()),
        Command::Table(args) => cmd_table(args),
        Command::Verify(args) => cmd_verify(args),
        Command::Play(args) => cmd_play(args),
        Command::ExportDot { path, out } => cmd_export_dot(&path, out.as_deref()),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Claims(n)) => {
            eprintln!("{n} claim(s) failed");
            ExitCode::from(1)
        }
    }
}

fn read_doc(path: &Path) -> Result<GraphDoc, Failure> {
    let text = fs::read_to_string(path).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?;
    let doc = GraphDoc::parse(&text).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?;
    if doc.duplicate_arcs > 0 {
        log::warn!("{}: {} duplicate arc(s) ignored", path.display(), doc.duplicate_arcs);
    }
    Ok(doc)
}

fn write_out(out: Option<&Path>, text: &str) -> io::Result<()> {
    match out {
        Some(p) => fs::write(p, text),
        None => io::stdout().write_all(text.as_bytes()),
    }
}

fn cmd_solve(args: SolveArgs) -> CmdResult {
    let doc = read_doc(&args.path)?;
    let g = &doc.graph;
    let opts = match args.mode {
        ModeArg::Raw => SolveOptions::raw(),
        ModeArg::Relevant => SolveOptions {
            pruning: args.pruning == Toggle::On,
            ..SolveOptions::default()
        },
    };
    let opts = SolveOptions {
        audit: args.audit,
        parallel_root: args.parallel,
        ..opts
    };
    let started = Instant::now();
    let solver = Solver::new(g, opts);
    let q = solver.solve();
    let elapsed_ms = started.elapsed().as_secs_f64() * 1e3;
    let rel = q.rel();
    let p = Position::initial(g);
    let best = |side| solver.best_move(&p, side).ok().map(|b| doc.ids[b.vertex]);
    let (best_l, best_r) = (best(Side::Left), best(Side::Right));

    if args.json {
        let out = json!({
            "n": g.len(),
            "sL1": q.sl1,
            "sL2": q.sl2,
            "sR1": q.sr1,
            "sR2": q.sr2,
            "ls": rel.ls,
            "rs": rel.rs,
            "incentive": rel.incentive(),
            "bestMoveL": best_l,
            "bestMoveR": best_r,
            "memoEntries": solver.memo_entries(),
            "elapsedMs": elapsed_ms,
        });
        println!("{}", serde_json::to_string_pretty(&out)?);
    } else {
        let show = |m: Option<u64>| m.map_or("-".to_owned(), |v| v.to_string());
        println!("{} vertices", g.len());
        println!("sL1={} sL2={} sR1={} sR2={}", q.sl1, q.sl2, q.sr1, q.sr2);
        println!("Ls={} Rs={} incentive={}", rel.ls, rel.rs, rel.incentive());
        println!("best move L: {}  R: {}", show(best_l), show(best_r));
        println!("{} memo entries, {elapsed_ms:.3} ms", solver.memo_entries());
    }
    Ok(())
}

fn cmd_gen(family: Family, out: Option<&Path>) -> CmdResult {
    let (doc, summary) = match family {
        Family::Segment { n, class } => {
            let class = class.map_or(OddClass::default_for(n), ClassArg::odd_class);
            let doc = segment_doc(n, class)?;
            let label = match class {
                OddClass::None => String::new(),
                OddClass::Minus => "-".into(),
                OddClass::Plus => "+".into(),
            };
            (doc, format!("segment S{n}{label}"))
        }
        Family::Cycle { n } => (cycle_doc(n)?, format!("cycle C{n}")),
        Family::Tree { n, c, double } => {
            if c == 0 {
                return Err(Failure::Usage("--c must be at least 1".into()));
            }
            if n > 6 {
                return Err(Failure::Usage("--n above 6 is too large to write out".into()));
            }
            let spec = TreeSpec::new(n, c);
            let (g, name) = if double { (make_j(spec), "J") } else { (make_tree(spec), "T") };
            (GraphDoc::from_graph(g), format!("tree {name}_{n}^{c}"))
        }
        Family::Quasipath { colors, arcs } => {
            let colors = colors
                .chars()
                .map(|ch| parse_side(&ch.to_string()))
                .collect::<Result<Vec<_>, _>>()?;
            let forward = arcs
                .chars()
                .map(|ch| match ch {
                    '>' => Ok(true),
                    '<' => Ok(false),
                    _ => Err(format!("orientation must be > or <, got {ch:?}")),
                })
                .collect::<Result<Vec<_>, _>>()?;
            let g = make_quasi_path(&QuasiPathSpec { colors, forward })?;
            (GraphDoc::from_graph(g), "quasi-path".to_owned())
        }
    };
    let g: &GameGraph = &doc.graph;
    let line = format!(
        "{summary}: {} vertices ({} L, {} R), {} arcs",
        g.len(),
        g.count(Side::Left),
        g.count(Side::Right),
        g.arcs().len()
    );
    write_out(out, &doc.serialize())?;
    if out.is_some() {
        println!("{line}");
    } else {
        eprintln!("{line}");
    }
    Ok(())
}

fn cmd_table(args: TableArgs) -> CmdResult {
    let odd = match args.class {
        OddArg::Minus => OddClass::Minus,
        OddArg::Plus => OddClass::Plus,
    };
    let mode = Parallelism::from_flag(args.parallel);
    let rows = segment_table_with(&SegmentSolver::new(), args.max_n, odd, mode);
    let mut out = String::new();
    if args.csv {
        out.push_str("n,ls,rs\n");
        for r in &rows {
            out.push_str(&format!("{},{},{}\n", r.n, r.ls, r.rs));
        }
    } else {
        out.push_str(&format!("{:>4} {:>4} {:>4}\n", "n", "Ls", "Rs"));
        for r in &rows {
            out.push_str(&format!("{:>4} {:>4} {:>4}\n", r.n, r.ls, r.rs));
        }
    }
    write_out(None, &out)?;
    Ok(())
}

fn results_dir(flag: Option<PathBuf>) -> PathBuf {
    flag.or_else(|| std::env::var_os(RESULTS_ENV).map(PathBuf::from))
        .unwrap_or_else(|| PathBuf::from(DEFAULT_RESULTS_DIR))
}

fn cmd_verify(args: VerifyArgs) -> CmdResult {
    let names: Vec<String> = if args.suite == "all" {
        experiments::suite_names().into_iter().map(String::from).collect()
    } else {
        vec![args.suite.clone()]
    };
    let params = SuiteParams {
        max_n: args.max_n,
        trials: args.trials,
        max_vertices: args.max_vertices,
        parallel: args.parallel,
    };
    let dir = results_dir(args.out_dir);
    fs::create_dir_all(&dir).map_err(|e| Failure::Usage(format!("{}: {e}", dir.display())))?;

    let mut failed = 0;
    for name in names {
        let report = experiments::run_suite(&name, &params, args.seed)?;
        fs::write(dir.join(format!("{name}.json")), report.to_json())?;
        fs::write(dir.join(format!("{name}.csv")), report.to_csv())?;
        if args.json {
            println!("{}", report.to_json());
        } else {
            print_report(&report);
        }
        failed += report.failures().count();
    }
    if failed > 0 {
        return Err(Failure::Claims(failed));
    }
    Ok(())
}

fn print_report(report: &VerifyReport) {
    println!("== {} (seed {}, {:.0} ms)", report.suite, report.seed, report.elapsed_ms);
    for c in &report.claims {
        let tag = match (c.status, c.consistent) {
            (ClaimStatus::Pass, _) => "PASS",
            (ClaimStatus::Fail, _) => "FAIL",
            (ClaimStatus::ReportOnly, Some(false)) => "NOTE*",
            (ClaimStatus::ReportOnly, _) => "NOTE",
        };
        println!("{tag:<5} {:<28} {}", c.id, c.anchor);
        if c.failed() {
            println!("      witness: {}", c.witness);
        }
    }
}

fn cmd_play(args: PlayArgs) -> CmdResult {
    let doc = read_doc(&args.path)?;
    let stdin = io::stdin();
    let stdout = io::stdout();
    play::run(&doc, args.human, args.first, &mut stdin.lock(), &mut stdout.lock())?;
    Ok(())
}

fn cmd_export_dot(path: &Path, out: Option<&Path>) -> CmdResult {
    let doc = read_doc(path)?;
    write_out(out, &to_dot(&doc))?;
    Ok(())
}

